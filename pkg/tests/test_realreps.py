import pytest

from orbicalc.characters import character_table, frobenius_schur
from orbicalc.corpus import corpus_group, groups_of_order_at_most
from orbicalc.cyclotomic import CycInt
from orbicalc.errors import ValidationError
from orbicalc.groups import subgroup_as_group, subgroup_classes
from orbicalc.realreps import (
    MatrixRep,
    character_multiplicity,
    direct_sum,
    isotypic_decomposition,
    min_faithful_tensor_power,
    one_dim_rep,
    real_irreps,
    regular_rep,
    restriction_multiplicities,
)


def test_character_table_c3_values():
    ct = character_table(corpus_group("c3"))
    assert ct.degrees == (1, 1, 1)
    # The two nontrivial characters take primitive cube root values.
    z = CycInt.root_of_unity(3, 1)
    nontrivial = [row for row in ct.values if any(v != 1 for v in row)]
    assert len(nontrivial) == 2
    for row in nontrivial:
        assert set(row[1:]) == {z, z * z}


def test_q8_degrees():
    ct = character_table(corpus_group("q8"))
    assert ct.degrees == (1, 1, 1, 1, 2)


def test_fs_trivial_character_is_plus_one():
    for name in ("c2", "s3", "q8", "a4"):
        ct = character_table(corpus_group(name))
        triv = next(
            t for t in range(ct.num_classes) if all(v == 1 for v in ct.values[t])
        )
        assert frobenius_schur(ct, triv) == 1


def test_fs_c3_nontrivial_is_zero():
    ct = character_table(corpus_group("c3"))
    for t in range(3):
        expected = 1 if all(v == 1 for v in ct.values[t]) else 0
        assert frobenius_schur(ct, t) == expected


def test_fs_q8_two_dim_is_minus_one():
    ct = character_table(corpus_group("q8"))
    t = ct.degrees.index(2)
    assert frobenius_schur(ct, t) == -1


def test_real_irreps_c2():
    R = real_irreps(corpus_group("c2"))
    assert [(e.real_dim, e.end_type) for e in R.entries] == [(1, "R"), (1, "R")]


def test_real_irreps_c4():
    R = real_irreps(corpus_group("c4"))
    assert sorted((e.real_dim, e.end_type) for e in R.entries) == [
        (1, "R"),
        (1, "R"),
        (2, "C"),
    ]


def test_real_irreps_q8():
    R = real_irreps(corpus_group("q8"))
    kinds = sorted((e.real_dim, e.end_type) for e in R.entries)
    assert kinds == [(1, "R")] * 4 + [(4, "H")]


def test_real_bookkeeping_all_corpus():
    for G in groups_of_order_at_most(16):
        R = real_irreps(G)
        assert sum(e.real_dim**2 // e.end_dim for e in R.entries) == G.order
        ct = R.complex_table
        fs = [frobenius_schur(ct, t) for t in range(ct.num_classes)]
        assert sum(1 for e in R.entries if e.end_type == "R") == fs.count(1)
        assert sum(1 for e in R.entries if e.end_type == "C") == fs.count(0) // 2
        assert sum(1 for e in R.entries if e.end_type == "H") == fs.count(-1)


def test_restriction_identity_is_indicator():
    G = corpus_group("s3")
    phi = tuple(range(G.order))
    R = real_irreps(G)
    for rho in R.entries:
        m = restriction_multiplicities(G, G, phi, rho.index)
        assert m == tuple(int(i == rho.index) for i in range(len(R)))


def test_restriction_s3_standard_to_c2():
    G = corpus_group("s3")
    sub = next(c for c in subgroup_classes(G) if c.order == 2)
    K, emb = subgroup_as_group(G, sub.representative)
    R = real_irreps(G)
    std = next(e for e in R.entries if e.real_dim == 2)
    m = restriction_multiplicities(K, G, emb, std.index)
    # Restricted character (2, 0) = trivial + sign.
    assert sorted(m) == [1, 1]
    assert sum(m) == 2


def test_restriction_through_trivial_map():
    G = corpus_group("s3")
    K = corpus_group("v4")
    phi = tuple(G.identity for _ in range(K.order))
    R = real_irreps(G)
    RK = real_irreps(K)
    triv = RK.trivial_index
    for rho in R.entries:
        m = restriction_multiplicities(K, G, phi, rho.index)
        assert m[triv] == rho.real_dim
        assert sum(m) == rho.real_dim


def test_isotypic_trivial_rep():
    G = corpus_group("c2")
    rep = one_dim_rep(G, [1, 1])
    pieces = isotypic_decomposition(rep)
    triv = real_irreps(G).trivial_index
    for p in pieces:
        expected = 1 if p.irrep_index == triv else 0
        assert p.multiplicity == expected


def test_isotypic_sign_rep_c2():
    G = corpus_group("c2")
    rep = one_dim_rep(G, [1, -1])
    pieces = isotypic_decomposition(rep)
    triv = real_irreps(G).trivial_index
    ranks = {p.irrep_index: p.multiplicity for p in pieces}
    assert ranks[triv] == 0
    sign = next(i for i in ranks if i != triv)
    assert ranks[sign] == 1


def test_isotypic_regular_s3():
    G = corpus_group("s3")
    pieces = isotypic_decomposition(regular_rep(G))
    R = real_irreps(G)
    got = sorted(
        (R.entries[p.irrep_index].real_dim, p.multiplicity * R.entries[p.irrep_index].real_dim)
        for p in pieces
    )
    # Isotypic ranks 1, 1, 4 for the two linear and the standard irrep.
    assert got == [(1, 1), (1, 1), (2, 4)]


def test_isotypic_regular_matches_table_all_small_groups():
    # Regular-representation multiplicities must equal dim/dimEnd.
    for G in groups_of_order_at_most(8):
        R = real_irreps(G)
        pieces = isotypic_decomposition(regular_rep(G))
        for p in pieces:
            e = R.entries[p.irrep_index]
            assert p.multiplicity == e.real_dim // e.end_dim


def test_isotypic_c5_regular_uses_fixed_precision():
    # The 2-dim real pieces of c5 have irrational projectors; the engine
    # must still produce ranks matching the character data.
    G = corpus_group("c5")
    pieces = isotypic_decomposition(regular_rep(G))
    R = real_irreps(G)
    for p in pieces:
        e = R.entries[p.irrep_index]
        assert p.multiplicity == e.real_dim // e.end_dim


def test_min_faithful_regular_is_one():
    for name in ("c2", "s3", "q8"):
        G = corpus_group(name)
        assert min_faithful_tensor_power(G, regular_rep(G)) == 1


def test_min_faithful_c3_rotation():
    G = corpus_group("c3")
    R = real_irreps(G)
    rot = next(e for e in R.entries if e.real_dim == 2)
    assert min_faithful_tensor_power(G, list(rot.char)) == 2


def test_min_faithful_c5_rotation():
    G = corpus_group("c5")
    R = real_irreps(G)
    rots = [e for e in R.entries if e.real_dim == 2]
    for rot in rots:
        assert min_faithful_tensor_power(G, list(rot.char)) == 2


def test_min_faithful_rejects_unfaithful():
    G = corpus_group("c4")
    with pytest.raises(ValidationError):
        min_faithful_tensor_power(G, [1, 1, 1, 1])


def test_functorial_restriction_composites():
    # Restriction along K -> G -> G must match iterated restriction.
    G = corpus_group("s3")
    sub3 = next(c for c in subgroup_classes(G) if c.order == 3)
    K, emb = subgroup_as_group(G, sub3.representative)
    R = real_irreps(G)
    RK = real_irreps(K)
    import numpy as np

    from orbicalc.realreps import restriction_matrix

    M_id = np.array(restriction_matrix(G, G, tuple(range(G.order))))
    assert (M_id == np.eye(len(R), dtype=int)).all()
    M = np.array(restriction_matrix(K, G, emb))
    M_KK = np.array(restriction_matrix(K, K, tuple(range(K.order))))
    assert (M_KK @ M == M).all()


def test_direct_sum_multiplicities():
    G = corpus_group("c2")
    rep = direct_sum(one_dim_rep(G, [1, 1]), one_dim_rep(G, [1, -1]))
    pieces = isotypic_decomposition(rep)
    assert sorted(p.multiplicity for p in pieces) == [1, 1]
