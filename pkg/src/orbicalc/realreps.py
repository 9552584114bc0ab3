"""Real irreducible representations, isotypic projectors, and tensor
faithfulness.

The real classification is read off the complex table via Frobenius-Schur
indicators: indicator +1 characters stay real (type R), conjugate pairs of
indicator 0 characters merge into one complex-type entry of doubled real
dimension, and indicator -1 characters double into quaternionic entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import _fraclinalg as fl
from .characters import character_table, frobenius_schur
from .cyclotomic import CycInt
from .errors import InternalCheckError, ValidationError
from .groups import FiniteGroup, class_index_map, conjugacy_classes, generating_set, is_homomorphism

END_DIM = {"R": 1, "C": 2, "H": 4}


@dataclass(frozen=True)
class RealIrrep:
    """One isomorphism class of real irreducible representations."""

    index: int
    real_dim: int
    end_type: str  # "R", "C" or "H"
    constituents: tuple[int, ...]  # complex character indices
    char: tuple[CycInt, ...]  # real character values per class

    @property
    def end_dim(self) -> int:
        return END_DIM[self.end_type]


class RealIrrepTable:
    """All real irreps of a group, in a fixed deterministic order.

    Entries are sorted by (real dimension, character lexicographic); every
    coordinate convention downstream (bundle coordinates, framing bits)
    refers to this order.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.complex_table = character_table(group)
        ct = self.complex_table
        consumed = [False] * ct.num_classes
        raw = []
        for t in range(ct.num_classes):
            if consumed[t]:
                continue
            nu = frobenius_schur(ct, t)
            d = ct.degrees[t]
            if nu == 1:
                consumed[t] = True
                raw.append((d, "R", (t,), tuple(ct.values[t])))
            elif nu == -1:
                consumed[t] = True
                raw.append(
                    (2 * d, "H", (t,), tuple(2 * v for v in ct.values[t]))
                )
            else:
                s = ct.conjugate_partner(t)
                if s == t or consumed[s]:
                    raise InternalCheckError(
                        "indicator-0 character without a free conjugate partner"
                    )
                consumed[t] = consumed[s] = True
                pair = tuple(sorted((t, s)))
                char = tuple(
                    ct.values[t][i] + ct.values[s][i]
                    for i in range(ct.num_classes)
                )
                raw.append((2 * d, "C", pair, char))
        raw.sort(key=lambda r: (r[0], [v.sort_key() for v in r[3]]))
        self.entries = tuple(
            RealIrrep(i, d, typ, cons, char)
            for i, (d, typ, cons, char) in enumerate(raw)
        )
        self._verify()

    def _verify(self) -> None:
        n = self.group.order
        total = sum(e.real_dim**2 // e.end_dim for e in self.entries)
        if total != n:
            raise InternalCheckError(
                "real irrep bookkeeping sum dim^2/dim End != |G|"
            )
        used = [c for e in self.entries for c in e.constituents]
        if sorted(used) != list(range(self.complex_table.num_classes)):
            raise InternalCheckError("complex characters not consumed exactly once")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def trivial_index(self) -> int:
        one = CycInt.from_int(self.complex_table.exponent, 1)
        for e in self.entries:
            if e.real_dim == 1 and all(v == one for v in e.char):
                return e.index
        raise InternalCheckError("trivial representation missing")

    def r_type_indices(self) -> tuple[int, ...]:
        return tuple(e.index for e in self.entries if e.end_type == "R")


def real_irreps(G: FiniteGroup) -> RealIrrepTable:
    if "real_irreps" not in G._cache:
        G._cache["real_irreps"] = RealIrrepTable(G)
    return G._cache["real_irreps"]


# -- restriction ---------------------------------------------------------------


def restriction_multiplicities(
    K: FiniteGroup,
    G: FiniteGroup,
    phi: Sequence[int],
    rho_index: int,
) -> tuple[int, ...]:
    """Multiplicities over K-hat of the G-irrep rho pulled back along phi.

    m_sigma = <chi_rho . phi, chi_sigma>_K / dim End(sigma); every entry
    must come out a nonnegative integer, and the dimensions must add up.
    """
    if len(phi) != K.order or not is_homomorphism(K, G, phi):
        raise ValidationError("phi is not a homomorphism K -> G")
    RG, RK = real_irreps(G), real_irreps(K)
    rho = RG.entries[rho_index]
    cls_G = class_index_map(G)
    order = lcm(RG.complex_table.exponent, RK.complex_table.exponent)
    pull = [
        rho.char[cls_G[phi[cls[0]]]].lift(order)
        for cls in conjugacy_classes(K)
    ]
    sizes = RK.complex_table.class_sizes
    out = []
    for sigma in RK.entries:
        acc = CycInt.from_int(order, 0)
        for i in range(len(pull)):
            acc = acc + sizes[i] * (pull[i] * sigma.char[i].lift(order).conjugate())
        m = acc.divide_exact(K.order).as_int()
        q, r = divmod(m, sigma.end_dim)
        if r != 0 or q < 0:
            raise InternalCheckError("restriction multiplicity is not integral")
        out.append(q)
    if sum(m * RK.entries[i].real_dim for i, m in enumerate(out)) != rho.real_dim:
        raise InternalCheckError("restricted dimensions do not add up")
    return tuple(out)


def restriction_matrix(K: FiniteGroup, G: FiniteGroup, phi: Sequence[int]) -> list[list[int]]:
    """Rows indexed by K-hat, columns by G-hat."""
    RG, RK = real_irreps(G), real_irreps(K)
    cols = [restriction_multiplicities(K, G, phi, j) for j in range(len(RG))]
    return [[cols[j][i] for j in range(len(RG))] for i in range(len(RK))]


# -- explicit matrix representations --------------------------------------------


class MatrixRep:
    """A representation by explicit matrices, exact or fixed precision.

    Exact mode stores Fractions; fixed-precision mode stores float arrays
    and carries a declared tolerance used by every comparison.
    """

    def __init__(
        self,
        group: FiniteGroup,
        matrices: Sequence,
        exact: bool = True,
        tolerance: float = 1e-9,
        validate: bool = True,
    ):
        self.group = group
        self.exact = exact
        self.tolerance = tolerance
        if len(matrices) != group.order:
            raise ValidationError("need one matrix per group element")
        if exact:
            self.matrices = [fl.mat(m) for m in matrices]
            self.dimension = len(self.matrices[0])
        else:
            self.matrices = [np.asarray(m, dtype=float) for m in matrices]
            self.dimension = self.matrices[0].shape[0]
        if validate:
            self._validate()

    def _validate(self) -> None:
        G, d = self.group, self.dimension
        for m in self.matrices:
            rows = len(m) if self.exact else m.shape[0]
            cols = len(m[0]) if self.exact else m.shape[1]
            if (rows, cols) != (d, d):
                raise ValidationError("matrices must be square of equal size")
        ident = fl.identity(d) if self.exact else np.eye(d)
        if not self._close(self.matrices[G.identity], ident):
            raise ValidationError("identity element must map to the identity matrix")
        # Checking generators against everything suffices by induction.
        for g in generating_set(G):
            for h in range(G.order):
                lhs = self._mul(self.matrices[g], self.matrices[h])
                if not self._close(lhs, self.matrices[G.table[g][h]]):
                    raise ValidationError("matrices do not respect the table")

    def _mul(self, A, B):
        return fl.mat_mul(A, B) if self.exact else A @ B

    def _close(self, A, B) -> bool:
        if self.exact:
            return fl.mat_eq(A, B)
        scale = max(1.0, float(np.abs(B).max()))
        return bool(np.abs(A - B).max() <= self.tolerance * scale)

    def character(self) -> list:
        """Trace per conjugacy class (Fraction in exact mode, float else)."""
        out = []
        for cls in conjugacy_classes(self.group):
            m = self.matrices[cls[0]]
            out.append(fl.trace(m) if self.exact else float(np.trace(m)))
        return out

    def to_float(self) -> "MatrixRep":
        if not self.exact:
            return self
        mats = [np.array([[float(x) for x in row] for row in m]) for m in self.matrices]
        return MatrixRep(
            self.group, mats, exact=False, tolerance=self.tolerance, validate=False
        )

    def kernel_elements(self) -> tuple[int, ...]:
        ident = fl.identity(self.dimension) if self.exact else np.eye(self.dimension)
        return tuple(
            g for g in range(self.group.order) if self._close(self.matrices[g], ident)
        )

    def is_faithful(self) -> bool:
        return self.kernel_elements() == (self.group.identity,)


def regular_rep(G: FiniteGroup) -> MatrixRep:
    """Left regular representation by permutation matrices (exact)."""
    mats = []
    for g in range(G.order):
        m = [[Fraction(0)] * G.order for _ in range(G.order)]
        for x in range(G.order):
            m[G.table[g][x]][x] = Fraction(1)
        mats.append(m)
    return MatrixRep(G, mats, exact=True, validate=False)


def permutation_rep(G: FiniteGroup, perms: Sequence[Sequence[int]]) -> MatrixRep:
    """Representation from an action: perms[g] is the permutation of g."""
    mats = []
    for g in range(G.order):
        p = perms[g]
        m = [[Fraction(0)] * len(p) for _ in range(len(p))]
        for x in range(len(p)):
            m[p[x]][x] = Fraction(1)
        mats.append(m)
    return MatrixRep(G, mats, exact=True)


def one_dim_rep(G: FiniteGroup, values: Sequence) -> MatrixRep:
    return MatrixRep(G, [[[Fraction(v)]] for v in values], exact=True)


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    if a.group is not b.group:
        raise ValidationError("direct sum needs representations of one group")
    if a.exact and b.exact:
        mats = []
        for g in range(a.group.order):
            d1, d2 = a.dimension, b.dimension
            m = fl.zeros(d1 + d2, d1 + d2)
            for i in range(d1):
                for j in range(d1):
                    m[i][j] = a.matrices[g][i][j]
            for i in range(d2):
                for j in range(d2):
                    m[d1 + i][d1 + j] = b.matrices[g][i][j]
            mats.append(m)
        return MatrixRep(a.group, mats, exact=True, validate=False)
    af, bf = a.to_float(), b.to_float()
    mats = []
    for g in range(a.group.order):
        d1, d2 = af.dimension, bf.dimension
        m = np.zeros((d1 + d2, d1 + d2))
        m[:d1, :d1] = af.matrices[g]
        m[d1:, d1:] = bf.matrices[g]
        mats.append(m)
    return MatrixRep(
        a.group, mats, exact=False,
        tolerance=max(a.tolerance, b.tolerance), validate=False,
    )


# -- isotypic decomposition ------------------------------------------------------


@dataclass
class IsotypicPiece:
    irrep_index: int
    multiplicity: int
    projector: object  # Fraction matrix or float ndarray


def _projector_coefficients(R: RealIrrepTable, sigma: RealIrrep) -> tuple[list, bool]:
    """Coefficients c(g) with P = (1/|G|) sum_g c(g) rho(g), per element.

    Returns (per-element list, rational flag).  c(g) is the sum over the
    complex constituents chi of deg(chi) * chi(g^-1), a real cyclotomic
    integer; it is rational exactly when every coefficient is an integer.
    """
    G = R.group
    ct = R.complex_table
    cls = class_index_map(G)
    per_class = []
    for i in range(ct.num_classes):
        acc = CycInt.from_int(ct.exponent, 0)
        for t in sigma.constituents:
            acc = acc + ct.degrees[t] * ct.values[t][i].conjugate()
        per_class.append(acc)
    rational = all(v.is_integer() for v in per_class)
    per_elem = [per_class[cls[g]] for g in range(G.order)]
    return per_elem, rational


def character_multiplicity(rep: MatrixRep, sigma: RealIrrep) -> int:
    """Multiplicity of sigma inside rep, from characters alone."""
    G = rep.group
    R = real_irreps(G)
    ct = R.complex_table
    sizes = ct.class_sizes
    chi = rep.character()
    if rep.exact:
        e = ct.exponent
        acc = CycInt.from_int(e, 0)
        for i, tr in enumerate(chi):
            if tr.denominator != 1:
                raise InternalCheckError("exact character trace is not integral")
            acc = acc + (sizes[i] * int(tr)) * sigma.char[i].conjugate()
        m = acc.divide_exact(G.order).as_int()
    else:
        acc = 0.0 + 0.0j
        for i, tr in enumerate(chi):
            acc += sizes[i] * tr * complex(sigma.char[i]).conjugate()
        val = acc / G.order
        m = round(val.real)
        if abs(val - m) > max(1.0, abs(val)) * rep.tolerance * G.order:
            raise InternalCheckError("multiplicity is not close to an integer")
    q, r = divmod(m, sigma.end_dim)
    if r != 0 or q < 0:
        raise InternalCheckError("character multiplicity fails End-divisibility")
    return q


def isotypic_decomposition(rep: MatrixRep) -> list[IsotypicPiece]:
    """Isotypic projectors for every real irrep (zero pieces included).

    The projectors are exact whenever the rep is exact and all needed
    coefficients are rational; otherwise they are computed in fixed
    precision under the rep's declared tolerance.
    """
    G = rep.group
    R = real_irreps(G)
    coeffs = [_projector_coefficients(R, s) for s in R.entries]
    all_rational = all(flag for _, flag in coeffs)
    use_exact = rep.exact and all_rational
    work = rep if use_exact else rep.to_float()
    n, d = G.order, work.dimension

    pieces = []
    total = fl.zeros(d, d) if use_exact else np.zeros((d, d))
    for sigma, (per_elem, _) in zip(R.entries, coeffs):
        if use_exact:
            P = fl.zeros(d, d)
            for g in range(n):
                c = Fraction(per_elem[g].as_int(), n)
                if c == 0:
                    continue
                P = fl.mat_add(P, fl.mat_scale(work.matrices[g], c))
            if not fl.mat_eq(fl.mat_mul(P, P), P):
                raise InternalCheckError("projector is not idempotent")
            rank = fl.mat_rank(P)
            total = fl.mat_add(total, P)
        else:
            P = np.zeros((d, d))
            for g in range(n):
                P += complex(per_elem[g]).real / n * work.matrices[g]
            if np.abs(P @ P - P).max() > work.tolerance * max(1.0, np.abs(P).max()):
                raise InternalCheckError("projector is not idempotent within tolerance")
            rank = int(np.linalg.matrix_rank(P, tol=1e-6))
            total = total + P
        m = character_multiplicity(rep, sigma)
        if rank != m * sigma.real_dim:
            raise InternalCheckError(
                "projector rank disagrees with multiplicity x dimension"
            )
        pieces.append(IsotypicPiece(sigma.index, m, P))

    ident = fl.identity(d) if use_exact else np.eye(d)
    ok = fl.mat_eq(total, ident) if use_exact else np.abs(total - ident).max() <= work.tolerance * d
    if not ok:
        raise InternalCheckError("isotypic projectors do not sum to the identity")
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            prod = (
                fl.mat_mul(pieces[i].projector, pieces[j].projector)
                if use_exact
                else pieces[i].projector @ pieces[j].projector
            )
            zero = (
                fl.mat_eq(prod, fl.zeros(d, d))
                if use_exact
                else np.abs(prod).max() <= work.tolerance * d
            )
            if not zero:
                raise InternalCheckError("isotypic projectors do not annihilate")
    return pieces


# -- tensor-power faithfulness ----------------------------------------------------


def _character_values(G: FiniteGroup, V) -> list[CycInt]:
    ct = character_table(G)
    e = ct.exponent
    if isinstance(V, MatrixRep):
        if not V.exact:
            raise ValidationError("tensor-power search needs an exact character")
        vals = []
        for tr in V.character():
            if tr.denominator != 1:
                raise ValidationError("matrix traces are not integers")
            vals.append(CycInt.from_int(e, int(tr)))
        return vals
    vals = []
    for v in V:
        if isinstance(v, CycInt):
            vals.append(v.lift(e) if v.order != e else v)
        else:
            vals.append(CycInt.from_int(e, int(v)))
    return vals


def min_faithful_tensor_power(G: FiniteGroup, V) -> int:
    """Least N such that V + V^2 + ... + V^N contains every irrep.

    V may be a character (per-class values) or an exact MatrixRep; it must
    be a genuine faithful character.  Terminates with N <= |G|.
    """
    ct = character_table(G)
    chi = _character_values(G, V)
    mults = []
    for t in range(ct.num_classes):
        m = ct.inner_with(chi, t)
        if not m.is_integer() or m.as_int() < 0:
            raise ValidationError("V is not the character of a genuine representation")
        mults.append(m.as_int())
    if isinstance(V, MatrixRep):
        faithful = V.is_faithful()
    else:
        deg = chi[ct.identity_class]
        kernel = [i for i in range(ct.num_classes) if chi[i] == deg]
        faithful = kernel == [ct.identity_class]
    if not faithful:
        raise ValidationError("V is not faithful")

    power = chi
    found = [False] * ct.num_classes
    for N in range(1, G.order + 1):
        for t in range(ct.num_classes):
            if not found[t] and ct.inner_with(power, t).as_int() > 0:
                found[t] = True
        if all(found):
            return N
        power = [a * b for a, b in zip(power, chi)]
    raise InternalCheckError("faithful character failed to exhaust the irreps")
