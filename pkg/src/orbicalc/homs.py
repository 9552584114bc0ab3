"""Homomorphisms G -> H, their conjugation orbits, and representability.

A class of maps between the two classifying objects is an H-conjugacy
class of homomorphisms; the injective classes are exactly the
representable ones.  The two recovery identities tying all classes to the
injective classes of the quotients G/N are verified on every call that
needs them and are a hard failure if they break.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalCheckError, ValidationError
from .groups import (
    FiniteGroup,
    centralizer,
    generating_set,
    is_homomorphism,
    normal_subgroups,
    quotient_group,
)

DEFAULT_ORDER_CAP = 48


@dataclass(frozen=True)
class HomClass:
    """An H-conjugacy class of homomorphisms G -> H."""

    representative: tuple[int, ...]  # image of every element of G
    injective: bool
    orbit_size: int
    centralizer_order: int


def enumerate_homs(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> list[tuple[int, ...]]:
    """Every homomorphism G -> H as a full image tuple, sorted.

    Backtracking over generator images with incremental closure checking;
    a candidate image must have order dividing the generator's order.
    """
    if G.order > cap or H.order > cap:
        raise ValidationError(f"order cap {cap} exceeded")
    key = ("homs", H.table_key())
    if key in G._cache:
        return G._cache[key]
    gens = generating_set(G)
    if not gens:
        out = [tuple([H.identity] * G.order)]
        G._cache[key] = out
        return out

    gen_orders = [G.element_order(g) for g in gens]
    candidates = [
        [h for h in range(H.order) if gen_orders[i] % H.element_order(h) == 0]
        for i in range(len(gens))
    ]

    found = []

    def extend(partial: dict[int, int], g: int, h: int) -> Optional[dict[int, int]]:
        """Grow a partial homomorphism after mapping g to h."""
        phi = dict(partial)
        if g in phi:
            return phi if phi[g] == h else None
        phi[g] = h
        frontier = [g]
        while frontier:
            nxt = []
            for a in list(phi):
                for b in frontier:
                    for x, y in (
                        (G.table[a][b], H.table[phi[a]][phi[b]]),
                        (G.table[b][a], H.table[phi[b]][phi[a]]),
                    ):
                        if x in phi:
                            if phi[x] != y:
                                return None
                        else:
                            phi[x] = y
                            nxt.append(x)
            frontier = nxt
        return phi

    def backtrack(i: int, partial: dict[int, int]) -> None:
        if i == len(gens):
            if len(partial) == G.order:
                found.append(tuple(partial[a] for a in range(G.order)))
            return
        for h in candidates[i]:
            nxt = extend(partial, gens[i], h)
            if nxt is not None:
                backtrack(i + 1, nxt)

    backtrack(0, {G.identity: H.identity})
    found.sort()
    G._cache[key] = found
    return found


def conjugate_hom(H: FiniteGroup, phi: Sequence[int], h: int) -> tuple[int, ...]:
    cm = H.conj_maps()[h]
    return tuple(cm[x] for x in phi)


def hom_classes(G: FiniteGroup, H: FiniteGroup) -> list[HomClass]:
    """Conjugation orbits of Hom(G, H), canonical representative least."""
    key = ("hom_classes", H.table_key())
    if key in G._cache:
        return G._cache[key]
    homs = enumerate_homs(G, H)
    remaining = set(homs)
    classes = []
    for phi in homs:
        if phi not in remaining:
            continue
        orbit = {conjugate_hom(H, phi, h) for h in range(H.order)}
        remaining -= orbit
        rep = min(orbit)
        zh = centralizer(H, set(rep) | {H.identity})
        cls = HomClass(
            representative=rep,
            injective=len(set(rep)) == G.order,
            orbit_size=len(orbit),
            centralizer_order=len(zh.representative),
        )
        if cls.orbit_size * cls.centralizer_order != H.order:
            raise InternalCheckError("orbit-stabilizer fails for a hom class")
        classes.append(cls)
    classes.sort(key=lambda c: c.representative)
    G._cache[key] = classes
    return classes


def class_of_hom(G: FiniteGroup, H: FiniteGroup, phi: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of the conjugacy class of phi."""
    phi = tuple(phi)
    if H.is_abelian():
        return phi
    return min(tuple(cm[x] for x in phi) for cm in H.conj_maps())


def pi1(H: FiniteGroup, phi: HomClass | Sequence[int]):
    """Z_H(im phi), the automorphisms of the corresponding based map."""
    rep = phi.representative if isinstance(phi, HomClass) else tuple(phi)
    return centralizer(H, set(rep) | {H.identity})


@dataclass
class RepRecoveryReport:
    total_classes: int
    injective_classes: int
    classes_by_normal: dict[tuple[int, ...], int]
    identity_a: bool
    identity_b: bool


def rep_hom_classes(
    G: FiniteGroup, H: FiniteGroup, report: bool = False
) -> list[HomClass] | tuple[list[HomClass], RepRecoveryReport]:
    """Injective hom classes, after verifying both recovery identities.

    (a) injective classes = all classes minus those pulled back from a
        proper quotient G/N, over nontrivial normal N;
    (b) the classes of G are partitioned by kernel: summing injective class
        counts of every quotient G/N gives the total class count.
    """
    classes = hom_classes(G, H)
    injective = [c for c in classes if c.injective]

    all_reps = {c.representative for c in classes}
    from_quotients: set[tuple[int, ...]] = set()
    counts: dict[tuple[int, ...], int] = {}
    for N in normal_subgroups(G):
        if len(N) == 1:
            counts[N] = len(injective)
            continue
        Q, proj = quotient_group(G, N)
        q_classes = hom_classes(Q, H)
        q_inj = [c for c in q_classes if c.injective]
        counts[N] = len(q_inj)
        for c in q_classes:
            pulled = tuple(c.representative[proj[g]] for g in range(G.order))
            from_quotients.add(class_of_hom(G, H, pulled))

    identity_a = set(c.representative for c in injective) == all_reps - from_quotients
    identity_b = sum(counts.values()) == len(classes)
    if not identity_a or not identity_b:
        raise InternalCheckError(
            "representability recovery identities fail for "
            f"({G.name or G.order}, {H.name or H.order})"
        )
    if report:
        rep = RepRecoveryReport(
            total_classes=len(classes),
            injective_classes=len(injective),
            classes_by_normal={n: c for n, c in sorted(counts.items())},
            identity_a=identity_a,
            identity_b=identity_b,
        )
        return injective, rep
    return injective


def compose_hom_classes(
    A: FiniteGroup, B: FiniteGroup, C: FiniteGroup,
    f: Sequence[int], g: Sequence[int],
) -> tuple[int, ...]:
    """Canonical class of (g . f) for f: A -> B, g: B -> C."""
    comp = tuple(g[x] for x in f)
    return class_of_hom(A, C, comp)
