"""Stable and coarsely stable bundle data over a classifying object, and
stable framings with their canonical involution.

Stable bundle classes are integer vectors over the real irrep table of the
base group; coarsely stable ones have a free integer trivial part and
nonnegative coordinates elsewhere.  A framing is a mod-2 bit per R-type
irrep; the canonical involution flips the bit at the trivial coordinate
(appending a trivial line and acting on it by -1 moves exactly the
trivial-isotypic coordinate of the framing torsor).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import InternalCheckError, ValidationError
from .groups import FiniteGroup, class_index_map, conjugacy_classes, is_homomorphism
from .realreps import real_irreps, restriction_matrix


@dataclass(frozen=True)
class StableBundle:
    base: FiniteGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != len(real_irreps(self.base)):
            raise ValidationError("coordinate length must match the irrep table")

    def virtual_rank(self) -> int:
        R = real_irreps(self.base)
        return sum(c * e.real_dim for c, e in zip(self.coords, R.entries))

    def __add__(self, other: "StableBundle") -> "StableBundle":
        if other.base is not self.base:
            raise ValidationError("bundles live over different bases")
        return StableBundle(self.base, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "StableBundle":
        return StableBundle(self.base, tuple(-a for a in self.coords))


@dataclass(frozen=True)
class CoarseStableBundle:
    base: FiniteGroup
    trivial_part: int
    coords: tuple[int, ...]  # indexed by nontrivial irreps, in table order

    def __post_init__(self):
        R = real_irreps(self.base)
        if len(self.coords) != len(R) - 1:
            raise ValidationError("need one coordinate per nontrivial irrep")
        if any(c < 0 for c in self.coords):
            raise ValidationError("coarsely stable coordinates must be nonnegative")

    def nontrivial_indices(self) -> tuple[int, ...]:
        R = real_irreps(self.base)
        triv = R.trivial_index
        return tuple(i for i in range(len(R)) if i != triv)


@dataclass(frozen=True)
class AutGroupDescriptor:
    """An elementary abelian 2-group, recorded by its contributing irreps."""

    contributors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.contributors)

    @property
    def order(self) -> int:
        return 2**self.rank


def aut_group(b: StableBundle | CoarseStableBundle) -> AutGroupDescriptor:
    """Automorphisms of a (coarsely) stable bundle class.

    Stable: one Z/2 per R-type irrep, independent of the coordinates.
    Coarsely stable: the trivial irrep always contributes; a nontrivial
    R-type irrep contributes exactly when its isotypic part is nonzero.
    """
    R = real_irreps(b.base)
    r_type = set(R.r_type_indices())
    if isinstance(b, StableBundle):
        return AutGroupDescriptor(tuple(sorted(r_type)))
    triv = R.trivial_index
    contributors = {triv}
    for pos, idx in enumerate(b.nontrivial_indices()):
        if idx in r_type and b.coords[pos] > 0:
            contributors.add(idx)
    return AutGroupDescriptor(tuple(sorted(contributors)))


def restrict_bundle(b: StableBundle, K: FiniteGroup, phi: Sequence[int]) -> StableBundle:
    """Pull a stable bundle back along phi: K -> base."""
    M = restriction_matrix(K, b.base, phi)
    coords = tuple(
        sum(M[i][j] * b.coords[j] for j in range(len(b.coords)))
        for i in range(len(M))
    )
    out = StableBundle(K, coords)
    if out.virtual_rank() != b.virtual_rank():
        raise InternalCheckError("restriction changed the virtual rank")
    return out


@dataclass(frozen=True)
class Framing:
    """A stable framing: one bit per R-type irrep of the base."""

    base: FiniteGroup
    bits: tuple[int, ...]

    def __post_init__(self):
        R = real_irreps(self.base)
        if len(self.bits) != len(R.r_type_indices()):
            raise ValidationError("need one bit per R-type irrep")
        if any(b not in (0, 1) for b in self.bits):
            raise ValidationError("framing bits live in Z/2")


def framings(K: FiniteGroup) -> list[Framing]:
    """All 2^(#R-type) framings, in lexicographic bit order."""
    r = len(real_irreps(K).r_type_indices())
    return [Framing(K, bits) for bits in product((0, 1), repeat=r)]


def involution(fr: Framing) -> Framing:
    """The canonical involution: flip the trivial-irrep bit."""
    R = real_irreps(fr.base)
    r_idx = R.r_type_indices()
    pos = r_idx.index(R.trivial_index)
    bits = list(fr.bits)
    bits[pos] ^= 1
    return Framing(fr.base, tuple(bits))


def irrep_bijection_along(
    K: FiniteGroup, K2: FiniteGroup, alpha: Sequence[int]
) -> tuple[int, ...]:
    """Match the irrep tables through an isomorphism alpha: K -> K2.

    Returns sigma -> sigma' with char(sigma') . alpha = char(sigma); end
    types and dimensions must match, anything else is a hard failure.
    """
    if sorted(alpha) != list(range(K2.order)) or not is_homomorphism(K, K2, alpha):
        raise ValidationError("alpha is not an isomorphism")
    RK, R2 = real_irreps(K), real_irreps(K2)
    cls2 = class_index_map(K2)
    k_classes = conjugacy_classes(K)
    out = []
    for sigma in RK.entries:
        target = None
        for tau in R2.entries:
            if tau.real_dim != sigma.real_dim or tau.end_type != sigma.end_type:
                continue
            if all(
                tau.char[cls2[alpha[cls[0]]]] == sigma.char[i]
                for i, cls in enumerate(k_classes)
            ):
                target = tau.index
                break
        if target is None:
            raise InternalCheckError("irrep matching failed along an isomorphism")
        out.append(target)
    if sorted(out) != list(range(len(R2))):
        raise InternalCheckError("irrep matching is not a bijection")
    return tuple(out)


def transport_framing(fr: Framing, K2: FiniteGroup, alpha: Sequence[int]) -> Framing:
    """Carry a framing along an isomorphism alpha: base -> K2."""
    K = fr.base
    bij = irrep_bijection_along(K, K2, alpha)
    RK, R2 = real_irreps(K), real_irreps(K2)
    src_r = RK.r_type_indices()
    dst_r = R2.r_type_indices()
    bits = [0] * len(dst_r)
    for pos, sigma in enumerate(src_r):
        tau = bij[sigma]
        if tau not in dst_r:
            raise InternalCheckError("R-type irrep mapped to a non-R-type one")
        bits[dst_r.index(tau)] = fr.bits[pos]
    return Framing(K2, tuple(bits))
