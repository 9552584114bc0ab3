"""Integer Smith normal form and chain-complex homology, exact.

Pivoting always selects a minimal-absolute-value nonzero entry, which
keeps coefficient growth tame at this scale; arithmetic is arbitrary
precision throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError


def smith_normal_form(A: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... (nonzero diagonal of the SNF)."""
    M = [list(map(int, row)) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # Find a minimal nonzero pivot in the remaining block.
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        M[t], M[bi] = M[bi], M[t]
        for r in M:
            r[t], r[bj] = r[bj], r[t]
        # Reduce row and column against the pivot until both are clear.
        while True:
            pivot = M[t][t]
            done = True
            for i in range(t + 1, rows):
                if M[i][t] % pivot != 0:
                    q = M[i][t] // pivot
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    M[t], M[i] = M[i], M[t]
                    done = False
                    break
            if not done:
                continue
            for i in range(t + 1, rows):
                q = M[i][t] // pivot
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
            for j in range(t + 1, cols):
                if M[t][j] % pivot != 0:
                    q = M[t][j] // pivot
                    for r in M:
                        r[j] -= q * r[t]
                    for r in M:
                        r[t], r[j] = r[j], r[t]
                    done = False
                    break
            if not done:
                continue
            for j in range(t + 1, cols):
                q = M[t][j] // pivot
                if q:
                    for r in M:
                        r[j] -= q * r[t]
            break
        # Enforce divisibility towards the lower-right block.
        pivot = M[t][t]
        fixed = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if M[i][j] % pivot != 0:
                    M[t] = [a + b for a, b in zip(M[t], M[i])]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        diag.append(abs(pivot))
        t += 1
    return diag


@dataclass
class ChainComplex:
    """Boundary data: boundaries[p] maps degree p to degree p-1."""

    ranks: tuple[int, ...]
    boundaries: list  # boundaries[p]: (ranks[p-1] x ranks[p]) int matrix, p >= 1

    def __post_init__(self):
        for p in range(1, len(self.ranks)):
            B = self.boundaries[p]
            if len(B) != self.ranks[p - 1] or any(len(r) != self.ranks[p] for r in B):
                raise ValidationError(f"boundary {p} has the wrong shape")
        self.verify_square_zero()

    def verify_square_zero(self) -> None:
        for p in range(2, len(self.ranks)):
            A, B = self.boundaries[p - 1], self.boundaries[p]
            if not A or not A[0] or not B or not B[0]:
                continue
            for i in range(len(A)):
                for j in range(len(B[0])):
                    s = sum(A[i][t] * B[t][j] for t in range(len(B)))
                    if s != 0:
                        raise ValidationError("boundary squared is nonzero")

    def degree_count(self) -> int:
        return len(self.ranks)


@dataclass
class HomologyDegree:
    degree: int
    betti: int
    torsion: tuple[int, ...]
    reliable: bool


def homology(cc: ChainComplex, unreliable_from: int | None = None) -> list[HomologyDegree]:
    """Integral homology per degree; torsion lists the factors > 1.

    Degrees at or above `unreliable_from` are flagged: a truncated complex
    lacks the boundaries needed to pin them down.
    """
    k = cc.degree_count()
    ranks_of = []
    factors_of = []
    for p in range(k):
        if p == 0:
            ranks_of.append(0)
            factors_of.append([])
        else:
            d = smith_normal_form(cc.boundaries[p]) if cc.ranks[p] and cc.ranks[p - 1] else []
            ranks_of.append(len(d))
            factors_of.append(d)
    out = []
    for p in range(k):
        rank_in = ranks_of[p + 1] if p + 1 < k else 0
        factors_in = factors_of[p + 1] if p + 1 < k else []
        betti = cc.ranks[p] - ranks_of[p] - rank_in
        torsion = tuple(f for f in factors_in if f > 1)
        reliable = unreliable_from is None or p < unreliable_from
        out.append(HomologyDegree(degree=p, betti=betti, torsion=torsion, reliable=reliable))
    return out


def complex_from_simplices(simplices: Sequence[Sequence[int]]) -> ChainComplex:
    """Chain complex of a simplicial complex given by its maximal (or all)
    simplices on integer vertices; faces are closed over automatically."""
    by_dim: dict[int, set[tuple[int, ...]]] = {}

    def add(s: tuple[int, ...]):
        d = len(s) - 1
        if s in by_dim.setdefault(d, set()):
            return
        by_dim[d].add(s)
        if d > 0:
            for i in range(len(s)):
                add(s[:i] + s[i + 1 :])

    for s in simplices:
        add(tuple(sorted(set(s))))
    top = max(by_dim)
    ordered = [sorted(by_dim.get(d, ())) for d in range(top + 1)]
    index = [{s: i for i, s in enumerate(level)} for level in ordered]
    ranks = tuple(len(level) for level in ordered)
    boundaries: list = [None]
    for p in range(1, top + 1):
        B = [[0] * ranks[p] for _ in range(ranks[p - 1])]
        for j, s in enumerate(ordered[p]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                B[index[p - 1][face]][j] += (-1) ** i
        boundaries.append(B)
    return ChainComplex(ranks=ranks, boundaries=boundaries)
