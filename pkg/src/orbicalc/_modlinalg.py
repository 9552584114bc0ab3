"""Linear algebra over prime fields GF(p), vectorized with numpy int64.

Entries stay far below 2**63 for the primes used here (p < 10**4), so all
arithmetic is exact.
"""

from __future__ import annotations

import numpy as np


def rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (R, pivot column list)."""
    R = A.astype(np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), p - 2, p)) % p
        mask = np.nonzero(R[:, c])[0]
        for j in mask:
            if j != r:
                R[j] = (R[j] - R[j, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the kernel of A mod p."""
    R, pivots = rref_mod(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-R[r, fc]) % p
    return basis


def rank_mod(A: np.ndarray, p: int) -> int:
    return len(rref_mod(A, p)[1])


def solve_columns(B: np.ndarray, C: np.ndarray, p: int) -> np.ndarray:
    """Solve B @ X = C mod p where B has full column rank and a solution exists."""
    n, k = B.shape
    aug = np.concatenate([B, C], axis=1) % p
    R, pivots = rref_mod(aug, p)
    if pivots[:k] != list(range(k)) or len(pivots) != k:
        raise ValueError("solve_columns: no unique solution")
    return R[:k, k:]
