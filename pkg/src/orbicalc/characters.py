"""Exact complex character tables of finite groups.

Method: class-sum matrices are simultaneously diagonalized over a prime
field GF(p) with p = 1 mod exp(G) and p > |G|.  The joint eigenvectors
are the central characters mod p; degrees are recovered from the second
orthogonality relation, and the character values are lifted to exact
cyclotomic integers through eigenvalue multiplicities obtained by a
discrete Fourier inversion mod p.  Both orthogonality relations are then
re-verified with exact integer arithmetic; nothing in the public output
depends on the internal prime.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from ._modlinalg import nullspace_mod, solve_columns
from .cyclotomic import CycInt
from .errors import InternalCheckError
from .groups import FiniteGroup, class_index_map, conjugacy_classes


def _find_prime(e: int, bound: int) -> int:
    """Smallest prime p = 1 mod e with p > bound."""

    def is_prime(n):
        if n < 2:
            return False
        for q in range(2, isqrt(n) + 1):
            if n % q == 0:
                return False
        return True

    p = bound + 1
    while (p - 1) % e != 0 or not is_prime(p):
        p += 1
    return p


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for w in range(2, p):
        if all(pow(w, (p - 1) // f, p) != 1 for f in factors):
            return w
    raise InternalCheckError("no primitive root found")


class CharacterTable:
    """Exact character table with deterministic row and class ordering.

    Classes are ordered by least member; characters by (degree, value
    lexicographic).  Values are CycInt of order exp(G).
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.classes = conjugacy_classes(group)
        self.class_sizes = tuple(len(c) for c in self.classes)
        self.num_classes = len(self.classes)
        self.exponent = group.exponent()
        self._compute()
        self._verify()

    # -- computation -----------------------------------------------------

    def _compute(self) -> None:
        G, r = self.group, self.num_classes
        n, e = G.order, self.exponent
        class_of = class_index_map(G)
        reps = [c[0] for c in self.classes]
        self.identity_class = class_of[G.identity]
        inv_class = [class_of[G.inv(z)] for z in reps]
        p = _find_prime(e, n)
        self._prime = p

        # Class-sum matrices: (M_i)[j][k] = #{(x, y) in C_i x C_j : xy = z_k}.
        mats = np.zeros((r, r, r), dtype=np.int64)
        for i in range(r):
            for x in self.classes[i]:
                row = G.table[x]
                for j in range(r):
                    for y in self.classes[j]:
                        mats[i, j, class_of[row[y]]] += 1
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    q, rem = divmod(int(mats[i, j, k]), self.class_sizes[k])
                    if rem:
                        raise InternalCheckError("class constants not integral")
                    mats[i, j, k] = q
        mats %= p

        # Joint eigenvectors over GF(p): iteratively split invariant subspaces.
        subspaces = [np.eye(r, dtype=np.int64)]
        for i in range(r):
            if i == self.identity_class:
                continue
            if all(B.shape[1] == 1 for B in subspaces):
                break
            nxt = []
            for B in subspaces:
                k = B.shape[1]
                if k == 1:
                    nxt.append(B)
                    continue
                X = solve_columns(B, (mats[i] @ B) % p, p)
                found = 0
                for lam in range(p):
                    K = nullspace_mod((X - lam * np.eye(k, dtype=np.int64)) % p, p)
                    if K.shape[1]:
                        nxt.append((B @ K) % p)
                        found += K.shape[1]
                        if found == k:
                            break
                if found != k:
                    raise InternalCheckError("class matrix not diagonalizable")
            subspaces = nxt
        if any(B.shape[1] != 1 for B in subspaces):
            raise InternalCheckError("joint eigenspaces are not one-dimensional")

        sizes_inv = [pow(s, p - 2, p) for s in self.class_sizes]
        omegas = []
        for B in subspaces:
            v = B[:, 0] % p
            scale = pow(int(v[self.identity_class]), p - 2, p)
            omegas.append((v * scale) % p)

        # Degrees from sum_i omega(i) omega(i*) / |C_i| = |G| / d^2 (mod p).
        degrees, chi_mod = [], []
        for v in omegas:
            s = 0
            for i in range(r):
                s += int(v[i]) * int(v[inv_class[i]]) * sizes_inv[i]
            s %= p
            d2 = (n * pow(s, p - 2, p)) % p
            d = isqrt(d2)
            if d * d != d2 or d == 0:
                raise InternalCheckError("degree recovery failed")
            degrees.append(d)
            chi_mod.append([(d * int(v[i]) * sizes_inv[i]) % p for i in range(r)])

        # Power map: class of z_i^j for j = 0..e-1.
        power_class = np.zeros((r, e), dtype=np.int64)
        for i in range(r):
            x = G.identity
            for j in range(e):
                power_class[i, j] = class_of[x]
                x = G.table[x][reps[i]]

        # Multiplicity of zeta^k among the eigenvalues of rho(z_i):
        # m_k = (1/e) sum_j chi(z_i^j) z^(-jk) mod p, lifted to [0, p).
        z = 1 if e == 1 else pow(_primitive_root(p), (p - 1) // e, p)
        e_inv = pow(e, p - 2, p)
        Zmat = np.array(
            [[pow(z, (-j * k) % (p - 1), p) for k in range(e)] for j in range(e)],
            dtype=np.int64,
        )
        mults = np.zeros((len(omegas), r, e), dtype=np.int64)
        for t, cm in enumerate(chi_mod):
            cm = np.array(cm, dtype=np.int64)
            A = cm[power_class]  # r x e, value of chi_t at z_i^j
            M = (A @ Zmat) % p
            M = (M * e_inv) % p
            if np.any(M > max(degrees)):
                raise InternalCheckError("eigenvalue multiplicity out of range")
            mults[t] = M
        for t in range(len(omegas)):
            if not np.all(mults[t].sum(axis=1) == degrees[t]):
                raise InternalCheckError("multiplicities do not sum to the degree")

        # Exact values and deterministic ordering.
        values = [
            [
                CycInt.from_root_multiplicities(e, (int(x) for x in mults[t, i]))
                for i in range(r)
            ]
            for t in range(len(omegas))
        ]
        order = sorted(
            range(len(values)),
            key=lambda t: (degrees[t], [v.sort_key() for v in values[t]]),
        )
        self.degrees = tuple(degrees[t] for t in order)
        self.values = [values[t] for t in order]
        self._mults = mults[order]
        self._inv_class = inv_class

    # -- verification ------------------------------------------------------

    def _verify(self) -> None:
        n, r, e = self.group.order, self.num_classes, self.exponent
        if len(self.values) != r:
            raise InternalCheckError("character count differs from class count")
        if sum(d * d for d in self.degrees) != n:
            raise InternalCheckError("sum of squared degrees is not |G|")
        V = self._mults  # (r, r, e) exact nonnegative integers
        Vc = V[:, :, (-np.arange(e)) % e]  # complex conjugate
        w = np.array(self.class_sizes, dtype=np.int64)
        fold = (np.arange(e)[:, None] + np.arange(e)[None, :]) % e

        # Row orthogonality, exact: sum_i |C_i| chi_s(i) conj(chi_t(i)).
        X = np.einsum("sia,tib->stab", V * w[None, :, None], Vc)
        acc = np.zeros((r, r, e), dtype=np.int64)
        for c in range(e):
            acc[:, :, c] = X[:, :, fold == c].sum(axis=-1)
        for s in range(r):
            for t in range(r):
                val = CycInt(e, tuple(int(x) for x in acc[s, t]))
                if val != (n if s == t else 0):
                    raise InternalCheckError("row orthogonality fails exactly")

        # Column orthogonality: sum_t chi_t(i) conj(chi_t(j)) = delta |G|/|C_i|.
        Y = np.einsum("tia,tjb->ijab", V, Vc)
        accc = np.zeros((r, r, e), dtype=np.int64)
        for c in range(e):
            accc[:, :, c] = Y[:, :, fold == c].sum(axis=-1)
        for i in range(r):
            for j in range(r):
                expect = n // self.class_sizes[i] if i == j else 0
                if CycInt(e, tuple(int(x) for x in accc[i, j])) != expect:
                    raise InternalCheckError("column orthogonality fails exactly")

    # -- queries -----------------------------------------------------------

    def value(self, t: int, i: int) -> CycInt:
        return self.values[t][i]

    def inner(self, s: int, t: int) -> int:
        """Exact inner product of rows s and t."""
        e = self.exponent
        acc = CycInt.from_int(e, 0)
        for i in range(self.num_classes):
            acc = acc + self.class_sizes[i] * (
                self.values[s][i] * self.values[t][i].conjugate()
            )
        return acc.divide_exact(self.group.order).as_int()

    def inner_with(self, chi: list[CycInt], t: int) -> CycInt:
        """<chi, chi_t> for an arbitrary class function with CycInt values."""
        e = self.exponent
        acc = CycInt.from_int(e, 0)
        for i in range(self.num_classes):
            acc = acc + self.class_sizes[i] * (
                chi[i] * self.values[t][i].conjugate()
            )
        return acc.divide_exact(self.group.order)

    def conjugate_partner(self, t: int) -> int:
        target = [v.conjugate() for v in self.values[t]]
        for s in range(self.num_classes):
            if self.values[s] == target:
                return s
        raise InternalCheckError("conjugate character missing from the table")

    def kernel_classes(self, t: int) -> list[int]:
        d = CycInt.from_int(self.exponent, self.degrees[t])
        return [
            i for i in range(self.num_classes) if self.values[t][i] == d
        ]

    def text_table(self) -> str:
        reps = [c[0] for c in self.classes]
        head = ["", *(f"{self.group.label(z)}({s})" for z, s in zip(reps, self.class_sizes))]
        rows = [head]
        for t in range(self.num_classes):
            rows.append([f"chi{t}", *(str(v) for v in self.values[t])])
        widths = [max(len(r[c]) for r in rows) for c in range(len(head))]
        lines = [
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
        ]
        return "\n".join(lines)


def character_table(G: FiniteGroup) -> CharacterTable:
    if "character_table" not in G._cache:
        G._cache["character_table"] = CharacterTable(G)
    return G._cache["character_table"]


def frobenius_schur(table: CharacterTable, t: int) -> int:
    """The indicator (1/|G|) sum_g chi(g^2); must be exactly -1, 0 or 1."""
    G = table.group
    class_of = class_index_map(G)
    e = table.exponent
    acc = CycInt.from_int(e, 0)
    for i, cls in enumerate(table.classes):
        z = cls[0]
        sq = class_of[G.table[z][z]]
        acc = acc + table.class_sizes[i] * table.values[t][sq]
    nu = acc.divide_exact(G.order).as_int()
    if nu not in (-1, 0, 1):
        raise InternalCheckError(f"Frobenius-Schur indicator out of range: {nu}")
    return nu
