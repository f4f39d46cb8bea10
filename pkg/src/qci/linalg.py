"""Exact dense linear algebra over a prime field.

Matrices are numpy ``int64`` arrays holding residues in ``[0, p)``.  Row
reduction uses one fixed pivot rule (first nonzero entry, scanning columns
left to right and rows top to bottom, no pivoting heuristics), so every
result is bit-identical across runs and across hosts.

The prime is capped well below the machine word so that products and the
dot-product accumulations appearing here stay inside ``int64``:
``p < 2**21`` leaves headroom of ``2**21`` summands of size ``(p-1)**2``.
"""

from __future__ import annotations

import numpy as np

from .errors import GuardError

PRIME_MAX = 1 << 21


class PrimeField:
    """Arithmetic context for F_p. Primality is checked once, by trial division."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or p < 2:
            raise GuardError(f"prime must be an integer >= 2, got {p!r}")
        if p >= PRIME_MAX:
            raise GuardError(
                f"prime {p} too large; need p < {PRIME_MAX} so int64 accumulation stays exact"
            )
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise GuardError(f"{p} is not prime (divisible by {d})")
            d += 1
        self.p = p

    def reduce(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def as_matrix(entries, field: PrimeField) -> np.ndarray:
    """Coerce a 2-d array-like to an int64 residue matrix."""
    M = np.asarray(entries, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {M.shape}")
    return M % field.p


def _echelon(M: np.ndarray, p: int, reduced: bool):
    """Row-reduce in place (on a copy) with the fixed pivot rule.

    Returns (R, pivots).  With ``reduced`` the result is the reduced row
    echelon form (pivots scaled to 1, eliminated above and below);
    otherwise only entries below each pivot are cleared, which is enough
    for rank and is roughly twice as fast.
    """
    R = M % p
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        inv = pow(int(R[row, col]), p - 2, p)
        # Columns left of the pivot are already clear; restrict updates.
        tail = R[:, col:]
        if inv != 1:
            tail[row] = (tail[row] * inv) % p
        if reduced:
            colvals = tail[:, 0].copy()
            colvals[row] = 0
        else:
            colvals = np.zeros(m, dtype=np.int64)
            colvals[row + 1 :] = tail[row + 1 :, 0]
        mask = colvals != 0
        if mask.any():
            # factor * pivot_row < p**2 fits int64.
            tail[mask] = (tail[mask] - np.outer(colvals[mask], tail[row])) % p
        pivots.append(col)
        row += 1
    return R, tuple(pivots)


def rank(M, field: PrimeField) -> int:
    A = as_matrix(M, field)
    _, pivots = _echelon(A, field.p, reduced=False)
    return len(pivots)


def rref(M, field: PrimeField):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    A = as_matrix(M, field)
    return _echelon(A, field.p, reduced=True)


def kernel_basis(M, field: PrimeField) -> np.ndarray:
    """Canonical basis of the right kernel, one vector per row.

    The basis is itself brought to reduced row echelon form, so the output
    depends only on the kernel as a subspace, not on the path taken.
    """
    A = as_matrix(M, field)
    m, n = A.shape
    R, pivots = _echelon(A, field.p, reduced=True)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row_i, j in enumerate(free):
        basis[row_i, j] = 1
        for pr, pc in enumerate(pivots):
            basis[row_i, pc] = (-int(R[pr, j])) % field.p
    if basis.shape[0]:
        basis, _ = _echelon(basis, field.p, reduced=True)
    # rank-nullity, asserted on every kernel computation
    assert basis.shape[0] + len(pivots) == n
    return basis


def left_kernel_basis(M, field: PrimeField) -> np.ndarray:
    """Canonical basis of the left kernel (row vectors w with w M = 0)."""
    A = as_matrix(M, field)
    return kernel_basis(A.T, field)
