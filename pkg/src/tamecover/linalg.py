"""Dense exact linear algebra over finite fields.

Prime-field matrices are plain 2-d int64 numpy arrays with entries in
``[0, p)``.  Extension-field matrices carry one extra trailing axis of
length ``k`` holding coordinates in the power basis; the same elimination
routines are provided for both layouts.  Row reduction uses the first
nonzero entry in a column as pivot, which makes reduced echelon forms (and
hence kernel bases) canonical.
"""

from __future__ import annotations

import numpy as np

from .field import ExtensionField


def _as_matrix(mat) -> np.ndarray:
    a = np.asarray(mat, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return a


def matmul_mod(a, b, p: int) -> np.ndarray:
    """Exact ``a @ b mod p``; float64 is safe while K * p^2 < 2^53."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 < 2 ** 53:
        prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    else:
        prod = a @ b
    return prod % p


def rref(mat, p: int):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    R = _as_matrix(mat).copy() % p
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            R[[row, pr]] = R[[pr, row]]
        R[row] = (R[row] * pow(int(R[row, col]), p - 2, p)) % p
        others = R[:, col].copy()
        others[row] = 0
        if np.any(others):
            R = (R - np.outer(others, R[row])) % p
        pivots.append(col)
        row += 1
    return R[:row], tuple(pivots)


def rank(mat, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def nullspace(mat, p: int) -> np.ndarray:
    """Canonical basis of ``{x : mat @ x = 0}``, one vector per row."""
    A = _as_matrix(mat)
    m, n = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for r, pc in enumerate(pivots):
            basis[bi, pc] = (-R[r, fc]) % p
    return basis


def kernel_basis(mat, p: int) -> np.ndarray:
    """Basis of the kernel of the linear map given by ``mat`` on columns."""
    return nullspace(mat, p)


def solve(mat, rhs, p: int):
    """One solution of ``mat @ x = rhs`` or None if inconsistent."""
    A = _as_matrix(mat) % p
    b = np.asarray(rhs, dtype=np.int64).reshape(-1) % p
    m, n = A.shape
    aug = np.concatenate([A, b.reshape(m, 1)], axis=1)
    R, pivots = rref(aug, p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, n]
    return x


def row_space(mat, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space."""
    return rref(mat, p)[0]


def subspace_equal(basis_a, basis_b, p: int) -> bool:
    A = row_space(np.atleast_2d(np.asarray(basis_a, dtype=np.int64)), p)
    B = row_space(np.atleast_2d(np.asarray(basis_b, dtype=np.int64)), p)
    return A.shape == B.shape and bool(np.array_equal(A, B))


def in_row_space(vector, basis, p: int) -> bool:
    basis = np.atleast_2d(np.asarray(basis, dtype=np.int64))
    if basis.size == 0:
        return not np.any(np.asarray(vector) % p)
    stacked = np.concatenate([basis, np.asarray(vector, dtype=np.int64).reshape(1, -1)])
    return rank(stacked, p) == rank(basis, p)


def subspace_contains(big, small, p: int) -> bool:
    small = np.atleast_2d(np.asarray(small, dtype=np.int64))
    return all(in_row_space(v, big, p) for v in small)


def quotient_projection(ideal_basis, dim: int, p: int):
    """Coordinates on ``F^dim / span(ideal_basis)``.

    Returns ``(proj, section_columns)``: ``proj`` is a ``(q, dim)`` matrix
    whose kernel is exactly the span, computed by reducing each unit vector
    against the RREF of the span and reading off the non-pivot coordinates;
    ``section_columns`` lists the basis columns representing the quotient.
    """
    basis = np.atleast_2d(np.asarray(ideal_basis, dtype=np.int64))
    if basis.size == 0:
        R = np.zeros((0, dim), dtype=np.int64)
        pivots: tuple = ()
    else:
        R, pivots = rref(basis, p)
    free = [c for c in range(dim) if c not in pivots]
    proj = np.zeros((len(free), dim), dtype=np.int64)
    for qi, fc in enumerate(free):
        proj[qi, fc] = 1
        # unit vector at a pivot column reduces to minus the RREF tail
        for r, pc in enumerate(pivots):
            proj[qi, pc] = (-R[r, fc]) % p
    return proj, tuple(free)


# -- extension-field layout -------------------------------------------------

class ExtOps:
    """Vectorized helpers for arrays of F_(p^k) scalars, layout (..., k)."""

    def __init__(self, field: ExtensionField):
        self.field = field
        self.p = field.p
        self.k = field.k
        self.tensor = field.mult_tensor()

    def embed_int_matrix(self, mat) -> np.ndarray:
        a = _as_matrix(mat) % self.p
        out = np.zeros(a.shape + (self.k,), dtype=np.int64)
        out[..., 0] = a
        return out

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return np.einsum("...i,...j,ijm->...m", a, b, self.tensor) % self.p

    def scalar_inv(self, a) -> np.ndarray:
        return np.array(self.field.inv(tuple(int(x) for x in a)), dtype=np.int64)

    def is_zero(self, a) -> bool:
        return not np.any(np.asarray(a) % self.p)

    def rref(self, mat):
        R = np.asarray(mat, dtype=np.int64).copy() % self.p
        if R.ndim != 3 or R.shape[-1] != self.k:
            raise ValueError("expected layout (rows, cols, k)")
        m, n, _ = R.shape
        pivots = []
        row = 0
        for col in range(n):
            if row >= m:
                break
            nz = np.nonzero(np.any(R[row:, col, :], axis=1))[0]
            if nz.size == 0:
                continue
            pr = row + int(nz[0])
            if pr != row:
                R[[row, pr]] = R[[pr, row]]
            inv = self.scalar_inv(R[row, col])
            R[row] = self.mul(R[row], inv[None, :])
            factors = R[:, col, :].copy()
            factors[row] = 0
            if np.any(factors):
                R = (R - self.mul(factors[:, None, :], R[row][None, :, :])) % self.p
            pivots.append(col)
            row += 1
        return R[:row], tuple(pivots)

    def nullspace(self, mat) -> np.ndarray:
        A = np.asarray(mat, dtype=np.int64)
        m, n, _ = A.shape
        R, pivots = self.rref(A)
        free = [c for c in range(n) if c not in pivots]
        basis = np.zeros((len(free), n, self.k), dtype=np.int64)
        for bi, fc in enumerate(free):
            basis[bi, fc, 0] = 1
            for r, pc in enumerate(pivots):
                basis[bi, pc] = (-R[r, fc]) % self.p
        return basis

    def subspace_equal(self, basis_a, basis_b) -> bool:
        A, _ = self.rref(np.asarray(basis_a, dtype=np.int64))
        B, _ = self.rref(np.asarray(basis_b, dtype=np.int64))
        return A.shape == B.shape and bool(np.array_equal(A, B))
