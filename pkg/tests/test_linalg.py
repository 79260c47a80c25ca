import random

import numpy as np
import pytest

from tamecover import linalg
from tamecover.field import quadratic_extension
from tamecover.linalg import ExtOps


def random_matrix(rng, m, n, p):
    return np.array([[rng.randrange(p) for _ in range(n)] for _ in range(m)],
                    dtype=np.int64)


@pytest.mark.parametrize("p", [2, 3, 5, 101])
def test_nullspace_vectors_annihilate(p):
    rng = random.Random(p)
    for _ in range(25):
        A = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), p)
        N = linalg.nullspace(A, p)
        assert N.shape[0] == A.shape[1] - linalg.rank(A, p)
        for v in N:
            assert not np.any((A @ v) % p)
        # canonical: recomputing gives identical arrays
        assert np.array_equal(N, linalg.nullspace(A, p))


def test_zero_map_has_full_kernel():
    A = np.zeros((3, 3), dtype=np.int64)
    N = linalg.kernel_basis(A, 5)
    assert N.shape == (3, 3)
    assert np.array_equal(N, np.eye(3, dtype=np.int64))


def test_rref_known_example():
    A = np.array([[1, 2], [2, 4]], dtype=np.int64)
    R, pivots = linalg.rref(A, 5)
    assert pivots == (0,)
    assert np.array_equal(R, np.array([[1, 2]]))


def test_solve_consistent_and_inconsistent():
    p = 7
    A = np.array([[1, 1], [0, 0]], dtype=np.int64)
    x = linalg.solve(A, np.array([3, 0]), p)
    assert x is not None and (A @ x % p == np.array([3, 0])).all()
    assert linalg.solve(A, np.array([0, 1]), p) is None


def test_subspace_predicates():
    p = 3
    b1 = np.array([[1, 0, 1], [0, 1, 0]])
    b2 = np.array([[1, 1, 1], [2, 1, 2]])
    assert linalg.subspace_equal(b1, b2, p)
    assert linalg.in_row_space([1, 2, 1], b1, p)
    assert not linalg.in_row_space([1, 0, 0], b1, p)
    assert linalg.subspace_contains(b1, b2, p)


def test_quotient_projection_kernel_is_span():
    p = 5
    rng = random.Random(17)
    for _ in range(20):
        dim = rng.randint(2, 6)
        span = random_matrix(rng, rng.randint(0, dim), dim, p)
        proj, section = linalg.quotient_projection(span, dim, p)
        r = linalg.rank(span, p) if span.size else 0
        assert proj.shape == (dim - r, dim)
        for v in span:
            assert not np.any(linalg.matmul_mod(proj, v.reshape(-1, 1), p))
        assert linalg.rank(proj, p) == dim - r


def test_matmul_mod_matches_python():
    p = 101
    rng = random.Random(5)
    A = random_matrix(rng, 4, 5, p)
    B = random_matrix(rng, 5, 3, p)
    assert np.array_equal(linalg.matmul_mod(A, B, p), (A @ B) % p)


class TestExtensionOps:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_rref_and_nullspace_over_quadratic_extension(self, p):
        F = quadratic_extension(p)
        ops = ExtOps(F)
        rng = random.Random(p)
        for _ in range(15):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = np.array([[[rng.randrange(p) for _ in range(F.k)] for _ in range(n)]
                          for _ in range(m)], dtype=np.int64)
            N = ops.nullspace(A)
            for v in N:
                prod = ops.mul(A, np.broadcast_to(v[None, :, :], A.shape))
                assert not np.any(prod.sum(axis=1) % p)

    def test_prime_data_gives_prime_rref(self):
        # F_p-valued input reduces identically in F_(p^2)
        p = 3
        F = quadratic_extension(p)
        ops = ExtOps(F)
        A = np.array([[1, 2, 0], [2, 1, 1], [0, 0, 1]], dtype=np.int64)
        R0, piv0 = linalg.rref(A, p)
        R1, piv1 = ops.rref(ops.embed_int_matrix(A))
        assert piv0 == piv1
        assert np.array_equal(R1[..., 0], R0)
        assert not np.any(R1[..., 1])

    def test_genuine_extension_scalars(self):
        F = quadratic_extension(3)
        ops = ExtOps(F)
        w = np.array(F.gen(), dtype=np.int64)
        # solve w * x = 1: row reduce [w | 1]
        A = np.zeros((1, 2, 2), dtype=np.int64)
        A[0, 0] = w
        A[0, 1] = np.array(F.one)
        R, piv = ops.rref(A)
        assert piv == (0,)
        x = tuple(int(c) for c in R[0, 1])
        assert F.mul(F.gen(), x) == F.one
