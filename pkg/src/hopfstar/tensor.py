"""Kronecker/leg calculus for dense complex matrices.

Conventions used throughout the package:

* tensor factors are numbered from 1, so ``leg_embed(X, (2, 2, 2), (1, 3))``
  is X acting on the first and third factors of a three-fold tensor space;
* linear functionals are trace pairings ``X -> trace(F @ X)`` and are passed
  around as their representing matrix F (finite-dimensional duals are
  reflexive, so no separate dual type is needed);
* residuals are absolute Frobenius norms with default tolerance 1e-9.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import ShapeError

DEFAULT_TOL = 1e-9

Matrix = np.ndarray


def cplx(X) -> Matrix:
    return np.asarray(X, dtype=complex)


def eye(n: int) -> Matrix:
    return np.eye(n, dtype=complex)


def dagger(X: Matrix) -> Matrix:
    return np.asarray(X).conj().T


def frob(X: Matrix) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(X)))


def op_norm(X: Matrix) -> float:
    """Operator norm (largest singular value)."""
    return float(np.linalg.norm(cplx(X), 2))


def trace_norm(X: Matrix) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(cplx(X), compute_uv=False)))


def kron(X: Matrix, Y: Matrix) -> Matrix:
    return np.kron(cplx(X), cplx(Y))


def multi_kron(mats: Sequence[Matrix]) -> Matrix:
    out = np.eye(1, dtype=complex)
    for m in mats:
        out = np.kron(out, cplx(m))
    return out


def vec(X: Matrix) -> Matrix:
    """Row-major vectorization; trace(dagger(A) @ B) == vec(A).conj() @ vec(B)."""
    return np.asarray(X).reshape(-1)


def _check_factors(X: Matrix, factors: Sequence[int]) -> None:
    d = int(np.prod(factors))
    if X.shape != (d, d):
        raise ShapeError(f"matrix is {X.shape}, factors {tuple(factors)} give {d}x{d}")


def factor_permutation_matrix(factors: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Permutation matrix P reordering tensor factors so that new factor j is
    old factor perm[j]; then permute_factors(X, ...) == P @ X @ P.T."""
    D = int(np.prod(factors))
    idx = np.arange(D).reshape(tuple(factors)).transpose(tuple(perm)).reshape(-1)
    P = np.zeros((D, D))
    P[np.arange(D), idx] = 1.0
    return P


def permute_factors(X: Matrix, factors: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Conjugate X by the factor-reordering unitary (new factor j = old factor perm[j])."""
    _check_factors(X, factors)
    m = len(factors)
    T = cplx(X).reshape(tuple(factors) + tuple(factors))
    axes = list(perm) + [m + p for p in perm]
    D = int(np.prod(factors))
    return T.transpose(axes).reshape(D, D)


def leg_embed(X: Matrix, factors: Sequence[int], legs: Sequence[int]) -> Matrix:
    """Embed X, acting on the named tensor factors (1-based), as identity elsewhere.

    ``leg_embed(V, (a, b, c), (1, 2))`` is V (x) I_c; non-contiguous legs are
    handled by conjugating with the appropriate factor permutation.
    """
    factors = tuple(int(f) for f in factors)
    m = len(factors)
    legs0 = [int(l) - 1 for l in legs]
    if len(set(legs0)) != len(legs0) or any(l < 0 or l >= m for l in legs0):
        raise ShapeError(f"legs {tuple(legs)} invalid for {m} factors")
    dleg = int(np.prod([factors[l] for l in legs0]))
    X = cplx(X)
    if X.shape != (dleg, dleg):
        raise ShapeError(f"operator is {X.shape}, selected legs give {dleg}x{dleg}")
    rest = [j for j in range(m) if j not in legs0]
    drest = int(np.prod([factors[j] for j in rest], dtype=int)) if rest else 1
    Y = np.kron(X, eye(drest))  # factor order: legs..., rest...
    order = legs0 + rest
    reordered = [factors[o] for o in order]
    inv = [order.index(t) for t in range(m)]
    return permute_factors(Y, reordered, inv)


def flip_sigma(X: Matrix, dim_a: int, dim_b: int) -> Matrix:
    """The flip *-isomorphism a (x) b -> b (x) a applied to X."""
    _check_factors(cplx(X), (dim_a, dim_b))
    return permute_factors(X, (dim_a, dim_b), (1, 0))


def flip_blocks(X: Matrix, dim_a: int, dim_b: int) -> Matrix:
    """Independent route to flip_sigma via block transposition (for cross-checks)."""
    T = cplx(X).reshape(dim_a, dim_b, dim_a, dim_b)
    return T.transpose(1, 0, 3, 2).reshape(dim_a * dim_b, dim_a * dim_b)


# ---------------------------------------------------------------------------
# functionals and slice maps
# ---------------------------------------------------------------------------

class Functional:
    """Linear functional X -> trace(F @ X) on d x d matrices."""

    __slots__ = ("dim", "mat")

    def __init__(self, mat: Matrix):
        mat = cplx(mat)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ShapeError("representing matrix must be square")
        self.mat = mat
        self.dim = mat.shape[0]

    def __call__(self, X: Matrix) -> complex:
        return complex(np.trace(self.mat @ cplx(X)))

    @staticmethod
    def dual_to(B: Matrix) -> "Functional":
        """The functional X -> <B, X> = trace(dagger(B) @ X)."""
        return Functional(dagger(B))


def _fmat(f) -> Matrix:
    return f.mat if isinstance(f, Functional) else cplx(f)


def matrix_unit_functionals(n: int) -> list[Matrix]:
    """Representing matrices of the entry functionals X -> X[p, q] (a basis of
    the dual of M_n), ordered row-major in (p, q)."""
    out = []
    for p in range(n):
        for q in range(n):
            F = np.zeros((n, n), dtype=complex)
            F[q, p] = 1.0
            out.append(F)
    return out


def slice_right(X: Matrix, f, dim_a: int, dim_b: int) -> Matrix:
    """(id (x) f)(X) for X on a two-factor space, f a functional on the second factor."""
    F = _fmat(f)
    _check_factors(cplx(X), (dim_a, dim_b))
    if F.shape != (dim_b, dim_b):
        raise ShapeError("functional dimension does not match second factor")
    T = cplx(X).reshape(dim_a, dim_b, dim_a, dim_b)
    return np.einsum("abcd,db->ac", T, F)


def slice_left(X: Matrix, f, dim_a: int, dim_b: int) -> Matrix:
    """(f (x) id)(X), the mirrored slice map."""
    F = _fmat(f)
    _check_factors(cplx(X), (dim_a, dim_b))
    if F.shape != (dim_a, dim_a):
        raise ShapeError("functional dimension does not match first factor")
    T = cplx(X).reshape(dim_a, dim_b, dim_a, dim_b)
    return np.einsum("abcd,ca->bd", T, F)


def slice_right_trace(X: Matrix, f, dim_a: int, dim_b: int) -> Matrix:
    """Second, independent implementation of slice_right: a partial trace of
    X @ (I (x) F). Agrees with the block-contraction route; kept for tests."""
    F = _fmat(f)
    Y = cplx(X) @ np.kron(eye(dim_a), F)
    T = Y.reshape(dim_a, dim_b, dim_a, dim_b)
    return np.einsum("abcb->ac", T)


def apply_leg_map(X: Matrix, factors: Sequence[int], leg: int, kernel: Matrix) -> Matrix:
    """Apply a linear map on matrices to one tensor leg of X.

    ``kernel`` is the (e*e, d*d) matrix of the map M_d -> M_e acting on
    row-major vectorizations; the result lives on the factor list with entry
    ``leg`` replaced by e. This is the workhorse behind id (x) delta,
    delta (x) id, and friends.
    """
    factors = tuple(int(f) for f in factors)
    _check_factors(cplx(X), factors)
    m = len(factors)
    i = int(leg) - 1
    if i < 0 or i >= m:
        raise ShapeError(f"leg {leg} out of range for {m} factors")
    d = factors[i]
    e = math.isqrt(kernel.shape[0])
    if e * e != kernel.shape[0] or kernel.shape[1] != d * d:
        raise ShapeError("kernel shape incompatible with selected leg")
    T = cplx(X).reshape(factors + factors)
    K = cplx(kernel).reshape(e, e, d, d)
    Y = np.tensordot(K, T, axes=([2, 3], [i, m + i]))
    rest = [ax for ax in range(2 * m) if ax not in (i, m + i)]
    src = list(range(2 + len(rest)))
    dst = [i, m + i] + rest
    Z = np.moveaxis(Y, src, dst)
    new_factors = list(factors)
    new_factors[i] = e
    D = int(np.prod(new_factors))
    return Z.reshape(D, D)


# ---------------------------------------------------------------------------
# span arithmetic
# ---------------------------------------------------------------------------

def orthonormalize(mats: Sequence[Matrix], tol: float = 1e-12) -> list[Matrix]:
    """Orthonormal basis (Frobenius inner product) of the span of ``mats``.

    When the input is already orthogonal up to scaling, the order and the
    directions are preserved (only rescaled); otherwise an SVD basis of the
    span is returned.
    """
    mats = [cplx(m) for m in mats if frob(m) > tol]
    if not mats:
        return []
    shape = mats[0].shape
    A = np.stack([vec(m) for m in mats])
    G = A @ A.conj().T
    off = G - np.diag(np.diag(G))
    if frob(off) <= tol * max(1.0, frob(G)):
        return [m / math.sqrt(abs(G[i, i].real)) for i, m in enumerate(mats)]
    _, s, W = np.linalg.svd(A, full_matrices=False)
    rank = int(np.sum(s > tol * max(1.0, s[0])))
    return [W[i].reshape(shape) for i in range(rank)]


def span_residual(basis: Sequence[Matrix], X: Matrix) -> float:
    """Distance from X to the span of an orthonormal basis."""
    X = cplx(X)
    proj = np.zeros_like(X)
    for b in basis:
        proj = proj + np.vdot(b, X) * b
    return frob(X - proj)


def span_dim(mats: Sequence[Matrix], tol: float = 1e-9) -> int:
    if not mats:
        return 0
    A = np.stack([vec(m) for m in mats])
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.sum(s > max(tol, 1e-12 * s[0])))


def span_equal(B1: Sequence[Matrix], B2: Sequence[Matrix], tol: float = DEFAULT_TOL) -> bool:
    """True iff the two spans coincide: mutual projection residual <= tol per element."""
    O1 = orthonormalize(B1)
    O2 = orthonormalize(B2)
    if len(O1) != len(O2):
        return False
    return (
        all(span_residual(O1, m) <= tol for m in O2)
        and all(span_residual(O2, m) <= tol for m in O1)
    )


def subspace_equal(V1: Matrix, V2: Matrix, tol: float = DEFAULT_TOL) -> bool:
    """Equality of column spans of two (possibly empty) vector stacks."""
    r1 = 0 if V1.size == 0 else np.linalg.matrix_rank(V1, tol=1e-10)
    r2 = 0 if V2.size == 0 else np.linalg.matrix_rank(V2, tol=1e-10)
    if r1 != r2:
        return False
    if r1 == 0:
        return True
    Q1, _ = np.linalg.qr(V1)
    Q2, _ = np.linalg.qr(V2)
    Q1, Q2 = Q1[:, :r1], Q2[:, :r2]
    res = Q2 - Q1 @ (Q1.conj().T @ Q2)
    return frob(res) <= tol * math.sqrt(max(1, r1))


def nullspace(A: Matrix, tol: float = 1e-10) -> Matrix:
    """Orthonormal columns spanning the (right) null space of A."""
    A = cplx(A)
    if A.size == 0:
        return np.eye(A.shape[1], dtype=complex)
    _, s, W = np.linalg.svd(A, full_matrices=True)
    rank = int(np.sum(s > max(tol, 1e-12 * (s[0] if len(s) else 1.0))))
    return W[rank:].conj().T
