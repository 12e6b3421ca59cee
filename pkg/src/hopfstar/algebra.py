"""Concrete finite-dimensional *-algebras of matrices and linear maps between them.

A StarAlgebra is a unital, *-closed subspace of M_n given by a basis; the
basis is orthonormalized in the Frobenius inner product on construction so
membership tests are stable least-squares projections. Block structure
(a unitary conjugating the algebra to a direct sum of full matrix blocks)
is computed once on demand and cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DecompositionError, ShapeError, ValidationError
from .tensor import (
    DEFAULT_TOL, Matrix, apply_leg_map, cplx, dagger, eye, frob, kron,
    nullspace, orthonormalize, span_residual, vec,
)

__all__ = [
    "StarAlgebra", "LinearMap", "StarHomReport", "check_star_hom",
    "generated_algebra", "tensor_algebra", "Wedderburn", "wedderburn_blocks",
]

_WEDDERBURN_SEED = 1729


class StarAlgebra:
    """Unital *-closed subspace of n x n complex matrices with orthonormal basis."""

    def __init__(self, ambient: int, basis: Sequence[Matrix], *,
                 tol: float = DEFAULT_TOL, validate: bool = True):
        self.n = int(ambient)
        mats = [cplx(b) for b in basis]
        for b in mats:
            if b.shape != (self.n, self.n):
                raise ShapeError(f"basis element is {b.shape}, ambient is {self.n}")
        self.basis = orthonormalize(mats)
        for b in self.basis:
            b.setflags(write=False)
        self.dim = len(self.basis)
        if self.dim == 0:
            raise ValidationError("algebra has empty basis")
        self._stack = np.stack([vec(b) for b in self.basis])
        self._structure = None
        self._center = None
        self._wedderburn = None
        if validate:
            self._validate(tol)

    # -- membership -------------------------------------------------------

    def coords(self, X: Matrix) -> np.ndarray:
        return self._stack.conj() @ vec(cplx(X))

    def from_coords(self, c: np.ndarray) -> Matrix:
        return (np.asarray(c, dtype=complex) @ self._stack).reshape(self.n, self.n)

    def project(self, X: Matrix) -> Matrix:
        return self.from_coords(self.coords(X))

    def membership_residual(self, X: Matrix) -> float:
        return frob(cplx(X) - self.project(X))

    def contains(self, X: Matrix, tol: float | None = None) -> bool:
        return self.membership_residual(X) <= (DEFAULT_TOL if tol is None else tol)

    @property
    def identity(self) -> Matrix:
        return eye(self.n)

    def _validate(self, tol: float) -> None:
        if self.membership_residual(self.identity) > tol:
            raise ValidationError("identity is not in the span")
        for b in self.basis:
            if self.membership_residual(dagger(b)) > tol:
                raise ValidationError("span is not closed under adjoints")
        for bi in self.basis:
            for bj in self.basis:
                if self.membership_residual(bi @ bj) > tol:
                    raise ValidationError("span is not closed under multiplication")

    # -- algebra structure --------------------------------------------------

    def structure_constants(self) -> np.ndarray:
        """c[i, j, :] = coordinates of basis[i] @ basis[j]."""
        if self._structure is None:
            d = self.dim
            prods = np.stack([vec(self.basis[i] @ self.basis[j])
                              for i in range(d) for j in range(d)])
            self._structure = (prods @ self._stack.conj().T).reshape(d, d, d)
        return self._structure

    def center_basis(self) -> list[Matrix]:
        """Orthonormal basis of the center (elements commuting with the algebra)."""
        if self._center is None:
            c = self.structure_constants()
            com = c - c.transpose(1, 0, 2)           # [b_i, b_j] coords
            Acols = com.reshape(self.dim, -1).T      # rows (j,k), cols i
            null = nullspace(Acols)
            self._center = [self.from_coords(null[:, k]) for k in range(null.shape[1])]
        return self._center

    def functional_matrix(self, values: Sequence[complex]) -> Matrix:
        """Representing matrix F with trace(F @ basis[j]) = values[j] (canonical:
        F lies in the span of the basis adjoints)."""
        values = np.asarray(values, dtype=complex)
        F = np.zeros((self.n, self.n), dtype=complex)
        for v, b in zip(values, self.basis):
            F += v * dagger(b)
        return F

    def wedderburn(self, tol: float = 1e-8, seed: int | None = None) -> "Wedderburn":
        """Block decomposition, computed once and cached (fixed seed by default
        so block ordering is reproducible)."""
        if self._wedderburn is None:
            self._wedderburn = wedderburn_blocks(self, tol=tol, seed=seed)
        return self._wedderburn

    def __repr__(self) -> str:
        return f"StarAlgebra(ambient={self.n}, dim={self.dim})"


def generated_algebra(ambient: int, gens: Sequence[Matrix],
                      tol: float = DEFAULT_TOL) -> StarAlgebra:
    """Smallest unital *-closed subspace of M_ambient containing the generators,
    grown by alternating products/adjoints with re-orthonormalization until the
    dimension stabilizes (bounded by ambient^2, so this always terminates)."""
    cur = orthonormalize([eye(ambient)] + [cplx(g) for g in gens])
    while True:
        ext = list(cur)
        ext += [dagger(b) for b in cur]
        ext += [a @ b for a in cur for b in cur]
        new = orthonormalize(ext)
        if len(new) == len(cur):
            return StarAlgebra(ambient, new, tol=tol, validate=False)
        cur = new


def tensor_algebra(A: StarAlgebra, B: StarAlgebra) -> StarAlgebra:
    """Tensor product algebra with basis kron(a_i, b_j)."""
    basis = [kron(a, b) for a in A.basis for b in B.basis]
    return StarAlgebra(A.n * B.n, basis, validate=False)


# ---------------------------------------------------------------------------
# linear maps
# ---------------------------------------------------------------------------

class LinearMap:
    """Linear map from a StarAlgebra into M_m, given by images of the basis."""

    def __init__(self, domain: StarAlgebra, images: Sequence[Matrix]):
        if len(images) != domain.dim:
            raise ShapeError("need one image per domain basis element")
        images = [cplx(y) for y in images]
        m = images[0].shape[0]
        for y in images:
            if y.shape != (m, m):
                raise ShapeError("images must be square of a common size")
        self.domain = domain
        self.images = images
        self.out_dim = m
        self._kernel = None

    @classmethod
    def inclusion(cls, A: StarAlgebra) -> "LinearMap":
        return cls(A, list(A.basis))

    @classmethod
    def conjugation(cls, A: StarAlgebra, U: Matrix) -> "LinearMap":
        U = cplx(U)
        return cls(A, [U @ b @ dagger(U) for b in A.basis])

    def __call__(self, X: Matrix) -> Matrix:
        c = self.domain.coords(X)
        out = np.zeros((self.out_dim, self.out_dim), dtype=complex)
        for ci, y in zip(c, self.images):
            out += ci * y
        return out

    def leg_kernel(self) -> Matrix:
        """(m*m, n*n) matrix acting on row-major vectorizations; projects onto
        the domain span before mapping."""
        if self._kernel is None:
            IMG = np.stack([vec(y) for y in self.images])
            self._kernel = IMG.T @ self.domain._stack.conj()
        return self._kernel

    def apply_leg(self, X: Matrix, factors: Sequence[int], leg: int) -> Matrix:
        return apply_leg_map(X, factors, leg, self.leg_kernel())

    def image_stack(self) -> np.ndarray:
        return np.stack([vec(y) for y in self.images])

    def is_injective(self, tol: float = 1e-9) -> bool:
        s = np.linalg.svd(self.image_stack(), compute_uv=False)
        return bool(s[-1] > max(tol, 1e-12 * s[0]))


@dataclass
class StarHomReport:
    """Residuals of the *-homomorphism laws, maximized over basis pairs."""
    multiplicative: float
    adjoint: float
    unital: float
    injective: bool

    @property
    def max_residual(self) -> float:
        return max(self.multiplicative, self.adjoint, self.unital)

    def passes(self, tol: float = DEFAULT_TOL, require_injective: bool = False) -> bool:
        ok = self.max_residual <= tol
        return ok and (self.injective or not require_injective)


def check_star_hom(phi: LinearMap, tol: float = DEFAULT_TOL) -> StarHomReport:
    """Report how far a linear map is from being a unital injective *-homomorphism.

    Reports rather than raises, so counterexamples are first-class values.
    """
    A = phi.domain
    mult = 0.0
    for i, bi in enumerate(A.basis):
        yi = phi.images[i]
        for j, bj in enumerate(A.basis):
            mult = max(mult, frob(phi(bi @ bj) - yi @ phi.images[j]))
    adj = max(frob(phi(dagger(b)) - dagger(phi.images[i]))
              for i, b in enumerate(A.basis))
    unital = frob(phi(A.identity) - eye(phi.out_dim))
    return StarHomReport(mult, adj, unital, phi.is_injective(tol))


# ---------------------------------------------------------------------------
# block decomposition
# ---------------------------------------------------------------------------

@dataclass
class Wedderburn:
    """Unitary block-diagonalization of a StarAlgebra.

    ``unitary`` conjugates the algebra into a direct sum over components,
    where component i consists of matrices I_{mult_i} (x) a with a in the full
    matrix block of size ``sizes[i]`` (multiplicity-major column ordering).
    """
    algebra: StarAlgebra
    unitary: Matrix
    sizes: list[int]
    mults: list[int]
    residual: float

    @property
    def block_dims(self) -> list[int]:
        return list(self.sizes)

    def _component_slices(self):
        out = []
        off = 0
        for nb, mb in zip(self.sizes, self.mults):
            out.append((off, nb, mb))
            off += nb * mb
        return out

    def compress_functional(self, F: Matrix) -> list[Matrix]:
        """Per-component reduced representing matrices: trace(F x) for x in the
        algebra equals the sum over components of trace(R_i a_i)."""
        G = dagger(self.unitary) @ cplx(F) @ self.unitary
        out = []
        for off, nb, mb in self._component_slices():
            blk = G[off:off + nb * mb, off:off + nb * mb].reshape(mb, nb, mb, nb)
            out.append(np.einsum("jkjl->kl", blk))
        return out

    def dual_norm(self, F: Matrix) -> float:
        """Dual norm of the functional trace(F .) restricted to the algebra:
        sum of trace norms of the compressed blocks."""
        return float(sum(np.sum(np.linalg.svd(R, compute_uv=False))
                         for R in self.compress_functional(F)))


def _group_eigenvalues(w: np.ndarray, gap: float) -> list[np.ndarray]:
    order = np.argsort(w)
    groups = [[order[0]]]
    for idx in order[1:]:
        if w[idx] - w[groups[-1][-1]] <= gap:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    return [np.asarray(g) for g in groups]


def _cyclic_copy(comp_images: list[Matrix], v: np.ndarray, block: int,
                 tol: float) -> np.ndarray:
    """Orthonormal basis (columns) of the module generated by v."""
    rows = np.stack([B @ v for B in comp_images])
    _, s, W = np.linalg.svd(rows, full_matrices=False)
    rank = int(np.sum(s > max(tol, 1e-10 * s[0])))
    if rank != block:
        raise DecompositionError(f"cyclic module has dimension {rank}, expected {block}")
    return W[:rank].conj().T


def wedderburn_blocks(A: StarAlgebra, tol: float = 1e-8,
                      seed: int | None = None) -> Wedderburn:
    """Simultaneously block-diagonalize a concrete *-algebra.

    Strategy: split the space along the spectral projections of a generic
    self-adjoint central element; inside each isotypic component, peel off
    irreducible modules as cyclic subspaces of random vectors and align the
    copies with unitary intertwiners, so conjugated elements take the form
    I_mult (x) a. Retries with fresh randomness on numerical degeneracy.
    """
    rng = np.random.default_rng(_WEDDERBURN_SEED if seed is None else seed)
    last_err: Exception | None = None
    for _ in range(10):
        try:
            return _wedderburn_attempt(A, tol, rng)
        except DecompositionError as err:
            last_err = err
    raise DecompositionError(f"block decomposition failed to stabilize: {last_err}")


def _wedderburn_attempt(A: StarAlgebra, tol: float, rng: np.random.Generator) -> Wedderburn:
    n, d = A.n, A.dim
    zc = A.center_basis()
    W0 = sum((rng.standard_normal() + 1j * rng.standard_normal()) * z for z in zc)
    zg = W0 + dagger(W0)
    w, Q = np.linalg.eigh(zg)
    spread = max(1.0, float(w[-1] - w[0]))
    groups = _group_eigenvalues(w, gap=1e-6 * spread)
    if len(groups) != len(zc):
        raise DecompositionError(
            f"generic central element split into {len(groups)} groups, expected {len(zc)}")

    comps = []
    for g in groups:
        Qg = Q[:, g]
        d_i = Qg.shape[1]
        comp_images = [dagger(Qg) @ b @ Qg for b in A.basis]
        comp_basis = orthonormalize(comp_images)
        block = math.isqrt(len(comp_basis))
        if block * block != len(comp_basis):
            raise DecompositionError("component dimension is not a perfect square")
        if d_i % block != 0:
            raise DecompositionError("multiplicity is not integral")
        mult = d_i // block

        # a generic self-adjoint algebra element has `block` eigenvalues, each
        # with a mult-dimensional eigenspace whose vectors generate irreducible
        # cyclic modules (they are "rank one" across the multiplicity copies)
        g0 = sum((rng.standard_normal() + 1j * rng.standard_normal()) * Bm
                 for Bm in comp_basis)
        g = g0 + dagger(g0)
        wg, Qc = np.linalg.eigh(g)
        spread_g = max(1.0, float(wg[-1] - wg[0]))
        eiggroups = _group_eigenvalues(wg, gap=1e-6 * spread_g)
        if len(eiggroups) != block or any(len(gr) != mult for gr in eiggroups):
            raise DecompositionError("generic algebra element has degenerate spectrum")
        E = Qc[:, eiggroups[0]]

        copies = []
        used = np.zeros((d_i, 0), dtype=complex)
        for _ in range(mult):
            v = E @ (rng.standard_normal(mult) + 1j * rng.standard_normal(mult))
            if used.shape[1]:
                v = v - used @ (used.conj().T @ v)
            nv = np.linalg.norm(v)
            if nv < 1e-8:
                raise DecompositionError("random vector collapsed under projection")
            Wc = _cyclic_copy(comp_basis, v / nv, block, tol)
            copies.append(Wc)
            used = np.concatenate([used, Wc], axis=1)

        # align copies so every algebra element acts identically on each
        A1 = [dagger(copies[0]) @ Bm @ copies[0] for Bm in comp_basis]
        cols = [copies[0]]
        for Wc in copies[1:]:
            Aj = [dagger(Wc) @ Bm @ Wc for Bm in comp_basis]
            sys = np.concatenate(
                [np.kron(np.eye(block), aj) - np.kron(a1.T, np.eye(block))
                 for aj, a1 in zip(Aj, A1)], axis=0)
            null = nullspace(sys)
            if null.shape[1] < 1:
                raise DecompositionError("no intertwiner between copies")
            T = null[:, 0].reshape(block, block)
            c = np.trace(dagger(T) @ T) / block
            if abs(c) < 1e-12 or frob(dagger(T) @ T - c * np.eye(block)) > tol * abs(c) * block:
                raise DecompositionError("intertwiner is not a scalar multiple of a unitary")
            T = T / math.sqrt(abs(c))
            cols.append(Wc @ T)
        U_i = Qg @ np.concatenate(cols, axis=1)
        comps.append((block, mult, U_i))

    comps.sort(key=lambda c: (c[0], c[1]))
    sizes = [c[0] for c in comps]
    mults = [c[1] for c in comps]
    U = np.concatenate([c[2] for c in comps], axis=1)
    if sum(nb * nb for nb in sizes) != d:
        raise DecompositionError("block dimensions do not sum to the algebra dimension")
    if frob(dagger(U) @ U - eye(n)) > tol * n:
        raise DecompositionError("assembled basis is not unitary")

    residual = _pattern_residual(A, U, sizes, mults)
    if residual > tol:
        raise DecompositionError(f"conjugated basis not block-diagonal ({residual:.2e})")
    return Wedderburn(A, U, sizes, mults, residual)


def _pattern_residual(A: StarAlgebra, U: Matrix, sizes, mults) -> float:
    res = 0.0
    for b in A.basis:
        X = dagger(U) @ b @ U
        off = 0
        model = np.zeros_like(X)
        for nb, mb in zip(sizes, mults):
            dblk = nb * mb
            blk = X[off:off + dblk, off:off + dblk].reshape(mb, nb, mb, nb)
            a = np.einsum("jkjl->kl", blk) / mb
            model[off:off + dblk, off:off + dblk] = np.kron(np.eye(mb), a)
            off += dblk
        res = max(res, frob(X - model))
    return res
