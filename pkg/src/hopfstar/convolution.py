"""The convolution *-algebra of functionals attached to a Hopf structure.

Functionals live on the image of the designated representation mu; they are
stored by their values against the algebra basis (pulled back through mu) and
canonicalized to annihilate ker(mu), which makes equality, the convolution
product, the involution, and the degeneracy ideal plain linear algebra.
"""

from __future__ import annotations

import numpy as np

from .corep import Corepresentation
from .errors import CoinvolutionError, StructureError
from .hopf import HopfAlgebra
from .tensor import (
    DEFAULT_TOL, Matrix, cplx, dagger, frob, kron, slice_right,
    span_residual, orthonormalize, vec,
)

__all__ = [
    "ConvFunctional", "point_functional", "group_function_functional",
    "functional_basis", "star_product", "involution", "module_action",
    "functional_norm", "slice_corep", "in_degeneracy_ideal",
    "ideal_dimensions", "is_nondegenerate_hopf", "is_coinvolutive",
]


class ConvFunctional:
    """A functional on mu(S), stored by the values of its pullback f o mu on
    the basis of S (canonicalized to the subspace annihilating ker mu)."""

    def __init__(self, hopf: HopfAlgebra, values):
        self.hopf = hopf
        v = np.asarray(values, dtype=complex)
        if v.shape != (hopf.algebra.dim,):
            raise StructureError("need one value per algebra basis element")
        self.values = _valid_projector(hopf) @ v
        self.values.setflags(write=False)

    # -- representing matrices ---------------------------------------------

    def base_matrix(self) -> Matrix:
        """Representing matrix of f o mu on the ambient of S."""
        return self.hopf.algebra.functional_matrix(self.values)

    def mu_matrix(self) -> Matrix:
        """Canonical representing matrix of f on the span of mu(S)."""
        span = self.hopf.mu_span()
        mu = self.hopf.mu
        # values on the mu-span basis: solve W^T x = values with W[i, j] = <m_i, mu(s_j)>
        W = np.stack([span.coords(img) for img in mu.images], axis=1)
        x, *_ = np.linalg.lstsq(W.T, self.values, rcond=None)
        return span.functional_matrix(x)

    # -- vector-space structure ----------------------------------------------

    def __add__(self, other: "ConvFunctional") -> "ConvFunctional":
        _same_hopf(self, other)
        return ConvFunctional(self.hopf, self.values + other.values)

    def __sub__(self, other: "ConvFunctional") -> "ConvFunctional":
        _same_hopf(self, other)
        return ConvFunctional(self.hopf, self.values - other.values)

    def __mul__(self, scalar) -> "ConvFunctional":
        return ConvFunctional(self.hopf, complex(scalar) * self.values)

    __rmul__ = __mul__

    def close_to(self, other: "ConvFunctional", tol: float = DEFAULT_TOL) -> bool:
        _same_hopf(self, other)
        return bool(np.linalg.norm(self.values - other.values) <= tol)

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return bool(np.linalg.norm(self.values) <= tol)


def _same_hopf(f: ConvFunctional, g: ConvFunctional) -> None:
    if f.hopf is not g.hopf:
        raise StructureError("functionals belong to different Hopf structures")


def _valid_projector(H: HopfAlgebra) -> Matrix:
    """Projector onto value vectors that annihilate ker mu (all of them when
    mu is injective, as in the built-in models)."""
    cache = getattr(H, "_conv_projector", None)
    if cache is not None:
        return cache
    mu = H.mu
    d = H.algebra.dim
    stack = mu.image_stack()          # (d, h^2); coords c -> vec(mu(x)) is stack.T @ c
    s = np.linalg.svd(stack.T, compute_uv=False)
    rank = int(np.sum(s > max(1e-10, 1e-12 * s[0])))
    if rank == d:
        P = np.eye(d, dtype=complex)
    else:
        _, _, Wh = np.linalg.svd(stack.T)
        kern = Wh[rank:].conj().T     # columns span ker(mu) in coordinates
        K = kern.conj()               # value vectors must be orthogonal to conj(kernel)
        P = np.eye(d, dtype=complex) - K @ np.linalg.pinv(K)
    H._conv_projector = P
    return P


def group_function_functional(H: HopfAlgebra, values) -> ConvFunctional:
    """The functional taking the stated values on the model generators indexed
    by group elements (the diagonal units, or the regular permutation matrices)."""
    if H.group is None or H.kind not in ("group", "function", "group_flip"):
        raise StructureError("group-function functionals require a group-backed model")
    n = H.group.order
    v = np.asarray(values, dtype=complex)
    if v.shape != (n,):
        raise StructureError(f"need {n} values")
    # orthonormalized bases keep the group indexing; group generators are scaled by sqrt(n)
    scale = 1.0 if H.kind == "function" else 1.0 / np.sqrt(n)
    return ConvFunctional(H, scale * v)


def point_functional(H: HopfAlgebra, s: int) -> ConvFunctional:
    """The indicator functional of a group element: evaluation at s for the
    function model, the s-th coefficient functional for the group model."""
    if H.group is None:
        raise StructureError("point functionals require a group-backed model")
    values = np.zeros(H.group.order, dtype=complex)
    values[s] = 1.0
    return group_function_functional(H, values)


def functional_basis(H: HopfAlgebra) -> list[ConvFunctional]:
    """Basis of the full functional space on mu(S)."""
    P = _valid_projector(H)
    d = H.algebra.dim
    cols = orthonormalize([P[:, j].reshape(d, 1) for j in range(d)])
    return [ConvFunctional(H, c.reshape(d)) for c in cols]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def star_product(f: ConvFunctional, g: ConvFunctional) -> ConvFunctional:
    """Convolution: the functional x -> (f o mu (x) g o mu)(delta x)."""
    _same_hopf(f, g)
    H = f.hopf
    FG = kron(f.base_matrix(), g.base_matrix())
    values = np.array([np.trace(FG @ img) for img in H.delta.images])
    return ConvFunctional(H, values)


def module_action(f: ConvFunctional, x: Matrix) -> ConvFunctional:
    """The right module action ((f . x) o mu)(y) = (f o mu)(x y)."""
    H = f.hopf
    if not H.algebra.contains(x, tol=1e-8):
        raise StructureError("module element must belong to the algebra")
    F = f.base_matrix()
    values = np.array([np.trace(F @ (cplx(x) @ b)) for b in H.algebra.basis])
    return ConvFunctional(H, values)


def slice_corep(W: Corepresentation, f: ConvFunctional) -> Matrix:
    """(id (x) f o mu)(W) for a corepresentation W."""
    if W.hopf is not f.hopf:
        raise StructureError("corepresentation and functional structures differ")
    return slice_right(W.V, f.base_matrix(), W.repdim, W.hopf.algebra.n)


def in_degeneracy_ideal(f: ConvFunctional, tol: float = DEFAULT_TOL) -> bool:
    """Whether f is killed by the designated separating corepresentation."""
    W = f.hopf.require_universal_corep()
    return frob(slice_corep(W, f)) <= tol


def _slice_stack(H: HopfAlgebra) -> tuple[list[ConvFunctional], np.ndarray]:
    basis = functional_basis(H)
    W = H.require_universal_corep()
    return basis, np.stack([vec(slice_corep(W, f)) for f in basis])


def ideal_dimensions(H: HopfAlgebra, tol: float = DEFAULT_TOL) -> tuple[int, int, int]:
    """(dim of the functional space, dim of the degeneracy ideal, dim of the quotient)."""
    basis, slices = _slice_stack(H)
    a0 = len(basis)
    if a0 == 0:
        return 0, 0, 0
    s = np.linalg.svd(slices, compute_uv=False)
    rank = int(np.sum(s > max(tol, 1e-12 * s[0])))
    return a0, a0 - rank, rank


def is_nondegenerate_hopf(H: HopfAlgebra, tol: float = DEFAULT_TOL) -> bool:
    """True iff only the zero functional is killed by the separating
    corepresentation (degeneracy ideal is zero)."""
    a0, m, _ = ideal_dimensions(H, tol)
    return m == 0 and a0 > 0


def is_coinvolutive(H: HopfAlgebra, tol: float = DEFAULT_TOL) -> bool:
    """True iff every functional admits an adjoint partner: equivalently, the
    span of slice images of the separating corepresentation is *-closed."""
    _, slices = _slice_stack(H)
    k = H.require_universal_corep().repdim
    mats = [row.reshape(k, k) for row in slices]
    onb = orthonormalize(mats)
    return all(span_residual(onb, dagger(m)) <= tol for m in onb)


def involution(f: ConvFunctional, tol: float = DEFAULT_TOL) -> ConvFunctional:
    """The functional f* with (id (x) f* o mu)(W) = ((id (x) f o mu)(W))*,
    solved on the designated corepresentation; unique up to the degeneracy
    ideal. Raises CoinvolutionError when no solution exists."""
    H = f.hopf
    basis, slices = _slice_stack(H)
    W = H.require_universal_corep()
    target = vec(dagger(slice_corep(W, f)))
    coeff, *_ = np.linalg.lstsq(slices.T, target, rcond=None)
    residual = float(np.linalg.norm(slices.T @ coeff - target))
    if residual > tol:
        raise CoinvolutionError(
            f"adjoint slice is outside the slice span (residual {residual:.2e})")
    values = sum(c * b.values for c, b in zip(coeff, basis))
    return ConvFunctional(H, values)


def functional_norm(f: ConvFunctional) -> float:
    """Dual norm of f on the algebra generated by mu(S): the supremum of
    |f(mu(x))| over the unit ball, computed blockwise as a sum of trace norms."""
    span = f.hopf.mu_span()
    return span.wedderburn().dual_norm(f.mu_matrix())
