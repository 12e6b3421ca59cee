"""Multiplicative unitaries: pentagon checks, the finite translation operator
of a group, leg algebras, and the construction from covariant pairs."""

from __future__ import annotations

import numpy as np

from .algebra import StarAlgebra, generated_algebra
from .corep import CovariantPair
from .errors import ShapeError, StructureError
from .groups import FiniteGroup
from .models import w_matrix
from .tensor import DEFAULT_TOL, Matrix, cplx, dagger, eye, frob, matrix_unit_functionals, slice_left, slice_right

__all__ = [
    "MultiplicativeUnitary", "pentagon_check", "kac_takesaki",
    "leg_algebras", "from_covariant_pair", "random_pentagon_search",
]


class MultiplicativeUnitary:
    """A unitary on a two-fold tensor square H (x) H satisfying the pentagon
    identity V12 V13 V23 = V23 V12."""

    def __init__(self, hdim: int, V: Matrix):
        V = cplx(V)
        if V.shape != (hdim * hdim, hdim * hdim):
            raise ShapeError(f"V is {V.shape}, expected {(hdim * hdim,) * 2}")
        self.hdim = hdim
        self.V = V
        self.V.setflags(write=False)


def pentagon_check(V: MultiplicativeUnitary | Matrix, hdim: int | None = None) -> float:
    """Frobenius residual of the pentagon identity on the three-fold space."""
    if isinstance(V, MultiplicativeUnitary):
        M, k = V.V, V.hdim
    else:
        M = cplx(V)
        k = hdim if hdim is not None else _square_side(M)
    T = M.reshape(k, k, k, k)
    # V12 V13 V23 and V23 V12 contracted directly on (k, k, k)
    V12V13 = np.einsum("apbq,brcs->aprcqs", T, T).reshape(k ** 3, k ** 3)
    V23 = np.einsum("pq,arbs->aprbqs", np.eye(k), T).reshape(k ** 3, k ** 3)
    V12 = np.einsum("apbq,rs->aprbqs", T, np.eye(k)).reshape(k ** 3, k ** 3)
    return frob(V12V13 @ V23 - V23 @ V12)


def _square_side(M: Matrix) -> int:
    import math
    k = math.isqrt(M.shape[0])
    if k * k != M.shape[0] or M.shape[0] != M.shape[1]:
        raise ShapeError("multiplicative unitary must live on a square tensor space")
    return k


def kac_takesaki(G: FiniteGroup) -> MultiplicativeUnitary:
    """The translation operator d_s (x) d_t -> d_s (x) d_{st} of a finite group;
    the canonical multiplicative unitary with group-algebra and function-algebra
    legs."""
    return MultiplicativeUnitary(G.order, w_matrix(G))


def leg_algebras(W: MultiplicativeUnitary,
                 tol: float = DEFAULT_TOL) -> tuple[StarAlgebra, StarAlgebra]:
    """The two slice-span algebras of a multiplicative unitary: the span of
    left slices (f (x) id)(W) and of right slices (id (x) f)(W), each closed
    into a unital *-algebra."""
    if pentagon_check(W) > max(tol, 1e-8):
        raise StructureError("pentagon identity fails; leg algebras undefined")
    k = W.hdim
    left, right = [], []
    for F in matrix_unit_functionals(k):
        left.append(slice_left(W.V, F, k, k))
        right.append(slice_right(W.V, F, k, k))
    return generated_algebra(k, left, tol=tol), generated_algebra(k, right, tol=tol)


def from_covariant_pair(P: CovariantPair, tol: float = 1e-8) -> MultiplicativeUnitary:
    """(id (x) pi)(V) for a covariant pair of a Hopf structure coacting on
    itself by its comultiplication; such operators satisfy the pentagon
    identity."""
    H = P.coaction.hopf
    if P.coaction.algebra is not H.algebra:
        raise StructureError("pair must cover the comultiplication coaction")
    res = max(frob(ci - di) for ci, di in zip(P.coaction.map.images, H.delta.images))
    if res > tol:
        raise StructureError("pair must cover the comultiplication coaction")
    k = P.repdim
    if k != P.pi.out_dim or P.corep.repdim != P.pi.out_dim:
        raise StructureError("carrier dimensions are inconsistent")
    n = H.algebra.n
    out = P.pi.apply_leg(P.corep.V, (k, n), 2)
    if out.shape != (k * k, k * k):
        raise StructureError(
            "representation must act on the corepresentation carrier to give a square tensor")
    return MultiplicativeUnitary(k, out)


def random_pentagon_search(hdim: int, trials: int = 50, seed: int = 7,
                           tol: float = 1e-8) -> tuple[float, list[Matrix]]:
    """Sample Haar-ish random unitaries and report the best pentagon residual
    together with any hits below tolerance.

    A probe, not a claim: generic unitaries fail the pentagon identity badly,
    and no finite non-group example ships with the package.
    """
    rng = np.random.default_rng(seed)
    best = np.inf
    hits = []
    d = hdim * hdim
    for _ in range(trials):
        Z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        Q, _ = np.linalg.qr(Z)
        res = pentagon_check(Q, hdim)
        best = min(best, res)
        if res <= tol:
            hits.append(Q)
    return float(best), hits
