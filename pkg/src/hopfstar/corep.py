"""Corepresentations, coactions, covariant pairs, and their verifiers.

A corepresentation of a Hopf structure S on a k-dimensional carrier is a
unitary V in M_k (x) S whose second-leg comultiplication equals V12 V13.
A coaction of S on an algebra A is an injective *-homomorphism
A -> A (x) S compatible with the comultiplication and spanning nondegenerately.
A covariant pair couples a representation of A with a corepresentation of S.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LinearMap, StarAlgebra, StarHomReport, check_star_hom, tensor_algebra
from .errors import ShapeError, StructureError, ValidationError
from .hopf import HopfAlgebra
from .tensor import (
    DEFAULT_TOL, Matrix, cplx, dagger, eye, frob, kron, nullspace,
    span_equal, span_residual, subspace_equal, vec,
)

__all__ = [
    "Corepresentation", "CorepReport", "verify_corepresentation",
    "corep_from_group_rep", "corep_from_function_rep", "corep_direct_sum",
    "unitarily_equivalent", "Coaction", "CoactionReport", "coaction_report",
    "trivial_coaction", "comult_as_coaction", "action_to_coaction",
    "CovariantPair", "CovariantReport", "verify_covariant", "induce",
    "sample_corepresentations",
]


class Corepresentation:
    """Unitary V in M_repdim (x) S."""

    def __init__(self, hopf: HopfAlgebra, repdim: int, V: Matrix):
        V = cplx(V)
        n = hopf.algebra.n
        if V.shape != (repdim * n, repdim * n):
            raise ShapeError(f"V is {V.shape}, expected {(repdim * n, repdim * n)}")
        self.hopf = hopf
        self.repdim = repdim
        self.V = V
        self.V.setflags(write=False)

    def slice_blocks(self) -> list[Matrix]:
        """The (p, q) carrier-leg blocks of V; these are the slices against the
        entry functionals of the carrier and must lie in S."""
        k, n = self.repdim, self.hopf.algebra.n
        T = self.V.reshape(k, n, k, n)
        return [T[p, :, q, :] for p in range(k) for q in range(k)]

    def pair_product(self) -> Matrix:
        """V12 V13 on the three-factor space (carrier, S, S)."""
        k, n = self.repdim, self.hopf.algebra.n
        T = self.V.reshape(k, n, k, n)
        P = np.einsum("apbq,brcs->aprcqs", T, T)
        return P.reshape(k * n * n, k * n * n)

    def comultiplied(self) -> Matrix:
        """(id (x) delta)(V)."""
        k, n = self.repdim, self.hopf.algebra.n
        return self.hopf.delta.apply_leg(self.V, (k, n), 2)


@dataclass
class CorepReport:
    unitary_res: float
    corep_res: float
    legs_res: float
    legs_in_S: bool

    @property
    def max_residual(self) -> float:
        return max(self.unitary_res, self.corep_res, self.legs_res)

    def passes(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_residual <= tol


def verify_corepresentation(V: Corepresentation, tol: float = DEFAULT_TOL) -> CorepReport:
    kn = V.repdim * V.hopf.algebra.n
    unitary = frob(V.V @ dagger(V.V) - eye(kn))
    S = V.hopf.algebra
    legs = max(span_residual(S.basis, blk) for blk in V.slice_blocks())
    corep = frob(V.comultiplied() - V.pair_product())
    return CorepReport(unitary, corep, legs, legs <= tol)


def corep_from_group_rep(H: HopfAlgebra, U: list[Matrix],
                         tol: float = DEFAULT_TOL) -> Corepresentation:
    """Corepresentation sum_s U[s] (x) E_ss of a function-model Hopf structure,
    built from a unitary representation of the underlying group."""
    G = _require_group(H, kind="function")
    n = G.order
    if len(U) != n:
        raise ValidationError(f"need {n} unitaries, got {len(U)}")
    U = [cplx(u) for u in U]
    k = U[0].shape[0]
    for u in U:
        if u.shape != (k, k):
            raise ValidationError("representation matrices must share one size")
        if frob(u @ dagger(u) - eye(k)) > tol:
            raise ValidationError("representation matrices must be unitary")
    if frob(U[0] - eye(k)) > tol:
        raise ValidationError("identity element must map to the identity matrix")
    for s in range(n):
        for t in range(n):
            if frob(U[s] @ U[t] - U[G.mul(s, t)]) > tol:
                raise ValidationError(f"not multiplicative at pair ({s}, {t})")
    V = np.zeros((k * n, k * n), dtype=complex)
    for s in range(n):
        V += kron(U[s], _unit(n, s))
    return Corepresentation(H, k, V)


def corep_from_function_rep(H: HopfAlgebra, projections: list[Matrix],
                            tol: float = DEFAULT_TOL) -> Corepresentation:
    """Corepresentation sum_s P_s (x) lambda(s) of a group-model Hopf structure,
    built from a representation of the diagonal algebra given spectrally as a
    complete family of orthogonal projections."""
    from .groups import regular_rep

    G = _require_group(H, kind="group")
    n = G.order
    if len(projections) != n:
        raise ValidationError(f"need {n} projections, got {len(projections)}")
    P = [cplx(p) for p in projections]
    k = P[0].shape[0]
    for p in P:
        if p.shape != (k, k):
            raise ValidationError("projections must share one size")
        if frob(p - dagger(p)) > tol or frob(p @ p - p) > tol:
            raise ValidationError("family members must be self-adjoint idempotents")
    for s in range(n):
        for t in range(s + 1, n):
            if frob(P[s] @ P[t]) > tol:
                raise ValidationError(f"projections {s} and {t} are not orthogonal")
    if frob(sum(P) - eye(k)) > tol:
        raise ValidationError("projections must sum to the identity")
    V = np.zeros((k * n, k * n), dtype=complex)
    for s in range(n):
        V += kron(P[s], regular_rep(G, s))
    return Corepresentation(H, k, V)


def corep_direct_sum(V1: Corepresentation, V2: Corepresentation) -> Corepresentation:
    """Block-diagonal sum in the carrier leg."""
    if V1.hopf is not V2.hopf:
        raise StructureError("direct sum requires a common Hopf structure")
    n = V1.hopf.algebra.n
    k1, k2 = V1.repdim, V2.repdim
    k = k1 + k2
    T = np.zeros((k, n, k, n), dtype=complex)
    T[:k1, :, :k1, :] = V1.V.reshape(k1, n, k1, n)
    T[k1:, :, k1:, :] = V2.V.reshape(k2, n, k2, n)
    return Corepresentation(V1.hopf, k, T.reshape(k * n, k * n))


def unitarily_equivalent(V1: Corepresentation, V2: Corepresentation,
                         tol: float = DEFAULT_TOL, seed: int = 7,
                         tries: int = 6) -> Matrix | None:
    """A unitary U with V1 = (U (x) 1) V2 (U* (x) 1), or None.

    Solves the linear intertwining system V1 (U (x) 1) = (U (x) 1) V2, then
    hunts for a unitary element of the solution space (polar parts of generic
    solutions; adjoints of intertwiners intertwine the other way, so polar
    parts of invertible solutions work).
    """
    if V1.hopf is not V2.hopf or V1.repdim != V2.repdim:
        return None
    k = V1.repdim
    n = V1.hopf.algebra.n
    cols = []
    for p in range(k):
        for q in range(k):
            E = kron(_unit(k, p, q), eye(n))
            cols.append(vec(V1.V @ E - E @ V2.V))
    L = np.stack(cols, axis=1)
    null = nullspace(L)
    if null.shape[1] == 0:
        return None
    rng = np.random.default_rng(seed)
    candidates = [null[:, j] for j in range(null.shape[1])]
    for _ in range(tries):
        c = rng.standard_normal(null.shape[1]) + 1j * rng.standard_normal(null.shape[1])
        candidates.append(null @ c)
    for cand in candidates:
        T = cand.reshape(k, k)
        u, s, vh = np.linalg.svd(T)
        if s[-1] < 1e-10:
            continue
        U = u @ vh
        E = kron(U, eye(n))
        if frob(V1.V @ E - E @ V2.V) <= tol * max(1.0, frob(V1.V)):
            return U
    return None


# ---------------------------------------------------------------------------
# coactions
# ---------------------------------------------------------------------------

class Coaction:
    """Injective *-homomorphism delta: A -> A (x) S satisfying the coaction
    identity and the nondegeneracy span condition."""

    def __init__(self, algebra: StarAlgebra, hopf: HopfAlgebra, images: list[Matrix]):
        self.algebra = algebra
        self.hopf = hopf
        self.map = LinearMap(algebra, [cplx(i) for i in images])
        if self.map.out_dim != algebra.n * hopf.algebra.n:
            raise ShapeError("coaction images must live on A (x) S")
        self._tensor = None
        self.action = None        # set by action_to_coaction
        self.action_group = None

    def tensor_span(self) -> StarAlgebra:
        if self._tensor is None:
            self._tensor = tensor_algebra(self.algebra, self.hopf.algebra)
        return self._tensor

    def __repr__(self) -> str:
        return f"Coaction({self.algebra!r} by {self.hopf.label})"


@dataclass
class CoactionReport:
    hom: StarHomReport
    identity_res: float
    membership: float
    nondegenerate: bool

    def passes(self, tol: float = DEFAULT_TOL) -> bool:
        return (self.hom.passes(tol, require_injective=True)
                and self.identity_res <= tol and self.membership <= tol
                and self.nondegenerate)


def coaction_report(C: Coaction, tol: float = DEFAULT_TOL) -> CoactionReport:
    dA, n = C.algebra.n, C.hopf.algebra.n
    ident = 0.0
    for img in C.map.images:
        lhs = C.map.apply_leg(img, (dA, n), 1)
        rhs = C.hopf.delta.apply_leg(img, (dA, n), 2)
        ident = max(ident, frob(lhs - rhs))
    member = max(span_residual(C.tensor_span().basis, img) for img in C.map.images)
    prods = [img @ kron(eye(dA), s) for img in C.map.images for s in C.hopf.algebra.basis]
    nondeg = span_equal(prods, C.tensor_span().basis, tol=tol)
    return CoactionReport(check_star_hom(C.map, tol), ident, member, nondeg)


def trivial_coaction(A: StarAlgebra, H: HopfAlgebra) -> Coaction:
    n = H.algebra.n
    return Coaction(A, H, [kron(b, eye(n)) for b in A.basis])


def comult_as_coaction(H: HopfAlgebra) -> Coaction:
    return Coaction(H.algebra, H, list(H.delta.images))


def action_to_coaction(A: StarAlgebra, H: HopfAlgebra, autos: list[LinearMap],
                       tol: float = DEFAULT_TOL) -> Coaction:
    """Coaction of a function-model Hopf structure encoding a group action by
    *-automorphisms: a -> sum_s alpha_s(a) (x) E_ss (group leg second)."""
    G = _require_group(H, kind="function")
    n = G.order
    if len(autos) != n:
        raise ValidationError(f"need {n} automorphisms, got {len(autos)}")
    for s, al in enumerate(autos):
        if al.domain is not A or al.out_dim != A.n:
            raise ValidationError(f"automorphism {s} is not an endomap of the algebra")
        rep = check_star_hom(al, tol)
        if not rep.passes(tol, require_injective=True):
            raise ValidationError(f"automorphism {s} is not a *-automorphism "
                                  f"(residual {rep.max_residual:.2e})")
    for i, b in enumerate(A.basis):
        if frob(autos[0].images[i] - b) > tol:
            raise ValidationError("identity element must act as the identity map")
        for s in range(n):
            for t in range(n):
                if frob(autos[s](autos[t](b)) - autos[G.mul(s, t)](b)) > tol:
                    raise ValidationError(f"action is not a homomorphism at ({s}, {t})")
    images = []
    for b in A.basis:
        img = np.zeros((A.n * n, A.n * n), dtype=complex)
        for s in range(n):
            img += kron(autos[s](b), _unit(n, s))
        images.append(img)
    C = Coaction(A, H, images)
    C.action = autos
    C.action_group = G
    return C


# ---------------------------------------------------------------------------
# covariant pairs
# ---------------------------------------------------------------------------

class CovariantPair:
    """A representation pi of A and a corepresentation V of S on the same
    carrier, compatible with a coaction of S on A."""

    def __init__(self, coaction: Coaction, pi: LinearMap, corep: Corepresentation):
        if pi.domain is not coaction.algebra:
            raise StructureError("representation must be defined on the coacted algebra")
        if corep.hopf is not coaction.hopf:
            raise StructureError("corepresentation belongs to a different Hopf structure")
        if pi.out_dim != corep.repdim:
            raise ShapeError("representation and corepresentation carriers differ")
        self.coaction = coaction
        self.pi = pi
        self.corep = corep

    @property
    def repdim(self) -> int:
        return self.pi.out_dim


@dataclass
class CovariantReport:
    covariance_res: float
    pi_hom: StarHomReport
    corep: CorepReport
    kernels_match: bool

    @property
    def max_residual(self) -> float:
        return max(self.covariance_res, self.pi_hom.max_residual, self.corep.max_residual)

    def passes(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_residual <= tol and self.kernels_match


def verify_covariant(P: CovariantPair, tol: float = DEFAULT_TOL) -> CovariantReport:
    dA = P.coaction.algebra.n
    n = P.coaction.hopf.algebra.n
    k = P.repdim
    V = P.corep.V
    cov = 0.0
    composed = []
    for i, img in enumerate(P.coaction.map.images):
        lhs = P.pi.apply_leg(img, (dA, n), 1)
        composed.append(lhs)
        rhs = V @ kron(P.pi.images[i], eye(n)) @ dagger(V)
        cov = max(cov, frob(lhs - rhs))
    # covariance forces ker((pi (x) id) o delta) == ker(pi)
    N1 = nullspace(P.pi.image_stack().T)
    N2 = nullspace(np.stack([vec(x) for x in composed]).T)
    kern = subspace_equal(N1, N2, tol=max(tol, 1e-8))
    return CovariantReport(cov, check_star_hom(P.pi, tol),
                           verify_corepresentation(P.corep, tol), kern)


def induce(system: Coaction, pi: LinearMap) -> CovariantPair:
    """The induced covariant pair ((pi (x) mu) o delta, 1 (x) V) built from the
    designated pair of the Hopf structure."""
    H = system.hopf
    pair = H.require_regular_pair()
    mu, V = pair.pi, pair.corep
    if pi.domain is not system.algebra:
        raise StructureError("representation must be defined on the coacted algebra")
    rep = check_star_hom(pi)
    if rep.max_residual > 1e-8:
        raise ValidationError(f"pi is not a *-representation (residual {rep.max_residual:.2e})")
    m, n = pi.out_dim, H.algebra.n
    images = []
    for img in system.map.images:
        X = pi.apply_leg(img, (system.algebra.n, n), 1)
        X = mu.apply_leg(X, (m, n), 2)
        images.append(X)
    jpi = LinearMap(system.algebra, images)
    big = Corepresentation(H, m * V.repdim, kron(eye(m), V.V))
    return CovariantPair(system, jpi, big)


def sample_corepresentations(H: HopfAlgebra, repdim: int, trials: int = 200,
                             seed: int = 7, tol: float = 1e-8) -> list[Corepresentation]:
    """Rejection-sample random unitaries for the corepresentation laws.

    A probe utility: it asserts nothing and is expected to come back empty for
    generic draws (structured corepresentations occupy measure zero).
    """
    rng = np.random.default_rng(seed)
    n = H.algebra.n
    found = []
    for _ in range(trials):
        Z = rng.standard_normal((repdim * n, repdim * n)) \
            + 1j * rng.standard_normal((repdim * n, repdim * n))
        Q, _ = np.linalg.qr(Z)
        cand = Corepresentation(H, repdim, Q)
        if verify_corepresentation(cand, tol).passes(tol):
            found.append(cand)
    return found


def _unit(n: int, i: int, j: int | None = None) -> Matrix:
    E = np.zeros((n, n), dtype=complex)
    E[i, i if j is None else j] = 1.0
    return E


def _require_group(H: HopfAlgebra, kind: str):
    if H.group is None or H.kind != kind:
        raise StructureError(f"operation requires a {kind}-model Hopf structure")
    return H.group
