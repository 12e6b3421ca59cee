"""Built-in Hopf structures for finite groups, and the twisted counterexample.

Two families of models are provided for each finite group G of order n,
both concretely inside M_n:

* the group-algebra model ``group_algebra_hopf``: the span of the left
  regular permutation matrices with the grouplike comultiplication
  lambda(s) -> lambda(s) (x) lambda(s);
* the function-algebra model ``function_algebra_hopf``: the diagonal
  matrices with the comultiplication transporting the group law,
  E_rr -> sum over uv=r of E_uu (x) E_vv.

Each model carries its designated covariant pair and separating
corepresentation. For the function model the corepresentation leg is built
from the right regular representation: with the conventions fixed here
(left-regular lambda, group law in the second tensor leg) that is the unique
choice satisfying the covariance relation, while the left-regular variant
satisfies only the corepresentation identity.
"""

from __future__ import annotations

import numpy as np

from .algebra import LinearMap, StarAlgebra
from .corep import Coaction, Corepresentation, CovariantPair, action_to_coaction, comult_as_coaction
from .errors import ValidationError
from .groups import (
    Cocycle, FiniteGroup, inversion_unitary, regular_rep, right_regular_rep,
    twisted_regular_rep,
)
from .hopf import HopfAlgebra
from .tensor import Matrix, eye, frob, kron, op_norm

__all__ = [
    "group_algebra_hopf", "function_algebra_hopf", "trivial_hopf",
    "twisted_delta_defect", "w_matrix", "v_matrix", "translation_action",
    "diagonal_algebra", "group_algebra", "point_mass_values",
]


def _unit(n: int, i: int) -> Matrix:
    E = np.zeros((n, n), dtype=complex)
    E[i, i] = 1.0
    return E


def w_matrix(G: FiniteGroup) -> Matrix:
    """The canonical unitary sum_s E_ss (x) lambda(s); on basis vectors it acts
    as d_s (x) d_t -> d_s (x) d_{st}."""
    n = G.order
    W = np.zeros((n * n, n * n), dtype=complex)
    for s in range(n):
        W += kron(_unit(n, s), regular_rep(G, s))
    return W


def v_matrix(G: FiniteGroup) -> Matrix:
    """The flip of w_matrix: sum_s lambda(s) (x) E_ss."""
    n = G.order
    V = np.zeros((n * n, n * n), dtype=complex)
    for s in range(n):
        V += kron(regular_rep(G, s), _unit(n, s))
    return V


def group_algebra(G: FiniteGroup) -> StarAlgebra:
    """Span of the left regular representation inside M_n."""
    return StarAlgebra(G.order, [regular_rep(G, s) for s in G.elements], validate=False)


def diagonal_algebra(n: int) -> StarAlgebra:
    return StarAlgebra(n, [_unit(n, s) for s in range(n)], validate=False)


def group_algebra_hopf(G: FiniteGroup) -> HopfAlgebra:
    """The group-algebra model: grouplike comultiplication on span{lambda(s)}."""
    n = G.order
    S = group_algebra(G)
    # orthonormalized basis is lambda(s)/sqrt(n) in the same order
    images = [kron(regular_rep(G, s), regular_rep(G, s)) / np.sqrt(n) for s in G.elements]
    H = HopfAlgebra(S, LinearMap(S, images), label=f"C[{G.name}]", group=G, kind="group")
    coact = comult_as_coaction(H)
    mu = LinearMap.inclusion(S)
    V = Corepresentation(H, n, w_matrix(G))
    H.attach(regular_pair=CovariantPair(coact, mu, V), universal_corep=V)
    return H


def function_algebra_hopf(G: FiniteGroup) -> HopfAlgebra:
    """The function-algebra model: the diagonal algebra with the group law
    transported into the comultiplication."""
    n = G.order
    S = diagonal_algebra(n)
    images = []
    for r in range(n):
        img = np.zeros((n * n, n * n), dtype=complex)
        for u in range(n):
            for v in range(n):
                if G.mul(u, v) == r:
                    img += kron(_unit(n, u), _unit(n, v))
        images.append(img)
    H = HopfAlgebra(S, LinearMap(S, images), label=f"C({G.name})", group=G, kind="function")
    coact = comult_as_coaction(H)
    mu = LinearMap.inclusion(S)
    V = np.zeros((n * n, n * n), dtype=complex)
    for s in range(n):
        V += kron(right_regular_rep(G, s), _unit(n, s))
    corep = Corepresentation(H, n, V)
    H.attach(regular_pair=CovariantPair(coact, mu, corep), universal_corep=corep)
    return H


def flipped_group_hopf(G: FiniteGroup) -> HopfAlgebra:
    """Group-algebra model on the right regular representation (the image of
    the usual model under conjugation by the inversion permutation); this is
    the concrete form taken by duals of function models."""
    n = G.order
    S = StarAlgebra(n, [right_regular_rep(G, s) for s in G.elements], validate=False)
    images = [kron(right_regular_rep(G, s), right_regular_rep(G, s)) / np.sqrt(n)
              for s in G.elements]
    H = HopfAlgebra(S, LinearMap(S, images), label=f"C[{G.name}]'", group=G, kind="group_flip")
    coact = comult_as_coaction(H)
    J = inversion_unitary(G)
    mu = LinearMap.conjugation(S, J)  # rho(s) -> lambda(s)
    V = np.zeros((n * n, n * n), dtype=complex)
    for s in range(n):
        V += kron(_unit(n, s), right_regular_rep(G, s))
    corep = Corepresentation(H, n, V)
    H.attach(regular_pair=CovariantPair(coact, mu, corep), universal_corep=corep)
    return H


def trivial_hopf(A: StarAlgebra) -> HopfAlgebra:
    """The comultiplication a -> a (x) 1 on an arbitrary concrete *-algebra.

    Right-simplifiable but not left-simplifiable (for dim > 1), and its only
    corepresentation is the identity; the designated structures reflect that.
    """
    n = A.n
    H = HopfAlgebra(A, LinearMap(A, [kron(b, eye(n)) for b in A.basis]),
                    label=f"trivial(M{n})", kind="trivial")
    coact = comult_as_coaction(H)
    mu = LinearMap.inclusion(A)
    pair_corep = Corepresentation(H, n, eye(n * n))
    H.attach(regular_pair=CovariantPair(coact, mu, pair_corep),
             universal_corep=Corepresentation(H, 1, eye(n)))
    return H


def translation_action(G: FiniteGroup) -> tuple[StarAlgebra, list[LinearMap]]:
    """The diagonal algebra with G acting by translation,
    sigma_s(E_rr) = E_{r s^-1, r s^-1}; the associated coaction of the
    function model coincides with its own comultiplication."""
    n = G.order
    A = diagonal_algebra(n)
    autos = []
    for s in range(n):
        si = G.inv(s)
        autos.append(LinearMap(A, [_unit(n, G.mul(r, si)) for r in range(n)]))
    return A, autos


def point_mass_values(G: FiniteGroup, s: int) -> np.ndarray:
    """Indicator coefficient vector of a group element (values against the
    model basis indexed by group elements)."""
    v = np.zeros(G.order, dtype=complex)
    v[s] = 1.0
    return v


def twisted_delta_defect(G: FiniteGroup, u: Cocycle) -> float:
    """How badly the grouplike comultiplication fails to be multiplicative on a
    u-twisted group algebra.

    With lambda_u(s) lambda_u(t) = u(s,t) lambda_u(st), assigning
    lambda_u(s) -> lambda_u(s) (x) lambda_u(s) sends the product to
    u(s,t) (lambda_u(st) (x) lambda_u(st)) but the product of images to
    u(s,t)^2 (...), so the defect at (s,t) is |u(s,t) - u(s,t)^2| in operator
    norm. Zero iff every cocycle value equals 1.
    """
    if u.group is not G and not np.array_equal(u.group.table, G.table):
        raise ValidationError("cocycle is defined on a different group")
    n = G.order
    lam_u = [twisted_regular_rep(G, u, s) for s in range(n)]
    defect = 0.0
    for s in range(n):
        for t in range(n):
            prod = lam_u[s] @ lam_u[t]                       # = u(s,t) lambda_u(st)
            st = G.mul(s, t)
            lhs = u(s, t) * kron(lam_u[st], lam_u[st])       # image of the product
            rhs = kron(lam_u[s], lam_u[s]) @ kron(lam_u[t], lam_u[t])
            defect = max(defect, op_norm(lhs - rhs))
            # sanity: the twisted relation itself must hold exactly
            if frob(prod - u(s, t) * lam_u[st]) > 1e-12:
                raise ValidationError("twisted regular representation is inconsistent")
    return defect
