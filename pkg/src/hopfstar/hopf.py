"""Matrix Hopf structures: an algebra together with a comultiplication.

A HopfAlgebra bundles a concrete *-algebra S with a comultiplication
delta: S -> S (x) S, the designated covariant pair used to build convolution
functionals and crossed products, and a designated separating corepresentation
used by the degeneracy/co-involution checks. The two designated structures are
attached once by the model constructors (or by the caller, for hand-rolled
examples); operations that require them refuse to run otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LinearMap, StarAlgebra, StarHomReport, check_star_hom, tensor_algebra
from .errors import StructureError
from .tensor import DEFAULT_TOL, Matrix, frob, kron, span_equal, span_residual

__all__ = [
    "HopfAlgebra", "HopfReport", "verify_coassociativity",
    "verify_simplifiable", "hopf_report",
]


class HopfAlgebra:
    def __init__(self, algebra: StarAlgebra, delta: LinearMap, *,
                 label: str = "S", group=None, kind: str | None = None):
        if delta.domain is not algebra:
            raise StructureError("comultiplication must be defined on the algebra basis")
        if delta.out_dim != algebra.n * algebra.n:
            raise StructureError("comultiplication must land in the tensor-square ambient")
        self.algebra = algebra
        self.delta = delta
        self.label = label
        self.group = group
        self.kind = kind
        self.regular_pair = None      # CovariantPair for (S, S, delta)
        self.universal_corep = None   # separating Corepresentation
        self._square = None
        self._mu_span = None

    # -- designated structure ----------------------------------------------

    def attach(self, regular_pair, universal_corep) -> None:
        """Single-assignment attachment of the designated structures."""
        if self.regular_pair is not None or self.universal_corep is not None:
            raise StructureError("designated structures are already attached")
        self.regular_pair = regular_pair
        self.universal_corep = universal_corep

    def require_regular_pair(self):
        if self.regular_pair is None:
            raise StructureError(f"{self.label} carries no designated covariant pair")
        return self.regular_pair

    def require_universal_corep(self):
        if self.universal_corep is None:
            raise StructureError(f"{self.label} carries no designated separating corepresentation")
        return self.universal_corep

    @property
    def mu(self) -> LinearMap:
        """The representation part of the designated pair."""
        return self.require_regular_pair().pi

    def mu_span(self) -> StarAlgebra:
        """Image algebra of the designated representation (functional domain)."""
        if self._mu_span is None:
            mu = self.mu
            self._mu_span = StarAlgebra(mu.out_dim, mu.images, validate=False)
        return self._mu_span

    # -- derived data --------------------------------------------------------

    @property
    def square(self) -> StarAlgebra:
        if self._square is None:
            self._square = tensor_algebra(self.algebra, self.algebra)
        return self._square

    def delta_membership_residual(self) -> float:
        sq = self.square
        return max(span_residual(sq.basis, img) for img in self.delta.images)

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.label}, dim={self.algebra.dim})"


def verify_coassociativity(H: HopfAlgebra) -> float:
    """Max over basis x of || (delta (x) id)(delta x) - (id (x) delta)(delta x) ||."""
    n = H.algebra.n
    res = 0.0
    for img in H.delta.images:
        lhs = H.delta.apply_leg(img, (n, n), 1)
        rhs = H.delta.apply_leg(img, (n, n), 2)
        res = max(res, frob(lhs - rhs))
    return res


def verify_simplifiable(H: HopfAlgebra, side: str = "right",
                        tol: float = DEFAULT_TOL) -> bool:
    """Whether delta(S)(1 (x) S) (resp. delta(S)(S (x) 1)) spans S (x) S."""
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    S = H.algebra
    I = S.identity
    prods = []
    for img in H.delta.images:
        for s in S.basis:
            other = kron(I, s) if side == "right" else kron(s, I)
            prods.append(img @ other)
    return span_equal(prods, H.square.basis, tol=tol)


@dataclass
class HopfReport:
    hom: StarHomReport
    coassociativity: float
    membership: float
    right_simplifiable: bool
    left_simplifiable: bool

    def passes(self, tol: float = DEFAULT_TOL) -> bool:
        return (self.hom.passes(tol, require_injective=True)
                and self.coassociativity <= tol and self.membership <= tol)


def hopf_report(H: HopfAlgebra, tol: float = DEFAULT_TOL) -> HopfReport:
    return HopfReport(
        hom=check_star_hom(H.delta, tol),
        coassociativity=verify_coassociativity(H),
        membership=H.delta_membership_residual(),
        right_simplifiable=verify_simplifiable(H, "right", tol),
        left_simplifiable=verify_simplifiable(H, "left", tol),
    )
