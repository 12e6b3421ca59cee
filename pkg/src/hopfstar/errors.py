"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Tensor factor dimensions do not match the ambient matrix size."""


class ValidationError(ValueError):
    """Structured input (group table, cocycle, representation) failed validation."""


class StructureError(RuntimeError):
    """Operation needs structure the object does not carry (e.g. a designated
    covariant pair), or the object fails a structural precondition."""


class UniversalityError(RuntimeError):
    """A factorization through a crossed product is inconsistent on the
    spanning relations beyond tolerance."""


class CoinvolutionError(RuntimeError):
    """No functional satisfies the adjoint-slice relation within tolerance."""


class DecompositionError(RuntimeError):
    """Block decomposition did not stabilize numerically."""
