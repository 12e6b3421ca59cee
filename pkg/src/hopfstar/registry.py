"""Built-in example registry: named groups (order <= 8) and suite names."""

from __future__ import annotations

from .groups import FiniteGroup, cyclic, dihedral, direct_product, quaternion8, symmetric3

_BUILDERS = {
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z5": lambda: cyclic(5),
    "Z6": lambda: cyclic(6),
    "Z7": lambda: cyclic(7),
    "Z8": lambda: cyclic(8),
    "Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2)),
    "Z2xZ4": lambda: direct_product(cyclic(2), cyclic(4)),
    "Z2xZ2xZ2": lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
    "S3": symmetric3,
    "D4": lambda: dihedral(4),
    "Q8": quaternion8,
}

SUITES = (
    "hopf-axioms",
    "corep",
    "convolution",
    "crossed-product",
    "dual",
    "biduality",
    "pentagon",
    "counterexample-twisted",
)


def group_names() -> list[str]:
    return list(_BUILDERS)


def get_group(name: str) -> FiniteGroup:
    if name not in _BUILDERS:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(_BUILDERS)}")
    G = _BUILDERS[name]()
    G.name = name
    return G


def registry_text() -> str:
    lines = ["groups:"]
    lines += [f"  {name} (order {get_group(name).order})" for name in group_names()]
    lines.append("suites:")
    lines += [f"  {s}" for s in SUITES]
    return "\n".join(lines)
