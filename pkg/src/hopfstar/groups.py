"""Finite groups, 2-cocycles, and their canonical matrix data.

Groups are validated multiplication tables over element indices 0..n-1 with
the identity at index 0. The text file format is: first line ``n``, then n
lines of n space-separated 0-based indices (row s, column t holds s*t).
Cocycle files hold n lines of n ``re,im`` pairs.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ValidationError
from .tensor import Matrix

__all__ = [
    "FiniteGroup", "Cocycle", "cyclic", "direct_product", "symmetric3",
    "dihedral", "quaternion8", "from_table", "regular_rep",
    "right_regular_rep", "inversion_unitary", "pauli_cocycle",
    "trivial_cocycle", "twisted_regular_rep", "parse_group_file",
    "parse_cocycle_file",
]


class FiniteGroup:
    """A finite group given by its multiplication table (identity = index 0)."""

    def __init__(self, table: np.ndarray, name: str = "G"):
        table = np.asarray(table, dtype=int)
        _validate_table(table)
        self.table = table
        self.table.setflags(write=False)
        self.order = table.shape[0]
        self.name = name
        inv = np.full(self.order, -1, dtype=int)
        for s in range(self.order):
            inv[s] = int(np.nonzero(table[s] == 0)[0][0])
        self.inverse = inv
        self.inverse.setflags(write=False)

    def mul(self, s: int, t: int) -> int:
        return int(self.table[s, t])

    def inv(self, s: int) -> int:
        return int(self.inverse[s])

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _validate_table(table: np.ndarray) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise ValidationError("table must be square")
    n = table.shape[0]
    if n < 1:
        raise ValidationError("group order must be positive")
    if table.min() < 0 or table.max() >= n:
        raise ValidationError("table entries must be indices in 0..n-1")
    for s in range(n):
        if len(set(table[s])) != n:
            raise ValidationError(f"row {s} is not a permutation (not a Latin square)")
        if len(set(table[:, s])) != n:
            raise ValidationError(f"column {s} is not a permutation (not a Latin square)")
    if any(table[0, t] != t for t in range(n)) or any(table[s, 0] != s for s in range(n)):
        raise ValidationError("index 0 must act as a two-sided identity")
    # associativity: (st)r == s(tr), vectorized over r
    for s in range(n):
        for t in range(n):
            lhs = table[table[s, t], :]
            rhs = table[s, table[t, :]]
            if not np.array_equal(lhs, rhs):
                r = int(np.nonzero(lhs != rhs)[0][0])
                raise ValidationError(f"associativity fails at triple ({s}, {t}, {r})")
    for s in range(n):
        if 0 not in table[s]:
            raise ValidationError(f"element {s} has no right inverse")


def from_table(raw, name: str = "G") -> FiniteGroup:
    return FiniteGroup(np.asarray(raw, dtype=int), name=name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError("cyclic group order must be >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    nG, nH = G.order, H.order
    table = np.zeros((nG * nH, nG * nH), dtype=int)
    for g1, h1 in itertools.product(range(nG), range(nH)):
        for g2, h2 in itertools.product(range(nG), range(nH)):
            table[g1 * nH + h1, g2 * nH + h2] = G.mul(g1, g2) * nH + H.mul(h1, h2)
    return FiniteGroup(table, name=f"{G.name}x{H.name}")


def symmetric3() -> FiniteGroup:
    perms = sorted(itertools.permutations(range(3)))  # identity (0,1,2) first
    index = {p: i for i, p in enumerate(perms)}
    table = np.zeros((6, 6), dtype=int)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            comp = tuple(p[q[x]] for x in range(3))  # (p o q)(x) = p(q(x))
            table[i, j] = index[comp]
    return FiniteGroup(table, name="S3")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: elements f*n + r with (r1,f1)(r2,f2) =
    (r1 + (-1)^f1 r2 mod n, f1 xor f2)."""
    order = 2 * n
    table = np.zeros((order, order), dtype=int)
    for f1, r1 in itertools.product(range(2), range(n)):
        for f2, r2 in itertools.product(range(2), range(n)):
            r = (r1 + (r2 if f1 == 0 else -r2)) % n
            table[f1 * n + r1, f2 * n + r2] = (f1 ^ f2) * n + r
    return FiniteGroup(table, name=f"D{n}")


def quaternion8() -> FiniteGroup:
    """Quaternion group {1, -1, i, -i, j, -j, k, -k} with 1 at index 0."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1", ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            c = b
        elif b == "1":
            c = a
        else:
            c = base[(a, b)]
        if c.startswith("-"):
            sign, c = -sign, c[1:]
        return c if sign == 1 else "-" + c

    index = {nm: i for i, nm in enumerate(names)}
    table = np.zeros((8, 8), dtype=int)
    for a in names:
        for b in names:
            table[index[a], index[b]] = index[mul(a, b)]
    return FiniteGroup(table, name="Q8")


# ---------------------------------------------------------------------------
# matrix data
# ---------------------------------------------------------------------------

def regular_rep(G: FiniteGroup, s: int) -> Matrix:
    """Left regular representation: the permutation matrix with
    lambda(s) d_t = d_{st}."""
    n = G.order
    if not 0 <= s < n:
        raise IndexError(f"element index {s} out of range for order {n}")
    P = np.zeros((n, n), dtype=complex)
    for t in range(n):
        P[G.mul(s, t), t] = 1.0
    return P


def right_regular_rep(G: FiniteGroup, s: int) -> Matrix:
    """Right regular representation: rho(s) d_t = d_{t s^-1} (also a
    homomorphism; commutes with the left one)."""
    n = G.order
    if not 0 <= s < n:
        raise IndexError(f"element index {s} out of range for order {n}")
    P = np.zeros((n, n), dtype=complex)
    si = G.inv(s)
    for t in range(n):
        P[G.mul(t, si), t] = 1.0
    return P


def inversion_unitary(G: FiniteGroup) -> Matrix:
    """The self-inverse permutation d_s -> d_{s^-1}; conjugation by it swaps
    the left and right regular representations."""
    n = G.order
    J = np.zeros((n, n), dtype=complex)
    for s in range(n):
        J[G.inv(s), s] = 1.0
    return J


# ---------------------------------------------------------------------------
# cocycles
# ---------------------------------------------------------------------------

class Cocycle:
    """A normalized unimodular 2-cocycle u(s, t) on a finite group."""

    def __init__(self, group: FiniteGroup, values: np.ndarray, tol: float = 1e-12):
        values = np.asarray(values, dtype=complex)
        n = group.order
        if values.shape != (n, n):
            raise ValidationError(f"cocycle table must be {n}x{n}")
        if np.any(np.abs(np.abs(values) - 1.0) > tol):
            raise ValidationError("cocycle values must be unimodular")
        if np.any(np.abs(values[0, :] - 1.0) > tol) or np.any(np.abs(values[:, 0] - 1.0) > tol):
            raise ValidationError("cocycle must be normalized: u(e, t) = u(s, e) = 1")
        tab = group.table
        for s in range(n):
            for t in range(n):
                lhs = values[s, t] * values[tab[s, t], :]
                rhs = values[t, :] * values[s, tab[t, :]]
                if np.any(np.abs(lhs - rhs) > tol):
                    r = int(np.nonzero(np.abs(lhs - rhs) > tol)[0][0])
                    raise ValidationError(f"cocycle identity fails at triple ({s}, {t}, {r})")
        self.group = group
        self.values = values
        self.values.setflags(write=False)

    def __call__(self, s: int, t: int) -> complex:
        return complex(self.values[s, t])

    def is_trivial(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.values - 1.0) <= tol))


def trivial_cocycle(G: FiniteGroup) -> Cocycle:
    return Cocycle(G, np.ones((G.order, G.order)))


def pauli_cocycle() -> Cocycle:
    """The sign cocycle u((a,b),(c,d)) = (-1)^(b*c) on Z2 x Z2 (the twist that
    turns the Klein four-group algebra into the Pauli matrix algebra)."""
    G = direct_product(cyclic(2), cyclic(2))
    vals = np.ones((4, 4), dtype=complex)
    for a, b in itertools.product(range(2), range(2)):
        for c, d in itertools.product(range(2), range(2)):
            vals[a * 2 + b, c * 2 + d] = (-1.0) ** (b * c)
    return Cocycle(G, vals)


def twisted_regular_rep(G: FiniteGroup, u: Cocycle, s: int) -> Matrix:
    """The u-twisted regular representation: lambda_u(s) d_t = u(s, t) d_{st},
    satisfying lambda_u(s) lambda_u(t) = u(s, t) lambda_u(st)."""
    if u.group is not G and not np.array_equal(u.group.table, G.table):
        raise ValidationError("cocycle is defined on a different group")
    n = G.order
    P = np.zeros((n, n), dtype=complex)
    for t in range(n):
        P[G.mul(s, t), t] = u(s, t)
    return P


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def parse_group_file(text: str, name: str = "G") -> FiniteGroup:
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines:
        raise ValidationError("empty group file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValidationError(f"first line must be the order, got {lines[0]!r}") from exc
    body = lines[1:]
    if len([ln for ln in body if ln]) != n or any(ln for ln in body[n:]):
        raise ValidationError(f"expected exactly {n} table rows")
    rows = []
    for i, ln in enumerate(body[:n]):
        parts = ln.split()
        if len(parts) != n:
            raise ValidationError(f"row {i} has {len(parts)} entries, expected {n}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError as exc:
            raise ValidationError(f"row {i} has a non-integer entry") from exc
    return from_table(rows, name=name)


def parse_cocycle_file(text: str, G: FiniteGroup) -> Cocycle:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = G.order
    if len(lines) != n:
        raise ValidationError(f"expected {n} cocycle rows, got {len(lines)}")
    vals = np.zeros((n, n), dtype=complex)
    for i, ln in enumerate(lines):
        parts = ln.split()
        if len(parts) != n:
            raise ValidationError(f"cocycle row {i} has {len(parts)} entries, expected {n}")
        for j, p in enumerate(parts):
            pieces = p.split(",")
            if len(pieces) != 2:
                raise ValidationError(f"entry ({i},{j}) must be 're,im', got {p!r}")
            try:
                vals[i, j] = complex(float(pieces[0]), float(pieces[1]))
            except ValueError as exc:
                raise ValidationError(f"entry ({i},{j}) is not numeric") from exc
    return Cocycle(G, vals)
