"""Quad caps (Sidon sets): detection, size-dimension difference 3, and dimension-7 templates."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import PointSet, xor_all
from .matrix import Gf2Matrix


def find_quad(S: PointSet) -> tuple[int, int, int, int] | None:
    """Indices of four distinct points summing to zero, or None for a cap.

    Two distinct pairs with equal sums cannot share a point, so a collision
    among pair sums is exactly a quad.
    """
    seen: dict[int, tuple[int, int]] = {}
    pts = S.points
    for j in range(len(pts)):
        for i in range(j):
            s = pts[i] ^ pts[j]
            hit = seen.get(s)
            if hit is not None:
                return (*hit, i, j)
            seen[s] = (i, j)
    return None


def is_cap(S: PointSet) -> bool:
    return find_quad(S) is None


@dataclass(frozen=True, order=True)
class Diff3Class:
    """Sizes ``a <= b <= c`` of the three non-isolated regions of a k-cap of dimension k - 3."""

    a: int
    b: int
    c: int
    k: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def isolated(self) -> int:
        return self.k - (self.a + self.b + self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def diff3_is_cap_triple(a: int, b: int, c: int) -> bool:
    if min(a, b, c) < 0:
        raise ValueError("region sizes are nonnegative")
    if not a <= b <= c:
        raise ValueError(f"expected a <= b <= c, got ({a},{b},{c})")
    return a + b >= 6 and a % 2 == b % 2 == c % 2


def diff3_classes(k: int) -> list[Diff3Class]:
    """Equivalence classes of k-caps of dimension k - 3, ascending by (a, b, c)."""
    if k < 1:
        raise ValueError("k must be positive")
    out = []
    for a in range(k + 1):
        for b in range(a, k + 1 - a):
            for c in range(b, k + 1 - a - b):
                if diff3_is_cap_triple(a, b, c):
                    out.append(Diff3Class(a, b, c, k))
    return out


def construct_diff3_cap(cls: Diff3Class, k: int | None = None) -> PointSet:
    """A k-cap in F_2^(k-3) whose non-isolated regions have sizes a, b, c.

    Points ``x_1..x_{b-1}, y_1..y_{c-1}, z_1..z_a, w_1..`` are an affine basis
    (zero, then unit vectors); ``x_b`` and ``y_c`` close off the two dependent
    relations through the shared ``z`` block.
    """
    k = cls.k if k is None else k
    a, b, c = cls.triple
    if not diff3_is_cap_triple(a, b, c) or a + b + c > k:
        raise ValueError(f"{cls} is not realizable as a {k}-cap")
    n = k - 3
    free = [0] + [1 << j for j in range(n)]
    xs = free[: b - 1]
    ys = free[b - 1: b + c - 2]
    zs = free[b + c - 2: a + b + c - 2]
    ws = free[a + b + c - 2:]
    x_last = xor_all(xs) ^ xor_all(zs)
    y_last = xor_all(ys) ^ xor_all(zs)
    return PointSet(n, tuple(xs + [x_last] + ys + [y_last] + zs + ws))


@dataclass(frozen=True)
class CapTemplate:
    """A cap over the affine basis a_1..a_8; each dependent point is a sum of listed a_i (1-based)."""

    name: str
    dependent_expressions: tuple[tuple[int, ...], ...]
    basis_size: int = 8

    @property
    def size(self) -> int:
        return self.basis_size + len(self.dependent_expressions)

    def describe(self) -> list[str]:
        lines = []
        for i, expr in enumerate(self.dependent_expressions, 1):
            lines.append(f"x{i} = " + " + ".join(f"a{j}" for j in expr))
        return lines


def _run(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


_TEMPLATES = (
    CapTemplate("7-5-(4)", (_run(1, 7), _run(4, 8))),
    CapTemplate("5-5-(2)", (_run(1, 5), _run(4, 8))),
    CapTemplate("5-5-(3)", (_run(1, 5), _run(3, 7))),
    CapTemplate("7-5-5-(4,4,3)", (_run(1, 7), _run(4, 8), (1, 2, 6, 7, 8))),
    CapTemplate("5-5-5-(3,3,3)", (_run(1, 5), _run(3, 7), (1, 3, 4, 6, 8))),
    CapTemplate("5-5-5-(3,3,2)", (_run(1, 5), _run(3, 7), (1, 2, 3, 7, 8))),
    CapTemplate("7-5-5-5-(4,4,4,3,3,3)",
                (_run(1, 7), _run(4, 8), (1, 2, 6, 7, 8), (1, 3, 5, 7, 8))),
    CapTemplate("5-5-5-5-(2,3,3,3,3,3)",
                (_run(1, 5), (1, 2, 3, 7, 8), _run(3, 7), (2, 3, 4, 6, 8))),
    CapTemplate("5-5-5-5-(2,3,3,3,3,2)",
                (_run(1, 5), (1, 2, 3, 7, 8), _run(3, 7), (2, 4, 6, 7, 8))),
)

# Witness matrices relating consecutive templates of the same size.
REFERENCE_WITNESSES: dict[tuple[str, str], Gf2Matrix] = {
    ("7-5-5-(4,4,3)", "5-5-5-(3,3,3)"):
        Gf2Matrix.from_lists([[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
    ("5-5-5-(3,3,3)", "5-5-5-(3,3,2)"):
        Gf2Matrix.from_lists([[1, 0, 0], [1, 1, 0], [0, 0, 1]]),
    ("7-5-5-5-(4,4,4,3,3,3)", "5-5-5-5-(2,3,3,3,3,3)"):
        Gf2Matrix.from_lists([[1, 0, 1, 1], [0, 1, 1, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    ("5-5-5-5-(2,3,3,3,3,3)", "5-5-5-5-(2,3,3,3,3,2)"):
        Gf2Matrix.from_lists([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
}


def builtin_templates() -> list[CapTemplate]:
    return list(_TEMPLATES)


def get_template(name: str) -> CapTemplate:
    for t in _TEMPLATES:
        if t.name == name:
            return t
    raise KeyError(f"unknown template {name!r}")


def instantiate_template(t: CapTemplate, n: int = 7) -> PointSet:
    """Points a_1..a_7 = e_1..e_7, a_8 = 0, followed by the dependent points."""
    if n < t.basis_size - 1:
        raise ValueError(f"templates need n >= {t.basis_size - 1}")
    basis = [1 << j for j in range(t.basis_size - 1)] + [0]
    deps = []
    for expr in t.dependent_expressions:
        if any(not 1 <= j <= t.basis_size for j in expr):
            raise ValueError(f"expression {expr} refers outside a_1..a_{t.basis_size}")
        deps.append(xor_all(basis[j - 1] for j in expr))
    return PointSet(n, tuple(basis + deps))
