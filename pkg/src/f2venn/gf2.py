"""Bit-packed vectors, point sets and affine structure over GF(2).

A point of F_2^n is an ``int`` whose bit ``i`` holds coordinate ``i + 1``, so the
leftmost character of a bitstring is bit 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_DIM = 64
MAX_POINTS = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def iter_bits(mask: int):
    """Yield the positions of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def xor_all(values: Iterable[int]) -> int:
    acc = 0
    for v in values:
        acc ^= v
    return acc


def parse_bitstring(text: str, n: int) -> int:
    """Parse a bitstring such as ``"111 111 100"`` into a point of F_2^n."""
    digits = "".join(text.split())
    if len(digits) != n:
        raise ValueError(f"expected {n} binary digits, got {len(digits)} in {text!r}")
    bits = 0
    for i, ch in enumerate(digits):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise ValueError(f"non-binary character {ch!r} in {text!r}")
    return bits


def format_bitstring(bits: int, n: int, group: int = 0) -> str:
    s = "".join("1" if (bits >> i) & 1 else "0" for i in range(n))
    if group > 0:
        s = " ".join(s[i:i + group] for i in range(0, n, group))
    return s


@dataclass(frozen=True)
class Gf2Vector:
    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits set beyond the ambient dimension")

    @classmethod
    def parse(cls, text: str, n: int) -> "Gf2Vector":
        return cls(parse_bitstring(text, n), n)

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.n != other.n:
            raise ValueError("ambient dimensions differ")
        return Gf2Vector(self.bits ^ other.bits, self.n)

    __xor__ = __add__

    def coordinate(self, j: int) -> int:
        """Coordinate ``j`` counted from 1."""
        return (self.bits >> (j - 1)) & 1

    def __str__(self) -> str:
        return format_bitstring(self.bits, self.n)


@dataclass(frozen=True)
class PointSet:
    """Ordered, duplicate-free points of F_2^n."""

    n: int
    points: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(int(p) for p in self.points))
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {self.n}")
        if len(self.points) > MAX_POINTS:
            raise ValueError(f"at most {MAX_POINTS} points are supported")
        seen = set()
        for p in self.points:
            if p < 0 or p >> self.n:
                raise ValueError(f"point {p:#x} does not fit in F_2^{self.n}")
            if p in seen:
                raise ValueError(f"duplicate point {format_bitstring(p, self.n)}")
            seen.add(p)

    @classmethod
    def from_bitstrings(cls, strings: Sequence[str], n: int | None = None) -> "PointSet":
        if n is None:
            if not strings:
                raise ValueError("cannot infer ambient dimension of an empty set")
            n = len("".join(strings[0].split()))
        return cls(n, tuple(parse_bitstring(s, n) for s in strings))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> int:
        return self.points[i]

    def vector(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.points[i], self.n)

    def bitstrings(self) -> list[str]:
        return [format_bitstring(p, self.n) for p in self.points]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.points)

    def subset_points(self, mask: int) -> list[int]:
        return [self.points[i] for i in iter_bits(mask)]

    def permuted(self, order: Sequence[int]) -> "PointSet":
        return PointSet(self.n, tuple(self.points[i] for i in order))


class _Eliminator:
    """Incremental row reduction of vectors, each tagged with a combination mask."""

    def __init__(self):
        self._pivots: dict[int, tuple[int, int]] = {}

    def reduce(self, vec: int, combo: int = 0) -> tuple[int, int]:
        while vec:
            top = vec.bit_length() - 1
            hit = self._pivots.get(top)
            if hit is None:
                break
            vec ^= hit[0]
            combo ^= hit[1]
        return vec, combo

    def add(self, vec: int, combo: int) -> bool:
        """Insert ``vec``; return False (and leave the basis alone) if it is dependent."""
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return False
        self._pivots[vec.bit_length() - 1] = (vec, combo)
        return True

    def __len__(self) -> int:
        return len(self._pivots)


def linear_rank(vectors: Iterable[int]) -> int:
    elim = _Eliminator()
    for v in vectors:
        elim.add(v, 0)
    return len(elim)


def greedy_basis(vectors: Iterable[int]) -> list[int]:
    """Vectors kept in order whenever they are independent of those already kept."""
    elim = _Eliminator()
    return [v for v in vectors if elim.add(v, 0)]


def express(vec: int, basis: Sequence[int]) -> int | None:
    """Mask of ``basis`` positions whose XOR is ``vec``, or None if outside the span.

    ``basis`` must be linearly independent.
    """
    elim = _Eliminator()
    for i, b in enumerate(basis):
        if not elim.add(b, 1 << i):
            raise ValueError("basis vectors are linearly dependent")
    rest, combo = elim.reduce(vec, 0)
    return combo if rest == 0 else None


@dataclass(frozen=True)
class AffineDecomposition:
    """Split of a point set into an affine basis and odd-sum expressions of the rest."""

    size: int
    basis_indices: tuple[int, ...]
    dependent_indices: tuple[int, ...]
    expressions: dict[int, tuple[int, ...]] = field(hash=False, compare=True)

    @property
    def dimension(self) -> int:
        return len(self.basis_indices) - 1

    def expression_mask(self, dep_index: int) -> int:
        mask = 0
        for i in self.expressions[dep_index]:
            mask |= 1 << i
        return mask


def affine_decompose(S: PointSet) -> AffineDecomposition:
    """Greedy left-to-right affine basis of ``S``.

    A point joins the basis when its difference with the first point is linearly
    independent of the earlier differences; otherwise its unique odd-size
    expression over the basis is recorded.
    """
    if not S.points:
        return AffineDecomposition(0, (), (), {})
    x0 = S.points[0]
    basis = [0]
    dependent = []
    expressions: dict[int, tuple[int, ...]] = {}
    elim = _Eliminator()
    for i in range(1, len(S.points)):
        diff = S.points[i] ^ x0
        rest, combo = elim.reduce(diff, 0)
        if rest:
            elim.add(diff, 1 << i)
            basis.append(i)
            continue
        # x_i + x_0 = sum_{j in J} (x_j + x_0); x_0 survives iff |J| is even
        members = list(iter_bits(combo))
        if len(members) % 2 == 0:
            members.insert(0, 0)
        dependent.append(i)
        expressions[i] = tuple(members)
    return AffineDecomposition(len(S.points), tuple(basis), tuple(dependent), expressions)


def dimension(S: PointSet) -> int:
    """Affine dimension; -1 for the empty set."""
    return affine_decompose(S).dimension


def is_affinely_independent(S: PointSet) -> bool:
    return dimension(S) == len(S) - 1


@dataclass(frozen=True)
class AffineMap:
    """``x -> L x + t`` on F_2^n; ``columns[j]`` is the image of the j-th unit vector."""

    n: int
    columns: tuple[int, ...]
    translation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        if len(self.columns) != self.n:
            raise ValueError("linear part must have n columns")
        for c in (*self.columns, self.translation):
            if c < 0 or c >> self.n:
                raise ValueError("entry does not fit in F_2^n")

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(n, tuple(1 << j for j in range(n)))

    @classmethod
    def translation_by(cls, n: int, t: int) -> "AffineMap":
        return cls(n, tuple(1 << j for j in range(n)), t)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], translation: int = 0) -> "AffineMap":
        n = len(rows)
        cols = [0] * n
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("linear part must be square")
            for j, e in enumerate(row):
                if e & 1:
                    cols[j] |= 1 << i
        return cls(n, tuple(cols), translation)

    def linear(self, x: int) -> int:
        acc = 0
        for j in iter_bits(x):
            acc ^= self.columns[j]
        return acc

    def __call__(self, x: int) -> int:
        return self.linear(x) ^ self.translation

    def rows(self) -> list[list[int]]:
        return [[(c >> i) & 1 for c in self.columns] for i in range(self.n)]

    def is_invertible(self) -> bool:
        return linear_rank(self.columns) == self.n

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self`` after ``inner``."""
        return AffineMap(self.n, tuple(self.linear(c) for c in inner.columns),
                         self(inner.translation))


def apply_map(f: AffineMap, S: PointSet) -> PointSet:
    if f.n != S.n:
        raise ValueError(f"map acts on F_2^{f.n} but the set lives in F_2^{S.n}")
    image = tuple(f(x) for x in S.points)
    if len(set(image)) != len(image):
        raise ValueError("map is not injective on the set")
    return PointSet(S.n, image)


def extend_to_affine_basis(points: Sequence[int], n: int) -> list[int]:
    """Extend affinely independent ``points`` (non-empty) to n + 1 points spanning F_2^n."""
    if not points:
        points = [0]
    x0 = points[0]
    elim = _Eliminator()
    for p in points[1:]:
        if not elim.add(p ^ x0, 0):
            raise ValueError("points are not affinely independent")
    out = list(points)
    for j in range(n):
        if len(out) == n + 1:
            break
        if elim.add(1 << j, 0):
            out.append(x0 ^ (1 << j))
    return out


def affine_map_from_bases(src: Sequence[int], dst: Sequence[int], n: int) -> AffineMap:
    """The unique affine map sending affine basis ``src`` of F_2^n onto ``dst`` pointwise."""
    if len(src) != n + 1 or len(dst) != n + 1:
        raise ValueError("affine bases of F_2^n have n + 1 points")
    src_diffs = [p ^ src[0] for p in src[1:]]
    dst_diffs = [p ^ dst[0] for p in dst[1:]]
    cols = []
    for j in range(n):
        combo = express(1 << j, src_diffs)
        if combo is None:
            raise ValueError("source points do not span F_2^n")
        cols.append(xor_all(dst_diffs[i] for i in iter_bits(combo)))
    lin = AffineMap(n, tuple(cols))
    return AffineMap(n, lin.columns, dst[0] ^ lin.linear(src[0]))


def random_subset(rng, n: int, size: int) -> PointSet:
    """Uniform ``size``-subset of F_2^n in random order; ``rng`` is a ``random.Random``."""
    return PointSet(n, tuple(rng.sample(range(1 << n), size)))


def random_invertible_map(rng, n: int) -> AffineMap:
    while True:
        cols = tuple(rng.getrandbits(n) for _ in range(n))
        if linear_rank(cols) == n:
            return AffineMap(n, cols, rng.getrandbits(n))
