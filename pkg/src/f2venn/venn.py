"""Venn regions of a point set with respect to a basis of a subspace of its power set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import PointSet, express, iter_bits, linear_rank, popcount, xor_all
from .matrix import Gf2Matrix, dot, int_to_label, unit

VENN_RANK_LIMIT = 24


@dataclass(frozen=True)
class VennDiagram:
    """Regions indexed by label-encoded coordinate vectors ``a`` in F_2^r.

    ``region_of[0]`` is the isolated point set. Empty regions are kept so every
    coordinate vector has an entry.
    """

    size: int
    basis: tuple[int, ...]
    region_of: tuple[int, ...]
    signature_of_element: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(popcount(m) for m in self.region_of)

    def region(self, a: int) -> int:
        return self.region_of[a]

    def cardinality(self, a: int) -> int:
        return popcount(self.region_of[a])

    def labels(self) -> list[str]:
        return [int_to_label(a, self.rank) for a in range(1 << self.rank)]


def venn_diagram(S: PointSet | int, basis: Sequence[int]) -> VennDiagram:
    """Bucket the elements of ``S`` by their membership pattern across ``basis``.

    ``S`` may also be given as its size, since only element indices matter.
    """
    k = S if isinstance(S, int) else len(S)
    r = len(basis)
    if r > VENN_RANK_LIMIT:
        raise ValueError(f"rank {r} exceeds limit {VENN_RANK_LIMIT}")
    for m in basis:
        if m < 0 or m >> k:
            raise ValueError("basis mask refers to elements outside the set")
    if linear_rank(basis) != r:
        raise ValueError("basis sets are linearly dependent under symmetric difference")
    regions = [0] * (1 << r)
    signatures = []
    for x in range(k):
        a = 0
        for i, m in enumerate(basis):
            if (m >> x) & 1:
                a |= unit(i, r)
        signatures.append(a)
        regions[a] |= 1 << x
    return VennDiagram(k, tuple(basis), tuple(regions), tuple(signatures))


def zmap(basis: Sequence[int], b: int) -> int:
    """Symmetric difference of the basis sets in the support of ``b``."""
    r = len(basis)
    if b < 0 or b >> r:
        raise ValueError(f"coordinate vector does not fit in F_2^{r}")
    return xor_all(basis[i] for i in range(r) if b & unit(i, r))


def region_union_for_zmap(diagram: VennDiagram, b: int) -> int:
    """Union of the regions ``v(a)`` with ``a . b = 1``."""
    if b < 0 or b >> diagram.rank:
        raise ValueError(f"coordinate vector does not fit in F_2^{diagram.rank}")
    out = 0
    for a, region in enumerate(diagram.region_of):
        if dot(a, b):
            out |= region
    return out


def change_of_coordinates(M: Gf2Matrix) -> Gf2Matrix:
    """Region relabelling ``(M^T)^{-1}`` induced by a change of basis ``M``.

    With ``zeta_X(b) = zeta_Y(M b)``, the result ``P`` satisfies
    ``v_X(a) = v_Y(P a)``.
    """
    if not M.is_square:
        raise ValueError("change-of-basis matrix must be square")
    return M.transpose().inverse()


def change_of_basis_matrix(old: Sequence[int], new: Sequence[int]) -> Gf2Matrix:
    """The matrix ``M`` with ``zmap(old, b) == zmap(new, M b)`` for all ``b``."""
    r = len(old)
    if len(new) != r:
        raise ValueError("bases have different sizes")
    # column j of M^{-1} holds the old-basis coordinates of new[j]
    cols = []
    for y in new:
        combo = express(y, list(old))
        if combo is None:
            raise ValueError("new basis is not inside the span of the old basis")
        cols.append(sum(unit(i, r) for i in iter_bits(combo)))
    return Gf2Matrix.from_columns(cols, r).inverse()


def cardinality_profile(diagram: VennDiagram) -> tuple[tuple[int, ...], int]:
    """Sorted multiset of all 2^r region sizes, and the isolated count."""
    cards = diagram.cardinalities
    return tuple(sorted(cards)), cards[0]


def render_cardinality_table(diagram: VennDiagram, machine: bool = False) -> str:
    cards = diagram.cardinalities
    multiset, isolated = cardinality_profile(diagram)
    lines = []
    if machine:
        lines.append(f"k={diagram.size}")
        lines.append(f"r={diagram.rank}")
        lines.append(f"isolated={isolated}")
        lines.append("multiset=" + ",".join(map(str, multiset)))
        for label, c in zip(diagram.labels(), cards):
            lines.append(f"{label} {c}")
    else:
        width = max(diagram.rank, 1)
        lines.append(f"{'a':<{width}}  |v(a)|")
        for label, c in zip(diagram.labels(), cards):
            lines.append(f"{label:<{width}}  {c}")
        lines.append("multiset {" + ", ".join(map(str, multiset)) + "}")
        lines.append(f"isolated {isolated}")
    return "\n".join(lines)
