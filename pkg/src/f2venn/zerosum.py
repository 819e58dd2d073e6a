"""The even zero-sum subspace E(S) of the power set of a point set.

Subsets of a point set are ``int`` masks over element indices; symmetric
difference is XOR.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import AffineDecomposition, PointSet, affine_decompose, iter_bits, popcount, xor_all

ENUMERATION_RANK_LIMIT = 24


@dataclass(frozen=True)
class ZeroSumSpace:
    decomposition: AffineDecomposition
    generators: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def dependent_mask(self) -> int:
        mask = 0
        for i in self.decomposition.dependent_indices:
            mask |= 1 << i
        return mask


def build_zero_sum_space(S: PointSet) -> ZeroSumSpace:
    """Basis of E(S): one set ``{w} | expression(w)`` per dependent point ``w``."""
    dec = affine_decompose(S)
    gens = tuple((1 << w) | dec.expression_mask(w) for w in dec.dependent_indices)
    return ZeroSumSpace(dec, gens)


def sumset(space: ZeroSumSpace, dependent_subset: int) -> int:
    """Symmetric difference of the generators named by a mask over dependent points."""
    if dependent_subset & ~space.dependent_mask:
        raise ValueError("mask selects points that are not dependent")
    index = {w: g for w, g in zip(space.decomposition.dependent_indices, space.generators)}
    return xor_all(index[w] for w in iter_bits(dependent_subset))


def enumerate_even_zero_sums(space: ZeroSumSpace) -> list[int]:
    """All 2^r members of E(S), ordered by coefficient vector (first generator most significant)."""
    if space.rank > ENUMERATION_RANK_LIMIT:
        raise ValueError(f"rank {space.rank} exceeds enumeration limit {ENUMERATION_RANK_LIMIT}")
    masks = [0]
    for g in reversed(space.generators):
        masks = masks + [m ^ g for m in masks]
    return masks


def is_even_zero_sum(S: PointSet, mask: int) -> bool:
    if mask >> len(S):
        raise ValueError("mask refers to elements outside the set")
    if popcount(mask) % 2:
        return False
    return xor_all(S.subset_points(mask)) == 0
