"""Affine equivalence of point sets through their Venn cardinality diagrams.

Two sets are affinely equivalent exactly when some invertible ``N`` over F_2^r
satisfies ``|v_S(a)| == |v_T(N a)|`` for every coordinate vector ``a``, where
the diagrams are taken with respect to bases of the even zero-sum spaces.
"""

from __future__ import annotations

import collections
import functools
import random
from dataclasses import dataclass, field

import numpy as np

from .gf2 import (
    AffineDecomposition,
    AffineMap,
    PointSet,
    affine_decompose,
    affine_map_from_bases,
    apply_map,
    extend_to_affine_basis,
    greedy_basis,
    iter_bits,
    random_invertible_map,
    random_subset,
    xor_all,
)
from .matrix import Gf2Matrix
from .venn import VennDiagram, cardinality_profile, venn_diagram
from .zerosum import build_zero_sum_space

SEARCH_RANK_LIMIT = 20
REFINE_RANK_LIMIT = 12
ORACLE_DIM_LIMIT = 4


def zero_sum_diagram(S: PointSet) -> VennDiagram:
    """Venn diagram of ``S`` with respect to the generators of E(S)."""
    return venn_diagram(S, build_zero_sum_space(S).generators)


@dataclass(frozen=True)
class Verdict:
    matrix: Gf2Matrix | None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.matrix is not None


def _mix(x: np.ndarray) -> np.ndarray:
    x = x * np.uint64(0xBF58476D1CE4E5B9)
    x ^= x >> np.uint64(29)
    x = x * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(32))


def _refine(cs: tuple[int, ...], ct: tuple[int, ...], r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Colour every coordinate vector by an invariant finer than its region size.

    A vector's new colour is its old colour plus a hash of the multiset of
    ``(colour(b), colour(a + b))`` over all b. Any cardinality-preserving linear
    bijection maps colours onto equal colours, so matching colours instead of
    sizes prunes the search without losing witnesses. The hash depends only on
    the multiset, so a collision can merge classes but never separates vectors
    that a bijection could match.
    """
    size = 1 << r
    idx = np.arange(size, dtype=np.int64)
    block = max(1, (1 << 20) // size)
    colours = [np.asarray(c, dtype=np.uint64) for c in (cs, ct)]
    classes = len(set(cs) | set(ct))
    while True:
        keys = []
        for col in colours:
            sums = np.empty(size, dtype=np.uint64)
            for lo in range(0, size, block):
                rows = idx[lo:lo + block, None] ^ idx[None, :]
                pair = _mix(col[None, :] * np.uint64(0x9E3779B97F4A7C15) + col[rows])
                sums[lo:lo + block] = pair.sum(axis=1, dtype=np.uint64)
            keys.append(list(zip(col.tolist(), sums.tolist())))
        index = {key: i for i, key in enumerate(sorted(set(keys[0]) | set(keys[1])))}
        colours = [np.array([index[k] for k in ks], dtype=np.uint64) for ks in keys]
        if len(index) == classes:
            break
        classes = len(index)
    return tuple(colours[0].tolist()), tuple(colours[1].tolist())


def search_basis(cs: tuple[int, ...], r: int) -> list[int]:
    """Labels of nonempty regions forming a basis of F_2^r, chosen in label order.

    The element signatures of a Venn diagram over a basis span F_2^r, so a
    linear map is fixed by its values on these labels.
    """
    basis = greedy_basis(a for a in range(1 << r) if cs[a])
    if len(basis) != r:
        raise ValueError("nonempty regions do not span the coordinate space")
    return basis


def _search(cs: tuple[int, ...], ct: tuple[int, ...], basis: list[int],
            targets: list[int]) -> Gf2Matrix | None:
    # images of the region basis are assigned in order: the label itself first,
    # so equal diagrams give the identity, then every label in ascending order
    r = len(basis)
    images: list[int] = []
    span: list[tuple[int, int]] = [(0, 0)]

    def extend(j: int) -> bool:
        if j == r:
            return True
        b = basis[j]
        used = {im for _, im in span}
        for c in [b] + [c for c in targets if c != b]:
            if c in used or ct[c] != cs[b]:
                continue
            fresh = [(a ^ b, im ^ c) for a, im in span]
            if any(cs[a] != ct[im] for a, im in fresh):
                continue
            images.append(c)
            span.extend(fresh)
            if extend(j + 1):
                return True
            del span[len(span) - len(fresh):]
            images.pop()
        return False

    if not extend(0):
        return None
    src = Gf2Matrix.from_columns(basis, r)
    return Gf2Matrix.from_columns(images, r) @ src.inverse()


def _pair_colours(S: PointSet) -> list[list[int]]:
    """``[x][y]``: how many pairs of S share the sum of points x and y."""
    counts = collections.Counter(S[x] ^ S[y] for x in range(len(S)) for y in range(x))
    return [[counts[S[x] ^ S[y]] if x != y else 0 for y in range(len(S))] for x in range(len(S))]


def _refine_points(cs: list[int], ct: list[int], es: list[list[int]],
                   et: list[list[int]]) -> tuple[list[int], list[int]]:
    # colour of x becomes its old colour plus the multiset of (colour(y), pair colour)
    while True:
        keys = [
            [(c[x], tuple(sorted((c[y], e[x][y]) for y in range(len(c)) if y != x)))
             for x in range(len(c))]
            for c, e in ((cs, es), (ct, et))
        ]
        index = {key: i for i, key in enumerate(sorted(set(keys[0]) | set(keys[1])))}
        new_s, new_t = [index[k] for k in keys[0]], [index[k] for k in keys[1]]
        if len(index) == len(set(cs) | set(ct)):
            return new_s, new_t
        cs, ct = new_s, new_t


def _affine_search(S: PointSet, T: PointSet, dec: AffineDecomposition,
                   colour_s: list[int], colour_t: list[int]) -> list[int] | None:
    """Element bijection induced by the first affine map carrying S onto T, or None.

    Affine basis points of S are sent to points of T, trying the point with the
    same index first and then all of them in index order. Colours and
    pair-sum multiplicities are affine invariants and must agree with every point
    already placed. A dependent point becomes checkable once its expression is
    fully assigned, and its image must then be an unused point of T.
    """
    es, et = _pair_colours(S), _pair_colours(T)
    colour_s, colour_t = _refine_points(colour_s, colour_t, es, et)
    if sorted(colour_s) != sorted(colour_t):
        return None
    basis = dec.basis_indices
    depth = {i: j for j, i in enumerate(basis)}
    due: list[list[int]] = [[] for _ in basis]
    for w in dec.dependent_indices:
        due[max(depth[i] for i in dec.expressions[w])].append(w)
    where = {p: i for i, p in enumerate(T.points)}
    g = [-1] * len(S)
    used = [False] * len(T)
    placed: list[int] = []

    def fits(x: int, y: int) -> bool:
        return (not used[y] and colour_t[y] == colour_s[x]
                and all(es[x][z] == et[y][g[z]] for z in placed))

    def extend(j: int) -> bool:
        if j == len(basis):
            return True
        x = basis[j]
        mark = len(placed)
        for y in [x] + [y for y in range(len(T)) if y != x]:
            if not fits(x, y):
                continue
            g[x], used[y] = y, True
            placed.append(x)
            for w in due[j]:
                image = where.get(xor_all(T[g[i]] for i in dec.expressions[w]))
                if image is None or not fits(w, image):
                    break
                g[w], used[image] = image, True
                placed.append(w)
            else:
                if extend(j + 1):
                    return True
            for z in placed[mark:]:
                used[g[z]] = False
                g[z] = -1
            del placed[mark:]
        return False

    return g if extend(0) else None


def _matrix_from_bijection(ds: VennDiagram, dt: VennDiagram, g: list[int]) -> Gf2Matrix:
    """The linear map sending the signature of each x to the signature of g(x)."""
    r = ds.rank
    src, dst = [], []
    for x, sig in enumerate(ds.signature_of_element):
        if len(greedy_basis(src + [sig])) > len(src):
            src.append(sig)
            dst.append(dt.signature_of_element[g[x]])
    N = Gf2Matrix.from_columns(dst, r) @ Gf2Matrix.from_columns(src, r).inverse()
    if any(N.apply(a) != dt.signature_of_element[g[x]]
           for x, a in enumerate(ds.signature_of_element)):
        raise RuntimeError("element bijection does not induce a linear map")
    return N


def equivalence_verdict(S: PointSet, T: PointSet) -> Verdict:
    """Decide equivalence and name the first failing invariant when there is none."""
    if len(S) != len(T):
        return Verdict(None, "size")
    dec_s, dec_t = affine_decompose(S), affine_decompose(T)
    if dec_s.dimension != dec_t.dimension:
        return Verdict(None, "dimension")
    r = len(dec_s.dependent_indices)
    if r > SEARCH_RANK_LIMIT:
        raise ValueError(f"rank {r} exceeds search limit {SEARCH_RANK_LIMIT}")
    ds, dt = zero_sum_diagram(S), zero_sum_diagram(T)
    (ms, iso_s), (mt, iso_t) = cardinality_profile(ds), cardinality_profile(dt)
    if ms != mt:
        return Verdict(None, "multiset")
    if iso_s != iso_t:
        return Verdict(None, "isolated")
    if r == 0:
        return Verdict(Gf2Matrix(0, 0, ()))
    cs, ct = ds.cardinalities, dt.cardinalities
    if r <= dec_s.dimension + 1:
        if r <= REFINE_RANK_LIMIT:
            cs, ct = _refine(cs, ct, r)
            if sorted(cs) != sorted(ct):
                return Verdict(None, "search")
        targets = [c for c in range(1, 1 << r) if dt.cardinalities[c]]
        N = _search(cs, ct, search_basis(ds.cardinalities, r), targets)
    else:
        # few basis points and many relations: searching affine maps is cheaper
        g = _affine_search(S, T, dec_s, [cs[a] for a in ds.signature_of_element],
                           [ct[a] for a in dt.signature_of_element])
        N = None if g is None else _matrix_from_bijection(ds, dt, g)
    if N is None:
        return Verdict(None, "search")
    return Verdict(N)


def venn_equivalent(S: PointSet, T: PointSet) -> Gf2Matrix | None:
    """A cardinality-preserving linear bijection, or None.

    When ``r <= dim(S) + 1`` the result is the first one in search order over
    images of the region basis. Otherwise it is the matrix induced by the first
    affine map found over the affine basis of S. Either way ``venn_equivalent(S, S)``
    is the identity.
    """
    return equivalence_verdict(S, T).matrix


def validate_witness_matrix(S: PointSet, T: PointSet, N: Gf2Matrix) -> bool:
    ds, dt = zero_sum_diagram(S), zero_sum_diagram(T)
    if not (ds.rank == dt.rank == N.nrows == N.ncols):
        raise ValueError(
            f"ranks differ: S has {ds.rank}, T has {dt.rank}, matrix is {N.nrows}x{N.ncols}")
    if not N.is_invertible():
        return False
    cs, ct = ds.cardinalities, dt.cardinalities
    return all(cs[a] == ct[b] for a, b in enumerate(N.apply_all()))


def element_bijection(S: PointSet, T: PointSet, N: Gf2Matrix) -> tuple[int, ...]:
    """Index map S -> T sending region ``a`` onto region ``N a``, both in index order."""
    ds, dt = zero_sum_diagram(S), zero_sum_diagram(T)
    g = [-1] * len(S)
    for a, b in enumerate(N.apply_all()):
        src = list(iter_bits(ds.region_of[a]))
        dst = list(iter_bits(dt.region_of[b]))
        if len(src) != len(dst):
            raise ValueError("matrix does not preserve region cardinalities")
        for x, y in zip(src, dst):
            g[x] = y
    return tuple(g)


def reconstruct_affine_map(S: PointSet, T: PointSet, N: Gf2Matrix) -> AffineMap:
    """Affine automorphism of F_2^n with ``f(S) == T`` built from a witness matrix."""
    if S.n != T.n:
        raise ValueError("sets live in different ambient spaces")
    if not validate_witness_matrix(S, T, N):
        raise ValueError("matrix is not a cardinality-preserving linear bijection")
    g = element_bijection(S, T, N)
    basis = affine_decompose(S).basis_indices
    if not basis:
        return AffineMap.identity(S.n)
    src = extend_to_affine_basis([S[i] for i in basis], S.n)
    dst = extend_to_affine_basis([T[g[i]] for i in basis], T.n)
    f = affine_map_from_bases(src, dst, S.n)
    if not f.is_invertible() or any(f(S[i]) != T[g[i]] for i in range(len(S))):
        raise RuntimeError("reconstructed map does not carry S onto T")
    return f


@dataclass(frozen=True)
class EquivalenceWitness:
    matrix: Gf2Matrix
    element_bijection: tuple[int, ...]
    affine_map: AffineMap


def find_witness(S: PointSet, T: PointSet) -> EquivalenceWitness | None:
    N = venn_equivalent(S, T)
    if N is None:
        return None
    return EquivalenceWitness(N, element_bijection(S, T, N), reconstruct_affine_map(S, T, N))


def equivalent_diff3(S: PointSet, T: PointSet) -> bool:
    """Equivalence test for sets with ``|S| - dim(S) == 3``, by profile alone."""
    for name, X in (("S", S), ("T", T)):
        if len(X) - affine_decompose(X).dimension != 3:
            raise ValueError(f"{name} does not have size-dimension difference 3")
    return cardinality_profile(zero_sum_diagram(S)) == cardinality_profile(zero_sum_diagram(T))


def general_linear_group(n: int):
    """Yield every invertible n x n matrix as the tuple of its column images."""

    def rec(cols: list[int], span: set[int]):
        if len(cols) == n:
            yield tuple(cols)
            return
        for c in range(1, 1 << n):
            if c in span:
                continue
            cols.append(c)
            yield from rec(cols, span | {s ^ c for s in span})
            cols.pop()

    yield from rec([], {0})


@functools.lru_cache(maxsize=None)
def _linear_tables(n: int) -> np.ndarray:
    """Row per invertible matrix: the image of every point of F_2^n."""
    rows = []
    for cols in general_linear_group(n):
        table = [0] * (1 << n)
        for x in range(1, 1 << n):
            low = x & -x
            table[x] = table[x ^ low] ^ cols[low.bit_length() - 1]
        rows.append(table)
    return np.array(rows, dtype=np.int64)


def brute_force_equivalent(S: PointSet, T: PointSet) -> bool:
    """Search the full affine group of F_2^n (n <= 4) for a map carrying S onto T."""
    if S.n != T.n:
        raise ValueError("sets live in different ambient spaces")
    if S.n > ORACLE_DIM_LIMIT:
        raise ValueError(f"oracle supports n <= {ORACLE_DIM_LIMIT}, got {S.n}")
    if len(S) != len(T):
        return False
    if not S.points:
        return True
    tables = _linear_tables(S.n)
    in_t = np.zeros(1 << S.n, dtype=bool)
    in_t[list(T.points)] = True
    images = tables[:, list(S.points)]
    for t in range(1 << S.n):
        if in_t[images ^ t].all(axis=1).any():
            return True
    return False


def brute_force_map(S: PointSet, T: PointSet) -> AffineMap | None:
    """First affine automorphism (in enumeration order) carrying S onto T, or None."""
    if not brute_force_equivalent(S, T):
        return None
    target = T.as_set()
    for cols in general_linear_group(S.n):
        for t in range(1 << S.n):
            f = AffineMap(S.n, cols, t)
            if {f(x) for x in S} == target:
                return f
    raise RuntimeError("oracle tables and direct enumeration disagree")


@dataclass
class SweepReport:
    pairs: int = 0
    equivalent: int = 0
    discrepancies: list[tuple[PointSet, PointSet]] = field(default_factory=list)
    unsound: list[tuple[PointSet, PointSet]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.unsound


def random_pair(rng: random.Random, n: int, max_size: int) -> tuple[PointSet, PointSet]:
    """A pair of subsets of F_2^n; about half are affine images of each other."""
    size = rng.randint(1, max_size)
    S = random_subset(rng, n, size)
    roll = rng.random()
    if roll < 0.5:
        image = list(apply_map(random_invertible_map(rng, n), S).points)
        rng.shuffle(image)
        return S, PointSet(n, tuple(image))
    if roll < 0.9:
        return S, random_subset(rng, n, size)
    return S, random_subset(rng, n, rng.randint(1, max_size))


def oracle_sweep(n: int, pairs: int, max_size: int, seed: int = 0) -> SweepReport:
    """Compare the Venn decision with exhaustive search on seeded random pairs."""
    rng = random.Random(seed)
    report = SweepReport()
    for _ in range(pairs):
        S, T = random_pair(rng, n, max_size)
        N = venn_equivalent(S, T)
        truth = brute_force_equivalent(S, T)
        report.pairs += 1
        if (N is not None) != truth:
            report.discrepancies.append((S, T))
            continue
        if N is None:
            continue
        report.equivalent += 1
        try:
            f = reconstruct_affine_map(S, T, N)
            sound = f.is_invertible() and apply_map(f, S).as_set() == T.as_set()
        except (ValueError, RuntimeError):
            sound = False
        if not sound:
            report.unsound.append((S, T))
    return report
