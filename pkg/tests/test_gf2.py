import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from f2venn.gf2 import (
    AffineMap,
    Gf2Vector,
    PointSet,
    affine_decompose,
    affine_map_from_bases,
    apply_map,
    dimension,
    extend_to_affine_basis,
    format_bitstring,
    is_affinely_independent,
    parse_bitstring,
    random_invertible_map,
    random_subset,
    xor_all,
)

from sample_sets import S1


def span_dimension(points):
    """Affine dimension by brute closure of the difference span."""
    if not points:
        return -1
    span = {0}
    for p in points[1:]:
        d = p ^ points[0]
        span |= {s ^ d for s in span}
    return len(span).bit_length() - 1


@st.composite
def point_sets(draw, max_n=6, max_k=12):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, min(max_k, 1 << n)))
    pts = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k, unique=True))
    return PointSet(n, tuple(pts))


def test_bitstring_orientation():
    assert parse_bitstring("100", 3) == 1
    assert parse_bitstring("001 1", 4) == 0b1100
    assert format_bitstring(0b1100, 4) == "0011"
    assert format_bitstring(parse_bitstring("111 111 100", 9), 9, group=3) == "111 111 100"


@pytest.mark.parametrize("text", ["10", "1021", ""])
def test_bitstring_rejects_bad_input(text):
    with pytest.raises(ValueError):
        parse_bitstring(text, 3)


def test_vector_addition_and_coordinates():
    u, v = Gf2Vector.parse("110", 3), Gf2Vector.parse("011", 3)
    assert str(u + v) == "101"
    assert u.coordinate(1) == 1 and u.coordinate(3) == 0
    with pytest.raises(ValueError):
        u + Gf2Vector.parse("11", 2)


def test_pointset_validation():
    with pytest.raises(ValueError, match="duplicate"):
        PointSet.from_bitstrings(["101", "101"])
    with pytest.raises(ValueError):
        PointSet(0, ())
    with pytest.raises(ValueError):
        PointSet(65, ())
    with pytest.raises(ValueError):
        PointSet(2, (4,))
    with pytest.raises(ValueError):
        PointSet(7, tuple(range(65)))
    PointSet(64, ((1 << 64) - 1,))


def test_running_decomposition():
    dec = affine_decompose(S1)
    assert dec.basis_indices == tuple(range(10))
    assert dec.dependent_indices == (10, 11, 12)
    assert dec.dimension == 9
    assert dec.expressions[10] == tuple(range(7))
    assert dec.expressions[11] == tuple(range(3, 10))
    assert dec.expressions[12] == (2, 3, 7)


def test_dimension_edge_cases():
    assert dimension(PointSet(3, ())) == -1
    assert dimension(PointSet(3, (5,))) == 0
    assert dimension(PointSet(3, (0, 1, 2, 3))) == 2
    assert is_affinely_independent(PointSet(3, (0, 1, 2, 4)))
    assert not is_affinely_independent(PointSet(3, (0, 1, 2, 3)))


@settings(max_examples=300, deadline=None)
@given(point_sets())
def test_decomposition_invariants(S):
    dec = affine_decompose(S)
    assert len(dec.basis_indices) + len(dec.dependent_indices) == len(S)
    for w, expr in dec.expressions.items():
        assert len(expr) % 2 == 1
        assert set(expr) <= set(dec.basis_indices)
        assert xor_all(S[i] for i in expr) == S[w]
    B = PointSet(S.n, tuple(S[i] for i in dec.basis_indices))
    assert affine_decompose(B).dependent_indices == ()
    assert dec.dimension == span_dimension(list(S.points))


def test_dimension_invariant_under_affine_maps():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 6)
        S = random_subset(rng, n, rng.randint(0, min(12, 1 << n)))
        f = random_invertible_map(rng, n)
        assert dimension(apply_map(f, S)) == dimension(S)


def test_map_examples():
    S = PointSet.from_bitstrings(["000", "110", "011"])
    assert apply_map(AffineMap.identity(3), S) == S
    t = parse_bitstring("101", 3)
    moved = apply_map(AffineMap.translation_by(3, t), S)
    assert moved.points == tuple(p ^ t for p in S.points)
    with pytest.raises(ValueError, match="injective"):
        apply_map(AffineMap(3, (0, 0, 0)), S)
    with pytest.raises(ValueError):
        apply_map(AffineMap.identity(4), S)


def test_map_rows_and_compose():
    f = AffineMap.from_rows([[1, 1], [0, 1]], translation=1)
    assert f.rows() == [[1, 1], [0, 1]]
    assert f.is_invertible()
    g = AffineMap.from_rows([[1, 0], [1, 1]], translation=2)
    h = f.compose(g)
    assert all(h(x) == f(g(x)) for x in range(4))
    assert not AffineMap.from_rows([[1, 1], [1, 1]]).is_invertible()


def test_extend_and_solve_bases():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 7)
        pts = list(PointSet(n, tuple(rng.sample(range(1 << n), min(1 << n, n + 1)))).points)
        dec = affine_decompose(PointSet(n, tuple(pts)))
        src = extend_to_affine_basis([pts[i] for i in dec.basis_indices], n)
        assert len(src) == n + 1 and dimension(PointSet(n, tuple(src))) == n
        f = random_invertible_map(rng, n)
        dst = [f(p) for p in src]
        assert affine_map_from_bases(src, dst, n) == f
    with pytest.raises(ValueError):
        extend_to_affine_basis([0, 1, 2, 3], 3)


def _even_zero_sum_sets(n):
    for size in (2, 4):
        for combo in combinations(range(1 << n), size):
            if xor_all(combo) == 0:
                yield combo


def test_affine_maps_preserve_even_zero_sums():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(2, 6)
        f = AffineMap(n, tuple(rng.getrandbits(n) for _ in range(n)), rng.getrandbits(n))
        size = rng.choice([2, 4, 6])
        pts = [rng.getrandbits(n) for _ in range(size - 1)]
        pts.append(xor_all(pts))
        # image as a multiset: paired duplicates cancel, parity and sum survive
        image = [f(x) for x in pts]
        assert len(image) % 2 == 0 and xor_all(image) == 0


def test_non_affine_bijections_break_some_zero_sum():
    rng = random.Random(3)
    planes = list(_even_zero_sum_sets(3))
    found = 0
    while found < 50:
        perm = list(range(8))
        rng.shuffle(perm)
        t = perm[0]
        lin = [perm[x] ^ t for x in range(8)]
        affine = all(lin[x ^ y] == lin[x] ^ lin[y] for x in range(8) for y in range(8))
        if affine:
            assert all(xor_all(perm[x] for x in p) == 0 for p in planes)
            continue
        found += 1
        assert any(xor_all(perm[x] for x in p) != 0 for p in planes)
