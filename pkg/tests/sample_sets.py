"""Worked instances shared by the test modules."""

from f2venn.gf2 import PointSet, xor_all

N = 9
# a_1..a_9 are the unit vectors of F_2^9 and a_10 is zero
A = [1 << j for j in range(N)] + [0]


def _point(*indices):
    return xor_all(A[i - 1] for i in indices)


W = [_point(*range(1, 8)), _point(*range(4, 11)), _point(3, 4, 8)]
X = [
    _point(1, 2, 3, 7, 8, 9, 10),
    _point(3, 4, 5, 6, 7, 9, 10),
    _point(1, 2, 4, 7, 8, 9, 10),
]
Y = [_point(1, 2, 3, 4, 5), _point(4, 5, 8, 9, 10), _point(3, 4, 6, 7, 8)]

S1 = PointSet(N, tuple(A + W))
S2 = PointSet(N, tuple(A + X))
S3 = PointSet(N, tuple(A + Y))

RUNNING_TEXT = """\
# a1..a10 then w1..w3
100 000 000
010 000 000
001 000 000
000 100 000
000 010 000
000 001 000
000 000 100
000 000 010
000 000 001
000 000 000
111 111 100
000 111 111
001 100 010
"""

# |v(a)| columns keyed by label, for S1, S2, S3
RUNNING_CARDS = {
    "000": (0, 0, 0),
    "100": (3, 1, 3),
    "010": (3, 3, 3),
    "001": (1, 1, 3),
    "110": (3, 1, 1),
    "101": (1, 3, 1),
    "011": (1, 1, 1),
    "111": (1, 3, 1),
}

ELEVEN_CAP_CARDS = {
    "7-5-5-(4,4,3)": {"000": 0, "100": 2, "010": 1, "001": 1, "110": 2, "011": 1, "101": 2, "111": 2},
    "5-5-5-(3,3,3)": {"000": 0, "100": 2, "010": 2, "001": 2, "110": 1, "011": 1, "101": 1, "111": 2},
    "5-5-5-(3,3,2)": {"000": 0, "100": 1, "010": 2, "001": 2, "110": 2, "011": 1, "101": 2, "111": 1},
}

_TWELVE_LABELS = ["0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001",
                  "0110", "0101", "0011", "1110", "1101", "1011", "0111", "1111"]
TWELVE_CAP_CARDS = {
    "7-5-5-5-(4,4,4,3,3,3)": dict(zip(_TWELVE_LABELS, [0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1])),
    "5-5-5-5-(2,3,3,3,3,3)": dict(zip(_TWELVE_LABELS, [0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1])),
    "5-5-5-5-(2,3,3,3,3,2)": dict(zip(_TWELVE_LABELS, [0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 0])),
}

DIFF3_COUNTS = {k: c for k, c in zip(range(8, 28), [
    0, 1, 2, 4, 7, 10, 14, 19, 25, 31, 39, 47, 57, 67, 79, 91, 106, 120, 137, 154])}
