"""
Seifert matrix fixtures. The local entry rules are pinned here before
anything downstream: the positive trefoil must produce [[-1,1],[0,-1]],
the figure eight the right Alexander polynomial, and det(V - V^T) = +-1
for every knot closure.
"""

import random

from braidcob.seifert import seifert_matrix
from braidcob.words import components, make_word


def _det_int(rows):
    from fractions import Fraction

    h = len(rows)
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for k in range(h):
        piv = next((r for r in range(k, h) if M[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        inv = 1 / M[k][k]
        for r in range(k + 1, h):
            f = M[r][k] * inv
            if f:
                for c in range(k, h):
                    M[r][c] -= f * M[k][c]
    return int(det)


def test_trefoil_matrix():
    V = seifert_matrix(make_word(2, [1, 1, 1]))
    assert V.size == 2
    assert V.entries == ((-1, 1), (0, -1))
    assert V.components == 1
    assert V.euler_char == -1


def test_empty_word_matrix():
    V = seifert_matrix(make_word(1, []))
    assert V.size == 0
    assert V.components == 1
    V4 = seifert_matrix(make_word(4, []))
    assert V4.size == 0 and V4.pieces == 4 and V4.components == 4


def test_figure_eight_matrix():
    V = seifert_matrix(make_word(3, [1, -2, 1, -2]))
    assert V.size == 2
    rows = V.rows()
    d = _det_int(
        [[rows[i][j] - rows[j][i] for j in range(2)] for i in range(2)]
    )
    assert d in (1, -1)


def test_size_formula():
    rng = random.Random(12)
    for _ in range(60):
        n = rng.randrange(2, 7)
        length = rng.randrange(0, 25)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        V = seifert_matrix(w)
        assert V.size == len(w.letters) - w.strands + V.pieces
        assert V.euler_char == w.strands - len(w.letters)


def test_intersection_form_unimodular_for_knots():
    rng = random.Random(13)
    seen = 0
    while seen < 25:
        n = rng.randrange(2, 6)
        length = rng.randrange(n, 20)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        V = seifert_matrix(w)
        if components(w) != 1 or V.pieces != 1:
            continue
        seen += 1
        rows = V.rows()
        h = V.size
        d = _det_int(
            [[rows[i][j] - rows[j][i] for j in range(h)] for i in range(h)]
        )
        assert d in (1, -1), f"det(V-V^T)={d} for {w}"


def test_loop_starts_metadata():
    V = seifert_matrix(make_word(3, [1, 2, 1, 2, 1, 2]))
    assert len(V.loop_starts) == V.size
    assert all(isinstance(s, int) for s in V.loop_starts)
