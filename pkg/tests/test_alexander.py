"""
Alexander polynomial fixtures against an independent reduced-Burau oracle,
plus internal consistency of the modular determinant path.
"""

import random
from fractions import Fraction

import importlib

from braidcob.alexander import alexander

alexander_mod = importlib.import_module("braidcob.alexander")
from braidcob.words import (
    components,
    conjugate,
    make_word,
    markov_stabilize,
    mirror,
)


def torus_word(m, n):
    return make_word(m, list(range(1, m)) * n)


# --- independent oracle: reduced Burau determinant ------------------------
# For a knot closure of an n-braid b, det(Burau(b) - I) equals the Alexander
# polynomial times (1 + t + ... + t^{n-1}) up to units.


class _Poly:
    """Laurent polynomials over Q, dict degree -> Fraction."""

    def __init__(self, coeffs=None):
        self.c = {d: Fraction(v) for d, v in (coeffs or {}).items() if v}

    def __add__(self, o):
        out = dict(self.c)
        for d, v in o.c.items():
            out[d] = out.get(d, Fraction(0)) + v
        return _Poly(out)

    def __sub__(self, o):
        out = dict(self.c)
        for d, v in o.c.items():
            out[d] = out.get(d, Fraction(0)) - v
        return _Poly(out)

    def __mul__(self, o):
        out = {}
        for d1, v1 in self.c.items():
            for d2, v2 in o.c.items():
                out[d1 + d2] = out.get(d1 + d2, Fraction(0)) + v1 * v2
        return _Poly(out)

    def normalized_tuple(self):
        if not self.c:
            return (0,)
        lo, hi = min(self.c), max(self.c)
        coeffs = [self.c.get(d, Fraction(0)) for d in range(lo, hi + 1)]
        assert all(v.denominator == 1 for v in coeffs)
        out = [int(v) for v in coeffs]
        if out[-1] < 0:
            out = [-v for v in out]
        return tuple(out)


def _burau_matrix(letter, n):
    """Reduced Burau of sigma_i^{+-1} acting on C^{n-1}, rows as _Poly."""
    i = abs(letter)
    t = _Poly({1: 1})
    tinv = _Poly({-1: 1})
    one = _Poly({0: 1})
    M = [[one if r == c else _Poly() for c in range(n - 1)]
         for r in range(n - 1)]
    if letter > 0:
        M[i - 1][i - 1] = _Poly({1: -1})
        if i - 2 >= 0:
            M[i - 1][i - 2] = t
        if i < n - 1:
            M[i - 1][i] = one
    else:
        M[i - 1][i - 1] = _Poly({-1: -1})
        if i - 2 >= 0:
            M[i - 1][i - 2] = one
        if i < n - 1:
            M[i - 1][i] = tinv
    return M


def _mat_mul(A, B):
    n = len(A)
    return [
        [sum((A[r][k] * B[k][c] for k in range(n)), _Poly())
         for c in range(n)]
        for r in range(n)
    ]


def _burau_alexander(w):
    """Alexander polynomial of a knot closure via reduced Burau, normalized."""
    n = w.strands
    M = [[_Poly({0: 1}) if r == c else _Poly() for c in range(n - 1)]
         for r in range(n - 1)]
    for k in w.letters:
        M = _mat_mul(M, _burau_matrix(k, n))
    for r in range(n - 1):
        M[r][r] = M[r][r] - _Poly({0: 1})
    # cofactor determinant over the Laurent ring (sizes here are tiny)
    def det(rows):
        m = len(rows)
        if m == 0:
            return _Poly({0: 1})
        if m == 1:
            return rows[0][0]
        total = _Poly()
        for c in range(m):
            minor = [r[:c] + r[c + 1:] for r in rows[1:]]
            term = rows[0][c] * det(minor)
            total = total + term if c % 2 == 0 else total - term
        return total

    d = det(M)
    # divide by 1 + t + ... + t^{n-1} via polynomial long division
    quot, rem = _divide(d, _Poly({i: 1 for i in range(n)}))
    assert not rem.c, "Burau determinant not divisible by the t-cyclotomic"
    return quot.normalized_tuple()


def _divide(num, den):
    if not num.c:
        return _Poly(), _Poly()
    lo = min(num.c)
    shifted = {d - lo: v for d, v in num.c.items()}
    dlo = min(den.c)
    dden = {d - dlo: v for d, v in den.c.items()}
    dhi = max(dden)
    lead = dden[dhi]
    quot = {}
    while shifted and max(shifted) >= dhi:
        hi = max(shifted)
        q = shifted[hi] / lead
        s = hi - dhi
        quot[s] = q
        for d, v in dden.items():
            nd = d + s
            shifted[nd] = shifted.get(nd, Fraction(0)) - q * v
            if not shifted[nd]:
                del shifted[nd]
    return (
        _Poly({d + lo - dlo: v for d, v in quot.items()}),
        _Poly(shifted),
    )


def test_trefoil():
    assert alexander(make_word(2, [1, 1, 1])).coefficients == (1, -1, 1)


def test_unknot():
    assert alexander(make_word(1, [])).coefficients == (1,)
    assert alexander(make_word(3, [1, 2])).coefficients == (1,)


def test_figure_eight():
    assert alexander(make_word(3, [1, -2, 1, -2])).coefficients == (1, -3, 1)


def test_torus_2_5():
    assert alexander(torus_word(2, 5)).coefficients == (1, -1, 1, -1, 1)


def test_split_closure_vanishes():
    assert alexander(make_word(2, [1, -1])).is_zero()


def test_against_burau_oracle_on_knots():
    rng = random.Random(17)
    checked = 0
    while checked < 12:
        n = rng.randrange(2, 5)
        length = rng.randrange(3, 12)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        if components(w) != 1:
            continue
        got = alexander(w).coefficients
        want = _burau_alexander(w)
        assert got == want or got == tuple(reversed(want)), (w, got, want)
        checked += 1


def test_invariance_under_markov_moves():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randrange(2, 5)
        length = rng.randrange(1, 12)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        g = make_word(n, [rng.choice([1, -1]) * rng.randrange(1, n)
                          for _ in range(3)])
        assert alexander(conjugate(w, g)).coefficients == \
            alexander(w).coefficients
        assert alexander(markov_stabilize(w, 1)).coefficients == \
            alexander(w).coefficients


def test_mirror_invariance():
    w = torus_word(3, 4)
    assert alexander(mirror(w)).coefficients == alexander(w).coefficients


def test_symmetry_of_coefficients():
    for w in (torus_word(3, 5), torus_word(2, 9),
              make_word(4, [1, -2, 3, 1, -2, 3])):
        c = alexander(w).coefficients
        assert c == tuple(reversed(c)) or c == tuple(
            -x for x in reversed(c)
        )


def test_modular_path_matches_exact_path():
    w = torus_word(3, 26)  # size 50 exceeds the small-path threshold
    big = alexander(w).coefficients
    saved = alexander_mod._SMALL_SIZE
    try:
        alexander_mod._SMALL_SIZE = 10_000
        exact = alexander(w).coefficients
    finally:
        alexander_mod._SMALL_SIZE = saved
    assert big == exact


def test_evaluation_helper():
    p = alexander(make_word(2, [1, 1, 1]))
    assert p(Fraction(1)) == 1
    assert p(Fraction(-1)) == 3  # determinant of the trefoil
