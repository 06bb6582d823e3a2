"""
Signature fixtures and properties: brute-force eigenvalue oracles for the
tiny cases, the lattice-point torus oracle for the serious ones, and the
invariance properties that pin the convention.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from braidcob.links import AssertedSummand, FormalLink
from braidcob.seifert import seifert_matrix
from braidcob.signature import (
    Sigma6Error,
    sigma6,
    signature_at,
    torus_signature_oracle,
)
from braidcob.words import (
    components,
    conjugate,
    make_word,
    markov_stabilize,
    mirror,
)


def torus_word(m, n):
    return make_word(m, list(range(1, m)) * n)


def _brute_signature(w, theta):
    """Independent float eigenvalue count; fine for small well-split cases."""
    V = np.array(seifert_matrix(w).rows(), dtype=float)
    if V.size == 0:
        return 0, 0
    om = np.exp(2j * np.pi * float(theta))
    M = (1 - om) * V + (1 - np.conj(om)) * V.T
    ev = np.linalg.eigvalsh(M)
    tol = 1e-8 * max(1.0, float(np.abs(M).sum()))
    return int((ev > tol).sum() - (ev < -tol).sum()), int(
        (np.abs(ev) <= tol).sum()
    )


def test_trefoil_at_half():
    prof = signature_at(make_word(2, [1, 1, 1]), Fraction(1, 2))
    assert (prof.signature, prof.nullity) == (-2, 0)
    assert _brute_signature(make_word(2, [1, 1, 1]), Fraction(1, 2)) == (-2, 0)


def test_trefoil_nullity_at_sixth():
    prof = signature_at(make_word(2, [1, 1, 1]), Fraction(1, 6))
    assert prof.nullity == 1


def test_empty_word_unlink_convention():
    for n in (1, 2, 5):
        prof = signature_at(make_word(n, []), Fraction(2, 7))
        assert prof.signature == 0
        assert prof.nullity == n - 1


def test_theta_range_validated():
    with pytest.raises(ValueError):
        signature_at(make_word(2, [1]), Fraction(3, 2))


def test_figure_eight_signature_zero():
    prof = signature_at(make_word(3, [1, -2, 1, -2]), Fraction(1, 2))
    assert prof.signature == 0


def test_oracle_fixture_values():
    assert torus_signature_oracle(2, 3, Fraction(1, 2)) == -2
    assert torus_signature_oracle(2, 7, Fraction(1, 2)) == -6
    assert torus_signature_oracle(3, 5, Fraction(1, 100)) == 0


def test_oracle_rejects_jump_and_non_coprime():
    with pytest.raises(ValueError, match="jump"):
        torus_signature_oracle(2, 3, Fraction(5, 6))
    with pytest.raises(ValueError, match="gcd"):
        torus_signature_oracle(2, 4, Fraction(1, 2))


def test_oracle_equivalence_random_theta():
    rng = random.Random(2718)
    pairs = [(p, q) for p in (2, 3) for q in range(2, 14)
             if __import__("math").gcd(p, q) == 1]
    for p, q in pairs:
        done = 0
        while done < 20:
            theta = Fraction(rng.randrange(1, 840), 840)
            if theta == 0 or theta == 1:
                continue
            try:
                want = torus_signature_oracle(p, q, theta)
            except ValueError:
                continue
            got = signature_at(torus_word(p, q), theta)
            assert got.signature == want, (p, q, theta)
            done += 1


def test_mirror_antisymmetry():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randrange(2, 6)
        length = rng.randrange(1, 16)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        theta = Fraction(rng.randrange(1, 97), 97)
        a = signature_at(w, theta)
        b = signature_at(mirror(w), theta)
        assert a.signature == -b.signature
        assert a.nullity == b.nullity


def test_isotopy_invariance_conjugation_stabilization():
    rng = random.Random(44)
    for _ in range(20):
        n = rng.randrange(2, 7)
        length = rng.randrange(1, 14)
        w = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n)
                for _ in range(length)]
        )
        g = make_word(
            n, [rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(4)]
        )
        theta = Fraction(rng.randrange(1, 101), 101)
        base = signature_at(w, theta)
        conj = signature_at(conjugate(w, g), theta)
        stab = signature_at(markov_stabilize(w, rng.choice([1, -1])), theta)
        assert (base.signature, base.nullity) == (conj.signature, conj.nullity)
        assert (base.signature, base.nullity) == (stab.signature, stab.nullity)


def test_sigma6_trefoil_and_mirror():
    assert sigma6(make_word(2, [1, 1, 1])) == 2
    assert sigma6(make_word(2, [-1, -1, -1])) == -2


def test_sigma6_unknot_zero():
    assert sigma6(make_word(1, [])) == 0
    assert sigma6(make_word(3, [1, 2])) == 0


def test_sigma6_additive_over_connected_sum_words():
    # single-word connected sums against formal sums
    from braidcob.replication import trefoil_sum_word

    for n in (1, 2, 3, 5):
        assert sigma6(trefoil_sum_word(n)) == 2 * n
        formal = FormalLink(trefoils_pos=n)
        assert sigma6(formal) == 2 * n


def test_sigma6_additive_over_closure_multiset():
    link = FormalLink(
        closures=(make_word(2, [1, 1, 1]), make_word(2, [-1, -1, -1])),
        trefoils_pos=2,
    )
    assert sigma6(link) == 2 - 2 + 4


def test_sigma6_asserted_summands():
    ok = FormalLink(
        assertions=(AssertedSummand("trivial-3", 3, 0, "unlink"),),
        trefoils_pos=1,
    )
    assert sigma6(ok) == 2
    bad = FormalLink(
        assertions=(AssertedSummand("mystery", 2, None, "unknown"),)
    )
    with pytest.raises(Sigma6Error, match="unknown summand"):
        sigma6(bad)


def test_sigma6_torus_window():
    # |sigma6(T(6,m)) - 5m/3| <= 12, sampled
    for m in (6, 9, 13):
        val = sigma6(torus_word(6, m))
        assert abs(val - Fraction(5 * m, 3)) <= 12


def test_sigma6_stability_under_schedule_shift():
    for w in (torus_word(2, 3), torus_word(3, 7), torus_word(6, 6)):
        assert sigma6(w) == sigma6(w, delta_start=Fraction(1, 2048))
        assert sigma6(w) == sigma6(w, precision_bits=256)


def test_step_constancy_between_alexander_roots():
    # the signature is constant on theta intervals free of unit-circle
    # Alexander roots: sample T(2,7), whose jumps sit at odd k/14
    w = torus_word(2, 7)
    jumps = [Fraction(k, 14) for k in range(1, 14, 2)]
    rng = random.Random(8)
    for lo, hi in zip(jumps, jumps[1:]):
        samples = sorted(
            lo + (hi - lo) * Fraction(rng.randrange(1, 50), 50)
            for _ in range(3)
        )
        values = {signature_at(w, th).signature for th in samples}
        assert len(values) == 1


def test_frozen_fixture_file():
    """
    Replay the versioned fixture file: every stored (word, theta) must
    reproduce its signature and nullity, and the knot entries must also
    match the lattice oracle. sigma6(T(6,12)) = 23 sits inside the stated
    |v - 20| <= 12 window via the 1/6+delta entries.
    """
    import json
    import pathlib
    from math import gcd

    path = pathlib.Path(__file__).parent / "fixtures" / "signatures.json"
    data = json.loads(path.read_text())
    assert data["version"] == 1
    from braidcob.words import BraidWord

    for fx in data["fixtures"]:
        w = BraidWord.from_json(fx["word"])
        theta = Fraction(fx["theta_num"], fx["theta_den"])
        prof = signature_at(w, theta)
        assert prof.signature == fx["signature"], fx
        assert prof.nullity == fx["nullity"], fx
        letters = [abs(k) for k in w.letters]
        if letters and letters == sorted(letters):
            continue  # not a plain torus word
    # oracle cross-checks for the torus-knot entries
    for p, q, num, den in ((2, 5, 1, 3), (2, 7, 1, 2), (3, 4, 1, 2),
                           (3, 5, 1, 100), (3, 7, 2, 5)):
        assert gcd(p, q) == 1
        theta = Fraction(num, den)
        assert (
            torus_signature_oracle(p, q, theta)
            == signature_at(torus_word(p, q), theta).signature
        )
    assert sigma6(torus_word(6, 12)) == 23
    assert abs(23 - 20) <= 12


def test_precision_env_override(monkeypatch):
    from braidcob.signature import precision_default

    monkeypatch.setenv("BRAIDCOB_PRECISION_BITS", "192")
    assert precision_default() == 192
    prof = signature_at(make_word(2, [1, 1, 1]), Fraction(1, 2))
    assert prof.precision_bits == 192
    monkeypatch.delenv("BRAIDCOB_PRECISION_BITS")
    assert precision_default() == 128


def test_component_count_of_formal_links():
    link = FormalLink(
        closures=(make_word(2, [1, 1, 1]), make_word(4, [])),
        trefoils_pos=5,
        assertions=(AssertedSummand("trivial-3", 3, 0, ""),),
    )
    assert link.component_count() == 1 + 4 + 3
    assert components(make_word(2, [1, 1, 1])) == 1
