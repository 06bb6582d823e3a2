"""
One-variable Alexander polynomials of braid closures.

alexander(w) is the symmetrized Seifert determinant det(t^{1/2}V -
t^{-1/2}V^T), stored as the integer coefficient vector of det(tV - V^T)
with unit factors t^k cleared and the top coefficient made positive. For
knots this is the Alexander polynomial; for links it is the determinant
form of the surface, which still vanishes exactly at the signature jumps.

The determinant over Z[t] is computed by evaluation at h+1 integer points
followed by exact interpolation. Small matrices are eliminated over the
rationals directly. Large ones are evaluated modulo 30-bit primes with
numpy and reconstructed by CRT: primes are added until the symmetric lifts
are stable twice in a row, then the Hadamard bound caps the worst case, so
the result is exact.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

import numpy as np

from .seifert import SeifertMatrix, seifert_matrix
from .words import BraidWord

_SMALL_SIZE = 48


@dataclasses.dataclass(frozen=True)
class AlexanderPolynomial:
    """Coefficients, lowest degree first; (0,) is the zero polynomial."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            term = "1" if abs(c) == 1 and d else str(abs(c))
            if d == 1:
                term = f"{term}*t" if term != "1" else "t"
            elif d > 1:
                term = f"{term}*t^{d}" if term != "1" else f"t^{d}"
            parts.append(("-" if c < 0 else "+") + term)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def _normalize(coeffs: list[int]) -> AlexanderPolynomial:
    lo, hi = 0, len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if hi == lo:
        return AlexanderPolynomial((0,))
    while coeffs[lo] == 0:
        lo += 1
    out = coeffs[lo:hi]
    if out[-1] < 0:
        out = [-c for c in out]
    return AlexanderPolynomial(tuple(out))


def _det_fraction(M: list[list[Fraction]]) -> Fraction:
    """Plain fraction Gaussian elimination; exact."""
    h = len(M)
    det = Fraction(1)
    M = [row[:] for row in M]
    for k in range(h):
        piv = next((r for r in range(k, h) if M[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        inv = 1 / M[k][k]
        for r in range(k + 1, h):
            f = M[r][k] * inv
            if f:
                row, base = M[r], M[k]
                for c in range(k + 1, h):
                    row[c] -= f * base[c]
                row[k] = Fraction(0)
    return det


def _det_mod_p(M: np.ndarray, p: int, width: int | None = None) -> int:
    """
    Gaussian elimination mod a 30-bit prime; int64 stays in range. When the
    matrix has bandwidth `width`, pivoting keeps the column support within
    width+1 rows and the row support within 2*width+1 columns, so the
    elimination only touches that window.
    """
    M = M % p
    h = M.shape[0]
    det = 1
    for k in range(h):
        rhi = h if width is None else min(h, k + width + 2)
        chi = h if width is None else min(h, k + 2 * width + 2)
        nz = np.nonzero(M[k:rhi, k])[0]
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            M[[k, piv]] = M[[piv, k]]
            det = p - det
        d = int(M[k, k])
        det = (det * d) % p
        if k + 1 < rhi:
            dinv = pow(d, p - 2, p)
            factors = (M[k + 1:rhi, k] * dinv) % p
            M[k + 1:rhi, k + 1:chi] = (
                M[k + 1:rhi, k + 1:chi]
                - factors[:, None] * M[k, k + 1:chi][None, :]
            ) % p
    return det


def _primes_30bit():
    n = (1 << 30) - 35
    while True:
        n += 2
        for q in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            if n % q == 0:
                break
        else:
            if all(
                pow(a, n - 1, n) == 1 for a in (2, 3, 5, 7, 11, 13, 17)
            ):
                yield n


def _hadamard_log2(V: np.ndarray, tmax: int) -> float:
    A = np.abs(tmax * V.astype(float)) + np.abs(V.T.astype(float))
    norms = np.sqrt((A * A).sum(axis=1))
    norms[norms == 0] = 1.0
    return float(np.log2(norms).sum())


def _symmetric_bandwidth(V: np.ndarray) -> int:
    idx = np.nonzero(V + V.T + np.eye(V.shape[0], dtype=V.dtype))
    return int(np.max(np.abs(idx[0] - idx[1]))) if idx[0].size else 0


def _det_values_exact(V: np.ndarray, points: list[int]) -> list[int]:
    """det(t*V - V^T) at each integer point, exact via CRT over primes."""
    h = V.shape[0]
    width = _symmetric_bandwidth(V)
    if 3 * width >= h:
        width = None
    bound_bits = _hadamard_log2(V, max(abs(t) for t in points) or 1) + 2
    residues = [0] * len(points)
    modulus = 1
    stable = 0
    lifted: list[int] | None = None
    for p in _primes_30bit():
        vals = []
        for t in points:
            M = (t * V - V.T).astype(np.int64)
            vals.append(_det_mod_p(M, p, width))
        new_res = []
        for r, v in zip(residues, vals):
            # CRT combine r (mod modulus) with v (mod p)
            inc = ((v - r) * pow(modulus % p, p - 2, p)) % p
            new_res.append(r + modulus * inc)
        residues = new_res
        modulus *= p
        new_lifted = [
            r if r <= modulus // 2 else r - modulus for r in residues
        ]
        stable = stable + 1 if new_lifted == lifted else 0
        lifted = new_lifted
        if stable >= 2 or math.log2(modulus) > bound_bits + 1:
            return lifted
    raise AssertionError("unreachable")


def _interpolate_int(points: list[int], values: list[int]) -> list[int]:
    """Exact Newton interpolation; the result must be an integer polynomial."""
    m = len(points)
    dd = [Fraction(v) for v in values]
    for lvl in range(1, m):
        for i in range(m - 1, lvl - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - lvl])
    coeffs = [Fraction(0)] * m
    basis = [Fraction(1)]
    for k in range(m):
        for d, c in enumerate(basis):
            coeffs[d] += dd[k] * c
        if k + 1 < m:
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d + 1] += c
                new[d] -= points[k] * c
            basis = new
    assert all(c.denominator == 1 for c in coeffs), "non-integer determinant"
    return [int(c) for c in coeffs]


def seifert_determinant_polynomial(V: SeifertMatrix) -> AlexanderPolynomial:
    """Normalized det(tV - V^T) for a prebuilt Seifert matrix."""
    if V.pieces > 1:
        # tubing the surface pieces together adds zero rows, so any split
        # closure has vanishing determinant polynomial
        return AlexanderPolynomial((0,))
    h = V.size
    if h == 0:
        return AlexanderPolynomial((1,))
    points = list(range(-(h // 2), h - (h // 2) + 1))
    rows = V.rows()
    if len(V.loop_starts) == h:
        # simultaneous row/column permutation to time-major order keeps the
        # determinant and makes the matrix banded
        order = sorted(range(h), key=lambda i: V.loop_starts[i])
        rows = [[rows[i][j] for j in order] for i in order]
    if h <= _SMALL_SIZE:
        values = []
        for t in points:
            M = [
                [Fraction(t * rows[i][j] - rows[j][i]) for j in range(h)]
                for i in range(h)
            ]
            values.append(int(_det_fraction(M)))
    else:
        values = _det_values_exact(np.array(rows, dtype=np.int64), points)
    return _normalize(_interpolate_int(points, values))


def alexander(w: BraidWord) -> AlexanderPolynomial:
    """Symmetrized Seifert determinant of the closure of w, normalized."""
    return seifert_determinant_polynomial(seifert_matrix(w))
