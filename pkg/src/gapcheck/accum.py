"""Accumulation-point scans: primes from N^2 + (2a/b) N +- c drive {sqrt(p)}
toward the rational target a/b.

Admissible N are the residue class making (2a/b) N integral; each emitted
record carries the exact prime, the fractional part mu at certified
precision, the exact deviation |mu - a/b| as a decimal, and flags for the
side, envelope and monotone-approach claims.  Every flag is decided exactly
(mu is a one-radicand value); violations are reported in the record, never
raised, since the monotone claim is only argued for the +-1 families.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .exact import _sign_1rad, _sign_2rad
from .primes import is_prime_u64

F = Fraction


@dataclass(frozen=True)
class RationalTarget:
    a: int
    b: int

    def __post_init__(self):
        if not (self.b >= 1 and 0 <= self.a <= self.b):
            raise ValueError("need 0 <= a <= b, b >= 1")
        if gcd(self.a, self.b) != 1:
            raise ValueError("a/b must be in lowest terms")

    @property
    def value(self) -> Fraction:
        return F(self.a, self.b)

    def __str__(self):
        return f"{self.a}/{self.b}"


def parse_target(text: str) -> RationalTarget:
    if "/" in text:
        a, b = text.split("/", 1)
        return RationalTarget(int(a), int(b))
    return RationalTarget(int(text), 1)


@dataclass
class AccumRecord:
    N: int
    p: int
    mu_digits: str
    abs_err_digits: str
    side_ok: bool = True
    envelope_ok: bool = True
    monotone_ok: bool = True

    def row(self) -> list:
        return [self.N, self.p, self.mu_digits, self.abs_err_digits]

    @property
    def ok(self) -> bool:
        return self.side_ok and self.envelope_ok and self.monotone_ok


class ScanError(ValueError):
    pass


def mu_decimal(p: int, digits: int = 5) -> str:
    """{sqrt(p)} rounded to the given digits, via exact integer sqrt."""
    M = isqrt(p)
    u = isqrt(4 * p * 10 ** (2 * digits))  # floor(2 sqrt(p) 10^digits)
    rounded = (u + 1) // 2 - M * 10 ** digits
    if rounded >= 10 ** digits:  # rounds up to 1.000...
        return f"1.{'0' * digits}"
    return f"0.{rounded:0{digits}d}"


def mu_truncated(p: int, digits: int = 5) -> str:
    """{sqrt(p)} truncated (not rounded) to the given digits."""
    M = isqrt(p)
    t = isqrt(p * 10 ** (2 * digits)) - M * 10 ** digits
    return f"0.{t:0{digits}d}"


def _mu_side(p: int, target: Fraction) -> int:
    """Exact sign of {sqrt(p)} - target."""
    return _sign_1rad(F(-(isqrt(p) + target)), F(1), p)


def _abs_err_cmp(p1: int, r: Fraction, p2: int, side: int) -> int:
    """sign(|mu(p1) - r| - |mu(p2) - r|) when both mus sit on the same given
    side of r (side = -1: mu < r, +1: mu > r)."""
    m1, m2 = isqrt(p1), isqrt(p2)
    return _sign_2rad(F(side * (m2 - m1)), F(side), p1, F(-side), p2)


def _err_decimal(p: int, r: Fraction, digits: int = 6) -> str:
    """|{sqrt(p)} - r| truncated to the given digits."""
    M = isqrt(p)
    s = _mu_side(p, r)
    scale = 10 ** digits
    t = r.denominator
    big = isqrt(p * (scale * t) ** 2)       # floor(sqrt(p) t scale)
    off = (M * t + r.numerator) * scale
    if s > 0:
        val = (big - off) // t
    else:
        val = (off - big - 1) // t
    val = max(val, 0)
    return f"{val // scale}.{val % scale:0{digits}d}"


def accum_scan(r: RationalTarget, sign: str, c: int = 1,
               N_max: int = 10 ** 4, max_records: int | None = None,
               digits: int = 5) -> list[AccumRecord]:
    """Scan N^2 + (2a/b) N +- c over admissible N; one record per prime hit.

    Exact per-record checks: the prime equals the polynomial value with
    floor(sqrt(p)) = N, mu sits on the claimed side of a/b, the +-1 envelope
    holds, and |mu - a/b| strictly decreases along the emitted sequence.
    An empty result is valid output.
    """
    if sign not in ("+", "-"):
        raise ScanError("sign must be '+' or '-'")
    sgn = 1 if sign == "+" else -1
    a, b = r.a, r.b
    if not (0 < a < b):
        raise ScanError("general scans need 0 < a < b; use special_scans at the ends")
    if c < 1:
        raise ScanError("c must be a positive integer")
    step = b // gcd(b, 2 * a)
    records: list[AccumRecord] = []
    prev_p = None
    target = r.value
    for N in range(step, N_max + 1, step):
        if c != 1 and N % c == 0:
            continue  # the prime-q variant requires N not divisible by q
        val = N * N + (2 * a * N) // b + sgn * c
        if val < 2 or val >= 1 << 64 or not is_prime_u64(val):
            continue
        if isqrt(val) != N:
            continue  # mu would measure against a different root
        p = val
        M = N
        rec = AccumRecord(N=N, p=p, mu_digits=mu_decimal(p, digits),
                          abs_err_digits=_err_decimal(p, target))
        rec.side_ok = _mu_side(p, target) == sgn
        if c == 1:
            if sign == "-":
                # a/b - a/(b sqrt(p)) - 1/(2 sqrt(p)) < mu < a/b - 1/(2N)
                lo_ok = _sign_1rad(F(-M) - target,
                                   1 + F(2 * a + b, 2 * b) * F(1, p), p) > 0
                hi_ok = _sign_1rad(F(-M) - target + F(1, 2 * N), F(1), p) < 0
            else:
                # a/b - a/(b sqrt(p)) + 1/(2 sqrt(p)) < mu < a/b + 1/(2N)
                lo_ok = _sign_1rad(F(-M) - target,
                                   1 + F(2 * a - b, 2 * b) * F(1, p), p) > 0
                hi_ok = _sign_1rad(F(-M) - target - F(1, 2 * N), F(1), p) < 0
            rec.envelope_ok = lo_ok and hi_ok
        if prev_p is not None and rec.side_ok:
            rec.monotone_ok = _abs_err_cmp(p, target, prev_p, sgn) < 0
        records.append(rec)
        prev_p = p
        if max_records is not None and len(records) >= max_records:
            break
    return records


def special_scans(kind: str, N_max: int = 10 ** 4, h: int = 1,
                  digits: int = 5) -> list[AccumRecord]:
    """The endpoint families: h_fixed(h) scans N^2 + h (mu decreasing toward
    0 at h = 1, generally h/(2N)-small); near_half_minus / near_half_plus
    scan N^2 + N -+ 1 toward 1/2; top_family scans N^2 + 2N - 1 (mu toward 1).
    """
    records: list[AccumRecord] = []
    prev = None

    def emit(N, p, side, target):
        nonlocal prev
        rec = AccumRecord(N=N, p=p, mu_digits=mu_decimal(p, digits),
                          abs_err_digits=_err_decimal(p, F(target)))
        rec.side_ok = _mu_side(p, F(target)) == side
        if prev is not None and rec.side_ok:
            rec.monotone_ok = _abs_err_cmp(p, F(target), prev, side) < 0
        records.append(rec)
        prev = p

    if kind == "h_fixed":
        lo_N = max(1, (h + 1) // 2)
        for N in range(lo_N, N_max + 1):
            p = N * N + h
            if h <= 2 * N and is_prime_u64(p):
                emit(N, p, +1, F(0))
    elif kind == "near_half_minus":
        for N in range(2, N_max + 1):
            p = N * N + N - 1
            if is_prime_u64(p):
                emit(N, p, -1, F(1, 2))
    elif kind == "near_half_plus":
        for N in range(1, N_max + 1):
            p = N * N + N + 1
            if is_prime_u64(p):
                emit(N, p, +1, F(1, 2))
    elif kind == "top_family":
        for N in range(1, N_max + 1):
            p = N * N + 2 * N - 1
            if is_prime_u64(p):
                emit(N, p, -1, F(1))
    else:
        raise ScanError(f"unknown special scan kind {kind!r}")
    return records


def disjointness(r: RationalTarget, s: RationalTarget, limit: int):
    """Value sets of N^2 + 2rN + 1 and M^2 + 2sM + 1 over admissible N, M
    up to the limit: (disjoint?, first collision or None)."""
    if r == s:
        raise ValueError("targets must differ")

    def values(t: RationalTarget):
        step = t.b // gcd(t.b, 2 * t.a) if t.a else 1
        out = {}
        for N in range(step, limit + 1, step):
            out[N * N + (2 * t.a * N) // t.b + 1] = N
        return out

    va, vb = values(r), values(s)
    common = sorted(set(va) & set(vb))
    if common:
        m = common[0]
        return False, (m, va[m], vb[m])
    return True, None


def write_accum_csv(records, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["N", "p", "mu", "abs_err"])
    for rec in records:
        writer.writerow(rec.row())
