"""Per-index derived records for consecutive prime pairs.

A GapWindow packages every integer a checker needs for one index n:
p = p_n, q = p_{n+1}, the gap d, the integral parts N = floor(sqrt(p)) and
Nq = floor(sqrt(q)), the square offsets h = p - N^2 and hq = q - Nq^2, the
single integer s = floor(sqrt(p*q)) that decides all the floor identities of
the sqrt(p)*Delta family, the division q = k*d + r (n >= 2), the helper
tN = floor(N*sqrt(p)), and the twin-pair prefix count j.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property
from math import isqrt

from .exact import RootExpr
from .primes import PrimeStore, CoverageError


class CheckpointMismatch(ValueError):
    """Supplied j-checkpoint does not match the requested stream origin."""


class SquareLawViolation(AssertionError):
    """floor(sqrt(q)) exceeded floor(sqrt(p)) + 1: a square-free window gap.

    This would be a counterexample to the Legendre-type expectation the
    window model relies on; it is raised loudly rather than absorbed.
    """


@dataclass(frozen=True)
class JCheckpoint:
    """Twin-prefix origin for a stream starting above n = 1."""

    n: int          # first index the checkpoint is valid for
    j: int          # number of i < n with d_i = 2
    store_limit: int

    def token(self) -> str:
        return f"{self.n}:{self.j}:{self.store_limit}"


class GapWindow:
    __slots__ = ("n", "p", "q", "d", "N", "Nq", "h", "hq", "s", "k", "r", "tN", "j")

    def __init__(self, n, p, q, j, N=None):
        self.n = n
        self.p = p
        self.q = q
        self.d = q - p
        self.N = isqrt(p) if N is None else N
        self.Nq = isqrt(q)
        if self.Nq > self.N + 1:
            raise SquareLawViolation(f"n={n}: floor sqrt jumped {self.N} -> {self.Nq}")
        self.h = p - self.N * self.N
        self.hq = q - self.Nq * self.Nq
        self.s = isqrt(p * q)
        if n >= 2:
            self.k, self.r = divmod(q, self.d)
        else:
            self.k = self.r = None
        self.tN = isqrt(self.N * self.N * p)
        self.j = j

    @property
    def straddle(self) -> bool:
        """A perfect square lies between p and q."""
        return self.Nq == self.N + 1

    @property
    def same_part(self) -> bool:
        return self.Nq == self.N

    def snapshot(self) -> dict:
        return {"n": self.n, "p": self.p, "q": self.q, "d": self.d}

    def __repr__(self):
        return (f"GapWindow(n={self.n}, p={self.p}, q={self.q}, d={self.d}, "
                f"N={self.N}, h={self.h}, hq={self.hq}, s={self.s}, j={self.j})")


class RootViews:
    """Named RootExpr views over one window; built lazily, all normalized."""

    def __init__(self, w: GapWindow):
        self._w = w

    @cached_property
    def sqrt_p(self) -> RootExpr:
        return RootExpr.sqrt(self._w.p)

    @cached_property
    def sqrt_q(self) -> RootExpr:
        return RootExpr.sqrt(self._w.q)

    @cached_property
    def delta(self) -> RootExpr:
        return self.sqrt_q - self.sqrt_p

    @cached_property
    def D(self) -> RootExpr:
        return self.sqrt_q + self.sqrt_p

    @cached_property
    def mu(self) -> RootExpr:
        return self.sqrt_p - self._w.N

    @cached_property
    def mu_q(self) -> RootExpr:
        return self.sqrt_q - self._w.Nq

    @cached_property
    def sqrtq_delta(self) -> RootExpr:
        # sqrt(q)*Delta = q - sqrt(pq)
        return RootExpr.sqrt(self._w.p * self._w.q, -1) + self._w.q

    @cached_property
    def sqrtp_delta(self) -> RootExpr:
        # sqrt(p)*Delta = sqrt(pq) - p
        return RootExpr.sqrt(self._w.p * self._w.q) - self._w.p

    @cached_property
    def mu_sqrtp(self) -> RootExpr:
        # mu*sqrt(p) = p - N*sqrt(p)
        return RootExpr.sqrt(self._w.p, -self._w.N) + self._w.p

    @cached_property
    def mu_q_sqrtq(self) -> RootExpr:
        return RootExpr.sqrt(self._w.q, -self._w.Nq) + self._w.q

    @cached_property
    def ratio_frac(self) -> RootExpr:
        # Delta/sqrt(p) = (sqrt(pq) - p)/p, rational-coefficient form
        return self.sqrtp_delta / self._w.p


def root_views(w: GapWindow) -> RootViews:
    return RootViews(w)


def _twin_prefix(store: PrimeStore, n_lo: int) -> int:
    """Count of i < n_lo with d_i = 2 by a direct prefix scan."""
    j = 0
    idx = 0
    prev = None
    for p in store.iter_primes():
        idx += 1
        if prev is not None and p - prev == 2 and idx - 1 < n_lo:
            j += 1
        if idx > n_lo:
            break
        prev = p
    return j


def windows(store: PrimeStore, n_lo: int, n_hi: int,
            j_origin: JCheckpoint | None = None):
    """Yield GapWindow for n in [n_lo, n_hi], strictly increasing n.

    The twin-prefix count j needs an absolute origin: n_lo = 1, a supplied
    checkpoint, or (fallback) an internal prefix scan from 1.
    """
    if n_lo < 1 or n_hi < n_lo:
        raise ValueError("need 1 <= n_lo <= n_hi")
    if n_hi + 1 > store.prime_count:
        raise CoverageError(
            f"p_{n_hi + 1} not covered by store limit {store.limit}")
    if j_origin is not None:
        if j_origin.n != n_lo or j_origin.store_limit != store.limit:
            raise CheckpointMismatch(
                f"checkpoint {j_origin.token()} does not open at n={n_lo} "
                f"on a store of limit {store.limit}")
        j = j_origin.j
    elif n_lo == 1:
        j = 0
    else:
        j = _twin_prefix(store, n_lo)

    start_p = store.nth_prime(n_lo)
    n = n_lo
    prev = None
    prev_N = None
    for p in store.iter_primes(start_p):
        if prev is None:
            prev = p
            prev_N = isqrt(p)
            continue
        w = GapWindow(n, prev, p, j, N=prev_N)
        yield w
        if w.d == 2:
            j += 1
        n += 1
        if n > n_hi:
            return
        prev = p
        prev_N = w.Nq


def twin_pairs(store: PrimeStore, n_lo: int, n_hi: int) -> list[int]:
    """Sorted indices m in [n_lo, n_hi] with d_m = 2."""
    return [w.n for w in windows(store, n_lo, n_hi) if w.d == 2]


CSV_COLUMNS = ["n", "p", "q", "d", "N", "h", "hq", "s", "k", "r", "j"]


def dump_windows_csv(store: PrimeStore, n_lo: int, n_hi: int, fh) -> None:
    """Write the window stream as CSV (exact integers; k,r blank at n = 1)."""
    writer = csv.writer(fh)
    writer.writerow(CSV_COLUMNS)
    for w in windows(store, n_lo, n_hi):
        writer.writerow([w.n, w.p, w.q, w.d, w.N, w.h, w.hq, w.s,
                         "" if w.k is None else w.k,
                         "" if w.r is None else w.r, w.j])
