"""Prime-counting claims over geometric windows.

Covers counts between consecutive squares (with the two half-windows), the
squared-prime refinement, counts between consecutive k-th powers with their
explicit subinterval schemes, and the power-of-two ladder with the composite-
coprime identity.

Subinterval binning never rounds: a prime m lands in subinterval j of the
window (x^k, (x+1)^k) cut into W-weighted steps iff
    j*W < (m - x^k)*S <= (j+1)*W
in integers, where S is the number of subintervals and W = (x+1)^k - x^k
(boundary hits assigned to the lower subinterval).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .primes import PrimeStore, CoverageError


@dataclass
class SquareWindowReport:
    """Primes between N^2 and (N+1)^2 and the claims evaluated on them."""

    N: int
    prime_count: int
    primes: list[int] = field(default_factory=list)
    h_values: list[int] = field(default_factory=list)
    prime_h_values: list[int] = field(default_factory=list)
    oppermann_lo: bool = True    # pi(N^2 - N) < pi(N^2)
    oppermann_hi: bool = True    # pi(N^2) < pi(N^2 + N)
    legendre: bool = True        # count >= 1
    two_primes: bool = True      # count >= 2
    cumulative: bool = True      # pi(N^2) >= 2(N-1)
    first_prime_floor_D_even: bool = True
    half_claims_ok: bool = True  # triggered two-primes-per-half claims

    def row(self) -> list:
        return [self.N, self.prime_count, int(self.oppermann_lo),
                int(self.oppermann_hi),
                min(self.h_values) if self.h_values else "",
                max(self.h_values) if self.h_values else ""]


def square_reports(store: PrimeStore, n_lo: int, n_hi: int,
                   keep_primes: bool = True):
    """Yield a SquareWindowReport per N in [n_lo, n_hi].

    Evaluates: at least one prime (and at least two) per window, both
    Oppermann half-window strict increases, the cumulative pi(N^2) >= 2(N-1)
    bound, evenness of floor(D) at the window's first prime, and the
    conditional two-primes-per-half claims on even N.
    """
    if n_lo < 1:
        raise ValueError("N must be >= 1")
    if (n_hi + 1) ** 2 > store.limit:
        raise CoverageError(f"(N+1)^2 beyond store limit {store.limit}")
    points = []
    for N in range(n_lo, n_hi + 1):
        points.extend([N * N - N, N * N, N * N + N, (N + 1) ** 2])
    pis = dict(zip(points, store.bulk_pi(points)))
    # offsets h live below 2 n_hi + 1; one small sieve tests them all
    from .primes import _small_sieve
    small = set(_small_sieve(2 * n_hi + 1))

    for N in range(n_lo, n_hi + 1):
        N2 = N * N
        primes = list(store.iter_primes(N2 + 1, (N + 1) ** 2 - 1))
        rep = SquareWindowReport(N=N, prime_count=len(primes))
        if keep_primes:
            rep.primes = primes
        rep.h_values = [p - N2 for p in primes]
        rep.prime_h_values = [h for h in rep.h_values if h in small]
        rep.legendre = len(primes) >= 1
        rep.two_primes = len(primes) >= 2
        if N >= 2:
            rep.oppermann_lo = pis[N2 - N] < pis[N2]
            rep.oppermann_hi = pis[N2] < pis[N2 + N]
        rep.cumulative = pis[N2] >= 2 * (N - 1)
        if primes and N >= 2:
            p = primes[0]
            q = primes[1] if len(primes) > 1 else store.next_prime(p)
            # floor(sqrt(p) + sqrt(q)) parity, exact: D in (2N, 2N+2) here
            base = N + isqrt(q)
            from .exact import _sign_2rad
            above = _sign_2rad(Fraction(-(base + 1)), Fraction(1), p,
                               Fraction(1), q) > 0
            rep.first_prime_floor_D_even = (base + 1 if above else base) % 2 == 0
        if N >= 4 and N % 2 == 0:
            ok = True
            if store.is_prime(N2 + 1):
                ok = ok and pis[N2 + N] - pis[N2] >= 2
            if N > 4 and store.is_prime(N2 + 2 * N - 1):
                prev = store.next_prime(N2)  # first prime after the square
                if prev < N2 + 2 * N - 1:
                    # pi(N^2 + 2N) = pi((N+1)^2): the square itself is not prime
                    ok = ok and pis[(N + 1) ** 2] - pis[N2 + N] >= 2
            rep.half_claims_ok = ok
        yield rep


def write_square_csv(reports, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["N", "count", "oppermann_lo", "oppermann_hi", "min_h", "max_h"])
    for rep in reports:
        writer.writerow(rep.row())


@dataclass
class BrocardRow:
    n: int
    p: int
    q: int
    count: int          # pi(q^2) - pi(p^2)
    threshold: int      # 2 d_n
    ok: bool


def brocard_reports(store: PrimeStore, n_lo: int, n_hi: int) -> list[BrocardRow]:
    """pi(p_{n+1}^2) - pi(p_n^2) against the refined threshold 2 d_n."""
    primes = []
    idx = 0
    for p in store.iter_primes():
        idx += 1
        if idx > n_hi + 1:
            break
        if idx >= n_lo:
            primes.append((idx, p))
    if len(primes) < 2 or primes[-1][0] < n_hi + 1:
        raise CoverageError("store does not cover the requested index range")
    if primes[-1][1] ** 2 > store.limit:
        raise CoverageError("p_{n_hi+1}^2 beyond store limit")
    pis = dict(zip([p * p for _, p in primes],
                   store.bulk_pi([p * p for _, p in primes])))
    rows = []
    for (n, p), (_, q) in zip(primes, primes[1:]):
        count = pis[q * q] - pis[p * p]
        rows.append(BrocardRow(n=n, p=p, q=q, count=count,
                               threshold=2 * (q - p), ok=count >= 2 * (q - p)))
    return rows


# -- consecutive k-th powers -----------------------------------------------------


@dataclass
class PowerGapReport:
    k: int
    n: int
    lower_counts: list[int]
    total: int
    expected_min: int          # pi(2^k)
    per_interval_ok: bool
    subintervals_claimed: bool  # the subinterval scheme is asserted at this n
    total_ok: bool
    cumulative_ok: bool        # pi(n^k) >= pi(2^k) (n-1)
    budget_hit: bool = False

    def as_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "lower_counts": self.lower_counts,
                "total": self.total, "expected_min": self.expected_min,
                "per_interval_ok": self.per_interval_ok,
                "subintervals_claimed": self.subintervals_claimed,
                "total_ok": self.total_ok, "cumulative_ok": self.cumulative_ok,
                "budget_hit": self.budget_hit}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def _scheme_n_min(k: int) -> int:
    """First n at which the subinterval scheme itself is asserted: k <= 3
    from n = 1; k >= 4 from n = 2 (n = 1 is covered by the total count)."""
    return 1 if k <= 3 else 2


def _subinterval_breaks(k: int, x: int, pi2k: int) -> list[Fraction]:
    """Interior breakpoints of the window (x^k, (x+1)^k), per the explicit
    schemes: k = 3 uses multipliers (1, 2, 4) of x(x+1)/2; k = 4 uses
    (1/2, 1, 2, 3, 4) in units x^3; other k use pi(2^k) equal steps."""
    lo = x ** k
    if k == 3:
        f = Fraction(x * (x + 1), 2)
        return [lo + m * f for m in (1, 2, 4)]
    if k == 4:
        x3 = x ** 3
        return [lo + Fraction(m) * x3 for m in (Fraction(1, 2), 1, 2, 3, 4)]
    width = (x + 1) ** k - lo
    return [lo + Fraction(j * width, pi2k) for j in range(1, pi2k)]


def power_reports(store: PrimeStore, k: int, n_lo: int, n_hi: int,
                  budget: int = 10 ** 8):
    """Yield a PowerGapReport per n with (n+1)^k within budget and coverage."""
    if k < 2:
        raise ValueError("k >= 2 required")
    pi2k = store.pi(2 ** k) if 2 ** k <= store.limit else None
    if pi2k is None:
        raise CoverageError("store must cover 2^k")
    limit = min(budget, store.limit)

    jobs = []
    points = set()
    for n in range(n_lo, n_hi + 1):
        hi = (n + 1) ** k
        if hi > limit:
            break
        breaks = _subinterval_breaks(k, n, pi2k)
        jobs.append((n, n ** k, hi, breaks))
        points.add(n ** k)
        points.add(hi - 1)
        for b in breaks:
            # count primes <= b with boundary primes going to the lower side:
            # pi(floor(b)) counts an exact integer boundary downward already
            points.add(b.numerator // b.denominator)
    plist = sorted(points)
    pis = dict(zip(plist, store.bulk_pi(plist)))

    for n, lo, hi, breaks in jobs:
        cuts = [pis[lo]] + [pis[b.numerator // b.denominator] for b in breaks] \
            + [pis[hi - 1]]
        counts = [cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)]
        total = cuts[-1] - cuts[0]
        cumulative = pis.get(lo)
        claimed = n >= _scheme_n_min(k)
        yield PowerGapReport(
            k=k, n=n, lower_counts=counts, total=total, expected_min=pi2k,
            per_interval_ok=all(c >= 1 for c in counts),
            subintervals_claimed=claimed,
            total_ok=total >= pi2k,
            cumulative_ok=(n < 2 or cumulative >= pi2k * (n - 1)),
        )
    if jobs and (n_hi + 1) ** k > limit:
        last = jobs[-1][0]
        if last < n_hi:
            yield PowerGapReport(k=k, n=last + 1, lower_counts=[], total=0,
                                 expected_min=pi2k, per_interval_ok=False,
                                 subintervals_claimed=False,
                                 total_ok=False, cumulative_ok=False,
                                 budget_hit=True)


def prime_power_windows(store: PrimeStore, k: int, budget: int = 10 ** 8):
    """Check pi(p_{n+1}^k) - pi(p_n^k) >= pi(2^k) d_n while q^k fits the budget."""
    pi2k = store.pi(2 ** k)
    limit = min(budget, store.limit)
    primes = []
    for p in store.iter_primes():
        if p ** k > limit:
            break
        primes.append(p)
    pts = [p ** k for p in primes]
    pis = dict(zip(pts, store.bulk_pi(pts)))
    rows = []
    for p, q in zip(primes, primes[1:]):
        count = pis[q ** k] - pis[p ** k]
        rows.append((p, q, count, pi2k * (q - p), count >= pi2k * (q - p)))
    return rows


@dataclass
class Pow2Row:
    k: int
    pi_2k: int
    increment_ok: bool       # pi(2^{k+1}) >= 2 + pi(2^k), checked at k-1 -> k
    lower_bound_ok: bool     # pi(2^k) >= 2(k-1)
    phi_c: int               # composite-or-one m < 2^k coprime to 2^k
    identity_ok: bool        # pi(2^k) = 2^{k-1} + 1 - phi_c(2^k)


def pow2_ladder(store: PrimeStore, k_max: int = 26) -> list[Pow2Row]:
    """The pi(2^k) table for 2 <= k <= k_max with the ladder and identity checks.

    phi_c counts m < 2^k coprime to 2^k (odd m) that are not prime; the unit
    m = 1 is counted, which is the convention that makes the displayed
    identity exact at every k (e.g. phi_c(16) = |{1, 9, 15}| = 3).
    """
    if 2 ** k_max > store.limit:
        raise CoverageError(f"2^{k_max} beyond store limit")
    pis = store.bulk_pi([2 ** k for k in range(2, k_max + 1)])
    rows = []
    prev = None
    for i, k in enumerate(range(2, k_max + 1)):
        pi_2k = pis[i]
        odd_count = 2 ** (k - 1)
        phi_c = odd_count - (pi_2k - 1)
        rows.append(Pow2Row(
            k=k, pi_2k=pi_2k,
            increment_ok=(prev is None or pi_2k >= 2 + prev),
            lower_bound_ok=pi_2k >= 2 * (k - 1),
            phi_c=phi_c,
            identity_ok=pi_2k == 2 ** (k - 1) + 1 - phi_c,
        ))
        prev = pi_2k
    return rows


def phi_c_direct(store: PrimeStore, k: int) -> int:
    """Independent count of odd non-prime m < 2^k (m = 1 included): counts
    composite marks in the raw sieve segments rather than differencing
    prime-count checkpoints."""
    hi = 2 ** k
    count = 1  # m = 1
    seg_idx = 0
    while True:
        lo, seg_hi = store._segment_bounds(seg_idx)
        if lo >= hi:
            break
        seg = store._segment(seg_idx)
        if seg_hi <= hi:
            count += seg.count(0)
        else:
            count += seg[: (hi - lo + 1) // 2].count(0)
            break
        seg_idx += 1
    return count


# -- extra square-window surveys --------------------------------------------------


def even_base_report(store: PrimeStore, half_root: int) -> SquareWindowReport:
    """The square window whose base is the even square (2*half_root)^2.

    The source text indexes its prime-offset question by the half root
    (its N = 6 window is [144, 169]); this accessor keeps that view while
    square_reports stays on the standard one-window-per-root convention.
    """
    root = 2 * half_root
    return next(iter(square_reports(store, root, root)))


def h_value_coverage(store: PrimeStore, n_hi: int) -> dict:
    """Which values m >= 1 occur as h = p - floor(sqrt(p))^2 for N <= n_hi."""
    seen = set()
    for rep in square_reports(store, 1, n_hi, keep_primes=False):
        seen.update(rep.h_values)
    missing = [m for m in range(1, 2 * n_hi) if m not in seen]
    return {"max_checked": 2 * n_hi - 1, "first_missing": missing[0] if missing else None,
            "missing_count": len(missing)}


def even_square_decomposition(store: PrimeStore, N: int) -> bool:
    """Is 2N = (h_i - r) + (h_j + r) solvable with both summands prime and
    N^2 + h_i, N^2 + h_j prime?  (Equivalently: h_i + h_j = 2N over window
    offsets with a prime pair u <= h_i, 2N - u >= h_j.)"""
    from .primes import is_prime_u64
    N2 = N * N
    hs = [p - N2 for p in store.iter_primes(N2 + 1, (N + 1) ** 2 - 1)]
    hset = set(hs)
    for hi_ in hs:
        hj = 2 * N - hi_
        if hj in hset:
            for u in range(2, hi_ + 1):
                if is_prime_u64(u) and is_prime_u64(2 * N - u):
                    return True
    return False
