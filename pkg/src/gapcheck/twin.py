"""Twin-prime counting ledger and the related open-question surveys.

The ledger accumulates
    A_n = sum over i <= n, d_i != 2 of (1 - sqrt(2) a_i)
    B_n = sum over i <= n, d_i  = 2 of (1 + sqrt(2) a_i)
with a_i = sqrt(2)/2 - Delta_i, in fixed point with a certified error
interval, and validates the exact identity
    sqrt(2 p_{n+1}) = 2 + 2 j_{n+1} - (B_n - A_n)
against the tracked bound.  j_n counts indices i < n with d_i = 2, the
convention fixed by the identity itself and by p_n < 2 j_n^2 from n = 6 on
(j_6 = 3 via the pairs (3,5), (5,7), (11,13)).

Every decision is integer or interval arithmetic; the natural log needed by
the explicit lower-bound question is a certified dyadic interval computed
from the atanh series with an explicit tail bound.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import isqrt

from .primes import PrimeStore
from .window import windows


# -- certified interval natural log ---------------------------------------------

_LN2_CACHE: dict[int, tuple[int, int]] = {}


def _atanh_interval(unum: int, uden: int, fb: int) -> tuple[int, int]:
    """Certified [lo, hi] ulps at fb bits for atanh(unum/uden), 0 <= u < 1/2."""
    one = 1 << fb
    ulo = unum * one // uden
    uhi = ulo + (0 if unum * one % uden == 0 else 1)
    u2lo = ulo * ulo >> fb
    u2hi = (uhi * uhi >> fb) + 1
    slo, shi = 0, 0
    plo, phi = ulo, uhi  # u^(2k+1) bracket
    k = 0
    while True:
        slo += plo // (2 * k + 1)
        shi += phi // (2 * k + 1) + 1
        plo = plo * u2lo >> fb
        phi = (phi * u2hi >> fb) + 1
        k += 1
        if phi // (2 * k + 1) == 0:
            # remaining tail < phi/(2k+1) * 1/(1 - u^2) < 2 ulps here
            shi += 2
            break
    return slo, shi


def _ln2_interval(fb: int) -> tuple[int, int]:
    if fb not in _LN2_CACHE:
        lo, hi = _atanh_interval(1, 3, fb)
        _LN2_CACHE[fb] = (2 * lo, 2 * hi)
    return _LN2_CACHE[fb]


def ln_interval(num: int, den: int = 1, fb: int = 96) -> tuple[int, int]:
    """Certified [lo, hi] ulps at fb bits with ln(num/den) inside."""
    if num <= 0 or den <= 0:
        raise ValueError("ln of a non-positive value")
    e = num.bit_length() - den.bit_length()
    if e >= 0:
        scaled_den = den << e
    else:
        num, scaled_den = num << (-e), den
    if num < scaled_den:  # ensure 1 <= m < 2
        e -= 1
        if e >= 0:
            scaled_den = den << e
        else:
            num, scaled_den = num * 2, den
    # m = num/scaled_den in [1, 2); u = (m-1)/(m+1)
    unum, uden = num - scaled_den, num + scaled_den
    if unum == 0:
        mlo = mhi = 0
    else:
        alo, ahi = _atanh_interval(unum, uden, fb)
        mlo, mhi = 2 * alo, 2 * ahi
    l2lo, l2hi = _ln2_interval(fb)
    if e >= 0:
        return mlo + e * l2lo, mhi + e * l2hi
    return mlo + e * l2hi, mhi + e * l2lo


def ln_ln_interval(n: int, fb: int = 96) -> tuple[int, int]:
    """Certified bracket of ln(ln(n)) for n >= 3."""
    lo, hi = ln_interval(n, 1, fb)
    llo = ln_interval(lo, 1 << fb, fb)[0]
    lhi = ln_interval(hi, 1 << fb, fb)[1]
    return llo, lhi


# -- the ledger -------------------------------------------------------------------


@dataclass
class AlphaRow:
    n: int
    j: int                      # j_n = #{i < n : d_i = 2}
    A: tuple[int, int]          # interval in ulps at frac_bits
    B: tuple[int, int]
    residual_bound: int         # ulps; certified |identity residual| bound
    identity_ok: bool
    b_gt_a: bool
    sandwich_ok: bool           # 2n - 1 <= p_n and 2 p_n <= (n+1)^2
    q92_holds: bool | None      # q < 2 j_{n+1}^2 (defined n >= 5)
    dusart_holds: bool | None   # n (ln n + ln ln n - 1) < 2 j_n^2 (n >= 3)
    abstract_holds: bool | None  # p_n < 2 j_n^2 (n >= 6)


class LedgerError(ValueError):
    pass


def _imul(alo, ahi, blo, bhi, fb):
    """Outward-rounded interval product at fb bits."""
    cands = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
    return min(cands) >> fb, (max(cands) >> fb) + 1


def alpha_ledger(store: PrimeStore, n_hi: int, frac_bits: int = 64,
                 check_questions: bool = True):
    """Yield AlphaRow for n = 1 .. n_hi.

    The identity residual check is self-validating for the accumulator error
    tracking: the identity is algebraically exact, so the certified interval
    for sqrt(2 p_{n+1}) must always intersect the accumulator interval.
    """
    fb = frac_bits
    one = 1 << fb
    r2lo = isqrt(2 << (2 * fb))
    r2hi = r2lo + 1                       # sqrt(2) bracket
    half_lo, half_hi = r2lo >> 1, (r2hi >> 1) + 1  # sqrt(2)/2
    A = (0, 0)
    B = (0, 0)
    sq_lo = isqrt(2 << (2 * fb))          # sqrt(p_1 = 2) bracket
    sq_hi = sq_lo + 1
    ln_fb = 96
    for w in windows(store, 1, n_hi):
        # sqrt(q) bracket at fb bits
        sqq_lo = isqrt(w.q << (2 * fb))
        sqq_hi = sqq_lo + 1
        dlo, dhi = sqq_lo - sq_hi, sqq_hi - sq_lo          # Delta_n
        alo, ahi = half_lo - dhi, half_hi - dlo            # alpha_n
        tlo, thi = _imul(r2lo, r2hi, alo, ahi, fb)         # sqrt(2) alpha
        if w.d == 2:
            B = (B[0] + one + tlo, B[1] + one + thi)
        else:
            A = (A[0] + one - thi, A[1] + one - tlo)
        # identity: sqrt(2 q) = 2 + 2 j_{n+1} - (B - A)
        j_next = w.j + (1 if w.d == 2 else 0)
        lhs_lo = isqrt(2 * w.q << (2 * fb))
        lhs_hi = lhs_lo + 1
        rhs_lo = (2 + 2 * j_next) * one - (B[1] - A[0])
        rhs_hi = (2 + 2 * j_next) * one - (B[0] - A[1])
        identity_ok = lhs_lo <= rhs_hi and rhs_lo <= lhs_hi
        residual_bound = (lhs_hi - lhs_lo) + (rhs_hi - rhs_lo)
        # B_n > A_n certified when the intervals separate (else reported False)
        b_gt_a = B[0] > A[1]
        sandwich_ok = 2 * w.n - 1 <= w.p and 2 * w.p <= (w.n + 1) ** 2
        q92 = dusart = abstract = None
        if check_questions:
            if w.n >= 5:
                q92 = _q92_holds(w, j_next)
            if w.n >= 3:
                dusart = _dusart_holds(w.n, w.j, ln_fb)
            if w.n >= 6:
                abstract = w.p < 2 * w.j * w.j
        yield AlphaRow(n=w.n, j=w.j, A=A, B=B,
                       residual_bound=residual_bound, identity_ok=identity_ok,
                       b_gt_a=b_gt_a, sandwich_ok=sandwich_ok,
                       q92_holds=q92, dusart_holds=dusart,
                       abstract_holds=abstract)
        sq_lo, sq_hi = sqq_lo, sqq_hi


def _q92_holds(w, j_next: int) -> bool:
    """The display-9.2 chain: the exact prefix d/2 < sqrt(q) Delta <
    sqrt(2q)/2 must hold; the question mark is sqrt(2q)/2 < j_{n+1}."""
    if not 4 * w.p * w.q < (2 * w.q - w.d) ** 2:
        raise LedgerError(f"exact prefix d/2 < sqrt(q)Delta failed at n={w.n}")
    # sqrt(q)Delta < sqrt(2q)/2  <=>  Delta < sqrt(2)/2  <=>  2(p+q)-1 < 4 sqrt(pq)
    if not (2 * (w.p + w.q) - 1) ** 2 < 16 * w.p * w.q:
        raise LedgerError(f"exact prefix sqrt(q)Delta < sqrt(2q)/2 failed at n={w.n}")
    return w.q < 2 * j_next * j_next


def _dusart_holds(n: int, j: int, fb: int) -> bool:
    """n (ln n + ln ln n - 1) < 2 j_n^2 decided with certified brackets."""
    one = 1 << fb
    lo1, hi1 = ln_interval(n, 1, fb)
    lo2, hi2 = ln_ln_interval(n, fb)
    lhs_hi = n * (hi1 + hi2 - one)
    rhs = 2 * j * j * one
    if lhs_hi < rhs:
        return True
    lhs_lo = n * (lo1 + lo2 - one)
    if lhs_lo >= rhs:
        return False
    raise LedgerError(f"ln precision insufficient at n={n}")


@dataclass
class QuestionReport:
    n_hi: int
    q92_first_violation: int | None
    dusart_first_violation: int | None
    abstract_first_violation: int | None
    rows_checked: int


def jn_questions(store: PrimeStore, n_hi: int) -> QuestionReport:
    """First violation (or None) for each of the three open questions."""
    if n_hi < 6:
        raise ValueError("n_hi >= 6 required")
    q92 = dusart = abstract = None
    rows = 0
    for row in alpha_ledger(store, n_hi, check_questions=True):
        rows += 1
        if q92 is None and row.q92_holds is False:
            q92 = row.n
        if dusart is None and row.dusart_holds is False and row.n >= 6:
            dusart = row.n
        if abstract is None and row.abstract_holds is False:
            abstract = row.n
    return QuestionReport(n_hi=n_hi, q92_first_violation=q92,
                          dusart_first_violation=dusart,
                          abstract_first_violation=abstract, rows_checked=rows)


def write_ledger_csv(rows, fh, frac_bits: int = 64, decimals: int = 12) -> None:
    """CSV per the module interface: accumulators as decimals at the stated
    precision, residual bound in ulps."""
    writer = csv.writer(fh)
    writer.writerow(["n", "j_n", "A_n", "B_n", "identity_residual_bound",
                     "q92_holds", "dusart_holds", "abstract_holds"])
    scale = 1 << frac_bits

    def dec(interval):
        mid = (interval[0] + interval[1]) // 2
        return f"{mid / scale:.{decimals}f}"

    def tri(v):
        return "" if v is None else int(v)

    for r in rows:
        writer.writerow([r.n, r.j, dec(r.A), dec(r.B), r.residual_bound,
                         tri(r.q92_holds), tri(r.dusart_holds),
                         tri(r.abstract_holds)])


def twin_prime_values(store: PrimeStore, limit: int | None = None):
    """Yield lower members p of twin pairs (p, p+2) with p+2 <= limit."""
    limit = store.limit if limit is None else limit
    prev = None
    for p in store.iter_primes(2, limit):
        if prev is not None and p - prev == 2:
            yield prev
        prev = p


def same_floor_consecutive_twin_pairs(store: PrimeStore, limit: int | None = None):
    """Consecutive twin pairs (p, p') with floor(sqrt(p)) = floor(sqrt(p')),
    yielded as (p, p', N); the 31 p > 25 p' bound is the caller's claim."""
    prev = None
    for p in twin_prime_values(store, limit):
        if prev is not None and isqrt(prev) == isqrt(p):
            yield prev, p, isqrt(p)
        prev = p


def brute_force_j(store: PrimeStore, n: int) -> int:
    """Independent j_n: enumerate twin pairs (p_i, p_i + 2) with i < n."""
    count = 0
    idx = 0
    prev = None
    for p in store.iter_primes():
        idx += 1
        if idx >= n + 1:
            break
        if prev is not None and p - prev == 2:
            count += 1
        prev = p
    return count
