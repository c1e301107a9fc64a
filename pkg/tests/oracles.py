"""Independent oracles used to freeze expected values.

These stay deliberately primitive: trial division, digit-by-digit square
roots, a Meissel-style prime count, and brute-force pair enumeration.  None
of them share code paths with the package.
"""

from __future__ import annotations


def trial_division_primes(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        d = 2
        prime = True
        while d * d <= n:
            if n % d == 0:
                prime = False
                break
            d += 1
        if prime:
            out.append(n)
    return out


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def pi_trial(x: int) -> int:
    return len(trial_division_primes(x))


def longhand_sqrt_digits(n: int, digits: int) -> str:
    """Decimal digits of sqrt(n) by the classical digit-by-digit method."""
    int_digits = []
    num = str(n)
    if len(num) % 2:
        num = "0" + num
    pairs = [num[i:i + 2] for i in range(0, len(num), 2)]
    remainder = 0
    root = 0
    for pair in pairs:
        remainder = remainder * 100 + int(pair)
        d = 9
        while (20 * root + d) * d > remainder:
            d -= 1
        remainder -= (20 * root + d) * d
        root = root * 10 + d
        int_digits.append(str(d))
    frac_digits = []
    for _ in range(digits):
        remainder *= 100
        d = 9
        while (20 * root + d) * d > remainder:
            d -= 1
        remainder -= (20 * root + d) * d
        root = root * 10 + d
        frac_digits.append(str(d))
    return "".join(int_digits).lstrip("0") + "." + "".join(frac_digits)


def meissel_pi(x: int) -> int:
    """Prime count by the Lucy-Hedgehog sieve over distinct floor values;
    independent of the package's segmented sieve."""
    if x < 2:
        return 0
    from math import isqrt
    r = isqrt(x)
    vals = [x // i for i in range(1, r + 1)]
    vals += list(range(vals[-1] - 1, 0, -1))
    small = {}
    large = {}
    s = {v: v - 1 for v in vals}
    for p in range(2, r + 1):
        if s[p] == s[p - 1]:
            continue  # p not prime
        sp = s[p - 1]
        p2 = p * p
        for v in vals:
            if v < p2:
                break
            s[v] -= s[v // p] - sp
    return s[x]


def brute_twin_count_below_index(primes: list[int], n: int) -> int:
    """#{i < n : p_{i+1} - p_i = 2} with 1-based prime indexing."""
    count = 0
    for i in range(1, n):
        if primes[i] - primes[i - 1] == 2:
            count += 1
    return count
