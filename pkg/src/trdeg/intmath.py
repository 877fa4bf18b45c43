"""Small exact integer helpers: extended gcd and a primality test."""

from __future__ import annotations


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == x*a + y*b."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def ext_gcd_list(values: list[int]) -> tuple[int, list[int]]:
    """Return (g, coeffs) with g = gcd of values >= 0 and g == sum(c*v)."""
    if not values:
        return 0, []
    g = values[0]
    coeffs = [1] + [0] * (len(values) - 1)
    if g < 0:
        g, coeffs[0] = -g, -1
    for k in range(1, len(values)):
        g2, u, v = ext_gcd(g, values[k])
        coeffs = [u * c for c in coeffs[:k]] + [v] + [0] * (len(values) - k - 1)
        g = g2
    return g, coeffs


def modinv(a: int, n: int) -> int:
    """Inverse of a modulo n; raises ZeroDivisionError when gcd(a, n) != 1."""
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {n}")
    return x % n


# Witness set deterministic for all n < 3.3 * 10^24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic far beyond desk scale."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
