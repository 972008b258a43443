"""Closed-form values and bounds on m(n, r, s, k) used by the verification suites."""
from __future__ import annotations

from fractions import Fraction
from math import ceil, comb, exp

from .constructions import blowup_classes, hypercube_dimension


def two_colour_exact(n: int, k: int) -> int:
    """m(n,2,1,k) = n-2k+2, valid for n >= 13k-15."""
    return n - 2 * k + 2


def three_two_exact(n: int, k: int) -> int:
    """m(n,3,2,k): 0 when n <= 3k-3, else n-k+1 (exact for n >= 13k-15)."""
    return 0 if n <= 3 * k - 3 else n - k + 1


def r21_lower(n: int, r: int) -> Fraction:
    return Fraction(4 * n, r + 1)


def hypercube_upper(n: int, r: int, s: int) -> int:
    """2^s * ceil(n / 2^R) with R = floor(log2(r+1))."""
    return 2 ** s * -(-n // 2 ** hypercube_dimension(r))


def subset_partition_upper(n: int, r: int, s: int) -> int:
    """ceil((1 - 1/C(r,s)) n), for 2s < r."""
    t = comb(r, s)
    return -(-(t - 1) * n // t)


def blowup_upper(n: int, r: int, s: int) -> int:
    """(s+1) * ceil(n / floor(sqrt(2r)))."""
    return (s + 1) * -(-n // blowup_classes(r))


def bg_family_upper(n: int, k: int) -> int:
    """m(n,2s,s,k) <= n-2k+2."""
    return n - 2 * k + 2


def rootk1_lower(n: int, r: int, s: int) -> int:
    """ceil((1 - e^{-s^2/3r}) n)."""
    return ceil((1 - exp(-s * s / (3 * r))) * n)
