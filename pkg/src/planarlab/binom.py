"""Binomial coefficients modulo a prime via base-p digit domination.

binom(n, k) is nonzero mod p exactly when every base-p digit of k is at most
the corresponding digit of n, in which case it is the product of the per-digit
binomials.  The per-digit table is a (p, p) Pascal triangle computed once per
prime.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import BoundExceeded

DEFAULT_SUPPORT_BOUND = 10**6


@functools.lru_cache(maxsize=None)
def small_binom_table(p: int) -> np.ndarray:
    """(p, p) table of binom(a, b) mod p for digits a, b < p; 0 where b > a."""
    tab = np.zeros((p, p), dtype=np.int64)
    tab[:, 0] = 1
    for a in range(1, p):
        for b in range(1, a + 1):
            tab[a, b] = (tab[a - 1, b - 1] + tab[a - 1, b]) % p
    tab.setflags(write=False)
    return tab


def base_p_digits(value: int, p: int) -> list[int]:
    """Base-p expansion, low-to-high; [0] for value 0."""
    if value < 0:
        raise ValueError("value must be non-negative")
    digits = []
    while True:
        value, rem = divmod(value, p)
        digits.append(rem)
        if value == 0:
            return digits


def binom_mod_p(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p; 0 when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    tab = small_binom_table(p)
    result = 1
    while n or k:
        n, a = divmod(n, p)
        k, b = divmod(k, p)
        if b > a:
            return 0
        result = result * int(tab[a, b]) % p
    return result


def binom_mod_p_row(n: int, p: int) -> np.ndarray:
    """The whole residue row [binom(n, 0) mod p, ..., binom(n, n) mod p].

    Same digit-product rule as binom_mod_p, vectorized over k for bulk checks.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    tab = small_binom_table(p)
    ks = np.arange(n + 1, dtype=np.int64)
    out = np.ones(n + 1, dtype=np.int64)
    nn = n
    while nn or ks.any():
        nn, nd = divmod(nn, p)
        kd = ks % p
        ks //= p
        out = out * tab[nd, kd] % p
    return out


def nonzero_support(n: int, p: int, bound: int = DEFAULT_SUPPORT_BOUND) -> set[int]:
    """All k with binom(n, k) not divisible by p: digitwise-dominated k."""
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the bound {bound}")
    digits = base_p_digits(n, p)
    support = [0]
    weight = 1
    for d in digits:
        support = [k + b * weight for k in support for b in range(d + 1)]
        weight *= p
    return set(support)


@functools.lru_cache(maxsize=4096)
def expansion(n: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted nonzero support of binom(n, .) mod p with the residues.

    Returns (k values ascending, binom(n, k) mod p) as read-only int arrays;
    the cache makes repeated difference expansions of the same exponent cheap.
    """
    ks = np.array(sorted(nonzero_support(n, p)), dtype=np.int64)
    tab = small_binom_table(p)
    vals = np.ones(ks.shape, dtype=np.int64)
    nn, kk = n, ks.copy()
    while nn:
        nn, a = divmod(nn, p)
        b = kk % p
        kk //= p
        vals = vals * tab[a, b] % p
    ks.setflags(write=False)
    vals.setflags(write=False)
    return ks, vals
