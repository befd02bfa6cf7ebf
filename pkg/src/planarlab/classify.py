"""Semantic classification of polynomial functions: permutation, additive,
planar, Alltop — plus the quadratic-monomial decomposition and equivalence
transforms.

Everything runs on value tables, never on repeated polynomial evaluation: a
full Alltop verification costs O(q^3) integer table lookups with early exit,
scanned in deterministic order (a ascending, then b, then x) so reported
witnesses are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import polyfun
from .errors import NonAdditiveM, NotAlltop, ZeroScale
from .field import FieldElement, FieldSpec
from .polyfun import Poly

_CHUNK_ENTRIES = 1 << 20


def _perm_rows_ok(q: int, rows: np.ndarray) -> np.ndarray:
    """Boolean per row of a (k, q) array: is the row a permutation of [0, q)?"""
    k = rows.shape[0]
    flat = rows.astype(np.int64) + np.arange(k, dtype=np.int64)[:, None] * q
    counts = np.bincount(flat.ravel(), minlength=k * q)
    return counts.reshape(k, q).min(axis=1) == 1


def _first_collision(row) -> tuple[int, int]:
    """First (x, x2) with x < x2 and row[x] == row[x2], scanning x2 upward."""
    seen: dict[int, int] = {}
    for x, v in enumerate(row.tolist()):
        if v in seen:
            return seen[v], x
        seen[v] = x
    raise AssertionError("no collision in a non-permutation row")  # pragma: no cover


def permutation_witness(f: Poly) -> tuple[int, int] | None:
    """None when f permutes the field, else the first colliding pair (x, x2)."""
    t = f.value_table().values
    q = f.field.q
    if np.bincount(t, minlength=q).max() == 1:
        return None
    return _first_collision(t)


def is_permutation(f: Poly) -> bool:
    return permutation_witness(f) is None


def additive_witness(f: Poly) -> tuple[int, int] | None:
    """None when f(x+y) = f(x) + f(y) everywhere, else the first bad (x, y)."""
    fld = f.field
    q = fld.q
    t = f.value_table().values
    enc = fld.encodings
    chunk = max(1, _CHUNK_ENTRIES // q)
    for x0 in range(0, q, chunk):
        xs = np.arange(x0, min(x0 + chunk, q), dtype=np.int32)
        lhs = t[fld.add_vec(xs[:, None], enc[None, :])]
        rhs = fld.add_vec(t[xs][:, None], t[None, :])
        bad = lhs != rhs
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return int(xs[i]), int(j)
    return None


def is_additive_function(f: Poly) -> bool:
    return additive_witness(f) is None


def _table_planar_witness(fld: FieldSpec, t: np.ndarray) -> tuple[int, int, int] | None:
    """Planarity of the function given by table t: every nonzero-shift
    difference row must be a permutation.  Returns the first (a, x, x2)."""
    q = fld.q
    enc = fld.encodings
    chunk = max(1, _CHUNK_ENTRIES // q)
    for a0 in range(1, q, chunk):
        shifts = np.arange(a0, min(a0 + chunk, q), dtype=np.int32)
        idx = fld.add_vec(shifts[:, None], enc[None, :])
        diff = fld.sub_vec(t[idx], t[None, :])
        ok = _perm_rows_ok(q, diff)
        if not ok.all():
            i = int(np.argmax(~ok))
            x, x2 = _first_collision(diff[i])
            return int(shifts[i]), x, x2
    return None


def planar_witness(f: Poly) -> tuple[int, int, int] | None:
    """None when f is planar, else the first (a, x, x2) with a difference collision."""
    return _table_planar_witness(f.field, f.value_table().values)


def is_planar(f: Poly) -> bool:
    return planar_witness(f) is None


def alltop_witness(f: Poly) -> tuple[int, int, int, int] | None:
    """None when every difference of f is planar, else the first (a, b, x, x2).

    Works entirely on the value table: the second difference at (a, b) is
    T[x+a+b] - T[x+b] - T[x+a] + T[x].
    """
    fld = f.field
    q = fld.q
    t = f.value_table().values
    enc = fld.encodings
    chunk = max(1, _CHUNK_ENTRIES // q)
    for a in range(1, q):
        shifted = t[fld.add_vec(np.int32(a), enc)]
        d = fld.sub_vec(shifted, t)
        for b0 in range(1, q, chunk):
            shifts = np.arange(b0, min(b0 + chunk, q), dtype=np.int32)
            idx = fld.add_vec(shifts[:, None], enc[None, :])
            dd = fld.sub_vec(d[idx], d[None, :])
            ok = _perm_rows_ok(q, dd)
            if not ok.all():
                i = int(np.argmax(~ok))
                x, x2 = _first_collision(dd[i])
                return a, int(shifts[i]), x, x2
    return None


def is_alltop(f: Poly) -> bool:
    return alltop_witness(f) is None


def is_do_monomial_planar(p: int, r: int, k: int) -> bool:
    """Planarity of x^(p^k + 1) over GF(p^r): r / gcd(r, k) must be odd.

    k = 0 uses gcd(r, 0) = r, so the square is always planar.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    return (r // math.gcd(r, k)) % 2 == 1


@dataclass(frozen=True)
class DODecomposition:
    """g(x) = alpha * x^(p^k + 1) + additive_part(x) + constant, exactly."""

    k: int
    alpha: FieldElement
    additive_part: Poly
    constant: FieldElement

    def reconstruct(self) -> Poly:
        fld = self.alpha.field
        p = fld.p
        mono = Poly.monomial(fld, p**self.k + 1, self.alpha)
        return mono + self.additive_part + Poly.constant(fld, self.constant)


def _p_power_exponents(fld: FieldSpec) -> set[int]:
    exps = set()
    e = 1
    while e < fld.q:
        exps.add(e)
        e *= fld.p
    return exps


def do_decompose(g: Poly) -> DODecomposition | None:
    """Split a reduced polynomial into quadratic-monomial + additive + constant.

    Succeeds exactly when, after removing the constant term and every term
    with a power-of-p exponent, a single term of exponent p^k + 1 remains.
    The shift beta of an underlying alpha*(x+beta)^(p^k+1) is absorbed into
    the additive and constant parts and is not recovered.
    """
    fld = g.field
    deg = g.degree()
    if deg is not None and deg >= fld.q:
        raise ValueError("do_decompose expects a reduced polynomial")
    p_powers = _p_power_exponents(fld)
    additive: dict[int, int] = {}
    rest: dict[int, int] = {}
    const = 0
    for e, c in g.terms.items():
        if e == 0:
            const = c
        elif e in p_powers:
            additive[e] = c
        else:
            rest[e] = c
    if len(rest) != 1:
        return None
    (e, alpha_enc), = rest.items()
    m = e - 1
    k = 0
    while m > 1 and m % fld.p == 0:
        m //= fld.p
        k += 1
    if m != 1:
        return None
    return DODecomposition(
        k=k,
        alpha=fld.element(alpha_enc),
        additive_part=Poly(fld, additive),
        constant=fld.element(const),
    )


def apply_equiv_transform(f: Poly, c, s, t, M: Poly, d) -> Poly:
    """c * f(s*x + t) + M(x) + d, reduced; c, s nonzero and M additive."""
    fld = f.field
    c_enc = fld.enc_of(c)
    s_enc = fld.enc_of(s)
    if c_enc == 0 or s_enc == 0:
        raise ZeroScale("transform scales c and s must be nonzero")
    if M.field != fld:
        raise NonAdditiveM("additive part lives in a different field")
    if not is_additive_function(M):
        raise NonAdditiveM(f"{M} is not an additive function")
    g = polyfun.shift_scale(f, s_enc, t) * c_enc
    return (g + M + Poly.constant(fld, d)).reduce()


def alltop_deltas_decompose(f: Poly) -> bool:
    """For an Alltop-type f: does every reduced difference decompose as
    quadratic monomial + additive + constant?  Raises NotAlltop otherwise."""
    w = alltop_witness(f)
    if w is not None:
        raise NotAlltop(
            f"not an Alltop-type function (witness a={w[0]}, b={w[1]}, x={w[2]}, x'={w[3]})"
        )
    fld = f.field
    for a in range(1, fld.q):
        if do_decompose(polyfun.delta(f, a).reduce()) is None:
            return False
    return True
