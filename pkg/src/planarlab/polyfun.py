"""Polynomial functions over GF(q): parsing, reduction, evaluation tables,
difference operators, and the monomial degree calculus.

Polynomials are sparse maps exponent -> nonzero coefficient encoding and stay
formal by default: exponents may reach or exceed q until reduce() rewrites
them modulo x^q - x.  Degree statements about difference polynomials concern
the formal degree, which silent reduction would destroy.

Text grammar (whitespace ignored, output uses decreasing exponents):

    poly  := term ('+' term)*
    term  := coeff '*' 'x' '^' exp | coeff '*' 'x' | 'x' '^' exp | 'x' | coeff

where coeff is a canonical element encoding in [0, q) and exp a non-negative
decimal integer.
"""

from __future__ import annotations

import re
import warnings

import numpy as np

from . import binom
from .errors import CoefficientOutOfRange, FieldMismatch, PolySyntaxError, ZeroScale
from .field import FieldElement, FieldSpec


class ZeroShiftWarning(UserWarning):
    """Difference operator invoked with shift a = 0."""


_TERM_RE = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


class Poly:
    """Sparse polynomial over a FieldSpec; immutable once constructed.

    ``terms`` maps exponents to coefficient encodings; zero coefficients are
    never stored, so the zero polynomial has an empty map and degree() None.
    """

    __slots__ = ("field", "_terms")

    def __init__(self, field: FieldSpec, terms=None):
        self.field = field
        clean: dict[int, int] = {}
        if terms:
            for e, c in dict(terms).items():
                if not isinstance(e, (int, np.integer)) or e < 0:
                    raise ValueError(f"exponent {e!r} must be a non-negative integer")
                enc = field.enc_of(c)
                if enc:
                    clean[int(e)] = enc
        self._terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field)

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Poly":
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field: FieldSpec, exp: int, coeff=1) -> "Poly":
        return cls(field, {exp: coeff})

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs) -> "Poly":
        """Dense coefficient sequence, index = exponent."""
        return cls(field, {e: c for e, c in enumerate(coeffs)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the sparse exponent -> coefficient-encoding map."""
        return dict(self._terms)

    def coefficient(self, exp: int) -> FieldElement:
        return self.field.element(self._terms.get(exp, 0))

    def degree(self) -> int | None:
        """Formal degree; None for the zero polynomial (never compare numerically)."""
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __repr__(self) -> str:
        return f"Poly[{self.field!r}]({self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring-ish operations ----------------------------------------------

    def _check_same_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_field(other)
        merged = dict(self._terms)
        f = self.field
        for e, c in other._terms.items():
            merged[e] = f.add(merged.get(e, 0), c)
        return Poly(self.field, merged)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_same_field(other)
        merged = dict(self._terms)
        f = self.field
        for e, c in other._terms.items():
            merged[e] = f.sub(merged.get(e, 0), c)
        return Poly(self.field, merged)

    def __mul__(self, scalar) -> "Poly":
        """Scalar multiple; polynomial-by-polynomial products are out of scope."""
        s = self.field.enc_of(scalar)
        f = self.field
        return Poly(self.field, {e: f.mul(c, s) for e, c in self._terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(self.field, {e: f.neg(c) for e, c in self._terms.items()})

    # -- function semantics -------------------------------------------------

    def reduce(self) -> "Poly":
        """Rewrite exponents modulo x^q - x; the induced function is unchanged."""
        q = self.field.q
        f = self.field
        merged: dict[int, int] = {}
        for e, c in self._terms.items():
            re_ = e if e == 0 else (e - 1) % (q - 1) + 1
            merged[re_] = f.add(merged.get(re_, 0), c)
        return Poly(self.field, merged)

    def __call__(self, x) -> FieldElement:
        """Evaluate by sparse Horner over the terms in decreasing exponent order."""
        f = self.field
        xe = f.enc_of(x)
        items = sorted(self._terms.items(), reverse=True)
        if not items:
            return f.zero
        acc = 0
        prev: int | None = None
        for e, c in items:
            if prev is None:
                acc = c
            else:
                acc = f.add(f.mul(acc, f.pow(xe, prev - e)), c)
            prev = e
        acc = f.mul(acc, f.pow(xe, items[-1][0]))
        return f.element(acc)

    def value_table(self) -> "ValueTable":
        """Evaluate at all q points (exponents reduced on the fly; same function)."""
        f = self.field
        q = f.q
        enc = f.encodings
        total = np.zeros(q, dtype=np.int32)
        for e, c in self._terms.items():
            re_ = e if e == 0 else (e - 1) % (q - 1) + 1
            col = f.pow_vec(enc, re_)
            total = f.add_vec(total, f.mul_vec(col, np.int32(c)))
        return ValueTable(f, total)


class ValueTable:
    """Length-q table of value encodings, entry e = f(element with encoding e)."""

    __slots__ = ("field", "_values")

    def __init__(self, field: FieldSpec, values):
        arr = np.asarray(values, dtype=np.int32)
        if arr.shape != (field.q,):
            raise ValueError(f"expected {field.q} entries, got shape {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        """Read-only int32 array of value encodings."""
        return self._values

    def __len__(self) -> int:
        return self.field.q

    def __getitem__(self, i: int) -> int:
        return int(self._values[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValueTable):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._values, other._values)

    def __repr__(self) -> str:
        return f"ValueTable[{self.field!r}]({self._values.tolist()})"


def parse_poly(text: str, field: FieldSpec) -> Poly:
    """Parse the grammar above; like terms combine, formal degree is preserved."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise PolySyntaxError("empty polynomial text")
    acc: dict[int, int] = {}
    for part in stripped.split("+"):
        m = _TERM_RE.match(part)
        if m is None:
            raise PolySyntaxError(f"bad term {part!r}")
        if m.group(3) is not None:
            coeff, exp = int(m.group(3)), 0
        else:
            coeff = int(m.group(1)) if m.group(1) is not None else 1
            exp = int(m.group(2)) if m.group(2) is not None else 1
        if coeff >= field.q:
            raise CoefficientOutOfRange(
                f"coefficient {coeff} outside [0, {field.q})"
            )
        acc[exp] = field.add(acc.get(exp, 0), coeff)
    return Poly(field, acc)


def format_poly(f: Poly) -> str:
    """Canonical text, terms in decreasing exponent order; '0' for the zero poly."""
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f._terms, reverse=True):
        c = f._terms[e]
        if e == 0:
            parts.append(str(c))
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if c == 1 else f"{c}*{xs}")
    return " + ".join(parts)


def value_table(f: Poly) -> ValueTable:
    return f.value_table()


_POW_TABLE_MAX_Q = 4096


def _powers_of(fld: FieldSpec, base_enc: int, exps: np.ndarray) -> np.ndarray:
    """base**exps via the cached per-field power table when it applies."""
    if fld.q <= _POW_TABLE_MAX_Q and (len(exps) == 0 or int(exps.max()) < fld.q):
        return fld.power_table[base_enc, exps]
    return fld.pow_elemwise(np.full(exps.shape, base_enc, dtype=np.int32), exps)


def delta(f: Poly, a) -> Poly:
    """Formal difference polynomial f(x + a) - f(x).

    Expands each monomial binomially, keeping only the coefficients that are
    nonzero mod p (digit domination); a = 0 is flagged with ZeroShiftWarning
    and yields the zero polynomial.
    """
    fld = f.field
    a_enc = fld.enc_of(a)
    if a_enc == 0:
        warnings.warn(
            "difference with shift a = 0 is the zero polynomial",
            ZeroShiftWarning,
            stacklevel=2,
        )
        return Poly.zero(fld)
    acc: dict[int, int] = {}
    for n, c in f._terms.items():
        if n == 0:
            continue
        ks, bs = binom.expansion(n, fld.p)
        ks, bs = ks[1:], bs[1:]  # k = 0 reproduces f(x), which cancels
        apow = _powers_of(fld, a_enc, ks)
        coeffs = fld.mul_vec(fld.mul_vec(bs.astype(np.int32), apow), np.int32(c))
        for k, cc in zip(ks.tolist(), coeffs.tolist()):
            if cc:
                e = n - k
                prev = acc.get(e)
                acc[e] = cc if prev is None else fld.add(prev, cc)
    return Poly(fld, acc)


def delta_table(f: Poly, a) -> ValueTable:
    """Table form of the difference: entry e = T[e + a] - T[e], in O(q)."""
    fld = f.field
    a_enc = fld.enc_of(a)
    t = f.value_table().values
    shifted = t[fld.add_vec(np.int32(a_enc), fld.encodings)]
    return ValueTable(fld, fld.sub_vec(shifted, t))


def double_delta(f: Poly, a, b) -> Poly:
    """Second difference: delta(delta(f, a), b)."""
    return delta(delta(f, a), b)


def shift_scale(f: Poly, s, t) -> Poly:
    """Substitute x -> s*x + t (s nonzero), expanded and combined."""
    fld = f.field
    s_enc = fld.enc_of(s)
    t_enc = fld.enc_of(t)
    if s_enc == 0:
        raise ZeroScale("scale factor s must be nonzero")
    acc: dict[int, int] = {}
    for n, c in f._terms.items():
        if n == 0:
            acc[0] = fld.add(acc.get(0, 0), c)
            continue
        ks, bs = binom.expansion(n, fld.p)
        spow = _powers_of(fld, s_enc, ks)
        tpow = _powers_of(fld, t_enc, n - ks)
        coeffs = fld.mul_vec(
            fld.mul_vec(bs.astype(np.int32), fld.mul_vec(spow, tpow)), np.int32(c)
        )
        for k, cc in zip(ks.tolist(), coeffs.tolist()):
            if cc:
                prev = acc.get(k)
                acc[k] = cc if prev is None else fld.add(prev, cc)
    return Poly(fld, acc)


def predicted_delta_degree(n: int, p: int) -> int:
    """Degree of the difference of x^n: write n = p^s * m with gcd(m, p) = 1
    and return p^s * (m - 1); zero exactly when n is a power of p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = 0
    m = n
    while m % p == 0:
        m //= p
        s += 1
    return p**s * (m - 1)


def preimage_degrees(s: int, l: int, p: int) -> set[int]:
    """All monomial degrees whose difference has degree p^s * l (gcd(l, p) = 1).

    These are the n = p^t * (p^(s-t) * l + 1) for 0 <= t <= s, except that at
    t = s the inner factor l + 1 may be divisible by p, in which case that n
    has a different p-adic shape and its difference degree is not p^s * l.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if l < 1 or l % p == 0:
        raise ValueError("l must be positive and coprime to p")
    out = set()
    for t in range(s + 1):
        m = p ** (s - t) * l + 1
        if m % p:
            out.add(p**t * m)
    return out
