"""Finite fields GF(p^r) of odd characteristic.

An element with polynomial-basis coefficients (c_0, ..., c_{r-1}) over Z_p is
identified by its canonical integer encoding sum(c_i * p**i), so encodings
run over [0, q) with q = p**r.  Encoding 0 is the zero element and encoding 1
the multiplicative identity; encodings below p form the prime subfield, with
the encoding equal to the residue.

The reduction modulus is deterministic: the monic irreducible of degree r
over Z_p whose non-leading coefficient vector has the smallest encoding.  It
is found by scanning encodings upward, testing irreducibility by trial
division against every monic polynomial of degree at most r // 2.  Two fields
built from the same (p, r) are therefore interchangeable, in this process or
any other.

Scalar arithmetic works on plain integers.  The ``*_vec`` methods operate on
numpy arrays of encodings (any broadcastable shapes) and are the performance
core used by the classification and search modules.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import (
    CharTwoUnsupported,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
)

DEFAULT_MAX_ORDER = 10_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    """Base-p digits of value, low-to-high, padded to width."""
    out = []
    for _ in range(width):
        value, rem = divmod(value, p)
        out.append(rem)
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo the monic polynomial den, coefficients mod p."""
    rem = list(num)
    d = len(den) - 1
    while len(rem) > d:
        lead = rem[-1]
        if lead:
            k = len(rem) - 1 - d
            for i in range(d):
                rem[k + i] = (rem[k + i] - lead * den[i]) % p
        rem.pop()
    return rem


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division of a monic polynomial by all monic factors of degree <= r//2."""
    r = len(poly) - 1
    if r == 1:
        return True
    if poly[0] == 0:
        return False  # divisible by x
    for d in range(1, r // 2 + 1):
        for enc in range(p**d):
            divisor = _digits(enc, p, d) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


def _canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)
    for enc in range(p**r):
        cand = _digits(enc, p, r) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible of degree {r} over Z_{p}")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1, *, max_order: int = DEFAULT_MAX_ORDER) -> "FieldSpec":
    """Construct (or fetch the cached) GF(p^r) with the canonical modulus.

    Raises CharTwoUnsupported for p = 2, NotPrime for composite p, and
    FieldTooLarge when p**r exceeds max_order.
    """
    if not isinstance(p, int) or not isinstance(r, int):
        raise TypeError("p and r must be integers")
    if p == 2:
        raise CharTwoUnsupported("characteristic 2 is not supported")
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree r must be >= 1")
    if p**r > max_order:
        raise FieldTooLarge(f"p**r = {p**r} exceeds the bound {max_order}")
    return FieldSpec(p, r, _canonical_modulus(p, r))


class FieldSpec:
    """GF(p^r) with element encodings in [0, q); obtain instances via make_field."""

    __slots__ = ("p", "r", "q", "modulus", "_cache")

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._cache: dict[str, np.ndarray] = {}

    # -- identity ------------------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __getstate__(self):
        return (self.p, self.r, self.modulus)

    def __setstate__(self, state):
        self.p, self.r, self.modulus = state
        self.q = self.p**self.r
        self._cache = {}

    def to_json_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus)}

    # -- elements ------------------------------------------------------

    def enc_of(self, x) -> int:
        """Coerce an element-like value (FieldElement or encoding) to an int encoding."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return x.enc
        enc = int(x)
        if not 0 <= enc < self.q:
            raise ValueError(f"encoding {enc} outside [0, {self.q})")
        return enc

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.enc_of(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements in increasing encoding order."""
        return [FieldElement(self, e) for e in range(self.q)]

    def __iter__(self):
        return iter(self.elements())

    # -- cached tables ---------------------------------------------------

    @property
    def encodings(self) -> np.ndarray:
        """arange(q) as int32; treat as read-only."""
        tab = self._cache.get("enc")
        if tab is None:
            tab = np.arange(self.q, dtype=np.int32)
            tab.setflags(write=False)
            self._cache["enc"] = tab
        return tab

    @property
    def _coeff_mat(self) -> np.ndarray:
        tab = self._cache.get("coeff")
        if tab is None:
            q, p, r = self.q, self.p, self.r
            tab = np.empty((q, r), dtype=np.int32)
            t = np.arange(q, dtype=np.int32)
            for i in range(r):
                tab[:, i] = t % p
                t //= p
            tab.setflags(write=False)
            self._cache["coeff"] = tab
        return tab

    @property
    def _weights(self) -> np.ndarray:
        tab = self._cache.get("weights")
        if tab is None:
            tab = self.p ** np.arange(self.r, dtype=np.int32)
            tab.setflags(write=False)
            self._cache["weights"] = tab
        return tab

    @property
    def _xred(self) -> np.ndarray:
        """Rows k = coefficients of x^k reduced by the modulus, k in [0, 2r-2]."""
        tab = self._cache.get("xred")
        if tab is None:
            p, r = self.p, self.r
            rows: list[list[int]] = []
            for k in range(2 * r - 1):
                if k < r:
                    row = [0] * r
                    row[k] = 1
                else:
                    prev = rows[k - 1]
                    row = [0] + prev[:-1]
                    lead = prev[-1]
                    row = [(row[i] - lead * self.modulus[i]) % p for i in range(r)]
                rows.append(row)
            tab = np.array(rows, dtype=np.int32)
            tab.setflags(write=False)
            self._cache["xred"] = tab
        return tab

    @property
    def _frob1(self) -> np.ndarray:
        tab = self._cache.get("frob1")
        if tab is None:
            tab = self.pow_vec(self.encodings, self.p)
            tab.setflags(write=False)
            self._cache["frob1"] = tab
        return tab

    @property
    def trace_table(self) -> np.ndarray:
        """trace_table[e] = tr(element e) as a residue in [0, p)."""
        tab = self._cache.get("trace")
        if tab is None:
            acc = self.encodings.copy()
            conj = self.encodings
            for _ in range(self.r - 1):
                conj = self._frob1[conj]
                acc = self.add_vec(acc, conj)
            if not (acc < self.p).all():  # pragma: no cover - sanity
                raise AssertionError("trace left the prime subfield")
            tab = acc.astype(np.int32)
            tab.setflags(write=False)
            self._cache["trace"] = tab
        return tab

    @property
    def _inv_table(self) -> np.ndarray:
        tab = self._cache.get("inv")
        if tab is None:
            tab = self.pow_vec(self.encodings, self.q - 2)
            tab.setflags(write=False)
            self._cache["inv"] = tab
        return tab

    @property
    def power_table(self) -> np.ndarray:
        """Matrix POW[a, e] = a**e for e in [0, q); built on demand, O(q^2) memory.

        Backs the difference-operator expansions; exponents at or above q
        take the slow path instead.
        """
        tab = self._cache.get("pow")
        if tab is None:
            enc = self.encodings
            tab = np.ones((self.q, self.q), dtype=np.int32)
            col = np.ones(self.q, dtype=np.int32)
            for e in range(1, self.q):
                col = self.mul_vec(col, enc)
                tab[:, e] = col
            tab.setflags(write=False)
            self._cache["pow"] = tab
        return tab

    @property
    def trace_bilinear(self) -> np.ndarray:
        """Matrix TB[b, x] = tr(b * x); built on demand, O(q^2) memory."""
        tab = self._cache.get("tb")
        if tab is None:
            enc = self.encodings
            tab = self.trace_table[self.mul_vec(enc[:, None], enc[None, :])]
            tab.setflags(write=False)
            self._cache["tb"] = tab
        return tab

    # -- vector kernel ---------------------------------------------------

    def add_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        if self.r == 1:
            return (a + b) % self.p
        C = self._coeff_mat
        return ((C[a] + C[b]) % self.p) @ self._weights

    def sub_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        if self.r == 1:
            return (a - b) % self.p
        C = self._coeff_mat
        return ((C[a] - C[b]) % self.p) @ self._weights

    def neg_vec(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int32)
        if self.r == 1:
            return (-a) % self.p
        return ((-self._coeff_mat[a]) % self.p) @ self._weights

    def mul_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        if self.r == 1:
            return (a * b) % self.p
        r = self.r
        A = self._coeff_mat[a]
        B = self._coeff_mat[b]
        shape = np.broadcast_shapes(A.shape[:-1], B.shape[:-1])
        P = np.zeros(shape + (2 * r - 1,), dtype=np.int32)
        for i in range(r):
            for j in range(r):
                P[..., i + j] += A[..., i] * B[..., j]
        digits = (P % self.p) @ self._xred % self.p
        return digits @ self._weights

    def pow_vec(self, base, n: int) -> np.ndarray:
        """base**n elementwise for a single non-negative exponent; 0**0 = 1."""
        if n < 0:
            raise ValueError("exponent must be non-negative")
        base = np.asarray(base, dtype=np.int32)
        res = np.ones(base.shape, dtype=np.int32)
        cur = base
        while n:
            if n & 1:
                res = self.mul_vec(res, cur)
            n >>= 1
            if n:
                cur = self.mul_vec(cur, cur)
        return res

    def pow_elemwise(self, base, exps) -> np.ndarray:
        """base[i]**exps[i] elementwise with per-entry exponents; 0**0 = 1."""
        base = np.asarray(base, dtype=np.int32)
        e = np.array(exps, dtype=np.int64)
        if (e < 0).any():
            raise ValueError("exponents must be non-negative")
        res = np.ones(np.broadcast_shapes(base.shape, e.shape), dtype=np.int32)
        cur = np.broadcast_to(base, res.shape).copy()
        e = np.broadcast_to(e, res.shape).copy()
        while e.any():
            odd = (e & 1).astype(bool)
            if odd.any():
                res[odd] = self.mul_vec(res[odd], cur[odd])
            e >>= 1
            if e.any():
                cur = self.mul_vec(cur, cur)
        return res

    # -- scalar kernel (int encodings in, int encodings out) --------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_vec(a, b))

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_vec(a, b))

    def neg(self, a: int) -> int:
        return int(self.neg_vec(a))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_vec(a, b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return int(self._inv_table[a])

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            raise ValueError("exponent must be non-negative")
        result = 1
        cur = a
        while n:
            if n & 1:
                result = self.mul(result, cur)
            n >>= 1
            if n:
                cur = self.mul(cur, cur)
        return result

    def frobenius(self, a: int, k: int = 1) -> int:
        """a**(p**k); k reduced mod r since the automorphism has order r."""
        if k < 0:
            raise ValueError("k must be non-negative")
        e = a
        for _ in range(k % self.r):
            e = int(self._frob1[e])
        return e

    def trace(self, a: int) -> int:
        """Sum of the r conjugates, returned as a residue in [0, p)."""
        return int(self.trace_table[a])


class FieldElement:
    """Value type: an element of a FieldSpec, identified by (field, encoding).

    Arithmetic operators validate that both operands share the field; plain
    ints mix in as encodings.
    """

    __slots__ = ("field", "enc")

    def __init__(self, field: FieldSpec, enc: int):
        self.field = field
        self.enc = enc

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Polynomial-basis coefficients, low-to-high."""
        return tuple(_digits(self.enc, self.field.p, self.field.r))

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.enc})"

    def __int__(self) -> int:
        return self.enc

    def __bool__(self) -> bool:
        return self.enc != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.r, self.enc))

    def _coerce(self, other) -> int:
        return self.field.enc_of(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.enc, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.enc, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.enc))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.enc, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.enc, n))

    def __truediv__(self, other):
        return FieldElement(
            self.field, self.field.mul(self.enc, self.field.inv(self._coerce(other)))
        )

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.enc))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.enc, k))

    def trace(self) -> int:
        return self.field.trace(self.enc)
