"""Table-backed arithmetic in a small base field F_q, q = p^e <= 256.

Elements are integers in ``range(q)``.  The base-p digits of an element,
least significant first, are its coefficients as a polynomial over F_p
reduced modulo the defining polynomial ``base_poly``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import FieldError, ReducibleError

MAX_Q = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod_prime(num, den, p):
    """Remainder of ``num / den`` over F_p; both little-endian, ``den`` monic."""
    rem = [c % p for c in num]
    d = len(den) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c:
            for i, coef in enumerate(den):
                rem[top - d + i] = (rem[top - d + i] - c * coef) % p
    return _trim(rem[:d])


def find_factor_prime(poly, p):
    """Return a monic factor of degree <= deg/2 over F_p, or None if irreducible."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            cand = list(low) + [1]
            if not poly_mod_prime(poly, cand, p):
                return cand
    return None


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of F_q: prime ``p``, degree ``e`` and a monic irreducible
    ``base_poly`` of degree ``e`` over F_p (little-endian; ignored when e = 1)."""

    p: int
    e: int = 1
    base_poly: tuple = ()

    @property
    def q(self) -> int:
        return self.p**self.e


class SmallField:
    """F_q with precomputed ``add``, ``neg``, ``mul`` and ``inv`` tables.

    Tables are read-only ``uint8`` arrays, so the field object may be shared
    freely.  Scalar methods accept ints or integer numpy arrays.
    """

    def __init__(self, spec: FieldSpec):
        p, e = spec.p, spec.e
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree e={e} must be >= 1")
        q = p**e
        if q > MAX_Q:
            raise FieldError(f"q={q} exceeds the supported maximum {MAX_Q}")
        if e == 1:
            base_poly = (0, 1)
        else:
            base_poly = tuple(int(c) % p for c in spec.base_poly)
            if len(base_poly) != e + 1 or base_poly[-1] != 1:
                raise FieldError(
                    f"base_poly must be monic of degree {e} (length {e + 1}), got {list(spec.base_poly)}"
                )
            factor = find_factor_prime(base_poly, p)
            if factor is not None:
                raise ReducibleError(base_poly, factor)
        self.spec = FieldSpec(p, e, base_poly if e > 1 else ())
        self.p, self.e, self.q = p, e, q
        self.base_poly = base_poly

        D = self.digits(np.arange(q))  # (q, e)
        pw = p ** np.arange(e)

        add = ((D[:, None, :] + D[None, :, :]) % p) @ pw
        neg = ((p - 1) * D % p) @ pw

        conv = np.zeros((q, q, 2 * e - 1), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                conv[:, :, i + j] += D[:, None, i] * D[None, :, j]
        conv %= p
        for top in range(2 * e - 2, e - 1, -1):
            c = conv[:, :, top].copy()
            for i in range(e + 1):
                conv[:, :, top - e + i] = (conv[:, :, top - e + i] - c * base_poly[i]) % p
        mul = conv[:, :, :e] @ pw

        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols

        self.add_table = _frozen(add)
        self.neg_table = _frozen(neg)
        self.mul_table = _frozen(mul)
        self.inv_table = _frozen(inv)
        self.sub_table = _frozen(add[:, neg])

    order = property(lambda self: self.q)
    zero = 0
    one = 1

    def __repr__(self):
        if self.e == 1:
            return f"SmallField(q={self.q})"
        return f"SmallField(q={self.q}, base_poly={list(self.base_poly)})"

    def __eq__(self, other):
        return isinstance(other, SmallField) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def digits(self, a):
        """Base-p coefficient digits of ``a`` (little-endian), shape ``(..., e)``."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self.p ** np.arange(self.e)) % self.p

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.sub_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.inv_table[a]

    def pow(self, a, n: int):
        """``a**n`` by square-and-multiply; ``pow(0, 0) == 1``."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = np.ones_like(np.asarray(a, dtype=np.uint8))
        base = np.asarray(a, dtype=np.uint8)
        while n:
            if n & 1:
                result = self.mul_table[result, base]
            base = self.mul_table[base, base]
            n >>= 1
        return int(result) if result.ndim == 0 else result


def _frozen(table):
    arr = np.ascontiguousarray(table, dtype=np.uint8)
    arr.setflags(write=False)
    return arr


def build_field(spec: FieldSpec) -> SmallField:
    return SmallField(spec)


def gf(p: int, e: int = 1, base_poly=()) -> SmallField:
    """Shorthand: ``gf(2)``, ``gf(3, 2, [1, 0, 1])``."""
    return SmallField(FieldSpec(p, e, tuple(base_poly)))


def fq_pow(field: SmallField, a, n: int):
    return field.pow(a, n)
