"""F_Q = F_q^m as coefficient rows over F_q.

An element of F_Q is a length-``m`` ``uint8`` row of F_q elements, leftmost
entry the coefficient of x^0.  Multiplication is carried out as
``u @ toeplitz(v) @ R`` where ``R`` is the (2m-1) x m reduction matrix of the
defining polynomial.  All element operations broadcast over leading axes, so a
``(k, n, m)`` array is a k x n matrix over F_Q.
"""
from __future__ import annotations

import functools
import itertools

import numpy as np

from .errors import FieldError, OrderError, ReducibleError
from .smallfield import SmallField


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def vecmat(u, M, field: SmallField):
    """Batched row-vector times matrix over F_q: ``(..., a) x (..., a, b)``."""
    add, mul = field.add_table, field.mul_table
    u = np.asarray(u)
    M = np.asarray(M)
    shape = np.broadcast_shapes(u.shape[:-1], M.shape[:-2]) + (M.shape[-1],)
    out = np.zeros(shape, dtype=np.uint8)
    for l in range(M.shape[-2]):
        out = add[out, mul[u[..., l, None], M[..., l, :]]]
    return out


def matmat(A, B, field: SmallField):
    """Batched matrix product over F_q: ``(..., a, l) x (..., l, b)``."""
    add, mul = field.add_table, field.mul_table
    A = np.asarray(A)
    B = np.asarray(B)
    shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (A.shape[-2], B.shape[-1])
    out = np.zeros(shape, dtype=np.uint8)
    for l in range(A.shape[-1]):
        out = add[out, mul[A[..., :, l, None], B[..., None, l, :]]]
    return out


def _poly_rem(num, den, field):
    """Remainder of ``num / den`` over F_q, ``den`` monic; lists of ints."""
    rem = list(num)
    d = len(den) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c:
            for i, coef in enumerate(den):
                rem[top - d + i] = int(field.sub(rem[top - d + i], field.mul(c, coef)))
    return rem[:d]


def find_factor(poly, field: SmallField):
    """A monic factor of ``poly`` over F_q of degree <= deg/2, or None."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(field.q), repeat=d):
            cand = list(low) + [1]
            if not any(_poly_rem(poly, cand, field)):
                return cand
    return None


def toeplitz(v):
    """m x (2m-1) matrix with row i holding ``v`` shifted right by i."""
    v = np.asarray(v, dtype=np.uint8)
    m = v.shape[-1]
    T = np.zeros(v.shape[:-1] + (m, 2 * m - 1), dtype=np.uint8)
    for i in range(m):
        T[..., i, i : i + m] = v
    return T


class ExtensionCtx:
    """Degree-``m`` extension of ``base`` defined by the monic irreducible
    ``ext_poly`` (little-endian coefficients over F_q).

    >>> from grssub.smallfield import gf
    >>> F8 = ExtensionCtx(gf(2), [1, 1, 0, 1])
    >>> F8.R.tolist()
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]
    """

    def __init__(self, base: SmallField, ext_poly=None, *, check_irreducible: bool = True):
        if ext_poly is None:
            ext_poly = (0, 1)
        poly = tuple(int(c) for c in ext_poly)
        m = len(poly) - 1
        if m < 1:
            raise FieldError("extension polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise FieldError(f"extension polynomial {list(poly)} is not monic")
        if any(not 0 <= c < base.q for c in poly):
            raise FieldError(f"extension polynomial {list(poly)} has coefficients outside F_{base.q}")
        if check_irreducible and m > 1:
            factor = find_factor(poly, base)
            if factor is not None:
                raise ReducibleError(poly, factor)
        self.base = base
        self.q = base.q
        self.m = m
        self.ext_poly = poly
        self.Q = base.q**m
        self.R = reduction_matrix(self)
        self.R.setflags(write=False)

    def __repr__(self):
        return f"ExtensionCtx(q={self.q}, m={self.m}, ext_poly={list(self.ext_poly)})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionCtx)
            and self.base == other.base
            and self.ext_poly == other.ext_poly
        )

    def __hash__(self):
        return hash((self.base, self.ext_poly))

    # -- element helpers ---------------------------------------------------

    @property
    def zero(self):
        return np.zeros(self.m, dtype=np.uint8)

    @property
    def one(self):
        e = np.zeros(self.m, dtype=np.uint8)
        e[0] = 1
        return e

    def from_int(self, idx):
        """Element(s) whose base-q digits (little-endian) are the coefficients."""
        idx = np.asarray(idx, dtype=np.int64)
        return ((idx[..., None] // self.q ** np.arange(self.m)) % self.q).astype(np.uint8)

    def to_int(self, u):
        u = np.asarray(u, dtype=np.int64)
        return u @ (self.q ** np.arange(self.m))

    def embed(self, c):
        """Subfield element(s) ``c`` as F_Q elements (c, 0, ..., 0)."""
        c = np.asarray(c, dtype=np.uint8)
        out = np.zeros(c.shape + (self.m,), dtype=np.uint8)
        out[..., 0] = c
        return out

    def elements(self):
        return self.from_int(np.arange(self.Q))

    @functools.cached_property
    def primitive(self):
        return primitive_element(self)

    def alpha_pow(self, i: int):
        """Power of the canonical primitive element."""
        return ext_pow(self.primitive, i % (self.Q - 1), self)


def reduction_step(j: int, ctx: ExtensionCtx):
    """The (j+1) x j matrix that annihilates coefficient w_j."""
    m = ctx.m
    if not m <= j <= 2 * m - 2:
        raise ValueError(f"step index j={j} outside [{m}, {2 * m - 2}]")
    F = ctx.base
    Rj = np.zeros((j + 1, j), dtype=np.uint8)
    Rj[np.arange(j), np.arange(j)] = 1
    for mu in range(j - m, j):
        Rj[j, mu] = F.neg(ctx.ext_poly[m - j + mu])
    return Rj


def reduction_matrix(ctx: ExtensionCtx):
    """R = R_{2m-2} R_{2m-3} ... R_m, shape (2m-1) x m."""
    m = ctx.m
    R = np.eye(2 * m - 1, dtype=np.uint8)
    for j in range(2 * m - 2, m - 1, -1):
        R = matmat(R, reduction_step(j, ctx), ctx.base)
    return R


def ext_mul(u, v, ctx: ExtensionCtx):
    """u (x) v = u T_v R."""
    return vecmat(vecmat(u, toeplitz(v), ctx.base), ctx.R, ctx.base)


def ext_add(u, v, ctx: ExtensionCtx):
    return ctx.base.add_table[np.asarray(u), np.asarray(v)]


def ext_sub(u, v, ctx: ExtensionCtx):
    return ctx.base.sub_table[np.asarray(u), np.asarray(v)]


def ext_neg(u, ctx: ExtensionCtx):
    return ctx.base.neg_table[np.asarray(u)]


def ext_pow(u, n: int, ctx: ExtensionCtx):
    u = np.asarray(u, dtype=np.uint8)
    if n < 0:
        return ext_pow(ext_inv(u, ctx), -n, ctx)
    result = np.broadcast_to(ctx.one, u.shape).copy()
    base = u
    while n:
        if n & 1:
            result = ext_mul(result, base, ctx)
        n >>= 1
        if n:
            base = ext_mul(base, base, ctx)
    return result


def ext_inv(u, ctx: ExtensionCtx):
    u = np.asarray(u, dtype=np.uint8)
    if np.any(~u.any(axis=-1)):
        raise ZeroDivisionError("zero has no multiplicative inverse in F_Q")
    return ext_pow(u, ctx.Q - 2, ctx)


def frobenius(u, ctx: ExtensionCtx):
    """The q-power map, which fixes exactly the subfield F_q."""
    return ext_pow(u, ctx.q, ctx)


def is_subfield(u):
    """True where all coefficients but the constant one vanish."""
    u = np.asarray(u)
    return ~u[..., 1:].any(axis=-1)


def element_order(u, ctx: ExtensionCtx) -> int:
    u = np.asarray(u, dtype=np.uint8)
    if not u.any():
        raise ZeroDivisionError("zero has no multiplicative order")
    order = ctx.Q - 1
    for r in prime_factors(ctx.Q - 1):
        while order % r == 0 and np.array_equal(ext_pow(u, order // r, ctx), ctx.one):
            order //= r
    return order


def primitive_element(ctx: ExtensionCtx):
    """Nonzero element of order Q-1 with the smallest integer index."""
    for idx in range(1, ctx.Q):
        u = ctx.from_int(idx)
        if element_order(u, ctx) == ctx.Q - 1:
            return u
    raise OrderError("no primitive element found")  # pragma: no cover


def nth_root_of_unity(ctx: ExtensionCtx, n: int):
    if n < 1 or (ctx.Q - 1) % n:
        raise OrderError(f"n must be a divisor of Q-1 = {ctx.Q - 1}, got n={n}")
    alpha = ext_pow(ctx.primitive, (ctx.Q - 1) // n, ctx)
    if element_order(alpha, ctx) != n:
        raise OrderError(f"element of order {n} not found")  # pragma: no cover
    return alpha
