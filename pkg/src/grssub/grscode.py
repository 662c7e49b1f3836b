"""Generalized Reed-Solomon codes over F_Q.

A codeword is ``(b_0 f(a_0), ..., b_{n-1} f(a_{n-1}))`` for a message
polynomial ``f`` of degree < k.  Locators ``a_j`` must be distinct and
nonzero, multipliers ``b_j`` nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CodeError, DimensionError
from .extension import ExtensionCtx, ext_add, ext_mul, ext_pow, nth_root_of_unity


@dataclass(frozen=True, eq=False)
class GrsCode:
    """GRS code with locators/multipliers stored as ``(n, m)`` coefficient rows.

    ``delta`` and ``alpha`` are only set for codes built by :func:`cyclic_grs`
    (directly or through :func:`auxiliary_code`).
    """

    ctx: ExtensionCtx
    locators: np.ndarray
    multipliers: np.ndarray
    k: int
    delta: int | None = None
    alpha: np.ndarray | None = None

    def __post_init__(self):
        ctx = self.ctx
        A = np.array(self.locators, dtype=np.uint8)
        B = np.array(self.multipliers, dtype=np.uint8)
        if A.ndim != 2 or A.shape[1] != ctx.m:
            raise CodeError(f"locators must have shape (n, {ctx.m}), got {A.shape}")
        if B.shape != A.shape:
            raise CodeError(f"multipliers shape {B.shape} does not match locators {A.shape}")
        if A.size and int(max(A.max(), B.max())) >= ctx.q:
            raise CodeError(f"coefficients must lie in F_{ctx.q}")
        n = A.shape[0]
        if not 1 <= self.k <= n <= ctx.Q:
            raise DimensionError(f"need 1 <= k <= n <= Q, got k={self.k}, n={n}, Q={ctx.Q}")
        idx = ctx.to_int(A)
        if np.any(idx == 0):
            raise CodeError(f"locator at position {int(np.flatnonzero(idx == 0)[0])} is zero")
        uniq, counts = np.unique(idx, return_counts=True)
        if np.any(counts > 1):
            raise CodeError(f"locators are not distinct: element {int(uniq[counts > 1][0])} repeats")
        bad = np.flatnonzero(ctx.to_int(B) == 0)
        if bad.size:
            raise CodeError(f"multiplier at position {int(bad[0])} is zero")
        A.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "locators", A)
        object.__setattr__(self, "multipliers", B)

    @property
    def n(self) -> int:
        return self.locators.shape[0]

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def is_cyclic(self) -> bool:
        return self.delta is not None

    def __repr__(self):
        tag = f", delta={self.delta}" if self.is_cyclic else ""
        return f"GrsCode(n={self.n}, k={self.k}, d={self.d}, Q={self.ctx.Q}{tag})"


def locator_powers(code: GrsCode, count: int):
    """``(count, n, m)`` array whose row i holds a_j^i."""
    ctx = code.ctx
    P = np.empty((count, code.n, ctx.m), dtype=np.uint8)
    if count:
        P[0] = ctx.one
    for i in range(1, count):
        P[i] = ext_mul(P[i - 1], code.locators, ctx)
    return P


def canonical_generator(code: GrsCode):
    """k x n generator over F_Q with entry (i, j) = b_j a_j^i; shape ``(k, n, m)``."""
    return ext_mul(code.multipliers, locator_powers(code, code.k), code.ctx)


def encode(code: GrsCode, f):
    """Evaluate message(s) ``f`` of shape ``(..., k, m)`` by Horner's rule."""
    ctx = code.ctx
    f = np.asarray(f, dtype=np.uint8)
    if f.shape[-2:] != (code.k, ctx.m):
        raise DimensionError(f"message must have shape (..., {code.k}, {ctx.m}), got {f.shape}")
    acc = np.broadcast_to(f[..., -1, None, :], f.shape[:-2] + (code.n, ctx.m))
    for i in range(code.k - 2, -1, -1):
        acc = ext_add(ext_mul(acc, code.locators, ctx), f[..., i, None, :], ctx)
    return ext_mul(acc, code.multipliers, ctx)


def ext_vecmat(f, G, ctx: ExtensionCtx):
    """F_Q vector-matrix product: ``(..., k, m) x (k, n, m) -> (..., n, m)``."""
    f = np.asarray(f, dtype=np.uint8)
    out = np.zeros(f.shape[:-2] + G.shape[1:], dtype=np.uint8)
    for i in range(G.shape[0]):
        out = ext_add(out, ext_mul(f[..., i, None, :], G[i], ctx), ctx)
    return out


def grs_code(ctx: ExtensionCtx, locators, multipliers, k: int) -> GrsCode:
    return GrsCode(ctx, np.asarray(locators), np.asarray(multipliers), k)


def cyclic_grs(ctx: ExtensionCtx, n: int, k: int, delta: int) -> GrsCode:
    """Cyclic GRS code: a_i = alpha^i, b_i = alpha^(i*delta) for the canonical
    primitive n-th root of unity alpha."""
    alpha = nth_root_of_unity(ctx, n)
    A = np.empty((n, ctx.m), dtype=np.uint8)
    A[0] = ctx.one
    for i in range(1, n):
        A[i] = ext_mul(A[i - 1], alpha, ctx)
    B = ext_pow(A, delta % n, ctx)
    return GrsCode(ctx, A, B, k, delta=delta, alpha=alpha)


def auxiliary_code(code: GrsCode, s: int, t: int) -> GrsCode:
    """The code left after forcing the s lowest and t highest message
    coefficients to zero: dimension k-s-t, multipliers b_j a_j^s."""
    if s < 0 or t < 0:
        raise DimensionError(f"s and t must be nonnegative, got s={s}, t={t}")
    if s + t >= code.k:
        raise DimensionError(f"s + t = {s + t} must be smaller than k = {code.k}")
    ctx = code.ctx
    B = ext_mul(code.multipliers, ext_pow(code.locators, s, ctx), ctx)
    delta = None if code.delta is None else code.delta + s
    return GrsCode(ctx, code.locators, B, code.k - s - t, delta=delta, alpha=code.alpha)


def error_radius(d: int) -> int:
    """floor((d - 1) / 2)."""
    if d < 1:
        raise ValueError(f"distance must be >= 1, got {d}")
    return (d - 1) // 2
