"""Brute-force ground truth for small codes.

Nothing here goes through the Toeplitz/reduction-matrix representation or
the kernel computation: F_Q arithmetic is rebuilt from schoolbook polynomial
multiplication and codes are enumerated message by message.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EnumerationLimitError, InvariantError
from .extension import ExtensionCtx
from .extract import conjugacy_check
from .grscode import GrsCode, encode
from .smallfield import SmallField

DEFAULT_LIMIT = 2**20
MAX_TABLE_Q = 1024


class TableField:
    """F_Q with full add/mul tables over integer element indices, built by
    direct polynomial multiplication and long division by p(x)."""

    def __init__(self, ctx: ExtensionCtx):
        if ctx.Q > MAX_TABLE_Q:
            raise EnumerationLimitError(ctx.Q * ctx.Q, MAX_TABLE_Q * MAX_TABLE_Q, f"a {ctx.Q}x{ctx.Q} table")
        F, m, Q = ctx.base, ctx.m, ctx.Q
        self.q = Q
        self.subfield_q = ctx.q
        digits = ctx.from_int(np.arange(Q))  # (Q, m)
        pw = ctx.q ** np.arange(m)
        dtype = np.uint8 if Q <= 256 else np.uint16
        self.add_table = (F.add_table[digits[:, None, :], digits[None, :, :]].astype(np.int64) @ pw).astype(dtype)

        prod = np.zeros((Q, Q, 2 * m - 1), dtype=np.uint8)
        for i in range(m):
            for j in range(m):
                prod[:, :, i + j] = F.add_table[prod[:, :, i + j], F.mul_table[digits[:, None, i], digits[None, :, j]]]
        for top in range(2 * m - 2, m - 1, -1):
            lead = prod[:, :, top].copy()
            for i, coef in enumerate(ctx.ext_poly):
                prod[:, :, top - m + i] = F.sub_table[prod[:, :, top - m + i], F.mul_table[lead, coef]]
        self.mul_table = (prod[:, :, :m].astype(np.int64) @ pw).astype(dtype)

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = int(self.mul_table[r, a])
        return r


@dataclass(frozen=True, eq=False)
class CodewordSet:
    """Sorted, deduplicated codewords of a linear code over a field of size ``q``."""

    q: int
    n: int
    words: np.ndarray

    def __len__(self):
        return self.words.shape[0]

    def __contains__(self, word):
        w = np.asarray(word, dtype=self.words.dtype)
        return bool((self.words == w).all(axis=1).any())


def _check_limit(q: int, k: int, limit: int):
    needed = q**k
    if needed > limit:
        raise EnumerationLimitError(needed, limit, f"{q}^{k}" if needed > 10**9 else None)


def _canonical(words, q: int, n: int) -> CodewordSet:
    words = np.asarray(words).reshape(-1, n)
    if len(words) > 1 and n and q**n <= 2**64:
        # pack each word into one integer, first symbol most significant
        keys = np.zeros(len(words), dtype=np.uint64)
        for j in range(n):
            keys = keys * np.uint64(q) + words[:, j].astype(np.uint64)
        keys = np.unique(keys)
        out = np.empty((len(keys), n), dtype=words.dtype)
        for j in range(n - 1, -1, -1):
            out[:, j] = keys % np.uint64(q)
            keys //= np.uint64(q)
        words = out
    elif len(words) > 1 and n:
        # lexicographic row order; np.unique(axis=0) is far slower here
        words = words[np.lexsort(words.T[::-1])]
        keep = np.ones(len(words), dtype=bool)
        keep[1:] = (words[1:] != words[:-1]).any(axis=1)
        words = words[keep]
    elif n == 0:
        words = words[:1]
    return CodewordSet(q, n, np.ascontiguousarray(words))


def enumerate_codewords(G, field, limit: int = DEFAULT_LIMIT) -> CodewordSet:
    """All linear combinations of the rows of ``G`` over ``field`` (anything
    with ``q``/``add_table``/``mul_table``)."""
    return _canonical(_span_words(G, field, limit), field.q, np.shape(G)[1])


def _span_words(G, field, limit):
    G = np.asarray(G)
    k, n = G.shape
    _check_limit(field.q, k, limit)
    dtype = field.add_table.dtype
    if k == 0:
        return np.zeros((1, n), dtype=dtype)
    return kernels.span(np.ascontiguousarray(G, dtype=dtype), field.add_table, field.mul_table, field.q)


def min_distance_exhaustive(cws: CodewordSet):
    """Minimum nonzero weight, or None for the zero code."""
    w = kernels.min_weight(cws.words)
    return w or None


def grs_generator_indices(code: GrsCode, tf: TableField):
    """Canonical generator with entries as integer indices, computed with the
    oracle's own tables."""
    ctx = code.ctx
    A = [int(x) for x in ctx.to_int(code.locators)]
    B = [int(x) for x in ctx.to_int(code.multipliers)]
    G = np.empty((code.k, code.n), dtype=tf.add_table.dtype)
    for j, (a, b) in enumerate(zip(A, B)):
        v = b
        for i in range(code.k):
            G[i, j] = v
            v = int(tf.mul_table[v, a])
    return G


def grs_codewords(code: GrsCode, limit: int = DEFAULT_LIMIT) -> CodewordSet:
    _check_limit(code.ctx.Q, code.k, limit)
    tf = TableField(code.ctx)
    return enumerate_codewords(grs_generator_indices(code, tf), tf, limit)


def subfield_intersection_bruteforce(code: GrsCode, limit: int = DEFAULT_LIMIT) -> CodewordSet:
    """C cap F_q^n, found by enumerating every parent codeword."""
    _check_limit(code.ctx.Q, code.k, limit)
    tf = TableField(code.ctx)
    words = _span_words(grs_generator_indices(code, tf), tf, limit)
    keep = words[(words < code.ctx.q).all(axis=1)]
    return _canonical(keep.astype(np.uint8), code.ctx.q, code.n)


def subcode_codewords(ssc, limit: int = DEFAULT_LIMIT) -> CodewordSet:
    """Span of the generator G' of a subfield subcode."""
    return enumerate_codewords(ssc.gprime, ssc.field, limit)


def conjugacy_subcode_bruteforce(code: GrsCode, limit: int = DEFAULT_LIMIT) -> CodewordSet:
    """Subfield subcode of a cyclic parent read off the conjugacy constraints:
    encode every message that satisfies them (no kernel computation)."""
    ctx = code.ctx
    _check_limit(ctx.Q, code.k, limit)
    msgs = ctx.from_int(_all_messages(ctx.Q, code.k))  # (N, k, m)
    ok = conjugacy_check(code, msgs)
    words = encode(code, msgs[ok])
    if words[..., 1:].any():
        raise InvariantError("a message satisfying the conjugacy constraints encodes outside F_q^n")
    return _canonical(words[..., 0], ctx.q, code.n)


def _all_messages(Q: int, k: int):
    """``(Q**k, k)`` integer array of every message, first digit fastest."""
    idx = np.arange(Q**k, dtype=np.int64)
    return (idx[:, None] // Q ** np.arange(k)) % Q


def sets_equal(a: CodewordSet, b: CodewordSet) -> bool:
    if a.q != b.q or a.n != b.n:
        raise ValueError(f"incomparable codeword sets: (q={a.q}, n={a.n}) vs (q={b.q}, n={b.n})")
    return a.words.shape == b.words.shape and bool(np.array_equal(a.words, b.words))


def set_difference_example(a: CodewordSet, b: CodewordSet):
    """A word in exactly one of the two sets (or None), for diagnostics."""
    sa = {tuple(int(x) for x in w) for w in a.words}
    sb = {tuple(int(x) for x in w) for w in b.words}
    diff = sorted(sa ^ sb)
    return diff[0] if diff else None
