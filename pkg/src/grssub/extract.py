"""Subfield subcodes of GRS codes by message constraints.

The F_Q generator is expanded into an F_q matrix of m x m blocks
``T_{G_ij} R``.  A message ``f`` (read as a length-mk row over F_q) encodes
to a word in F_q^n exactly when every block product has zero coefficients
past the first, so the admissible messages are the left kernel of the
blocks with their first column dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import matql
from .errors import DimensionError, InvariantError, UnsupportedStructureError
from .extension import frobenius, is_subfield, matmat, toeplitz
from .grscode import GrsCode, auxiliary_code, canonical_generator, ext_vecmat


def _blocks(code: GrsCode):
    """``(k, n, m, m)`` array of the blocks T_{G_ij} R."""
    ctx = code.ctx
    return matmat(toeplitz(canonical_generator(code)), ctx.R, ctx.base)


def _flatten_blocks(blocks):
    k, n, m, w = blocks.shape
    return np.ascontiguousarray(blocks.transpose(0, 2, 1, 3).reshape(k * m, n * w))


def expand_generator(code: GrsCode):
    """The mk x mn matrix over F_q whose block (i, j) is T_{G_ij} R."""
    return _flatten_blocks(_blocks(code))


def drop_first_column(block):
    return np.asarray(block)[..., 1:]


def assemble_constraint_matrix(code: GrsCode):
    """mk x (m-1)n matrix M with ``f M = 0`` iff ``f`` encodes into F_q^n."""
    return _flatten_blocks(drop_first_column(_blocks(code)))


def zero_groups(rows, m: int):
    """Leading and trailing counts of m-column groups that vanish in every
    row of ``rows`` (a single row or a matrix)."""
    rows = np.atleast_2d(rows)
    width = rows.shape[1]
    if width % m:
        raise DimensionError(f"width {width} is not a multiple of m={m}")
    groups = width // m
    nz = rows.reshape(rows.shape[0], groups, m).any(axis=(0, 2))
    hit = np.flatnonzero(nz)
    if hit.size == 0:
        return groups, groups
    return int(hit[0]), int(groups - 1 - hit[-1])


@dataclass(frozen=True, eq=False)
class SubfieldSubcode:
    """C' = C cap F_q^n together with its message constraint basis.

    ``gamma_tilde`` is the k' x mk RREF basis over F_q, ``gamma`` the same
    rows read as k' x k matrix over F_Q (shape ``(k', k, m)``), and
    ``gprime`` the k' x n generator over F_q.
    """

    parent: GrsCode
    gamma_tilde: np.ndarray
    gamma: np.ndarray
    gprime: np.ndarray
    s_groups: int
    t_groups: int
    rows: tuple = field(default=())

    @property
    def k_prime(self) -> int:
        return self.gamma_tilde.shape[0]

    @property
    def d_prime(self) -> int:
        return self.parent.d + self.s_groups + self.t_groups

    @property
    def n(self) -> int:
        return self.parent.n

    @property
    def field(self):
        return self.parent.ctx.base

    def auxiliary(self) -> GrsCode:
        return auxiliary_code(self.parent, self.s_groups, self.t_groups)

    def record(self) -> dict:
        return {
            "n": self.n,
            "k": self.parent.k,
            "d": self.parent.d,
            "k_prime": self.k_prime,
            "d_prime": self.d_prime,
            "s": self.s_groups,
            "t": self.t_groups,
        }

    def __repr__(self):
        return (
            f"SubfieldSubcode(n={self.n}, k'={self.k_prime}, d'={self.d_prime}, "
            f"s={self.s_groups}, t={self.t_groups})"
        )


def subcode_from_basis(parent: GrsCode, gamma_tilde, s: int | None = None, t: int | None = None,
                       rows: tuple = ()) -> SubfieldSubcode:
    """Build the subcode spanned by the constraint rows ``gamma_tilde``.

    ``s``/``t`` default to the zero groups shared by all rows.
    """
    ctx = parent.ctx
    gt = np.ascontiguousarray(gamma_tilde, dtype=np.uint8)
    kp = gt.shape[0]
    if gt.shape[1] != ctx.m * parent.k:
        raise DimensionError(f"constraint basis must have {ctx.m * parent.k} columns")
    gamma = gt.reshape(kp, parent.k, ctx.m)
    G = canonical_generator(parent)
    big = ext_vecmat(gamma, G, ctx)  # (k', n, m)
    outside = ~is_subfield(big)
    if outside.any():
        r, j = map(int, np.argwhere(outside)[0])
        raise InvariantError(f"entry ({r}, {j}) of Gamma G is not in the subfield")
    gprime = np.ascontiguousarray(big[..., 0])
    if kp == 0:
        s = t = 0
    elif s is None or t is None:
        s0, t0 = zero_groups(gt, ctx.m)
        s = s0 if s is None else s
        t = t0 if t is None else t
    return SubfieldSubcode(parent, gt, gamma, gprime, int(s), int(t), tuple(rows))


def extract_subfield_subcode(code: GrsCode) -> SubfieldSubcode:
    M = assemble_constraint_matrix(code)
    gamma_tilde = matql.left_kernel_basis(M, code.ctx.base)
    return subcode_from_basis(code, gamma_tilde, rows=tuple(range(gamma_tilde.shape[0])))


def subfield_encode(ssc: SubfieldSubcode, u):
    """``u G'`` over F_q for message(s) ``u`` of shape ``(..., k')``."""
    u = np.asarray(u, dtype=np.uint8)
    if u.shape[-1] != ssc.k_prime:
        raise DimensionError(f"message length must be {ssc.k_prime}, got {u.shape[-1]}")
    flat = u.reshape(-1, ssc.k_prime)
    out = matql.mat_mul(flat, ssc.gprime, ssc.field)
    return out.reshape(u.shape[:-1] + (ssc.n,))


def conjugacy_permutation(code: GrsCode):
    """pi(i) = q i + (q - 1) delta mod n."""
    if not code.is_cyclic:
        raise UnsupportedStructureError("conjugacy constraints need a cyclic parent code")
    q, n = code.ctx.q, code.n
    return (q * np.arange(n) + (q - 1) * code.delta) % n


def conjugacy_check(code: GrsCode, f):
    """True where message(s) ``f`` (shape ``(..., k, m)``) satisfy
    f_{pi(i)} = f_i^q for all i < n, coefficients past k-1 taken as zero."""
    perm = conjugacy_permutation(code)
    ctx = code.ctx
    f = np.asarray(f, dtype=np.uint8)
    full = np.zeros(f.shape[:-2] + (code.n, ctx.m), dtype=np.uint8)
    full[..., : code.k, :] = f
    lhs = full[..., perm, :]
    rhs = frobenius(full, ctx)
    return (lhs == rhs).all(axis=(-2, -1))
