"""Nested subfield subcodes read off the RREF constraint basis.

Each row of an RREF basis has a number of leading (s) and trailing (t)
all-zero m-column groups.  Keeping a contiguous block of rows whose first row
fixes s and whose last row fixes t yields a subcode with design distance
``d + s + t``; trimming rows from the top gives nested subcodes whose design
distance never decreases.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import matql
from .errors import DimensionError, SelectionError
from .extension import ExtensionCtx
from .extract import SubfieldSubcode, extract_subfield_subcode, subcode_from_basis
from .grscode import GrsCode


@dataclass(frozen=True)
class TrajectoryProfile:
    """Per-row counts of leading (``s``) and trailing (``t``) zero groups."""

    s: np.ndarray
    t: np.ndarray
    m: int


def trajectories(gamma_tilde, m: int) -> TrajectoryProfile:
    gt = np.atleast_2d(np.asarray(gamma_tilde))
    rows, width = gt.shape
    if width % m:
        raise DimensionError(f"width {width} is not a multiple of m={m}")
    groups = width // m
    nz = gt.reshape(rows, groups, m).any(axis=2)  # (rows, groups)
    any_nz = nz.any(axis=1)
    s = np.where(any_nz, nz.argmax(axis=1), groups)
    t = np.where(any_nz, nz[:, ::-1].argmax(axis=1), groups)
    return TrajectoryProfile(s.astype(int), t.astype(int), m)


def _as_rows(rows) -> list[int]:
    if isinstance(rows, range):
        return list(rows)
    return [int(r) for r in rows]


def subcode_from_rows(base: SubfieldSubcode, rows, *, unchecked: bool = False) -> SubfieldSubcode:
    """Subcode spanned by a selection of rows of ``base.gamma_tilde``.

    ``rows`` must be a contiguous increasing run (e.g. ``range(1, 4)``).  The
    first row fixes s and the last row fixes t; every selected row has to be
    zero outside that window, otherwise :class:`SelectionError` names the
    offending row.  With ``unchecked=True`` any row subset is accepted and
    s, t are the minima over the selected rows.
    """
    rows = _as_rows(rows)
    kp = base.k_prime
    if not rows:
        raise SelectionError("empty row selection")
    bad = [r for r in rows if not 0 <= r < kp]
    if bad:
        raise SelectionError(f"row {bad[0]} outside 0..{kp - 1}")
    prof = trajectories(base.gamma_tilde, base.parent.ctx.m)
    if unchecked:
        if len(set(rows)) != len(rows):
            raise SelectionError("duplicate rows in selection")
        s = int(prof.s[rows].min())
        t = int(prof.t[rows].min())
    else:
        if rows != list(range(rows[0], rows[0] + len(rows))):
            raise SelectionError(f"rows {rows} are not a contiguous increasing run")
        s, t = int(prof.s[rows[0]]), int(prof.t[rows[-1]])
        for r in rows:
            if prof.s[r] < s:
                raise SelectionError(f"row {r} has nonzero entries left of the s trajectory (s={s})")
            if prof.t[r] < t:
                raise SelectionError(f"row {r} has nonzero entries right of the t trajectory (t={t})")
    return subcode_from_basis(base.parent, base.gamma_tilde[rows], s, t, rows=tuple(rows))


@dataclass(frozen=True)
class Selection:
    """Rows ``start..stop`` (inclusive) of the base constraint basis."""

    start: int
    stop: int
    k_prime: int
    d_prime: int
    s: int
    t: int

    @property
    def rows(self) -> range:
        return range(self.start, self.stop + 1)

    def contains(self, other: "Selection") -> bool:
        return self.start <= other.start and other.stop <= self.stop

    def record(self) -> dict:
        return {
            "rows": f"{self.start}..{self.stop}",
            "k_prime": self.k_prime,
            "d_prime": self.d_prime,
            "s": self.s,
            "t": self.t,
        }


@dataclass(frozen=True, eq=False)
class NestedFamily:
    parent: GrsCode
    base: SubfieldSubcode
    chain: list
    frontier: list
    chains_by_bottom: dict
    selections: list = field(repr=False)

    def subcode(self, sel: Selection) -> SubfieldSubcode:
        return subcode_from_rows(self.base, sel.rows)


def admissible_selections(base: SubfieldSubcode) -> list[Selection]:
    """Every contiguous row block passing the trajectory test, ordered by
    (start, stop)."""
    prof = trajectories(base.gamma_tilde, base.parent.ctx.m)
    d = base.parent.d
    out = []
    kp = base.k_prime
    for a in range(kp):
        for b in range(a, kp):
            s, t = int(prof.s[a]), int(prof.t[b])
            if (prof.s[a : b + 1] >= s).all() and (prof.t[a : b + 1] >= t).all():
                out.append(Selection(a, b, b - a + 1, d + s + t, s, t))
    return out


def pareto_frontier(selections) -> list[Selection]:
    """Selections not dominated in both k' and d', one per (k', d') pair,
    sorted by decreasing k' then increasing d'."""
    best: dict[int, Selection] = {}
    for sel in selections:
        cur = best.get(sel.k_prime)
        if cur is None or sel.d_prime > cur.d_prime:
            best[sel.k_prime] = sel
    out, top = [], -1
    for kp in sorted(best, reverse=True):
        if best[kp].d_prime > top:
            out.append(best[kp])
            top = best[kp].d_prime
    return out


def top_trimmed_chains(selections) -> dict[int, list[Selection]]:
    """For each bottom row, trim rows from the top and keep each step that
    raises the design distance."""
    by_bottom: dict[int, list[Selection]] = {}
    for sel in sorted(selections, key=lambda x: (x.stop, x.start)):
        chain = by_bottom.setdefault(sel.stop, [])
        if not chain or sel.d_prime > chain[-1].d_prime:
            chain.append(sel)
    return by_bottom


def longest_chain(selections) -> list[Selection]:
    """Longest sequence of strictly nested selections with strictly
    increasing design distance."""
    if not selections:
        return []
    order = sorted(selections, key=lambda x: (-x.k_prime, x.start))
    start = np.array([x.start for x in order])
    stop = np.array([x.stop for x in order])
    dp = np.array([x.d_prime for x in order])
    length = np.ones(len(order), dtype=int)
    prev = np.full(len(order), -1)
    for i in range(len(order)):
        cand = (start[:i] <= start[i]) & (stop[:i] >= stop[i]) & (dp[:i] < dp[i])
        cand &= (start[:i] != start[i]) | (stop[:i] != stop[i])
        if cand.any():
            j = int(np.flatnonzero(cand)[np.argmax(length[:i][cand])])
            length[i] = length[j] + 1
            prev[i] = j
    i = int(np.argmax(length))
    chain = []
    while i >= 0:
        chain.append(order[i])
        i = int(prev[i])
    return chain[::-1]


def enumerate_nested(ctx: ExtensionCtx, locators, multipliers) -> NestedFamily:
    """Start from the k = n code on the given locators/multipliers, extract its
    constraint basis and list the admissible nested subcodes."""
    A = np.asarray(locators, dtype=np.uint8)
    parent = GrsCode(ctx, A, np.asarray(multipliers, dtype=np.uint8), A.shape[0])
    return nested_family(extract_subfield_subcode(parent))


def nested_family(base: SubfieldSubcode) -> NestedFamily:
    sels = admissible_selections(base)
    return NestedFamily(
        parent=base.parent,
        base=base,
        chain=longest_chain(sels),
        frontier=pareto_frontier(sels),
        chains_by_bottom=top_trimmed_chains(sels),
        selections=sels,
    )


def is_nested(outer: SubfieldSubcode, inner: SubfieldSubcode) -> bool:
    """True when every codeword of ``inner`` lies in ``outer``."""
    F = outer.field
    stacked = np.vstack([outer.gprime, inner.gprime])
    return matql.rank(stacked, F) == matql.rank(outer.gprime, F)
