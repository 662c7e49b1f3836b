"""Command-line front end.

Job files are flat TOML::

    p = 2                      # base field F_q, q = p^e
    e = 1
    m = 3                      # extension degree
    ext_poly = [1, 1, 0, 1]    # x^3 + x + 1, least significant first
    n = 7                      # cyclic shorthand ...
    k = 5
    delta = 0
    # ... or explicit lists: locators = ["a^1", [1, 1, 0], ...]

Subcommands: construct, extract, nested, verify, sweep.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import matql, oracle
from .errors import EnumerationLimitError, GrsSubError, SpecError
from .extension import ExtensionCtx
from .extract import expand_generator, extract_subfield_subcode
from .grscode import GrsCode, canonical_generator, cyclic_grs, error_radius
from .nested import nested_family
from .smallfield import FieldSpec, SmallField

EXIT_OK, EXIT_INVALID, EXIT_VERIFY_FAILED, EXIT_LIMIT = 0, 1, 2, 3
COMMANDS = ("construct", "extract", "nested", "verify", "sweep")
_KEYS = {
    "p", "e", "base_poly", "m", "ext_poly", "n", "k", "delta",
    "locators", "multipliers", "delta_range", "limit", "format",
}
_POWER = re.compile(r"^\s*a\s*\^\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class JobSpec:
    p: int
    e: int
    base_poly: tuple
    m: int
    ext_poly: tuple
    k: int
    n: int | None = None
    delta: int | None = None
    locators: tuple | None = None
    multipliers: tuple | None = None
    command: str | None = None
    delta_range: tuple | None = None
    fmt: str = "table"
    limit: int = oracle.DEFAULT_LIMIT
    dump_matrices: bool = False
    show_all: bool = False
    ctx: ExtensionCtx = field(default=None, compare=False, repr=False)

    @property
    def is_cyclic(self) -> bool:
        return self.locators is None

    def code(self, delta: int | None = None) -> GrsCode:
        if self.is_cyclic:
            return cyclic_grs(self.ctx, self.n, self.k, self.delta if delta is None else delta)
        A = np.array([_element(x, self.ctx, "locators") for x in self.locators], dtype=np.uint8)
        B = np.array([_element(x, self.ctx, "multipliers") for x in self.multipliers], dtype=np.uint8)
        return GrsCode(self.ctx, A, B, self.k)


def _int(raw, key, lo=None):
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise SpecError(f"field '{key}': expected an integer, got {raw!r}")
    if lo is not None and raw < lo:
        raise SpecError(f"field '{key}': must be >= {lo}, got {raw}")
    return raw


def _int_list(raw, key):
    if not isinstance(raw, (list, tuple)) or not all(isinstance(c, int) and not isinstance(c, bool) for c in raw):
        raise SpecError(f"field '{key}': expected a list of integers, got {raw!r}")
    return tuple(raw)


def _element(raw, ctx: ExtensionCtx, key: str):
    if isinstance(raw, str):
        match = _POWER.match(raw)
        if not match:
            raise SpecError(f"field '{key}': cannot parse element {raw!r} (use 'a^i' or a coefficient list)")
        return ctx.alpha_pow(int(match.group(1)))
    coeffs = _int_list(raw, key)
    if len(coeffs) != ctx.m:
        raise SpecError(f"field '{key}': coefficient vector {list(coeffs)} must have length m={ctx.m}")
    if any(not 0 <= c < ctx.q for c in coeffs):
        raise SpecError(f"field '{key}': coefficients of {list(coeffs)} must lie in 0..{ctx.q - 1}")
    return np.array(coeffs, dtype=np.uint8)


def parse_range(text, key="delta_range"):
    match = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", str(text))
    if not match:
        raise SpecError(f"field '{key}': expected 'a..b', got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise SpecError(f"field '{key}': empty range {lo}..{hi}")
    return lo, hi


def parse_jobspec(text: str, command: str | None = None) -> JobSpec:
    """Parse and validate a job file; every problem raises :class:`SpecError`
    (or a more specific package error) naming the offending field."""
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SpecError(f"syntax error: {exc}") from None
    unknown = sorted(set(raw) - _KEYS)
    if unknown:
        raise SpecError(f"unknown field '{unknown[0]}'")
    for key in ("p", "m", "k"):
        if key not in raw:
            raise SpecError(f"missing required field '{key}'")

    p = _int(raw["p"], "p", 2)
    e = _int(raw.get("e", 1), "e", 1)
    base_poly = _int_list(raw["base_poly"], "base_poly") if "base_poly" in raw else ()
    if e > 1 and not base_poly:
        raise SpecError("field 'base_poly': required when e > 1")
    m = _int(raw["m"], "m", 1)
    if "ext_poly" in raw:
        ext_poly = _int_list(raw["ext_poly"], "ext_poly")
    elif m == 1:
        ext_poly = (0, 1)
    else:
        raise SpecError("missing required field 'ext_poly'")
    if len(ext_poly) != m + 1:
        raise SpecError(f"field 'ext_poly': needs m+1 = {m + 1} coefficients, got {len(ext_poly)}")
    k = _int(raw["k"], "k", 1)

    explicit = "locators" in raw or "multipliers" in raw
    cyclic = "delta" in raw
    if explicit and cyclic:
        raise SpecError("give either 'locators'/'multipliers' or cyclic 'n'/'delta', not both")
    if not explicit and not cyclic:
        raise SpecError("missing code block: need 'n' and 'delta', or 'locators' and 'multipliers'")

    base = SmallField(FieldSpec(p, e, base_poly))
    ctx = ExtensionCtx(base, ext_poly)
    job = dict(p=p, e=e, base_poly=base_poly, m=m, ext_poly=ext_poly, k=k, command=command, ctx=ctx)
    if cyclic:
        if "n" not in raw:
            raise SpecError("missing required field 'n'")
        job["n"] = _int(raw["n"], "n", 1)
        job["delta"] = _int(raw["delta"], "delta")
    else:
        for key in ("locators", "multipliers"):
            if not isinstance(raw.get(key), list):
                raise SpecError(f"field '{key}': expected a list of elements")
        if len(raw["locators"]) != len(raw["multipliers"]):
            raise SpecError(
                f"'locators' has {len(raw['locators'])} entries but 'multipliers' has {len(raw['multipliers'])}"
            )
        job["locators"] = tuple(_freeze(x) for x in raw["locators"])
        job["multipliers"] = tuple(_freeze(x) for x in raw["multipliers"])
        job["n"] = len(raw["locators"])
    if "delta_range" in raw:
        if not cyclic:
            raise SpecError("field 'delta_range': only valid with the cyclic code form")
        job["delta_range"] = parse_range(raw["delta_range"])
    if "limit" in raw:
        job["limit"] = _int(raw["limit"], "limit", 1)
    if "format" in raw:
        if raw["format"] not in ("table", "records"):
            raise SpecError(f"field 'format': expected 'table' or 'records', got {raw['format']!r}")
        job["fmt"] = raw["format"]
    spec = JobSpec(**job)
    spec.code()  # surfaces code-level errors (divisibility, distinctness) now
    return spec


def _freeze(x):
    return tuple(x) if isinstance(x, list) else x


# --------------------------------------------------------------------------
# output helpers


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _rec(kind: str, **fields) -> str:
    return json.dumps({"record": kind, **fields}, separators=(", ", ": "))


def _ext_indices(ctx, arr):
    return np.asarray(ctx.to_int(arr)).tolist()


class Report:
    def __init__(self):
        self.lines: list[str] = []
        self.status = EXIT_OK

    def add(self, text: str = ""):
        self.lines.append(text)

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


# --------------------------------------------------------------------------
# commands


def _construct(job: JobSpec, out: Report):
    code = job.code()
    ctx = job.ctx
    info = dict(n=code.n, k=code.k, d=code.d, q=ctx.q, m=ctx.m, Q=ctx.Q, t_radius=error_radius(code.d))
    if code.is_cyclic:
        info["delta"] = code.delta
    if job.fmt == "records":
        if job.dump_matrices:
            info["locators"] = _ext_indices(ctx, code.locators)
            info["multipliers"] = _ext_indices(ctx, code.multipliers)
            info["generator"] = _ext_indices(ctx, canonical_generator(code))
        out.add(_rec("code", **info))
        return
    out.add("  ".join(f"{key}={val}" for key, val in info.items()))
    out.add("locators (as integers): " + " ".join(map(str, _ext_indices(ctx, code.locators))))
    out.add("multipliers (as integers): " + " ".join(map(str, _ext_indices(ctx, code.multipliers))))
    out.add("G over F_Q (as integers):")
    out.add(matql.format_matrix(_ext_indices(ctx, canonical_generator(code))))
    if job.dump_matrices:
        out.add("expanded generator over F_q:")
        out.add(matql.format_matrix(expand_generator(code)))


def _extract(job: JobSpec, out: Report):
    ssc = extract_subfield_subcode(job.code())
    ctx = job.ctx
    if job.fmt == "records":
        rec = ssc.record()
        if job.dump_matrices:
            rec["gamma_tilde"] = ssc.gamma_tilde.tolist()
            rec["gamma"] = _ext_indices(ctx, ssc.gamma)
            rec["gprime"] = ssc.gprime.tolist()
        out.add(_rec("subcode", **rec))
        return
    r = ssc.record()
    out.add(f"n={r['n']}  k={r['k']}  d={r['d']}  k'={r['k_prime']}  d'={r['d_prime']}  s={r['s']}  t={r['t']}")
    out.add("Gamma~ over F_q:")
    out.add(matql.format_matrix(ssc.gamma_tilde))
    out.add("Gamma over F_Q (as integers):")
    out.add(matql.format_matrix(_ext_indices(ctx, ssc.gamma)))
    out.add("G' over F_q:")
    out.add(matql.format_matrix(ssc.gprime))


def _nested(job: JobSpec, out: Report):
    code = job.code()
    family = nested_family(extract_subfield_subcode(GrsCode(job.ctx, code.locators, code.multipliers, code.n)))
    listed = family.selections if job.show_all else family.frontier
    if job.fmt == "records":
        out.add(_rec("base", **family.base.record()))
        for sel in listed:
            rec = sel.record()
            if job.dump_matrices:
                rec["gprime"] = family.subcode(sel).gprime.tolist()
            out.add(_rec("selection" if job.show_all else "frontier", **rec))
        for sel in family.chain:
            out.add(_rec("chain", **sel.record()))
        return
    b = family.base
    out.add(f"base: n={b.n}  k'={b.k_prime}  d'={b.d_prime}")
    out.add("all admissible selections:" if job.show_all else "frontier:")
    out.add(_table(["k'", "d'", "s", "t", "rows"], [(x.k_prime, x.d_prime, x.s, x.t, f"{x.start}..{x.stop}") for x in listed]))
    out.add("longest nested chain:")
    out.add(_table(["k'", "d'", "s", "t", "rows"], [(x.k_prime, x.d_prime, x.s, x.t, f"{x.start}..{x.stop}") for x in family.chain]))
    if job.dump_matrices:
        for sel in listed:
            out.add(f"G' for rows {sel.start}..{sel.stop}:")
            out.add(matql.format_matrix(family.subcode(sel).gprime))


def verify_code(code: GrsCode, limit: int):
    """Run the oracle comparisons; yields ``(name, ok, detail)`` tuples."""
    ssc = extract_subfield_subcode(code)
    span = oracle.subcode_codewords(ssc, limit)
    brute = oracle.subfield_intersection_bruteforce(code, limit)
    ok = oracle.sets_equal(span, brute)
    detail = "" if ok else f"counterexample {oracle.set_difference_example(span, brute)}"
    yield "span(G') == C cap F_q^n", ok, detail

    true_d = oracle.min_distance_exhaustive(oracle.grs_codewords(code, limit))
    yield "parent is MDS", true_d == code.d, f"exhaustive d={true_d}, n-k+1={code.d}"

    if ssc.k_prime:
        sub_d = oracle.min_distance_exhaustive(span)
        yield "design distance <= true distance", sub_d >= ssc.d_prime, f"d'={ssc.d_prime}, true d={sub_d}"

    if code.is_cyclic:
        conj = oracle.conjugacy_subcode_bruteforce(code, limit)
        ok = oracle.sets_equal(conj, span)
        detail = "" if ok else f"counterexample {oracle.set_difference_example(conj, span)}"
        yield "conjugacy subcode == kernel subcode", ok, detail


def _verify(job: JobSpec, out: Report):
    for name, ok, detail in verify_code(job.code(), job.limit):
        if not ok:
            out.status = EXIT_VERIFY_FAILED
        if job.fmt == "records":
            out.add(_rec("check", name=name, ok=bool(ok), detail=detail))
        else:
            out.add(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))


def _sweep(job: JobSpec, out: Report):
    if not job.is_cyclic:
        raise SpecError("sweep needs the cyclic code form (n, k, delta)")
    lo, hi = job.delta_range or (0, job.n - 1)
    deltas = list(range(lo, hi + 1))
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda d: extract_subfield_subcode(job.code(d)), deltas))
    if job.fmt == "records":
        for d, ssc in zip(deltas, results):
            out.add(_rec("sweep", delta=d, **ssc.record()))
        return
    out.add(_table(["delta", "k'", "d'", "s", "t"], [(d, r.k_prime, r.d_prime, r.s_groups, r.t_groups) for d, r in zip(deltas, results)]))


_RUNNERS = {
    "construct": _construct,
    "extract": _extract,
    "nested": _nested,
    "verify": _verify,
    "sweep": _sweep,
}


def run(job: JobSpec) -> tuple[int, str]:
    """Execute ``job``; returns ``(exit_status, report_text)``."""
    out = Report()
    try:
        _RUNNERS[job.command](job, out)
    except EnumerationLimitError as exc:
        out.add(f"refused: {exc}")
        return EXIT_LIMIT, out.text()
    return out.status, out.text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grssub", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--spec", required=True, help="job file (flat TOML)")
        cmd.add_argument("--format", choices=("table", "records"), default=None)
        cmd.add_argument("--limit", type=int, default=None, help="enumeration limit in messages")
        cmd.add_argument("--delta-range", default=None, help="sweep range a..b (inclusive)")
        cmd.add_argument("--dump-matrices", action="store_true")
        if name == "nested":
            cmd.add_argument("--all", action="store_true", help="list every admissible selection")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
        job = parse_jobspec(text, args.command)
        updates = {"dump_matrices": args.dump_matrices, "show_all": getattr(args, "all", False)}
        if args.format:
            updates["fmt"] = args.format
        if args.limit is not None:
            updates["limit"] = args.limit
        if args.delta_range is not None:
            updates["delta_range"] = parse_range(args.delta_range, "--delta-range")
        job = replace(job, **updates)
        status, text = run(job)
    except (GrsSubError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
