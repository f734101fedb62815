"""Command-line front end: every table and claim as deterministic CSV/JSON.

Subcommands: group-verify, xi, density, theorem1, theorem2, embed-verify,
enumerate, isolated.  Exit codes: 0 success / claims certified; 2 a claim
could not be certified within budget; 3 invalid configuration; 4 internal
assertion failure.

Output is byte-identical for a fixed configuration regardless of
--threads: work is distributed over rows and merged in input order, and
the thread count is never echoed into the output.  Rationals are printed
as exact numerator/denominator columns plus decimal strings (12 places;
interval endpoints are rounded outward, other values half-up).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import __version__
from . import census, forests, group, intervals
from .errors import CapExceeded, CertificationError, PrecisionExhausted

DECIMAL_PLACES = 12

TAG_ENUM = "[exact-enumeration]"
TAG_DP = "[exact-dp]"
TAG_INTERVAL = "[certified-interval]"
TAG_LIMIT = "[derived-limit-formula]"
TAG_NF = "[exact-normal-form]"


class UsageError(ValueError):
    pass


def _decimal(x: Fraction, places: int = DECIMAL_PLACES, mode: str = "nearest") -> str:
    """Exact decimal string; 'floor'/'ceil' for outward interval endpoints."""
    q = Fraction(x) * 10**places
    n, d = q.numerator, q.denominator
    if mode == "floor":
        v = n // d
    elif mode == "ceil":
        v = -((-n) // d)
    else:
        v = (2 * n + d) // (2 * d)
    sign = "-" if v < 0 else ""
    digits = str(abs(v)).zfill(places + 1)
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _iv_cols(iv: intervals.CertifiedInterval, name: str) -> dict[str, str]:
    return {
        f"{name}_lo": _decimal(iv.lo, mode="floor"),
        f"{name}_hi": _decimal(iv.hi, mode="ceil"),
    }


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    """Map preserving order; distributes over a process pool if threads > 1."""
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _emit(
    rows: list[dict],
    columns: list[str],
    meta: dict,
    fmt: str,
    out: Optional[str],
) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: row.get(c, "NA") for c in columns})
        text = buf.getvalue()
    elif fmt == "json":
        payload = {
            "meta": meta,
            "rows": [{c: row.get(c, "NA") for c in columns} for row in rows],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args: argparse.Namespace, command: str, **extra) -> dict:
    """Config echo for reproducibility; thread count and paths excluded so
    identical configurations give identical bytes."""
    skip = {"out", "threads", "func"}
    config = {
        key: (str(v) if isinstance(v, Fraction) else v)
        for key, v in sorted(vars(args).items())
        if key not in skip and v is not None
    }
    meta = {
        "version": __version__,
        "command": command,
        "decimal_places": DECIMAL_PLACES,
        "config": config,
    }
    meta.update(extra)
    return meta


# ---------------------------------------------------------------------------
# group-verify


def cmd_group_verify(args: argparse.Namespace) -> int:
    checks = group.presentation_checks(mixed_max=args.mn)
    if args.inject_bad_relator:
        bad = group.verify_relation(
            group.conjugate(group.W_X1, group.power(group.W_X0, 2)),
            group.conjugate(group.W_X1, group.W_X0),
        )
        checks.append(("x1^(x0^2) = x1^(x0) [injected control]", bad))
    rows = [
        {"relation": name, "status": "pass" if ok else "FAIL", "provenance": TAG_NF}
        for name, ok in checks
    ]
    meta = _meta(args, "group-verify", checks_total=len(rows))
    _emit(rows, ["relation", "status", "provenance"], meta, args.format, args.out)
    for name, ok in checks:
        if not ok:
            print(f"group-verify: FAILED relation: {name}", file=sys.stderr)
            return 2
    return 0


# ---------------------------------------------------------------------------
# xi


def _xi_row(job: tuple[int, Fraction]) -> dict:
    k, tol = job
    x = intervals.xi(k, tol)
    row = {"k": k, "provenance": f"{TAG_INTERVAL} {TAG_LIMIT}"}
    row.update(_iv_cols(x, "xi"))
    row["density_standard"] = _decimal((4 - 2 * x).mid)
    row["density_symmetric"] = _decimal((4 - 4 * x).mid)
    row["doubling_ratio"] = _decimal((3 * x).mid)
    if k >= 1:
        lf = intervals.limit_fractions(k, tol)
        row["isolated_limit"] = _decimal(lf.isolated_fraction.mid)
        row["bprime_density"] = _decimal(lf.bprime_density.mid)
    else:
        # Phi_{-1} = 0: every vertex of B(n,0) is isolated and B' is empty.
        row["isolated_limit"] = _decimal(Fraction(1))
    return row


XI_COLUMNS = [
    "k",
    "xi_lo",
    "xi_hi",
    "density_standard",
    "density_symmetric",
    "isolated_limit",
    "bprime_density",
    "doubling_ratio",
    "provenance",
]


def cmd_xi(args: argparse.Namespace) -> int:
    jobs = [(k, args.tol) for k in range(0, args.kmax + 1)]
    rows = _pmap(_xi_row, jobs, args.threads)
    meta = _meta(
        args,
        "xi",
        derived_columns="interval midpoints; certified enclosure width <= "
        "a few multiples of tol (xi endpoints rounded outward)",
    )
    _emit(rows, XI_COLUMNS, meta, args.format, args.out)
    return 0


# ---------------------------------------------------------------------------
# density


DENSITY_COLUMNS = [
    "n",
    "k",
    "genset",
    "vertices",
    "degree_sum",
    "density_num",
    "density_den",
    "density",
    "cheeger",
    "outer_boundary",
    "isolated",
    "bprime_density_num",
    "bprime_density_den",
    "doubling_upper_bound",
    "provenance",
]


def _check_trunc(trunc: Optional[int], ns: Iterable[int], mode: str) -> None:
    """--trunc overrides the dp series order; values < n cannot cover [z^n]."""
    if trunc is None or mode == "enumerate":
        return
    top = max(ns)
    if trunc < top:
        raise UsageError(f"--trunc {trunc} is below the largest requested n={top}")


def _density_row(job: tuple) -> dict:
    n, k, genset_name, mode, cap, boundary, trunc = job
    genset = group.by_name(genset_name)
    prov = {"enumerate": TAG_ENUM, "dp": TAG_DP, "both": f"{TAG_ENUM} {TAG_DP}"}[mode]
    if genset.name == "custom":
        emb = census.embed(n, k, cap=cap)
        st = census.stats_elements(emb.image(), genset)
        prov = TAG_ENUM
    else:
        st = census.stats_bb(n, k, genset, mode=mode, cap=cap)
    counts = census.census_counts(
        n, k, "dp" if mode == "dp" else "enumerate", cap, trunc
    )
    row = {
        "n": n,
        "k": k,
        "genset": genset_name,
        "vertices": st.vertices,
        "degree_sum": st.degree_sum,
        "density_num": st.density.numerator,
        "density_den": st.density.denominator,
        "density": _decimal(st.density),
        "cheeger": st.cheeger_total,
        "isolated": counts.isolated,
        "doubling_upper_bound": census.doubling_bound(
            n, k, "dp" if mode == "dp" else "enumerate", cap
        ).upper_bound,
        "provenance": prov,
    }
    remaining = counts.total - counts.isolated
    if remaining > 0:
        bp = census.bprime_stats(n, k, "dp" if mode == "dp" else "enumerate", cap)
        row["bprime_density_num"] = bp.density.numerator
        row["bprime_density_den"] = bp.density.denominator
    compute_boundary = boundary == "always" or (
        boundary == "auto" and n <= 10 and mode != "dp"
    )
    if compute_boundary:
        row["outer_boundary"] = census.outer_boundary_exact(n, k, genset, cap=cap)
    return row


def cmd_density(args: argparse.Namespace) -> int:
    ns = _range_from(args.n, args.nmax, "n")
    ks = _range_from(args.k, args.kmax, "k")
    _check_trunc(args.trunc, ns, args.mode)
    jobs = [
        (n, k, args.genset, args.mode, args.cap, args.boundary, args.trunc)
        for n in ns
        for k in ks
    ]
    rows = _pmap(_density_row, jobs, args.threads)
    meta = _meta(args, "density")
    _emit(rows, DENSITY_COLUMNS, meta, args.format, args.out)
    return 0


def _range_from(single: Optional[int], upto: Optional[int], name: str) -> list[int]:
    if single is not None and upto is not None:
        raise UsageError(f"--{name} and --{name}max are mutually exclusive")
    if single is not None:
        return [single]
    if upto is not None:
        return list(range(0 if name == "k" else 1, upto + 1))
    raise UsageError(f"one of --{name} / --{name}max is required")


# ---------------------------------------------------------------------------
# theorem1


def _theorem1_row(job: tuple[int, Fraction]) -> dict:
    k, tol = job
    lf = intervals.limit_fractions(k, tol)
    cube_quarter = lf.xi * lf.xi * lf.xi * Fraction(1, 4)
    row = {"k": k, "provenance": f"{TAG_INTERVAL} {TAG_LIMIT}"}
    row.update(_iv_cols(lf.xi, "xi"))
    row.update(_iv_cols(lf.isolated_fraction, "p_inf"))
    row.update(_iv_cols(lf.bprime_density, "bprime_density"))
    row.update(_iv_cols(cube_quarter, "xi_cubed_over_4"))
    row["p_inf_ge_xi3_over_4"] = (
        "certified" if lf.isolated_fraction.lo >= cube_quarter.hi else "UNDECIDED"
    )
    row["_bprime_lo"] = lf.bprime_density.lo
    row["_cube_mid"] = cube_quarter.mid
    return row


THEOREM1_COLUMNS = [
    "k",
    "xi_lo",
    "xi_hi",
    "p_inf_lo",
    "p_inf_hi",
    "bprime_density_lo",
    "bprime_density_hi",
    "xi_cubed_over_4_lo",
    "xi_cubed_over_4_hi",
    "p_inf_ge_xi3_over_4",
    "provenance",
]


def cmd_theorem1(args: argparse.Namespace) -> int:
    jobs = [(k, args.tol) for k in range(1, args.kmax + 1)]
    rows = _pmap(_theorem1_row, jobs, args.threads)
    first_witness = next((r["k"] for r in rows if r["_bprime_lo"] > 3), None)
    sup_row = max(rows, key=lambda r: r["_bprime_lo"])
    swap_ok = all(r["p_inf_ge_xi3_over_4"] == "certified" for r in rows)
    cube_gap = abs(rows[-1]["_cube_mid"] - Fraction(1, 256))
    meta = _meta(
        args,
        "theorem1",
        first_k_bprime_above_3=first_witness,
        sup_bprime_lo=_decimal(sup_row["_bprime_lo"], mode="floor"),
        sup_at_k=sup_row["k"],
        sup_exceeds_3_011=bool(sup_row["_bprime_lo"] > Fraction(3011, 1000)),
        swap_bound_certified_all_k=swap_ok,
        xi3_over_4_gap_to_1_256=_decimal(cube_gap, mode="ceil"),
    )
    for r in rows:
        r.pop("_bprime_lo")
        r.pop("_cube_mid")
    _emit(rows, THEOREM1_COLUMNS, meta, args.format, args.out)
    if first_witness is None:
        print(
            f"theorem1: no k <= {args.kmax} certifies density(B') > 3", file=sys.stderr
        )
        return 2
    if not swap_ok:
        print("theorem1: swap bound p_inf >= xi^3/4 not certified", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# theorem2


def _theorem2_row(job: tuple[int, Fraction]) -> dict:
    k, tol = job
    x = intervals.xi(k, tol)
    t = 3 * x
    row = {"k": k, "provenance": f"{TAG_INTERVAL} {TAG_LIMIT}"}
    row.update(_iv_cols(t, "three_xi"))
    row.update(_iv_cols(1 + t, "one_plus_three_xi"))
    row["below_1"] = "certified" if t.hi < 1 else "no"
    row["_hi"] = t.hi
    return row


def _theorem2_check_row(job: tuple[int, int, int]) -> dict:
    n, k, cap = job
    bound = census.doubling_bound(n, k, cap=cap)
    outer = census.outer_boundary_exact(
        n, k, group.GenSetSpec.extended(), cap=cap
    )
    return {
        "n": n,
        "k": k,
        "outer_boundary": outer,
        "upper_bound": bound.upper_bound,
        "within_bound": "yes" if outer <= bound.upper_bound else "NO",
        "provenance": TAG_ENUM,
    }


THEOREM2_COLUMNS = [
    "k",
    "three_xi_lo",
    "three_xi_hi",
    "one_plus_three_xi_lo",
    "one_plus_three_xi_hi",
    "below_1",
    "n",
    "outer_boundary",
    "upper_bound",
    "within_bound",
    "provenance",
]


def cmd_theorem2(args: argparse.Namespace) -> int:
    jobs = [(k, args.tol) for k in range(1, args.kmax + 1)]
    rows = _pmap(_theorem2_row, jobs, args.threads)
    k0 = None
    for r in rows:
        if r["below_1"] == "certified":
            k0 = r["k"]
            break
    tail_ok = k0 is not None and all(
        r["below_1"] == "certified" for r in rows if r["k"] >= k0
    )
    check_jobs = [
        (n, k, args.cap)
        for n in range(1, args.n_small + 1)
        for k in range(0, min(3, args.kmax) + 1)
    ]
    check_rows = _pmap(_theorem2_check_row, check_jobs, args.threads)
    bounds_ok = all(r["within_bound"] == "yes" for r in check_rows)
    gap = abs((1 + 3 * intervals.xi(args.kmax, args.tol)).mid - Fraction(7, 4))
    meta = _meta(
        args,
        "theorem2",
        first_k_three_xi_below_1=k0,
        certified_for_all_larger_k=tail_ok,
        boundary_checks_pass=bounds_ok,
        one_plus_three_xi_gap_to_7_4=_decimal(gap, mode="ceil"),
    )
    for r in rows:
        r.pop("_hi")
    _emit(rows + check_rows, THEOREM2_COLUMNS, meta, args.format, args.out)
    if k0 is None or not tail_ok:
        print(f"theorem2: no certified k <= {args.kmax}", file=sys.stderr)
        return 2
    if not bounds_ok:
        print("theorem2: an exact boundary exceeded the bound", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# embed-verify


def _embed_row(job: tuple[int, int, int]) -> dict:
    n, k, cap = job
    emb = census.embed(n, k, cap=cap)
    return {
        "n": n,
        "k": k,
        "forests": len(emb.assignment),
        "distinct_elements": len(emb.image()),
        "status": "consistent+injective",
        "provenance": TAG_ENUM,
    }


def cmd_embed_verify(args: argparse.Namespace) -> int:
    if args.perturb:
        def bad(label, f, k):
            if label == "x1bar":
                return forests.apply_within("x1", f, k)
            return forests.apply_within(label, f, k)

        try:
            census.embed(3, 1, _action=bad)
        except census.EmbeddingError as exc:
            rows = [
                {
                    "n": 3,
                    "k": 1,
                    "status": f"broken as expected: {exc}",
                    "provenance": TAG_ENUM,
                }
            ]
            _emit(
                rows,
                ["n", "k", "forests", "distinct_elements", "status", "provenance"],
                _meta(args, "embed-verify", perturbed=True),
                args.format,
                args.out,
            )
            return 0
        print("embed-verify: perturbed action did NOT break", file=sys.stderr)
        return 4
    if args.n is not None and args.k is not None:
        pairs = [(args.n, args.k)]
    else:
        if args.list:
            raise UsageError("--list requires explicit --n and --k")
        pairs = [(n, k) for n in range(1, args.nmax + 1) for k in range(0, args.kmax + 1)]
    rows = _pmap(_embed_row, [(n, k, args.cap) for n, k in pairs], args.threads)
    columns = ["n", "k", "forests", "distinct_elements", "status", "provenance"]
    if args.list:
        if len(pairs) != 1:
            raise UsageError("--list requires explicit --n and --k")
        emb = census.embed(*pairs[0], cap=args.cap)
        columns += ["forest", "element"]
        rows += [
            {
                "n": pairs[0][0],
                "k": pairs[0][1],
                "forest": forests.encode_forest(f),
                "element": group.format_nf(e),
                "provenance": TAG_ENUM,
            }
            for f, e in emb.assignment
        ]
    _emit(rows, columns, _meta(args, "embed-verify"), args.format, args.out)
    return 0


# ---------------------------------------------------------------------------
# enumerate / isolated


def cmd_enumerate(args: argparse.Namespace) -> int:
    items = forests.enumerate_bb(args.n, args.k, cap=args.cap)
    rows = [
        {
            "index": i,
            "forest": forests.encode_forest(f),
            "isolated": "yes" if forests.is_isolated(f, args.k) else "no",
            "provenance": TAG_ENUM,
        }
        for i, f in enumerate(items)
    ]
    meta = _meta(args, "enumerate", count=len(items))
    _emit(rows, ["index", "forest", "isolated", "provenance"], meta, args.format, args.out)
    return 0


def _isolated_row(job: tuple) -> dict:
    n, k, mode, cap, trunc = job
    counts = census.census_counts(
        n, k, "both" if mode == "both" else mode, cap, trunc
    )
    prov = {"enumerate": TAG_ENUM, "dp": TAG_DP, "both": f"{TAG_ENUM} {TAG_DP}"}[mode]
    return {
        "n": n,
        "k": k,
        "beta": counts.total,
        "trivial_marked": counts.trivial,
        "x1inv_blocked": counts.x1inv_blocked,
        "isolated": counts.isolated,
        "provenance": prov,
    }


def cmd_isolated(args: argparse.Namespace) -> int:
    ns = _range_from(args.n, args.nmax, "n")
    ks = _range_from(args.k, args.kmax, "k")
    _check_trunc(args.trunc, ns, args.mode)
    jobs = [(n, k, args.mode, args.cap, args.trunc) for n in ns for k in ks]
    rows = _pmap(_isolated_row, jobs, args.threads)
    columns = ["n", "k", "beta", "trivial_marked", "x1inv_blocked", "isolated", "provenance"]
    _emit(rows, columns, _meta(args, "isolated"), args.format, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=census.DEFAULT_CAP,
                   help="enumeration cap (refuse larger censuses)")


def _tol(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad tolerance {text!r}: {exc}") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="fdensity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-verify", help="verify presentations and sigma")
    p.add_argument("--mn", type=int, default=3,
                   help="check alpha^(beta^m) <-> beta^(alpha^n) for m,n <= mn")
    p.add_argument("--inject-bad-relator", action="store_true",
                   help="negative control: append a false relation")
    _add_common(p, "json")
    p.set_defaults(func=cmd_group_verify)

    p = sub.add_parser("xi", help="certified xi_k enclosures and limit columns")
    p.add_argument("--kmax", type=int, default=64)
    p.add_argument("--tol", type=_tol, default=intervals.DEFAULT_TOL)
    _add_common(p, "csv")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("density", help="exact B(n,k) statistics")
    p.add_argument("--n", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--genset", default="standard",
                   help="standard|symmetric|extended|custom:<words>")
    p.add_argument("--mode", choices=("enumerate", "dp", "both"), default="enumerate")
    p.add_argument("--trunc", type=int,
                   help="series order for dp runs (default: largest n)")
    p.add_argument("--boundary", choices=("auto", "always", "never"), default="auto",
                   help="compute exact outer boundary via the embedding")
    _add_common(p, "csv")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("theorem1", help="density of B' exceeds 3 (symmetric set)")
    p.add_argument("--kmax", type=int, default=256)
    p.add_argument("--tol", type=_tol, default=intervals.DEFAULT_TOL)
    _add_common(p, "json")
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser("theorem2", help="doubling fails for the extended set")
    p.add_argument("--kmax", type=int, default=64)
    p.add_argument("--n-small", type=int, default=10, dest="n_small")
    p.add_argument("--tol", type=_tol, default=intervals.DEFAULT_TOL)
    _add_common(p, "json")
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("embed-verify", help="BFS embedding oracle")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--list", action="store_true",
                   help="list the forest-to-element assignment (single n,k)")
    p.add_argument("--perturb", action="store_true",
                   help="negative control: break one action rule")
    _add_common(p, "json")
    p.set_defaults(func=cmd_embed_verify)

    p = sub.add_parser("enumerate", help="list B(n,k) in canonical order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, "csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("isolated", help="exact count tables per (n,k)")
    p.add_argument("--n", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--mode", choices=("enumerate", "dp", "both"), default="enumerate")
    p.add_argument("--trunc", type=int,
                   help="series order for dp runs (default: largest n)")
    _add_common(p, "csv")
    p.set_defaults(func=cmd_isolated)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"fdensity: invalid configuration: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"fdensity: invalid configuration: {exc}", file=sys.stderr)
        return 3
    except (CapExceeded, PrecisionExhausted, CertificationError) as exc:
        print(f"fdensity: not certified within budget: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, census.EmbeddingError) as exc:
        print(f"fdensity: internal invariant violated: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
