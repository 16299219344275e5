"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 precision failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Callable, Sequence

from . import analytic, limit_law, oracle, sequences
from .analytic import DEFAULT_DIGITS, PrecisionError
from .chain import Chain, implication_table
from .oracle import DEFAULT_BUDGET, ResourceLimitError

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

GODEL4_LABELS = ("0", "a", "b", "1")
GODEL4_NAMES = ("f_n", "a_n", "b_n", "t_n")

TABLE4_NS = (10, 20, 30, 40, 50, 75, 100, 150, 200, 250)
TABLE5_MS = (2, 3, 4, 5, 6, 8, 10, 20)
TABLE6_MS = (100, 200, 1000, 10000)


class UsageError(Exception):
    pass


def labels(m: int) -> tuple[str, ...]:
    return GODEL4_LABELS if m == 4 else tuple(str(j) for j in range(m))


def level_names(m: int) -> tuple[str, ...]:
    return GODEL4_NAMES if m == 4 else tuple(f"g^({j})_n" for j in range(m))


def pair_name(m: int, i: int, j: int) -> str:
    lab = labels(m)
    return f"N^{{{lab[i]},{lab[j]}}}_n"


def fmt_decimal(x, places: int) -> str:
    """Round an mpf or Decimal half-up to ``places`` decimals."""
    if not isinstance(x, Decimal):
        x = Decimal(analytic.mpmath.nstr(x, places + 30, strip_zeros=False))
    return str(x.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def full_decimal(x, digits: int) -> str:
    return analytic.mpmath.nstr(x, digits, strip_zeros=False)


def parse_int_list(text: str) -> list[int]:
    try:
        out = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


# ---------------------------------------------------------------- rendering


def render_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
    lines = []
    for idx, row in enumerate(cells):
        first = row[0].ljust(widths[0])
        rest = [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
        if idx == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([str(c) for c in r])
    return buf.getvalue()


def render_json(command: str, m, parameters: dict, data, digits: int) -> str:
    obj = {"command": command, "m": m, "parameters": parameters, "data": data, "digits": digits}
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- serialization


def level_counts_to_json(lc: sequences.LevelCounts) -> list[dict]:
    return [
        {"n": n, "counts": [str(x) for x in lc.row(n)], "total": str(lc.total(n))}
        for n in range(1, lc.n_max + 1)
    ]


def level_counts_from_json(m: int, data: list[dict]) -> sequences.LevelCounts:
    """Inverse of :func:`level_counts_to_json`."""
    rows = sorted(data, key=lambda d: d["n"])
    if [d["n"] for d in rows] != list(range(1, len(rows) + 1)):
        raise ValueError("level rows must cover n = 1..n_max")
    cols = tuple((0,) + tuple(int(d["counts"][j]) for d in rows) for j in range(m))
    totals = (0,) + tuple(int(d["total"]) for d in rows)
    return sequences.LevelCounts(m, len(rows), cols, totals)


def pair_counts_to_json(pc: sequences.PairCounts) -> list[dict]:
    return [
        {"n": n, "table": [[str(x) for x in row] for row in pc.table(n)]}
        for n in range(1, pc.n_max + 1)
    ]


# ---------------------------------------------------------------- commands


def cmd_counts(args) -> str:
    m, n_max = args.m, args.n
    lc = sequences.level_counts(m, n_max)
    pc = sequences.pair_counts(lc) if args.pairs else None
    fmt = args.format or "table"
    params = {"n": n_max, "pairs": bool(args.pairs)}
    if fmt == "json":
        data = {"levels": level_counts_to_json(lc)}
        if pc is not None:
            data["pairs"] = pair_counts_to_json(pc)
        return render_json("counts", m, params, data, args.digits)
    pair_keys = [(i, j) for i in range(m) for j in range(m)] if pc else []
    if fmt == "csv":
        header = ["n"] + [f"level_{j}" for j in range(m)] + ["total"]
        header += [f"N_{i}_{j}" for i, j in pair_keys]
        rows = []
        for n in range(1, n_max + 1):
            row = [n, *lc.row(n), lc.total(n)]
            row += [pc.value(n, i, j) for i, j in pair_keys]
            rows.append(row)
        return render_csv(header, rows)
    if fmt == "bfile":
        raise UsageError("bfile output applies only to single-sequence exports; use `export`")
    header = ["sequence"] + [str(n) for n in range(1, n_max + 1)]
    names = level_names(m)
    rows = [[names[j]] + [lc.value(n, j) for n in range(1, n_max + 1)] for j in reversed(range(m))]
    rows.append(["g_n"] + [lc.total(n) for n in range(1, n_max + 1)])
    for i, j in pair_keys:
        rows.append([pair_name(m, i, j)] + pc.sequence(i, j))
    return render_table(header, rows)


def cmd_proportions(args) -> str:
    m = args.m
    if not args.limit_only and not args.n:
        raise UsageError("give --n LIST or --limit-only")
    ns = [] if args.limit_only else args.n
    if any(n < 1 for n in ns):
        raise UsageError("every n must be >= 1")
    places = args.decimals
    cd = analytic.critical_data(m, args.digits)
    rows, data = [], []
    if ns:
        lc = sequences.level_counts(m, max(ns))
        for n in ns:
            ratios = sequences.proportions(lc, n, places)
            rows.append([n] + [str(x) for x in ratios])
            exact = sequences.proportions(lc, n, args.digits)
            data.append({"n": n, "ratios": [str(x) for x in exact]})
    limit = [fmt_decimal(x, places) for x in cd.p]
    rows.append(["∞"] + limit)
    data.append({"n": "inf", "ratios": [full_decimal(x, args.digits) for x in cd.p]})
    fmt = args.format or "table"
    if m == 4:
        header = ["n", "f_n/g_n", "a_n/g_n", "b_n/g_n", "t_n/g_n"]
    else:
        header = ["n"] + [f"p[{lab}]" for lab in labels(m)]
    if fmt == "json":
        return render_json("proportions", m, {"n": ns, "decimals": places}, data, args.digits)
    if fmt == "csv":
        return render_csv(header, rows)
    if fmt == "bfile":
        raise UsageError("bfile output applies only to single-sequence exports")
    return render_table(header, rows)


def _radicals_block(digits: int) -> list[tuple[str, object]]:
    g = analytic.godel4_exact(digits)
    return [
        ("beta", g.beta),
        ("alpha", g.alpha),
        ("gamma", g.gamma),
        ("p_bot", g.p_bot),
        ("p_a", g.p_a),
        ("p_b", g.p_b),
        ("p_top", g.p_top),
        ("1-p_top", 1 - g.p_top),
    ]


def cmd_limits(args) -> str:
    ms = args.m
    if any(m < 2 for m in ms):
        raise UsageError("every m must be >= 2")
    places = args.decimals
    fmt = args.format or "table"
    results = []
    for m in ms:
        cd = analytic.critical_data(m, args.digits)
        entry = {
            "m": m,
            "p_top": cd.p[-1],
            "p_bottom": cd.p[0],
            "p_bottom_closed": analytic.p_bottom_closed(m, args.digits),
        }
        if args.vector:
            entry["p"] = cd.p
        results.append(entry)
    radicals = _radicals_block(args.digits) if args.exact_radicals else None
    if radicals is not None and 4 not in ms:
        raise UsageError("--exact-radicals needs m=4 in the list")

    if fmt == "json":
        data = []
        for e in results:
            d = {"m": e["m"], "p_top": full_decimal(e["p_top"], args.digits),
                 "p_bottom": full_decimal(e["p_bottom"], args.digits),
                 "p_bottom_closed": full_decimal(e["p_bottom_closed"], args.digits)}
            if "p" in e:
                d["p"] = [full_decimal(x, args.digits) for x in e["p"]]
            data.append(d)
        payload = {"limits": data}
        if radicals:
            payload["godel4_exact"] = {k: full_decimal(v, args.digits) for k, v in radicals}
        return render_json("limits", ms, {"decimals": places, "vector": bool(args.vector),
                                          "exact_radicals": bool(args.exact_radicals)},
                           payload, args.digits)
    header = ["m", "p_top(m)", "p_bottom(m)"]
    rows = [[e["m"], fmt_decimal(e["p_top"], places), fmt_decimal(e["p_bottom_closed"], places)] for e in results]
    if fmt == "csv":
        return render_csv(header, rows)
    if fmt == "bfile":
        raise UsageError("bfile output applies only to single-sequence exports")
    out = render_table(header, rows)
    if args.vector:
        for e in results:
            out += f"\np_j({e['m']}):\n"
            out += render_table(["j", "p_j"], [[j, fmt_decimal(x, places)] for j, x in enumerate(e["p"])])
    if radicals:
        out += "\nGödel-4 exact radicals:\n"
        out += render_table(["constant", "value"], [[k, fmt_decimal(v, 18)] for k, v in radicals])
    return out


def run_verification(ms: Sequence[int], n_cap: int, budget: int) -> list[dict]:
    """Oracle-vs-engine and identity checks.  Each item has name/status/detail."""
    checks: list[dict] = []

    def record(name: str, fn: Callable[[], str | None]) -> None:
        try:
            detail = fn()
        except ResourceLimitError as exc:
            checks.append({"name": name, "status": "SKIP", "detail": str(exc)})
            return
        checks.append({"name": name, "status": "FAIL" if detail else "PASS", "detail": detail or ""})

    def mismatch(m, n, j, expected, got) -> str:
        return f"m={m} n={n} j={j} expected={expected} got={got}"

    for m in ms:
        chain = Chain(m)
        lc = sequences.level_counts(m, n_cap)
        pc = sequences.pair_counts(lc)

        def brute(m=m, chain=chain, lc=lc):
            for n in range(1, n_cap + 1):
                got = oracle.brute_counts(n, chain, budget).counts
                for j in range(m):
                    if got[j] != lc.value(n, j):
                        return mismatch(m, n, j, got[j], lc.value(n, j))

        def dp(m=m, chain=chain, lc=lc):
            for n in range(1, n_cap + 1):
                if m**n * sequences.catalan(n - 1) > budget:
                    raise ResourceLimitError(f"n={n} over budget {budget}")
                got = oracle.dp_counts(n, chain, max_n=max(n, oracle.DEFAULT_MAX_N)).counts
                for j in range(m):
                    if got[j] != lc.value(n, j):
                        return mismatch(m, n, j, got[j], lc.value(n, j))

        def pairs(m=m, chain=chain, pc=pc):
            for n in range(1, n_cap + 1):
                got = oracle.brute_pair_counts(n, chain, budget)
                for i in range(m):
                    for j in range(m):
                        if got[i][j] != pc.value(n, i, j):
                            return mismatch(m, n, (i, j), got[i][j], pc.value(n, i, j))

        def sum_law(m=m, lc=lc):
            for n in range(1, n_cap + 1):
                want = m**n * sequences.catalan(n - 1)
                if sum(lc.row(n)) != want:
                    return mismatch(m, n, "sum", want, sum(lc.row(n)))

        def recovery(m=m, lc=lc, pc=pc):
            for n, row in sequences.recover_outputs_from_pairs(pc).items():
                for j in range(m):
                    if row[j] != lc.value(n, j):
                        return mismatch(m, n, j, lc.value(n, j), row[j])

        def swap(m=m, pc=pc):
            for n in range(1, n_cap + 1):
                for i in range(m):
                    for j in range(i + 1, m):
                        if pc.value(n, i, j) != pc.value(n, j, i):
                            return mismatch(m, n, (i, j), pc.value(n, j, i), pc.value(n, i, j))

        record(f"m={m}: engine == brute force (n<={n_cap})", brute)
        record(f"m={m}: engine == per-bracketing DP (n<={n_cap})", dp)
        record(f"m={m}: pair engine == brute force pairs (n<={n_cap})", pairs)
        record(f"m={m}: sum law m^n*C(n-1)", sum_law)
        record(f"m={m}: outputs recovered from pairs", recovery)
        record(f"m={m}: swap symmetry of pairs", swap)

        if m == 4 and n_cap >= 2:
            def tally(lc=lc):
                want = (3, 2, 1, 10)
                got = oracle.brute_counts(2, Chain(4), budget).counts
                for j in range(4):
                    if got[j] != want[j] or lc.value(2, j) != want[j]:
                        return mismatch(4, 2, j, want[j], (got[j], lc.value(2, j)))

            record("m=4: n=2 tally (3, 2, 1, 10)", tally)
        if m == 4 and n_cap >= 3:
            def recovery3(pc=pc):
                t = pc.table(3)
                f3 = t[1][0] + t[2][0] + t[3][0]
                t3 = sum(t[i][j] for i in range(4) for j in range(i, 4))
                if f3 != 22:
                    return mismatch(4, 3, 0, 22, f3)
                if t3 != 80:
                    return mismatch(4, 3, 3, 80, t3)

            record("m=4: n=3 pair sums f_3=22, t_3=80", recovery3)
    return checks


def cmd_verify(args) -> tuple[str, int]:
    if any(m < 2 for m in args.m) or args.n < 1:
        raise UsageError("need every m >= 2 and n >= 1")
    checks = run_verification(args.m, args.n, args.budget)
    failed = any(c["status"] == "FAIL" for c in checks)
    code = EXIT_VERIFY if failed else EXIT_OK
    fmt = args.format or "table"
    if fmt == "json":
        text = render_json("verify", args.m, {"n": args.n, "budget": args.budget},
                           {"checks": checks, "status": "FAIL" if failed else "PASS"},
                           args.digits)
        return text, code
    if fmt == "csv":
        return render_csv(["check", "status", "detail"], [[c["name"], c["status"], c["detail"]] for c in checks]), code
    lines = [f"{c['status']:4}  {c['name']}" + (f"  [{c['detail']}]" if c["detail"] else "") for c in checks]
    lines.append("FAIL" if failed else "PASS")
    return "\n".join(lines) + "\n", code


def cmd_limit_law(args) -> str:
    grid = args.t_grid
    if any(not 0 <= t <= 1 for t in grid):
        raise UsageError("t-grid values must lie in [0, 1]")
    ladder = args.m_ladder
    if any(m < 2 for m in ladder):
        raise UsageError("every m must be >= 2")
    places = args.decimals
    rows, data = [], []
    for t in grid:
        limit = limit_law.atom_mass() if t == 1 else limit_law.survival(t)
        cuts = [limit_law.macroscopic_cut(m, t, args.digits) for m in ladder]
        rows.append([t, fmt_decimal(limit, places)] + [fmt_decimal(c, places) for c in cuts])
        data.append({"t": t, "limit": full_decimal(limit, 20), "cuts": {str(m): full_decimal(c, 20) for m, c in zip(ladder, cuts)}})
    mean_closed, mean_quad = limit_law.mean(), limit_law.mean_by_quadrature()
    fmt = args.format or "table"
    if fmt == "json":
        payload = {"survival": data, "mean": {"closed_form": full_decimal(mean_closed, 20),
                                              "quadrature": full_decimal(mean_quad, 20)}}
        return render_json("limit-law", ladder, {"t_grid": grid, "decimals": places}, payload,
                           args.digits)
    header = ["t", "(1+2t)^-1/2"] + [f"q_k(m={m})" for m in ladder]
    if fmt == "csv":
        return render_csv(header, rows + [["mean", fmt_decimal(mean_closed, places), fmt_decimal(mean_quad, places)]])
    if fmt == "bfile":
        raise UsageError("bfile output applies only to single-sequence exports")
    out = render_table(header, rows)
    out += "\n" + render_table(["E[T]", "value"], [["sqrt(3)-1", fmt_decimal(mean_closed, places)],
                                                  ["quadrature", fmt_decimal(mean_quad, places)]])
    return out


def _export_sequence(args) -> tuple[list[int], dict]:
    m, n_max = args.m, args.n
    has_pair = args.i is not None or args.j is not None
    if (args.level is not None) == has_pair:
        raise UsageError("give exactly one of --level or (--i and --j)")
    if has_pair and (args.i is None or args.j is None):
        raise UsageError("--i and --j must be given together")
    lc = sequences.level_counts(m, n_max)
    if args.level is not None:
        j = args.level
        if not 0 <= j < m:
            raise UsageError(f"--level must lie in 0..{m - 1}")
        values = [lc.value(n, j) for n in range(1, n_max + 1)]
        if j < m - 1:
            gen = f"G_{j}(x) = x / (1 - H_{j + 1}(x)), H_k = sum_(p>=k) G_p"
        else:
            gen = f"G_{j}(x) = G(x) - sum_(p<{j}) G_p(x)"
        meta = {"selector": {"level": j}, "generator": gen}
    else:
        i, j = args.i, args.j
        if not (0 <= i < m and 0 <= j < m):
            raise UsageError(f"--i/--j must lie in 0..{m - 1}")
        values = [sequences.pair_count(lc, n, i, j) for n in range(1, n_max + 1)]
        meta = {"selector": {"i": i, "j": j}, "generator": f"N^{{{i},{j}}}(x) = G_{i}(x)*G_{j}(x)"}
    return values, meta


def cmd_export(args) -> str:
    values, meta = _export_sequence(args)
    fmt = args.format or "bfile"
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in enumerate(values, start=1))
    if fmt == "json":
        data = {**meta, "values": [{"n": n, "value": str(v)} for n, v in enumerate(values, start=1)]}
        return render_json("export", args.m, {"n": args.n}, data, args.digits)
    sel = ";".join(f"{k}={v}" for k, v in meta["selector"].items())
    rows = [[args.m, sel, meta["generator"], n, v] for n, v in enumerate(values, start=1)]
    if fmt == "csv":
        return render_csv(["m", "selector", "generator", "n", "value"], rows)
    return render_table(["n", "value"], [[n, v] for n, v in enumerate(values, start=1)])


def seed_tables(out_dir: Path, digits: int = DEFAULT_DIGITS) -> list[Path]:
    """Regenerate every reference table into ``out_dir``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    def write(name: str, text: str) -> None:
        path = out_dir / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    ns = argparse.Namespace(digits=digits, format="table")
    write("godel4_implication.txt", render_table(
        ["=>"] + list(GODEL4_LABELS),
        [[GODEL4_LABELS[p]] + [GODEL4_LABELS[v] for v in row] for p, row in enumerate(implication_table(Chain(4)))]))
    write("godel4_proportions.txt", cmd_proportions(argparse.Namespace(
        **vars(ns), m=4, n=list(TABLE4_NS), limit_only=False, decimals=6)))
    write("p_top_small_m.txt", cmd_limits(argparse.Namespace(
        **vars(ns), m=list(TABLE5_MS), decimals=10, vector=False, exact_radicals=False)))
    write("p_top_large_m.txt", cmd_limits(argparse.Namespace(
        **vars(ns), m=list(TABLE6_MS), decimals=10, vector=False, exact_radicals=False)))
    write("godel4_exact.txt", cmd_limits(argparse.Namespace(
        **vars(ns), m=[4], decimals=10, vector=True, exact_radicals=True)))
    for m in (5, 10):
        write(f"p_vector_m{m}.txt", cmd_proportions(argparse.Namespace(
            **vars(ns), m=m, n=None, limit_only=True, decimals=6)))
    write("godel4_sequences.txt", cmd_counts(argparse.Namespace(**vars(ns), m=4, n=10, pairs=True)))
    chain = Chain(4)
    lab = GODEL4_LABELS
    n2 = oracle.enumerate_bracketings(2)[0]
    write("truth_table_n2.txt", render_table(
        ["p1", "p2", str(n2)],
        [[lab[a], lab[b], lab[oracle.evaluate(n2, (a, b), chain)]] for a, b in oracle.valuations(2, chain)]))
    for b in oracle.enumerate_bracketings(3):
        slug = "right_nested" if isinstance(b.tree[0], int) else "left_nested"
        write(f"truth_table_n3_{slug}.txt", render_table(
            ["p1", "p2", "p3", str(b)],
            [[lab[x] for x in v] + [lab[oracle.evaluate(b, v, chain)]] for v in oracle.valuations(3, chain)]))
    write("limit_law.txt", cmd_limit_law(argparse.Namespace(
        **vars(ns), t_grid=[0, 0.25, 0.5, 0.75, 1], m_ladder=list(TABLE6_MS), decimals=10)))
    return written


def cmd_seed_tables(args) -> str:
    paths = seed_tables(Path(args.out), args.digits)
    return "".join(f"wrote {p}\n" for p in paths)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="working decimal digits (default 60)")
    common.add_argument("--format", choices=("table", "csv", "json", "bfile"), default=None)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="brute-force evaluation cap")

    parser = argparse.ArgumentParser(
        prog="godel-chain",
        description="Output counts of fully bracketed Gödel implications on finite chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("counts", parents=[common], help="exact level (and pair) counts")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="largest n")
    p.add_argument("--pairs", action="store_true")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("proportions", parents=[common], help="empirical proportions and their limits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=parse_int_list)
    p.add_argument("--limit-only", action="store_true")
    p.add_argument("--decimals", type=int, default=6)
    p.set_defaults(func=cmd_proportions)

    p = sub.add_parser("limits", parents=[common], help="limit constants p_top(m), p_bottom(m)")
    p.add_argument("--m", type=parse_int_list, required=True)
    p.add_argument("--decimals", type=int, default=10)
    p.add_argument("--vector", action="store_true", help="print the full p_j(m) vector")
    p.add_argument("--exact-radicals", action="store_true")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("verify", parents=[common], help="oracle-vs-engine and identity checks")
    p.add_argument("--m", type=parse_int_list, required=True)
    p.add_argument("--n", type=int, required=True, help="largest n to check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limit-law", parents=[common], help="survival function, cuts, mean")
    p.add_argument("--t-grid", type=parse_float_list, default=[0.0, 0.25, 0.5, 0.75, 1.0])
    p.add_argument("--m-ladder", type=parse_int_list, default=list(TABLE6_MS))
    p.add_argument("--decimals", type=int, default=10)
    p.set_defaults(func=cmd_limit_law)

    p = sub.add_parser("export", parents=[common], help="one sequence as b-file/csv/json")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--level", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("seed-tables", parents=[common], help="regenerate every table into a directory")
    p.add_argument("--out", default="docs")
    p.set_defaults(func=cmd_seed_tables)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("m", "n"):
        val = getattr(args, name, None)
        if isinstance(val, int) and ((name == "m" and val < 2) or (name == "n" and val < 1)):
            parser.error(f"--{name} out of range: {val}")
    start = time.perf_counter()
    try:
        analytic.Precision(args.digits)
        result = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if args.format == "json":
        # the only nondeterministic field; golden comparisons drop it
        obj = json.loads(result)
        obj["wall_time_s"] = round(time.perf_counter() - start, 6)
        result = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
