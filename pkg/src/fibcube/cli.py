"""Command-line front end: reproducible tables for every invariant.

Identical arguments always produce byte-identical output. Exit codes:
0 on success, 1 on a usage or range error, 2 when a requested
cross-check finds an inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Context, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import cube, density, fibtree, series
from .numeric import _CTX, fibonacci, sqrt5, to_decimal
from .words import WordClass, enumerate_words

_KINDS = {"fib": WordClass.FIBONACCI, "lucas": WordClass.LUCAS, "hyper": WordClass.UNRESTRICTED}

# default evaluation scales for the limits table
_ECC_SCALE = 1000
_DEG_SCALE = 1000
_WEIGHT_FIB_SCALE = 1000
_WEIGHT_LUCAS_SCALE = 60
_RHO_SCALE = 10000

# brute-force cross-checks enumerate every vertex, so they are capped
_VERIFY_MAX_N = 16


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def format_significant(value: Decimal, digits: int) -> str:
    """Render with exactly ``digits`` significant digits."""
    if digits < 1:
        raise _UsageError("--digits must be >= 1")
    with localcontext(Context(prec=digits + 2)):
        d = Decimal(value)
        if d == 0:
            return "0"
        quantum = Decimal((0, (1,), d.adjusted() - digits + 1))
        return str(d.quantize(quantum))


def _emit(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _table(header: list[str], rows: list[list[str]], fmt: str, left: frozenset[int] = frozenset()) -> list[str]:
    if fmt == "csv":
        return [",".join(header)] + [",".join(r) for r in rows]
    widths = [len(h) for h in header]
    for r in rows:
        for c, cell in enumerate(r):
            widths[c] = max(widths[c], len(cell))
    lines = []
    for r in [header] + rows:
        cells = [
            cell.ljust(widths[c]) if c in left else cell.rjust(widths[c])
            for c, cell in enumerate(r)
        ]
        lines.append("  ".join(cells).rstrip())
    return lines


def _word_str(w, fmt: str) -> str:
    s = str(w)
    if not s:
        return "" if fmt == "csv" else "ε"
    return s


def _cmd_enumerate(args) -> int:
    kind = _KINDS[args.kind]
    cap = 20 if kind is WordClass.UNRESTRICTED else 30
    if not 0 <= args.n <= cap:
        raise _UsageError(f"--n must lie in 0..{cap} for kind {args.kind}")
    ws = enumerate_words(args.n, kind)
    if args.format == "csv":
        _emit(["word"] + [_word_str(w, "csv") for w in ws])
    else:
        _emit([_word_str(w, "text") for w in ws])
    return 0


def _cmd_ecc_table(args) -> int:
    kind = _KINDS[args.kind]
    # counts beyond dimension 20000 exceed the interpreter's integer print limit
    if not 1 <= args.n_max <= 20000:
        raise _UsageError("--n-max must lie in 1..20000")
    if args.verify and args.n_max > _VERIFY_MAX_N:
        raise _UsageError(f"--verify enumerates every vertex; use --n-max <= {_VERIFY_MAX_N}")
    rows = []
    for n in range(1, args.n_max + 1):
        nv = cube.vertex_count(n, kind)
        ne = cube.edge_count(n, kind)
        es = cube.ecc_sum_closed(n, kind)
        avg = cube.average_ecc(n, kind)
        rows.append(
            [
                str(n),
                str(nv),
                str(ne),
                str(es),
                str(avg),
                format_significant(cube.average_ecc_over_n(n, kind), args.digits),
            ]
        )
    if args.verify:
        gf_sums = series.ecc_sum_from_gf(args.n_max, kind)
        for n in range(1, args.n_max + 1):
            g = cube.CubeGraph(kind, n)
            brute_sum = sum(g.eccentricities("bfs"))
            brute_edges = g.edge_count_brute()
            closed_sum = cube.ecc_sum_closed(n, kind)
            closed_edges = cube.edge_count(n, kind)
            if not (brute_sum == closed_sum == gf_sums[n]):
                print(
                    f"consistency failure at n={n}: eccentricity sums "
                    f"bfs={brute_sum} closed={closed_sum} gf={gf_sums[n]}",
                    file=sys.stderr,
                )
                return 2
            if brute_edges != closed_edges:
                print(
                    f"consistency failure at n={n}: edges "
                    f"bfs={brute_edges} closed={closed_edges}",
                    file=sys.stderr,
                )
                return 2
    _emit(_table(["n", "vertices", "edges", "ecc_sum", "avg_ecc", "avg_ecc_over_n"], rows, args.format))
    return 0


def _cmd_ecc_hist(args) -> int:
    kind = _KINDS[args.kind]
    n = args.n
    if n < 0:
        raise _UsageError("--n must be >= 0")
    if args.method == "fast" and kind is not WordClass.FIBONACCI:
        raise _UsageError("--method fast applies to --kind fib only")
    if args.method == "bfs" and n > _VERIFY_MAX_N:
        raise _UsageError(f"--method bfs enumerates every vertex; use --n <= {_VERIFY_MAX_N}")
    if n > 30:
        raise _UsageError("--n must be <= 30")
    if args.verify and n > _VERIFY_MAX_N:
        raise _UsageError(f"--verify needs --n <= {_VERIFY_MAX_N}")

    def by_method(method: str) -> cube.EccHistogram:
        if method == "gf":
            table = (
                series.fibonacci_ecc_gf(n)
                if kind is WordClass.FIBONACCI
                else series.lucas_ecc_gf(n)
            )
            return table[n]
        return cube.CubeGraph(kind, n).ecc_histogram(method)

    hist = by_method(args.method)
    if args.verify:
        methods = ["bfs", "gf", "fast"] if kind is WordClass.FIBONACCI else ["bfs", "gf"]
        if kind is WordClass.LUCAS and n < 2:
            methods.remove("gf")  # degenerate cubes: the series row is reported, not asserted
        results = {m: by_method(m) for m in methods}
        results[args.method] = hist
        baseline = results[methods[0]]
        for m, h in results.items():
            if h.counts != baseline.counts:
                print(
                    f"consistency failure at n={n}: histogram {m}={h.counts} "
                    f"{methods[0]}={baseline.counts}",
                    file=sys.stderr,
                )
                return 2
    rows = [[str(k), str(c)] for k, c in sorted(hist.counts.items())]
    _emit(_table(["k", "count"], rows, args.format))
    return 0


def _cmd_weights(args) -> int:
    kind = _KINDS[args.kind]
    n = args.n
    if n < 1:
        raise _UsageError("--n must be >= 1")
    if kind is WordClass.LUCAS and n == 1:
        raise _UsageError("ratios undefined at n=1 for kind lucas: no word has a 1")
    if n > 10000:
        raise _UsageError("--n must be <= 10000")
    if args.verify and n > _VERIFY_MAX_N:
        raise _UsageError(f"--verify needs --n <= {_VERIFY_MAX_N}")
    rows = []
    for i in range(1, n + 1):
        w0 = cube.weight_count(n, i, 0, kind)
        w1 = cube.weight_count(n, i, 1, kind)
        if args.verify:
            b0 = cube.weight_count_brute(n, i, 0, kind)
            b1 = cube.weight_count_brute(n, i, 1, kind)
            if (w0, w1) != (b0, b1):
                print(
                    f"consistency failure at i={i}: closed=({w0},{w1}) brute=({b0},{b1})",
                    file=sys.stderr,
                )
                return 2
        ratio = to_decimal(Fraction(w0, w1))
        rows.append([str(i), str(w0), str(w1), format_significant(ratio, args.digits)])
    avg = cube.weight_ratio_average_decimal(n, kind)
    rows.append(["avg", "", "", format_significant(avg, args.digits)])
    _emit(_table(["i", "zero_count", "one_count", "ratio"], rows, args.format))
    return 0


def _cmd_tree_check(args) -> int:
    if not 1 <= args.n <= _VERIFY_MAX_N:
        raise _UsageError(f"--n must lie in 1..{_VERIFY_MAX_N}")
    labeling = fibtree.LabelingKind(args.labeling)
    check = fibtree.verify_depth_eccentricity(args.n, labeling)
    if args.format == "csv":
        header = "status,leaves,label,depth,eccentricity"
        if check.ok:
            _emit([header, f"PASS,{check.leaf_count},,,"])
            return 0
        label, depth, ecc = check.counterexample
        _emit([header, f"FAIL,{check.leaf_count},{label!s},{depth},{ecc}"])
        return 2
    if check.ok:
        _emit([f"PASS {check.leaf_count} leaves"])
        return 0
    label, depth, ecc = check.counterexample
    _emit([f"FAIL at label {label!s}: depth {depth}, eccentricity {ecc}"])
    return 2


def _cmd_tree_print(args) -> int:
    if not 1 <= args.n <= 20:
        raise _UsageError("--n must lie in 1..20")
    tree = fibtree.build(args.n, fibtree.LabelingKind(args.labeling))
    if args.format == "csv":
        rows = [[str(d), str(label)] for label, d in tree.leaves()]
        _emit(_table(["depth", "label"], rows, "csv"))
    else:
        _emit([tree.render()])
    return 0


def _density_family(args):
    if args.family == "fib":
        return density.fibonacci_cube_family()
    if args.family == "lucas":
        return density.lucas_cube_family()
    if args.family == "skk":
        return density.subdivided_complete_family()
    if args.family == "cycles":
        return density.even_cycle_family()
    if args.base_n is None:
        raise _UsageError("--family power needs --base-n")
    if not 1 <= args.base_n <= 20:
        raise _UsageError("--base-n must lie in 1..20")
    nv = cube.vertex_count(args.base_n, WordClass.FIBONACCI)
    ne = cube.edge_count(args.base_n, WordClass.FIBONACCI)
    return density.power_family(nv, ne, name=f"fib-{args.base_n}-powers")


def _cmd_density(args) -> int:
    # cube counts beyond dimension 20000 exceed the interpreter's print limit
    caps = {"fib": 20000, "lucas": 20000, "skk": 10**6, "cycles": 10**12, "power": 1000}
    if args.k < 1:
        raise _UsageError("--k must be >= 1")
    if args.k > caps[args.family]:
        raise _UsageError(f"--k must be <= {caps[args.family]} for family {args.family}")
    if args.family != "power" and args.base_n is not None:
        raise _UsageError("--base-n applies to --family power only")
    family = _density_family(args)
    if args.k < family.first_index:
        raise _UsageError(f"--k must be >= {family.first_index} for family {args.family}")
    step = args.step if args.step is not None else max(1, args.k // 200)
    if step < 1:
        raise _UsageError("--step must be >= 1")
    table = density.rho_limit(family, args.k, step)
    if args.verify:
        if args.family in ("fib", "lucas"):
            for row in table.rows:
                if row.k > _VERIFY_MAX_N:
                    continue
                g = cube.CubeGraph(_KINDS[args.family], row.k)
                if (g.num_vertices, g.edge_count_brute()) != (row.num_vertices, row.num_edges):
                    print(f"consistency failure at k={row.k}: counts", file=sys.stderr)
                    return 2
        elif args.family == "power":
            base = density.ExplicitGraph.from_cube(cube.CubeGraph(WordClass.FIBONACCI, args.base_n))
            for row in table.rows:
                if row.num_vertices > 5000:
                    continue
                g = density.cartesian_power(base, row.k)
                if (g.num_vertices, g.num_edges) != (row.num_vertices, row.num_edges):
                    print(f"consistency failure at k={row.k}: counts", file=sys.stderr)
                    return 2
        else:
            raise _UsageError(f"--verify has no independent route for family {args.family}")
    rows = [
        [str(r.k), str(r.num_vertices), str(r.num_edges), format_significant(r.rho, args.digits)]
        for r in table.rows
    ]
    _emit(_table(["k", "vertices", "edges", "rho"], rows, args.format))
    return 0


def _cmd_limits(args) -> int:
    with localcontext(_CTX):
        s5 = sqrt5()
        ecc_limit = (5 + s5) / 10
        deg_limit = (5 - s5) / 5
        phi_sq = (3 + s5) / 2
        rho_limit_const = deg_limit / (((1 + s5) / 2).ln() / Decimal(2).ln())
    fib, luc = WordClass.FIBONACCI, WordClass.LUCAS
    rows_data = [
        ("avg-ecc-over-n-fib", ecc_limit, cube.average_ecc_over_n(_ECC_SCALE, fib)),
        ("avg-ecc-over-n-lucas", ecc_limit, cube.average_ecc_over_n(_ECC_SCALE, luc)),
        ("avg-deg-over-n-fib", deg_limit, to_decimal(cube.average_degree(_DEG_SCALE, fib) / _DEG_SCALE)),
        ("avg-deg-over-n-lucas", deg_limit, to_decimal(cube.average_degree(_DEG_SCALE, luc) / _DEG_SCALE)),
        ("weight-ratio-fib", phi_sq, cube.weight_ratio_average_decimal(_WEIGHT_FIB_SCALE, fib)),
        (
            "weight-ratio-lucas",
            phi_sq,
            to_decimal(
                Fraction(fibonacci(_WEIGHT_LUCAS_SCALE + 1), fibonacci(_WEIGHT_LUCAS_SCALE - 1))
            ),
        ),
        (
            "rho-fib",
            rho_limit_const,
            density.rho((cube.vertex_count(_RHO_SCALE, fib), cube.edge_count(_RHO_SCALE, fib))),
        ),
        (
            "rho-lucas",
            rho_limit_const,
            density.rho((cube.vertex_count(_RHO_SCALE, luc), cube.edge_count(_RHO_SCALE, luc))),
        ),
    ]
    rows = []
    for name, limit, value in rows_data:
        with localcontext(_CTX):
            err = abs(value - limit)
        rows.append(
            [
                name,
                format_significant(limit, args.digits),
                format_significant(value, args.digits),
                format_significant(err, args.digits),
            ]
        )
    _emit(_table(["name", "limit", "value", "abs_error"], rows, args.format, left=frozenset({0})))
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.add_argument("--digits", type=int, default=12, help="significant digits for decimals")


def _build_parser() -> _Parser:
    parser = _Parser(prog="fibcube", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the vertices of one cube")
    p.add_argument("--kind", choices=("fib", "lucas", "hyper"), required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("ecc-table", help="eccentricity sums and averages per dimension")
    p.add_argument("--kind", choices=("fib", "lucas"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against BFS and the series")
    _add_common(p)
    p.set_defaults(handler=_cmd_ecc_table)

    p = sub.add_parser("ecc-hist", help="vertex counts per eccentricity")
    p.add_argument("--kind", choices=("fib", "lucas"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("bfs", "gf", "fast"), default="bfs")
    p.add_argument("--verify", action="store_true", help="compare every applicable method")
    _add_common(p)
    p.set_defaults(handler=_cmd_ecc_hist)

    p = sub.add_parser("weights", help="counts of words with 0 resp. 1 per position")
    p.add_argument("--kind", choices=("fib", "lucas"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against enumeration")
    _add_common(p)
    p.set_defaults(handler=_cmd_weights)

    p = sub.add_parser("tree-check", help="leaf depth against cube eccentricity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labeling", choices=("theta", "standard"), default="theta")
    _add_common(p)
    p.set_defaults(handler=_cmd_tree_check)

    p = sub.add_parser("tree-print", help="render a labeled tree, one leaf per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labeling", choices=("theta", "standard"), default="theta")
    _add_common(p)
    p.set_defaults(handler=_cmd_tree_print)

    p = sub.add_parser("density", help="hypercube density along a family")
    p.add_argument("--family", choices=("fib", "lucas", "skk", "cycles", "power"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--base-n", type=int, default=None, help="base cube dimension for --family power")
    p.add_argument("--step", type=int, default=None, help="sample every STEP indices (default: k/200)")
    p.add_argument("--verify", action="store_true", help="cross-check counts where a brute route exists")
    _add_common(p)
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("limits", help="limit constants against values at default scales")
    _add_common(p)
    p.set_defaults(handler=_cmd_limits)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.handler(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # argparse --help
        return int(e.code or 0)


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
