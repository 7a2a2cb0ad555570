"""Batch command line interface.

Exit codes: 0 success, 2 usage or parse error, 3 instance unsolved
within the configured budgets (distinct from ordinary errors, which
exit 1).  JSON output is deterministic: keys appear in a fixed order
and exact rationals serialize as "p/q" strings with a parallel float
approximation for plotting.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from functools import wraps

import click

from .bounds import (
    cube3_bound,
    kings_bound,
    kings_root_closed_form,
    largest_root,
    q_poly,
)
from .compare import SUITES, run_suite
from .engine import cooling_sequence_strong, replay as engine_replay
from .errors import BudgetExceededError, GraphError, InvalidSequenceError
from .graphs import parse_graph_spec
from .solvers import burning_number, cooling_number, liminal_sweep, liminal_value
from .tiling import f_value, k_star_lower_bound, pack_1d, pack_small_2d

EXIT_UNSOLVED = 3


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj))


def _budget_guarded(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as exc:
            _echo_json({"status": "unsolved", "reason": str(exc)})
            sys.exit(EXIT_UNSOLVED)
        except (GraphError, InvalidSequenceError) as exc:
            raise click.UsageError(str(exc))

    return wrapper


def _parse_graph(spec: str):
    try:
        return parse_graph_spec(spec)
    except GraphError as exc:
        raise click.UsageError(str(exc))


def _emit_rows(columns, rows, fmt: str) -> None:
    if fmt == "json":
        _echo_json({"columns": columns, "rows": rows})
        return
    if fmt == "csv":
        click.echo(",".join(columns))
        for row in rows:
            click.echo(",".join("" if row[c] is None else str(row[c]) for c in columns))
        return
    widths = [
        max(len(c), *(len(str(row[c])) for row in rows)) if rows else len(c) for c in columns
    ]
    click.echo("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for row in rows:
        click.echo(
            "  ".join(
                ("" if row[c] is None else str(row[c])).ljust(w)
                for c, w in zip(columns, widths)
            )
        )


def _line_payload(result):
    if result.kind in ("burning", "cooling"):
        return list(result.principal_line)
    out = []
    for move in result.principal_line:
        if move[0] == "reveal":
            out.append({"type": "reveal", "vertices": list(move[1])})
        elif move[0] == "burn":
            out.append({"type": "burn", "vertex": move[1]})
        else:
            out.append({"type": "pass"})
    return out


_budget_options = [
    click.option(
        "--node-limit",
        type=int,
        default=None,
        envvar="BURNGAMES_NODE_LIMIT",
        help="Abort a solve after this many search nodes.",
    ),
    click.option(
        "--time-limit",
        type=float,
        default=None,
        envvar="BURNGAMES_TIME_LIMIT",
        help="Abort a solve after this many seconds.",
    ),
    click.option(
        "--max-vertices",
        type=int,
        default=None,
        envvar="BURNGAMES_MAX_VERTICES",
        help="Override the per-game exact-size budget.",
    ),
]


def budget_options(fn):
    for option in reversed(_budget_options):
        fn = option(fn)
    return fn


def _budget_kwargs(node_limit, time_limit, max_vertices):
    kwargs = {"node_limit": node_limit, "time_limit": time_limit}
    if max_vertices is not None:
        kwargs["max_vertices"] = max_vertices
    return kwargs


@click.group()
@click.version_option(package_name="burngames")
def main() -> None:
    """Exact engines and bounds for graph burning, cooling and liminal burning."""


@main.command()
@click.option("--graph", "spec", required=True, help="Graph spec, e.g. path:n=9.")
@click.option("--game", type=click.Choice(["burn", "cool", "liminal"]), default="burn")
@click.option("--k", type=int, default=None, help="Reveal quota for the liminal game.")
@budget_options
@_budget_guarded
def solve(spec, game, k, node_limit, time_limit, max_vertices):
    """Exact game value for one instance."""
    g = _parse_graph(spec)
    kwargs = _budget_kwargs(node_limit, time_limit, max_vertices)
    if game == "burn":
        result = burning_number(g, **kwargs)
    elif game == "cool":
        result = cooling_number(g, **kwargs)
    else:
        if k is None:
            raise click.UsageError("--game liminal requires --k")
        result = liminal_value(g, k, **kwargs)
    payload = {
        "value": result.value,
        "kind": result.kind,
        "nodes": result.nodes_expanded,
        "principal_line": _line_payload(result),
    }
    if result.k is not None:
        payload["k"] = result.k
    _echo_json(payload)


@main.command()
@click.option("--graph", "spec", required=True)
@budget_options
@click.pass_context
def cool(ctx, spec, node_limit, time_limit, max_vertices):
    """Exact cooling number (shorthand for solve --game cool)."""
    ctx.invoke(
        solve,
        spec=spec,
        game="cool",
        k=None,
        node_limit=node_limit,
        time_limit=time_limit,
        max_vertices=max_vertices,
    )


@main.command()
@click.option("--graph", "spec", required=True)
@click.option("--k", type=int, required=True)
@budget_options
@click.pass_context
def liminal(ctx, spec, k, node_limit, time_limit, max_vertices):
    """Exact k-liminal value (shorthand for solve --game liminal)."""
    ctx.invoke(
        solve,
        spec=spec,
        game="liminal",
        k=k,
        node_limit=node_limit,
        time_limit=time_limit,
        max_vertices=max_vertices,
    )


@main.command()
@click.option("--graph", "spec", required=True)
@click.option("--k-max", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@budget_options
@_budget_guarded
def sweep(spec, k_max, fmt, node_limit, time_limit, max_vertices):
    """Liminal values for k = 1..k_max (CSV k,value by default)."""
    g = _parse_graph(spec)
    kwargs = _budget_kwargs(node_limit, time_limit, max_vertices)
    result = liminal_sweep(g, k_max, **kwargs)
    if fmt == "csv":
        click.echo("k,value")
        for k, value in result.values:
            click.echo(f"{k},{value}")
        return
    _echo_json(
        {
            "graph": g.label,
            "k_max": k_max,
            "values": [list(item) for item in result.values],
            "k_star": result.k_star,
            "k_prime": result.k_prime,
            "burning": result.burning,
            "cooling": result.cooling,
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--tol", type=str, default="1e-12", help="Bisection width, e.g. 1e-12.")
@_budget_guarded
def bound(n, d, tol):
    """Volume-polynomial lower bound data for the d-fold product of P_n."""
    try:
        tolerance = Fraction(float(tol))
    except ValueError:
        raise click.UsageError(f"bad tolerance {tol!r}")
    if n < 1 or d < 1:
        raise click.UsageError("n and d must be >= 1")
    root = largest_root(q_poly(n, d), tolerance)
    closed_agrees = None
    kings = None
    if d == 2 and n >= 2:
        closed = kings_root_closed_form(n)
        closed_agrees = abs(closed - root.approx) <= 1e-9 + float(root.hi - root.lo)
        kings = kings_bound(n, tolerance)
    elif d == 3:
        cube = cube3_bound(n, tolerance)
        closed_agrees = abs(cube.closed_form - root.approx) <= 1e-9 + float(root.hi - root.lo)
    _echo_json(
        {
            "n": n,
            "d": d,
            "x_star_interval": [_frac(root.lo), _frac(root.hi)],
            "x_star_approx": root.approx,
            "bound": root.floor_x_star,
            "is_integral": root.is_integral,
            "closed_form_agrees": closed_agrees,
            "kings_bound": kings,
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--d", type=click.Choice(["1", "2"]), default="1")
@click.option("--m", type=int, default=None, help="Number of tiles (sides 2m-1, ..., 3, 1).")
@click.option("--sides", type=str, default=None, help="Explicit odd sides for d=1, e.g. 5,3,1.")
@_budget_guarded
def pack(n, d, m, sides):
    """Pack odd tiles into [1,n] (d=1) or odd squares into [1,n]^2 (d=2)."""
    if m is None and (d == "2" or sides is None):
        raise click.UsageError("--m is required unless d=1 with explicit --sides")
    if d == "1":
        tile_sides = (
            [int(s) for s in sides.split(",")] if sides else [2 * j - 1 for j in range(m, 0, -1)]
        )
        placement = pack_1d(n, tile_sides)
        if placement is None:
            click.echo("null")
            return
        total = sum(s for s, _ in placement)
        _echo_json(
            {
                "n": n,
                "d": 1,
                "sides": tile_sides,
                "placements": [{"side": s, "corner": [start]} for s, start in placement],
                "is_tiling": total == n,
            }
        )
        return
    result = pack_small_2d(n, m)
    if result is None:
        click.echo("null")
        return
    _echo_json(
        {
            "n": n,
            "d": 2,
            "sides": [s for s, _ in result.placements],
            "placements": [
                {"side": s, "corner": [x, y]} for s, (x, y) in result.placements
            ],
            "is_tiling": result.is_tiling,
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
@_budget_guarded
def kstar(n):
    """Reveal-quota lower bound data for the path on n^2 vertices."""
    if n < 2:
        raise click.UsageError("n must be >= 2")
    result = k_star_lower_bound(n)
    _echo_json(
        {
            "n": n,
            "lower_bound": result.lower_bound,
            "lower_bound_statement_range": result.lower_bound_statement_range,
            "good_offsets": list(result.good_offsets),
            "f_values": {str(l): str(f_value(n, l)) for l in result.good_offsets},
        }
    )


@main.command()
@click.option("--suite", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--n-max", type=int, default=None)
@click.option("--k-max", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "table"]), default="csv")
@_budget_guarded
def compare(suite, n_max, k_max, fmt):
    """Machine-readable cross-checks of engine values against known formulas."""
    kwargs = {}
    if n_max is not None:
        kwargs["n_max"] = n_max
    if k_max is not None:
        if suite != "paths":
            raise click.UsageError("--k-max only applies to the paths suite")
        kwargs["k_max"] = k_max
    columns, rows = run_suite(suite, **kwargs)
    _emit_rows(columns, rows, fmt)


@main.command()
@click.option("--graph", "spec", default=None)
@click.option("--sources", "sources_text", default=None, help="Comma-separated vertex indices.")
@click.option(
    "--file",
    "file_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help='JSON file {"graph": spec, "sources": [...]}; "-" reads stdin.',
)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@_budget_guarded
def replay(spec, sources_text, file_path, fmt):
    """Replay a source sequence, printing per-round burned counts."""
    if file_path is not None:
        with open(file_path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        spec = payload["graph"]
        sources = [int(v) for v in payload["sources"]]
    else:
        if spec is None or sources_text is None:
            raise click.UsageError("provide --graph and --sources, or --file")
        sources = [int(v) for v in sources_text.split(",") if v.strip()]
    g = _parse_graph(spec)
    result = engine_replay(g, sources)
    if fmt == "csv":
        click.echo("round,burned")
        for i, size in enumerate(result.burned_per_round, start=1):
            click.echo(f"{i},{size}")
        return
    _echo_json(
        {
            "graph": g.label,
            "sources": sources,
            "rounds": result.rounds,
            "placed": result.placed,
            "burned_per_round": list(result.burned_per_round),
        }
    )


@main.command("cooling-sequence")
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, default=2)
@_budget_guarded
def cooling_sequence(n, d):
    """Chessboard cooling sequence for the d-fold strong product of P_n."""
    if n < 2 or d < 2:
        raise click.UsageError("n and d must be >= 2")
    sources = cooling_sequence_strong(n, d)
    _echo_json({"graph": f"strongpath:n={n},d={d}", "sources": list(sources)})


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8023)
@click.option(
    "--sessions-dir",
    type=click.Path(file_okay=False),
    default="./burngames-sessions",
    envvar="BURNGAMES_SESSIONS_DIR",
)
@click.option("--exact-limit", type=int, default=14, envvar="BURNGAMES_EXACT_LIMIT")
@click.option("--max-vertices", type=int, default=64, envvar="BURNGAMES_MAX_VERTICES")
def serve(host, port, sessions_dir, exact_limit, max_vertices):
    """Run the interactive game service."""
    import uvicorn

    from .service import create_app

    app = create_app(
        sessions_dir=sessions_dir, exact_limit=exact_limit, max_vertices=max_vertices
    )
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
