"""Command-line surface: values, tables, arrowing checks, verifications.

Every subcommand prints a single JSON object -- the command name, an
echo of its inputs, a structured payload, a status, and the elapsed
wall time -- so runs can be logged and diffed mechanically.  The table
subcommand can emit CSV instead.  Exit codes separate the four ways a
run can end:

  0  the command succeeded (for verifications: ran and passed)
  1  a verification ran to completion and the property failed
  2  the request was unusable (bad flags, unreadable or malformed
     input, hypothesis violation)
  3  a search hit its budget and the question is genuinely undecided

Exact integers that cannot survive a round trip through an IEEE double
are serialized as decimal strings, and rationals as "p/q", so consumers
that care can parse everything back losslessly.  Search budgets honor
the same RSIZE_BUDGET_EDGES override the library uses.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence, TextIO

from .arrowing import (
    UndecidedError,
    arrows_hyper,
    arrows_pair,
    min_size_ramsey_bruteforce,
    verify_graph_ramsey,
    verify_hyper_ramsey,
)
from .decolor import (
    check_tightness_remark,
    find_decolor_set,
    find_decolor_set_matching,
    witness_good_coloring,
)
from .exactmath import binomial, limit_constant
from .graphs import (
    Graph,
    Graph6Error,
    HypergraphFormatError,
    from_graph6,
    hypergraph_from_text,
    max_matching,
)
from .values import Flavor, bounds, equality_condition, g, g_hat, g_r, g_values

__all__ = ["CommandResult", "main", "run"]

_INT_JSON_LIMIT = 1 << 53  # doubles hold integers exactly up to here
_TABLE_CELL_LIMIT = 200

_TABLE_COLUMNS = (
    "n",
    "t",
    "g",
    "equality_condition",
    "lower_bound",
    "upper_bound",
    "limit_constant",
)


@dataclass(frozen=True)
class CommandResult:
    """One command run: an echo of the request plus a structured outcome."""

    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    status: str  # ok | undecided | error
    elapsed_ms: int

    def to_payload(self) -> dict[str, Any]:
        """JSON-ready dict matching the shipped schema."""
        return {
            "command": self.command,
            "inputs": _jsonify(self.inputs),
            "outputs": _jsonify(self.outputs),
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }


def _jsonify(value: Any) -> Any:
    # bool is an int subclass; test it first
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if -_INT_JSON_LIMIT <= value <= _INT_JSON_LIMIT else str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _write_csv(outputs: dict[str, Any], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")  # default dialect quotes per RFC
    columns = outputs["columns"]
    writer.writerow(columns)
    for row in outputs["rows"]:
        writer.writerow([_csv_cell(row[name]) for name in columns])


def _parse_range(text: str) -> tuple[int, int]:
    """Parse "N" or "LO:HI" into an inclusive pair."""
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"range {text!r} is not of the form N or LO:HI") from None
    if a < 1 or b < a:
        raise ValueError(f"range {text!r} must satisfy 1 <= LO <= HI")
    return a, b


def _read_graph6_file(path: str) -> Graph:
    lines = Path(path).read_text().splitlines()
    return from_graph6(lines[0].strip() if lines else "")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"suite {args.suite!r} needs {', '.join(missing)}")


# ---------------------------------------------------------------------------
# subcommands; each returns (outputs, exit code)


def _cmd_value(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    if args.hat:
        result = g_hat(args.n, args.t)
    elif args.r is not None:
        result = g_r(args.n, args.r, args.t)
    else:
        result = g(args.n, args.t)
    outputs: dict[str, Any] = {
        "value": result.value,
        "parts": list(result.witness.parts),
        "flavor": result.witness.flavor.value,
    }
    if args.r is not None:
        outputs["r"] = args.r
    return outputs, 0


def _cmd_table(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    n_lo, n_hi = _parse_range(args.n_range)
    t_lo, t_hi = _parse_range(args.t_range)
    if n_lo < 2:
        raise ValueError(f"n range starts at {n_lo}; need n >= 2")
    cells = (n_hi - n_lo + 1) * (t_hi - t_lo + 1)
    if cells > _TABLE_CELL_LIMIT:
        raise ValueError(f"table would have {cells} cells; the limit is {_TABLE_CELL_LIMIT}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        by_t = g_values(n, t_hi)
        m_n, _ = limit_constant(n, n)
        for t in range(t_lo, t_hi + 1):
            lower, upper = bounds(n, t) if n >= 3 else (None, None)
            rows.append(
                {
                    "n": n,
                    "t": t,
                    "g": by_t[t],
                    "equality_condition": equality_condition(n, t),
                    "lower_bound": lower,
                    "upper_bound": upper,
                    "limit_constant": m_n,
                }
            )
    return {"columns": list(_TABLE_COLUMNS), "rows": rows}, 0


def _cmd_check_arrow(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    if args.host is not None:
        verdict = arrows_pair(
            _read_graph6_file(args.host), args.n, args.t, search=args.mode, jobs=args.jobs
        )
    else:
        host = hypergraph_from_text(Path(args.hyper).read_text())
        verdict = arrows_hyper(host, args.n, args.t, search=args.mode, jobs=args.jobs)
    blue = None
    if verdict.counterexample is not None:
        blue = [list(edge) for edge in verdict.counterexample.blue_edges()]
    outputs = {
        "arrows": verdict.arrows,
        "counterexample_blue_edges": blue,
        "mode": verdict.mode,
        "nodes_explored": verdict.nodes,
    }
    return outputs, 0


def _cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    suite = args.suite
    if suite == "ramsey":
        _require(args, "n", "t")
        ok = verify_graph_ramsey(args.n, args.t, search=args.mode, jobs=args.jobs)
        return {"pass": ok}, 0 if ok else 1
    if suite == "hyper-ramsey":
        _require(args, "n", "r", "t")
        ok = verify_hyper_ramsey(args.n, args.r, args.t, search=args.mode, jobs=args.jobs)
        return {"pass": ok}, 0 if ok else 1
    if suite == "tightness":
        _require(args, "n", "t", "flavor")
        flavor = Flavor.GHAT if args.flavor == "ghat" else Flavor.G
        ok = check_tightness_remark(args.n, args.t, flavor)
        return {"pass": ok}, 0 if ok else 1
    if suite == "minimality":
        _require(args, "n", "t")
        expected = g(args.n, args.t).value
        m_max = args.m_max if args.m_max is not None else min(8, expected)
        found = min_size_ramsey_bruteforce(args.n, args.t, m_max)
        # not finding anything is consistent exactly when the true value
        # lies beyond the searched range
        ok = found == expected if found is not None else expected > m_max
        outputs = {
            "min_edges": found,
            "expected": expected,
            "searched_through": m_max,
            "pass": ok,
        }
        return outputs, 0 if ok else 1
    return _verify_limit(args)


def _verify_limit(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    """Normalized values against their limit: the whole sequence up to T.

    Every quotient g(n,t)/(t*C(n,2)) must sit at or above the limit
    constant, and once T reaches n the running minimum must have landed
    on it exactly.
    """
    _require(args, "n")
    n, t_cap = args.n, args.T
    if t_cap < 1:
        raise ValueError(f"need --T >= 1, got {t_cap}")
    m_n, _ = limit_constant(n, max(n, t_cap))
    base = binomial(n, 2)
    by_t = g_values(n, t_cap)
    quotients = [Fraction(by_t[t], t * base) for t in range(1, t_cap + 1)]
    running = []
    best = quotients[0]
    for q in quotients:
        best = min(best, q)
        running.append(best)
    min_q = running[-1]
    attains = min_q == m_n
    ok = all(q >= m_n for q in quotients) and (attains or t_cap < n)
    outputs = {
        "limit_constant": m_n,
        "quotients": quotients,
        "running_min": running,
        "min_quotient": min_q,
        "attained_at": 1 + quotients.index(min_q) if attains else None,
        "approach_gap": float(quotients[-1] - m_n),
        "pass": ok,
    }
    return outputs, 0 if ok else 1


def _cmd_decolor(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    host = _read_graph6_file(args.host)
    find = find_decolor_set_matching if args.matching else find_decolor_set
    result = find(host, args.n, args.t)
    kept = [v for v in range(host.n) if not result.removed >> v & 1]
    coloring = result.residual_coloring
    classes = [
        sorted(kept[i] for i in coloring.class_vertices(c))
        for c in range(coloring.num_colors)
    ]
    outputs: dict[str, Any] = {
        "removed": list(result.removed_vertices()),
        "removed_size": result.removed_size(),
        "method": result.method,
        "residual_classes": classes,
        "residual_colors": coloring.num_colors,
    }
    if args.matching:
        witness = witness_good_coloring(host, args.n, args.t)
        outputs["matching_in_set"] = max_matching(host.induced(result.removed_vertices()))
        outputs["witness_blue_edges"] = [list(edge) for edge in witness.blue_edges()]
    return outputs, 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsize",
        description="Exact size-Ramsey values for cliques versus matchings, with verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="one exact value with its witness partition")
    p.add_argument("--n", type=int, required=True, help="clique order")
    p.add_argument("--t", type=int, required=True, help="number of stripes")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--hat", action="store_true", help="one-per-stripe variant")
    kind.add_argument("--r", type=int, help="r-uniform variant with this uniformity")
    p.set_defaults(handler=_cmd_value)

    p = sub.add_parser("table", help="grid of values with bounds and the limit constant")
    p.add_argument("--n-range", required=True, metavar="LO:HI", help="inclusive, or a single N")
    p.add_argument("--t-range", required=True, metavar="LO:HI", help="inclusive, or a single T")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("check-arrow", help="search a host for a coloring with neither target")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--host", help="graph6 file")
    which.add_argument("--hyper", help="hypergraph text file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("auto", "naive", "reduced"), default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_check_arrow)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("ramsey", "hyper-ramsey", "tightness", "minimality", "limit"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int, help="uniformity (hyper-ramsey)")
    p.add_argument("--T", type=int, default=50, help="largest stripe count (limit)")
    p.add_argument("--flavor", choices=("g", "ghat"), help="threshold flavor (tightness)")
    p.add_argument("--m-max", type=int, dest="m_max", help="search ceiling (minimality)")
    p.add_argument("--mode", choices=("auto", "naive", "reduced"), default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("decolor", help="vertex set whose removal leaves an (n-2)-colorable graph")
    p.add_argument("--host", required=True, help="graph6 file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument(
        "--matching",
        action="store_true",
        help="bound the matching inside the set and emit the witness coloring",
    )
    p.set_defaults(handler=_cmd_decolor)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage or help
        return 0 if exc.code in (0, None) else 2
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "handler")}
    start = time.perf_counter()
    try:
        outputs, code = args.handler(args)
    except UndecidedError as exc:
        outputs, code = {"message": str(exc)}, 3
    except Graph6Error as exc:
        outputs, code = {"message": str(exc), "offset": exc.offset}, 2
    except HypergraphFormatError as exc:
        outputs, code = {"message": str(exc), "line": exc.line}, 2
    except (ValueError, TypeError, OSError) as exc:
        outputs, code = {"message": str(exc)}, 2
    elapsed_ms = round((time.perf_counter() - start) * 1000)
    status = "ok" if code == 0 else "undecided" if code == 3 else "error"
    result = CommandResult(args.command, inputs, outputs, status, elapsed_ms)
    if args.command == "table" and args.format == "csv" and code == 0:
        _write_csv(outputs, sys.stdout)
    else:
        json.dump(result.to_payload(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


def run() -> None:
    raise SystemExit(main())
