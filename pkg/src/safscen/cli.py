"""Batch command-line interface.

Subcommands: ``evaluate`` one (route, scenario) case, ``sweep`` a lever grid,
``demand`` lookups, ``reproduce`` the full published-value comparison report,
and ``serve`` the HTTP service. Exit codes: 0 success, 2 validation error,
3 I/O error. JSON output is byte-stable for fixed inputs; table output is
human-oriented and intentionally unspecified.

Money is reported in USD by default (``--currency brl`` converts computed
outputs at the bundled FX rate; inputs such as the carbon price stay BRL).
"""

from __future__ import annotations

import argparse
import csv
import errno
import io
import socket
import json
import sys
from pathlib import Path

from . import demand as demand_model
from . import reproduce as reproduce_model
from . import scenario as scenario_model
from . import service as service_model
from .datasets import DatasetBundle, Route, load_bundle
from .errors import BundleIOError, SafscenError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

_MONEY_MARGIN_KEYS = ("contribution_margin", "fixed_cost", "net_margin")
_MONEY_LINE_KEYS = ("unit_price", "pre_tax_cost", "tax_cost")
_MONEY_COST_KEYS = ("other_variable", "other_variable_tax", "total_variable")
_MONEY_DCF_KEYS = ("npv", "max_capex", "annual_free_cash_flow")


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load(args) -> DatasetBundle:
    return load_bundle(args.bundle)


def _convert_evaluation_currency(result: dict, fx: float) -> dict:
    """USD -> BRL display transform; package inputs are echoed untouched."""
    out = json.loads(json.dumps(result))  # deep copy
    margin = out["margin"]
    margin["currency"] = "brl"
    for key in _MONEY_MARGIN_KEYS:
        margin[key] *= fx
    for key, value in margin["revenue"].items():
        margin["revenue"][key] = value * fx
    cost = margin["cost"]
    for key in _MONEY_COST_KEYS:
        cost[key] *= fx
    for line in cost["lines"]:
        for key in _MONEY_LINE_KEYS:
            line[key] *= fx
    dcf = out["dcf"]
    dcf["currency"] = "brl"
    for key in _MONEY_DCF_KEYS:
        dcf[key] *= fx
    for step in out["waterfall"]:
        step["delta"] *= fx
    for deviation in out["deviations"]:
        deviation["published"] *= fx
        deviation["computed"] *= fx
    return out


def _convert_sweep_currency(result: dict, fx: float, lever: str) -> dict:
    out = json.loads(json.dumps(result))
    for row in out["rows"]:
        for key in ("contribution_margin", "net_margin", "max_capex"):
            row[key] *= fx
        if lever == "capital_grant":
            row["value"] *= fx
    out["currency"] = "brl"
    return out


def _flatten(prefix: str, obj, rows: list[tuple[str, object]]) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}.{key}" if prefix else key, obj[key], rows)
    elif isinstance(obj, list):
        for i, item in enumerate(obj):
            _flatten(f"{prefix}[{i}]", item, rows)
    else:
        rows.append((prefix, obj))


def _csv_kv(payload: dict) -> str:
    rows: list[tuple[str, object]] = []
    _flatten("", payload, rows)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["key", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def _money(value: float) -> str:
    return f"{value:,.2f}"


# ---------------------------------------------------------------------------
# evaluate


def _render_evaluation_table(payload: dict) -> str:
    lines = []
    name = payload["package_name"] or "custom"
    currency = payload["margin"]["currency"]
    lines.append(f"route: {payload['route']}    scenario: {name}    currency: {currency}")
    lines.append("")
    lines.append("package levers:")
    for key, value in sorted(payload["package"].items()):
        lines.append(f"  {key:22s} {value:g}")
    lines.append("")
    lines.append("margin (per kg SAF):")
    margin = payload["margin"]
    for key, value in margin["revenue"].items():
        lines.append(f"  revenue {key:14s} {_money(value):>12s}")
    cost = margin["cost"]
    for line in cost["lines"]:
        lines.append(
            f"  cost {line['commodity']:17s} {_money(line['pre_tax_cost']):>12s}"
            f"  (tax {_money(line['tax_cost'])})"
        )
    lines.append(f"  cost other_variable     {_money(cost['other_variable']):>12s}"
                 f"  (tax {_money(cost['other_variable_tax'])})")
    lines.append(f"  total variable cost     {_money(cost['total_variable']):>12s}")
    lines.append(f"  contribution margin     {_money(margin['contribution_margin']):>12s}")
    lines.append(f"  fixed cost              {_money(margin['fixed_cost']):>12s}")
    lines.append(f"  net margin              {_money(margin['net_margin']):>12s}")
    lines.append("")
    lines.append("margin waterfall (contribution margin deltas):")
    for step in payload["waterfall"]:
        lines.append(f"  {step['lever']:22s} {_money(step['delta']):>12s}")
    lines.append("")
    dcf = payload["dcf"]
    lines.append("reverse DCF:")
    lines.append(f"  max CAPEX at NPV=0      {_money(dcf['max_capex']):>18s}")
    lines.append(f"  annual free cash flow   {_money(dcf['annual_free_cash_flow']):>18s}")
    lines.append(f"  NPV at reference CAPEX  {_money(dcf['npv']):>18s}")
    irr = dcf["irr"]
    lines.append(f"  IRR at reference CAPEX  "
                 f"{'n/a (no sign change)' if irr is None else f'{irr:.4%}':>18s}")
    lines.append(f"  CBIOs per year          {dcf['cbios_per_year']:>18,.0f}")
    if payload["deviations"]:
        lines.append("")
        lines.append("deviations vs published reverse-DCF cells:")
        for dev in payload["deviations"]:
            lines.append(
                f"  {dev['target']:24s} published {_money(dev['published']):>18s}"
                f"  computed {_money(dev['computed']):>18s}  rel_err {dev['rel_error']:.3f}"
            )
    return "\n".join(lines) + "\n"


def cmd_evaluate(args) -> int:
    bundle = _load(args)
    route = Route(args.route)
    if args.package is not None:
        path = Path(args.package)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise BundleIOError(f"cannot read package file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SafscenError(f"package file {path} is not valid JSON: {exc}") from exc
        package = raw
    else:
        package = args.scenario
    result = scenario_model.evaluate(bundle, route, package)
    payload = result.to_dict()
    if args.currency == "brl":
        payload = _convert_evaluation_currency(payload, bundle.fx.brl_per_usd)
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_csv_kv(payload))
    else:
        sys.stdout.write(_render_evaluation_table(payload))
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args) -> int:
    bundle = _load(args)
    route = Route(args.route)
    fixed = scenario_model.SCENARIOS[args.scenario] if args.scenario else scenario_model.BASE
    spec = scenario_model.SweepSpec(
        lever=args.lever, start=args.from_, stop=args.to, steps=args.steps, fixed=fixed,
    )
    rows = scenario_model.sweep(bundle, route, spec)
    payload = {
        "route": route.value,
        "lever": spec.lever,
        "currency": "usd",
        "rows": [row.to_dict() for row in rows],
    }
    if args.currency == "brl":
        payload = _convert_sweep_currency(payload, bundle.fx.brl_per_usd, spec.lever)
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["value", "contribution_margin", "net_margin", "max_capex"])
        for row in payload["rows"]:
            writer.writerow([row["value"], row["contribution_margin"],
                             row["net_margin"], row["max_capex"]])
        sys.stdout.write(buf.getvalue())
    else:
        lines = [f"sweep {spec.lever} on {route.value} ({payload['currency']})",
                 f"{'value':>12s} {'contrib':>12s} {'net':>12s} {'max_capex':>18s}"]
        for row in payload["rows"]:
            lines.append(
                f"{row['value']:>12,.2f} {row['contribution_margin']:>12,.4f} "
                f"{row['net_margin']:>12,.4f} {row['max_capex']:>18,.0f}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# demand


def cmd_demand(args) -> int:
    bundle = _load(args)
    table = bundle.demand
    if args.year is None:
        records = [table.at(y, args.policy, args.bound).to_dict()
                   for y in table.milestone_years]
        payload = {"records": records}
    else:
        payload = table.at(args.year, args.policy, args.bound,
                           interpolate=args.interpolate).to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["year", "policy", "ci_bound", "volume_kt", "source"])
        for rec in payload.get("records", [payload]):
            writer.writerow([rec["year"], rec["policy"], rec["ci_bound"],
                             rec["volume_kt"], rec["source"]])
        sys.stdout.write(buf.getvalue())
    else:
        recs = payload.get("records", [payload])
        lines = [f"{'year':>6s} {'policy':>10s} {'bound':>7s} {'kt/y':>10s} {'source':>13s}"]
        for rec in recs:
            lines.append(f"{rec['year']:>6d} {rec['policy']:>10s} {rec['ci_bound']:>7s} "
                         f"{rec['volume_kt']:>10,.1f} {rec['source']:>13s}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduce


def cmd_reproduce(args) -> int:
    bundle = _load(args)
    report = reproduce_model.build_report(bundle)
    if args.format == "json":
        sys.stdout.write(_dump_json(report.to_dict()))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["section", "target", "published", "computed",
                         "rel_error", "status", "note"])
        for row in report.rows:
            writer.writerow([row.section, row.target, row.published, row.computed,
                             row.rel_error, row.status, row.note])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(reproduce_model.render_text(report))
    return EXIT_OK


# ---------------------------------------------------------------------------
# serve


def cmd_serve(args) -> int:
    bundle = _load(args)
    # Probe the port up front: uvicorn exits on its own when the bind fails,
    # and the failure should be reported distinctly from other I/O errors.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            print(f"error: port {args.port} is already in use", file=sys.stderr)
            return EXIT_IO
        raise
    finally:
        probe.close()
    service_model.run(bundle, host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="safscen",
        description="SAF production scenario engine for the Brazilian market",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("table", "json", "csv")):
        p.add_argument("--bundle", default=None, metavar="PATH",
                       help="dataset bundle directory (default: embedded dataset)")
        p.add_argument("--format", choices=formats, default="table")

    p_eval = sub.add_parser("evaluate", help="evaluate one route under a scenario")
    p_eval.add_argument("--route", choices=[r.value for r in Route], required=True)
    p_eval.add_argument("--scenario", default="base",
                        help="named scenario: base, s1 or s2 (default base)")
    p_eval.add_argument("--package", default=None, metavar="FILE",
                        help="JSON file with explicit package levers (overrides --scenario)")
    p_eval.add_argument("--currency", choices=["usd", "brl"], default="usd")
    common(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_sweep = sub.add_parser("sweep", help="sweep one incentive lever over a grid")
    p_sweep.add_argument("--route", choices=[r.value for r in Route], required=True)
    p_sweep.add_argument("--lever", required=True,
                         choices=list(scenario_model.MARGIN_LEVERS) + ["capital_grant"])
    p_sweep.add_argument("--from", dest="from_", type=float, required=True)
    p_sweep.add_argument("--to", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--scenario", default=None,
                         help="hold the other levers at this named scenario (default base)")
    p_sweep.add_argument("--currency", choices=["usd", "brl"], default="usd")
    common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_demand = sub.add_parser("demand", help="query the demand trajectory")
    p_demand.add_argument("--year", type=int, default=None)
    p_demand.add_argument("--policy", choices=list(demand_model.POLICIES), default="total")
    p_demand.add_argument("--bound", choices=list(demand_model.CI_BOUNDS), default="lower")
    p_demand.add_argument("--interpolate", action="store_true",
                          help="allow linear interpolation between milestone years")
    common(p_demand)
    p_demand.set_defaults(func=cmd_demand)

    p_rep = sub.add_parser("reproduce",
                           help="recompute all published reference figures and diff them")
    common(p_rep)
    p_rep.set_defaults(func=cmd_reproduce)

    p_serve = sub.add_parser("serve", help="run the HTTP/JSON service (blocks)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    common(p_serve, formats=("json",))
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BundleIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SafscenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
