"""Batch command-line front end.

Subcommands: solve, couplings, dynamics, figure <name>. Each reads a YAML
scenario (--config), runs it, and writes deterministic CSV to --out (or
stdout). Exit codes: 0 success, 2 config error, 3 physics error outside a
sweep, 4 I/O error.
"""

import argparse
import sys

import yaml

from ._version import __version__
from .errors import ConfigError, PhysicsError, QDotPairError
from .scenario import (
    FIGURES,
    _scenario_from_dict,
    emit_plot_script,
    parse_scenario,
    run_scenario,
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qdotpair",
        description="Coupled quantum-dot exciton couplings and two-qubit gate simulation.",
    )
    parser.add_argument("--version", action="version", version=f"qdotpair {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_config in (("solve", True), ("couplings", True), ("dynamics", True)):
        p = sub.add_parser(name, help=f"run a {name} scenario")
        p.add_argument("--config", required=needs_config, help="YAML scenario file")
        _common_args(p)
    fig = sub.add_parser("figure", help="reproduce one published curve")
    fig.add_argument("name", choices=sorted(FIGURES), help="figure identifier")
    fig.add_argument("--config", help="optional YAML with figure.params overrides")
    _common_args(fig)
    return parser


def _common_args(p):
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--threads", type=int, default=1, help="worker threads for sweeps")
    p.add_argument("--emit-plot", action="store_true",
                   help="also write a matplotlib script next to the CSV")


def _load_scenario(args):
    if args.command == "figure":
        raw = {}
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                loaded = yaml.safe_load(fh.read())
            if loaded is not None:
                if not isinstance(loaded, dict):
                    raise ConfigError("figure config must be a mapping")
                raw = loaded
        raw.setdefault("kind", "figure")
        raw.setdefault("figure", {})
        if not isinstance(raw["figure"], dict):
            raise ConfigError("figure section must be a mapping")
        raw["figure"].setdefault("name", args.name)
        if raw["figure"]["name"] != args.name:
            raise ConfigError(
                f"config names figure {raw['figure']['name']!r} but the command "
                f"line asked for {args.name!r}"
            )
        return _scenario_from_dict(raw)
    with open(args.config, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), default_kind=args.command)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        scenario = _load_scenario(args)
        table = run_scenario(scenario, threads=max(1, args.threads))
        out_path = args.out or scenario.out
        if out_path:
            table.write(out_path)
            if args.emit_plot:
                style = "heatmap" if scenario.figure_name == "fig3b" else "line"
                script = emit_plot_script(table, style=style, csv_path=out_path)
                with open(out_path + ".plot.py", "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(script)
        else:
            sys.stdout.write(table.to_csv())
            if args.emit_plot:
                print("note: --emit-plot needs --out", file=sys.stderr)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except PhysicsError as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    except QDotPairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
