"""Command-line front end.

Exit codes: 0 success, 2 config or validation failure, 3 numerical or
domain failure during analysis. Failures print one machine-readable JSON
line to stderr. The output directory comes from --out when given, else the
BEAMKIT_OUT environment variable, else the config's output_dir.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .config import ScenarioConfig, load_config
from .errors import DomainError, ValidationError
from .runner import (
    reproduce_paper,
    run,
    run_hpbw,
    run_montecarlo,
    run_patterns,
    run_separation,
    run_sll,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

ENV_OUT = "BEAMKIT_OUT"


def _resolve_out(args) -> str | None:
    if getattr(args, "out", None):
        return args.out
    return os.environ.get(ENV_OUT) or None


def _load(args) -> ScenarioConfig:
    return load_config(args.config)


def _cmd_run(args) -> int:
    config = _load(args)
    report = run(config, _resolve_out(args))
    print(f"run complete: {len(report.beams)} arrays -> {_resolve_out(args) or config.output_dir}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    out = _resolve_out(args) or "reproduction"
    _, summary = reproduce_paper(out, args.seed)
    print(f"reproduction complete: {summary}")
    return EXIT_OK


def _cmd_pattern(args) -> int:
    config = _load(args)
    paths = run_patterns(config, _resolve_out(args), array=args.array, plane=args.plane)
    print(f"wrote {len(paths)} pattern cuts")
    return EXIT_OK


def _cmd_hpbw(args) -> int:
    paths = run_hpbw(_load(args), _resolve_out(args))
    print(f"wrote {', '.join(p.name for p in paths)}")
    return EXIT_OK


def _cmd_sll(args) -> int:
    paths = run_sll(_load(args), _resolve_out(args))
    print(f"wrote {', '.join(p.name for p in paths)}")
    return EXIT_OK


def _cmd_separation(args) -> int:
    paths = run_separation(_load(args), _resolve_out(args))
    print(f"wrote {', '.join(p.name for p in paths)}")
    return EXIT_OK


def _cmd_montecarlo(args) -> int:
    paths = run_montecarlo(_load(args), _resolve_out(args))
    print(f"wrote {', '.join(p.name for p in paths)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beamkit",
        description="Beam pattern analysis and 5G system metrics for ring and grid arrays",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, config_arg=True):
        p = sub.add_parser(name, help=help_text)
        if config_arg:
            p.add_argument("config", help="path to a JSON scenario config")
        p.add_argument("--out", help="output directory (overrides config and BEAMKIT_OUT)")
        p.set_defaults(func=func)
        return p

    add("run", _cmd_run, "run every analysis the config requests")
    repro = add("reproduce-paper", _cmd_reproduce, "run the built-in reproduction study", config_arg=False)
    repro.add_argument("--seed", type=int, help="override the study seed")
    pattern = add("pattern", _cmd_pattern, "write pattern-cut CSVs only")
    pattern.add_argument("--array", help="restrict to one named array")
    pattern.add_argument("--plane", choices=("elevation", "azimuth"), help="restrict to one cut plane")
    add("hpbw", _cmd_hpbw, "write beamwidths (and the spacing sweep when configured)")
    add("sll", _cmd_sll, "write maximum side-lobe levels")
    add("separation", _cmd_separation, "write the separation-versus-range table")
    add("montecarlo", _cmd_montecarlo, "run the seeded interference experiment")
    return parser


def _fail(code: int, kind: str, exc: BaseException) -> int:
    print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        return _fail(EXIT_CONFIG, "config", exc)
    except (DomainError, ArithmeticError) as exc:
        return _fail(EXIT_NUMERIC, "numeric", exc)


if __name__ == "__main__":
    raise SystemExit(main())
