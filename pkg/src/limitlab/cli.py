"""Declarative experiment runner.

Subcommands: ``trace`` (schema sweep along one fate), ``identify`` (class
identification table), ``theorems`` (witness suite), ``list`` (registries).
Configuration comes from a JSON document; flags override file values. Output
is byte-identical for identical configs. Exit codes: 0 success, 1 theorem
suite failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import (
    UNIVERSES,
    Canonical,
    Padded,
    RepetitionHeavy,
    ShuffledWindow,
    TextStrategy,
    is_pause,
    make_fate,
)
from .families import LANGUAGES, LanguageFamily, family_from_config, resolve_language
from .identification import identify_class, transformation_trace
from .scientists import SCIENTISTS, Scientist, build_scientist
from .theorems import run_theorem_suite

PROG = "limitlab"

STRATEGY_NAMES = ("canonical", "padded", "shuffled-window", "repetition-heavy")

DEFAULTS: dict = {
    "universe": "decimal",
    "family": {"specials": ["evens", "odds"]},
    "scientist": "memorizer",
    "language": "evens",
    "languages": ["{}", "{2}", "{2,4}"],
    "strategy": "canonical",
    "strategies": ["canonical"],
    "seed": 0,
    "seeds": [0],
    "horizon": 32,
    "trials": 10_000,
    "format": "pretty",
}

_MAX_SEED = 2**64 - 1


class ConfigError(Exception):
    pass


def parse_strategy(spec) -> TextStrategy:
    """Strategy spec: "padded:0.25" style string or {"name": ..., params} dict."""
    try:
        if isinstance(spec, str):
            name, _, arg = spec.partition(":")
            name = name.strip()
            if name == "canonical":
                if arg:
                    raise ValueError("canonical takes no parameter")
                return Canonical()
            if name == "padded":
                return Padded(float(arg)) if arg else Padded()
            if name == "shuffled-window":
                return ShuffledWindow(int(arg)) if arg else ShuffledWindow()
            if name == "repetition-heavy":
                return RepetitionHeavy(float(arg)) if arg else RepetitionHeavy()
            raise ValueError(f"unknown strategy: {name!r}")
        params = dict(spec)
        name = params.pop("name", None)
        if name == "canonical":
            return Canonical()
        if name == "padded":
            return Padded(**params)
        if name == "shuffled-window":
            return ShuffledWindow(**params)
        if name == "repetition-heavy":
            return RepetitionHeavy(**params)
        raise ValueError(f"unknown strategy: {name!r}")
    except (TypeError, ValueError) as err:
        raise ConfigError(f"bad strategy spec {spec!r}: {err}") from err


def _validate_seed(seed) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed <= _MAX_SEED:
        raise ConfigError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    return seed


def load_config(path: str | None, overrides: dict) -> dict:
    """Defaults, then the config file, then non-None flag overrides."""
    config = dict(DEFAULTS)
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except OSError as err:
            raise ConfigError(f"cannot read config {path!r}: {err}") from err
        except json.JSONDecodeError as err:
            raise ConfigError(f"config {path!r} is not valid JSON: {err}") from err
        if not isinstance(loaded, dict):
            raise ConfigError(f"config {path!r} must hold a JSON object")
        config.update(loaded)
    for key, value in overrides.items():
        if value is not None:
            config[key] = value
    if "seed" in overrides and overrides["seed"] is not None:
        config["seeds"] = [overrides["seed"]]
    horizon = config["horizon"]
    if not isinstance(horizon, int) or horizon < 1:
        raise ConfigError(f"horizon must be an integer >= 1, got {horizon!r}")
    _validate_seed(config["seed"])
    for s in config["seeds"]:
        _validate_seed(s)
    if config["format"] not in ("jsonl", "csv", "pretty"):
        raise ConfigError(f"unknown format: {config['format']!r}")
    return config


def build_family(config: dict) -> LanguageFamily:
    try:
        return family_from_config(
            {
                "universe": config["universe"],
                "specials": config["family"].get("specials", []),
                "registry_oracle": config["family"].get("registry_oracle", True),
            }
        )
    except (KeyError, TypeError, ValueError, AttributeError) as err:
        raise ConfigError(f"bad family config: {err}") from err


def build_world(config: dict) -> tuple[LanguageFamily, Scientist]:
    family = build_family(config)
    try:
        scientist = build_scientist(config["scientist"], family)
    except (TypeError, ValueError, LookupError) as err:
        raise ConfigError(f"bad scientist spec: {err}") from err
    return family, scientist


def _resolve_languages(specs, family: LanguageFamily):
    try:
        return [resolve_language(s, family.universe) for s in specs]
    except ValueError as err:
        raise ConfigError(str(err)) from err


def _json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def cmd_trace(config: dict) -> int:
    family, scientist = build_world(config)
    (language,) = _resolve_languages([config["language"]], family)
    strategy = parse_strategy(config["strategy"])
    fate = make_fate(language, strategy, config["seed"])
    trace = transformation_trace(scientist, fate, config["horizon"])
    records = []
    for step in trace.steps:
        records.append(
            {
                "step": step.step,
                "datum": "#" if is_pause(step.datum) else step.datum.token,
                "hyp_index": step.hyp_index,
                "hyp_set": scientist.family.tail_set_literal(step.hyp_index),
                "hyp_changed": step.hyp_changed,
                "novel": step.novel,
                "transformative": step.transformative,
                "semantically_transformative": step.semantically_transformative,
            }
        )
    fmt = config["format"]
    if fmt == "jsonl":
        for record in records:
            print(_json_line(record))
    elif fmt == "csv":
        print(",".join(records[0].keys()))
        for record in records:
            print(
                ",".join(
                    "" if v is None else str(v).replace(",", ";") for v in record.values()
                )
            )
    else:
        header = f"{'step':>4}  {'datum':>6}  {'hyp':>12}  {'set':<12}  chg  nov  tra  sem"
        print(f"trace: {scientist.name} on {fate.descriptor['language']} "
              f"[{fate.descriptor['strategy']}] seed={fate.descriptor['seed']}")
        print(header)
        for r in records:
            flags = [
                "y" if r["hyp_changed"] else ".",
                "-" if r["novel"] is None else str(r["novel"]),
                "-" if r["transformative"] is None else str(r["transformative"]),
                "-" if r["semantically_transformative"] is None
                else str(r["semantically_transformative"])[:3],
            ]
            hyp_set = r["hyp_set"] if r["hyp_set"] is not None else "-"
            print(
                f"{r['step']:>4}  {r['datum']:>6}  {r['hyp_index']:>12}  "
                f"{hyp_set:<12}  {flags[0]:>3}  {flags[1]:>3}  {flags[2]:>3}  {flags[3]}"
            )
    return 0


def cmd_identify(config: dict) -> int:
    family, scientist = build_world(config)
    languages = _resolve_languages(config["languages"], family)
    strategies = [parse_strategy(s) for s in config["strategies"]]
    table = identify_class(
        scientist, languages, strategies, config["seeds"], config["horizon"]
    )
    fmt = config["format"]
    if fmt == "jsonl":
        for row in table.rows:
            print(
                _json_line(
                    {
                        "language": row.language,
                        "strategy": row.strategy,
                        "seed": row.seed,
                        "horizon": row.horizon,
                        "verdict": row.verdict,
                        "last_change_step": row.last_change_step,
                    }
                )
            )
        print(_json_line({"summary": table.summary(), "scientist": scientist.name}))
    elif fmt == "csv":
        sys.stdout.write(table.to_csv())
        print(f"# {scientist.name}: {table.summary()}", file=sys.stderr)
    else:
        widths = (24, 22, 6, 8)
        print(f"identify: {scientist.name}")
        print(
            f"{'language':<{widths[0]}} {'strategy':<{widths[1]}} "
            f"{'seed':>{widths[2]}} {'horizon':>{widths[3]}}  verdict"
        )
        for row in table.rows:
            print(
                f"{row.language:<{widths[0]}} {row.strategy:<{widths[1]}} "
                f"{row.seed:>{widths[2]}} {row.horizon:>{widths[3]}}  {row.verdict}"
            )
        print(table.summary())
    return 0


def cmd_theorems(config: dict) -> int:
    trials = config["trials"]
    if not isinstance(trials, int) or trials < 1:
        raise ConfigError(f"trials must be an integer >= 1, got {trials!r}")
    items = run_theorem_suite(trials=trials, seed=config["seed"])
    fmt = config["format"]
    if fmt == "jsonl":
        for item in items:
            print(
                _json_line(
                    {
                        "item": item.name,
                        "passed": item.passed,
                        "summary": item.summary,
                        "values": item.values,
                    }
                )
            )
    else:
        for item in items:
            status = "PASS" if item.passed else "FAIL"
            print(f"{status} {item.name}: {item.summary}")
            for key, value in item.values.items():
                print(f"     {key} = {value}")
        passed = sum(1 for item in items if item.passed)
        print(f"{passed}/{len(items)} checks passed")
    return 0 if all(item.passed for item in items) else 1


def cmd_list(config: dict) -> int:
    print("universes:")
    for name in UNIVERSES:
        print(f"  {name}")
    print("languages:")
    for name in LANGUAGES:
        print(f"  {name}")
    print("scientists:")
    for name in sorted(SCIENTISTS):
        print(f"  {name}")
    print("strategies:")
    for name in STRATEGY_NAMES:
        print(f"  {name}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a JSON config document")
    common.add_argument("--seed", type=int, help="RNG seed (64-bit unsigned)")
    common.add_argument("--horizon", type=int, help="evaluation horizon (>= 1)")
    common.add_argument(
        "--format", choices=("jsonl", "csv", "pretty"), help="output format"
    )

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="identification-in-the-limit experiments with rating schemas",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trace = sub.add_parser(
        "trace", parents=[common], help="schema sweep along one fate"
    )
    p_trace.add_argument("--scientist", help="scientist spec, e.g. dumb_visionary:evens")
    p_trace.add_argument("--language", help="platonic language, e.g. evens or {2,4}")
    p_trace.add_argument("--strategy", help="text strategy, e.g. padded:0.25")
    p_trace.set_defaults(handler=cmd_trace)

    p_identify = sub.add_parser(
        "identify", parents=[common], help="class identification table"
    )
    p_identify.add_argument("--scientist", help="scientist spec")
    p_identify.add_argument(
        "--languages", help="semicolon-separated language specs, e.g. '{2};evens'"
    )
    p_identify.add_argument(
        "--strategies", help="semicolon-separated strategy specs"
    )
    p_identify.add_argument(
        "--seeds", help="semicolon-separated seeds, e.g. '0;1;2'"
    )
    p_identify.set_defaults(handler=cmd_identify)

    p_theorems = sub.add_parser(
        "theorems", parents=[common], help="run the witness suite"
    )
    p_theorems.add_argument("--trials", type=int, help="random samples per property")
    p_theorems.set_defaults(handler=cmd_theorems)

    p_list = sub.add_parser("list", parents=[common], help="print the registries")
    p_list.set_defaults(handler=cmd_list)

    return parser


def _split_list(raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    return [part.strip() for part in raw.split(";") if part.strip()]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        "seed": args.seed,
        "horizon": args.horizon,
        "format": args.format,
        "scientist": getattr(args, "scientist", None),
        "language": getattr(args, "language", None),
        "strategy": getattr(args, "strategy", None),
        "languages": _split_list(getattr(args, "languages", None)),
        "strategies": _split_list(getattr(args, "strategies", None)),
        "trials": getattr(args, "trials", None),
    }
    seeds = _split_list(getattr(args, "seeds", None))
    if seeds is not None:
        try:
            overrides["seeds"] = [int(s) for s in seeds]
        except ValueError:
            print(f"{PROG}: seeds must be integers", file=sys.stderr)
            return 2
    try:
        config = load_config(args.config, overrides)
        return args.handler(config)
    except ConfigError as err:
        print(f"{PROG}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
