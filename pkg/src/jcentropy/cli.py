"""Command-line time sweeps written as CSV.

Examples
--------
Field mixture ``alpha=4, beta=-4, C=1/2`` with the atom excited::

    jcentropy --scenario field-mixture --alpha 4,0 --beta -4,0 --c 0.5 --tmax 25 --output field_mixture.csv

Atom mixture with the oracle cross-check switched on::

    jcentropy --scenario atom-mixture --alpha 3,0 --dim 48 --oracle --output atom_mixture.csv

Exit codes: 0 success, 2 usage/config error, 3 numerical error.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from .dynamics import Scenario
from .estimator import BASE_COLUMNS, ORACLE_COLUMNS, JCEntropyTransformer, TimeSeriesRecord, time_grid
from .exceptions import ConfigParseError, NumericalError, UsageError
from .validation import parse_complex

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3


@dataclass(frozen=True)
class SweepConfig:
    scenario: Scenario = Scenario.FIELD_MIXTURE
    alpha: complex = complex(4.0, 0.0)
    beta: complex = complex(-4.0, 0.0)
    C: float = 0.5
    t_max: float = 25.0
    steps: int = 1000
    dim: int = 0
    oracle: bool = False
    output: str = "-"


# key -> (SweepConfig field, converter)
_KEYS = {
    "scenario": ("scenario", Scenario),
    "alpha": ("alpha", parse_complex),
    "beta": ("beta", parse_complex),
    "c": ("C", float),
    "tmax": ("t_max", float),
    "steps": ("steps", int),
    "dim": ("dim", int),
    "oracle": ("oracle", None),
    "output": ("output", str),
}
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def read_config_file(path) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigParseError(f"cannot read config file {path}: {exc}") from exc
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, _, value = (part.strip() for part in line.partition("="))
        key = key.lower().lstrip("-")
        if key not in _KEYS:
            raise ConfigParseError(f"unknown key {key!r}", lineno)
        name, convert = _KEYS[key]
        try:
            values[name] = _parse_bool(value) if convert is None else convert(value)
        except ValueError as exc:
            raise ConfigParseError(f"bad value for {key!r}: {exc}", lineno) from None
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jcentropy", description="Jaynes-Cummings field/atom entropy sweeps.")
    p.add_argument("--scenario", choices=[s.value for s in Scenario])
    p.add_argument("--alpha", type=_complex_arg, metavar="RE,IM")
    p.add_argument("--beta", type=_complex_arg, metavar="RE,IM")
    p.add_argument("--c", dest="C", type=float, help="mixing weight in [0, 1]")
    p.add_argument("--tmax", dest="t_max", type=float, help="final lambda*t")
    p.add_argument("--steps", type=int, help="grid intervals; steps+1 rows are written")
    p.add_argument("--dim", type=int, help="Fock truncation, 0 = automatic")
    p.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=None,
                   help="cross-check against the full density-matrix evolution")
    p.add_argument("--output", help="CSV path, '-' for stdout")
    p.add_argument("--config", help="file of 'key = value' lines; flags take precedence")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _validate(values: dict) -> SweepConfig:
    checks = [
        ("C", "--c", lambda v: 0.0 <= v <= 1.0, "must lie in [0, 1]"),
        ("t_max", "--tmax", lambda v: v > 0 and v != float("inf"), "must be positive and finite"),
        ("steps", "--steps", lambda v: v >= 2, "must be >= 2"),
        ("dim", "--dim", lambda v: v >= 0, "must be >= 0"),
    ]
    for name, flag, ok, msg in checks:
        if name in values and not ok(values[name]):
            raise UsageError(f"{flag} {msg}, got {values[name]}")
    if "scenario" in values:
        values["scenario"] = Scenario(values["scenario"])
    return SweepConfig(**values)


_NEGATIVE = re.compile(r"^-[\d.]")


def _attach_negative_values(argv: Sequence[str]) -> List[str]:
    # argparse reads "-4,0" as an option; rewrite "--beta -4,0" as "--beta=-4,0".
    out: List[str] = []
    for tok in argv:
        if out and _NEGATIVE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def parse_config(argv: Optional[Sequence[str]] = None) -> SweepConfig:
    """Build a :class:`SweepConfig` from defaults, then ``--config``, then flags."""
    argv = sys.argv[1:] if argv is None else argv
    ns = build_parser().parse_args(_attach_negative_values(argv))
    values = read_config_file(ns.config) if ns.config else {}
    for name in ("scenario", "alpha", "beta", "C", "t_max", "steps", "dim", "oracle", "output"):
        v = getattr(ns, name)
        if v is not None:
            values[name] = v
    return _validate(values)


def make_transformer(cfg: SweepConfig) -> JCEntropyTransformer:
    return JCEntropyTransformer(scenario=cfg.scenario.value, alpha=cfg.alpha, beta=cfg.beta,
                                C=cfg.C, dim=cfg.dim, oracle=cfg.oracle)


def run_sweep(cfg: SweepConfig) -> List[TimeSeriesRecord]:
    est = make_transformer(cfg).fit()
    log.info("sweep %s: dim=%d, %d points", cfg.scenario.value, est.dim_, cfg.steps + 1)
    return est.records(time_grid(cfg.t_max, cfg.steps))


def _fmt(x: float) -> str:
    return format(x, ".17g")


def format_csv(records: Iterable[TimeSeriesRecord], oracle: Optional[bool] = None) -> str:
    records = list(records)
    if oracle is None:
        oracle = bool(records) and records[0].has_oracle
    header = BASE_COLUMNS + (ORACLE_COLUMNS if oracle else ())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow([_fmt(v) for v in rec.values()])
    return buf.getvalue()


def write_csv(records: Iterable[TimeSeriesRecord], path, oracle: Optional[bool] = None) -> None:
    text = format_csv(records, oracle)
    if str(path) == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"jcentropy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verbose = "-v" in argv or "--verbose" in argv
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING)
    try:
        records = run_sweep(cfg)
    except NumericalError as exc:
        print(f"jcentropy: numerical error: {exc} (try a larger --dim)", file=sys.stderr)
        return EXIT_NUMERICAL
    try:
        write_csv(records, cfg.output, oracle=cfg.oracle)
    except OSError as exc:
        print(f"jcentropy: cannot write {cfg.output}: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
