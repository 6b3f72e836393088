"""Command-line front end.

    designworld run --config costs.cfg --out results/costs
    designworld transcript --config costs.cfg --awm 3 --run 7 --strategy explicit-warrant

Config files are flat ``key = value`` text; flags override file values.
Exit status: 0 ok, 1 configuration error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

from . import experiment
from .costs import CostParams, as_fraction, format_number
from .dialogue import simulate
from .domain import Task, generate_task
from .planop import AccessibilityMatrix
from .strategies import canonical

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME = 0, 1, 2


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    task_seed: int = 0
    seed: int = 0
    strategies: tuple[str, str] = ("explicit-warrant", "all-implicit")
    awm: tuple[int, ...] = tuple(range(1, 17))
    commcost: object = 0
    infcost: object = 0
    retcost: object = 0
    runs: int = 100
    output: str = "results"
    transcripts: bool = False
    task_file: str | None = None
    matrix: str | None = None
    charge_salience: bool = True
    workers: int | None = None
    _set: set = field(default_factory=set, repr=False)

    @property
    def costs(self) -> CostParams:
        return CostParams(self.commcost, self.infcost, self.retcost)

    def task(self) -> Task:
        if self.task_file:
            return Task.from_text(Path(self.task_file).read_text())
        return generate_task(self.task_seed)

    def load_matrix(self) -> AccessibilityMatrix | None:
        return AccessibilityMatrix.from_text(Path(self.matrix).read_text()) if self.matrix else None

    def to_text(self) -> str:
        out = []
        for f in fields(self):
            if f.name.startswith("_"):
                continue
            value = getattr(self, f.name)
            if f.name == "strategies":
                value = ",".join(value)
            elif f.name == "awm":
                value = ",".join(map(str, value))
            elif f.name in ("commcost", "infcost", "retcost"):
                value = format_number(as_fraction(value))
            elif isinstance(value, bool):
                value = str(value).lower()
            out.append(f"{f.name} = {'' if value is None else value}")
        return "\n".join(out) + "\n"


def _parse_int(key, text):
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}") from None


def _parse_bool(key, text):
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{key}: expected true/false, got {text!r}")


def _parse_awm(key, text):
    values = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if "-" in part:
            lo, hi = (_parse_int(key, p) for p in part.split("-", 1))
            values.extend(range(lo, hi + 1))
        else:
            values.append(_parse_int(key, part))
    if not values:
        raise ConfigError(f"{key}: empty AWM range")
    for v in values:
        if not 0 <= v <= 16:
            raise ConfigError(f"{key}: AWM radius {v} outside [0, 16]")
    return tuple(values)


def _parse_strategies(key, text):
    names = [p for p in text.replace(" ", "").split(",") if p]
    if len(names) != 2:
        raise ConfigError(f"{key}: expected two comma-separated strategies, got {text!r}")
    try:
        return tuple(canonical(n) for n in names)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _parse_cost(key, text):
    try:
        value = as_fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{key}: expected a non-negative number, got {text!r}") from None
    if value < 0:
        raise ConfigError(f"{key}: must be non-negative, got {text!r}")
    return value


PARSERS = {
    "task_seed": _parse_int,
    "seed": _parse_int,
    "strategies": _parse_strategies,
    "awm": _parse_awm,
    "commcost": _parse_cost,
    "infcost": _parse_cost,
    "retcost": _parse_cost,
    "runs": _parse_int,
    "output": lambda k, t: t.strip(),
    "transcripts": _parse_bool,
    "task_file": lambda k, t: t.strip() or None,
    "matrix": lambda k, t: t.strip() or None,
    "charge_salience": _parse_bool,
    "workers": lambda k, t: _parse_int(k, t) if t.strip() else None,
}


def read_config_file(path) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc.strerror}") from None
    out = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in PARSERS:
            raise ConfigError(f"{key}: unknown config key (line {n})")
        out[key] = value
    return out


def build_config(file_values: dict[str, str], overrides: dict[str, str]) -> RunConfig:
    cfg = RunConfig()
    for key, text in {**file_values, **overrides}.items():
        setattr(cfg, key, PARSERS[key](key, text))
    if cfg.runs < 2:
        raise ConfigError(f"runs: need at least 2 runs per setting, got {cfg.runs}")
    if cfg.task_file and not Path(cfg.task_file).exists():
        raise ConfigError(f"task_file: no such file {cfg.task_file}")
    if cfg.matrix and not Path(cfg.matrix).exists():
        raise ConfigError(f"matrix: no such file {cfg.matrix}")
    if "conditional-warrant" in cfg.strategies and not cfg.matrix:
        logging.getLogger(__name__).info("conditional-warrant without a matrix uses the naive table")
    return cfg


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _common(p):
    p.add_argument("--config", help="key = value configuration file")
    p.add_argument("--commcost")
    p.add_argument("--infcost")
    p.add_argument("--retcost")
    p.add_argument("--awm", help="radii, e.g. 1-16 or 1,3,5")
    p.add_argument("--runs")
    p.add_argument("--seed", help="master seed")
    p.add_argument("--task-seed")
    p.add_argument("--task-file")
    p.add_argument("--strategies", help="two strategies, e.g. explicit-warrant,all-implicit")
    p.add_argument("--matrix", help="accessibility matrix table for conditional-warrant")
    p.add_argument("--workers")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="designworld", description="Design-World dialogue experiments")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="run a batch and compare the two strategies")
    _common(run)
    run.add_argument("--out", dest="output", help="output directory")
    run.add_argument("--transcripts", action="store_const", const="true")
    tr = sub.add_parser("transcript", help="replay one dialogue as an s-expression transcript")
    _common(tr)
    tr.add_argument("--run", dest="run_id", type=int, required=True)
    tr.add_argument("--strategy", help="which strategy of the pair (default: the first)")
    tr.add_argument("--out", dest="output", help="file to write (default: stdout)")
    return parser


def _config_from_args(args) -> RunConfig:
    file_values = read_config_file(args.config) if args.config else {}
    overrides = {}
    for key in PARSERS:
        value = getattr(args, key, None)
        if value is not None and not (key == "output" and args.command == "transcript"):
            overrides[key] = str(value)
    return build_config(file_values, overrides)


def write_series(path: Path, series) -> None:
    lines = ["# awm mean_diff"] + [f"{awm} {diff!r}" for awm, diff in series]
    path.write_text("\n".join(lines) + "\n")


def cmd_run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    task = cfg.task()
    s1, s2 = cfg.strategies
    records = experiment.run_batch(s1, s2, cfg.awm, cfg.costs, cfg.runs, cfg.seed, task=task,
                                   matrix=cfg.load_matrix(), charge_salience=cfg.charge_salience,
                                   workers=cfg.workers)
    summary = experiment.compare(records, s1, s2)
    verdict = experiment.classify(summary)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    (out / "config.txt").write_text(cfg.to_text())
    (out / "task.sexp").write_text(task.to_text())
    (out / "results.csv").write_text(experiment.results_csv(records))
    (out / "summary.csv").write_text(experiment.summary_csv(summary))
    write_series(out / "series.dat", experiment.mean_difference_series(records, s1, s2))
    if cfg.transcripts:
        tdir = out / "transcripts"
        tdir.mkdir(exist_ok=True)
        for r in records:
            t = _replay(cfg, task, r.awm, r.strategy, r.run)
            (tdir / f"awm{r.awm:02d}-{r.strategy}-{r.run:03d}.txt").write_text(t.to_text())
    pos, neg = summary.positive(), summary.negative()
    print(f"{s1} vs {s2} ({cfg.costs}): {verdict}", file=stdout)
    print(f"  significant positive at AWM {pos or '-'}; negative at AWM {neg or '-'}", file=stdout)
    return EXIT_OK


def _replay(cfg: RunConfig, task: Task, awm: int, strategy: str, run: int):
    return simulate(task, awm, experiment.run_seed(cfg.seed, awm, run), strategy,
                    costs=cfg.costs, matrix=cfg.load_matrix(), charge_salience=cfg.charge_salience)


def cmd_transcript(cfg: RunConfig, run_id: int, strategy: str | None = None,
                   output: str | None = None, awm: int | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    if not 0 <= run_id < cfg.runs:
        raise ConfigError(f"run: unknown run id {run_id} (runs = {cfg.runs})")
    strategy = canonical(strategy) if strategy else cfg.strategies[0]
    if strategy not in cfg.strategies:
        raise ConfigError(f"strategy: {strategy} is not one of {','.join(cfg.strategies)}")
    awm = cfg.awm[0] if awm is None else awm
    text = _replay(cfg, cfg.task(), awm, strategy, run_id).to_text()
    if output:
        Path(output).write_text(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = make_parser().parse_args(argv)
        cfg = _config_from_args(args)
        if args.command == "run":
            return cmd_run(cfg)
        if len(cfg.awm) != 1 and args.awm is None:
            raise ConfigError("awm: transcript needs a single AWM radius (use --awm)")
        try:
            strategy = canonical(args.strategy) if args.strategy else None
        except ValueError as exc:
            raise ConfigError(f"strategy: {exc}") from None
        return cmd_transcript(cfg, args.run_id, strategy, args.output)
    except ConfigError as exc:
        print(f"designworld: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001
        print(f"designworld: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
