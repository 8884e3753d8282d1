"""Seeded parameter sweeps over the growth models, aggregation and CSV I/O."""

from __future__ import annotations

import csv
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from statistics import mean, stdev
from typing import Iterable, Sequence

from .cover import is_vertex_cover, lm_vertex_cover
from .forcing import LmMode, is_forcing_set, lm_zero_forcing
from .generators import DeactParams, PaParams, derive_seed, gen_deactivation, gen_pa
from .metrics import ScalingFit, diameter, fit_scaling

MODELS = ("pa", "deact")
MEASURES = ("zf", "vc", "diameter")
FRACTIONS = ("z_lm_frac", "delta_z_frac", "v_lm_frac", "delta_v_frac")
RECORD_COLUMNS = (
    "model", "a", "gamma", "replica", "seed",
    *FRACTIONS, "diameter", "walltime_ms",
)
SUMMARY_COLUMNS = (
    "model", "a", "gamma", "replicas",
    *(f"{c}_{s}" for c in (*FRACTIONS, "diameter") for s in ("mean", "se")),
)


# sizes of the published sweeps; minutes to hours on one core
PAPER_SCALE = {"n": 10_000, "replicas": 100}


class HarnessError(RuntimeError):
    """An LM result failed verification; nothing should be written."""


@dataclass
class ExperimentConfig:
    model: str = "pa"
    n: int = 2000
    m: int = 2
    a_grid: list[float] = field(default_factory=lambda: [0.05, 0.1, 0.2, 0.5, 1.0, 2.0])
    replicas: int = 20
    master_seed: int = 0
    mode: str = LmMode.CLOSURE_CONSISTENT.value
    measure: list[str] = field(default_factory=lambda: ["zf", "vc", "diameter"])
    diameter_method: str = "two-sweep"
    timing: bool = True

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.replicas < 1:
            raise ValueError("replicas must be >= 1")
        if not self.a_grid or any(not a > 0 for a in self.a_grid):
            raise ValueError("a_grid must be nonempty with every a > 0")
        if self.m < 1 or self.n < self.m + 1:
            raise ValueError(f"need m >= 1 and n >= m+1, got n={self.n} m={self.m}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        unknown = set(self.measure) - set(MEASURES)
        if unknown:
            raise ValueError(f"unknown measures {sorted(unknown)}")
        self.mode = LmMode(self.mode).value
        self.a_grid = [float(a) for a in self.a_grid]

    @classmethod
    def from_json(cls, path: str | os.PathLike, **overrides) -> ExperimentConfig:
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys {sorted(extra)}")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


@dataclass
class RunRecord:
    model: str
    a: float
    gamma: float
    replica: int
    seed: int
    z_lm_frac: float = math.nan
    delta_z_frac: float = math.nan
    v_lm_frac: float = math.nan
    delta_v_frac: float = math.nan
    diameter: float = math.nan
    walltime_ms: float = 0.0


@dataclass
class SummaryRow:
    model: str
    a: float
    gamma: float
    replicas: int
    stats: dict[str, tuple[float, float]]

    def mean(self, col: str) -> float:
        return self.stats[col][0]

    def se(self, col: str) -> float:
        return self.stats[col][1]


def _run_one(cfg: ExperimentConfig, grid_index: int, replica: int) -> RunRecord:
    a = cfg.a_grid[grid_index]
    seed = derive_seed(cfg.master_seed, grid_index, replica, cfg.model)
    t0 = time.perf_counter()
    if cfg.model == "pa":
        g = gen_pa(PaParams(cfg.n, cfg.m, a), seed)
    else:
        g = gen_deactivation(DeactParams(cfg.n, cfg.m, a), seed)
    rec = RunRecord(cfg.model, a, 2.0 + a, replica, seed)
    n = g.n
    if "zf" in cfg.measure:
        zr = lm_zero_forcing(g, cfg.mode)
        if not is_forcing_set(g, zr.zfs):
            raise HarnessError(f"invalid forcing set: a={a} replica={replica} seed={seed}")
        rec.z_lm_frac, rec.delta_z_frac = zr.z_lm / n, zr.delta_z / n
    if "vc" in cfg.measure:
        vr = lm_vertex_cover(g)
        if not is_vertex_cover(g, vr.cover):
            raise HarnessError(f"invalid vertex cover: a={a} replica={replica} seed={seed}")
        rec.v_lm_frac, rec.delta_v_frac = vr.v_lm / n, vr.delta_v / n
    if "diameter" in cfg.measure:
        rec.diameter = float(diameter(g, cfg.diameter_method))
    if cfg.timing:
        rec.walltime_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return rec


def _run_star(args: tuple[ExperimentConfig, int, int]) -> RunRecord:
    return _run_one(*args)


def run_experiment(cfg: ExperimentConfig, workers: int | None = None) -> list[RunRecord]:
    """All ``len(a_grid) * replicas`` runs, sorted grid-major, replica-minor.

    Replica ``r`` at grid index ``i`` uses ``derive_seed(master_seed, i, r,
    model)``, so the output does not depend on ``workers``.
    """
    jobs = [(cfg, i, r) for i in range(len(cfg.a_grid)) for r in range(cfg.replicas)]
    workers = workers or os.cpu_count() or 1
    if workers == 1 or len(jobs) == 1:
        records = [_run_one(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_star, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    index = {a: i for i, a in enumerate(cfg.a_grid)}
    records.sort(key=lambda rec: (index[rec.a], rec.replica))
    return records


def _mean_se(values: Sequence[float]) -> tuple[float, float]:
    if any(math.isnan(v) for v in values):
        return math.nan, math.nan
    if len(values) < 2:
        return values[0], 0.0
    return mean(values), stdev(values) / math.sqrt(len(values))


def aggregate(records: Iterable[RunRecord]) -> list[SummaryRow]:
    """Mean and standard error (sample sd / sqrt(count)) per (model, a)."""
    groups: dict[tuple[str, float], list[RunRecord]] = {}
    for rec in records:
        groups.setdefault((rec.model, rec.a), []).append(rec)
    if not groups:
        raise ValueError("no records to aggregate")
    rows = []
    for (model, a), recs in groups.items():
        stats = {col: _mean_se([getattr(r, col) for r in recs]) for col in (*FRACTIONS, "diameter")}
        rows.append(SummaryRow(model, a, recs[0].gamma, len(recs), stats))
    return rows


def fit_paper_scalings(
    rows: Sequence[SummaryRow], gamma_window: tuple[float, float]
) -> tuple[ScalingFit, ScalingFit]:
    """Fits of (1 - mean z) and of mean v against gamma - 2 for the rows with
    gamma inside the closed window."""
    lo, hi = gamma_window
    eps = 1e-12
    inside = [r for r in rows if lo - eps <= r.gamma <= hi + eps]
    if len(inside) < 3:
        raise ValueError(f"{len(inside)} rows with gamma in [{lo}, {hi}]; need >= 3")
    zfit = fit_scaling([(r.gamma - 2.0, 1.0 - r.mean("z_lm_frac")) for r in inside])
    vfit = fit_scaling([(r.gamma - 2.0, r.mean("v_lm_frac")) for r in inside])
    return zfit, vfit


def _fmt(x: float) -> str:
    return "" if isinstance(x, float) and math.isnan(x) else f"{x:.6g}"


def emit_csv(items: Sequence[RunRecord] | Sequence[SummaryRow], path: str | os.PathLike,
             kind: str | None = None) -> None:
    """Write records or summary rows. Fractions carry 6 significant digits;
    ``a`` and ``gamma`` are written exactly (``repr``)."""
    if kind is None:
        kind = "summary" if items and isinstance(items[0], SummaryRow) else "records"
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        if kind == "records":
            out.writerow(RECORD_COLUMNS)
            for r in items:
                out.writerow([r.model, repr(r.a), repr(r.gamma), r.replica, r.seed,
                              *(_fmt(getattr(r, c)) for c in FRACTIONS),
                              _fmt(r.diameter), _fmt(r.walltime_ms)])
        else:
            out.writerow(SUMMARY_COLUMNS)
            for row in items:
                cells = []
                for c in (*FRACTIONS, "diameter"):
                    cells += [_fmt(row.mean(c)), _fmt(row.se(c))]
                out.writerow([row.model, repr(row.a), repr(row.gamma), row.replicas, *cells])


def _num(s: str) -> float:
    return float(s) if s != "" else math.nan


def read_csv(path: str | os.PathLike) -> list[SummaryRow]:
    """Summary rows from either CSV flavour; record files are aggregated."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = tuple(reader.fieldnames or ())
        rows = list(reader)
    if header == RECORD_COLUMNS:
        return aggregate(read_records(path)) if rows else []
    if header != SUMMARY_COLUMNS:
        raise ValueError(f"{path}: unrecognised CSV header")
    out = []
    for d in rows:
        stats = {c: (_num(d[f"{c}_mean"]), _num(d[f"{c}_se"])) for c in (*FRACTIONS, "diameter")}
        out.append(SummaryRow(d["model"], float(d["a"]), float(d["gamma"]), int(d["replicas"]), stats))
    return out


def read_records(path: str | os.PathLike) -> list[RunRecord]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != RECORD_COLUMNS:
            raise ValueError(f"{path}: not a run-record CSV")
        return [
            RunRecord(d["model"], float(d["a"]), float(d["gamma"]), int(d["replica"]), int(d["seed"]),
                      *(_num(d[c]) for c in FRACTIONS), _num(d["diameter"]), _num(d["walltime_ms"]))
            for d in reader
        ]
