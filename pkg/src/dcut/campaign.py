"""Solver-versus-oracle cross-check campaigns."""
import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import __version__
from .config import oracle_guard
from .exceptions import DCutError, OracleTimeout
from .generate import enumerate_connected, generate, in_class
from .io import emit_graph6, read_graph6_file
from .oracle import oracle_solve
from .solvers import ALGORITHMS, solve

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "instance_id", "class", "n", "m", "d", "algo", "decision",
    "oracle_decision", "agree", "solver_ms", "oracle_ms",
)


@dataclass
class CampaignConfig:
    graph_class: str = "connected"
    n_min: int = 4
    n_max: int = 7
    d_values: tuple = (2,)
    trials: int = 0  # random instances per n; 0 means enumerate instead
    seed: int = None
    timeout: float = None  # seconds, per oracle call
    guard: int = None  # oracle size guard override
    algo: str = "auto"
    corpus: tuple = ()  # graph6 files; used instead of generation when given
    workers: int = 1
    p_range: tuple = (0.2, 0.8)

    def validate(self):
        problems = []
        if self.algo not in ALGORITHMS:
            problems.append(f"unknown algorithm {self.algo!r}")
        if self.n_min > self.n_max:
            problems.append("n_min exceeds n_max")
        if not self.d_values or any(d < 1 for d in self.d_values):
            problems.append("d values must be positive")
        if self.trials and self.seed is None:
            problems.append("random campaigns need a seed")
        guard = oracle_guard() if self.guard is None else self.guard
        if self.n_max > guard:
            problems.append(f"n_max={self.n_max} exceeds the oracle guard {guard}")
        if not self.trials and not self.corpus and self.n_max > 7:
            problems.append("enumeration without a corpus is limited to n <= 7")
        if problems:
            raise ValueError("; ".join(problems))
        return self


@dataclass
class Record:
    instance_id: str
    graph6: str
    graph_class: str
    n: int
    m: int
    d: int
    algo: str
    decision: str  # "yes", "no" or "error: ..."
    oracle_decision: str  # "yes", "no" or "timeout"
    agree: object
    solver_ms: float
    oracle_ms: float
    route: str = ""


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list = field(default_factory=list)
    version: str = __version__

    @property
    def mismatches(self):
        return [r for r in self.records if r.agree is False]

    @property
    def failed(self):
        return bool(self.mismatches)

    def summary(self):
        decided = [r for r in self.records if r.agree is not None]
        return {
            "instances": len(self.records),
            "compared": len(decided),
            "agreements": sum(1 for r in decided if r.agree),
            "mismatches": len(self.mismatches),
            "oracle_timeouts": sum(1 for r in self.records if r.oracle_decision == "timeout"),
            "yes": sum(1 for r in self.records if r.oracle_decision == "yes"),
            "failed": self.failed,
        }

    def to_json(self):
        return {
            "version": self.version,
            "seed": self.config.seed,
            "config": asdict(self.config),
            "summary": self.summary(),
            "records": [asdict(r) for r in self.records],
        }

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            writer.writerow(
                [r.instance_id, r.graph_class, r.n, r.m, r.d, r.algo, r.decision,
                 r.oracle_decision, r.agree, f"{r.solver_ms:.3f}", f"{r.oracle_ms:.3f}"]
            )
        return buf.getvalue()

    def write(self, json_path=None, csv_path=None):
        if json_path:
            with open(json_path, "w") as fh:
                json.dump(self.to_json(), fh, indent=2)
                fh.write("\n")
        if csv_path:
            with open(csv_path, "w", newline="") as fh:
                fh.write(self.to_csv())


def instances(config):
    """``(instance_id, graph)`` pairs selected by ``config``, in a fixed order."""
    if config.corpus:
        for path in config.corpus:
            for k, g in enumerate(read_graph6_file(path)):
                if config.n_min <= g.n <= config.n_max and in_class(g, config.graph_class):
                    yield f"{path}:{k}", g
        return
    for n in range(config.n_min, config.n_max + 1):
        if config.trials:
            seed = config.seed * 1000 + n
            graphs, report = generate(config.graph_class, n, config.trials, seed, p_range=config.p_range)
            log.info("generated %s: %s", config.graph_class, report.to_json())
            for k, g in enumerate(graphs):
                yield f"{config.graph_class}-n{n}-{k:05d}", g
        else:
            k = 0
            for g in enumerate_connected(n):
                if in_class(g, config.graph_class):
                    yield f"labelled-n{n}-{k:07d}", g
                    k += 1


def check_instance(instance_id, g, d, algo, graph_class, timeout=None, guard=None):
    """Run one solver and the oracle on ``g`` and compare."""
    started = time.perf_counter()
    route = ""
    try:
        outcome = solve(g, d, algo)
        decision = "yes" if outcome.decision else "no"
        route = outcome.algorithm
    except DCutError as exc:
        decision = f"error: {exc}"
    solver_ms = (time.perf_counter() - started) * 1000.0
    started = time.perf_counter()
    try:
        cert = oracle_solve(g, d, guard=guard, timeout=timeout)
        oracle_decision = "yes" if cert is not None else "no"
    except OracleTimeout:
        oracle_decision = "timeout"
    oracle_ms = (time.perf_counter() - started) * 1000.0
    agree = None if oracle_decision == "timeout" else decision == oracle_decision
    return Record(instance_id, emit_graph6(g), graph_class, g.n, g.m, d, algo, decision,
                  oracle_decision, agree, solver_ms, oracle_ms, route)


def _check_job(job):
    return check_instance(*job)


def run_campaign(config):
    config.validate()
    jobs = [
        (iid, g, d, config.algo, config.graph_class, config.timeout, config.guard)
        for iid, g in instances(config)
        for d in config.d_values
    ]
    if not jobs:
        log.warning("campaign selected no instances; reporting zero mismatches")
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            records = list(pool.map(_check_job, jobs, chunksize=32))
    else:
        records = [_check_job(job) for job in jobs]
    records.sort(key=lambda r: (r.instance_id, r.d))
    return CampaignReport(config, records)
