"""
Benchmark harness
Times each rule on Condorcet-free Mallows profiles and emits one record per run
"""
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from loguru import logger
from pydantic import BaseModel, Field, field_validator

from comparison.registry import BRUTE_FORCE_RULES, canonical_rule, compute_winners
from config import settings
from errors import RuleTimeout, UniverseLimitExceeded, VotingError
from monitoring.metrics import BenchMetrics
from profiles.profile import margins
from synth.mallows import MallowsConfig, sample_no_condorcet

CSV_COLUMNS = ["rule", "m", "n", "seed", "phi", "wall_seconds", "winners", "timed_out"]


@dataclass
class BenchRecord:
    """One timed rule run; winners is the winner-set size, None when timed out or failed"""
    rule: str
    m: int
    n: int
    seed: int
    phi: float
    wall_seconds: float
    winners: Optional[int]
    timed_out: bool
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        return {column: getattr(self, column) for column in CSV_COLUMNS}


class BenchConfig(BaseModel):
    """Benchmark grid and budgets"""

    rules: List[str]
    alternatives: List[int] = Field(..., min_length=1)
    voters: List[int] = Field(..., min_length=1)
    instances: int = Field(5, ge=1)
    phi: Optional[float] = Field(None, gt=0, le=1)
    norm_phi: Optional[float] = Field(None, gt=0, le=1)
    seed: int = Field(0, ge=0)
    poly_timeout: float = Field(default_factory=lambda: settings.BENCH_POLY_TIMEOUT, gt=0)
    brute_timeout: float = Field(default_factory=lambda: settings.BENCH_BRUTE_TIMEOUT, gt=0)
    universe_limit: int = Field(default_factory=lambda: settings.UNIVERSE_LIMIT, ge=1)
    max_attempts: int = Field(default_factory=lambda: settings.BENCH_MAX_ATTEMPTS, ge=1)
    max_timeouts: int = Field(default_factory=lambda: settings.BENCH_MAX_TIMEOUTS, ge=1)
    jobs: int = Field(default_factory=lambda: settings.BENCH_JOBS, ge=1)

    @field_validator("rules")
    @classmethod
    def _known_rules(cls, rules: List[str]) -> List[str]:
        return [canonical_rule(rule) for rule in rules]

    @field_validator("alternatives", "voters")
    @classmethod
    def _positive(cls, values: List[int]) -> List[int]:
        if any(v < 1 for v in values):
            raise ValueError("grid values must be positive")
        return values

    def timeout_for(self, rule: str) -> float:
        return self.brute_timeout if rule in BRUTE_FORCE_RULES else self.poly_timeout

    def mallows(self, m: int, n: int, seed: int) -> MallowsConfig:
        return MallowsConfig(m=m, n=n, phi=self.phi, norm_phi=self.norm_phi, seed=seed)


def time_rule(g, rule: str, timeout: float, universe_limit: int) -> Dict:
    """
    Run one rule with a wall-clock budget

    Brute-force rules stop cooperatively at the deadline; polynomial rules run
    to completion and are marked timed out afterwards if they overran.
    """
    started = time.perf_counter()
    deadline = time.monotonic() + timeout
    winners: Optional[int] = None
    timed_out = False
    error = None
    try:
        winners = len(compute_winners(g, rule, limit=universe_limit, deadline=deadline))
    except RuleTimeout:
        timed_out = True
    except UniverseLimitExceeded as e:
        timed_out = True
        error = f"UniverseLimitExceeded: {e.count}"
    except VotingError as e:
        logger.error(f"{rule} failed: {e}")
        error = f"{type(e).__name__}: {e}"
    wall = time.perf_counter() - started
    if wall > timeout and not timed_out:
        timed_out = True
        winners = None
    return {"wall_seconds": wall, "winners": winners, "timed_out": timed_out, "error": error}


def run_instance(config: BenchConfig, m: int, n: int, base_seed: int, rules: Sequence[str]) -> Dict:
    """
    Generate one Condorcet-free instance and time every rule on it, in the given order

    Returns:
        Result dictionary with the instance's records
    """
    try:
        seed, profile = sample_no_condorcet(config.mallows(m, n, base_seed), config.max_attempts)
    except VotingError as e:
        logger.error(f"Instance m={m} n={n} seed={base_seed}: {e}")
        return {'status': 'failed', 'error': str(e), 'records': []}

    phi = config.mallows(m, n, seed).phi
    g = margins(profile)
    records = []
    for rule in rules:
        outcome = time_rule(g, rule, config.timeout_for(rule), config.universe_limit)
        records.append(BenchRecord(rule=rule, m=m, n=n, seed=seed, phi=phi, **outcome))
    return {'status': 'success', 'seed': seed, 'records': records}


class BenchRunner:
    """Runs the benchmark grid sequentially or on Ray workers"""

    def __init__(self, config: BenchConfig):
        """
        Initialize benchmark runner

        Args:
            config: Validated benchmark configuration
        """
        self.config = config
        self.metrics = BenchMetrics()
        self.rng = np.random.default_rng(config.seed)
        self.stats = {'instances': 0, 'failed_instances': 0, 'records': 0, 'timeouts': 0, 'skipped_runs': 0}
        logger.info(f"BenchRunner initialized: rules={config.rules}, m={config.alternatives}, n={config.voters}")

    def _instance_seed(self, index: int) -> int:
        # disjoint rejection-sampling windows per instance
        return self.config.seed + index * self.config.max_attempts

    def _rule_order(self, active: List[str]) -> List[str]:
        return [active[i] for i in self.rng.permutation(len(active))]

    def run(self) -> List[BenchRecord]:
        records: List[BenchRecord] = []
        if not self.config.rules:
            return records

        pool = None
        if self.config.jobs > 1:
            from bench.distributed_bench import DistributedBench
            pool = DistributedBench(num_workers=self.config.jobs)

        try:
            for m in self.config.alternatives:
                timeouts = {rule: 0 for rule in self.config.rules}
                for n in self.config.voters:
                    if n % 2 == 0:
                        logger.warning(f"Cell m={m} n={n}: even voter count may yield zero margins")
                    cell = self._run_cell(m, n, timeouts, pool)
                    records.extend(cell)
                    logger.info(f"Bench cell m={m} n={n} finished: {len(cell)} records")
        finally:
            if pool is not None:
                pool.shutdown()

        for record in records:
            self.metrics.record_bench(record)
        self.stats['records'] = len(records)
        logger.info(f"Benchmark complete: {self.stats}")
        return records

    def _active(self, timeouts: Dict[str, int]) -> List[str]:
        return [r for r in self.config.rules if timeouts[r] < self.config.max_timeouts]

    def _tally(self, cell_records: List[BenchRecord], timeouts: Dict[str, int]) -> None:
        for record in cell_records:
            if record.timed_out:
                timeouts[record.rule] += 1
                self.stats['timeouts'] += 1

    def _run_cell(self, m: int, n: int, timeouts: Dict[str, int], pool) -> List[BenchRecord]:
        cell: List[BenchRecord] = []
        if pool is None:
            for index in range(self.config.instances):
                active = self._active(timeouts)
                self.stats['skipped_runs'] += len(self.config.rules) - len(active)
                if not active:
                    continue
                result = run_instance(self.config, m, n, self._instance_seed(index), self._rule_order(active))
                self._collect(result, cell, timeouts)
            return cell

        active = self._active(timeouts)
        self.stats['skipped_runs'] += (len(self.config.rules) - len(active)) * self.config.instances
        if not active:
            return cell
        jobs = [(m, n, self._instance_seed(i), self._rule_order(active)) for i in range(self.config.instances)]
        for result in pool.run_instances(self.config, jobs):
            self._collect(result, cell, timeouts)
        return cell

    def _collect(self, result: Dict, cell: List[BenchRecord], timeouts: Dict[str, int]) -> None:
        self.stats['instances'] += 1
        if result['status'] != 'success':
            self.stats['failed_instances'] += 1
            return
        cell.extend(result['records'])
        self._tally(result['records'], timeouts)


def run_bench(config: BenchConfig) -> List[BenchRecord]:
    """Run the whole grid and return every record"""
    return BenchRunner(config).run()


def records_to_csv(records: List[BenchRecord], path: Optional[str] = None) -> Optional[str]:
    """
    Write records as CSV (header rule,m,n,seed,phi,wall_seconds,winners,timed_out)

    Args:
        records: Bench records
        path: Output file; the CSV text is returned when omitted
    """
    frame = pd.DataFrame([r.to_dict() for r in records], columns=CSV_COLUMNS)
    frame["winners"] = frame["winners"].astype("Int64")
    return frame.to_csv(path, index=False)
