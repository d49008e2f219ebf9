"""
Benchmark metrics collector
Keeps per-run timings, summarizes them per rule and alternative count, and fits runtime growth
"""
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd
from loguru import logger


@dataclass
class MetricPoint:
    """Single timing measurement"""
    timestamp: datetime
    name: str
    value: float
    tags: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self):
        return {
            "timestamp": self.timestamp.isoformat(),
            "name": self.name,
            "value": self.value,
            "tags": self.tags,
        }


class BenchMetrics:
    """Collects rule timings and aggregates them"""

    def __init__(self):
        self.metrics: List[MetricPoint] = []
        self.start_time = datetime.now(timezone.utc)
        logger.debug("BenchMetrics initialized")

    def record_metric(self, name: str, value: float, tags: Optional[Dict[str, Any]] = None):
        """Record a metric"""
        self.metrics.append(MetricPoint(
            timestamp=datetime.now(timezone.utc),
            name=name,
            value=value,
            tags=tags or {},
        ))

    def record_bench(self, record) -> None:
        """Record one BenchRecord as a timing point named after its rule"""
        self.record_metric(record.rule, record.wall_seconds, {
            "m": record.m,
            "n": record.n,
            "seed": record.seed,
            "timed_out": record.timed_out,
        })

    def to_frame(self) -> pd.DataFrame:
        rows = [{"rule": p.name, "wall_seconds": p.value, **p.tags} for p in self.metrics]
        return pd.DataFrame(rows, columns=["rule", "wall_seconds", "m", "n", "seed", "timed_out"])

    def get_metric_summary(self, name: str) -> Dict[str, float]:
        """Get statistical summary of a metric"""
        values = [p.value for p in self.metrics if p.name == name]
        if not values:
            return {}
        return {
            "count": len(values),
            "min": min(values),
            "max": max(values),
            "avg": sum(values) / len(values),
            "median": float(np.median(values)),
        }

    def medians(self) -> pd.DataFrame:
        """Median wall time per (rule, m) over runs that finished"""
        frame = self.to_frame()
        finished = frame[~frame["timed_out"].astype(bool)]
        if finished.empty:
            return pd.DataFrame(columns=["rule", "m", "median_seconds"])
        return (
            finished.groupby(["rule", "m"])["wall_seconds"]
            .median()
            .reset_index()
            .rename(columns={"wall_seconds": "median_seconds"})
        )

    def loglog_slope(self, rule: str) -> Optional[float]:
        """
        Slope of log(median runtime) against log(m)

        Returns:
            None with fewer than two distinct m values
        """
        medians = self.medians()
        medians = medians[medians["rule"] == rule]
        medians = medians[medians["median_seconds"] > 0]
        if medians["m"].nunique() < 2:
            return None
        slope, _ = np.polyfit(np.log(medians["m"].astype(float)), np.log(medians["median_seconds"]), 1)
        return float(slope)

    def get_report(self) -> Dict[str, Any]:
        frame = self.to_frame()
        rules = {}
        for rule in sorted(frame["rule"].unique()):
            runs = frame[frame["rule"] == rule]
            rules[rule] = {
                **self.get_metric_summary(rule),
                "timeouts": int(runs["timed_out"].sum()),
                "loglog_slope": self.loglog_slope(rule),
            }
        return {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "runs": len(self.metrics),
            "rules": rules,
            "medians": self.medians().to_dict(orient="records"),
        }

    def export_metrics(self, filepath: str):
        """Export metrics to JSON file"""
        try:
            with open(filepath, "w") as f:
                json.dump({
                    "metrics": [p.to_dict() for p in self.metrics],
                    "summary": self.get_report(),
                }, f, indent=2, default=str)
            logger.info(f"Metrics exported to {filepath}")
        except Exception as e:
            logger.error(f"Error exporting metrics: {e}")
