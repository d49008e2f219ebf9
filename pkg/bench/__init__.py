# Benchmark harness: timed rule runs over Mallows instances
from bench.runner import CSV_COLUMNS, BenchConfig, BenchRecord, BenchRunner, records_to_csv, run_bench

__all__ = ["CSV_COLUMNS", "BenchConfig", "BenchRecord", "BenchRunner", "records_to_csv", "run_bench"]
