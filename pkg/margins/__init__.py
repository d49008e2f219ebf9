# Margin-graph kernel: storage, path queries and Condorcet detection
from margins.graph import MarginGraph, MPath, default_names, from_edges
from margins.paths import reachable, reachable_above, strongest_paths

__all__ = [
    "MarginGraph",
    "MPath",
    "default_names",
    "from_edges",
    "reachable",
    "reachable_above",
    "strongest_paths",
]
