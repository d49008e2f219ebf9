"""
Partitioned brute-force PUT with Ray
Each worker enumerates a disjoint slice of the first tie block's permutations
"""
from typing import Dict, List, Optional, Set

import ray
from loguru import logger

from config import settings
from errors import UniverseLimitExceeded
from margins.graph import MarginGraph
from oracle.enumeration import UniverseEnumeration, put_winners_for_slice


@ray.remote
class OracleWorker:
    """Ray actor enumerating one slice of the universes"""

    def __init__(self, worker_id: int):
        """
        Initialize oracle worker

        Args:
            worker_id: Unique worker identifier
        """
        self.worker_id = worker_id
        logger.info(f"OracleWorker {worker_id} initialized")

    def winners(self, graph: Dict, rule: str, part: int, parts: int, limit: int) -> Dict:
        """
        Enumerate slice `part` of `parts`

        Args:
            graph: MarginGraph.to_dict() payload
            rule: PUT rule name
            part: Slice index
            parts: Number of slices
            limit: Universe limit

        Returns:
            Result dictionary with the slice's winner ids
        """
        try:
            g = MarginGraph.from_dict(graph)
            found = put_winners_for_slice(g, rule, part=part, parts=parts, limit=limit)
            return {'status': 'success', 'worker_id': self.worker_id, 'part': part, 'winners': sorted(found)}
        except Exception as e:
            logger.error(f"Worker {self.worker_id} error on slice {part}/{parts}: {e}")
            return {'status': 'failed', 'worker_id': self.worker_id, 'part': part, 'error': str(e)}


class DistributedOracle:
    """Brute-force PUT spread over Ray actors"""

    def __init__(self, num_workers: int = 4):
        """
        Initialize distributed oracle

        Args:
            num_workers: Number of Ray worker actors
        """
        self.num_workers = num_workers

        if not ray.is_initialized():
            if settings.RAY_ADDRESS:
                ray.init(address=settings.RAY_ADDRESS, ignore_reinit_error=True)
                logger.info(f"Connected to Ray cluster at {settings.RAY_ADDRESS}")
            else:
                ray.init(ignore_reinit_error=True)
                logger.info("Ray initialized in local mode")

        self.workers = [OracleWorker.remote(i) for i in range(num_workers)]
        logger.info(f"Created {num_workers} oracle workers")

    def brute_force_put(self, g: MarginGraph, rule: str = "river", limit: Optional[int] = None) -> Set[int]:
        """
        Union of winners over all universes, merged from every worker's slice

        Raises:
            UniverseLimitExceeded: before any work is dispatched
            RuntimeError: if a worker slice failed
        """
        g.require_strict()
        limit = settings.UNIVERSE_LIMIT if limit is None else limit
        count = UniverseEnumeration.of(g).universe_count
        if count > limit:
            raise UniverseLimitExceeded(count, limit)

        payload = g.to_dict()
        parts = self.num_workers
        tasks = [
            worker.winners.remote(payload, rule, part, parts, limit)
            for part, worker in enumerate(self.workers)
        ]
        results: List[Dict] = ray.get(tasks)

        failed = [r for r in results if r['status'] == 'failed']
        if failed:
            raise RuntimeError(f"{len(failed)} oracle slices failed: {failed[0]['error']}")

        winners: Set[int] = set()
        for result in results:
            winners.update(result['winners'])
        logger.info(f"Distributed PUT over {count} universes in {parts} slices: {sorted(winners)}")
        return winners

    def shutdown(self):
        """Shutdown Ray"""
        if ray.is_initialized():
            ray.shutdown()
            logger.info("Ray shutdown complete")
