"""
Routings on VT(r,s) and their congestion.

Pairs are unordered; every routing stores one path per pair, oriented from
the smaller endpoint. Translation routings pick one template per difference
class and translate it over the vertex group, so the load of each class is
the same on every edge of a translation orbit.
"""

import logging
import random
from collections import Counter
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Tuple

from vtorus.models import CongestionProfile, Routing, VtGraph, VtVertex
from vtorus.utils.parallel import parallel_map, worker_count
from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)

ORIGIN = VtVertex(0, 0)


class RoutingService:
    """Shortest, translation and searched routings with congestion profiles"""

    def get_config(self):
        return {
            'budget': get_setting('VT_SEARCH_BUDGET'),
            'seed': get_setting('VT_SEED'),
            'path_cap': get_setting('VT_PATH_CAP'),
        }

    # Canonical shortest paths

    def greedy_path(self, g: VtGraph, x, y) -> Tuple[VtVertex, ...]:
        """
        Shortest x,y-path taking, at every step, the first neighbor (in
        neighbor order) one step closer to y.
        """
        from vtorus.services.metric_service import MetricService

        metric = MetricService()
        current, target = g.require_vertex(x), g.require_vertex(y)
        path = [current]
        remaining = metric.distance(g, current, target)
        while remaining:
            current = next(
                other for other, _ in g.neighbors(current)
                if metric.distance(g, other, target) == remaining - 1
            )
            path.append(current)
            remaining -= 1
        return tuple(path)

    def shortest_routing(self, g: VtGraph) -> Routing:
        """One canonical shortest path per unordered pair, routed from the smaller endpoint"""
        routing = Routing()
        for i, x in enumerate(g.vertices):
            for y in g.vertices[i + 1:]:
                routing.add(self.greedy_path(g, x, y))
        logger.debug(f"Shortest routing of {g!r}: {len(routing)} paths, total length {routing.total_length()}")
        return routing

    # Difference classes

    def difference_classes(self, g: VtGraph) -> List[VtVertex]:
        """Representatives min(δ, -δ) of the nonzero differences, sorted"""
        return sorted({min(delta, g.negate(delta)) for delta in g.vertices if delta != ORIGIN})

    def self_inverse_classes(self, g: VtGraph) -> List[VtVertex]:
        """Differences with δ = -δ: (r,0), (0,s) and (r,s) whenever they are vertices"""
        return [delta for delta in self.difference_classes(g) if g.negate(delta) == delta]

    def default_templates(self, g: VtGraph) -> Dict[VtVertex, Tuple[VtVertex, ...]]:
        return {delta: self.greedy_path(g, ORIGIN, delta) for delta in self.difference_classes(g)}

    def _class_paths(self, g: VtGraph, delta, template):
        """Every translate of one template that the routing uses"""
        self_inverse = g.negate(delta) == delta
        paths = []
        for x in g.vertices:
            # a self-inverse pair is met from both ends; keep the smaller start
            if self_inverse and g.translate(x, delta) < x:
                continue
            paths.append(tuple(g.translate(v, x) for v in template))
        return paths

    def translation_routing(self, g: VtGraph, templates: Optional[Dict] = None) -> Routing:
        """
        Route every pair (x, x+δ) along the template of δ translated by x.

        Args:
            g: Graph to route
            templates: Optional class -> path from (0,0) map; the greedy
                shortest paths are used for missing classes

        Returns:
            Routing: complete routing with |V|(|V|-1)/2 paths
        """
        chosen = self.default_templates(g)
        chosen.update(templates or {})

        routing = Routing()
        for delta, template in chosen.items():
            for path in self._class_paths(g, delta, template):
                routing.add(path)
        return routing

    def class_loads(self, g: VtGraph, templates: Optional[Dict] = None, self_inverse: bool = False) -> Dict:
        """
        Per-edge load contributed by the non-self-inverse classes (or only
        by the self-inverse ones when self_inverse is true).

        The non-self-inverse part is invariant under every translation.
        """
        chosen = self.default_templates(g)
        chosen.update(templates or {})
        loads = Counter({edge: 0 for edge in g.edges()})
        for delta, template in chosen.items():
            if (g.negate(delta) == delta) != self_inverse:
                continue
            for path in self._class_paths(g, delta, template):
                loads.update(g.path_edges(path))
        return dict(loads)

    # Congestion

    def congestion_profile(self, g: VtGraph, routing: Routing) -> CongestionProfile:
        """Exact per-edge path counts, accumulated in chunks across the worker pool"""
        paths = list(routing)
        workers = worker_count()
        chunks = [paths[i::workers] for i in range(workers)]

        def tally(chunk):
            counter = Counter()
            for path in chunk:
                counter.update(g.path_edges(path))
            return counter

        loads = Counter({edge: 0 for edge in g.edges()})
        for partial in parallel_map(tally, chunks):
            loads.update(partial)
        return CongestionProfile.from_loads(loads)

    def optimal_congestion_bound(self, g: VtGraph) -> Fraction:
        """Wiener(g) / |E| as an exact rational"""
        from vtorus.services.cut_service import CutService

        return Fraction(CutService().wiener_brute(g).value, g.size)

    def congestion_lower_bound(self, g: VtGraph) -> int:
        """⌈Wiener(g) / |E|⌉, a lower bound on max congestion of any shortest routing"""
        return ceil(self.optimal_congestion_bound(g))

    # Local search

    def search_balanced_routing(self, g: VtGraph, budget: Optional[int] = None,
                                seed: Optional[int] = None, restarts: int = 1):
        """
        Local search over shortest-path templates per difference class,
        minimizing (max - min, max) congestion.

        A move swaps the template of one class for another isometric path
        and is kept when the objective does not get worse, so the gap never
        increases. Restarts use seeds seed, seed+1, ... in the worker pool
        and the best (gap, max) wins, ties going to the lowest seed.

        Returns:
            tuple: (Routing, CongestionProfile)
        """
        config = self.get_config()
        budget = config['budget'] if budget is None else budget
        seed = config['seed'] if seed is None else seed

        candidates = self._template_candidates(g, config['path_cap'])
        runs = parallel_map(
            lambda run_seed: self._search_once(g, candidates, budget, run_seed),
            [seed + k for k in range(max(1, restarts))],
        )
        templates, profile = min(runs, key=lambda run: (run[1].gap, run[1].maximum))

        logger.info(
            f"Balanced routing search on {g!r}: gap {profile.gap}, max {profile.maximum} "
            f"after {budget} steps x {len(runs)} restarts"
        )
        return self.translation_routing(g, templates), profile

    def _template_candidates(self, g: VtGraph, cap):
        from vtorus.services.metric_service import MetricService

        metric = MetricService()
        defaults = self.default_templates(g)
        candidates = {}
        for delta, default in defaults.items():
            others = [p for p in metric.all_isometric_paths(g, ORIGIN, delta, cap) if p != default]
            candidates[delta] = [default] + others
        return candidates

    def _search_once(self, g, candidates, budget, seed):
        rng = random.Random(seed)

        contributions = {}

        def contribution(delta, index):
            key = (delta, index)
            if key not in contributions:
                counter = Counter()
                for path in self._class_paths(g, delta, candidates[delta][index]):
                    counter.update(g.path_edges(path))
                contributions[key] = counter
            return contributions[key]

        current = {delta: 0 for delta in candidates}
        loads = Counter({edge: 0 for edge in g.edges()})
        for delta in candidates:
            loads.update(contribution(delta, 0))

        def objective(values):
            return (max(values) - min(values), max(values))

        score = objective(loads.values())
        movable = [delta for delta, paths in candidates.items() if len(paths) > 1]

        for _ in range(budget if movable else 0):
            if score[0] == 0:
                break
            delta = rng.choice(movable)
            index = rng.randrange(len(candidates[delta]))
            if index == current[delta]:
                continue

            trial = Counter(loads)
            trial.subtract(contribution(delta, current[delta]))
            trial.update(contribution(delta, index))
            trial_score = objective(trial.values())
            if trial_score <= score:
                loads, score = trial, trial_score
                current[delta] = index

        templates = {delta: candidates[delta][index] for delta, index in current.items()}
        return templates, CongestionProfile.from_loads(dict(loads))

    def edge_forwarding_upper_bound(self, g: VtGraph, budget: Optional[int] = None,
                                    seed: Optional[int] = None) -> int:
        """Max congestion of the best routing found, an upper bound on the forwarding index"""
        _, profile = self.search_balanced_routing(g, budget, seed)
        return profile.maximum
