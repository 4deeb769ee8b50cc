"""
Verification report runner.

Each section runs a group of structural checks on VT(r,s) and appends one
row per claim. Errors raised by a check become fail rows; balance results
of the routing search and pair path counts are recorded as experimental rows.
"""

import logging
from math import gcd
from typing import Iterable, Optional

from vtorus.models import (
    Axis,
    EdgeKind,
    PairTag,
    TorusParams,
    VerificationMatrix,
    VerificationRow,
    VtVertex,
)
from vtorus.services.cut_service import CutService
from vtorus.services.cycle_service import CycleService
from vtorus.services.metric_service import MetricService
from vtorus.services.routing_service import RoutingService
from vtorus.services.torus_service import TorusService
from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)

SECTIONS = ('structure', 'cycles', 'quotient', 'metric', 'convexity', 'cuts', 'routing')


class ReportService:
    """Runs the verification sections and collects a VerificationMatrix"""

    def __init__(self):
        self.torus = TorusService()
        self.cycles = CycleService()
        self.metric = MetricService()
        self.cuts = CutService()
        self.routing = RoutingService()

    def run_report(self, params: TorusParams, sections: Optional[Iterable[str]] = None,
                   budget: Optional[int] = None, seed: Optional[int] = None) -> VerificationMatrix:
        """
        Run the requested sections (all of them by default).

        Args:
            params: Instance to verify
            sections: Section names from SECTIONS
            budget: Local-search budget for the routing section
            seed: Seed for random routings and the search

        Returns:
            VerificationMatrix: One row per claim, in section order
        """
        sections = list(sections or SECTIONS)
        unknown = [name for name in sections if name not in SECTIONS]
        if unknown:
            raise ValueError(f"unknown report sections: {', '.join(unknown)}")

        self._budget = get_setting('VT_SEARCH_BUDGET') if budget is None else budget
        self._seed = get_setting('VT_SEED') if seed is None else seed

        g = self.torus.build_vt(params)
        matrix = VerificationMatrix()
        instance = f"VT({params.r},{params.s})"

        logger.info(f"🔍 Verifying {instance}: {', '.join(sections)}")
        for name in SECTIONS:
            if name in sections:
                getattr(self, f"_section_{name}")(g, instance, matrix)

        counts = matrix.counts()
        if matrix.passed:
            logger.info(f"✅ {instance}: {counts['pass']} passed, {counts['experimental']} experimental")
        else:
            logger.warning(f"❌ {instance}: {counts['fail']} failed of {len(matrix.rows)} rows")
        return matrix

    def _check(self, matrix, claim_id, instance, expected, observe):
        try:
            return matrix.add(VerificationRow.check(claim_id, instance, expected, observe()))
        except Exception as e:
            logger.error(f"Check {claim_id} on {instance} raised: {e}", exc_info=True)
            return matrix.add(VerificationRow.failure(claim_id, instance, expected, e))

    def _experiment(self, matrix, claim_id, instance, expected, observe):
        try:
            return matrix.add(VerificationRow.experimental(claim_id, instance, expected, observe()))
        except Exception as e:
            logger.error(f"Experiment {claim_id} on {instance} raised: {e}", exc_info=True)
            return matrix.add(VerificationRow.failure(claim_id, instance, expected, e))

    # Sections

    def _section_structure(self, g, instance, matrix):
        r, s = g.params.r, g.params.s
        summary = self.torus.structure_summary(g)
        self._check(matrix, 'vertex count', instance, 2 * r * s, lambda: summary['vertices'])
        self._check(matrix, 'edge count', instance, 4 * r * s, lambda: summary['edges'])
        self._check(matrix, 'degrees', instance, [4], lambda: summary['degrees'])
        self._check(matrix, 'acute/obtuse split per vertex', instance, [(2, 2)], lambda: summary['kind_splits'])
        self._check(matrix, 'acute edges = obtuse edges', instance, True,
                    lambda: summary['acute_edges'] == summary['obtuse_edges'])
        self._check(matrix, 'connected', instance, True, lambda: summary['connected'])
        self._check(matrix, 'bipartite by parity', instance, True, lambda: summary['bipartite'])

    def _section_cycles(self, g, instance, matrix):
        r, s = g.params.r, g.params.s
        d = gcd(r, s)
        for kind in EdgeKind:
            report = self.cycles.cycle_partition_check(g, kind)
            self._check(matrix, f"distinct {kind.value} cycles", instance, d, lambda: report['count'])
            self._check(matrix, f"{kind.value} cycle length", instance, [2 * r * s // d], lambda: report['lengths'])
            self._check(matrix, f"{kind.value} cycles partition V", instance, True, lambda: report['vertex_partition'])
            self._check(matrix, f"{kind.value} cycles partition E_{kind.value[0]}", instance, True,
                        lambda: report['edge_partition'])
            self._check(
                matrix, f"{kind.value} revolutions", instance, [(s // d, r // d)],
                lambda: sorted({self.cycles.revolutions(g, c) for c in self.cycles.distinct_cycles(g, kind)}),
            )
            self._check(matrix, f"{kind.value} path family partitions", instance,
                        {'vertices': True, 'edges': True}, lambda: self.cycles.path_family_partitions(g, kind))

    def _section_quotient(self, g, instance, matrix):
        r, s = g.params.r, g.params.s
        self._check(matrix, 'acute quotient components', instance, gcd(r, s),
                    lambda: len(self.torus.quotient_components(g)))

        jump = r % s
        if jump and 2 * jump != s:
            self._check(matrix, f"acute quotient is C_{s}({jump})", instance, True,
                        lambda: self.torus.quotient_isomorphism(g)['isomorphic'])

    def _section_metric(self, g, instance, matrix):
        r, s = g.params.r, g.params.s
        self._check(matrix, 'diameter = max(r,s)', instance, max(r, s), lambda: self.metric.diameter(g))
        self._check(matrix, f"ring torus C{2 * r}□C{2 * s} diameter", instance, r + s,
                    lambda: self.metric.ring_torus_diameter(2 * r, 2 * s))
        self._check(matrix, 'distance closed form matches BFS', instance, True,
                    lambda: all(self.metric.distance(g, g.vertices[0], v) == dist
                                for v, dist in self.metric.bfs_distances(g, g.vertices[0]).dist.items()))
        self._check(matrix, 'vertex-transitive distance profile', instance, True,
                    lambda: self.metric.is_vertex_transitive_profile(g))
        self._check(matrix, 'maximal isometric paths of lengths r and s', instance, True,
                    lambda: {r, s} <= self.metric.maximal_isometric_path_samples(g))
        if r != s:
            self._check(matrix, 'uniform geodesic', instance, False, lambda: self.metric.is_uniform_geodesic(g))

        if r < s:
            # (r mod 2, r) sits at distance exactly r from the origin
            def classified():
                return self.metric.classify_pair(g, VtVertex(0, 0), VtVertex(r % 2, r))

            claimed = PairTag.DIST_EQUALS_R.claimed_path_count
            self._experiment(matrix, 'isometric paths at distance r', instance, claimed,
                             lambda: classified().isometric_path_count)
            self._experiment(matrix, 'two-phase paths at distance r', instance, claimed,
                             lambda: classified().two_phase_count)

        isometric = s % r == 0 or r % s == 0
        table = self.metric.distance_table(g)
        for kind in EdgeKind:
            cycle = self.cycles.diagonal_cycle(g, (0, 0), kind)
            self._check(matrix, f"{kind.value} cycle isometric", instance, isometric,
                        lambda: self.metric.is_isometric_subgraph(g, cycle.vertices, cycle.edge_pairs()))
            self._check(matrix, f"{kind.value} cycle convex", instance, False,
                        lambda: self.metric.is_convex_cycle(g, cycle.vertices, table))

    def _section_convexity(self, g, instance, matrix):
        limit = get_setting('VT_MAX_EXHAUSTIVE_VERTICES')
        if g.order > limit:
            logger.info(f"Skipping exhaustive convexity scans on {instance}: {g.order} vertices > {limit}")
            skipped = f"skipped ({g.order} > {limit})"
            self._experiment(matrix, 'convex cycles have 4 vertices', instance, True, lambda: skipped)
            self._experiment(matrix, 'convex edgecut', instance, None, lambda: skipped)
            return

        self._check(matrix, 'convex cycles have 4 vertices', instance, True,
                    lambda: all(len(c) == 4 for c in self.metric.find_convex_cycles(g, g.order)))
        self._check(matrix, 'convex edgecut', instance, None, lambda: self.metric.find_convex_edgecut(g))

        ring = self.metric.ring_torus(4, 6)
        self._check(matrix, 'convex edgecut', 'C4□C6', True,
                    lambda: self.metric.find_convex_edgecut(ring) is not None)
        self._check(matrix, 'uniform geodesic', 'C4□C6', True, lambda: self.metric.is_uniform_geodesic(ring))

    def _section_cuts(self, g, instance, matrix):
        wiener = self.cuts.wiener_brute(g).value
        shortest = self.routing.shortest_routing(g)
        randomized = self.cuts.random_routing(g, self._seed, shortest=False)

        for axis in Axis:
            part = self.cuts.band_edgecut_partition(g, axis)
            expected_cuts = g.params.s if axis is Axis.Y else g.params.r
            self._check(matrix, f"{axis.value} band cuts", instance, expected_cuts, lambda: len(part))
            self._check(matrix, f"{axis.value} band cuts are edgecuts", instance, True,
                        lambda: all(self.cuts.is_edgecut(g, cut.edges) is not None for cut in part.cuts))
            self._check(matrix, f"{axis.value} ledger = Σ|P| (shortest)", instance, wiener,
                        lambda: self.cuts.sum_paths_ledger(g, shortest, part).grand_total)
            self._check(matrix, f"{axis.value} ledger = Σ|P| (random simple)", instance, randomized.total_length(),
                        lambda: self.cuts.sum_paths_ledger(g, randomized, part).grand_total)
            self._check(matrix, f"{axis.value} Wiener via cuts", instance, wiener,
                        lambda: self.cuts.wiener_via_cuts(g, part).value)

    def _section_routing(self, g, instance, matrix):
        wiener = self.cuts.wiener_brute(g).value
        bound = self.routing.optimal_congestion_bound(g)
        self._check(matrix, 'congestion bound x |E| = Wiener', instance, wiener, lambda: bound * g.size)

        lower = self.routing.congestion_lower_bound(g)
        shortest = self.routing.congestion_profile(g, self.routing.shortest_routing(g))
        self._check(matrix, 'shortest routing max ≥ ⌈Wiener/|E|⌉', instance, True, lambda: shortest.maximum >= lower)

        translation = self.routing.congestion_profile(g, self.routing.translation_routing(g))
        self._check(matrix, 'translation routing conserves Wiener', instance, wiener, lambda: translation.total)

        def equivariant():
            loads = self.routing.class_loads(g)
            return all(
                loads[g.edge_between(g.translate(e.u, shift), g.translate(e.v, shift))] == load
                for shift in g.vertices for e, load in loads.items()
            )

        self._check(matrix, 'translation loads equivariant', instance, True, equivariant)

        _, searched = self.routing.search_balanced_routing(g, self._budget, self._seed)
        self._check(matrix, 'search never increases gap', instance, True, lambda: searched.gap <= translation.gap)
        self._experiment(matrix, 'balance gap', instance, 0, lambda: searched.gap)
        self._experiment(matrix, 'max congestion found', instance, lower, lambda: searched.maximum)
