"""
Edgecut machinery: antipodal band cuts, congestion accounting, the
sum-of-paths ledger and the Wiener index by brute force and by cuts.
"""

import logging
import random
from collections import Counter
from typing import List, Optional, Tuple

import networkx as nx

from vtorus.models import (
    Axis,
    Edgecut,
    EdgecutPartition,
    LedgerEntry,
    Routing,
    SumPathsLedger,
    VtGraph,
    WienerMethod,
    WienerReport,
)
from vtorus.utils.errors import PartitionMismatch
from vtorus.utils.parallel import parallel_map, worker_count

logger = logging.getLogger(__name__)


class CutService:
    """Edgecut partitions and the cut method for Wiener and congestion sums"""

    # Edgecuts

    def band_edgecut_partition(self, g: VtGraph, axis: Axis) -> EdgecutPartition:
        """
        Antipodal band cuts along one axis.

        Boundary t sits between levels t and t+1. Cut j collects the edges
        crossing boundaries j and j+s (j+r on the X axis); its sides are the
        bands of levels j+1..j+s and j+s+1..j.
        """
        axis = Axis(axis)
        coordinate = 1 if axis is Axis.Y else 0
        half = g.params.s if axis is Axis.Y else g.params.r
        modulus = 2 * half

        def boundary(edge):
            a, b = edge.u[coordinate], edge.v[coordinate]
            return a if (b - a) % modulus == 1 else b

        buckets = {j: set() for j in range(half)}
        for edge in g.edges():
            buckets[boundary(edge) % half].add(edge)

        cuts = []
        for j in range(half):
            band = {(j + 1 + k) % modulus for k in range(half)}
            side_u = frozenset(v for v in g.vertices if v[coordinate] in band)
            side_w = frozenset(g.vertices) - side_u
            cuts.append(Edgecut(frozenset(buckets[j]), side_u, side_w))

        logger.debug(f"{g!r} axis {axis.value}: {len(cuts)} band cuts of {[len(c.edges) for c in cuts]} edges")
        return EdgecutPartition(cuts, axis)

    def is_edgecut(self, g: VtGraph, edges) -> Optional[Tuple[frozenset, frozenset]]:
        """
        Sides (U, W) when removing edges leaves exactly two components and
        edges is the whole crossing set, else None. U holds the smallest vertex.
        """
        removed = {g.require_edge(edge) for edge in edges}
        remaining = nx.Graph()
        remaining.add_nodes_from(g.vertices)
        remaining.add_edges_from(edge.key for edge in g.edges() if edge not in removed)

        components = sorted((frozenset(c) for c in nx.connected_components(remaining)), key=min)
        if len(components) != 2:
            return None

        side_u, side_w = components
        crossing = {edge for edge in g.edges() if (edge.u in side_u) != (edge.v in side_u)}
        if crossing != removed:
            return None
        return side_u, side_w

    def check_partition(self, g: VtGraph, part: EdgecutPartition):
        """Raise PartitionMismatch unless the cuts cover every edge exactly once"""
        counts = Counter(edge for cut in part.cuts for edge in cut.edges)
        missing = set(g.edges()) - set(counts)
        repeated = [edge for edge, count in counts.items() if count > 1]
        if missing or repeated:
            raise PartitionMismatch(
                'edgecuts do not partition the edge set',
                missing=len(missing), repeated=len(repeated),
            )

    # Congestion and the ledger

    def congestion(self, g: VtGraph, routing: Routing, e) -> int:
        """Π(G,C,e): number of routed paths through e"""
        edge = g.require_edge(e)
        return sum(1 for path in routing if edge in g.path_edges(path))

    def sum_paths_ledger(self, g: VtGraph, routing: Routing, part: EdgecutPartition) -> SumPathsLedger:
        """
        Per cut, split the crossings |E_i ∩ P(x,y)| by whether the pair is
        cross (k_uw), inside U (k_u) or inside W (k_w).

        Raises:
            PartitionMismatch: if part is not a partition of E
        """
        self.check_partition(g, part)

        paths = list(routing)
        workers = worker_count()
        chunks = [paths[i::workers] for i in range(workers)]

        def accumulate(chunk):
            entries = [LedgerEntry(i) for i in range(len(part.cuts))]
            for path in chunk:
                edges = g.path_edges(path)
                x, y = path[0], path[-1]
                for entry, cut in zip(entries, part.cuts):
                    crossings = cut.crossings(edges)
                    if cut.separates(x, y):
                        entry.k_uw += crossings
                    elif x in cut.side_u:
                        entry.k_u += crossings
                    else:
                        entry.k_w += crossings
            return entries

        merged = [LedgerEntry(i) for i in range(len(part.cuts))]
        for partial in parallel_map(accumulate, chunks):
            for total, entry in zip(merged, partial):
                total.merge(entry)

        ledger = SumPathsLedger(merged, routing.total_length())
        if not ledger.balanced:
            logger.error(
                f"❌ Ledger for {g!r} totals {ledger.grand_total}, paths total {ledger.path_length_total}"
            )
        return ledger

    # Wiener index

    def wiener_brute(self, g) -> WienerReport:
        """Sum of distances over unordered pairs, BFS from every source"""
        graph = g if isinstance(g, nx.Graph) else g.to_networkx()
        return WienerReport(int(nx.wiener_index(graph)), WienerMethod.BRUTE)

    def wiener_via_cuts(self, g: VtGraph, part: EdgecutPartition) -> WienerReport:
        """Σ_i Π(G,C,E_i) over the canonical shortest routing"""
        from vtorus.services.routing_service import RoutingService

        ledger = self.sum_paths_ledger(g, RoutingService().shortest_routing(g), part)
        return WienerReport(
            ledger.grand_total,
            WienerMethod.CUT_DECOMPOSITION,
            [entry.total for entry in ledger.entries],
        )

    # Supplements

    def edgecut_convexity_witness(self, g: VtGraph, cut: Edgecut):
        """
        A pair on one side joined by an isometric path through the other
        side, as (x, y, path), or None when both sides are convex.
        """
        from vtorus.services.metric_service import MetricService

        metric = MetricService()
        table = metric.distance_table(g)
        for side in (cut.side_u, cut.side_w):
            verdict = metric.is_convex(g, side, table)
            if not verdict.convex:
                return verdict.witness
        return None

    def crossing_parity(self, g: VtGraph, cut: Edgecut, path) -> int:
        """|E_i ∩ P| mod 2; even when both ends are on the same side"""
        return cut.crossings(g.path_edges(path)) % 2

    def random_path(self, g: VtGraph, x, y, rng: random.Random, shortest: bool = True):
        """
        Random x,y-path. Shortest paths pick a random closer neighbor at each
        step; otherwise the walk goes through a random middle vertex and
        loops are erased.
        """
        from vtorus.services.metric_service import MetricService

        metric = MetricService()

        def random_geodesic(a, b):
            walk = [a]
            while walk[-1] != b:
                remaining = metric.distance(g, walk[-1], b)
                closer = [n for n, _ in g.neighbors(walk[-1]) if metric.distance(g, n, b) == remaining - 1]
                walk.append(rng.choice(closer))
            return walk

        if shortest:
            return tuple(random_geodesic(x, y))

        middle = rng.choice(g.vertices)
        walk = random_geodesic(x, middle) + random_geodesic(middle, y)[1:]
        erased: List = []
        for vertex in walk:
            if vertex in erased:
                del erased[erased.index(vertex) + 1:]
            else:
                erased.append(vertex)
        return tuple(erased)

    def random_routing(self, g: VtGraph, seed: int, shortest: bool = True) -> Routing:
        """Complete routing of random shortest (or random simple) paths"""
        rng = random.Random(seed)
        routing = Routing()
        for i, x in enumerate(g.vertices):
            for y in g.vertices[i + 1:]:
                routing.add(self.random_path(g, x, y, rng, shortest))
        return routing
