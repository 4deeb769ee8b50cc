"""
Distance engine and convexity laboratory.

Distances are exact BFS distances. Convexity is tested through geodesic
intervals: a set S is convex iff it contains every vertex z with
d(x,z) + d(z,y) = d(x,y) for x, y in S, which is the same as containing
every isometric x,y-path. Exhaustive scans enumerate every convex set by
growing interval closures one neighbor at a time.

Most operations accept either a VtGraph or a plain networkx graph so the
same scans run on control instances such as ring tori.
"""

import logging
from collections import deque
from itertools import combinations, islice
from typing import Dict, FrozenSet, List, Optional, Set

import networkx as nx

from vtorus.models import (
    ConvexityVerdict,
    DistanceField,
    Edgecut,
    PairClass,
    PairTag,
    VtGraph,
)
from vtorus.utils.decorators import exhaustive_guard
from vtorus.utils.errors import CapExceeded, DisconnectedSubgraph, UnknownVertex
from vtorus.utils.parallel import parallel_map
from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)


def as_networkx(graph):
    return graph if isinstance(graph, nx.Graph) else graph.to_networkx()


def require_node(graph, vertex):
    if isinstance(graph, VtGraph):
        return graph.require_vertex(vertex)
    if vertex not in graph:
        raise UnknownVertex(f"{vertex} is not a vertex", vertex=vertex)
    return vertex


def edge_record(graph, u, v):
    """VtEdge for VT graphs, sorted endpoint tuple for plain graphs"""
    if isinstance(graph, VtGraph):
        return graph.edge_between(u, v)
    return (u, v) if u <= v else (v, u)


class MetricService:
    """Distances, isometry and convexity on VT(r,s) and control graphs"""

    def get_config(self):
        return {
            'path_cap': get_setting('VT_PATH_CAP'),
            'exhaustive_limit': get_setting('VT_MAX_EXHAUSTIVE_VERTICES'),
        }

    # Distances

    def bfs_distances(self, g, src) -> DistanceField:
        src = require_node(g, src)
        return DistanceField(src, dict(nx.single_source_shortest_path_length(as_networkx(g), src)))

    def distance(self, g: VtGraph, x, y) -> int:
        """Closed form max(min(|dx|, 2r-|dx|), min(|dy|, 2s-|dy|))"""
        x, y = g.require_vertex(x), g.require_vertex(y)
        mx, my = g.modulus
        dx = (y.x - x.x) % mx
        dy = (y.y - x.y) % my
        return max(min(dx, mx - dx), min(dy, my - dy))

    def distance_table(self, g) -> Dict:
        """All-pairs distances, one BFS per source in the worker pool"""
        nxg = as_networkx(g)
        nodes = list(nxg.nodes())
        rows = parallel_map(lambda src: dict(nx.single_source_shortest_path_length(nxg, src)), nodes)
        return dict(zip(nodes, rows))

    def diameter(self, g) -> int:
        """Maximum eccentricity over every source (full scan)"""
        table = self.distance_table(g)
        return max(max(row.values()) for row in table.values())

    def distance_profile(self, g, src) -> Dict[int, int]:
        return self.bfs_distances(g, src).profile()

    def is_vertex_transitive_profile(self, g) -> bool:
        """Every source sees the same multiset of distances"""
        nodes = list(as_networkx(g).nodes())
        profiles = parallel_map(lambda src: self.distance_profile(g, src), nodes)
        return all(profile == profiles[0] for profile in profiles)

    # Ring torus controls

    def ring_torus(self, r2: int, s2: int) -> nx.Graph:
        """Cartesian product of cycles C_{r2} □ C_{s2}"""
        return nx.cartesian_product(nx.cycle_graph(r2), nx.cycle_graph(s2))

    def ring_torus_diameter(self, r2: int, s2: int) -> int:
        """
        Diameter of C_{r2} □ C_{s2} by BFS; for even lengths it equals
        r2/2 + s2/2.
        """
        if r2 % 2 or s2 % 2 or r2 < 4 or s2 < 4:
            raise ValueError(f"ring torus needs even cycle lengths ≥ 4, got {r2} and {s2}")
        value = self.diameter(self.ring_torus(r2, s2))
        if value != r2 // 2 + s2 // 2:
            logger.warning(f"Ring torus C{r2}□C{s2} diameter {value} differs from {r2 // 2 + s2 // 2}")
        return value

    # Isometric paths

    def all_isometric_paths(self, g, x, y, cap: Optional[int] = None) -> List[tuple]:
        """
        Every shortest x,y-path, walked through the BFS layers between x and y.

        Raises:
            CapExceeded: if there are more than cap paths
        """
        x, y = require_node(g, x), require_node(g, y)
        cap = cap if cap is not None else self.get_config()['path_cap']

        paths = list(islice(nx.all_shortest_paths(as_networkx(g), x, y), cap + 1))
        if len(paths) > cap:
            raise CapExceeded(f"more than {cap} isometric paths between {x} and {y}", cap=cap)
        return sorted(tuple(path) for path in paths)

    def classify_pair(self, g: VtGraph, x, y, cap: Optional[int] = None) -> PairClass:
        """
        Tag a pair with the case split of the isometric-path shape analysis
        and count its isometric paths.

        Tags, first match wins: DistEqualsR (d = r ≠ s), DistEqualsS
        (d = s ≠ r), PureAcuteLine / PureObtuseLine (y is d steps of a single
        kind away from x), Generic.
        """
        x, y = g.require_vertex(x), g.require_vertex(y)
        if x == y:
            raise ValueError('classify_pair needs two distinct vertices')

        r, s = g.params.r, g.params.s
        d = self.distance(g, x, y)

        if d == r and r != s:
            tag = PairTag.DIST_EQUALS_R
        elif d == s and r != s:
            tag = PairTag.DIST_EQUALS_S
        elif y in (g.step(x, d, d), g.step(x, -d, -d)):
            tag = PairTag.PURE_ACUTE_LINE
        elif y in (g.step(x, d, -d), g.step(x, -d, d)):
            tag = PairTag.PURE_OBTUSE_LINE
        else:
            tag = PairTag.GENERIC

        paths = self.all_isometric_paths(g, x, y, cap)
        two_phase = sum(1 for path in paths if self._kind_switches(g, path) <= 1)

        classified = PairClass(
            tag=tag,
            distance=d,
            isometric_path_count=len(paths),
            paths=paths,
            two_phase_count=two_phase,
        )
        if not classified.claim_holds:
            logger.debug(
                f"Pair {tuple(x)}-{tuple(y)} tagged {tag.value}: {len(paths)} isometric paths, "
                f"claimed {classified.claimed_path_count}"
            )
        return classified

    @staticmethod
    def _kind_switches(g: VtGraph, path) -> int:
        kinds = [edge.kind for edge in g.path_edges(path)]
        return sum(1 for a, b in zip(kinds, kinds[1:]) if a is not b)

    # Isometry and convexity

    def is_isometric_subgraph(self, g, vertices, edges=None) -> bool:
        """
        Whether the subgraph on vertices (induced, unless edges are given)
        keeps every pairwise distance of g.

        Raises:
            DisconnectedSubgraph: if the subgraph is not connected
        """
        nxg = as_networkx(g)
        vertices = [require_node(g, v) for v in vertices]
        if edges is None:
            sub = nxg.subgraph(vertices)
        else:
            sub = nx.Graph()
            sub.add_nodes_from(vertices)
            sub.add_edges_from((tuple(u), tuple(v)) for u, v in edges)

        if not nx.is_connected(sub):
            raise DisconnectedSubgraph('subgraph is not connected', vertices=len(vertices))

        for source in vertices:
            inside = nx.single_source_shortest_path_length(sub, source)
            outside = nx.single_source_shortest_path_length(nxg, source)
            if any(inside[target] != outside[target] for target in vertices):
                return False
        return True

    def interval(self, table, x, y) -> Set:
        """Vertices on some geodesic between x and y"""
        dxy = table[x][y]
        return {z for z in table if table[x][z] + table[z][y] == dxy}

    def convex_hull(self, g, vertices, table=None) -> FrozenSet:
        """Smallest convex set containing vertices (interval closure)"""
        table = table if table is not None else self.distance_table(g)
        hull = set(require_node(g, v) for v in vertices)
        pending = list(combinations(sorted(hull), 2))
        while pending:
            x, y = pending.pop()
            for z in self.interval(table, x, y) - hull:
                pending.extend((z, w) for w in hull)
                hull.add(z)
        return frozenset(hull)

    def is_convex(self, g, vertices, table=None) -> ConvexityVerdict:
        """
        Convexity verdict; when not convex the witness is the first pair
        (in sorted order) with an isometric path leaving the set.
        """
        members = sorted(set(require_node(g, v) for v in vertices))
        if not members:
            raise ValueError('convexity needs a nonempty vertex set')

        table = table if table is not None else self.distance_table(g)
        member_set = set(members)
        for x, y in combinations(members, 2):
            escaping = sorted(self.interval(table, x, y) - member_set)
            if escaping:
                nxg = as_networkx(g)
                z = escaping[0]
                path = nx.shortest_path(nxg, x, z) + nx.shortest_path(nxg, z, y)[1:]
                return ConvexityVerdict(False, (x, y, tuple(path)))

        if len(members) > 1 and not nx.is_connected(as_networkx(g).subgraph(members)):
            raise DisconnectedSubgraph('a convex set of a connected graph must be connected')
        return ConvexityVerdict(True)

    def is_convex_cycle(self, g, vertices, table=None) -> bool:
        """
        Whether the cycle through vertices (in order) is a convex subgraph:
        isometric, chordless, and with a convex vertex set. A cycle covering
        every vertex has a convex vertex set but is never a convex subgraph.
        """
        order = [require_node(g, v) for v in vertices]
        if len(order) < 3 or len(set(order)) != len(order):
            return False

        ring = list(zip(order, order[1:] + order[:1]))
        if not self.is_isometric_subgraph(g, order, ring):
            return False
        if as_networkx(g).subgraph(order).number_of_edges() != len(order):
            return False
        return self.is_convex(g, order, table).convex

    @exhaustive_guard
    def enumerate_convex_sets(self, g) -> List[FrozenSet]:
        """
        Every nonempty convex vertex set.

        Convex sets are connected, so each one is reached from a single
        vertex by repeatedly adding a neighbor and closing under intervals.
        """
        nxg = as_networkx(g)
        table = self.distance_table(g)
        seen = set()
        queue = deque()
        for vertex in nxg.nodes():
            start = frozenset([vertex])
            seen.add(start)
            queue.append(start)

        while queue:
            current = queue.popleft()
            boundary = {n for v in current for n in nxg.neighbors(v)} - current
            for vertex in boundary:
                grown = self.convex_hull(g, current | {vertex}, table)
                if grown not in seen:
                    seen.add(grown)
                    queue.append(grown)

        logger.info(f"Enumerated {len(seen)} convex sets on {nxg.number_of_nodes()} vertices")
        return sorted(seen, key=lambda c: (len(c), sorted(c)))

    @exhaustive_guard
    def find_convex_cycles(self, g, max_vertices: int) -> List[tuple]:
        """
        Every convex vertex set of at most max_vertices vertices whose
        induced subgraph is a cycle, returned in cycle order from its
        smallest vertex.
        """
        nxg = as_networkx(g)
        cycles = []
        for candidate in self.enumerate_convex_sets(g, allow_large=True):
            if not 3 <= len(candidate) <= max_vertices:
                continue
            induced = nxg.subgraph(candidate)
            if all(deg == 2 for _, deg in induced.degree()) and nx.is_connected(induced):
                cycles.append(self._cycle_order(induced))
        return cycles

    @staticmethod
    def _cycle_order(induced):
        start = min(induced.nodes())
        order = [start]
        previous, current = None, start
        while True:
            step = min(n for n in induced.neighbors(current) if n != previous)
            if step == start:
                break
            order.append(step)
            previous, current = current, step
        return tuple(order)

    @exhaustive_guard
    def find_convex_edgecut(self, g) -> Optional[Edgecut]:
        """
        First (U,W)-edgecut whose sides are both connected and convex, or None.

        Every convex side is enumerated, so None means no convex edgecut
        exists at all.
        """
        nxg = as_networkx(g)
        everything = frozenset(nxg.nodes())
        table = self.distance_table(g)

        for side in self.enumerate_convex_sets(g, allow_large=True):
            if side == everything:
                continue
            other = everything - side
            if self.convex_hull(g, other, table) != other:
                continue
            if not (nx.is_connected(nxg.subgraph(side)) and nx.is_connected(nxg.subgraph(other))):
                continue
            crossing = frozenset(
                edge_record(g, u, v) for u, v in nxg.edges() if (u in side) != (v in side)
            )
            logger.info(f"Convex edgecut found with sides of {len(side)} and {len(other)} vertices")
            return Edgecut(crossing, side, other)

        return None

    # Maximal isometric paths

    def maximal_isometric_path_examples(self, g, table=None) -> Dict[int, tuple]:
        """
        One maximal isometric path per length that occurs.

        A shortest x,y-path extends at y exactly when y has a neighbor
        farther from x, and at x exactly when x has a neighbor farther from
        y, so maximality depends only on the endpoints.
        """
        nxg = as_networkx(g)
        table = table if table is not None else self.distance_table(g)

        def is_far_end(src, end):
            reach = table[src][end]
            return all(table[src][n] <= reach for n in nxg.neighbors(end))

        examples = {}
        for x in sorted(table):
            for y in sorted(table[x]):
                length = table[x][y]
                if length == 0 or length in examples:
                    continue
                if is_far_end(x, y) and is_far_end(y, x):
                    examples[length] = tuple(nx.shortest_path(nxg, x, y))
        return dict(sorted(examples.items()))

    def maximal_isometric_path_samples(self, g) -> Set[int]:
        """
        Lengths of maximal (non-extendable) isometric paths.

        Not size-guarded: the scan reads only the all-pairs distance table,
        so it never raises InstanceTooLarge and runs on every instance the
        report verifies.
        """
        return set(self.maximal_isometric_path_examples(g))

    def is_uniform_geodesic(self, g) -> bool:
        """All maximal isometric paths have length diam(g)"""
        table = self.distance_table(g)
        lengths = set(self.maximal_isometric_path_examples(g, table))
        return lengths == {max(max(row.values()) for row in table.values())}
