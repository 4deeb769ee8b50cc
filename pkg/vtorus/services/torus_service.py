"""
Construction of VT(r,s) and circulant graphs, residue partitions and the
acute-quotient reduction that turns VT(r,s) into a circulant graph.
"""

import logging
from math import gcd
from typing import Dict, List, Tuple

import networkx as nx

from vtorus.models import CirculantGraph, EdgeKind, TorusParams, VtGraph, VtVertex
from vtorus.utils.errors import DegenerateJump, InvalidPath

logger = logging.getLogger(__name__)


class TorusService:
    """Builders and structural checks for VT(r,s) and C_b(a)"""

    def build_vt(self, params: TorusParams) -> VtGraph:
        """
        Build VT(r,s).

        Args:
            params: Validated toroidal/poloidal parameters

        Returns:
            VtGraph: 2rs vertices, 4rs edges, row-major vertex order
        """
        graph = VtGraph(params)
        logger.debug(f"Built {graph!r}: {graph.order} vertices, {graph.size} edges")
        return graph

    def structure_summary(self, g: VtGraph) -> Dict:
        """Counts and global properties checked by the structure claims"""
        nxg = g.to_networkx()
        degrees = {deg for _, deg in nxg.degree()}
        splits = set()
        for vertex in g.vertices:
            kinds = [kind for _, kind in g.neighbors(vertex)]
            splits.add((kinds.count(EdgeKind.ACUTE), kinds.count(EdgeKind.OBTUSE)))

        even = {v for v in g.vertices if v.is_even}
        bipartite = nx.is_bipartite(nxg) and all(
            (u in even) != (v in even) for u, v in nxg.edges()
        )

        return {
            'vertices': g.order,
            'edges': g.size,
            'acute_edges': len(g.edges(EdgeKind.ACUTE)),
            'obtuse_edges': len(g.edges(EdgeKind.OBTUSE)),
            'degrees': sorted(degrees),
            'kind_splits': sorted(splits),
            'connected': nx.is_connected(nxg),
            'bipartite': bipartite,
        }

    def build_circulant(self, b: int, a: int) -> CirculantGraph:
        return CirculantGraph(b, a)

    def residue_partition(self, a: int, b: int) -> List[Tuple[int, ...]]:
        """
        Classes {j, j+a, ..., j+(q-1)a} mod b for j = 0..d-1, with
        d = gcd(a,b) and q = b/d.
        """
        if not 1 <= a < b:
            raise ValueError(f"residue partition needs 1 ≤ a < b, got a={a}, b={b}")
        d = gcd(a, b)
        q = b // d
        return [tuple((j + i * a) % b for i in range(q)) for j in range(d)]

    def circulant_cycle_partition(self, c: CirculantGraph) -> List[Tuple[int, ...]]:
        """
        Component cycles of C_b(a), each walked from its smallest vertex.

        Every returned cycle is checked to be isometric in C_b(a).
        """
        nxg = c.to_networkx()
        cycles = []
        seen = set()
        for start in range(c.b):
            if start in seen:
                continue
            cycle = [start]
            current = (start + c.a) % c.b
            while current != start:
                cycle.append(current)
                current = (current + c.a) % c.b
            seen.update(cycle)
            cycles.append(tuple(cycle))

        for cycle in cycles:
            if not self._cycle_is_isometric(nxg, cycle):
                raise InvalidPath(f"component cycle {cycle} of {c!r} is not isometric")

        logger.debug(f"{c!r} splits into {len(cycles)} cycles of length {len(cycles[0])}")
        return cycles

    @staticmethod
    def _cycle_is_isometric(nxg, cycle):
        n = len(cycle)
        position = {vertex: i for i, vertex in enumerate(cycle)}
        for source in cycle:
            lengths = nx.single_source_shortest_path_length(nxg, source)
            for target in cycle:
                delta = abs(position[source] - position[target])
                if lengths[target] != min(delta, n - delta):
                    return False
        return True

    # Acute quotient

    def _contracted_jump(self, g: VtGraph):
        return g.params.r % g.params.s

    def acute_quotient(self, g: VtGraph) -> CirculantGraph:
        """
        Delete obtuse edges, contract each AP(0,2k) to the edge
        (0,2k)-(0,2k+2r) and relabel (0,2k) as k.

        Raises:
            DegenerateJump: when the contracted jump is 0 or s/2 (loops or
                doubled edges); use quotient_components for those cases
        """
        s = g.params.s
        jump = self._contracted_jump(g)
        if jump == 0 or 2 * jump == s:
            raise DegenerateJump(
                f"acute quotient of VT({g.params.r},{s}) has jump {jump} on {s} vertices",
                r=g.params.r, s=s, jump=jump,
            )
        quotient = CirculantGraph(s, jump)
        logger.debug(f"Acute quotient of {g!r} is {quotient!r}")
        return quotient

    def quotient_multigraph(self, g: VtGraph) -> nx.MultiGraph:
        """The contraction as a multigraph, loops and parallel edges kept"""
        r, s = g.params.r, g.params.s
        quotient = nx.MultiGraph()
        quotient.add_nodes_from(range(s))
        for k in range(s):
            start = VtVertex(0, 2 * k)
            end = g.step(start, 2 * r, 2 * r)
            # the contracted edge stands for the acute path AP(0,2k)
            quotient.add_edge(k, end.y // 2)
        return quotient

    def quotient_components(self, g: VtGraph) -> List[frozenset]:
        """Connected components of the contraction, sorted by smallest label"""
        components = nx.connected_components(self.quotient_multigraph(g))
        return sorted((frozenset(c) for c in components), key=min)

    def quotient_isomorphism(self, g: VtGraph) -> Dict:
        """
        Explicit mapping (0,2k) -> k and the check that the contracted graph
        is C_s(r mod s) edge for edge.
        """
        quotient = self.acute_quotient(g)
        mapping = {VtVertex(0, 2 * k): k for k in range(g.params.s)}
        contracted = {frozenset(e) for e in self.quotient_multigraph(g).edges()}
        circulant = {frozenset(e) for e in quotient.edges()}
        return {
            'mapping': mapping,
            'circulant': quotient,
            'isomorphic': contracted == circulant
            and nx.is_isomorphic(nx.Graph(self.quotient_multigraph(g)), quotient.to_networkx()),
        }
