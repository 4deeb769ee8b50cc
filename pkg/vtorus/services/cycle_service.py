"""
Acute/obtuse paths and cycles of VT(r,s): the AP/OP path families, the
AC/OC helices, their gcd partition of V and E_a / E_o, and revolution
counts against rows and columns.
"""

import logging
from collections import Counter
from math import gcd
from typing import Dict, List, Tuple

from vtorus.models import DiagonalCycle, DiagonalPath, EdgeKind, HelixSignature, TorusParams, VtGraph, VtVertex
from vtorus.utils.errors import InvalidPath, NonUniformIntersection

logger = logging.getLogger(__name__)


class CycleService:
    """Diagonal path and cycle families"""

    # Paths

    def diagonal_path(self, g: VtGraph, start, kind: EdgeKind) -> DiagonalPath:
        """2r steps of one kind from start; ends at start + (0, ±2r)"""
        start = g.require_vertex(start)
        dx, dy = kind.step()
        vertices = [start]
        for _ in range(2 * g.params.r):
            vertices.append(g.step(vertices[-1], dx, dy))
        return DiagonalPath(tuple(vertices), kind)

    def acute_path(self, g: VtGraph, start) -> DiagonalPath:
        return self.diagonal_path(g, start, EdgeKind.ACUTE)

    def obtuse_path(self, g: VtGraph, start) -> DiagonalPath:
        return self.diagonal_path(g, start, EdgeKind.OBTUSE)

    def path_family(self, g: VtGraph, kind: EdgeKind) -> List[DiagonalPath]:
        """The s translates AP(0,2k) (or OP(0,2k)), k = 0..s-1"""
        return [self.diagonal_path(g, VtVertex(0, 2 * k), kind) for k in range(g.params.s)]

    def acute_path_family(self, g: VtGraph) -> List[DiagonalPath]:
        return self.path_family(g, EdgeKind.ACUTE)

    def obtuse_path_family(self, g: VtGraph) -> List[DiagonalPath]:
        return self.path_family(g, EdgeKind.OBTUSE)

    def path_family_partitions(self, g: VtGraph, kind: EdgeKind) -> Dict:
        """
        Whether the family partitions V and the edges of its kind.

        Paths share their endpoints (the end of AP(0,2k) is the start of
        AP(0,2k+2r)), so vertices are counted without the final vertex of
        each path.
        """
        family = self.path_family(g, kind)
        vertex_counts = Counter(v for path in family for v in path.vertices[:-1])
        edge_counts = Counter(
            g.edge_between(a, b) for path in family for a, b in path.edge_pairs()
        )
        return {
            'vertices': set(vertex_counts) == set(g.vertices) and set(vertex_counts.values()) == {1},
            'edges': set(edge_counts) == set(g.edges(kind)) and set(edge_counts.values()) == {1},
        }

    # Cycles

    def diagonal_cycle(self, g: VtGraph, start, kind: EdgeKind) -> DiagonalCycle:
        """
        Walk one kind of step from start until the first return.

        The walk is unique: every vertex has exactly two edges of each kind.
        """
        start = g.require_vertex(start)
        dx, dy = kind.step()
        walk = [start]
        current = g.step(start, dx, dy)
        while current != start:
            walk.append(current)
            current = g.step(current, dx, dy)

        expected = 2 * g.params.r * g.params.s // gcd(g.params.r, g.params.s)
        if len(walk) != expected:
            raise InvalidPath(
                f"{kind.value} cycle through {tuple(start)} has {len(walk)} vertices, expected {expected}"
            )

        # rotate to the smallest vertex; direction stays +1 in x
        pivot = walk.index(min(walk))
        return DiagonalCycle(tuple(walk[pivot:] + walk[:pivot]), kind)

    def acute_cycle(self, g: VtGraph, start) -> DiagonalCycle:
        return self.diagonal_cycle(g, start, EdgeKind.ACUTE)

    def obtuse_cycle(self, g: VtGraph, start) -> DiagonalCycle:
        return self.diagonal_cycle(g, start, EdgeKind.OBTUSE)

    def cycle_through(self, g: VtGraph, vertex, kind: EdgeKind) -> DiagonalCycle:
        """Canonical cycle of the given kind containing vertex"""
        return self.diagonal_cycle(g, vertex, kind)

    def distinct_cycles(self, g: VtGraph, kind: EdgeKind) -> List[DiagonalCycle]:
        """AC(0,2k) (or OC(0,2k)) for k = 0..s-1 with duplicates removed"""
        cycles = []
        for k in range(g.params.s):
            cycle = self.diagonal_cycle(g, VtVertex(0, 2 * k), kind)
            if cycle not in cycles:
                cycles.append(cycle)
        logger.debug(f"{g!r} has {len(cycles)} distinct {kind.value} cycles")
        return cycles

    def distinct_acute_cycles(self, g: VtGraph) -> List[DiagonalCycle]:
        return self.distinct_cycles(g, EdgeKind.ACUTE)

    def distinct_obtuse_cycles(self, g: VtGraph) -> List[DiagonalCycle]:
        return self.distinct_cycles(g, EdgeKind.OBTUSE)

    def cycle_partition_check(self, g: VtGraph, kind: EdgeKind) -> Dict:
        """Counts and partition verdicts for the distinct cycles of one kind"""
        cycles = self.distinct_cycles(g, kind)
        vertex_counts = Counter(v for cycle in cycles for v in cycle.vertices)
        edge_counts = Counter(
            g.edge_between(a, b) for cycle in cycles for a, b in cycle.edge_pairs()
        )
        return {
            'count': len(cycles),
            'lengths': sorted({len(cycle) for cycle in cycles}),
            'vertex_partition': set(vertex_counts) == set(g.vertices) and set(vertex_counts.values()) == {1},
            'edge_partition': set(edge_counts) == set(g.edges(kind)) and set(edge_counts.values()) == {1},
        }

    # Revolutions

    def revolutions(self, g: VtGraph, c: DiagonalCycle) -> Tuple[int, int]:
        """
        (|c ∩ ROW_i|, |c ∩ COL_j|), checked to be the same for every row and
        every column.

        Raises:
            NonUniformIntersection: if two rows or two columns disagree
        """
        for a, b in c.edge_pairs():
            if g.edge_between(a, b).kind is not c.purity:
                raise InvalidPath(f"edge {tuple(a)}-{tuple(b)} is not {c.purity.value}")

        rows, cols = g.rows_and_cols()
        members = c.vertex_set
        row_counts = {len(row & members) for row in rows}
        col_counts = {len(col & members) for col in cols}

        if len(row_counts) != 1:
            raise NonUniformIntersection('rows meet the cycle unevenly', counts=sorted(row_counts))
        if len(col_counts) != 1:
            raise NonUniformIntersection('columns meet the cycle unevenly', counts=sorted(col_counts))

        return row_counts.pop(), col_counts.pop()

    def helix_signature(self, params: TorusParams) -> HelixSignature:
        return HelixSignature.of(params.r, params.s)
