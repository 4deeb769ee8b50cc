"""
Villarceau torus VT(r,s) and circulant graph C_b(a).

Vertices of VT(r,s) are the pairs (x, y) with x mod 2r, y mod 2s and
x ≡ y (mod 2). Every vertex is joined to the four vertices one diagonal
step away; steps (+1,+1) and (-1,-1) give acute edges, steps (+1,-1) and
(-1,+1) give obtuse edges.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from vtorus.utils.errors import (
    DegenerateJump,
    ParamTooSmall,
    ParityViolation,
    UnknownEdge,
    UnknownVertex,
)


class EdgeKind(str, Enum):
    ACUTE = 'acute'
    OBTUSE = 'obtuse'

    @classmethod
    def of_step(cls, dx, dy):
        """Kind of the diagonal step (dx, dy) with dx, dy in {+1, -1}"""
        return cls.ACUTE if dx == dy else cls.OBTUSE

    def step(self):
        """Forward step of the kind, the one moving +1 in the first coordinate"""
        return (1, 1) if self is EdgeKind.ACUTE else (1, -1)


# Deterministic neighbor order used everywhere (adjacency, routing tie-breaks)
NEIGHBOR_OFFSETS = ((1, 1), (-1, -1), (1, -1), (-1, 1))


@dataclass(frozen=True)
class TorusParams:
    """Toroidal parameter r and poloidal parameter s"""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2:
            raise ParamTooSmall('r and s must be ≥ 2', r=self.r, s=self.s)

    @property
    def larger(self):
        """Which coordinate plays the "larger" role ('r' wins ties)"""
        return 's' if self.s > self.r else 'r'

    def normalized(self):
        """(small, large) regardless of orientation"""
        return (min(self.r, self.s), max(self.r, self.s))

    def to_dict(self):
        return {'r': self.r, 's': self.s}


class VtVertex(NamedTuple):
    x: int
    y: int

    @property
    def is_even(self):
        return self.x % 2 == 0

    def label(self):
        return f"{self.x},{self.y}"


@dataclass(frozen=True, order=True)
class VtEdge:
    """Undirected edge stored with the lexicographically smaller endpoint first"""

    u: VtVertex
    v: VtVertex
    kind: EdgeKind = field(compare=False)

    @classmethod
    def canonical(cls, a, b, kind):
        a, b = VtVertex(*a), VtVertex(*b)
        if b < a:
            a, b = b, a
        return cls(a, b, kind)

    @property
    def key(self):
        return (self.u, self.v)

    def other(self, vertex):
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise UnknownVertex(f"{vertex} is not an endpoint of {self.key}", vertex=vertex)

    def to_dict(self):
        return {'u': list(self.u), 'v': list(self.v), 'kind': self.kind.value}


class VtGraph:
    """
    The 4-regular Villarceau torus graph.

    Instances are immutable after construction; build them with
    TorusService.build_vt.
    """

    def __init__(self, params: TorusParams):
        self.params = params
        self.modulus = (2 * params.r, 2 * params.s)

        mx, my = self.modulus
        self.vertices: Tuple[VtVertex, ...] = tuple(
            VtVertex(x, y) for x in range(mx) for y in range(my) if x % 2 == y % 2
        )
        self._vertex_set = frozenset(self.vertices)

        edges: Dict[Tuple[VtVertex, VtVertex], VtEdge] = {}
        adjacency: Dict[VtVertex, Tuple[Tuple[VtVertex, EdgeKind], ...]] = {}
        for vertex in self.vertices:
            entries = []
            for dx, dy in NEIGHBOR_OFFSETS:
                other = self._wrap(vertex.x + dx, vertex.y + dy)
                kind = EdgeKind.of_step(dx, dy)
                entries.append((other, kind))
                edge = VtEdge.canonical(vertex, other, kind)
                edges.setdefault(edge.key, edge)
            adjacency[vertex] = tuple(entries)

        self._adjacency = adjacency
        self._edges = dict(sorted(edges.items()))

        graph = nx.Graph(params=params.to_dict())
        graph.add_nodes_from(self.vertices)
        for edge in self._edges.values():
            graph.add_edge(edge.u, edge.v, kind=edge.kind.value)
        self._graph = nx.freeze(graph)

    def __repr__(self):
        return f'<VtGraph VT({self.params.r},{self.params.s})>'

    # Size

    @property
    def order(self):
        return len(self.vertices)

    @property
    def size(self):
        return len(self._edges)

    # Vertices

    def _wrap(self, x, y):
        mx, my = self.modulus
        return VtVertex(x % mx, y % my)

    def has_vertex(self, vertex):
        return tuple(vertex) in self._vertex_set

    def require_vertex(self, vertex):
        """Return vertex as a VtVertex or raise UnknownVertex"""
        if not self.has_vertex(vertex):
            raise UnknownVertex(f"{tuple(vertex)} is not a vertex of {self!r}", vertex=tuple(vertex))
        return VtVertex(*vertex)

    def vertex_add(self, p, q):
        """
        Componentwise sum modulo (2r, 2s) of two vertices of the same class.

        Raises:
            ParityViolation: if one operand is even and the other odd
        """
        p, q = self.require_vertex(p), self.require_vertex(q)
        if p.is_even != q.is_even:
            raise ParityViolation(
                f"cannot add even and odd vertices {tuple(p)} + {tuple(q)}", p=tuple(p), q=tuple(q)
            )
        return self._wrap(p.x + q.x, p.y + q.y)

    def vertex_sub(self, p, q):
        """Difference q - p, itself a vertex (the shift taking p to q)"""
        p, q = self.require_vertex(p), self.require_vertex(q)
        return self._wrap(q.x - p.x, q.y - p.y)

    def translate(self, vertex, shift):
        """Image of vertex under the translation automorphism by shift"""
        vertex, shift = self.require_vertex(vertex), self.require_vertex(shift)
        return self._wrap(vertex.x + shift.x, vertex.y + shift.y)

    def negate(self, vertex):
        vertex = self.require_vertex(vertex)
        return self._wrap(-vertex.x, -vertex.y)

    def step(self, vertex, dx, dy):
        return self._wrap(vertex[0] + dx, vertex[1] + dy)

    # Edges

    def neighbors(self, vertex) -> List[Tuple[VtVertex, EdgeKind]]:
        """The four neighbors in the order (+1,+1), (-1,-1), (+1,-1), (-1,+1)"""
        return list(self._adjacency[self.require_vertex(vertex)])

    def incident_edges(self, vertex) -> List[VtEdge]:
        vertex = self.require_vertex(vertex)
        return [self.edge_between(vertex, other) for other, _ in self._adjacency[vertex]]

    def edges(self, kind: Optional[EdgeKind] = None) -> List[VtEdge]:
        """All edges in canonical order, optionally only one kind"""
        if kind is None:
            return list(self._edges.values())
        return [edge for edge in self._edges.values() if edge.kind is kind]

    def has_edge(self, u, v):
        a, b = tuple(u), tuple(v)
        key = (a, b) if a <= b else (b, a)
        return key in self._edges

    def edge_between(self, u, v) -> VtEdge:
        a, b = VtVertex(*u), VtVertex(*v)
        key = (a, b) if a <= b else (b, a)
        try:
            return self._edges[key]
        except KeyError:
            raise UnknownEdge(f"no edge between {tuple(u)} and {tuple(v)}", u=tuple(u), v=tuple(v))

    def require_edge(self, edge):
        """Return the stored VtEdge equal to edge, or raise UnknownEdge"""
        return self.edge_between(edge.u, edge.v) if isinstance(edge, VtEdge) else self.edge_between(*edge)

    def path_edges(self, path) -> List[VtEdge]:
        """Edges traversed by a vertex sequence"""
        return [self.edge_between(a, b) for a, b in zip(path, path[1:])]

    # Rows and columns

    def rows_and_cols(self):
        """
        ROW_i = vertices with first coordinate i (s each, 2r rows) and
        COL_j = vertices with second coordinate j (r each, 2s columns).
        """
        mx, my = self.modulus
        rows = [frozenset(v for v in self.vertices if v.x == i) for i in range(mx)]
        cols = [frozenset(v for v in self.vertices if v.y == j) for j in range(my)]
        return rows, cols

    # Views

    def to_networkx(self):
        """Read-only networkx view; nodes are VtVertex, edges carry kind"""
        return self._graph

    def to_dict(self):
        return {
            'params': self.params.to_dict(),
            'vertices': [list(v) for v in self.vertices],
            'edges': [edge.to_dict() for edge in self._edges.values()],
        }


class CirculantGraph:
    """C_b(a): vertices 0..b-1, edges {i, i+a mod b}"""

    def __init__(self, b, a):
        if b < 3 or not 1 <= a < b or 2 * a == b:
            raise DegenerateJump(
                f"C_{b}({a}) is degenerate: need b ≥ 3, 1 ≤ a < b and 2a ≠ b", b=b, a=a
            )
        self.b = b
        self.a = a
        graph = nx.Graph(b=b, a=a)
        graph.add_nodes_from(range(b))
        graph.add_edges_from((i, (i + a) % b) for i in range(b))
        self._graph = nx.freeze(graph)

    def __repr__(self):
        return f'<CirculantGraph C_{self.b}({self.a})>'

    def edges(self):
        """Edges in generation order, (i, i+a mod b) for i = 0..b-1"""
        return [(i, (i + self.a) % self.b) for i in range(self.b)]

    def to_networkx(self):
        return self._graph

    def to_dict(self):
        return {'b': self.b, 'a': self.a, 'edges': [list(e) for e in self.edges()]}
