from dataclasses import dataclass
from math import gcd
from typing import Tuple

from vtorus.models.torus import EdgeKind, VtVertex
from vtorus.utils.errors import InvalidPath


@dataclass(frozen=True)
class DiagonalPath:
    """
    Path repeating one diagonal step (AP when acute, OP when obtuse).

    A path whose last vertex equals its first is closed; apart from that
    closing repetition no vertex appears twice.
    """

    vertices: Tuple[VtVertex, ...]
    purity: EdgeKind

    def __post_init__(self):
        body = self.vertices[:-1] if self.closed else self.vertices
        if len(set(body)) != len(body):
            raise InvalidPath('diagonal path repeats a vertex', purity=self.purity.value)

    @property
    def closed(self):
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self):
        """Number of edges"""
        return len(self.vertices) - 1

    def edge_pairs(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def to_dict(self):
        return {
            'purity': self.purity.value,
            'closed': self.closed,
            'vertices': [list(v) for v in self.vertices],
        }


@dataclass(frozen=True)
class DiagonalCycle:
    """
    Cycle repeating one diagonal step (AC / OC).

    Stored in canonical form: it starts at its lexicographically smallest
    vertex and proceeds in the +1 direction of the first coordinate, so two
    cycles are equal iff they have the same vertex set.
    """

    vertices: Tuple[VtVertex, ...]
    purity: EdgeKind

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise InvalidPath('a cycle needs at least 3 vertices', length=len(self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPath('cycle repeats a vertex', purity=self.purity.value)

    def __len__(self):
        return len(self.vertices)

    @property
    def vertex_set(self):
        return frozenset(self.vertices)

    def edge_pairs(self):
        """Consecutive pairs including the closing one"""
        return list(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))

    def to_dict(self):
        return {
            'purity': self.purity.value,
            'length': len(self),
            'vertices': [list(v) for v in self.vertices],
        }


@dataclass(frozen=True)
class HelixSignature:
    """d = gcd(r,s), p = r/d toroidal revolutions, q = s/d poloidal revolutions"""

    d: int
    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} must be coprime")

    @classmethod
    def of(cls, r, s):
        d = gcd(r, s)
        return cls(d=d, p=r // d, q=s // d)

    def to_dict(self):
        return {'d': self.d, 'p': self.p, 'q': self.q}
