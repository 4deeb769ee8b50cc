from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from vtorus.models.torus import VtEdge, VtVertex
from vtorus.utils.errors import InvalidPath


def pair_key(x, y):
    """Unordered pair as a sorted tuple"""
    x, y = VtVertex(*x), VtVertex(*y)
    return (x, y) if x <= y else (y, x)


class Routing:
    """
    A set of paths, at most one per unordered vertex pair.

    With |V|(|V|-1)/2 paths it is a routing in the full sense; partial path
    sets are accepted so congestion can be measured on any collection.
    Every path is stored oriented from the smaller endpoint to the larger.
    """

    def __init__(self, paths: Dict[Tuple[VtVertex, VtVertex], Tuple[VtVertex, ...]] = None):
        self.paths: Dict[Tuple[VtVertex, VtVertex], Tuple[VtVertex, ...]] = {}
        for path in (paths or {}).values():
            self.add(path)

    @classmethod
    def from_paths(cls, paths: Iterable):
        routing = cls()
        for path in paths:
            routing.add(path)
        return routing

    def add(self, path):
        path = tuple(VtVertex(*v) for v in path)
        if len(path) < 2:
            raise InvalidPath('a routed path needs two distinct endpoints', length=len(path))
        if len(set(path)) != len(path):
            raise InvalidPath('routed paths must be simple', start=path[0], end=path[-1])
        key = pair_key(path[0], path[-1])
        if path[0] != key[0]:
            path = tuple(reversed(path))
        self.paths[key] = path

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths.values())

    def path(self, x, y):
        return self.paths[pair_key(x, y)]

    def is_complete(self, g):
        return len(self.paths) == g.order * (g.order - 1) // 2

    def total_length(self):
        return sum(len(path) - 1 for path in self.paths.values())

    def validate(self, g):
        """Raise InvalidPath unless every path walks along edges of g"""
        for path in self.paths.values():
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise InvalidPath(f"{tuple(a)}-{tuple(b)} is not an edge", path_start=path[0])
        return True


@dataclass(frozen=True)
class CongestionProfile:
    """Per-edge path counts Π(G,C,e) with min, max and exact mean"""

    per_edge: Dict[VtEdge, int] = field(repr=False)
    minimum: int
    maximum: int
    mean: Fraction

    @classmethod
    def from_loads(cls, per_edge):
        loads = list(per_edge.values())
        return cls(
            per_edge=dict(per_edge),
            minimum=min(loads),
            maximum=max(loads),
            mean=Fraction(sum(loads), len(loads)),
        )

    @property
    def balanced(self):
        return self.minimum == self.maximum

    @property
    def gap(self):
        return self.maximum - self.minimum

    @property
    def total(self):
        return sum(self.per_edge.values())

    def to_rows(self):
        """One record per edge, canonical edge order"""
        return [
            {
                'u': edge.u.label(),
                'v': edge.v.label(),
                'kind': edge.kind.value,
                'congestion': load,
            }
            for edge, load in sorted(self.per_edge.items())
        ]

    def to_dict(self):
        return {
            'min': self.minimum,
            'max': self.maximum,
            'mean': str(self.mean),
            'balanced': self.balanced,
            'gap': self.gap,
            'total': self.total,
        }
