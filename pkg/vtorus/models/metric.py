from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Hashable, List, Optional, Tuple


def _plain(vertex):
    return list(vertex) if isinstance(vertex, tuple) else vertex


@dataclass(frozen=True)
class DistanceField:
    """Exact single-source distances"""

    source: Hashable
    dist: Dict[Hashable, int]

    def __getitem__(self, vertex):
        return self.dist[tuple(vertex)] if isinstance(vertex, list) else self.dist[vertex]

    def __len__(self):
        return len(self.dist)

    @property
    def eccentricity(self):
        return max(self.dist.values())

    def profile(self):
        """Multiset of distances as {distance: count}"""
        return dict(sorted(Counter(self.dist.values()).items()))

    def total(self):
        return sum(self.dist.values())


class PairTag(str, Enum):
    PURE_ACUTE_LINE = 'PureAcuteLine'
    PURE_OBTUSE_LINE = 'PureObtuseLine'
    GENERIC = 'Generic'
    DIST_EQUALS_R = 'DistEqualsR'
    DIST_EQUALS_S = 'DistEqualsS'

    @property
    def claimed_path_count(self):
        """Isometric path count the case analysis claims for this tag"""
        if self in (PairTag.PURE_ACUTE_LINE, PairTag.PURE_OBTUSE_LINE):
            return 1
        if self is PairTag.GENERIC:
            return 2
        return 4


@dataclass(frozen=True)
class PairClass:
    tag: PairTag
    distance: int
    isometric_path_count: int
    paths: List[Tuple] = field(repr=False)
    two_phase_count: int = 0

    @property
    def claimed_path_count(self):
        return self.tag.claimed_path_count

    @property
    def claim_holds(self):
        """Whether the enumerated count matches the claimed count"""
        return self.isometric_path_count == self.claimed_path_count

    @property
    def two_phase_claim_holds(self):
        """Same check counting only acute-then-obtuse / obtuse-then-acute paths"""
        return self.two_phase_count == self.claimed_path_count

    def to_dict(self):
        return {
            'tag': self.tag.value,
            'distance': self.distance,
            'isometric_path_count': self.isometric_path_count,
            'two_phase_count': self.two_phase_count,
            'claimed_path_count': self.claimed_path_count,
            'claim_holds': self.claim_holds,
        }


@dataclass(frozen=True)
class ConvexityVerdict:
    convex: bool
    witness: Optional[Tuple[Hashable, Hashable, Tuple]] = None

    def __post_init__(self):
        if self.convex == (self.witness is not None):
            raise ValueError('a non-convex verdict needs a witness and a convex one must not have one')

    @property
    def witness_pair(self):
        return None if self.witness is None else (self.witness[0], self.witness[1])

    @property
    def witness_path(self):
        return None if self.witness is None else self.witness[2]

    def to_dict(self):
        data = {'convex': self.convex}
        if self.witness is not None:
            x, y, path = self.witness
            data['witness'] = {'x': _plain(x), 'y': _plain(y), 'path': [_plain(v) for v in path]}
        return data
