from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional

from vtorus.models.torus import VtEdge


class Axis(str, Enum):
    X = 'x'
    Y = 'y'


@dataclass(frozen=True)
class Edgecut:
    """(U,W) split of V together with every edge joining the two sides"""

    edges: FrozenSet[VtEdge]
    side_u: FrozenSet
    side_w: FrozenSet

    def side_of(self, vertex):
        return 'U' if vertex in self.side_u else 'W'

    def separates(self, x, y):
        return (x in self.side_u) != (y in self.side_u)

    def crossings(self, path_edges):
        """|E_i ∩ P|"""
        return sum(1 for edge in path_edges if edge in self.edges)

    def to_dict(self):
        return {
            'edges': [edge.to_dict() for edge in sorted(self.edges)],
            'U': sorted(list(v) for v in self.side_u),
            'W': sorted(list(v) for v in self.side_w),
        }


@dataclass(frozen=True)
class EdgecutPartition:
    cuts: List[Edgecut]
    axis: Axis

    def __len__(self):
        return len(self.cuts)


@dataclass
class LedgerEntry:
    cut_index: int
    k_uw: int = 0
    k_u: int = 0
    k_w: int = 0

    @property
    def total(self):
        return self.k_uw + self.k_u + self.k_w

    def merge(self, other):
        self.k_uw += other.k_uw
        self.k_u += other.k_u
        self.k_w += other.k_w
        return self

    def to_dict(self):
        return {
            'cut': self.cut_index,
            'k_uw': self.k_uw,
            'k_u': self.k_u,
            'k_w': self.k_w,
            'total': self.total,
        }


@dataclass
class SumPathsLedger:
    entries: List[LedgerEntry]
    path_length_total: int

    @property
    def grand_total(self):
        return sum(entry.total for entry in self.entries)

    @property
    def balanced(self):
        """True iff the ledger reproduces the sum of path lengths"""
        return self.grand_total == self.path_length_total

    def to_dict(self):
        return {
            'entries': [entry.to_dict() for entry in self.entries],
            'grand_total': self.grand_total,
            'path_length_total': self.path_length_total,
        }


class WienerMethod(str, Enum):
    BRUTE = 'Brute'
    CUT_DECOMPOSITION = 'CutDecomposition'


@dataclass(frozen=True)
class WienerReport:
    value: int
    method: WienerMethod
    per_cut_contributions: Optional[List[int]] = field(default=None)

    def to_dict(self):
        return {
            'value': self.value,
            'method': self.method.value,
            'per_cut_contributions': self.per_cut_contributions,
        }
