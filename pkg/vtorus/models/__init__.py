from .torus import EdgeKind, TorusParams, VtVertex, VtEdge, VtGraph, CirculantGraph, NEIGHBOR_OFFSETS
from .diagonal import DiagonalPath, DiagonalCycle, HelixSignature
from .metric import DistanceField, PairTag, PairClass, ConvexityVerdict
from .cut import Axis, Edgecut, EdgecutPartition, LedgerEntry, SumPathsLedger, WienerMethod, WienerReport
from .routing import Routing, CongestionProfile, pair_key
from .verification import CheckStatus, VerificationRow, VerificationMatrix
from .verification_run import VerificationRun, VerificationRecord

__all__ = [
    'EdgeKind',
    'TorusParams',
    'VtVertex',
    'VtEdge',
    'VtGraph',
    'CirculantGraph',
    'NEIGHBOR_OFFSETS',
    'DiagonalPath',
    'DiagonalCycle',
    'HelixSignature',
    'DistanceField',
    'PairTag',
    'PairClass',
    'ConvexityVerdict',
    'Axis',
    'Edgecut',
    'EdgecutPartition',
    'LedgerEntry',
    'SumPathsLedger',
    'WienerMethod',
    'WienerReport',
    'Routing',
    'CongestionProfile',
    'pair_key',
    'CheckStatus',
    'VerificationRow',
    'VerificationMatrix',
    'VerificationRun',
    'VerificationRecord',
]
