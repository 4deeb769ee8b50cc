"""
Exception hierarchy for Villarceau torus construction and analysis.

Every error raised by the library derives from VtError so callers (and the
CLI) can catch one type and still get a structured payload via to_dict().
"""


class VtError(Exception):
    """Base class for all vtorus errors"""

    code = 'vt_error'

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {
            'error': self.code,
            'message': self.message,
            'details': {key: str(value) for key, value in self.details.items()},
        }


class ParamTooSmall(VtError):
    code = 'param_too_small'


class ParityViolation(VtError):
    code = 'parity_violation'


class UnknownVertex(VtError):
    code = 'unknown_vertex'


class UnknownEdge(VtError):
    code = 'unknown_edge'


class DegenerateJump(VtError):
    code = 'degenerate_jump'


class NonUniformIntersection(VtError):
    code = 'non_uniform_intersection'


class CapExceeded(VtError):
    code = 'cap_exceeded'


class DisconnectedSubgraph(VtError):
    code = 'disconnected_subgraph'


class InstanceTooLarge(VtError):
    code = 'instance_too_large'


class PartitionMismatch(VtError):
    code = 'partition_mismatch'


class InvalidPath(VtError):
    code = 'invalid_path'


class ExportError(VtError):
    """I/O failure while writing an export; always carries the target path"""

    code = 'export_error'

    def __init__(self, message, path, **details):
        super().__init__(f"{message} ({path})", path=path, **details)
        self.path = path
