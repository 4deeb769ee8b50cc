from functools import wraps
import logging

import networkx as nx

from vtorus.utils.errors import InstanceTooLarge
from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)


def graph_order(graph):
    """Vertex count of a VtGraph or a plain networkx graph"""
    if isinstance(graph, nx.Graph):
        return graph.number_of_nodes()
    return graph.order


def exhaustive_guard(f):
    """
    Decorator for exhaustive scans over a graph.

    Refuses graphs with more than VT_MAX_EXHAUSTIVE_VERTICES vertices unless
    the caller passes allow_large=True.

    Usage:
        @exhaustive_guard
        def find_convex_edgecut(self, g, allow_large=False):
            pass
    """
    @wraps(f)
    def decorated_function(self, graph, *args, allow_large=False, **kwargs):
        limit = get_setting('VT_MAX_EXHAUSTIVE_VERTICES')
        order = graph_order(graph)

        if order > limit and not allow_large:
            logger.warning(
                f"Refusing exhaustive scan {f.__name__} on {order} vertices (limit {limit})"
            )
            raise InstanceTooLarge(
                f"{f.__name__} is exhaustive and refuses {order} vertices; limit is {limit}",
                vertices=order,
                limit=limit,
            )

        return f(self, graph, *args, **kwargs)
    return decorated_function
