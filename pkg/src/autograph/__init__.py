"""autograph: graphs with a prescribed automorphism group.

Builds, for a finite group G, graphs whose full automorphism group is
isomorphic to G on few vertices, and computes the minimal vertex count
alpha(G) exactly where known, with certified bounds otherwise.
"""

from .graphs import Graph, from_graph6, to_dot, to_graph6
from .perm import PermGroup, Permutation

__all__ = [
    "Graph",
    "PermGroup",
    "Permutation",
    "from_graph6",
    "to_dot",
    "to_graph6",
]

__version__ = "0.1.0"
