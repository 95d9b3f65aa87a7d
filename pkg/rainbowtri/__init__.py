"""
rainbowtri: rainbow triangles in edge-colored graphs, directed triangles in
oriented graphs, and the reductions between them.
"""

from rainbowtri.colored_graph import ColoredGraph
from rainbowtri.models import TheoremVerdict, TriangleSet, VerificationReport
from rainbowtri.oriented_graph import OrientedGraph

__all__ = [
    "ColoredGraph",
    "OrientedGraph",
    "TheoremVerdict",
    "TriangleSet",
    "VerificationReport",
]
