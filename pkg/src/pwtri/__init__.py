"""Triangulating planar graphs with bounded pathwidth growth."""

from .augment import connect, outerplanar_maximalize, triangulate_connected
from .multitri import multi_triangulate
from .oracle import exact_pathwidth
from .pathdecomp import PathDecomposition
from .pipeline import PipelineReport, run_pipeline
from .planar import EmbeddedMultigraph, trace_faces
from .simplify import simplify

__all__ = [
    "EmbeddedMultigraph",
    "PathDecomposition",
    "PipelineReport",
    "connect",
    "exact_pathwidth",
    "multi_triangulate",
    "outerplanar_maximalize",
    "run_pipeline",
    "simplify",
    "trace_faces",
    "triangulate_connected",
]

__version__ = "0.1.0"
