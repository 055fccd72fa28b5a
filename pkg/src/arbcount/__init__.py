"""Exact arborescence counting and extremal orientations of multigraphs."""

from .graphs import DirectedMultigraph, UndirectedMultigraph
from .kernels import get_backend, set_backend

__all__ = ["DirectedMultigraph", "UndirectedMultigraph", "get_backend", "set_backend"]
__version__ = "0.1.0"
