"""
Structured documents: pydantic models and the domain-object serializer.
"""

from .documents import Envelope, ExactNumber, GraphDocument, RunConfig
from .serializer import DocumentSerializer, dump_document, load_graph, read_graph

__all__ = [
    "Envelope",
    "ExactNumber",
    "GraphDocument",
    "RunConfig",
    "DocumentSerializer",
    "dump_document",
    "load_graph",
    "read_graph",
]
