"""
Filesystem abstraction for linkrank.

Graphs, reports and exports are read and written through this layer so the
CLI works the same against local disk and fsspec's in-memory store.
"""

from .base import FileSystem
from .local import FsspecFileSystem, LocalFileSystem, MemoryFileSystem
from .registry import filesystem_for, get_filesystem, register_filesystem

__all__ = [
    "FileSystem",
    "FsspecFileSystem",
    "LocalFileSystem",
    "MemoryFileSystem",
    "filesystem_for",
    "get_filesystem",
    "register_filesystem",
]
