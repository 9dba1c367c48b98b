"""
fsspec-backed filesystem implementations.
"""

import logging
import posixpath

import fsspec

from FileSystem.base import FileSystem
from Utils.errors import InputError


class FsspecFileSystem(FileSystem):
    """
    FileSystem over any fsspec protocol.

    Subclasses only choose the protocol.
    """

    protocol: str = "file"

    def __init__(self) -> None:
        self.logger = logging.getLogger(__name__)
        self.fs = fsspec.filesystem(self.protocol)

    def read_text(self, path: str) -> str:
        self.logger.debug(f"Reading {path}")
        if not self.fs.exists(path):
            raise FileNotFoundError(f"File not found: {path}")
        try:
            with self.fs.open(path, "r", encoding="utf-8") as handle:
                return handle.read()
        except UnicodeDecodeError as e:
            raise InputError(f"{path} is not valid UTF-8 text: {e.reason} at byte {e.start}") from e

    def write_text(self, path: str, text: str) -> None:
        self.logger.debug(f"Writing {len(text)} characters to {path}")
        parent = posixpath.dirname(str(path).replace("\\", "/"))
        if parent:
            self.mkdirs(parent)
        # line endings are written as given
        with self.fs.open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)

    def mkdirs(self, path: str) -> None:
        self.fs.makedirs(path, exist_ok=True)


class LocalFileSystem(FsspecFileSystem):
    """The local disk."""

    protocol = "file"


class MemoryFileSystem(FsspecFileSystem):
    """
    fsspec's process-wide in-memory store.

    All instances share one store, so a file written through one instance can
    be read back through another.
    """

    protocol = "memory"
