"""
Base filesystem abstraction.

This module defines the abstract base class for the text stores the CLI reads
graphs from and writes reports to.
"""

from abc import ABC, abstractmethod


class FileSystem(ABC):
    """
    Abstract base class for filesystem implementations.

    Paths are plain strings so the same calls work for local paths and for
    in-memory URIs.
    """

    @abstractmethod
    def read_text(self, path: str) -> str:
        """
        Read a whole file as UTF-8 text.

        Raises:
            FileNotFoundError: If the file does not exist
            InputError: If the bytes are not valid UTF-8
        """

    @abstractmethod
    def write_text(self, path: str, text: str) -> None:
        """
        Write UTF-8 text, replacing any existing file.

        Parent directories are created as needed.
        """

    @abstractmethod
    def mkdirs(self, path: str) -> None:
        """Create the directory and any missing parents."""
