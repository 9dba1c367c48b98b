"""
Filesystem registry.

Backends are registered by name; paths are routed to a backend by their URI
protocol (`memory://...`, `file://...`, or a bare local path).
"""

import logging
from typing import Dict, Type

from fsspec.core import split_protocol

from FileSystem.base import FileSystem
from FileSystem.local import LocalFileSystem, MemoryFileSystem
from Utils.errors import InputError

_FILESYSTEM_REGISTRY: Dict[str, Type[FileSystem]] = {}
_PROTOCOLS: Dict[str, str] = {"file": "local", "local": "local", "memory": "memory"}
logger = logging.getLogger(__name__)


def register_filesystem(name: str, fs_class: Type[FileSystem]) -> None:
    """
    Register a filesystem implementation.

    Args:
        name: The name of the filesystem implementation
        fs_class: The filesystem implementation class
    """
    logger.debug(f"Registering filesystem: {name}")
    _FILESYSTEM_REGISTRY[name] = fs_class


def get_filesystem(name: str, **kwargs) -> FileSystem:
    """
    Get a filesystem implementation by name.

    Raises:
        ValueError: If the requested filesystem implementation is not registered
    """
    if name not in _FILESYSTEM_REGISTRY:
        raise ValueError(f"Filesystem not registered: {name}")
    return _FILESYSTEM_REGISTRY[name](**kwargs)


def filesystem_for(path: str) -> FileSystem:
    """
    The backend for a path, chosen by its protocol; paths without one are local.

    Raises:
        InputError: If the protocol has no registered backend
    """
    protocol, _ = split_protocol(str(path))
    name = _PROTOCOLS.get(protocol or "file")
    if name is None:
        raise InputError(f"Unsupported storage protocol {protocol!r} in {path}")
    return get_filesystem(name)


register_filesystem("local", LocalFileSystem)
register_filesystem("memory", MemoryFileSystem)
