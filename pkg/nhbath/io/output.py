from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from types import TracebackType
from typing import Any

from filelock import FileLock, Timeout
from numpy.typing import ArrayLike

from ..errors.user import HelpfulUserError
from ..logging import logger
from ..version import __version__
from .atomic import atomic_write, hexdigest
from .manifest import MANIFEST_SCHEMA, FileRecord, Manifest, encode_manifest
from .table import encode_table

log = logger()

LOCK_NAME = ".nhbath.lock"
MANIFEST_NAME = "manifest.json"


class OutputDirectory:
    """Directory that receives the files of one run.

    Use as a context manager: a lock file keeps a second writer out while
    the run lasts. Files are written atomically and recorded for the manifest.
    """
    def __init__(self, path: Path):
        self.path = path
        self.files: list[FileRecord] = []
        self._lock = FileLock(path / LOCK_NAME)

    def __enter__(self) -> OutputDirectory:
        self.path.mkdir(parents=True, exist_ok=True)
        try:
            _ = self._lock.acquire(timeout=0)
        except Timeout:
            raise HelpfulUserError(f"Output directory `{self.path}` is in use by another run")
        return self

    def __exit__(self, exc_type: type[BaseException] | None, exc: BaseException | None,
                 tb: TracebackType | None):
        _ = self._lock.release()

    def write_bytes(self, name: str, content: bytes, rows: int) -> FileRecord:
        atomic_write(self.path / name, content)
        record = FileRecord(name, hexdigest(content), rows)
        self.files = [f for f in self.files if f.name != name] + [record]
        log.info("written `%s`", self.path / name)
        return record

    def write_table(self, name: str, columns: Mapping[str, ArrayLike]) -> FileRecord:
        content, rows = encode_table(columns)
        return self.write_bytes(name, content, rows)

    def write_manifest(self, experiment: str, seed: int, parameters: dict[str, Any]) -> Manifest:
        manifest = Manifest(MANIFEST_SCHEMA, __version__, experiment, seed, parameters,
                            sorted(self.files, key=lambda f: f.name))
        atomic_write(self.path / MANIFEST_NAME, encode_manifest(manifest))
        log.info("written `%s`", self.path / MANIFEST_NAME)
        return manifest
