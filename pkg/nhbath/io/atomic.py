from __future__ import annotations

from pathlib import Path

import hashlib
import os
import tempfile


def hexdigest(content: bytes) -> str:
    return hashlib.sha256(content).hexdigest()


def atomic_write(target: Path, content: bytes):
    """
    Writes a file by first writing to a temporary file next to the target and
    then moving it in place, so readers never see a partial file.
    """
    with tempfile.NamedTemporaryFile(mode="wb", delete=False, dir=target.parent,
                                     prefix=".tmp-", suffix=target.suffix) as f:
        _ = f.write(content)
        f.flush()
        os.fsync(f.fileno())
    os.replace(f.name, target)
