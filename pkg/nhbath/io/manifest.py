from __future__ import annotations

from typing import Any

import msgspec

MANIFEST_SCHEMA = "nhbath-manifest/1"


class FileRecord(msgspec.Struct):
    name: str
    sha256: str
    rows: int


class Manifest(msgspec.Struct):
    """Everything needed to reproduce the files of one run; see `docs/manifest.md`."""
    schema: str
    nhbath_version: str
    experiment: str
    seed: int
    parameters: dict[str, Any]
    files: list[FileRecord]


def encode_manifest(manifest: Manifest) -> bytes:
    return msgspec.json.format(msgspec.json.encode(manifest, order="sorted"), indent=2) + b"\n"


def decode_manifest(content: bytes) -> Manifest:
    return msgspec.json.decode(content, type=Manifest)
