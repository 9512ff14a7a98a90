from .atomic import atomic_write, hexdigest
from .manifest import FileRecord, Manifest, decode_manifest, encode_manifest
from .output import MANIFEST_NAME, OutputDirectory
from .table import CSV_SCHEMA, Version, encode_table, read_table

__all__ = [
    "atomic_write", "hexdigest", "FileRecord", "Manifest", "decode_manifest",
    "encode_manifest", "MANIFEST_NAME", "OutputDirectory", "CSV_SCHEMA", "Version",
    "encode_table", "read_table",
]
