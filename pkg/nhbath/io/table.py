"""Long-format CSV tables.

Every file starts with `# nhbath-csv <schema>`, followed by a header row.
Complex columns are split into `<name>_re` and `<name>_im`; floats are
written in shortest round-trip form, so equal data gives equal bytes.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import io

import numpy as np
from numpy.typing import ArrayLike
import pandas as pd

from ..errors.internal import InternalError


@dataclass(frozen=True)
class Version:
    numbers: tuple[int, ...]

    def to_str(self) -> str:
        return ".".join(str(i) for i in self.numbers)

    @classmethod
    def from_str(cls, s: str) -> Version:
        return Version(tuple(int(sv) for sv in s.split(".")))

    def __lt__(self, other: Version) -> bool:
        return self.numbers < other.numbers


CSV_SCHEMA = Version((1, 0))
CSV_MAGIC = "# nhbath-csv"


def data_frame(columns: Mapping[str, ArrayLike]) -> pd.DataFrame:
    split: dict[str, ArrayLike] = {}
    for name, values in columns.items():
        array = np.asarray(values)
        if np.iscomplexobj(array):
            split[f"{name}_re"] = array.real
            split[f"{name}_im"] = array.imag
        else:
            split[name] = array
    lengths = {np.shape(v)[0] if np.ndim(v) else 1 for v in split.values()}
    if len(lengths) > 1:
        raise InternalError("table columns differ in length", [sorted(lengths)])
    return pd.DataFrame(split)


def encode_table(columns: Mapping[str, ArrayLike]) -> tuple[bytes, int]:
    """CSV bytes and the number of data rows."""
    frame = data_frame(columns)
    buffer = io.StringIO()
    _ = buffer.write(f"{CSV_MAGIC} {CSV_SCHEMA.to_str()}\n")
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue().encode("utf-8"), len(frame)


def read_table(content: str) -> pd.DataFrame:
    """Inverse of `encode_table` up to the complex column split."""
    header, _, body = content.partition("\n")
    if not header.startswith(CSV_MAGIC):
        raise InternalError("not an nhbath table", [header])
    version = Version.from_str(header.removeprefix(CSV_MAGIC).strip())
    if CSV_SCHEMA < version:
        raise InternalError("table schema is newer than this nhbath", [version.to_str()])
    return pd.read_csv(io.StringIO(body))
