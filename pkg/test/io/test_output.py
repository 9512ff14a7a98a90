from nhbath.io import (
    MANIFEST_NAME, FileRecord, Manifest, OutputDirectory, Version, atomic_write,
    decode_manifest, encode_manifest, encode_table, hexdigest, read_table)
from nhbath.errors.internal import InternalError
from nhbath.errors.user import HelpfulUserError

from pathlib import Path

import numpy as np
import pytest
import logging


def test_table_layout():
    content, rows = encode_table({
        "j": [1, 2, 3],
        "E": np.array([0.5 - 0.6j, 1.0, -0.25j]),
        "weight": [0.1, np.nan, 1e-30],
    })
    assert rows == 3
    lines = content.decode("utf-8").split("\n")
    assert lines[0] == "# nhbath-csv 1.0"
    assert lines[1] == "j,E_re,E_im,weight"
    assert lines[2] == "1,0.5,-0.6,0.1"
    assert lines[3] == "2,1.0,0.0,"
    assert lines[-1] == ""

    frame = read_table(content.decode("utf-8"))
    assert list(frame.columns) == ["j", "E_re", "E_im", "weight"]
    assert frame["E_im"].tolist() == [-0.6, 0.0, -0.25]
    assert np.isnan(frame["weight"][1])
    assert frame["weight"][2] == 1e-30


def test_table_errors():
    with pytest.raises(InternalError):
        encode_table({"a": [1, 2], "b": [1, 2, 3]})
    with pytest.raises(InternalError):
        read_table("j,E\n1,2\n")
    with pytest.raises(InternalError):
        read_table("# nhbath-csv 2.0\nj\n1\n")


def test_version():
    assert Version.from_str("1.0") == Version((1, 0))
    assert Version((1, 0)) < Version((1, 1))
    assert Version((1, 2)).to_str() == "1.2"


def test_atomic_write(tmp_path: Path):
    target = tmp_path / "a.csv"
    atomic_write(target, b"first\n")
    atomic_write(target, b"second\n")
    assert target.read_bytes() == b"second\n"
    assert [p.name for p in tmp_path.iterdir()] == ["a.csv"]


def test_manifest_encoding():
    manifest = Manifest("nhbath-manifest/1", "0.1.0", "fig5", 0,
                        {"L": 100, "J1": 1.2, "boundary": "obc"},
                        [FileRecord("dynamics.csv", "00", 802)])
    text = encode_manifest(manifest).decode("utf-8")
    keys = ["experiment", "files", "nhbath_version", "parameters", "schema", "seed"]
    assert sorted(keys, key=text.index) == keys
    assert text.index('"J1"') < text.index('"L"') < text.index('"boundary"')
    assert text.endswith("}\n")
    assert decode_manifest(text.encode("utf-8")) == manifest


def test_output_directory(tmp_path: Path, caplog):
    path = tmp_path / "run"
    with caplog.at_level(logging.INFO):
        with OutputDirectory(path) as out:
            record = out.write_table("b.csv", {"x": [1.0, 2.0]})
            _ = out.write_bytes("a.txt", b"hello\n", 1)
            _ = out.write_table("b.csv", {"x": [3.0]})
            manifest = out.write_manifest("spectrum", 7, {"L": 4})
    assert "b.csv" in caplog.text

    assert record.rows == 2
    assert [f.name for f in manifest.files] == ["a.txt", "b.csv"]
    assert manifest.files[1].rows == 1
    assert manifest.files[1].sha256 == hexdigest((path / "b.csv").read_bytes())
    assert decode_manifest((path / MANIFEST_NAME).read_bytes()) == manifest
    assert manifest.seed == 7


def test_output_directory_lock(tmp_path: Path):
    with OutputDirectory(tmp_path) as out:
        _ = out.write_bytes("x", b"", 0)
        with pytest.raises(HelpfulUserError):
            with OutputDirectory(tmp_path):
                pass
    with OutputDirectory(tmp_path):
        pass
