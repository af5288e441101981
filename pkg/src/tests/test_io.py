"""Tests for CSV and JSON artifacts."""

from pathlib import Path

import pytest


def test_format_float_round_trips() -> None:
    """Test that 17 significant digits recover the exact double."""
    from chaosrng.io import format_float

    for value in (0.1, 1.0 / 3.0, 2.0**-40, 123456.789):
        assert float(format_float(value)) == value
    assert format_float(0.5) == "0.5"
    assert format_float(3.0) == "3"


def test_write_csv(tmp_path: Path) -> None:
    """Test cell formatting, line endings and parent directory creation."""
    import numpy as np

    from chaosrng.io import write_csv

    path = write_csv(
        tmp_path / "nested" / "out.csv",
        ("name", "value", "flag", "missing"),
        [("a", 0.1, True, None), ("b", np.float64(2.5), np.bool_(False), 7)],
    )
    assert path.read_bytes() == b"name,value,flag,missing\na,0.10000000000000001,true,\nb,2.5,false,7\n"
    assert [entry.name for entry in path.parent.iterdir()] == ["out.csv"]


def test_write_json(tmp_path: Path) -> None:
    """Test sorted keys, numpy values and the trailing newline."""
    import json

    import numpy as np

    from chaosrng.io import write_json

    path = write_json(tmp_path / "out.json", {"b": np.arange(3), "a": np.float64(0.25), "c": {"z": 1, "y": tmp_path}})
    text = path.read_text()
    assert text.endswith("}\n")
    payload = json.loads(text)
    assert list(payload) == ["a", "b", "c"]
    assert payload == {"a": 0.25, "b": [0, 1, 2], "c": {"y": str(tmp_path), "z": 1}}


def test_write_json_rejects_unknown_objects(tmp_path: Path) -> None:
    """Test that unsupported objects fail without leaving a partial file."""
    from chaosrng.io import write_json

    with pytest.raises(TypeError, match="Unsupported type"):
        write_json(tmp_path / "out.json", {"value": object()})
    assert list(tmp_path.iterdir()) == []


def test_write_json_encodes_dataclasses(tmp_path: Path) -> None:
    """Test that report dataclasses become plain objects."""
    import json

    from chaosrng.io import write_json
    from chaosrng.stattests import TestReport

    path = write_json(tmp_path / "report.json", TestReport.check("ks", 0.01, 0.02, 10, cdf="uniform"))
    encoded = json.loads(path.read_text())
    assert encoded["test"] == "ks"
    assert encoded["passed"] is True
    assert encoded["params"] == {"cdf": "uniform"}


def test_read_column(tmp_path: Path) -> None:
    """Test named and fallback column selection."""
    import numpy as np

    from chaosrng.io import read_column, write_csv

    path = write_csv(tmp_path / "samples.csv", ("index", "value"), [(0, 0.25), (1, 0.75)])
    assert np.array_equal(read_column(path), [0.25, 0.75])
    assert np.array_equal(read_column(path, "index"), [0.0, 1.0])

    other = write_csv(tmp_path / "other.csv", ("x", "y"), [(1.0, 2.0), (3.0, 4.0)])
    assert np.array_equal(read_column(other), [2.0, 4.0])


def test_read_column_errors(tmp_path: Path) -> None:
    """Test empty files, header-only files and unparsable values."""
    from chaosrng.exceptions import ConfigurationError, InsufficientDataError
    from chaosrng.io import read_column

    empty = tmp_path / "empty.csv"
    empty.write_text("")
    header_only = tmp_path / "header.csv"
    header_only.write_text("value\n")
    broken = tmp_path / "broken.csv"
    broken.write_text("value\n0.5\nabc\n")

    with pytest.raises(InsufficientDataError):
        read_column(empty)
    with pytest.raises(InsufficientDataError):
        read_column(header_only)
    with pytest.raises(ConfigurationError):
        read_column(broken)


def test_provenance_carries_the_version() -> None:
    """Test the provenance stamp."""
    from chaosrng.__metadata__ import __version__
    from chaosrng.io import provenance

    assert provenance(seed=3) == {"version": __version__, "seed": 3}
