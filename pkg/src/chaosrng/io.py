"""CSV and JSON artifacts written by the command line and the reports.

Every file is written to a temporary sibling first and moved into place
with ``os.replace``, so readers never observe a partial artifact. Output is
byte-stable: floats are written with 17 significant digits and JSON keys
are sorted.
"""

import csv
import io
import os
import tempfile
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import msgspec
import numpy as np

from chaosrng.__metadata__ import __version__
from chaosrng.exceptions import ConfigurationError, InsufficientDataError

__all__ = (
    "format_float",
    "provenance",
    "read_column",
    "write_csv",
    "write_json",
)


def format_float(value: float) -> str:
    """Format a float with 17 significant digits, enough to round-trip."""
    return format(value, ".17g")


def _cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if value is None:
        return ""
    return str(value)


def _atomic_write(path: Path, data: bytes) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def write_csv(path: "str | os.PathLike[str]", header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a CSV file with a header row.

    Args:
        path: Destination file.
        header: Column names.
        rows: Row values; floats are written with :func:`format_float`.

    Returns:
        The destination path.
    """
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([_cell(value) for value in row] for row in rows)
    return _atomic_write(Path(path), buffer.getvalue().encode())


def _enc_hook(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, Path):
        return str(obj)
    msg = f"Unsupported type: {type(obj)!r}"
    raise TypeError(msg)


def write_json(path: "str | os.PathLike[str]", payload: Any) -> Path:
    """Write ``payload`` as indented JSON with sorted keys.

    Dataclasses (reports, fits, profiles) and numpy values are encoded
    directly.

    Returns:
        The destination path.
    """
    encoded = msgspec.json.encode(payload, enc_hook=_enc_hook, order="sorted")
    return _atomic_write(Path(path), msgspec.json.format(encoded, indent=2) + b"\n")


def read_column(path: "str | os.PathLike[str]", column: str = "value") -> "np.ndarray[Any, np.dtype[np.float64]]":
    """Read one numeric column of a CSV file with a header row.

    Args:
        path: Source file.
        column: Preferred column; the last column is used when it is absent.

    Raises:
        ConfigurationError: If the file cannot be parsed.
        InsufficientDataError: If the file holds no data rows.

    Returns:
        The column as a float64 array.
    """
    with Path(path).open(newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            msg = f"{path} is empty"
            raise InsufficientDataError(msg) from None
        index = header.index(column) if column in header else len(header) - 1
        try:
            values = [float(row[index]) for row in reader if row]
        except (ValueError, IndexError) as e:
            msg = f"Could not read column {header[index]!r} of {path}: {e}"
            raise ConfigurationError(msg) from e
    if not values:
        msg = f"{path} has no data rows"
        raise InsufficientDataError(msg)
    return np.asarray(values, dtype=np.float64)


def provenance(**fields: Any) -> dict[str, Any]:
    """Return a provenance record stamped with the package version."""
    return {"version": __version__, **fields}
