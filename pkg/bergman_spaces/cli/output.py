"""CSV tables, two-column series files and their manifest."""
import csv
import hashlib
import json
import logging
import math
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

logger = logging.getLogger(__name__)

NUMBER_FORMAT = "{:.16e}"


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return NUMBER_FORMAT.format(value)
    return str(value)


def write_csv(path: Path, echo: Iterable[Tuple[str, str]], fieldnames: Sequence[str],
              rows: Iterable[Mapping]) -> Path:
    """Write ``rows`` below a ``# key = value`` block echoing the run configuration."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        for key, value in echo:
            f.write(f"# {key} = {value}\n")
        writer = csv.DictWriter(f, fieldnames=list(fieldnames), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: format_value(row.get(key, "")) for key in fieldnames})
    logger.info("wrote %s", path)
    return path


def read_rows(path: Path) -> List[Dict[str, str]]:
    with Path(path).open(encoding="utf-8", newline="") as f:
        return list(csv.DictReader(line for line in f if not line.startswith("#")))


def write_series(directory: Path, name: str, pairs: Iterable[Tuple[float, float]],
                 columns: Tuple[str, str] = ("x", "y"), echo: Iterable[Tuple[str, str]] = ()) -> Path:
    """Two-column CSV below the same ``# key = value`` echo as :func:`write_csv`."""
    path = Path(directory) / f"{name}.csv"
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        for key, value in echo:
            f.write(f"# {key} = {value}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for x, y in pairs:
            writer.writerow([format_value(float(x)), format_value(float(y))])
    return path


def write_manifest(directory: Path, entries: List[Dict[str, str]], name: str = "manifest.json") -> Path:
    path = Path(directory) / name
    path.write_text(json.dumps({"series": entries}, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def data_digest(paths: Iterable[Path]) -> str:
    """sha256 over the data lines of the given files; the comment echo is excluded."""
    digest = hashlib.sha256()
    for path in paths:
        with Path(path).open("rb") as f:
            for line in f:
                if not line.startswith(b"#"):
                    digest.update(line)
    return digest.hexdigest()
