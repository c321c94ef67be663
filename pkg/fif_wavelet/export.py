"""CSV/JSON rendering and atomic artifact writes.

Floats are written with 17 significant digits so every value round-trips exactly.
"""

# Import built-in modules
import csv
import io
import json
import logging
import math
import os
from pathlib import Path
import tempfile
from typing import Any, Dict, Iterable, Mapping, Sequence, Union

# Import local modules
from fif_wavelet.schema import BaseSchema, FifGrid, ScalogramGrid, SpectrumTable
from fif_wavelet.utils import format_float

logger = logging.getLogger(__name__)

GRID_HEADER = ("x", "f")
SPECTRUM_HEADER = ("omega", "re", "im", "abs", "tail_bound")
SCALOGRAM_HEADER = ("s", "t", "re", "im", "abs")


def render_csv(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    """Render rows of floats as CSV text with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


def grid_csv(grid: FifGrid) -> str:
    """CSV with header ``x,f``, one row per grid point."""
    return render_csv(GRID_HEADER, grid.to_rows())


def spectrum_csv(table: SpectrumTable) -> str:
    """CSV with header ``omega,re,im,abs,tail_bound``."""
    return render_csv(SPECTRUM_HEADER, table.to_rows())


def scalogram_csv(scalogram: ScalogramGrid) -> str:
    """CSV with header ``s,t,re,im,abs``, scale-major."""
    return render_csv(SCALOGRAM_HEADER, scalogram.to_rows())


def _strict(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _strict(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_strict(v) for v in value]
    return value


def render_json(payload: Union[BaseSchema, Mapping[str, Any]]) -> str:
    """Render a model or mapping as sorted, indented, strict JSON (non-finite floats become null)."""
    data = payload.to_payload() if isinstance(payload, BaseSchema) else dict(payload)
    return json.dumps(_strict(data), indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_outputs(files: Mapping[Union[str, Path], str]) -> None:
    """Write several text files so that either all of them appear or none does.

    Every file is first written to a temporary sibling, then all are renamed into place.

    Args:
        files: Target paths mapped to their contents
    """
    staged: Dict[Path, str] = {}
    try:
        for target, content in files.items():
            target = Path(target)
            target.parent.mkdir(parents=True, exist_ok=True)
            fd, temp = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
            staged[target] = temp
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(content)
    except BaseException:
        for temp in staged.values():
            if os.path.exists(temp):
                os.unlink(temp)
        raise
    for target, temp in staged.items():
        os.replace(temp, target)
        logger.info("Wrote %s", target)
