"""Tests for CSV/JSON rendering and artifact writes."""

# Import built-in modules
import json
import math
import os
from pathlib import Path

# Import third-party modules
import numpy as np
import pytest

# Import local modules
from fif_wavelet import export
from fif_wavelet.export import grid_csv
from fif_wavelet.export import render_json
from fif_wavelet.export import scalogram_csv
from fif_wavelet.export import spectrum_csv
from fif_wavelet.export import write_outputs
from fif_wavelet.schema import FifGrid, ScalogramGrid, SpectrumTable


def test_grid_csv() -> None:
    """Test the grid header and exact float round trips."""
    grid = FifGrid(N=3, level=1, values=[0.0, 1.0 / 3.0, -0.1, 0.0])
    lines = grid_csv(grid).splitlines()
    assert lines[0] == "x,f"
    assert len(lines) == 5
    x, f = (float(v) for v in lines[2].split(","))
    assert x == 1.0 / 3.0
    assert f == 1.0 / 3.0


def test_spectrum_csv() -> None:
    """Test the spectrum header and column order."""
    table = SpectrumTable(
        method="series", omegas=np.array([2.0]), values=np.array([-0.5 + 0.25j]), tail_bounds=np.array([1e-12])
    )
    lines = spectrum_csv(table).splitlines()
    assert lines[0] == "omega,re,im,abs,tail_bound"
    assert [float(v) for v in lines[1].split(",")] == [2.0, -0.5, 0.25, abs(-0.5 + 0.25j), 1e-12]


def test_scalogram_csv_is_scale_major() -> None:
    """Test that rows iterate translations within each scale."""
    sg = ScalogramGrid(
        scales=[0.5, 0.25],
        translations=[0.0, 1.0],
        values=np.array([[1.0, 2.0], [3.0, 4.0j]]),
        method="fourier",
        wavelet_order=4,
    )
    lines = scalogram_csv(sg).splitlines()
    assert lines[0] == "s,t,re,im,abs"
    assert [tuple(float(v) for v in line.split(",")[:2]) for line in lines[1:]] == [
        (0.5, 0.0),
        (0.5, 1.0),
        (0.25, 0.0),
        (0.25, 1.0),
    ]
    assert lines[4].split(",")[3] == "4"


def test_render_json() -> None:
    """Test sorted keys, indentation and null for non-finite floats."""
    text = render_json({"b": math.inf, "a": [1.0, math.nan], "c": {"d": 0.5}})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1.0, None], "b": None, "c": {"d": 0.5}}
    assert '\n  "a"' in text


def test_write_outputs(tmp_path: Path) -> None:
    """Test that all files appear without leftover temporaries."""
    files = {tmp_path / "out.csv": "x,f\n", tmp_path / "nested" / "out.json": "{}\n"}
    write_outputs(files)
    for path, content in files.items():
        assert path.read_text(encoding="utf-8") == content
    assert not [name for name in os.listdir(tmp_path) if name.endswith(".tmp")]


def test_write_outputs_failure_leaves_nothing(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that a failed write publishes no file and cleans up."""
    calls = []
    original = export.tempfile.mkstemp

    def failing_mkstemp(*args, **kwargs):
        calls.append(args)
        if len(calls) == 2:
            raise OSError("disk full")
        return original(*args, **kwargs)

    monkeypatch.setattr(export.tempfile, "mkstemp", failing_mkstemp)
    with pytest.raises(OSError):
        write_outputs({tmp_path / "a.csv": "a\n", tmp_path / "b.csv": "b\n"})
    assert os.listdir(tmp_path) == []
