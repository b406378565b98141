"""Minimal reader for the simulator's P6 snapshot pixmaps."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .csvio import PlotDataError


def read_ppm(path) -> np.ndarray:
    """(height, width, 3) uint8 RGB array from a binary P6 file."""
    path = Path(path)
    if not path.exists():
        raise PlotDataError(f"{path}: no such file")
    data = path.read_bytes()
    fields, pos = [], 0
    while len(fields) < 4 and pos < len(data):
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":  # header comment
            while pos < len(data) and data[pos:pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        fields.append(data[start:pos])
    pos += 1  # single whitespace byte after maxval
    if len(fields) < 4 or fields[0] != b"P6":
        raise PlotDataError(f"{path}: not a binary P6 pixmap")
    width, height, maxval = int(fields[1]), int(fields[2]), int(fields[3])
    if maxval != 255:
        raise PlotDataError(f"{path}: expected maxval 255, got {maxval}")
    need = 3 * width * height
    payload = data[pos:pos + need]
    if len(payload) != need:
        raise PlotDataError(f"{path}: truncated pixel payload")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
