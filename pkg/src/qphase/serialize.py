"""CSV/JSON encodings of grids, convergence reports and check tables.

Numbers are written with 17 significant digits so that identical inputs
produce byte-identical files.
"""
from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .schwinger import labels

IMAG_TOL = 1e-12


def fmt(x) -> str:
    return format(float(x), ".17g")


def _split(name, grid):
    """Real part under ``name``; an extra ``name_imag`` column if needed."""
    grid = np.asarray(grid)
    cols = {name: grid.real}
    if np.iscomplexobj(grid) and np.abs(grid.imag).max() > IMAG_TOL:
        cols[name + "_imag"] = grid.imag
    return cols


def grids_to_csv(grids: dict) -> str:
    """Rows ``m,n,<name>...`` with labels in ``[-h, h]``."""
    cols = {}
    for name, grid in grids.items():
        cols.update(_split(name, grid))
    N = next(iter(cols.values())).shape[0]
    lab = labels(N)
    lines = [",".join(["m", "n", *cols])]
    for i, m in enumerate(lab):
        for j, n in enumerate(lab):
            lines.append(",".join([str(m), str(n), *(fmt(c[i, j]) for c in cols.values())]))
    return "\n".join(lines) + "\n"


def grid_to_csv(grid) -> str:
    return grids_to_csv({"value": grid})


def grids_to_json(grids: dict, **extra) -> str:
    cols = {}
    for name, grid in grids.items():
        cols.update(_split(name, grid))
    N = next(iter(cols.values())).shape[0]
    h = (N - 1) // 2
    doc = {"N": N, "labels": f"[{-h},{h}]"}
    doc.update(extra)
    doc.update({k: v.tolist() for k, v in cols.items()})
    return json.dumps(doc, indent=1) + "\n"


def grid_to_json(grid, **extra) -> str:
    return grids_to_json({"values": grid}, **extra)


def report_to_csv(report) -> str:
    lines = ["N,error"]
    lines += [f"{N},{fmt(e)}" for N, e in zip(report.sizes, report.errors)]
    return "\n".join(lines) + "\n"


def report_to_json(report) -> str:
    doc = {
        "N": report.sizes,
        "errors": [float(e) for e in report.errors],
        "norm": report.norm,
        "strictly_decreasing": report.strictly_decreasing(),
    }
    doc.update(report.meta)
    return json.dumps(doc, indent=1) + "\n"


def checks_to_csv(checks, seed=None) -> str:
    lines = [] if seed is None else [f"# seed={seed}"]
    lines.append("N,check,value,tolerance,passed")
    for c in checks:
        lines.append(f"{c.N},{c.name},{fmt(c.value)},{fmt(c.tolerance)},{str(c.passed).lower()}")
    return "\n".join(lines) + "\n"


def checks_to_json(checks, seed=None) -> str:
    doc = {
        "seed": seed,
        "checks": [
            {"N": c.N, "check": c.name, "value": float(c.value), "tolerance": c.tolerance, "passed": c.passed}
            for c in checks
        ],
        "passed": all(c.passed for c in checks),
    }
    return json.dumps(doc, indent=1) + "\n"


def atomic_write(path, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and rename it."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qphase-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
