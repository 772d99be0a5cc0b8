"""
Rendering of command reports and matrix exports.
"""
from __future__ import annotations

import logging
import os
from typing import Dict

from model.matrixrep import MatrixRep
from utils import FileManager

LOGGER = logging.getLogger(__name__)


def matrix_rows(M: MatrixRep) -> list[list[str]]:
    """Entries as polynomial text, one list per matrix row."""
    return [[e.to_text() for e in row] for row in M.entries]


def matrix_summary(M: MatrixRep) -> dict:
    ring = M.param.ring
    rows, cols = M.shape
    return {
        "nu": M.nu.to_json(),
        "shape": [rows, cols],
        "valid": M.valid,
        "lmax": M.lmax,
        "certificate": M.certificate.to_json(),
        "rows": [ring.monomial_text(m) for m in M.rows],
        "columns": [tag.provenance(M.param) for tag in M.columns],
        "entries": matrix_rows(M),
        "diagnostics": list(M.diagnostics),
    }


def write_report(report: dict, path: str) -> str:
    FileManager.JSON.dict2JSON(path, report)
    LOGGER.info("Report written to %s", path)
    return path if path.endswith(".json") else path + ".json"


def export_matrices(matrices: Dict[str, MatrixRep], path: str, fmt: str) -> list[str]:
    """
    csv: un archivo por matriz (sufijo _<nombre> si hay varias);
    xlsx: un libro con una hoja por matriz.
    """
    if not matrices or fmt == "json":
        return []
    base, _ = os.path.splitext(path)
    if fmt == "csv":
        written = []
        for name, M in matrices.items():
            target = f"{base}.csv" if len(matrices) == 1 else f"{base}_{name}.csv"
            FileManager.CSV.rows_to_csv(matrix_rows(M), target)
            written.append(target)
        LOGGER.info("Exported %d matrix file(s) as csv", len(written))
        return written
    if fmt == "xlsx":
        target = f"{base}.xlsx"
        FileManager.Excel.sheets_to_xlsx({name: matrix_rows(M) for name, M in matrices.items()}, target)
        LOGGER.info("Exported %d sheet(s) to %s", len(matrices), target)
        return [target]
    raise ValueError(f"Unknown export format {fmt!r}")
