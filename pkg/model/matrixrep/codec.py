"""
JSON codec for MatrixRep. decode(encode(M)) rebuilds M and
encode(decode(text)) == text for every text produced by encode.
"""
from __future__ import annotations

import json
import logging

from model.polyring import (GradedRingSpec, MultiDegree, Parameterization, parse_polynomial,
                            to_text)

from .builder import ColumnTag, MatrixRep
from .thresholds import ThresholdCertificate

LOGGER = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _monomial_from_text(text: str, ring: GradedRingSpec):
    poly = parse_polynomial(text, ring)
    terms = list(poly.element.items())
    if len(terms) != 1 or terms[0][1] != ring.field.one:
        raise ValueError(f"{text!r} is not a monomial")
    return terms[0][0]


def _column_to_json(tag: ColumnTag, ring: GradedRingSpec) -> dict:
    return {
        "t_degree": tag.t_degree,
        "source": tag.source,
        "generator": tag.generator,
        "generator_degree": tag.generator_degree.to_json(),
        "shift": None if tag.shift is None else ring.monomial_text(tag.shift),
    }


def _column_from_json(obj: dict, ring: GradedRingSpec) -> ColumnTag:
    shift = obj["shift"]
    return ColumnTag(int(obj["t_degree"]), obj["source"], int(obj["generator"]),
                     MultiDegree.coerce(obj["generator_degree"]),
                     None if shift is None else _monomial_from_text(shift, ring))


def to_json(M: MatrixRep) -> dict:
    ring = M.param.ring
    return {
        "version": FORMAT_VERSION,
        "setting": M.certificate.setting.value,
        "nu": M.nu.to_json(),
        "ring": ring.to_json(),
        "maps": M.param.texts(),
        "removed_factor": None if M.param.removed_factor is None else to_text(M.param.removed_factor),
        "rows": [ring.monomial_text(m) for m in M.rows],
        "columns": [_column_to_json(tag, ring) for tag in M.columns],
        "entries": [[to_text(e) for e in row] for row in M.entries],
        "certificate": M.certificate.to_json(),
        "valid": M.valid,
        "lmax": M.lmax,
        "diagnostics": list(M.diagnostics),
    }


def from_json(obj: dict) -> MatrixRep:
    if obj.get("version", FORMAT_VERSION) != FORMAT_VERSION:
        raise ValueError(f"Unsupported matrix format version {obj.get('version')!r}")
    ring = GradedRingSpec.from_json(obj["ring"])
    maps = tuple(parse_polynomial(t, ring) for t in obj["maps"])
    removed = obj.get("removed_factor")
    param = Parameterization(ring, maps, None if removed is None else parse_polynomial(removed, ring))
    target = param.target_ring
    certificate = ThresholdCertificate.from_json(obj["certificate"])
    if certificate.setting.value != obj["setting"]:
        raise ValueError("Setting does not match the certificate")
    rows = tuple(_monomial_from_text(t, ring) for t in obj["rows"])
    columns = tuple(_column_from_json(c, ring) for c in obj["columns"])
    entries = tuple(tuple(parse_polynomial(t, target) for t in row) for row in obj["entries"])
    if len(entries) != len(rows) or any(len(row) != len(columns) for row in entries):
        raise ValueError("Entry table does not match the row and column lists")
    return MatrixRep(param, ring.coerce_degree(obj["nu"]), rows, columns, entries, certificate,
                     bool(obj["valid"]), int(obj.get("lmax", 1)), tuple(obj.get("diagnostics", ())))


def encode(M: MatrixRep) -> str:
    return json.dumps(to_json(M), indent=2)


def decode(text: str) -> MatrixRep:
    """Inverso de encode; lanza ValueError / KeyError ante documentos mal formados."""
    M = from_json(json.loads(text))
    LOGGER.debug("Decoded M_%s (%d x %d)", M.nu, *M.shape)
    return M
