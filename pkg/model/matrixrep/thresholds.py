"""
Threshold certificates: the region of degrees nu where the corank of the
specialized matrix M_nu(p) is certified to equal the fiber degree at p.

A region is a union of sets E(alpha) = {zeta : zeta_i >= alpha_i for all i}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence, Union

from model.polyring import MultiDegree, Parameterization
from model.syzygy import BaseLocusKind, dim_base_locus, mu_basis

LOGGER = logging.getLogger(__name__)


class Setting(str, Enum):
    CURVE = "Curve"
    MORPHISM = "Morphism"
    SURFACE = "Surface"
    MULTIGRADED = "Multigraded"


class InconsistentOverrideError(ValueError):
    pass


@dataclass(frozen=True)
class ValidityRegion:
    corners: tuple[MultiDegree, ...]

    def __post_init__(self):
        corners = tuple(MultiDegree.coerce(c) for c in self.corners)
        object.__setattr__(self, "corners", corners)
        if not corners:
            raise ValueError("A validity region needs at least one corner")
        if len({len(c) for c in corners}) != 1:
            raise ValueError("Corners of different lengths")

    def contains(self, nu) -> bool:
        nu = MultiDegree.coerce(nu)
        return any(nu >= c for c in self.corners)

    def __contains__(self, nu) -> bool:
        return self.contains(nu)

    @property
    def lower_corner(self) -> MultiDegree:
        return self.corners[0]

    def to_json(self) -> list:
        return [c.to_json() for c in self.corners]

    def __str__(self) -> str:
        return " U ".join(f"E{c}" for c in self.corners)


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class ThresholdCertificate:
    setting: Setting
    region: ValidityRegion
    inputs: tuple[tuple[str, Any], ...]
    note: str
    assumptions: tuple[str, ...] = ()

    def contains(self, nu) -> bool:
        return self.region.contains(nu)

    def input(self, key: str, default=None):
        return dict(self.inputs).get(key, default)

    def to_json(self) -> dict:
        return {
            "setting": self.setting.value,
            "region": self.region.to_json(),
            "inputs": [[k, _thaw(v)] for k, v in self.inputs],
            "note": self.note,
            "assumptions": list(self.assumptions),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ThresholdCertificate":
        return cls(Setting(obj["setting"]),
                   ValidityRegion(tuple(MultiDegree.coerce(c) for c in obj["region"])),
                   tuple((k, _freeze(v)) for k, v in obj["inputs"]),
                   obj["note"],
                   tuple(obj.get("assumptions", ())))


def curve_threshold_value(mu_degrees: Sequence[int]) -> int:
    mu = list(mu_degrees)
    if len(mu) == 1:
        return max(mu[0] - 1, 0)
    ordered = sorted(mu, reverse=True)
    return ordered[0] + ordered[1]


def threshold_curve(mu) -> ThresholdCertificate:
    """Region E(max_{i != j} mu_i + mu_j) for a P^1 source."""
    degrees = tuple(mu.degrees) if hasattr(mu, "degrees") else tuple(mu)
    value = curve_threshold_value(degrees)
    return ThresholdCertificate(Setting.CURVE, ValidityRegion((MultiDegree.of(value),)),
                                (("mu", degrees),),
                                "nu >= max over i != j of mu_i + mu_j")


def morphism_lower_bound(n: int, d: int) -> int:
    return ((n - 1) * (d - 1)) // 2


def threshold_morphism(n: int, d: int, reg_override: Optional[int] = None) -> ThresholdCertificate:
    """
    Region E((n-1)(d-1)), or E(reg - d) when reg(I) is supplied.
    """
    if reg_override is None:
        value = (n - 1) * (d - 1)
        note = "nu >= (n-1)(d-1)"
    else:
        value = reg_override - d
        lower = morphism_lower_bound(n, d)
        if value < lower:
            raise InconsistentOverrideError(
                f"reg - d = {value} is below the lower bound {lower} for n={n}, d={d}")
        note = "nu >= reg(I) - d (user-supplied regularity)"
    return ThresholdCertificate(Setting.MORPHISM, ValidityRegion((MultiDegree.of(value),)),
                                (("n", n), ("d", d), ("reg", reg_override)), note,
                                ("base-point-free",))


def threshold_surface(d: int, indeg_sat_override: Optional[int] = None) -> ThresholdCertificate:
    indeg = 0 if indeg_sat_override is None else indeg_sat_override
    value = 2 * (d - 1) - indeg
    if value < 0:
        LOGGER.warning("Surface threshold 2(d-1) - indeg = %d clamped to 0", value)
        value = 0
    return ThresholdCertificate(Setting.SURFACE, ValidityRegion((MultiDegree.of(value),)),
                                (("d", d), ("indeg", indeg_sat_override)),
                                "nu >= 2(d-1) - indeg(I^sat)",
                                ("dim(R/I) <= 1", "I locally generated by at most 3 elements"))


def threshold_multigraded(X: str, d: Union[int, Sequence[int]], e: int,
                          assumptions: Sequence[str] = ()) -> ThresholdCertificate:
    """
    Regiones para X x P^1 -> P^3 con X = P^2 (d entero) o P^1 x P^1 (d par).
    """
    if e < 1:
        raise ValueError("The P^1 degree e must be positive")
    if X == "P2":
        d = d if isinstance(d, int) else tuple(d)[0]
        corners = ((3 * d - 2, e - 1), (2 * d - 2, 3 * e - 1))
        inputs = (("X", X), ("d", d), ("e", e))
    elif X == "P1xP1":
        d1, d2 = tuple(d)
        corners = ((3 * d1 - 1, 2 * d2 - 1, e - 1),
                   (2 * d1 - 1, 3 * d2 - 1, e - 1),
                   (2 * d1 - 1, 2 * d2 - 1, 3 * e - 1))
        inputs = (("X", X), ("d", (d1, d2)), ("e", e))
    else:
        raise ValueError(f"Unknown source {X!r}; expected 'P2' or 'P1xP1'")
    region = ValidityRegion(tuple(MultiDegree(c).clamp() for c in corners))
    return ThresholdCertificate(Setting.MULTIGRADED, region, inputs,
                                "union of E-sets for X x P^1", tuple(assumptions))


def multigraded_shape(param: Parameterization) -> Optional[tuple[str, Any, int]]:
    """(X, d, e) when the source is X x P^1 with X = P^2 or P^1 x P^1."""
    ring = param.ring
    sizes = ring.block_sizes
    deg = param.degree
    if sizes == (3, 2):
        return "P2", deg[0], deg[1]
    if sizes == (2, 2, 2):
        return "P1xP1", (deg[0], deg[1]), deg[2]
    return None


def _setting_from_base_locus(param: Parameterization) -> Setting:
    """Morphism si V(I) es vacío; Surface para un plano con puntos base."""
    locus = dim_base_locus(param)
    if locus.kind == BaseLocusKind.EMPTY:
        return Setting.MORPHISM
    if param.ring.nvars != 3:
        raise ValueError(f"No threshold certificate for a base locus of kind {locus.kind.value} "
                         f"on {param.ring}")
    if locus.kind != BaseLocusKind.DIM0:
        LOGGER.warning("Base locus %s; using the surface threshold", locus.kind.value)
    return Setting.SURFACE


def certify(param: Parameterization, reg: Optional[int] = None, indeg: Optional[int] = None,
            setting: Optional[Setting] = None, assumptions: Sequence[str] = ()) -> ThresholdCertificate:
    """Certificate matching the shape of the source ring."""
    ring = param.ring
    if setting is not None:
        setting = Setting(setting)
    if ring.is_projective_line() and setting in (None, Setting.CURVE):
        return threshold_curve(mu_basis(param))
    if ring.nblocks == 1 and param.r == ring.nvars + 1:
        d = param.degree.total
        if setting is None and indeg is None and reg is None:
            setting = _setting_from_base_locus(param)
        if setting == Setting.SURFACE or (setting is None and indeg is not None):
            return threshold_surface(d, indeg)
        if setting in (None, Setting.MORPHISM):
            return threshold_morphism(ring.nvars, d, reg)
    shape = multigraded_shape(param)
    if shape is not None and setting in (None, Setting.MULTIGRADED):
        return threshold_multigraded(*shape, assumptions=assumptions)
    raise ValueError(f"No threshold certificate for {param.r} maps on {ring}"
                     + (f" in setting {setting.value}" if setting else ""))
