"""
Job files: the JSON interface of every command.

{ "command": str, "ring": {"blocks": [[str]], "field": "Q" | {"Fp": p}},
  "maps": [str], "options": {...} }
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from typing import Any, Optional

import constants
from model.polyring import GradedRingSpec, Parameterization, parse_parameterization
from utils import FileManager, Settings

LOGGER = logging.getLogger(__name__)

COMMANDS = ("mubasis", "matrep", "fiber", "strata", "implicitize", "jacfibers", "project", "selftest")
FORMATS = ("json", "csv", "xlsx")


@dataclass(frozen=True)
class JobOptions:
    nu: Optional[tuple[int, ...]] = None
    lmax: int = 1
    reg: Optional[int] = None
    indeg: Optional[int] = None
    seed: int = constants.DEFAULT_SEED
    force: bool = False
    points: tuple[tuple[str, ...], ...] = ()
    output: str = constants.REPORT_PATH
    format: str = "json"
    numeric: bool = False
    oracle: bool = False
    fitting: tuple[int, ...] = ()
    ell: Optional[tuple[str, ...]] = None
    drop: Optional[int] = None
    hypothesis: Optional[str] = None
    justification: str = constants.NEGATIVE_SECTION_JUSTIFICATION
    settings: dict = field(default_factory=dict)

    @classmethod
    def keys(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))


@dataclass(frozen=True)
class JobSpec:
    command: str
    ring: Optional[GradedRingSpec]
    maps: tuple[str, ...]
    options: JobOptions

    def parameterization(self) -> Parameterization:
        if self.ring is None or not self.maps:
            raise ValueError(f"Command {self.command!r} needs a ring and maps")
        return parse_parameterization(self.maps, self.ring)

    def settings(self, base: Settings) -> Settings:
        """Job options override settings.json for this run only."""
        return base.merged(self.options.settings)


def _int_or_none(value: Any, name: str) -> Optional[int]:
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Option {name!r} must be an integer")
    return value


def _texts(value: Any, name: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, (str, int)) for v in value):
        raise ValueError(f"{name} must be a list of strings")
    return tuple(str(v) for v in value)


def _settings_overrides(value: Any) -> dict:
    if not isinstance(value, dict):
        raise ValueError("options.settings must be a JSON object")
    return dict(value)


def parse_options(obj: dict, settings: Settings) -> JobOptions:
    if not isinstance(obj, dict):
        raise ValueError("options must be a JSON object")
    unknown = sorted(set(obj) - set(JobOptions.keys()))
    if unknown:
        raise ValueError(f"Unknown options: {', '.join(unknown)}")
    nu = obj.get("nu")
    if isinstance(nu, int) and not isinstance(nu, bool):
        nu = [nu]
    if nu is not None:
        if not isinstance(nu, list) or not all(isinstance(a, int) and a >= 0 for a in nu):
            raise ValueError("Option 'nu' must be a list of nonnegative integers")
        nu = tuple(nu)
    lmax = _int_or_none(obj.get("lmax", 1), "lmax")
    if lmax < 1:
        raise ValueError("Option 'lmax' must be at least 1")
    fmt = obj.get("format", "json")
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    points = tuple(_texts(p, "every point") for p in obj.get("points", []))
    fitting = obj.get("fitting", [])
    if isinstance(fitting, int):
        fitting = [fitting]
    seed = obj.get("seed", settings.default_seed)
    return JobOptions(
        nu=nu,
        lmax=lmax,
        reg=_int_or_none(obj.get("reg"), "reg"),
        indeg=_int_or_none(obj.get("indeg"), "indeg"),
        seed=_int_or_none(seed, "seed"),
        force=bool(obj.get("force", False)),
        points=points,
        output=str(obj.get("output", constants.REPORT_PATH)),
        format=fmt,
        numeric=bool(obj.get("numeric", False)),
        oracle=bool(obj.get("oracle", False)),
        fitting=tuple(_int_or_none(i, "fitting") for i in fitting),
        ell=None if obj.get("ell") is None else _texts(obj["ell"], "ell"),
        drop=_int_or_none(obj.get("drop"), "drop"),
        hypothesis=obj.get("hypothesis"),
        justification=str(obj.get("justification", constants.NEGATIVE_SECTION_JUSTIFICATION)),
        settings=_settings_overrides(obj.get("settings", {})),
    )


def parse_job(obj: dict, settings: Optional[Settings] = None) -> JobSpec:
    """
    Valida el esquema del job y construye el JobSpec.

    :param obj: diccionario leído del JSON.
    :param settings: valores por defecto (semilla); settings.json si es None.
    :return: JobSpec listo para Action.
    """
    settings = Settings() if settings is None else settings
    if not isinstance(obj, dict):
        raise ValueError("A job is a JSON object")
    command = obj.get("command")
    if command not in COMMANDS:
        raise ValueError(f"Unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    options = parse_options(obj.get("options", {}), settings)
    if command == "selftest":
        return JobSpec(command, None, (), options)
    ring = GradedRingSpec.from_json(obj["ring"])
    maps = _texts(obj["maps"], "maps")
    if not maps:
        raise ValueError("maps is empty")
    if command in ("fiber", "strata", "jacfibers", "project") and not options.points:
        raise ValueError(f"Command {command!r} needs options.points")
    LOGGER.debug("Job %s on %s with %d map(s)", command, ring, len(maps))
    return JobSpec(command, ring, maps, options)


def load_job(path: str, settings: Optional[Settings] = None) -> JobSpec:
    return parse_job(FileManager.JSON.JSON2dict(path), settings)
