import csv
import hashlib
import json
import logging
import os
import random
import tempfile
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional, Sequence

from openpyxl import Workbook

import constants

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """
    Valores por defecto de ejecución. Se construyen desde constants.py
    y se sobreescriben con settings.json y con las opciones del job.
    """
    log_level: str = constants.LOG_LEVEL
    numeric_tolerance: float = constants.NUMERIC_TOLERANCE
    fq_max: int = constants.FQ_MAX
    enumeration_cap: int = constants.ENUMERATION_CAP
    base_locus_window: int = constants.BASE_LOCUS_WINDOW
    minor_stabilization: int = constants.MINOR_STABILIZATION
    default_seed: int = constants.DEFAULT_SEED
    lmax_cap: Optional[int] = constants.LMAX_CAP
    cache_dir: str = constants.CACHE_DIR

    @classmethod
    def keys(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    @classmethod
    def load(cls, path: str = constants.SETTINGS_PATH) -> "Settings":
        """
        Lee settings.json; si no existe se usan solo las constantes.

        :param path: Ruta del archivo de configuración.
        :return: Settings combinados.
        """
        if not os.path.exists(path):
            LOGGER.debug("No settings file at %s, using constants", path)
            return cls()
        data = FileManager.JSON.JSON2dict(path)
        return cls().merged(data)

    def merged(self, overrides: Dict[str, Any]) -> "Settings":
        if not isinstance(overrides, dict):
            raise ValueError("Settings must be a JSON object")
        unknown = sorted(set(overrides) - set(self.keys()))
        if unknown:
            raise ValueError(f"Unknown settings keys: {', '.join(unknown)}")
        return replace(self, **overrides)


def content_hash(payload: Dict[str, Any]) -> str:
    """sha256 of the canonical JSON form of payload."""
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def seeded_rng(seed: int, purpose: str) -> random.Random:
    LOGGER.info("Seed %d drawn for %s", seed, purpose)
    return random.Random(seed)


def _atomic_write(path: str, write) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as f:
            write(f)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


class FileManager:
    class JSON:
        @staticmethod
        def dict2JSON(path_JSON: str, data: Dict):
            if not path_JSON.endswith(".json"):
                path_JSON += ".json"
            _atomic_write(path_JSON, lambda f: f.write(json.dumps(data, indent=4) + "\n"))

        @staticmethod
        def JSON2dict(path_JSON: str) -> Dict[str, Any]:
            with open(path_JSON, "r", encoding="utf-8") as f:
                return json.load(f)

        @staticmethod
        def text2file(path: str, text: str):
            """Escribe texto ya serializado (p. ej. un MatrixRep codificado)."""
            _atomic_write(path, lambda f: f.write(text))

    class CSV:

        @staticmethod
        def rows_to_csv(rows: Sequence[Sequence[str]], filename: str):
            """
            Guarda una matriz de cadenas en un archivo .csv, una fila por fila de la matriz.

            :param rows: Lista de filas.
            :param filename: Nombre del archivo (puede incluir .csv o no).
            """
            if not filename.endswith(".csv"):
                filename += ".csv"

            def write(file):
                writer = csv.writer(file)
                for row in rows:
                    writer.writerow(list(row))

            _atomic_write(filename, write)

    class Excel:

        @staticmethod
        def sheets_to_xlsx(sheets: Dict[str, Sequence[Sequence[str]]], filename: str):
            """
            Guarda varias matrices de cadenas en un .xlsx, una hoja por matriz.

            :param sheets: titulo de hoja -> filas.
            :param filename: Nombre del archivo (puede incluir .xlsx o no).
            """
            if not filename.endswith(".xlsx"):
                filename += ".xlsx"

            wb = Workbook()
            wb.remove(wb.active)
            for title, rows in sheets.items():
                # openpyxl limita los titulos a 31 caracteres
                ws = wb.create_sheet(title=title[:31])
                for i, row in enumerate(rows, start=1):
                    for j, value in enumerate(row, start=1):
                        ws.cell(row=i, column=j, value=value)

            directory = os.path.dirname(os.path.abspath(filename))
            os.makedirs(directory, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=directory, suffix=".xlsx")
            os.close(fd)
            try:
                wb.save(tmp)
                os.replace(tmp, filename)
            except BaseException:
                if os.path.exists(tmp):
                    os.remove(tmp)
                raise

    class TXT:
        @staticmethod
        def read_file_as_str(path: str) -> str:
            """
            Lee el contenido completo de un archivo como una única cadena de texto.

            :param path: Ruta del archivo
            :return: Contenido del archivo como string
            """
            with open(path, "r", encoding="utf-8") as f:
                contenido = f.read()
            return contenido
