"""
On-disk cache of serialized matrix representations, keyed by a content hash.
"""
from __future__ import annotations

import logging
import os
from typing import Optional

import constants
from model.matrixrep import MatrixRep, build_rep, decode, encode
from model.polyring import Parameterization
from utils import FileManager, content_hash

LOGGER = logging.getLogger(__name__)


class MatrixCache:

    def __init__(self, directory: str = constants.CACHE_DIR):
        self.directory = directory

    @staticmethod
    def key(param: Parameterization, nu, lmax: int = 1, reg: Optional[int] = None,
            indeg: Optional[int] = None, force: bool = False, lmax_cap: Optional[int] = None) -> str:
        """Hash of (maps, nu, lmax, field) plus the overrides that change the certificate."""
        nu = param.ring.coerce_degree(nu)
        return content_hash({
            "maps": param.texts(),
            "blocks": [list(b) for b in param.ring.blocks],
            "field": param.ring.field.to_json(),
            "nu": nu.to_json(),
            "lmax": lmax,
            "reg": reg,
            "indeg": indeg,
            "force": force,
            "lmax_cap": lmax_cap,
        })

    def path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def load(self, key: str) -> Optional[str]:
        path = self.path(key)
        if not os.path.exists(path):
            return None
        return FileManager.TXT.read_file_as_str(path)

    def store(self, key: str, text: str) -> str:
        path = self.path(key)
        FileManager.JSON.text2file(path, text)
        return path

    def get_or_build(self, param: Parameterization, nu, lmax: int = 1, reg: Optional[int] = None,
                     indeg: Optional[int] = None, force: bool = False,
                     lmax_cap: Optional[int] = None) -> tuple[MatrixRep, bool, str]:
        """
        Devuelve (M, hit, ruta). Un fallo de decodificación se trata como miss y
        se reconstruye la matriz.
        """
        key = self.key(param, nu, lmax, reg, indeg, force, lmax_cap)
        text = self.load(key)
        if text is not None:
            try:
                M = decode(text)
                LOGGER.info("Cache hit for M_%s (%s)", nu, key[:12])
                return M, True, self.path(key)
            except (ValueError, KeyError) as err:
                LOGGER.warning("Discarding unreadable cache entry %s: %s", key[:12], err)
        LOGGER.info("Cache miss for M_%s (%s)", nu, key[:12])
        M = build_rep(param, nu, lmax=lmax, force=force, reg=reg, indeg=indeg, lmax_cap=lmax_cap)
        return M, False, self.store(key, encode(M))
