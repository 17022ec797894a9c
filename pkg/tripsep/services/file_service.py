"""
JSON state files, JSON reports and CSV tables.

Floats are written with Python's shortest round-trip repr, so a saved state
loads back bit for bit.
"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Optional, Sequence, Type

import numpy as np
from pydantic import BaseModel, ValidationError

from tripsep.core.errors import InvalidInputError
from tripsep.models.states import DensityMatrix, PureStateTensor
from tripsep.schemas.states import DensityFile, PureStateFile

logger = logging.getLogger(__name__)


def _pairs(values: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in values]


def _complex(pairs) -> np.ndarray:
    array = np.asarray(pairs, dtype=float)
    return array[..., 0] + 1j * array[..., 1]


class FileService:
    """Service for reading and writing state files and reports."""

    def _read(self, path: str, schema: Type[BaseModel]) -> BaseModel:
        try:
            payload = json.loads(Path(path).read_text())
            return schema.model_validate(payload)
        except OSError as e:
            logger.error(f"Failed to read {path}: {e}")
            raise InvalidInputError(f"cannot read file: {e.strerror}", path) from e
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in {path}: {e}")
            raise InvalidInputError(f"file is not valid JSON: {e.msg}", path) from e
        except ValidationError as e:
            logger.error(f"Invalid {schema.__name__} in {path}: {e}")
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"])
            raise InvalidInputError(f"invalid state file at '{location}': {first['msg']}",
                                    path) from e

    def _write(self, text: str, path: str) -> None:
        try:
            Path(path).write_text(text)
        except OSError as e:
            logger.error(f"Failed to write {path}: {e}")
            raise InvalidInputError(f"cannot write file: {e.strerror}", path) from e
        logger.info(f"Wrote {path}")

    def load_pure(self, path: str) -> PureStateTensor:
        data = self._read(path, PureStateFile)
        return PureStateTensor(dims=data.dims, amplitudes=_complex(data.amplitudes))

    def save_pure(self, state: PureStateTensor, path: str) -> None:
        data = PureStateFile(dims=state.dims, amplitudes=_pairs(state.amplitudes))
        self._write(self.dumps(data.model_dump()), path)

    def load_density(self, path: str) -> DensityMatrix:
        data = self._read(path, DensityFile)
        d = int(np.prod(data.dims))
        if len(data.matrix) != d or any(len(row) != d for row in data.matrix):
            raise InvalidInputError(f"density matrix must be {d}x{d} entries", path)
        return DensityMatrix(dims=data.dims, matrix=_complex(data.matrix))

    def save_density(self, rho: DensityMatrix, path: str) -> None:
        data = DensityFile(dims=rho.dims, matrix=[_pairs(row) for row in rho.matrix])
        self._write(self.dumps(data.model_dump()), path)

    @staticmethod
    def dumps(payload: Any) -> str:
        return json.dumps(payload, indent=2) + "\n"

    def write_json(self, payload: Any, path: Optional[str] = None) -> str:
        text = self.dumps(payload)
        if path:
            self._write(text, path)
        return text

    def write_csv(self, rows: Sequence[BaseModel], path: Optional[str] = None) -> str:
        """One header row from the row schema, then one line per row."""
        buffer = io.StringIO()
        if rows:
            writer = csv.DictWriter(buffer, fieldnames=list(type(rows[0]).model_fields),
                                    lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(row.model_dump())
        text = buffer.getvalue()
        if path:
            self._write(text, path)
        return text
