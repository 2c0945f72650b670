"""On-disk records of computed plane models.

One JSON file per level, ``P_<N>.json``, with coefficients as decimal
strings so they never pass through floating point.  Writes go to a
temporary file in the same directory followed by an atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bivariate import BivariatePoly

__all__ = [
    "SCHEMA_VERSION",
    "CACHE_ENV",
    "PolynomialRecord",
    "RecordError",
    "default_cache_dir",
    "resolve_cache_dir",
    "record_path",
    "save_record",
    "load_record",
]

SCHEMA_VERSION = 1
CACHE_ENV = "X0PLANE_CACHE_DIR"


class RecordError(ValueError):
    """A cache file is unreadable or inconsistent with its own contents."""


@dataclass(frozen=True)
class PolynomialRecord:
    N: int
    terms: tuple  # (a, b, coefficient) sorted by (b, a) descending
    bidegree: tuple
    psi: int
    degree_f: int
    verification_precision: int
    tool_version: str = __version__
    timestamp: str = ""
    normalization: str = "constant"

    @classmethod
    def from_polynomial(cls, P: BivariatePoly, psi, degree_f, verification_precision, timestamp=None):
        if timestamp is None:
            timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(
            N=P.N,
            terms=tuple(P.sorted_terms()),
            bidegree=(P.degree_x, P.degree_y),
            psi=psi,
            degree_f=degree_f,
            verification_precision=verification_precision,
            timestamp=timestamp,
            normalization=P.normalization,
        )

    def polynomial(self) -> BivariatePoly:
        return BivariatePoly(self.N, {(a, b): c for a, b, c in self.terms}, self.normalization)

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "N": self.N,
            "bidegree": list(self.bidegree),
            "psi": self.psi,
            "degree_f": self.degree_f,
            "normalization": self.normalization,
            "verification_precision": self.verification_precision,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "terms": [[a, b, str(c)] for a, b, c in self.terms],
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PolynomialRecord":
        try:
            doc = json.loads(text)
            if doc.get("schema_version") != SCHEMA_VERSION:
                raise RecordError(f"unsupported schema version {doc.get('schema_version')!r}")
            terms = tuple((int(a), int(b), int(c)) for a, b, c in doc["terms"])
            rec = cls(
                N=int(doc["N"]),
                terms=terms,
                bidegree=tuple(doc["bidegree"]),
                psi=int(doc["psi"]),
                degree_f=int(doc["degree_f"]),
                verification_precision=int(doc["verification_precision"]),
                tool_version=str(doc["tool_version"]),
                timestamp=str(doc["timestamp"]),
                normalization=str(doc.get("normalization", "constant")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, RecordError):
                raise
            raise RecordError(f"malformed record: {exc}") from exc
        if any(c == 0 for _, _, c in terms):
            raise RecordError("zero coefficient in record")
        P = rec.polynomial()
        if (P.degree_x, P.degree_y) != rec.bidegree:
            raise RecordError("bidegree field does not match the terms")
        return rec


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "x0plane"


def resolve_cache_dir(flag=None) -> Path:
    """Command flag, then ``$X0PLANE_CACHE_DIR``, then the platform default."""
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return default_cache_dir()


def record_path(cache_dir, N) -> Path:
    return Path(cache_dir) / f"P_{N}.json"


def save_record(cache_dir, record: PolynomialRecord) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    target = record_path(cache_dir, record.N)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=f".P_{record.N}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(record.to_json())
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def load_record(cache_dir, N):
    """The cached record for level ``N``, or None if there is none.

    Raises :class:`RecordError` if the file exists but cannot be trusted.
    """
    path = record_path(cache_dir, N)
    if not path.exists():
        return None
    rec = PolynomialRecord.from_json(path.read_text(encoding="utf-8"))
    if rec.N != N:
        raise RecordError(f"{path} holds level {rec.N}")
    return rec
