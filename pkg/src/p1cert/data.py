"""Bundled coefficient data: loading, typed access, and fingerprinting.

Three JSON files ship with the package:

``expansion_tables.json``
    Coefficient families of the exponential-asymptotic construction used by
    the sector certificate.  Each family maps a half-power index ``j`` (the
    column of ``x**(-j/2)``) to rows ``[k, m, c]`` standing for the term
    ``c * S**k * exp(-m*x)``.

``constant_catalog.json``
    Closed-form majorant constants: finite sums of
    ``(a + b*sqrt(2)) * |S|**k * rho**(-e)``, plus printed decimal reference
    values of assembled quantities at ``rho = 3``.

``inner_ode.json``
    Approximating polynomials for the real-axis initial value problem
    ``g'' = 6*g**2 + t`` on ``[-17/10, 0]`` (in ``s = t + 17/10``) and the
    interval partitions used to certify their sup-norm bounds.

The directory can be overridden with the ``P1CERT_DATA_DIR`` environment
variable (all three files must be present there), letting callers swap in
perturbed data for fault-injection runs.  :func:`file_fingerprints` exposes
SHA-256 digests of the active files so reports can pin the inputs they
certified.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Mapping, Tuple

from .functionals import PowerSum, QSqrt2, SPoly
from .polybound import Poly, poly

DATA_ENV_VAR = "P1CERT_DATA_DIR"

DATA_FILES = (
    "expansion_tables.json",
    "constant_catalog.json",
    "inner_ode.json",
)

# family -> (smallest j, largest j, m - k offset, (k - j) parity)
TABLE_SHAPE: Mapping[str, Tuple[int, int, int, int]] = {
    "r": (5, 9, 0, 1),
    "q": (5, 9, 1, 0),
    "E": (5, 8, -2, 0),
    "t": (5, 7, 1, 1),
    "u": (5, 8, -1, 1),
    "tau": (5, 7, 1, 1),
    "t_tilde": (7, 9, 1, 1),
    "nu": (5, 8, -1, 1),
    "u_tilde": (7, 10, -1, 1),
    "p": (5, 8, -1, 1),
}

Table = Dict[int, Dict[Tuple[int, int], Fraction]]

_cache: Dict[Tuple[str, str], Any] = {}


def data_dir() -> Path:
    """Directory the data files are read from (env override wins)."""
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))


def clear_cache() -> None:
    """Drop memoized parses (needed after changing the data directory)."""
    _cache.clear()


def _raw_bytes(name: str) -> bytes:
    path = data_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"data file not found: {path}")
    return path.read_bytes()


def _load(name: str) -> Any:
    key = (str(data_dir()), name)
    if key not in _cache:
        _cache[key] = json.loads(_raw_bytes(name).decode("utf-8"))
    return _cache[key]


def file_fingerprints() -> Dict[str, str]:
    """SHA-256 hex digest of every bundled data file currently in use."""
    return {
        name: hashlib.sha256(_raw_bytes(name)).hexdigest() for name in DATA_FILES
    }


def expansion_tables() -> Dict[str, Table]:
    """All coefficient families, as family -> j -> {(k, m): coefficient}."""
    raw = _load("expansion_tables.json")["tables"]
    out: Dict[str, Table] = {}
    for family, columns in raw.items():
        if family not in TABLE_SHAPE:
            raise ValueError(f"unknown coefficient family {family!r}")
        table: Table = {}
        for j_str, rows in columns.items():
            j = int(j_str)
            entries: Dict[Tuple[int, int], Fraction] = {}
            for row in rows:
                if len(row) != 3:
                    raise ValueError(f"malformed row in {family}[{j}]: {row!r}")
                k, m, coeff = int(row[0]), int(row[1]), Fraction(row[2])
                if k < 0:
                    raise ValueError(f"negative S power in {family}[{j}]: {row!r}")
                if (k, m) in entries:
                    raise ValueError(f"duplicate entry in {family}[{j}]: {row!r}")
                entries[(k, m)] = coeff
            table[j] = entries
        out[family] = table
    missing = set(TABLE_SHAPE) - set(out)
    if missing:
        raise ValueError(f"missing coefficient families: {sorted(missing)}")
    return out


def constant_catalog() -> Dict[str, PowerSum]:
    """Closed-form majorant constants as symbolic sums over rho powers."""
    raw = _load("constant_catalog.json")["constants"]
    out: Dict[str, PowerSum] = {}
    for name, rows in raw.items():
        terms: Dict[Fraction, Dict[int, QSqrt2]] = {}
        for row in rows:
            if len(row) != 4:
                raise ValueError(f"malformed row in constant {name}: {row!r}")
            exponent = Fraction(row[0])
            k = int(row[1])
            coeff = QSqrt2(Fraction(row[2]), Fraction(row[3]))
            bucket = terms.setdefault(exponent, {})
            if k in bucket:
                raise ValueError(f"duplicate term in constant {name}: {row!r}")
            bucket[k] = coeff
        out[name] = PowerSum(
            {e: SPoly(coeffs) for e, coeffs in terms.items()}
        )
    return out


def reference_values() -> Dict[str, str]:
    """Printed decimal truncations of assembled quantities at rho = 3."""
    raw = _load("constant_catalog.json")["reference_values"]["values"]
    return dict(raw)


def inner_polynomials() -> Dict[str, Poly]:
    """Approximating polynomials in s = t + 17/10, ascending coefficients."""
    raw = _load("inner_ode.json")["polynomials"]
    return {name: poly(coeffs) for name, coeffs in raw.items()}


def inner_partitions() -> Dict[str, List[Fraction]]:
    """Certification partitions as ascending t values in [-17/10, 0]."""
    raw = _load("inner_ode.json")["partitions"]
    out: Dict[str, List[Fraction]] = {}
    for name, magnitudes in raw.items():
        points = sorted(-Fraction(v) for v in magnitudes)
        if len(points) != len(set(points)):
            raise ValueError(f"partition {name!r} has repeated points")
        out[name] = points
    return out
