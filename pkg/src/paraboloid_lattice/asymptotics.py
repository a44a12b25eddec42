"""Error-term scans over the dilation R and log-log exponent fits."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from ._parallel import ordered_map
from .lattice import ErrorRecord, ParaboloidSpec, error_record

MIN_ERROR = 1e-9


@dataclass(frozen=True)
class FitResult:
    slope: float
    max_normalized: float
    p95_normalized: float
    used: int
    dropped: int


def error_scan(spec: ParaboloidSpec, R_list: Sequence[int], jobs: int = 1) -> List[ErrorRecord]:
    """One ErrorRecord per R, in input order."""
    return ordered_map(functools.partial(error_record, spec), list(R_list), jobs)


def fit_exponent(records: Sequence[ErrorRecord]) -> FitResult:
    """Least-squares slope of log|E| against log R.

    Records with |E| < 1e-9 are dropped. The normalized statistics use
    |E| / R^slope over the retained records.
    """
    kept = [r for r in records if abs(r.error) >= MIN_ERROR]
    if len(kept) < 3:
        raise ValueError(f"need at least 3 records with nonzero error, got {len(kept)}")
    logR = np.log([float(r.R) for r in kept])
    logE = np.log([abs(r.error) for r in kept])
    slope = float(np.polyfit(logR, logE, 1)[0])
    norm = normalized_errors(kept, slope)
    return FitResult(slope, float(norm.max()), float(np.percentile(norm, 95)), len(kept), len(records) - len(kept))


def normalized_errors(records: Sequence[ErrorRecord], exponent: float) -> np.ndarray:
    return np.array([abs(r.error) / math.pow(r.R, exponent) for r in records])
