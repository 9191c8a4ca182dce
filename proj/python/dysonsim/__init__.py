# Copyright 2026 The dysonsim Authors.
# SPDX-License-Identifier: Apache-2.0
"""Python interface to the dysonsim simulation library."""

import json
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from . import _core
from ._core import BudgetExceeded, Error, InvalidArgument, IoError

__all__ = [
    "BudgetExceeded",
    "Error",
    "InvalidArgument",
    "IoError",
    "estimate",
    "estimate_csv_columns",
    "simulate",
    "sweep",
    "verify",
    "verify_suites",
]

Model = Union[str, Mapping[str, Any]]


def _model_json(model: Model) -> str:
    return model if isinstance(model, str) else json.dumps(model)


def estimate(model: Model, t: float, eps: float) -> List[Dict[str, Any]]:
    """Resource estimate rows for every strategy the model supports."""
    return _core.estimate(_model_json(model), t, eps)


def sweep(model: Model, param: str, values: Sequence[float], t: float = 1.0,
          eps: float = 0.01) -> List[Dict[str, Any]]:
    """Estimate rows for each value of ``param``."""
    return _core.sweep(_model_json(model), param, list(values), t, eps)


def simulate(model: Model, t: float, eps: float, picture: str = "schrodinger",
             backend: str = "automatic") -> Dict[str, Any]:
    """Runs a simulation and returns the JSON report as a dict."""
    return json.loads(_core.simulate(_model_json(model), t, eps, picture, backend))


def verify(suite: str = "all", seed: int = 0,
           tolerances: Optional[Mapping[str, float]] = None) -> Dict[str, Any]:
    """Runs a property suite and returns its summary."""
    return json.loads(_core.verify(suite, seed, dict(tolerances or {})))


def estimate_csv_columns() -> List[str]:
    return list(_core.estimate_csv_columns())


def verify_suites() -> List[str]:
    return list(_core.verify_suites())
