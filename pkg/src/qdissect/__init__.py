"""qdissect: exact truncated q-series arithmetic, dissections, and an
identity registry for Rogers-Ramanujan style product identities."""

from ._kernels import BACKEND as kernel_backend
from .series import Series
from .exprlang import Evaluator, evaluate, parse, to_text
from .registry import load_registry, verify, verify_proof_pipeline

__version__ = "1.0.0"

__all__ = [
    "Series",
    "Evaluator",
    "evaluate",
    "parse",
    "to_text",
    "load_registry",
    "verify",
    "verify_proof_pipeline",
    "kernel_backend",
    "__version__",
]
