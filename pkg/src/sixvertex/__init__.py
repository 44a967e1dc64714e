"""Exact six-vertex Yang-Baxter solutions, their parametrized families and the Yang-Baxter groupoid."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .exceptions import (
    DegenerateProductError,
    ModeError,
    NotInSError,
    ParseError,
    SingularMatrixError,
    SixVertexError,
    StatisticsUndefinedError,
)
from .families import *  # noqa: F401,F403
from .families import __all__ as _families_all
from .groupoid import *  # noqa: F401,F403
from .groupoid import __all__ as _groupoid_all
from .scalars import EXACT, FLOAT, GaussianRational, ScalarMode, parse_scalar, render_scalar
from .ybe import *  # noqa: F401,F403
from .ybe import __all__ as _ybe_all

__all__ = [
    *_core_all,
    *_ybe_all,
    *_families_all,
    *_groupoid_all,
    "EXACT",
    "FLOAT",
    "GaussianRational",
    "ScalarMode",
    "parse_scalar",
    "render_scalar",
    "SixVertexError",
    "ModeError",
    "ParseError",
    "NotInSError",
    "SingularMatrixError",
    "StatisticsUndefinedError",
    "DegenerateProductError",
]
