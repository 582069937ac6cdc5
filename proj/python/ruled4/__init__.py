"""Python bindings for the ruled4 library."""

import json as _json

from ._ruled4 import (
    DegenerateNormal,
    DirectorConstraintViolated,
    DomainError,
    Error,
    ExpressionSyntaxError,
    Expr,
    InconsistentSeed,
    IoError,
    NonUnitI,
    Scene,
    SchemaError,
    SingularMetric,
    UnknownIdentifier,
    causal_character,
    cross4,
    load_scene,
    lorentz_dot,
    oct_mul,
    octonion_table_csv,
    parse_scene,
)
from . import _ruled4


def check(scene, threads=0):
    """Claims report of a scene as a dict."""
    return _json.loads(_ruled4.check_json(scene, threads))


def curvature(scene, x, y, z):
    """Curvature report at one parameter point as a dict."""
    return _json.loads(_ruled4.curvature_json(scene, x, y, z))


def mesh(scene, format="obj", drop_axis=0, threads=0):
    """Mesh export of the scene grid as text."""
    return _ruled4.mesh_text(scene, format, drop_axis, threads)
