"""Equivariant Euler characteristics, Burnside rings, Mackey functors and K0 of squares."""

import json

from ._core import (
    GskError,
    Group,
    GroupTooLarge,
    InvalidArgument,
    NotAGroup,
    NotAnAction,
    NotInImage,
    ParseError,
    UnknownObject,
    UnsupportedGroup,
    burnside_mul,
    catalogue,
    euler_char,
    euler_via_strata,
    fixed_euler,
    from_marks,
    marks,
    orbit_string,
    smith_diagonal,
    table_of_marks,
)
from . import _core


def present_k0(presentation):
    """K0 of a squares presentation given as a dict in the fixture format."""
    return json.loads(_core._present_k0(json.dumps(presentation)))


def classes_equal(presentation, a, b):
    return _core._classes_equal(json.dumps(presentation), a, b)


def report(command, *files, number=0):
    """Run a CLI subcommand and return its JSON report as a dict.

    `number` is the prime for slice-counterexample and the seed for selftest.
    """
    return json.loads(_core._report(command, [str(f) for f in files], number))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
