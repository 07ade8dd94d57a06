"""Enumeration of constrained non-crossing Laman frameworks on planar point sets."""

from ._lamanenum import (
    ConstraintError,
    GenericityError,
    InstanceParseError,
    brute_frameworks,
    build_cdt,
    check_generic,
    count_frameworks,
    enumerate_frameworks,
    framework_root,
    incircle,
    incircle_tiebroken,
    orientation,
    parse_instance,
)

__all__ = [
    "ConstraintError",
    "GenericityError",
    "InstanceParseError",
    "brute_frameworks",
    "build_cdt",
    "check_generic",
    "count_frameworks",
    "enumerate_frameworks",
    "framework_root",
    "incircle",
    "incircle_tiebroken",
    "orientation",
    "parse_instance",
]
