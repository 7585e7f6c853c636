"""Exact checks for tetrahedron-equation structures of the 3D Ising model."""

import json

from . import _tetralab
from ._tetralab import (
    StructuralError,
    UsageError,
    check_ids,
    enumerate_faces,
    is_induced_cycle,
    min_distance,
    orientation,
    tables_star,
)

__all__ = [
    "StructuralError",
    "UsageError",
    "check_ids",
    "enumerate_faces",
    "ising_R",
    "is_induced_cycle",
    "min_distance",
    "orientation",
    "run_check",
    "tables_star",
    "z_spin",
]


def run_check(check, size="2x2x2", threads=0, a_reading="direction", method="all"):
    """Run a check id (or "all") and return its reports as dicts."""
    return [json.loads(s) for s in _tetralab.run_check_json(check, size, threads, a_reading, method)]


def z_spin(size="2x2x2"):
    """Spin partition function as {exponent: coefficient}."""
    return {int(k): v for k, v in json.loads(_tetralab.z_spin_json(size)).items()}


def ising_R():
    """Pairs of the Ising Yang-Baxter relation as ("ab", "cd") strings of +/-."""
    return _tetralab.ising_R_pairs()
