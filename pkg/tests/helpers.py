"""Shared fixtures data for the test-suite."""

from __future__ import annotations

from alcove_tilt.affine_weyl import AffineWeylGroup
from alcove_tilt.root_datum import build_root_datum

SMALL_PRESETS = ["A1-adjoint", "A1-sc", "A2", "A3", "B2", "G2"]
RANK2_PRESETS = ["A1-adjoint", "A1-sc", "A2", "B2", "G2"]

# criterion number -> (passed, seconds, limit, detail); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple] = {}

_GROUPS: dict[str, AffineWeylGroup] = {}


def group_of(name: str) -> AffineWeylGroup:
    """One shared affine Weyl group per preset, so memo tables are reused."""
    g = _GROUPS.get(name)
    if g is None:
        g = _GROUPS[name] = AffineWeylGroup(build_root_datum(name))
    return g
