"""Extremal point sets certifying the lower bounds of the two invariants.

Both constructions produce a point set X whose restricted hull contains the
origin while every drop-one subset's hull does not, which certifies that no
smaller witness can work, i.e. the Caratheodory number is at least |X|.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    InputError,
    InternalConsistencyError,
    NotMaximalWitnessError,
    PreconditionError,
)
from .hconvex import (
    ExclusionAssignment,
    NormalSet,
    PointSet,
    covering_holds,
    excluding_holds,
)
from .invariants import is_simplex_with_origin
from .linear import dot, solve_linear, vscale
from .lp import EQ, LE, feasible_point

__all__ = [
    "HELLY",
    "CONE",
    "UNSPECIFIED",
    "WitnessReport",
    "helly_witness_points",
    "cone_witness_points",
    "validate_witness",
]

HELLY = "HELLY"
CONE = "CONE"
UNSPECIFIED = "UNSPECIFIED"


@dataclass(frozen=True)
class WitnessReport:
    kind: str
    normals_used: tuple[int, ...]
    points: PointSet
    covering_ok: bool
    drop_one_ok: bool
    assignment: ExclusionAssignment | None

    @property
    def valid(self) -> bool:
        return self.covering_ok and self.drop_one_ok

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "normals_used": list(self.normals_used),
            "points": self.points.to_json(),
            "covering_ok": self.covering_ok,
            "drop_one_ok": self.drop_one_ok,
            "assignment": None if self.assignment is None else self.assignment.to_json(),
        }


def _drop_one_ok(H: NormalSet, X: PointSet) -> bool:
    return all(
        not covering_holds(H, X.drop(j)) for j in range(len(X))
    )


def _checked_indices(H: NormalSet, B) -> tuple[int, ...]:
    idx = tuple(B)
    if len(set(idx)) != len(idx):
        raise InputError("witness indices must be distinct")
    for i in idx:
        if not isinstance(i, int) or i < 0 or i >= len(H.normals):
            raise InputError(f"normal index {i!r} out of range")
    return idx


def _canonical_dependence(S) -> tuple[Fraction, ...]:
    """The unique (up to scale) positive vanishing combination of a minimal
    positively dependent family, scaled to primitive positive integers."""
    dim = len(S[0])
    rows = [tuple(s[d] for s in S[1:]) for d in range(dim)]
    rhs = [-S[0][d] for d in range(dim)]
    tail = solve_linear(rows, rhs)
    if tail is None:
        raise InternalConsistencyError("dependence system must be consistent")
    lam = (Fraction(1),) + tail
    if any(c <= 0 for c in lam):
        raise InternalConsistencyError("dependence coefficients must be positive")
    scale = lcm(*(c.denominator for c in lam))
    ints = [int(c * scale) for c in lam]
    g = gcd(*ints)
    return tuple(Fraction(n // g) for n in ints)


def helly_witness_points(H: NormalSet, B) -> WitnessReport:
    """Witness points for a maximal simplex-with-origin subset B.

    The normals of B are rescaled so they sum to zero; each point x_i is the
    unique vector in the span of B with <a_j, x_i> = -1 for all j != i, which
    forces <a_i, x_i> = |B| - 1 and sum x_i = 0.
    """
    idx = _checked_indices(H, B)
    S = [H.normals[i] for i in idx]
    k = len(S)
    if k < 2:
        raise InputError("a simplex-with-origin witness needs at least 2 normals")
    if not is_simplex_with_origin(S):
        raise InputError("B is not minimally positively dependent")
    lam = _canonical_dependence(S)
    scaled = [vscale(S[i], lam[i]) for i in range(k)]
    points = []
    for i in range(k):
        rows = [scaled[j] for j in range(k) if j != i]
        x = solve_linear(rows, [Fraction(-1)] * (k - 1))
        if x is None:
            raise InternalConsistencyError("witness system must be consistent")
        if dot(scaled[i], x) != k - 1:
            raise InternalConsistencyError("self inner product must be k - 1")
        points.append(x)
    total = tuple(sum(col, Fraction(0)) for col in zip(*points))
    if any(c != 0 for c in total):
        raise InternalConsistencyError("witness points must sum to zero")
    X = PointSet(H.dim, tuple(points))
    covering = covering_holds(H, X)
    drop_one = _drop_one_ok(H, X)
    if not (covering and drop_one):
        raise InternalConsistencyError("constructed witness failed validation")
    return WitnessReport(
        kind=HELLY,
        normals_used=idx,
        points=X,
        covering_ok=True,
        drop_one_ok=True,
        assignment=excluding_holds(H, X),
    )


def cone_witness_points(H: NormalSet, B) -> WitnessReport:
    """Witness points for a cone-number witness B.

    Each x_i solves <a_i, x_i> = 0 with <a_j, x_i> <= -1 for the other members
    of B (strictness via rescaling; the feasible set is a cone).  These LPs
    are feasible precisely when B is in conical position.  The covering check
    over all of H is what certifies that B realizes the cone number; a
    covering failure is reported as a not-maximal-witness error.
    """
    idx = _checked_indices(H, B)
    if not idx:
        raise InputError("a cone witness needs at least one normal")
    S = [H.normals[i] for i in idx]
    k = len(S)
    points = []
    for i in range(k):
        rows = [(S[i], EQ, Fraction(0))]
        rows.extend((S[j], LE, Fraction(-1)) for j in range(k) if j != i)
        x = feasible_point(rows, H.dim, nonneg=False)
        if x is None:
            raise PreconditionError("B is not in conical position")
        points.append(x)
    X = PointSet(H.dim, tuple(points))
    if not covering_holds(H, X):
        raise NotMaximalWitnessError(
            "constructed points do not cover every normal; "
            "B does not realize the cone number"
        )
    if not _drop_one_ok(H, X):
        raise InternalConsistencyError("cone witness must be drop-one minimal")
    return WitnessReport(
        kind=CONE,
        normals_used=idx,
        points=X,
        covering_ok=True,
        drop_one_ok=True,
        assignment=excluding_holds(H, X),
    )


def validate_witness(H: NormalSet, X: PointSet, kind: str = UNSPECIFIED) -> WitnessReport:
    """Evaluate the covering and drop-one properties of an arbitrary point set
    and extract the exclusion assignment when one exists."""
    if kind not in (HELLY, CONE, UNSPECIFIED):
        raise InputError(f"unknown witness kind {kind!r}")
    return WitnessReport(
        kind=kind,
        normals_used=(),
        points=X,
        covering_ok=covering_holds(H, X),
        drop_one_ok=_drop_one_ok(H, X),
        assignment=excluding_holds(H, X),
    )
