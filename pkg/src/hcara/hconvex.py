"""Hull membership for convexity restricted to a finite set of outer normals.

The hull of a finite point set X under a normal set H is
``{p : <a, p> <= max_{x in X} <a, x> for every a in H}``.  Everything here is
positively homogeneous in the normals, so they are kept as arbitrary nonzero
rational vectors instead of being forced onto the unit sphere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, PreconditionError
from .jsonio import (
    positive_int,
    require_keys,
    vector_from_json,
    vector_to_json,
)
from .linear import Vector, dot, is_zero_vector, primitive_direction

__all__ = [
    "NormalSet",
    "PointSet",
    "ExclusionAssignment",
    "support",
    "h_hull_contains",
    "covering_holds",
    "excluding_holds",
    "minimal_h_witness",
]


@dataclass(frozen=True)
class NormalSet:
    """A finite set of nonzero direction vectors.

    Construction collapses normals that are positive multiples of one another,
    keeping the first occurrence, so indices always refer to the collapsed
    list.
    """

    dim: int
    normals: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dimension must be >= 1")
        seen = {}
        kept = []
        for v in self.normals:
            v = tuple(Fraction(c) for c in v)
            if len(v) != self.dim:
                raise InputError(
                    f"normal {v} has dimension {len(v)}, expected {self.dim}"
                )
            if is_zero_vector(v):
                raise InputError("the zero vector is not a valid normal")
            key = primitive_direction(v)
            if key not in seen:
                seen[key] = True
                kept.append(v)
        object.__setattr__(self, "normals", tuple(kept))

    def __len__(self):
        return len(self.normals)

    def __iter__(self):
        return iter(self.normals)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "normals": [vector_to_json(a) for a in self.normals],
        }

    @classmethod
    def from_json(cls, obj) -> "NormalSet":
        require_keys(obj, ("dim", "normals"), "normal set")
        dim = positive_int(obj, "dim", "normal set")
        if not isinstance(obj["normals"], list) or not obj["normals"]:
            raise InputError("normal set needs a nonempty 'normals' array")
        return cls(dim, tuple(vector_from_json(v, dim) for v in obj["normals"]))


@dataclass(frozen=True)
class PointSet:
    """A finite set of pairwise distinct rational points."""

    dim: int
    points: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dimension must be >= 1")
        pts = []
        seen = set()
        for p in self.points:
            p = tuple(Fraction(c) for c in p)
            if len(p) != self.dim:
                raise InputError(
                    f"point {p} has dimension {len(p)}, expected {self.dim}"
                )
            if p in seen:
                raise InputError(f"duplicate point {p}")
            seen.add(p)
            pts.append(p)
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def drop(self, index: int) -> "PointSet":
        return PointSet(
            self.dim,
            self.points[:index] + self.points[index + 1:],
        )

    def subset(self, indices) -> "PointSet":
        return PointSet(self.dim, tuple(self.points[i] for i in indices))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [vector_to_json(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, obj) -> "PointSet":
        require_keys(obj, ("dim", "points"), "point set")
        dim = positive_int(obj, "dim", "point set")
        if not isinstance(obj["points"], list):
            raise InputError("point set needs a 'points' array")
        return cls(dim, tuple(vector_from_json(p, dim) for p in obj["points"]))


@dataclass(frozen=True)
class ExclusionAssignment:
    """Per point j, a normal index f(j) whose nonnegative halfspace contains
    x_j and no other point of X.  Validated on construction."""

    by_point: tuple[int, ...]

    @classmethod
    def build(cls, H: NormalSet, X: PointSet, by_point) -> "ExclusionAssignment":
        by_point = tuple(by_point)
        if len(by_point) != len(X):
            raise InputError("assignment must cover every point")
        for j, i in enumerate(by_point):
            a = H.normals[i]
            if dot(a, X.points[j]) < 0:
                raise InputError(f"normal {i} does not see point {j}")
            for jj, x in enumerate(X.points):
                if jj != j and dot(a, x) >= 0:
                    raise InputError(f"normal {i} is not exclusive to point {j}")
        return cls(by_point)

    def to_json(self) -> dict:
        return {str(j): i for j, i in enumerate(self.by_point)}


def _check_joint(H: NormalSet, X: PointSet):
    if H.dim != X.dim:
        raise InputError(f"dimension mismatch: normals {H.dim}, points {X.dim}")


def support(X: PointSet, a: Vector) -> Fraction:
    """max over X of the inner product with a."""
    if not X.points:
        raise InputError("support of an empty point set is undefined")
    return max(dot(a, p) for p in X.points)


def h_hull_contains(H: NormalSet, X: PointSet, p: Vector) -> bool:
    """Membership of p in the hull of X restricted to normals H."""
    _check_joint(H, X)
    if not X.points:
        raise InputError("hull of an empty point set is undefined")
    p = tuple(Fraction(c) for c in p)
    if len(p) != H.dim:
        raise InputError("query point has the wrong dimension")
    for a in H.normals:
        if dot(a, p) > support(X, a):
            return False
    return True


def covering_holds(H: NormalSet, X: PointSet) -> bool:
    """True iff every normal sees some point nonnegatively, i.e. the origin
    lies in the restricted hull of X.  An empty X covers nothing."""
    _check_joint(H, X)
    return all(
        any(dot(a, x) >= 0 for x in X.points) for a in H.normals
    )


def excluding_holds(H: NormalSet, X: PointSet) -> ExclusionAssignment | None:
    """Assign to each point a normal that sees it nonnegatively and every
    other point strictly negatively; None when no such normal exists for some
    point.  Per point, the least qualifying normal index is chosen."""
    _check_joint(H, X)
    chosen = []
    for j, x in enumerate(X.points):
        found = None
        for i, a in enumerate(H.normals):
            if dot(a, x) < 0:
                continue
            if all(
                dot(a, y) < 0 for jj, y in enumerate(X.points) if jj != j
            ):
                found = i
                break
        if found is None:
            return None
        chosen.append(found)
    return ExclusionAssignment.build(H, X, chosen)


def minimal_h_witness(H: NormalSet, X: PointSet, p: Vector) -> PointSet:
    """Minimum-cardinality subset of X whose restricted hull still contains p.

    Exhaustive search by increasing size, lexicographic index order inside a
    size, so the result is canonical.
    """
    if not h_hull_contains(H, X, p):
        raise PreconditionError("query point is not in the hull of X")
    for k in range(1, len(X) + 1):
        for idx in combinations(range(len(X)), k):
            cand = X.subset(idx)
            if h_hull_contains(H, cand, p):
                return cand
    raise PreconditionError("unreachable: X itself contains p")
