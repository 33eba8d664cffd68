"""The three combinatorial invariants of a finite normal set.

* Helly number: largest subset forming the vertex set of a simplex whose
  relative interior contains the origin (equivalently, a minimal positively
  dependent subset).
* Cone number: largest subset in conical position whose positive hull avoids
  every remaining normal.
* Caratheodory number: the maximum of the two.

A relaxed cone number (conical position only, no emptiness requirement) is
reported alongside.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, InternalConsistencyError
from .hconvex import NormalSet
from .linear import Vector, is_zero_vector, rank, vsub
from .lp import EQ, GE, feasible_point

__all__ = [
    "InvariantReport",
    "positive_hull_contains",
    "is_simplex_with_origin",
    "is_conical_position",
    "helly_number",
    "cone_number",
    "relaxed_cone_number",
    "caratheodory_number",
]


@dataclass(frozen=True)
class InvariantReport:
    helly: int
    cone: int
    caratheodory: int
    relaxed_cone: int
    helly_witness: tuple[int, ...]
    cone_witness: tuple[int, ...]
    one_sided: bool

    def __post_init__(self):
        if self.caratheodory != max(self.helly, self.cone):
            raise InternalConsistencyError(
                "caratheodory must be the max of helly and cone"
            )
        if self.relaxed_cone < self.cone:
            raise InternalConsistencyError("relaxed cone number below cone number")
        if len(self.helly_witness) != self.helly:
            raise InternalConsistencyError("helly witness has the wrong size")
        if len(self.cone_witness) != self.cone:
            raise InternalConsistencyError("cone witness has the wrong size")

    def to_json(self) -> dict:
        return {
            "helly": self.helly,
            "cone": self.cone,
            "caratheodory": self.caratheodory,
            "relaxed_cone": self.relaxed_cone,
            "helly_witness": list(self.helly_witness),
            "cone_witness": list(self.cone_witness),
            "one_sided": self.one_sided,
        }


def _same_dim(vectors):
    vectors = [tuple(Fraction(c) for c in v) for v in vectors]
    if vectors:
        dim = len(vectors[0])
        for v in vectors:
            if len(v) != dim:
                raise InputError("vectors must share one dimension")
    return vectors


def positive_hull_contains(S, a: Vector) -> bool:
    """True iff a is a nonnegative combination of S.  pos({}) = {0}."""
    S = _same_dim(S)
    a = tuple(Fraction(c) for c in a)
    if not S:
        return is_zero_vector(a)
    dim = len(S[0])
    if len(a) != dim:
        raise InputError("target vector has the wrong dimension")
    rows = [
        (tuple(s[d] for s in S), EQ, a[d])
        for d in range(dim)
    ]
    return feasible_point(rows, len(S), nonneg=True) is not None


def _positive_dependence(S):
    """A coefficient vector lambda with lambda_i >= 1 and sum lambda_i s_i = 0,
    or None.  Encoded as lambda = 1 + mu with mu >= 0."""
    dim = len(S[0])
    target = tuple(-sum((s[d] for s in S), Fraction(0)) for d in range(dim))
    rows = [
        (tuple(s[d] for s in S), EQ, target[d])
        for d in range(dim)
    ]
    mu = feasible_point(rows, len(S), nonneg=True)
    if mu is None:
        return None
    return tuple(1 + m for m in mu)


def _origin_in_convex_hull(S) -> bool:
    """True iff 0 is a convex combination of S (S nonempty)."""
    dim = len(S[0])
    rows = [
        (tuple(s[d] for s in S), EQ, Fraction(0))
        for d in range(dim)
    ]
    rows.append(((Fraction(1),) * len(S), EQ, Fraction(1)))
    return feasible_point(rows, len(S), nonneg=True) is not None


def is_simplex_with_origin(S) -> bool:
    """True iff S is minimally positively dependent: some strictly positive
    combination of all of S vanishes, and no proper subset has a nonzero
    nonnegative vanishing combination.

    A passing S is cross-checked to be affinely independent, which makes it
    the vertex set of a simplex with the origin in its relative interior.
    """
    S = _same_dim(S)
    if not S:
        raise InputError("is_simplex_with_origin needs at least one vector")
    if _positive_dependence(S) is None:
        return False
    for j in range(len(S)):
        sub = S[:j] + S[j + 1:]
        if sub and _origin_in_convex_hull(sub):
            return False
    diffs = [vsub(s, S[0]) for s in S[1:]]
    if rank(diffs) != len(S) - 1:
        raise InternalConsistencyError(
            "minimal positive dependence without affine independence"
        )
    return True


def _strictly_separable(S) -> bool:
    """True iff some direction n has <n, s> >= 1 for every s in S (the
    homogeneous rescaling of strict set-level separation from 0)."""
    dim = len(S[0])
    rows = [(s, GE, Fraction(1)) for s in S]
    return feasible_point(rows, dim, nonneg=False) is not None


def is_conical_position(S) -> bool:
    """Strict set-level separation from the origin plus no member lying in the
    positive hull of the rest."""
    S = _same_dim(S)
    if not S:
        raise InputError("is_conical_position needs at least one vector")
    for s in S:
        if is_zero_vector(s):
            raise InputError("the zero vector cannot be in conical position")
    if not _strictly_separable(S):
        return False
    for j in range(len(S)):
        if positive_hull_contains(S[:j] + S[j + 1:], S[j]):
            return False
    return True


def helly_number(H: NormalSet) -> tuple[int, tuple[int, ...]]:
    """Largest minimal positively dependent subset, with its index witness.

    Minimal positive dependences are affinely independent, so the search is
    capped at dim + 1 vectors.  Returns (0, ()) for a one-sided H.
    """
    n = len(H.normals)
    best = (0, ())
    for k in range(2, min(H.dim + 1, n) + 1):
        for idx in combinations(range(n), k):
            if is_simplex_with_origin([H.normals[i] for i in idx]):
                best = (k, idx)
                break
    return best


def _conical_levels(H: NormalSet) -> list[list[tuple[int, ...]]]:
    """All conical-position index subsets, grouped by size.

    Conical position is hereditary, so the family is built level-wise and a
    candidate is tested only when all its facets passed the previous level.
    """
    n = len(H.normals)
    vectors = H.normals
    levels = []
    current = [(i,) for i in range(n)]
    while current:
        levels.append(current)
        prev = set(current)
        nxt = []
        for S in current:
            for j in range(S[-1] + 1, n):
                cand = S + (j,)
                if all(
                    cand[:i] + cand[i + 1:] in prev for i in range(len(cand) - 1)
                ):
                    if is_conical_position([vectors[i] for i in cand]):
                        nxt.append(cand)
        current = nxt
    return levels


def _hull_avoids_rest(H: NormalSet, idx) -> bool:
    chosen = [H.normals[i] for i in idx]
    members = set(idx)
    return not any(
        positive_hull_contains(chosen, H.normals[i])
        for i in range(len(H.normals))
        if i not in members
    )


def cone_number(H: NormalSet) -> tuple[int, tuple[int, ...]]:
    """Largest conical-position subset whose positive hull contains no other
    normal, with its index witness."""
    if not H.normals:
        raise InputError("cone number of an empty normal set is undefined")
    levels = _conical_levels(H)
    for level in reversed(levels):
        for idx in level:
            if _hull_avoids_rest(H, idx):
                return (len(idx), idx)
    raise InternalConsistencyError("singletons always qualify")


def relaxed_cone_number(H: NormalSet) -> int:
    """Largest conical-position subset, the emptiness condition dropped."""
    if not H.normals:
        raise InputError("relaxed cone number of an empty normal set is undefined")
    return len(_conical_levels(H))


def caratheodory_number(H: NormalSet) -> InvariantReport:
    """Full invariant report; the Caratheodory number is the exact maximum of
    the Helly and cone numbers."""
    if not H.normals:
        raise InputError("caratheodory number of an empty normal set is undefined")
    helly, helly_witness = helly_number(H)
    levels = _conical_levels(H)
    cone, cone_witness = 0, ()
    for level in reversed(levels):
        for idx in level:
            if _hull_avoids_rest(H, idx):
                cone, cone_witness = len(idx), idx
                break
        if cone:
            break
    return InvariantReport(
        helly=helly,
        cone=cone,
        caratheodory=max(helly, cone),
        relaxed_cone=len(levels),
        helly_witness=helly_witness,
        cone_witness=cone_witness,
        one_sided=helly == 0,
    )
