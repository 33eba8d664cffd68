"""Brute-force oracles: no size caps, no hereditary pruning, no early exits.

Everything enumerates all 2^|H| subsets directly so the pruned searches in the
package have an independent path to agree with.
"""
from itertools import combinations

from hcara.invariants import (
    is_conical_position,
    is_simplex_with_origin,
    positive_hull_contains,
)


def all_subsets(n):
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def brute_helly(H):
    best = (0, ())
    for idx in all_subsets(len(H.normals)):
        if is_simplex_with_origin([H.normals[i] for i in idx]):
            if len(idx) > best[0]:
                best = (len(idx), idx)
    return best


def brute_cone(H):
    best = (0, ())
    for idx in all_subsets(len(H.normals)):
        vectors = [H.normals[i] for i in idx]
        if not is_conical_position(vectors):
            continue
        chosen = set(idx)
        if any(
            positive_hull_contains(vectors, H.normals[i])
            for i in range(len(H.normals))
            if i not in chosen
        ):
            continue
        if len(idx) > best[0]:
            best = (len(idx), idx)
    return best


def brute_relaxed_cone(H):
    best = 0
    for idx in all_subsets(len(H.normals)):
        if is_conical_position([H.normals[i] for i in idx]):
            best = max(best, len(idx))
    return best
