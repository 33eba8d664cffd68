import random
from fractions import Fraction

import pytest

from hcara.hconvex import NormalSet
from hcara.shapes import (
    cross_polytope,
    cross_polytope_normals,
    cube_normals,
    cube_polytope,
    pyramid_normals,
    pyramid_polytope,
    simplex_normals,
    simplex_polytope,
    simplex_with_extra_facet_normals,
    simplex_with_extra_facet_polytope,
    triangle_normals,
    triangle_polytope,
)


def named_polytopes():
    """(name, polytope, is_simplex) for the standing corpus."""
    return [
        ("cube2", cube_polytope(2), False),
        ("cube3", cube_polytope(3), False),
        ("cube4", cube_polytope(4), False),
        ("simplex2", simplex_polytope(2), True),
        ("simplex3", simplex_polytope(3), True),
        ("triangle", triangle_polytope(), True),
        ("pyramid4", pyramid_polytope(4), False),
        ("pyramid5", pyramid_polytope(5), False),
        ("pyramid6", pyramid_polytope(6), False),
        ("simplex_plus2", simplex_with_extra_facet_polytope(2), False),
        ("simplex_plus3", simplex_with_extra_facet_polytope(3), False),
        ("cross2", cross_polytope(2), False),
        ("cross3", cross_polytope(3), False),
    ]


def named_normal_sets():
    return [
        ("cube2", cube_normals(2)),
        ("cube3", cube_normals(3)),
        ("cube4", cube_normals(4)),
        ("simplex2", simplex_normals(2)),
        ("simplex3", simplex_normals(3)),
        ("triangle", triangle_normals()),
        ("pyramid4", pyramid_normals(4)),
        ("pyramid5", pyramid_normals(5)),
        ("pyramid6", pyramid_normals(6)),
        ("simplex_plus2", simplex_with_extra_facet_normals(2)),
        ("simplex_plus3", simplex_with_extra_facet_normals(3)),
        ("cross2", cross_polytope_normals(2)),
        ("cross3", cross_polytope_normals(3)),
    ]


def random_normal_sets(count, seed=20240901, max_size=8, max_dim=3, bound=3):
    """Seeded small normal sets (one-sided ones included) for oracle checks."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        dim = rng.randint(2, max_dim)
        size = rng.randint(2, max_size)
        vectors = []
        for _ in range(size):
            v = tuple(
                Fraction(rng.randint(-bound, bound), rng.randint(1, 2))
                for _ in range(dim)
            )
            if any(c != 0 for c in v):
                vectors.append(v)
        if not vectors:
            continue
        H = NormalSet(dim, tuple(vectors))
        if len(H) >= 2:
            out.append(H)
    return out


@pytest.fixture(scope="session")
def corpus_polytopes():
    return named_polytopes()


@pytest.fixture(scope="session")
def corpus_normal_sets():
    return named_normal_sets()
