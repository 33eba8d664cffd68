from fractions import Fraction as F

import pytest

from hcara.errors import InputError, NotMaximalWitnessError
from hcara.hconvex import NormalSet, PointSet, covering_holds, minimal_h_witness
from hcara.linear import dot
from hcara.shapes import cube_normals, pyramid_normals, triangle_normals
from hcara.witness import (
    CONE,
    HELLY,
    cone_witness_points,
    helly_witness_points,
    validate_witness,
)

BOX = cube_normals(2)
ORIGIN2 = (F(0), F(0))


class TestHellyWitness:
    def test_opposite_pair(self):
        H = NormalSet(2, ((F(1), F(0)), (F(-1), F(0))))
        rep = helly_witness_points(H, (0, 1))
        assert rep.kind == HELLY
        assert rep.points.points == ((F(1), F(0)), (F(-1), F(0)))
        assert rep.covering_ok and rep.drop_one_ok

    def test_triangle_construction_identities(self):
        H = triangle_normals()
        rep = helly_witness_points(H, (0, 1, 2))
        X = rep.points.points
        assert set(X) == {(F(-2), F(1)), (F(1), F(-2)), (F(1), F(1))}
        k = 3
        for i, a in enumerate(H.normals):
            for j, x in enumerate(X):
                assert dot(a, x) == (k - 1 if i == j else -1)
        total = tuple(sum(c) for c in zip(*X))
        assert total == ORIGIN2

    def test_rescaling_handles_unbalanced_circuits(self):
        # (2,0) + 2*(-1,1) + 2*(0,-1) = 0: dependence coefficients not all equal
        H = NormalSet(2, ((F(2), F(0)), (F(-1), F(1)), (F(0), F(-1))))
        rep = helly_witness_points(H, (0, 1, 2))
        assert rep.covering_ok and rep.drop_one_ok
        assert len(rep.points) == 3

    def test_not_a_circuit_rejected(self):
        with pytest.raises(InputError):
            helly_witness_points(BOX, (0, 2))  # e1, e2: independent

    def test_too_small_rejected(self):
        with pytest.raises(InputError):
            helly_witness_points(BOX, (0,))


class TestConeWitness:
    def test_box_pair(self):
        rep = cone_witness_points(BOX, (0, 2))
        assert rep.kind == CONE
        assert rep.covering_ok and rep.drop_one_ok
        a_first, a_second = BOX.normals[0], BOX.normals[2]
        x_first, x_second = rep.points.points
        assert dot(a_first, x_first) == 0 and dot(a_first, x_second) <= -1
        assert dot(a_second, x_second) == 0 and dot(a_second, x_first) <= -1

    def test_square_pyramid_covers_base_normal(self):
        H = pyramid_normals(4)
        rep = cone_witness_points(H, (0, 1, 2, 3))
        assert rep.covering_ok and rep.drop_one_ok
        assert len(rep.points) == 4

    def test_single_normal(self):
        H = NormalSet(2, ((F(1), F(0)),))
        rep = cone_witness_points(H, (0,))
        assert len(rep.points) == 1
        assert dot(H.normals[0], rep.points.points[0]) == 0

    def test_not_conical_rejected(self):
        # e1 and -e1 cannot be strictly separated from the origin together
        with pytest.raises(Exception) as exc_info:
            cone_witness_points(BOX, (0, 1))
        assert not isinstance(exc_info.value, NotMaximalWitnessError)

    def test_non_maximal_covering_failure(self):
        # (2,1) = (1,0) + (1,1) lies in the positive hull of B, so every
        # constructed point sees it strictly negatively and covering fails
        H = NormalSet(2, ((F(1), F(0)), (F(1), F(1)), (F(2), F(1))))
        with pytest.raises(NotMaximalWitnessError):
            cone_witness_points(H, (0, 1))

    def test_degenerate_small_witness_still_validates(self):
        # a non-maximal B may still luckily produce a valid (weaker) witness;
        # it certifies only |B|, which is allowed
        rep = cone_witness_points(BOX, (0,))
        assert rep.covering_ok and rep.drop_one_ok and len(rep.points) == 1

    def test_deterministic(self):
        a = cone_witness_points(BOX, (0, 2))
        b = cone_witness_points(BOX, (0, 2))
        assert a == b


class TestValidate:
    def test_valid_pair(self):
        rep = validate_witness(BOX, PointSet(2, ((F(0), F(-1)), (F(-1), F(0)))))
        assert rep.covering_ok and rep.drop_one_ok and rep.assignment is not None

    def test_redundant_extra_point(self):
        rep = validate_witness(
            BOX, PointSet(2, ((F(0), F(-1)), (F(-1), F(0)), (F(1), F(1))))
        )
        assert rep.covering_ok and not rep.drop_one_ok

    def test_covering_failure(self):
        H = NormalSet(2, ((F(1), F(0)),))
        rep = validate_witness(H, PointSet(2, ((F(-1), F(0)),)))
        assert not rep.covering_ok

    def test_unknown_kind_rejected(self):
        with pytest.raises(InputError):
            validate_witness(BOX, PointSet(2, (ORIGIN2,)), kind="OTHER")


class TestCrossModuleConsistency:
    @pytest.mark.parametrize(
        "H,B,builder",
        [
            (triangle_normals(), (0, 1, 2), helly_witness_points),
            (cube_normals(3), (0, 2, 4), cone_witness_points),
            (pyramid_normals(4), (0, 1, 2, 3), cone_witness_points),
        ],
    )
    def test_valid_witnesses_are_minimal(self, H, B, builder):
        rep = builder(H, B)
        assert minimal_h_witness(H, rep.points, (F(0),) * H.dim) == rep.points

    def test_dropping_any_point_breaks_covering(self):
        rep = cone_witness_points(cube_normals(3), (0, 2, 4))
        for j in range(len(rep.points)):
            assert not covering_holds(cube_normals(3), rep.points.drop(j))
