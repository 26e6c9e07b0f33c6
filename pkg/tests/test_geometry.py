from __future__ import annotations

from fractions import Fraction

import pytest

from divides import DivideError, ingest_polyline, trace_faces
from divides.geometry import QuadPoint, compare_circle_points, sign_quad, sign_quad2


F = Fraction


def test_sign_quad():
    assert sign_quad(F(0), F(0), F(2)) == 0
    assert sign_quad(F(-3), F(2), F(2)) == -1  # 2*sqrt(2) < 3
    assert sign_quad(F(-2), F(2), F(2)) == 1  # 2*sqrt(2) > 2
    assert sign_quad(F(-2), F(1), F(4)) == 0  # sqrt(4) = 2
    assert sign_quad(F(5), F(-1), F(16)) == 1


def test_sign_quad2():
    # sqrt(2) + sqrt(3) - sqrt(2*3) + 1 > 0 and its negation < 0
    assert sign_quad2(F(1), F(1), F(1), F(-1), F(2), F(3)) == 1
    assert sign_quad2(F(-1), F(-1), F(-1), F(1), F(2), F(3)) == -1
    # sqrt(2)*sqrt(8) - 4 = 0
    assert sign_quad2(F(-4), F(0), F(0), F(1), F(2), F(8)) == 0


def test_circle_point_order():
    # exact points on a radius-5 circle, no irrational parts needed
    def pt(x, y):
        return QuadPoint(ax=F(x), bx=F(0), ay=F(y), by=F(0), d=F(0))

    east, north, west, south = pt(5, 0), pt(0, 5), pt(-5, 0), pt(0, -5)
    ring = [east, north, west, south]
    for i in range(3):
        assert compare_circle_points(ring[i], ring[i + 1]) == -1
    assert compare_circle_points(north, pt(3, 4)) == 1  # (3,4) is earlier


def test_ingest_two_diagonals_is_a1():
    d = ingest_polyline(
        [([(-9, -9), (9, 9)], False), ([(-9, 9), (9, -9)], False)],
        disc_radius=8,
        seed_point=(1, 0),
        seed_sign=-1,
    )
    assert len(d.double_points) == 1
    assert len(d.terminals) == 4
    assert len(d.branches) == 2
    fs = trace_faces(d)
    assert fs.region_indices == ()


def test_ingest_terminal_order_is_ccw():
    d = ingest_polyline(
        [([(-9, -9), (9, 9)], False), ([(-9, 9), (9, -9)], False)],
        disc_radius=8,
        seed_point=(1, 0),
        seed_sign=-1,
    )
    # four terminals at 45, 135, 225, 315 degrees; t0 is the northeast one
    assert d.terminals == ("t0", "t1", "t2", "t3")


def test_ingest_rejects_endpoint_inside():
    with pytest.raises(DivideError, match="outside the disc"):
        ingest_polyline([([(0, 0), (9, 9)], False)], 8, (1, 0), -1)


def test_ingest_rejects_interior_vertex_outside():
    with pytest.raises(DivideError, match="inside"):
        ingest_polyline([([(-9, 0), (0, 9), (9, 0)], False)], 8, (0, 1), -1)


def test_ingest_rejects_vertex_intersection():
    with pytest.raises(DivideError, match="intersection at a polyline vertex"):
        ingest_polyline(
            [([(-9, 0), (0, 0), (9, 9)], False), ([(-9, 9), (0, 0), (9, -9)], False)],
            8,
            (1, 0),
            -1,
        )


def test_ingest_rejects_triple_point():
    with pytest.raises(DivideError, match="triple point"):
        ingest_polyline(
            [
                ([(-9, -9), (9, 9)], False),
                ([(-9, 9), (9, -9)], False),
                ([(-9, 0), (9, 0)], False),
            ],
            8,
            (1, 1),
            -1,
        )


def test_ingest_rejects_overlap():
    with pytest.raises(DivideError, match="tangency or overlapping"):
        ingest_polyline(
            [([(-9, 0), (9, 0)], False), ([(-9, 0), (9, 0)], False)], 8, (1, 1), -1
        )


def test_ingest_rejects_witness_on_curve():
    with pytest.raises(DivideError, match="witness point on a curve"):
        ingest_polyline(
            [([(-9, -9), (9, 9)], False), ([(-9, 9), (9, -9)], False)], 8, (2, 2), -1
        )


def test_ingest_rejects_disconnected():
    with pytest.raises(DivideError, match="disconnected"):
        ingest_polyline(
            [([(-9, 5), (9, 5)], False), ([(-9, -5), (9, -5)], False)], 8, (0, 0), -1
        )


def test_ingest_euler_on_chords():
    """Chord arrangements satisfy V - E + F = 2 on the sphere compactification,
    i.e. traced faces number E - V + 1."""
    chords = [
        ([(-9, -1), (9, 1)], False),
        ([(-1, -9), (1, 9)], False),
        ([(-9, 4), (9, -5)], False),
    ]
    d = ingest_polyline(chords, 8, (0, 6), -1)
    fs = trace_faces(d)
    n_v = len(d.double_points) + len(d.terminals)
    n_e = len(d.edges) + len(d.terminals)
    assert len(fs.faces) == n_e - n_v + 1
