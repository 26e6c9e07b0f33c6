from __future__ import annotations

import dataclasses

import pytest

from divides import (
    Divide,
    DivideError,
    EdgeDef,
    SignSeed,
    assign_signs,
    gen_a,
    gen_e6,
    ingest_polyline,
    invariants,
    region_shape_warnings,
    trace_faces,
    validate_divide,
)
from conftest import entry, pipeline


def test_a1_structure():
    d = gen_a(1).divide
    assert validate_divide(d) == []
    assert len(d.double_points) == 1
    assert len(d.branches) == 2


def test_three_valent_vertex_rejected():
    d = gen_a(1).divide
    # drop one edge end by removing an edge entirely
    broken = dataclasses.replace(
        d,
        edges=d.edges[:-1],
        branches=(d.branches[0], d.branches[1][:-1]),
    )
    diags = validate_divide(broken)
    assert any("degree mismatch at vertex" in m for m in diags)


def test_slot_used_twice_rejected():
    d = gen_a(1).divide
    e0 = d.edges[0]
    clash = EdgeDef(id="clash", ends=(e0.ends[1], ("tB", 0)))
    broken = dataclasses.replace(d, edges=d.edges + (clash,))
    diags = validate_divide(broken)
    assert any("slot used twice" in m for m in diags)


def test_disconnected_rejected():
    # two separate crossing pairs, never touching: two copies of A_1
    a = gen_a(1).divide
    ren = {v: v + "'" for v in a.double_points + a.terminals}
    other_edges = tuple(
        EdgeDef(id=e.id + "'", ends=((ren[e.ends[0][0]], e.ends[0][1]),
                                     (ren[e.ends[1][0]], e.ends[1][1])))
        for e in a.edges
    )
    broken = Divide(
        name="two-a1",
        double_points=a.double_points + tuple(ren[v] for v in a.double_points),
        terminals=a.terminals + tuple(ren[v] for v in a.terminals),
        edges=a.edges + other_edges,
        branches=a.branches
        + tuple(tuple(e + "'" for e in b) for b in a.branches),
        sign_seed=a.sign_seed,
    )
    assert any("disconnected graph" in m for m in validate_divide(broken))


def test_malformed_seed_rejected():
    d = gen_a(1).divide
    broken = dataclasses.replace(d, sign_seed=SignSeed(edge="nope", side="left", sign=-1))
    assert any("malformed sign seed" in m for m in validate_divide(broken))
    broken = dataclasses.replace(d, sign_seed=SignSeed(edge="l0", side="up", sign=-1))
    assert any("malformed sign seed" in m for m in validate_divide(broken))


def test_trace_faces_a1():
    d = gen_a(1).divide
    fs = trace_faces(d)
    assert len(fs.faces) == 4
    assert all(f.outer for f in fs.faces)
    assert fs.region_indices == ()


def test_trace_faces_a2():
    fs = trace_faces(gen_a(2).divide)
    assert len(fs.region_indices) == 1
    assert len(fs.faces) == 3


def test_trace_faces_e6():
    fs = trace_faces(gen_e6().divide)
    assert len(fs.region_indices) == 3


def test_trace_is_bijection_on_darts_and_arcs():
    for name in ("a1", "a4", "e6", "depth1"):
        d = entry(name).divide
        fs = trace_faces(d)
        items = [it for f in fs.faces for it in f.items]
        assert len(items) == len(set(items))
        n_darts = sum(1 for it in items if it[0] == "dart")
        n_arcs = sum(1 for it in items if it[0] == "arc")
        assert n_darts == 4 * len(d.double_points) + len(d.terminals)
        assert n_arcs == len(d.terminals)


def test_signs_a1_alternate():
    d = gen_a(1).divide
    sd = assign_signs(d, trace_faces(d))
    assert sorted(sd.sign) == [-1, -1, 1, 1]
    # every edge separates opposite signs
    from divides.core import edge_side_faces

    for e in d.edges:
        a, b = edge_side_faces(d, sd.faces, e)
        assert sd.sign[a] == -sd.sign[b]


def test_signs_a4_both_minus():
    sd = pipeline("a4").signed
    assert [sd.sign[f] for f in sd.faces.region_indices] == [-1, -1]


def test_signs_e6_pattern():
    r = pipeline("e6")
    # in diagram order the signed vertices read (-, -, +)
    types = [v.vtype for v in r.ag.vertices if v.vtype != "0"]
    assert types == ["-", "-", "+"]


def test_seed_flip_negates_everything():
    d = gen_e6().divide
    sd = assign_signs(d, trace_faces(d))
    flipped = dataclasses.replace(
        d, sign_seed=dataclasses.replace(d.sign_seed, sign=-d.sign_seed.sign)
    )
    sd2 = assign_signs(flipped, trace_faces(flipped))
    assert sd2.sign == tuple(-s for s in sd.sign)


def test_invariants_examples():
    for name, want in {
        "a4": (2, 1, 4, 2, 1),
        "e6": (3, 1, 6, 3, 1),
        "depth1": (6, 3, 10, 4, 3),
    }.items():
        inv = pipeline(name).inv
        got = (inv.d, inv.r, inv.mu, inv.genus, inv.boundary_components)
        assert got == want, name
        assert inv.mu == 2 * inv.d - inv.r + 1
        assert inv.n_regions == inv.d - inv.r + 1
        assert inv.euler_characteristic == 1 - inv.mu


def test_invariants_reject_circle_components():
    # a line threaded through a closed square: one interval + one circle
    d = ingest_polyline(
        [([(-9, 0), (9, 0)], False), ([(-3, -3), (3, -3), (3, 3), (-3, 3)], True)],
        disc_radius=8,
        seed_point=(0, 1),
        seed_sign=-1,
    )
    fs = trace_faces(d)
    sd = assign_signs(d, fs)
    with pytest.raises(DivideError, match="circle components"):
        invariants(sd)


def test_trace_rejects_no_terminals():
    # two closed rectangles crossing at four points: no terminals at all
    d = ingest_polyline(
        [
            ([(-3, -1), (3, -1), (3, 1), (-3, 1)], True),
            ([(-1, -3), (1, -3), (1, 3), (-1, 3)], True),
        ],
        disc_radius=8,
        seed_point=(0, 0),
        seed_sign=1,
    )
    with pytest.raises(DivideError, match="no terminals"):
        trace_faces(d)


def test_region_shape_warnings_clean_on_corpus():
    for name in ("a1", "a6", "e6", "depth1"):
        d = entry(name).divide
        assert region_shape_warnings(d, trace_faces(d)) == []
