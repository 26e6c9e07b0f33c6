from __future__ import annotations

from divides import (
    build_ag,
    depth_labels,
    exposure_set,
    reorder_within_types,
    to_dot,
)
from divides.agdiagram import AGDiagram, AGEdge, AGVertex
from conftest import entry, pipeline


def _edge_labels(ag):
    return sorted(
        (ag.vertices[e.u].label, ag.vertices[e.v].label, e.multiplicity)
        for e in ag.edges
    )


def test_a1_single_saddle():
    r = pipeline("a1")
    assert r.ag.census() == (0, 1, 0)
    assert r.ag.edges == ()


def test_e6_nine_edges():
    r = pipeline("e6")
    assert r.ag.census() == (2, 3, 1)
    assert _edge_labels(r.ag) == sorted(
        [
            ("v-_1", "v0_1", 1),
            ("v-_1", "v0_2", 1),
            ("v-_1", "v+_1", 1),
            ("v-_2", "v0_2", 1),
            ("v-_2", "v0_3", 1),
            ("v-_2", "v+_1", 1),
            ("v0_1", "v+_1", 1),
            ("v0_2", "v+_1", 1),
            ("v0_3", "v+_1", 1),
        ]
    )


def test_a4_path():
    r = pipeline("a4")
    assert _edge_labels(r.ag) == sorted(
        [("v-_1", "v0_1", 1), ("v-_2", "v0_1", 1), ("v-_2", "v0_2", 1)]
    )


def test_vertex_counts_match_mu(corpus_names):
    for name in corpus_names:
        r = pipeline(name)
        n_minus, n_zero, n_plus = r.ag.census()
        assert r.ag.mu == r.inv.mu
        assert n_zero == r.inv.d
        assert n_minus + n_plus == r.inv.d - r.inv.r + 1


def test_all_corpus_multiplicities_one(corpus_names):
    for name in corpus_names:
        assert all(e.multiplicity == 1 for e in pipeline(name).ag.edges), name


def test_edges_join_distinct_types(corpus_names):
    for name in corpus_names:
        ag = pipeline(name).ag
        for e in ag.edges:
            assert ag.vertices[e.u].vtype != ag.vertices[e.v].vtype


def test_exposure_e6_all():
    r = pipeline("e6")
    assert r.exposed == frozenset(range(6))


def test_exposure_a1():
    r = pipeline("a1")
    assert r.exposed == frozenset({0})


def test_exposure_depth1_all_but_center():
    r = pipeline("depth1")
    center = r.ag.position_by_label("v0_6")
    assert r.exposed == frozenset(set(range(10)) - {center})


def test_depths_e6_zero():
    r = pipeline("e6")
    assert r.depths.depth == (0,) * 6
    assert r.depths.diagram_depth == 0


def test_depths_depth1():
    r = pipeline("depth1")
    center = r.ag.position_by_label("v0_6")
    assert r.depths.depth[center] == 1
    assert sum(r.depths.depth) == 1
    assert r.depths.diagram_depth == 1


def test_depth_bfs_on_synthetic_path():
    # a path with only one endpoint exposed peels to depths 0, 1, 2, ...
    vertices = tuple(
        AGVertex(label=f"v{'-' if i % 2 == 0 else '0'}_{i // 2 + 1}",
                 vtype="-" if i % 2 == 0 else "0",
                 origin=("region", i))
        for i in range(5)
    )
    # positions in diagram order: minus block = 0,1,2 ; zero block = 3,4
    # path in declaration: m1 - z1 - m2 - z2 - m3 -> positions 0-3-1-4-2
    edges = (AGEdge(0, 3, 1), AGEdge(1, 3, 1), AGEdge(1, 4, 1), AGEdge(2, 4, 1))
    order = [0, 3, 1, 4, 2]
    ag = AGDiagram(
        vertices=tuple(vertices[i] for i in range(5)), edges=edges
    )
    labels = depth_labels(ag, frozenset({order[0]}))
    assert [labels.depth[p] for p in order] == [0, 1, 2, 3, 4]
    assert labels.diagram_depth == 4


def test_to_dot_deterministic_and_counts():
    r = pipeline("e6")
    text1 = to_dot(r.ag, r.depths)
    text2 = to_dot(r.ag, r.depths)
    assert text1 == text2
    assert text1.count("--") == 9
    r1 = pipeline("a1")
    assert to_dot(r1.ag, r1.depths).count("--") == 0


def test_reorder_within_types_preserves_structure():
    r = pipeline("e6")
    swapped = reorder_within_types(r.ag, {"-": (2, 1), "0": (3, 1, 2)})
    assert swapped.census() == r.ag.census()
    assert sorted(e.multiplicity for e in swapped.edges) == sorted(
        e.multiplicity for e in r.ag.edges
    )
    # origins are permuted, never lost
    assert sorted(v.origin for v in swapped.vertices) == sorted(
        v.origin for v in r.ag.vertices
    )


def test_build_ag_depends_only_on_signed_divide():
    sd = pipeline("a4").signed
    assert build_ag(sd) == pipeline("a4").ag
    exposed = exposure_set(sd, pipeline("a4").ag)
    assert exposed == pipeline("a4").exposed
