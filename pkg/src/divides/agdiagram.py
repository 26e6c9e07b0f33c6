"""AG diagrams: typed ordered vertices, weighted edges, depth labels.

Saddle vertices come from double points, signed vertices from bounded
regions.  The total order is minus vertices, then saddles, then plus
vertices; within a type, declaration order (double-point order for saddles,
face-trace order for regions).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    DOUBLE_POINT_DEGREE,
    DivideError,
    SignedDivide,
    edge_side_faces,
)

TYPE_ORDER = {"-": 0, "0": 1, "+": 2}


@dataclass(frozen=True)
class AGVertex:
    label: str
    vtype: str  # "-", "0", "+"
    origin: tuple[str, object]  # ("double_point", id) | ("region", face index)


@dataclass(frozen=True)
class AGEdge:
    u: int  # position in the total order, u < v
    v: int
    multiplicity: int


@dataclass(frozen=True)
class AGDiagram:
    vertices: tuple[AGVertex, ...]
    edges: tuple[AGEdge, ...]

    @property
    def mu(self) -> int:
        return len(self.vertices)

    def census(self) -> tuple[int, int, int]:
        n = {"-": 0, "0": 0, "+": 0}
        for vx in self.vertices:
            n[vx.vtype] += 1
        return n["-"], n["0"], n["+"]

    def neighbors(self, pos: int) -> list[int]:
        out = []
        for e in self.edges:
            if e.u == pos:
                out.append(e.v)
            elif e.v == pos:
                out.append(e.u)
        return sorted(out)

    def multiplicity(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        for e in self.edges:
            if (e.u, e.v) == (a, b):
                return e.multiplicity
        return 0

    def position_by_label(self, label: str) -> int:
        for i, vx in enumerate(self.vertices):
            if vx.label == label:
                return i
        raise KeyError(label)


def _region_positions(signed: SignedDivide) -> dict[int, tuple[str, int]]:
    """face index -> (type char, index within its sign block, 1-based)."""
    counters = {"-": 0, "+": 0}
    out = {}
    for f_idx in signed.faces.region_indices:
        t = "-" if signed.sign[f_idx] == -1 else "+"
        counters[t] += 1
        out[f_idx] = (t, counters[t])
    return out


def build_ag(signed: SignedDivide) -> AGDiagram:
    """The AG diagram of a signed divide.

    Edges join a saddle to a signed region once per quadrant of the double
    point lying in that region, and a plus region to a minus region once per
    shared divide edge; unbounded faces contribute nothing.
    """
    divide = signed.divide
    faces = signed.faces
    region_info = _region_positions(signed)

    minus = [(f, i) for f, (t, i) in sorted(region_info.items()) if t == "-"]
    plus = [(f, i) for f, (t, i) in sorted(region_info.items()) if t == "+"]
    minus.sort(key=lambda fi: fi[1])
    plus.sort(key=lambda fi: fi[1])

    vertices: list[AGVertex] = []
    pos_of_region: dict[int, int] = {}
    for f_idx, i in minus:
        pos_of_region[f_idx] = len(vertices)
        vertices.append(AGVertex(label=f"v-_{i}", vtype="-", origin=("region", f_idx)))
    pos_of_dp: dict[str, int] = {}
    for i, dp in enumerate(divide.double_points, start=1):
        pos_of_dp[dp] = len(vertices)
        vertices.append(AGVertex(label=f"v0_{i}", vtype="0", origin=("double_point", dp)))
    for f_idx, i in plus:
        pos_of_region[f_idx] = len(vertices)
        vertices.append(AGVertex(label=f"v+_{i}", vtype="+", origin=("region", f_idx)))

    counts: dict[tuple[int, int], int] = {}
    for dp in divide.double_points:
        for slot in range(DOUBLE_POINT_DEGREE):
            f_idx = faces.face_of_dart(dp, slot)
            if f_idx in pos_of_region:
                key = tuple(sorted((pos_of_dp[dp], pos_of_region[f_idx])))
                counts[key] = counts.get(key, 0) + 1
    for e in divide.edges:
        a, b = edge_side_faces(divide, faces, e)
        if a in pos_of_region and b in pos_of_region:
            key = tuple(sorted((pos_of_region[a], pos_of_region[b])))
            counts[key] = counts.get(key, 0) + 1

    edges = []
    for (u, v), m in sorted(counts.items()):
        if vertices[u].vtype == vertices[v].vtype:
            raise DivideError(
                f"AG edge between same-type vertices {vertices[u].label}, "
                f"{vertices[v].label}"
            )
        edges.append(AGEdge(u=u, v=v, multiplicity=m))
    return AGDiagram(vertices=tuple(vertices), edges=tuple(edges))


def exposure_set(signed: SignedDivide, ag: AGDiagram) -> frozenset[int]:
    """Vertices whose double point or region closure meets an outer face.

    A saddle is exposed when one of its quadrants is an outer-adjacent face;
    a region vertex when its closure shares an edge or a double point with
    an outer-adjacent face.
    """
    divide = signed.divide
    faces = signed.faces
    outer = set(faces.outer_indices)

    outer_vertices: set[str] = set()
    for f_idx in outer:
        outer_vertices.update(faces.faces[f_idx].vertices())

    exposed = set()
    for pos, vx in enumerate(ag.vertices):
        kind, origin = vx.origin
        if kind == "double_point":
            quads = {faces.face_of_dart(origin, s) for s in range(DOUBLE_POINT_DEGREE)}
            if quads & outer:
                exposed.add(pos)
        else:
            face = faces.faces[origin]
            hit = False
            for v, s in face.darts():
                twin_face = _twin_face(signed, v, s)
                if twin_face in outer:
                    hit = True
                    break
            if not hit and set(face.vertices()) & outer_vertices:
                hit = True
            if hit:
                exposed.add(pos)
    return frozenset(exposed)


def _twin_face(signed: SignedDivide, vertex: str, slot: int) -> int:
    for e in signed.divide.edges:
        if (vertex, slot) == e.ends[0]:
            return signed.faces.face_of_dart(*e.ends[1])
        if (vertex, slot) == e.ends[1]:
            return signed.faces.face_of_dart(*e.ends[0])
    raise KeyError((vertex, slot))


@dataclass(frozen=True)
class DepthLabels:
    depth: tuple[int, ...]
    diagram_depth: int


def depth_labels(ag: AGDiagram, exposed: frozenset[int]) -> DepthLabels:
    """Depth = graph distance to the exposed set (the peeling recursion)."""
    if not exposed:
        raise DivideError("depth undefined: exposed set is empty")
    depth = [-1] * ag.mu
    queue = deque()
    for pos in sorted(exposed):
        depth[pos] = 0
        queue.append(pos)
    while queue:
        cur = queue.popleft()
        for nxt in ag.neighbors(cur):
            if depth[nxt] == -1:
                depth[nxt] = depth[cur] + 1
                queue.append(nxt)
    if any(d == -1 for d in depth):
        bad = [ag.vertices[i].label for i, d in enumerate(depth) if d == -1]
        raise DivideError(f"depth undefined for vertices disconnected from the exposed set: {bad}")
    return DepthLabels(depth=tuple(depth), diagram_depth=max(depth))


def reorder_within_types(ag: AGDiagram, perms: dict[str, tuple[int, ...]]) -> AGDiagram:
    """Permute same-type vertices; perms maps a type to a 1-based permutation.

    perms["-"] = (2, 1) makes the old second minus vertex the new first.
    Labels are reassigned to match the new positions; origins are kept.
    """
    blocks: dict[str, list[int]] = {"-": [], "0": [], "+": []}
    for pos, vx in enumerate(ag.vertices):
        blocks[vx.vtype].append(pos)
    old_to_new: dict[int, int] = {}
    new_vertices: list[AGVertex] = []
    for t in ("-", "0", "+"):
        old_block = blocks[t]
        perm = perms.get(t, tuple(range(1, len(old_block) + 1)))
        if sorted(perm) != list(range(1, len(old_block) + 1)):
            raise DivideError(f"invalid permutation for type '{t}': {perm}")
        for new_i, old_i in enumerate(perm, start=1):
            old_pos = old_block[old_i - 1]
            old_to_new[old_pos] = len(new_vertices)
            new_vertices.append(
                AGVertex(
                    label=f"v{t}_{new_i}",
                    vtype=t,
                    origin=ag.vertices[old_pos].origin,
                )
            )
    new_edges = []
    for e in ag.edges:
        u, v = sorted((old_to_new[e.u], old_to_new[e.v]))
        new_edges.append(AGEdge(u=u, v=v, multiplicity=e.multiplicity))
    new_edges.sort(key=lambda e: (e.u, e.v))
    return AGDiagram(vertices=tuple(new_vertices), edges=tuple(new_edges))


def to_dot(ag: AGDiagram, depths: DepthLabels) -> str:
    """Deterministic DOT text; labels carry type, order index, and depth."""
    lines = ["graph ag {", "  node [shape=circle];"]
    for pos, vx in enumerate(ag.vertices):
        lines.append(
            f'  "{vx.label}" [label="{vx.label} ({pos + 1}) depth {depths.depth[pos]}"];'
        )
    for e in ag.edges:
        u, v = ag.vertices[e.u].label, ag.vertices[e.v].label
        attr = f' [label="{e.multiplicity}"]' if e.multiplicity > 1 else ""
        lines.append(f'  "{u}" -- "{v}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
