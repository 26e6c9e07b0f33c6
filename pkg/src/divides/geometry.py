"""Exact-geometry ingestion of integer polylines into combinatorial divides.

All segment intersections are computed over Q (fractions.Fraction).  Disc
boundary crossings are quadratic irrationals; their angular order is decided
exactly with sign computations in Q(sqrt(D1), sqrt(D2)).  No floating point
is used anywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Divide, DivideError, EdgeDef, SignSeed, validate_divide

Vec = tuple[Fraction, Fraction]


def _cross(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _dot(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def _sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def _norm2(a: Vec) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Signs of expressions a + b*sqrt(D) and p + q*sqrt(D1) + r*sqrt(D2) + s*sqrt(D1*D2)


def sign_quad(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Exact sign of a + b*sqrt(d) for d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    if b == 0 or d == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    sa, sb = _sign(a), _sign(b)
    if sa == sb:
        return sa
    t = a * a - b * b * d
    if t == 0:
        return 0
    return sa if t > 0 else sb


def sign_quad2(
    p: Fraction, q: Fraction, r: Fraction, s: Fraction, d1: Fraction, d2: Fraction
) -> int:
    """Exact sign of p + q*sqrt(d1) + r*sqrt(d2) + s*sqrt(d1*d2)."""
    sx = sign_quad(p, q, d1)
    sy = sign_quad(r, s, d1)
    if sy == 0:
        return sx
    if sx == 0:
        return sy
    if sx == sy:
        return sx
    # compare (p + q*sqrt(d1))^2 against d2*(r + s*sqrt(d1))^2
    x2a, x2b = p * p + q * q * d1, 2 * p * q
    y2a, y2b = (r * r + s * s * d1) * d2, 2 * r * s * d2
    t = sign_quad(x2a - y2a, x2b - y2b, d1)
    if t == 0:
        return 0
    return sx if t > 0 else sy


@dataclass(frozen=True)
class QuadPoint:
    """Point with coordinates (ax + bx*sqrt(d), ay + by*sqrt(d))."""

    ax: Fraction
    bx: Fraction
    ay: Fraction
    by: Fraction
    d: Fraction

    def half(self) -> int:
        sy = sign_quad(self.ay, self.by, self.d)
        if sy > 0:
            return 0
        if sy < 0:
            return 1
        return 0 if sign_quad(self.ax, self.bx, self.d) > 0 else 1


def _cross_sign_quadpoints(p: QuadPoint, q: QuadPoint) -> int:
    """Sign of p.x*q.y - p.y*q.x."""
    c0 = p.ax * q.ay - p.ay * q.ax
    c1 = p.bx * q.ay - p.by * q.ax  # sqrt(p.d)
    c2 = p.ax * q.by - p.ay * q.bx  # sqrt(q.d)
    c3 = p.bx * q.by - p.by * q.bx  # sqrt(p.d*q.d)
    return sign_quad2(c0, c1, c2, c3, p.d, q.d)


def compare_circle_points(p: QuadPoint, q: QuadPoint) -> int:
    """Order two nonzero points by angle in [0, 2*pi), exactly."""
    hp, hq = p.half(), q.half()
    if hp != hq:
        return -1 if hp < hq else 1
    c = _cross_sign_quadpoints(p, q)
    return -c  # cross > 0 means p at the smaller angle


def _compare_rational_dirs(u: Vec, v: Vec) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return -1 if hu < hv else 1
    return -_sign(_cross(u, v))


# ---------------------------------------------------------------------------
# Segment events

IntPoint = tuple[int, int]


@dataclass
class _Seg:
    branch: int
    index: int  # position along the branch
    a: Vec
    b: Vec

    @property
    def d(self) -> Vec:
        return _sub(self.b, self.a)

    def at(self, t: Fraction) -> Vec:
        return (self.a[0] + t * self.d[0], self.a[1] + t * self.d[1])


def _adjacent(s1: _Seg, s2: _Seg, n_segs: int, closed: bool) -> bool:
    if s1.branch != s2.branch:
        return False
    di = abs(s1.index - s2.index)
    if di == 1:
        return True
    return closed and di == n_segs - 1


def _boundary_root(seg: _Seg, r2: Fraction, outward: bool) -> tuple[Fraction, Fraction, Fraction]:
    """Clip parameter t* on a segment crossing the circle |p|^2 = r2.

    Returns (alpha, beta, disc) with t* = alpha + beta*sqrt(disc); the minus
    root is the inward->outward ... for outward=False the segment runs
    outside->inside (take the smaller root), outward=True inside->outside
    (take the larger root).
    """
    d = seg.d
    aq = _norm2(d)
    bq = 2 * _dot(seg.a, d)
    cq = _norm2(seg.a) - r2
    disc = bq * bq - 4 * aq * cq
    if disc <= 0:
        raise DivideError("segment does not cross the disc boundary transversely")
    alpha = Fraction(-bq, 2 * aq)
    beta = Fraction(1 if outward else -1, 2 * aq)
    return alpha, beta, disc


def _terminal_point(seg: _Seg, root: tuple[Fraction, Fraction, Fraction]) -> QuadPoint:
    alpha, beta, disc = root
    d = seg.d
    return QuadPoint(
        ax=seg.a[0] + d[0] * alpha,
        bx=d[0] * beta,
        ay=seg.a[1] + d[1] * alpha,
        by=d[1] * beta,
        d=disc,
    )


def _cmp_rational_vs_root(t: Fraction, root: tuple[Fraction, Fraction, Fraction]) -> int:
    """Sign of t - (alpha + beta*sqrt(disc))."""
    alpha, beta, disc = root
    return sign_quad(t - alpha, -beta, disc)


# ---------------------------------------------------------------------------
# Ingestion


def ingest_polyline(
    branches: list[tuple[list[IntPoint], bool]],
    disc_radius: int,
    seed_point: IntPoint,
    seed_sign: int,
    name: str = "polyline",
) -> Divide:
    """Build the combinatorial divide of a set of integer polylines.

    Open polylines must start and end strictly outside the disc with all
    intermediate vertices strictly inside; closed polylines lie strictly
    inside.  All intersections must be transversal double points interior to
    segments; violations raise DivideError with a diagnostic.
    """
    if disc_radius <= 0:
        raise DivideError("disc_radius must be positive")
    r2 = Fraction(disc_radius) ** 2

    segs: list[_Seg] = []
    branch_meta: list[dict] = []
    for b_idx, (points, closed) in enumerate(branches):
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if closed:
            if len(pts) < 3:
                raise DivideError(f"closed polyline {b_idx} needs at least 3 points")
            if any(_norm2(p) >= r2 for p in pts):
                raise DivideError(
                    f"closed polyline {b_idx} must lie strictly inside the disc"
                )
            chain = pts + [pts[0]]
        else:
            if len(pts) < 2:
                raise DivideError(f"open polyline {b_idx} needs at least 2 points")
            if _norm2(pts[0]) <= r2 or _norm2(pts[-1]) <= r2:
                raise DivideError(
                    f"open polyline {b_idx} endpoints must be strictly outside the disc"
                )
            if any(_norm2(p) >= r2 for p in pts[1:-1]):
                raise DivideError(
                    f"open polyline {b_idx} interior vertices must be strictly inside"
                )
            chain = pts
        first = len(segs)
        for i in range(len(chain) - 1):
            if chain[i] == chain[i + 1]:
                raise DivideError(f"polyline {b_idx} repeats a point consecutively")
            segs.append(_Seg(branch=b_idx, index=i, a=chain[i], b=chain[i + 1]))
        branch_meta.append(
            {"closed": closed, "first": first, "count": len(chain) - 1}
        )

    # Fold-back overlap on adjacent segments.
    for meta in branch_meta:
        lo, n = meta["first"], meta["count"]
        for k in range(n if meta["closed"] else n - 1):
            s1 = segs[lo + k]
            s2 = segs[lo + (k + 1) % n]
            if _cross(s1.d, s2.d) == 0 and _dot(s1.d, s2.d) < 0:
                raise DivideError("tangency or overlapping segments")

    # Pairwise intersections.
    crossings: dict[Vec, list[tuple[int, Fraction, int, Fraction]]] = {}
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            s1, s2 = segs[i], segs[j]
            n1 = branch_meta[s1.branch]["count"]
            if _adjacent(s1, s2, n1, branch_meta[s1.branch]["closed"]):
                continue
            d1, d2 = s1.d, s2.d
            denom = _cross(d1, d2)
            w = _sub(s2.a, s1.a)
            if denom == 0:
                if _cross(d1, w) != 0:
                    continue  # parallel, disjoint lines
                # collinear: check overlap along d1
                t0 = _dot(w, d1)
                t1 = _dot(_sub(s2.b, s1.a), d1)
                lo, hi = min(t0, t1), max(t0, t1)
                if hi < 0 or lo > _norm2(d1):
                    continue
                if hi == 0 or lo == _norm2(d1):
                    raise DivideError("intersection at a polyline vertex")
                raise DivideError("tangency or overlapping segments")
            s = _cross(w, d2) / denom
            t = _cross(w, d1) / denom
            if s < 0 or s > 1 or t < 0 or t > 1:
                continue
            p = s1.at(s)
            pn = _norm2(p)
            if pn > r2:
                continue  # outside the disc; not part of the divide
            if pn == r2:
                raise DivideError("intersection on the disc boundary")
            if s in (0, 1) or t in (0, 1):
                raise DivideError("intersection at a polyline vertex")
            crossings.setdefault(p, []).append((i, s, j, t))

    for p, recs in crossings.items():
        if len(recs) > 1:
            raise DivideError(f"triple point at ({p[0]}, {p[1]})")

    points_sorted = sorted(crossings)
    xid = {p: f"x{k}" for k, p in enumerate(points_sorted)}

    # Events per segment: crossings with rational params.
    seg_events: dict[int, list[tuple[Fraction, str]]] = {k: [] for k in range(len(segs))}
    for p, recs in crossings.items():
        (i, s, j, t) = recs[0]
        seg_events[i].append((s, xid[p]))
        seg_events[j].append((t, xid[p]))
    for k in seg_events:
        seg_events[k].sort(key=lambda e: e[0])

    # Terminal events (boundary clips) per open branch.  Crossings on the
    # out-of-disc side of a clip were already skipped by the |P|^2 > R^2 test.
    terminal_records = []  # (branch, "start"|"end", seg index, root, QuadPoint)
    for b_idx, meta in enumerate(branch_meta):
        if meta["closed"]:
            continue
        k_first = meta["first"]
        k_last = meta["first"] + meta["count"] - 1
        root_in = _boundary_root(segs[k_first], r2, outward=False)
        root_out = _boundary_root(segs[k_last], r2, outward=True)
        terminal_records.append(
            (b_idx, "start", k_first, root_in, _terminal_point(segs[k_first], root_in))
        )
        terminal_records.append(
            (b_idx, "end", k_last, root_out, _terminal_point(segs[k_last], root_out))
        )

    # Terminal ids in CCW angular order.
    order = sorted(
        range(len(terminal_records)),
        key=functools.cmp_to_key(
            lambda i, j: compare_circle_points(terminal_records[i][4], terminal_records[j][4])
        ),
    )
    for a, b in zip(order, order[1:]):
        if compare_circle_points(terminal_records[a][4], terminal_records[b][4]) == 0:
            raise DivideError("coincident boundary terminals")
    tid_by_record = {rec_idx: f"t{pos}" for pos, rec_idx in enumerate(order)}
    terminal_ids = [f"t{pos}" for pos in range(len(order))]
    term_lookup = {
        (terminal_records[rec_idx][0], terminal_records[rec_idx][1]): tid_by_record[rec_idx]
        for rec_idx in range(len(terminal_records))
    }

    # Walks: build edges with geometric support pieces.
    edges: list[EdgeDef] = []
    edge_pieces: dict[str, list[tuple[int, Optional[Fraction], Optional[Fraction]]]] = {}
    branch_edge_ids: list[list[str]] = []
    # direction of each edge end at a crossing: (crossing id, direction vector)
    end_dirs: dict[str, list[tuple[str, Vec, int]]] = {}  # crossing -> (edge, dir, end#)

    def seg_dir(k: int) -> Vec:
        return segs[k].d

    edge_counter = 0
    for b_idx, meta in enumerate(branch_meta):
        lo, n = meta["first"], meta["count"]
        events: list[tuple[int, Fraction, str]] = []  # (seg, t, crossing id)
        for k in range(lo, lo + n):
            for t, node in seg_events[k]:
                events.append((k, t, node))
        events.sort(key=lambda e: (e[0], e[1]))
        if meta["closed"]:
            if not events:
                raise DivideError(
                    f"closed polyline {b_idx} has no crossings and cannot be encoded"
                )
            cyc = [(k, t, ("crossing", node)) for (k, t, node) in events]
            cyc = cyc + [cyc[0]]
        else:
            cyc = (
                [(lo, None, ("terminal", term_lookup[(b_idx, "start")]))]
                + [(k, t, ("crossing", node)) for (k, t, node) in events]
                + [(lo + n - 1, None, ("terminal", term_lookup[(b_idx, "end")]))]
            )

        ids_here = []
        for (k1, t1, node1), (k2, t2, node2) in zip(cyc, cyc[1:]):
            eid = f"e{edge_counter}"
            edge_counter += 1
            ids_here.append(eid)
            pieces: list[tuple[int, Optional[Fraction], Optional[Fraction]]] = []
            if meta["closed"] and (k2, t2) <= (k1, t1):
                # wrap-around piece of a closed branch
                pieces.append((k1, t1, None))
                for k in range(k1 + 1, lo + n):
                    pieces.append((k, None, None))
                for k in range(lo, k2):
                    pieces.append((k, None, None))
                pieces.append((k2, None, t2))
            elif k1 == k2:
                pieces.append((k1, t1, t2))
            else:
                pieces.append((k1, t1, None))
                for k in range(k1 + 1, k2):
                    pieces.append((k, None, None))
                pieces.append((k2, None, t2))
            edge_pieces[eid] = pieces
            ends = []
            for which, (k, t, node) in (("out", (k1, t1, node1)), ("in", (k2, t2, node2))):
                kind, vid = node
                if kind == "terminal":
                    ends.append((vid, 0))
                else:
                    d = seg_dir(k)
                    direction = d if which == "out" else (-d[0], -d[1])
                    end_dirs.setdefault(vid, []).append((eid, direction, len(ends)))
                    ends.append((vid, -1))  # slot filled later
            edges.append(EdgeDef(id=eid, ends=(ends[0], ends[1])))
        branch_edge_ids.append(ids_here)

    # Rotation: sort the four directions CCW at every crossing.
    slot_fix: dict[tuple[str, int], tuple[str, int]] = {}
    for vid in sorted(end_dirs):
        entries = end_dirs[vid]
        if len(entries) != 4:
            raise DivideError(f"crossing {vid} has {len(entries)} incident ends")
        ordered = sorted(
            entries, key=functools.cmp_to_key(lambda a, b: _compare_rational_dirs(a[1], b[1]))
        )
        for slot, (eid, _direction, end_pos) in enumerate(ordered):
            slot_fix[(eid, end_pos)] = (vid, slot)
    fixed_edges = []
    for e in edges:
        ends = list(e.ends)
        for pos in (0, 1):
            if ends[pos][1] == -1:
                ends[pos] = slot_fix[(e.id, pos)]
        fixed_edges.append(EdgeDef(id=e.id, ends=(ends[0], ends[1])))
    edges = fixed_edges

    # Seed: locate the witness face by exact vertical ray casting.
    seed = _resolve_seed(segs, branch_meta, edges, edge_pieces, r2, seed_point, seed_sign)

    divide = Divide(
        name=name,
        double_points=tuple(xid[p] for p in points_sorted),
        terminals=tuple(terminal_ids),
        edges=tuple(edges),
        branches=tuple(tuple(ids) for ids in branch_edge_ids),
        sign_seed=seed,
    )
    diags = validate_divide(divide)
    if diags:
        raise DivideError(*diags)
    return divide


def _resolve_seed(
    segs: list[_Seg],
    branch_meta: list[dict],
    edges: list[EdgeDef],
    edge_pieces: dict[str, list[tuple[int, Optional[Fraction], Optional[Fraction]]]],
    r2: Fraction,
    seed_point: IntPoint,
    seed_sign: int,
) -> SignSeed:
    w: Vec = (Fraction(seed_point[0]), Fraction(seed_point[1]))
    if _norm2(w) >= r2:
        raise DivideError("witness point must lie strictly inside the disc")
    for seg in segs:
        d = seg.d
        u = _sub(w, seg.a)
        if _cross(d, u) == 0 and 0 <= _dot(u, d) <= _norm2(d) and _norm2(w) < r2:
            raise DivideError("witness point on a curve")

    def ray_hit(upward: bool) -> Optional[tuple[int, Fraction, Fraction]]:
        best: Optional[tuple[int, Fraction, Fraction]] = None  # (seg, t, y)
        for k, seg in enumerate(segs):
            ax, bx = seg.a[0], seg.b[0]
            if ax == bx:
                if ax == w[0]:
                    ys = sorted((seg.a[1], seg.b[1]))
                    if (upward and ys[1] > w[1]) or (not upward and ys[0] < w[1]):
                        raise DivideError(
                            "degenerate witness position: vertical segment overlaps the ray"
                        )
                continue
            lo, hi = (ax, bx) if ax < bx else (bx, ax)
            if w[0] == ax or w[0] == bx:
                # ray would pass through a segment endpoint
                y_end = seg.a[1] if w[0] == ax else seg.b[1]
                if (upward and y_end > w[1]) or (not upward and y_end < w[1]):
                    if _norm2((w[0], y_end)) < r2:
                        raise DivideError(
                            "degenerate witness position: ray hits a polyline vertex"
                        )
                continue
            if not (lo < w[0] < hi):
                continue
            t = (w[0] - seg.a[0]) / (seg.b[0] - seg.a[0])
            y = seg.a[1] + t * (seg.b[1] - seg.a[1])
            if upward and y <= w[1]:
                continue
            if not upward and y >= w[1]:
                continue
            if w[0] * w[0] + y * y >= r2:
                continue  # hit outside the disc: not part of the divide
            if best is None or (upward and y < best[2]) or (not upward and y > best[2]):
                best = (k, t, y)
            elif y == best[2]:
                raise DivideError("degenerate witness position: ray hits a crossing")
        return best

    hit = ray_hit(upward=True)
    upward = True
    if hit is None:
        hit = ray_hit(upward=False)
        upward = False
    if hit is None:
        raise DivideError(
            "witness face could not be anchored: no divide segment vertically aligned"
        )
    k, t, _y = hit
    hit_edge = None
    for e in edges:
        for (seg_idx, plo, phi) in edge_pieces[e.id]:
            if seg_idx != k:
                continue
            if (plo is None or plo < t) and (phi is None or t < phi):
                hit_edge = e
                break
        if hit_edge is not None:
            break
    if hit_edge is None:
        raise DivideError("degenerate witness position: ray hits a crossing")
    dx = segs[k].d[0]
    if upward:
        side = "right" if dx > 0 else "left"
    else:
        side = "left" if dx > 0 else "right"
    return SignSeed(edge=hit_edge.id, side=side, sign=seed_sign)
