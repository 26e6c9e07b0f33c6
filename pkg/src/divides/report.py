"""Full pipeline over a divide and the consolidated machine-readable report.

The report is a deterministic JSON document: same divide and tool version,
same bytes.  All numbers are exact integers.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional

from . import adapted as adapted_mod
from . import agdiagram as ag_mod
from . import lattice as lattice_mod
from .core import (
    Divide,
    DivideError,
    DivideInvariants,
    SignedDivide,
    assign_signs,
    invariants,
    region_shape_warnings,
    trace_faces,
)
from .corpus import CorpusEntry
from .fileio import divide_to_text

TOOL_NAME = "divides"

CALIBRATION_NOTE = (
    "dictionary: the Seifert route rho_S = (-1)^n S^{-T} S inverts the "
    "ascending twist product M_asc, while the variation iteration follows "
    "the descending product M_desc; both are computed and the dictionary is "
    "asserted by the identity suite, never assumed"
)


@dataclass
class PipelineResult:
    divide: Divide
    signed: SignedDivide
    inv: DivideInvariants
    ag: ag_mod.AGDiagram
    exposed: frozenset[int]
    depths: ag_mod.DepthLabels
    lattice: lattice_mod.MilnorLattice
    pair: lattice_mod.MonodromyPair
    suite: lattice_mod.IdentitySuite
    cpo: lattice_mod.CharPolyOrder
    family: adapted_mod.AdaptedFamily
    adapted_verdict: adapted_mod.AdaptedVerdict
    quiver: adapted_mod.EulerQuiver
    certificate: adapted_mod.CertificateVerdict
    cones: tuple[adapted_mod.Depth1Cone, ...]
    warnings: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return (
            self.suite.passed
            and self.adapted_verdict.passed
            and self.certificate.passed
            and all(c.passed for c in self.cones)
        )


def run_pipeline(
    divide: Divide, reorder: Optional[dict[str, tuple[int, ...]]] = None
) -> PipelineResult:
    """Run every analysis stage; raises DivideError on structural problems."""
    faces = trace_faces(divide)
    signed = assign_signs(divide, faces)
    inv = invariants(signed)
    warnings = tuple(region_shape_warnings(divide, faces))

    ag = ag_mod.build_ag(signed)
    if reorder:
        ag = ag_mod.reorder_within_types(ag, reorder)
    if ag.mu != inv.mu:
        raise DivideError(f"AG vertex count {ag.mu} does not equal mu {inv.mu}")
    exposed = ag_mod.exposure_set(signed, ag)
    depths = ag_mod.depth_labels(ag, exposed)

    lat = lattice_mod.milnor_lattice(ag)
    pair = lattice_mod.monodromy(lat.i_mat)
    suite = lattice_mod.identity_suite(lat, pair, inv.r)
    cpo = lattice_mod.char_poly_and_order(pair.m_desc, max_power=64)

    family = adapted_mod.adapted_vectors(lat.i_mat)
    verdict = adapted_mod.verify_adapted(family, lat.i_mat, lat.pl_sign)
    quiver = adapted_mod.euler_matrix(lat)
    cert = adapted_mod.exceptional_certificate(quiver, ag)

    cones = []
    for pos in range(ag.mu):
        if depths.depth[pos] == 1:
            cones.append(adapted_mod.depth1_cone(ag, depths, lat, pos))
    return PipelineResult(
        divide=divide,
        signed=signed,
        inv=inv,
        ag=ag,
        exposed=exposed,
        depths=depths,
        lattice=lat,
        pair=pair,
        suite=suite,
        cpo=cpo,
        family=family,
        adapted_verdict=verdict,
        quiver=quiver,
        certificate=cert,
        cones=tuple(cones),
        warnings=warnings,
    )


def input_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _mat(m) -> list:
    return [list(row) for row in m]


def build_report(result: PipelineResult, version: str, digest: str) -> dict:
    ag, depths = result.ag, result.depths
    labels = [v.label for v in ag.vertices]
    report = {
        "tool": {"name": TOOL_NAME, "version": version},
        "input": {"name": result.divide.name, "digest": digest},
        "invariants": {
            "d": result.inv.d,
            "r": result.inv.r,
            "mu": result.inv.mu,
            "n_regions": result.inv.n_regions,
            "genus": result.inv.genus,
            "boundary_components": result.inv.boundary_components,
            "euler_characteristic": result.inv.euler_characteristic,
        },
        "ag": {
            "vertices": [
                {
                    "label": v.label,
                    "type": v.vtype,
                    "depth": depths.depth[i],
                    "exposed": i in result.exposed,
                }
                for i, v in enumerate(ag.vertices)
            ],
            "edges": [
                [labels[e.u], labels[e.v], e.multiplicity] for e in ag.edges
            ],
            "census": list(ag.census()),
            "diagram_depth": depths.diagram_depth,
        },
        "matrices": {
            "I": _mat(result.lattice.i_mat),
            "S": _mat(result.lattice.s_mat),
            "M_desc": _mat(result.pair.m_desc),
            "M_asc": _mat(result.pair.m_asc),
            "rho_S": _mat(result.pair.rho_s),
        },
        "identity_suite": {
            "passed": result.suite.passed,
            "checks": [
                {
                    "key": c.key,
                    "description": c.description,
                    "verdict": "pass" if c.passed else "fail",
                    "detail": c.detail,
                }
                for c in result.suite.checks
            ],
        },
        "char_poly": {
            "coefficients": list(result.cpo.coefficients),
            "order": result.cpo.order,
            "max_power": result.cpo.max_power,
        },
        "adapted": {
            "vectors": [list(v) for v in result.family.vectors],
            "verdicts": [
                "pass" if ok else "fail" for ok in result.adapted_verdict.passes
            ],
            "passed": result.adapted_verdict.passed,
            "first_failure": (
                None
                if result.adapted_verdict.first_failure is None
                else {
                    "index": result.adapted_verdict.first_failure[0],
                    "computed": list(result.adapted_verdict.first_failure[1]),
                }
            ),
        },
        "euler": {
            "matrix": _mat(result.quiver.e_mat),
            "arrows": [
                [labels[i], labels[j], w] for (i, j, w) in result.quiver.arrows
            ],
            "sigma": result.quiver.sigma,
            "grading_note": result.quiver.grading_note,
        },
        "certificate": {
            "verdict": "pass" if result.certificate.passed else "fail",
            "violations": [list(v) for v in result.certificate.violations],
        },
        "depth1_cones": [
            {
                "vertex": labels[c.vertex],
                "partner": labels[c.partner],
                "a_prime": list(c.a_prime),
                "components": [list(v) for v in c.components],
                "variation_a_prime": list(c.variation_a_prime),
                "total_variation": list(c.total_variation),
                "verdict": "pass" if c.passed else "fail",
            }
            for c in result.cones
        ],
        "warnings": list(result.warnings),
        "calibration": {
            "dim_n": result.lattice.dim_n,
            "pl_sign": result.lattice.pl_sign,
            "dictionary": CALIBRATION_NOTE,
            "euler_sign": result.quiver.grading_note,
        },
    }
    if depths.diagram_depth >= 2:
        report["depth_note"] = (
            "diagram depth exceeds 1: cone towers for deeper vertices are "
            "not constructed"
        )
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def check_entry(entry: CorpusEntry) -> list[str]:
    """Certify a corpus entry: pipeline verdicts plus expected-fact matches."""
    problems: list[str] = []
    try:
        result = run_pipeline(entry.divide)
    except DivideError as exc:
        return [f"pipeline failed: {exc}"]
    if not result.suite.passed:
        problems.append("identity suite failed")
    if not result.adapted_verdict.passed:
        problems.append("adapted-family variation check failed")
    if not result.certificate.passed:
        problems.append("exceptional certificate failed")
    if any(not c.passed for c in result.cones):
        problems.append("depth-1 cone check failed")

    exp = entry.expected
    inv = result.inv
    got = {
        "d": inv.d,
        "r": inv.r,
        "mu": inv.mu,
        "n_regions": inv.n_regions,
        "genus": inv.genus,
        "boundary_components": inv.boundary_components,
        "census": result.ag.census(),
    }
    for key, want in exp.items():
        if key in got:
            if got[key] != want:
                problems.append(f"{key}: expected {want}, got {got[key]}")
        elif key == "ag_edges":
            labels = [v.label for v in result.ag.vertices]
            have = sorted(
                (labels[e.u], labels[e.v], e.multiplicity) for e in result.ag.edges
            )
            if have != sorted(tuple(e) for e in want):
                problems.append(f"ag_edges: expected {sorted(want)}, got {have}")
        elif key == "depths":
            have_depths = {
                v.label: result.depths.depth[i]
                for i, v in enumerate(result.ag.vertices)
            }
            if have_depths != want:
                problems.append(f"depths: expected {want}, got {have_depths}")
        elif key == "region_signs":
            have_signs = tuple(
                result.signed.sign[f] for f in result.signed.faces.region_indices
            )
            if have_signs != want:
                problems.append(f"region_signs: expected {want}, got {have_signs}")
        elif key == "euler_arrow_count":
            if len(result.quiver.arrows) != want:
                problems.append(
                    f"euler_arrow_count: expected {want}, got {len(result.quiver.arrows)}"
                )
        elif key == "diagram_depth":
            if result.depths.diagram_depth != want:
                problems.append(
                    f"diagram_depth: expected {want}, got {result.depths.diagram_depth}"
                )
        else:
            problems.append(f"unknown expected fact '{key}'")
    return problems


def entry_digest(entry: CorpusEntry) -> str:
    return input_digest(divide_to_text(entry.divide).encode())
