"""The verify suite: replay every identity the formulas are supposed to satisfy.

Each check_* function returns one Verdict and never raises for a failing
identity (a NonIntegralError is caught and reported as a failure with its
message). run_checks() runs them in a fixed order.

The closed form for M_d is NOT checked here: it disagrees with the
relation-based M_d by a factor of 2 at d = 3, 4, so only its ratio is
reported (see closed_form_ratio_rows in cli.py).
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from . import canonical_class as cc
from . import genus_invariants as gi
from .errors import NonIntegralError
from .gw_counts import kontsevich_sum, n_table
from .models import GWTable, ModuliSignature, Verdict, is_stability_zero
from .reference_tables import load_reference

log = logging.getLogger(__name__)

INTEGRALITY_SWEEP_MAX = 30

# Hand-checked splittings g = ĝ + cusps + lemma5.
DECOMPOSITION_ANCHORS = {
    3: (55, 10, 24, 21),
    4: (5447, 1685, 2304, 1458),
}


@dataclass(frozen=True, slots=True)
class VerificationGrid:
    """Bounds of the (n, r, d) grid for the canonical-class checks."""
    n_max: int = 8
    r_max: int = 5
    d_max: int = 6

    def signatures(self) -> Iterator[tuple[int, int, int]]:
        for n in range(self.n_max + 1):
            for r in range(2, self.r_max + 1):
                for d in range(1, self.d_max + 1):
                    yield n, r, d


def _skipped(name: str, lowest: int, dmax: int) -> Verdict:
    # Nothing to check below the first degree the identity applies to.
    return Verdict(name, True, f"skipped: needs d >= {lowest}, max is {dmax}")


def _verdict(name: str, failures: list[str], checked: str) -> Verdict:
    if failures:
        shown = "; ".join(failures[:5])
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return Verdict(name, False, shown + more)
    return Verdict(name, True, checked)


# ─────────────────────────────────────────────────────────────────────────────
# COUNTS AND GENERA
# ─────────────────────────────────────────────────────────────────────────────

def check_counts_table(dmax: int, table: GWTable) -> Verdict:
    reference = load_reference()
    degrees = [d for d in sorted(reference) if d <= dmax]
    failures = [
        f"N_{d}={table[d]} expected {reference[d].N}"
        for d in degrees if table[d] != reference[d].N
    ]
    return _verdict("counts_table", failures, f"N_d matches for d in {degrees[0]}..{degrees[-1]}")


def check_genus_table(dmax: int, table: GWTable) -> Verdict:
    reference = load_reference()
    degrees = [d for d in sorted(reference) if d <= dmax]
    failures = []
    for d in degrees:
        ref = reference[d]
        try:
            report = gi.genus_report(d, table)
        except NonIntegralError as exc:
            failures.append(f"d={d}: {exc}")
            continue
        got = (report.g, report.g_hat, report.g_tilde, report.M_relation)
        want = (ref.g, ref.g_hat, ref.g_tilde, ref.M)
        if got != want:
            failures.append(f"d={d}: (g, ĝ, g̃, M)={got} expected {want}")
    return _verdict("genus_table", failures, f"g, ĝ, g̃, M match for d in {degrees[0]}..{degrees[-1]}")


def check_recursion_order(dmax: int, table: GWTable) -> Verdict:
    if dmax < 2:
        return _skipped("recursion_order_invariance", 2, dmax)
    failures = [
        f"d={d}: ascending and descending sums differ"
        for d in range(2, dmax + 1)
        if kontsevich_sum(d, table) != kontsevich_sum(d, table, reverse=True)
    ]
    return _verdict("recursion_order_invariance", failures, f"both orders agree for d in 2..{dmax}")


def check_determinism(dmax: int, table: GWTable) -> Verdict:
    fresh = n_table(dmax)
    ok = fresh.as_list() == table.as_list()[:dmax]
    return _verdict("recomputation_determinism", [] if ok else ["fresh table differs"], "fresh table identical")


def check_genus_decomposition(dmax: int, table: GWTable) -> Verdict:
    if dmax < 3:
        return _skipped("genus_decomposition", 3, dmax)
    failures = []
    for d in range(3, dmax + 1):
        parts = (
            gi.arithmetic_genus_g(d, table),
            gi.arithmetic_genus_g_hat(d, table),
            gi.cusp_count(d, table),
            gi.lemma5_node_contribution(d, table),
        )
        g, g_hat, cusps, lemma5 = parts
        if g != g_hat + cusps + lemma5:
            failures.append(f"d={d}: {g} != {g_hat} + {cusps} + {lemma5}")
        if d in DECOMPOSITION_ANCHORS and parts != DECOMPOSITION_ANCHORS[d]:
            failures.append(f"d={d}: parts {parts} expected {DECOMPOSITION_ANCHORS[d]}")
    return _verdict("genus_decomposition", failures, f"g = ĝ + cusps + lemma5 for d in 3..{dmax}")


def check_node_relation(dmax: int, table: GWTable) -> Verdict:
    if dmax < 3:
        return _skipped("node_relation", 3, dmax)
    failures = []
    for d in range(3, dmax + 1):
        try:
            M = gi.m_via_relation(d, table)
        except NonIntegralError as exc:
            failures.append(str(exc))
            continue
        diff = gi.arithmetic_genus_g_hat(d, table) - gi.geometric_genus(d, table)
        if diff != (3 * d - 2) * M:
            failures.append(f"d={d}: ĝ-g̃={diff} != {3 * d - 2}·{M}")
    return _verdict("node_relation", failures, f"ĝ - g̃ = (3d-2)·M for d in 3..{dmax}")


def check_integrality(sweep_max: int, table: GWTable) -> Verdict:
    """Every genus / count formula must land on an integer for d in 1..sweep_max."""
    evaluators: list[tuple[int, Callable[[int, GWTable], int]]] = [
        (1, gi.arithmetic_genus_g),
        (3, gi.arithmetic_genus_g_hat),
        (1, gi.geometric_genus),
        (1, gi.cusp_count),
        (1, gi.lemma5_node_contribution),
    ]
    failures = []
    for d in range(1, sweep_max + 1):
        for lowest, evaluate in evaluators:
            if d < lowest:
                continue
            try:
                value = evaluate(d, table)
            except NonIntegralError as exc:
                failures.append(f"{evaluate.__name__}({d}): {exc}")
                continue
            if value < 0:
                failures.append(f"{evaluate.__name__}({d}) = {value} is negative")
    return _verdict("integrality_sweep", failures, f"all integral and >= 0 for d in 1..{sweep_max}")


def check_geometric_genus_base_cases(table: GWTable) -> Verdict:
    failures = [
        f"g̃_{d} = {gi.geometric_genus(d, table)}"
        for d in (1, 2) if gi.geometric_genus(d, table) != 0
    ]
    return _verdict("geometric_genus_base_cases", failures, "g̃_1 = g̃_2 = 0 from the closed form")


def check_cubic_cross_check(table: GWTable) -> Verdict:
    """C_3: degree-12 plane curve, genus 55, 24 cusps, 28 nodes, geometric genus 3."""
    report = gi.genus_report(3, table)
    nodes = report.lemma5_nodes + report.hat_nodes
    failures = []
    if report.N != 12 or report.g != gi.plane_curve_genus(report.N) or report.g != 55:
        failures.append(f"g_3={report.g}, plane-curve genus of degree {report.N} is {gi.plane_curve_genus(report.N)}")
    if report.cusps != 24:
        failures.append(f"cusps_3={report.cusps}, expected 24")
    if nodes != 28:
        failures.append(f"nodes_3={report.lemma5_nodes}+{report.hat_nodes}, expected 28")
    if report.g - report.cusps - nodes != report.g_tilde or report.g_tilde != 3:
        failures.append(f"{report.g} - {report.cusps} - {nodes} != g̃_3={report.g_tilde}")
    return _verdict("cubic_cross_check", failures, "55 - 24 - (21 + 7) = 3")


# ─────────────────────────────────────────────────────────────────────────────
# CANONICAL CLASS
# ─────────────────────────────────────────────────────────────────────────────

def check_reduction(grid: VerificationGrid) -> Verdict:
    failures = [
        f"(r={r}, d={d})"
        for r in range(2, grid.r_max + 1)
        for d in range(1, grid.d_max + 1)
        if not cc.reduces_to_unmarked(r, d)
    ]
    return _verdict(
        "prop3_reduces_to_prop2", failures,
        f"n=0 marked formula equals unmarked for r in 2..{grid.r_max}, d in 1..{grid.d_max}",
    )


def check_symmetry(grid: VerificationGrid) -> Verdict:
    failures = [f"(n={n}, r={r}, d={d})" for n, r, d in grid.signatures()
                if not cc.coefficient_symmetry_check(n, r, d)]
    failures += [f"(n={n}, d=0)" for n in range(3, max(grid.n_max, 3) + 1)
                 if not cc.coefficient_symmetry_check(n, 2, 0)]
    return _verdict(
        "coefficient_symmetry", failures,
        f"invariant under (i,j)->(d-i,n-j) for n<={grid.n_max}, r<={grid.r_max}, d<={grid.d_max}",
    )


def check_geometric_anchors() -> Verdict:
    failures = []
    m04 = cc.canonical_class_m0n(4)
    if cc.boundary_degree(m04) != -2:
        failures.append(f"M_0,4: boundary degree {cc.boundary_degree(m04)}, expected -2")
    dual_plane = cc.canonical_class_unmarked(2, 1)
    if dual_plane.h_coeff != -3 or dual_plane.boundary:
        failures.append(f"M_0,0(P2,1): K = {dual_plane.h_coeff}H + ..., expected -3H")
    universal_line = cc.canonical_class_marked(1, 2, 1)
    if (universal_line.h_coeff, universal_line.l_coeff) != (-2, -2) or universal_line.boundary:
        failures.append("M_0,1(P2,1): expected K = -2H - 2L_1")
    return _verdict("geometric_anchors", failures, "M_0,4 = P1, dual plane, universal line")


def check_denominators(grid: VerificationGrid) -> Verdict:
    failures = []
    for n, r, d in grid.signatures():
        expansion = cc.canonical_class(ModuliSignature(n=n, r=r, d=d))
        coefficients = [expansion.h_coeff, expansion.l_coeff, *expansion.boundary.values()]
        if any((2 * d * d) % Fraction(c).denominator for c in coefficients):
            failures.append(f"(n={n}, r={r}, d={d})")
    for n in range(3, max(grid.n_max, 3) + 1):
        if any((n - 1) % c.denominator for c in cc.canonical_class_m0n(n).boundary.values()):
            failures.append(f"(n={n}, d=0)")
    return _verdict("coefficient_denominators", failures, "denominators divide 2d² (d>0) or n-1 (d=0)")


def check_no_stability_zero(grid: VerificationGrid) -> Verdict:
    failures = []
    for n, r, d in grid.signatures():
        for key in cc.canonical_class(ModuliSignature(n=n, r=r, d=d)).boundary:
            if is_stability_zero(key.i, key.j, n, d):
                failures.append(f"{key.label()} on (n={n}, r={r}, d={d})")
    return _verdict("no_stability_zero_classes", failures, "no D_0,0 / D_0,1 / D_d,n-1 / D_d,n stored")


# ─────────────────────────────────────────────────────────────────────────────
# DRIVER
# ─────────────────────────────────────────────────────────────────────────────

def run_checks(dmax: int, grid: VerificationGrid | None = None) -> list[Verdict]:
    """Run every check in a fixed order and return the verdicts."""
    grid = grid or VerificationGrid()
    sweep_max = max(dmax, INTEGRALITY_SWEEP_MAX)
    table = n_table(sweep_max)
    log.info("running checks: dmax=%d, integrality up to %d, grid %s", dmax, sweep_max, grid)

    verdicts = [
        check_counts_table(dmax, table),
        check_genus_table(dmax, table),
        check_recursion_order(dmax, table),
        check_determinism(dmax, table),
        check_genus_decomposition(dmax, table),
        check_node_relation(dmax, table),
        check_integrality(sweep_max, table),
        check_geometric_genus_base_cases(table),
        check_cubic_cross_check(table),
        check_reduction(grid),
        check_symmetry(grid),
        check_geometric_anchors(),
        check_denominators(grid),
        check_no_stability_zero(grid),
    ]
    for v in verdicts:
        log.info("%s: %s", v.name, "pass" if v.passed else f"FAIL ({v.detail})")
    return verdicts

