# theorems/verification.py
"""
Machine verification of the separator theorem, the connectivity corollaries
and the two worked examples.

Every verifier returns a VerificationReport; a missing hypothesis raises
HypothesisUnmet, which the commands turn into a hypothesis-unmet report.
"""

import logging
import math
from dataclasses import dataclass
from decimal import localcontext
from fractions import Fraction

from core.conf import toolkit_setting
from core.exceptions import BadParameters, DegenerateS, DomainError, FullSimplex, HypothesisUnmet
from core.utils.precision import decimal_ln, guarded_ceil, to_decimal
from core.utils.subsets import vertices_of
from complexes.generators import nevo_complex, prism_complex
from complexes.graphs import one_skeleton
from complexes.simplicial import generator_degree, predicates
from connectivity.separators import disconnecting_subsets, separates, vertex_connectivity
from homology.chains import FieldSpec, reduced_betti
from regularity.bounds import dhs_parameter
from regularity.hochster import hochster_table, homology_lattice, taylor_support_check
from regularity.suitability import check_suitable
from .cycles import find_certificate, is_vertex_minimal_cycle
from .reports import VerificationReport

logger = logging.getLogger(__name__)


def _certify(complex_, fields, cap, force, jobs, min_h=0, exhaustive=False):
    cert = find_certificate(complex_, fields, exhaustive=exhaustive, cap=cap, force=force, jobs=jobs)
    if cert is None:
        raise HypothesisUnmet(f"{complex_} is not a vertex minimal cycle over any configured field")
    if cert.h < min_h:
        raise HypothesisUnmet(f"{complex_} is a vertex minimal {cert.h}-cycle; need h >= {min_h}")
    return cert


def _kappa(complex_, jobs=None):
    return vertex_connectivity(one_skeleton(complex_), jobs=jobs)


# ---------------------------------------------------------------------------
# Separator theorem
# ---------------------------------------------------------------------------

def verify_theorem_main(complex_, cert, cap=None, force=False, jobs=None):
    """
    For every T with Δ|_T disconnected: reg(k[Δ|_{[n]∖T}]) >= h and
    H̃_{h-1}(Δ|_{[n]∖T}) != 0, over the certificate's field.
    """
    report = VerificationReport(statement="theorem3", instance=str(complex_))
    h = cert.h
    report.summary.update({"h": h, "field": cert.field.p, "certificate": cert.as_dict()})

    with report.timed("restrictions"):
        lattice = homology_lattice(complex_, cert.field, cap=cap, force=force, jobs=jobs)
        lattice.restricted_regularities()

    checked = failures = 0
    tightest = None
    with report.timed("separators"):
        for subset in disconnecting_subsets(complex_, cap=cap, force=force):
            complement = complex_.universe & ~subset
            reg = lattice.regularity_of(complement)
            betti = lattice.betti_at(complement)[h - 1]
            checked += 1
            witness = {
                "subset": list(vertices_of(subset)),
                "complement": list(vertices_of(complement)),
                "reg": reg,
                "betti_h_minus_1": betti,
                "slack": reg - h,
            }
            if reg < h or betti == 0:
                failures += 1
                report.add_witness("separator", ok=False, **witness)
            elif tightest is None or witness["slack"] < tightest["slack"]:
                tightest = witness

    if tightest is not None:
        report.add_witness("tightest-separator", **tightest)
    report.summary.update({
        "checked": checked,
        "failures": failures,
        "min_slack": tightest["slack"] if tightest else None,
    })
    return report.finish()


# ---------------------------------------------------------------------------
# Connectivity corollary
# ---------------------------------------------------------------------------

def balbarath_bound(s, h):
    """ceil(s*h / (s-1)), exact"""
    if s < 2:
        raise DegenerateS(f"the connectivity bound needs s >= 2, got s={s}")
    if h < 1:
        raise BadParameters(f"the connectivity bound needs h >= 1, got h={h}")
    return -(-s * h // (s - 1))


def _generator_degree(complex_):
    try:
        return generator_degree(complex_)
    except FullSimplex as exc:
        raise HypothesisUnmet(str(exc)) from exc


def verify_corollary_connectivity(complex_, fields=None, cap=None, force=False, jobs=None, exhaustive=False):
    """kappa(G) >= ceil(sh/(s-1)) for the 1-skeleton G of a vertex minimal h-cycle"""
    report = VerificationReport(statement="corollary5", instance=str(complex_))
    with report.timed("certificate"):
        cert = _certify(complex_, fields, cap, force, jobs, min_h=1, exhaustive=exhaustive)
    s = _generator_degree(complex_)
    h = cert.h
    bound = balbarath_bound(s, h)
    with report.timed("connectivity"):
        result = _kappa(complex_, jobs)

    report.summary.update({
        "s": s, "h": h, "field": cert.field.p, "kappa": result.kappa,
        "bound": bound, "tight": result.kappa == bound,
    })
    report.add_witness("certificate", **cert.as_dict())
    report.add_witness(
        "connectivity", ok=result.kappa >= bound,
        kappa=result.kappa, bound=bound, min_separator=sorted(result.min_separator),
    )
    if result.min_separator:
        report.add_witness(
            "separator-disconnects",
            ok=separates(one_skeleton(complex_), result.min_separator),
            separator=sorted(result.min_separator),
        )
    if s == 2:
        report.add_witness("athanasiadis", ok=bound == 2 * h, bound=bound, expected=2 * h)
    report.add_witness(
        "balinsky-barnette-limit", ok=bound >= h + 1 and balbarath_bound(h + 1, h) == h + 1,
        limit=h + 1, bound=bound,
    )
    return report.finish()


# ---------------------------------------------------------------------------
# DHS corollary
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DhsConnectivity:
    k: int
    h: int
    first: int
    second: int
    simplified: int

    @property
    def value(self):
        return max(self.first, self.second)

    def as_dict(self):
        return {
            "k": self.k, "h": self.h, "first": self.first, "second": self.second,
            "value": self.value, "simplified": self.simplified,
        }


def dhs_connectivity_M(k, h, precision=None):
    """
    M = max{ ceil((k+1) b^{h-2} + 1), ceil((k+1)/ln b * (b^{h-2} - 2/(k+4)) + 1) },
    b = (k+4)/2, together with the simplified guarantee ceil((k/2)^{h-1}).
    """
    if k < 1:
        raise BadParameters(f"M needs k >= 1, got k={k}")
    if h < 2:
        raise DomainError(f"M is only defined for h >= 2, got h={h}")
    precision = toolkit_setting('TOOLKIT_DECIMAL_PRECISION', precision)
    base = Fraction(k + 4, 2)
    power = base ** (h - 2)
    first = math.ceil((k + 1) * power + 1)

    with localcontext() as ctx:
        ctx.prec = precision
        second_value = to_decimal(Fraction(k + 1)) / decimal_ln(base, precision) \
            * to_decimal(power - Fraction(2, k + 4)) + 1
    second = guarded_ceil(second_value)
    simplified = math.ceil(Fraction(k, 2) ** (h - 1))

    result = DhsConnectivity(k=k, h=h, first=first, second=second, simplified=simplified)
    if result.value < simplified:
        raise AssertionError(f"M={result.value} below the simplified guarantee {simplified} at k={k}, h={h}")
    return result


def verify_dhs_corollary(complex_, k=None, fields=None, cap=None, force=False, jobs=None, exhaustive=False):
    """kappa(G) >= M(k, h) for a flag vertex minimal h-cycle without short induced cycles"""
    report = VerificationReport(statement="dhs-corollary", instance=str(complex_))
    with report.timed("certificate"):
        cert = _certify(complex_, fields, cap, force, jobs, min_h=2, exhaustive=exhaustive)
    k = dhs_parameter(complex_, k)
    connectivity = dhs_connectivity_M(k, cert.h)
    with report.timed("connectivity"):
        result = _kappa(complex_, jobs)

    report.summary.update({
        "h": cert.h, "k": k, "field": cert.field.p, "kappa": result.kappa,
        "M": connectivity.value, "n": complex_.vertex_count,
    })
    report.add_witness("certificate", **cert.as_dict())
    report.add_witness("M", **connectivity.as_dict())
    report.add_witness(
        "connectivity", ok=result.kappa >= connectivity.value,
        kappa=result.kappa, bound=connectivity.value, min_separator=sorted(result.min_separator),
    )
    return report.finish()


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------

def parse_grid(text):
    """
    's=2..5,h=s-1..7' -> [(2, 1), (2, 2), ..., (5, 7)]

    The h range may refer to s.
    """
    try:
        s_part, h_part = (piece.split("=", 1)[1] for piece in text.split(","))
        s_low, s_high = (int(v) for v in s_part.split(".."))
        h_low_text, h_high_text = h_part.split("..")
    except ValueError:
        raise BadParameters(f"cannot read grid '{text}', expected s=A..B,h=C..D") from None

    def bound_at(expression, s):
        expression = expression.strip()
        if expression.startswith("s"):
            offset = expression[1:] or "0"
            return s + int(offset)
        return int(expression)

    points = []
    for s in range(s_low, s_high + 1):
        try:
            low, high = bound_at(h_low_text, s), bound_at(h_high_text, s)
        except ValueError:
            raise BadParameters(f"cannot read h range '{h_part}'") from None
        points.extend((s, h) for h in range(low, high + 1))
    return points


def _nevo_point(report, s, h, fields, jobs):
    complex_, params = nevo_complex(s, h)
    bound = balbarath_bound(s, h)
    graph = one_skeleton(complex_)
    betti = reduced_betti(complex_, FieldSpec(2))
    sphere = betti.nonzero_degrees() == [h] and betti[h] == 1
    cert = is_vertex_minimal_cycle(complex_, h, fields)
    kappa = vertex_connectivity(graph, jobs=jobs).kappa
    # all vertices but the two of the leading ∂σ¹
    separator = [v for v in complex_.vertices if v > 2]

    checks = {
        "vertex_count": complex_.vertex_count == bound + 2,
        "sphere": sphere,
        "dimension": complex_.dim == h,
        "s_bound": _generator_degree(complex_) <= s,
        "certified": cert is not None,
        "tight_kappa": kappa == bound,
        "r_not_one": params.r != 1,
        "separator_disconnects": len(separator) == bound and separates(graph, separator),
    }
    report.add_witness(
        "nevo", ok=all(checks.values()),
        construction=complex_.provenance, parameters=params.as_dict(), n=complex_.vertex_count,
        bound=bound, kappa=kappa, separator=separator, checks=checks,
    )


def verify_example6(points, fields=None, jobs=None):
    """Tightness family: one witness per (s, h) grid point"""
    points = list(points)
    report = VerificationReport(
        statement="example6",
        instance=", ".join(f"nevo:{s},{h}" for s, h in points),
    )
    with report.timed("grid"):
        for s, h in points:
            _nevo_point(report, s, h, fields, jobs)
    report.summary.update({
        "points": len(points),
        "failures": sum(1 for w in report.witnesses if not w["ok"]),
    })
    return report.finish()


def verify_example2(dimensions=(2, 3, 4), fields=None, cap=None, force=False, jobs=None):
    """The prism complexes are vertex minimal 2-cycles; d=3 is pure but not a pseudomanifold"""
    dimensions = list(dimensions)
    report = VerificationReport(statement="example2", instance=", ".join(f"prism:{d}" for d in dimensions))
    for d in dimensions:
        complex_ = prism_complex(d)
        info = predicates(complex_)
        with report.timed(f"prism:{d}"):
            cert = is_vertex_minimal_cycle(complex_, 2, fields, cap=cap, force=force, jobs=jobs)
        checks = {"certified": cert is not None}
        if d == 3:
            checks["pure"] = info.is_pure
            checks["not_strongly_connected"] = not info.is_strongly_connected
            checks["ridges_in_one_facet"] = info.ridge_degree_values == [1]
        if d >= 4:
            checks["not_pure"] = not info.is_pure
        report.add_witness(
            "prism", ok=all(checks.values()),
            construction=complex_.provenance,
            n=complex_.vertex_count,
            stated_dim=d,
            literal_dim=complex_.dim,
            is_pure=info.is_pure,
            is_strongly_connected=info.is_strongly_connected,
            ridge_degrees=info.ridge_degree_values,
            is_pseudomanifold=info.is_pseudomanifold,
            certificate=cert.as_dict() if cert else None,
            checks=checks,
        )
    report.summary["failures"] = sum(1 for w in report.witnesses if not w["ok"])
    return report.finish()


def verify_suitability(complex_, bound_id="taylor", field=None, k=None, cap=None, force=False, jobs=None):
    """A regularity bound holds on every restriction, plus the Taylor support condition"""
    field = field or FieldSpec()
    s = _generator_degree(complex_)
    report = VerificationReport(statement=f"{bound_id}-suitability", instance=str(complex_))
    with report.timed("suitability"):
        result = check_suitable(complex_, bound_id, field, k=k, cap=cap, force=force, jobs=jobs)
    if not result.checked:
        raise HypothesisUnmet(f"no restriction of {complex_} is in the domain of the {bound_id} bound")
    report.summary.update({
        "bound": bound_id, "field": field.p, "checked": result.checked,
        "skipped": result.skipped, "violations": len(result.violations),
    })
    for violation in result.violations:
        report.add_witness("violation", ok=False, **violation.as_dict())
    if result.worst is not None:
        report.add_witness("tightest", **result.worst.as_dict())

    if bound_id == "taylor":
        support = taylor_support_check(hochster_table(complex_, field, cap=cap, force=force, jobs=jobs), s)
        report.add_witness(
            "taylor-support", ok=support.passed, s=s,
            violations=[list(v) for v in support.violations],
        )
    if not result.passed:
        report.fail()
    return report.finish()
