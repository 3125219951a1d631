# regularity/suitability.py
"""
Suitability checks: a regularity bound in n must also hold for every
restriction Δ|_T with n replaced by |T|.
"""

import logging
from dataclasses import dataclass

from core.exceptions import BadParameters, DomainError, FullSimplex
from core.utils.precision import guarded_floor
from core.utils.subsets import popcount, vertices_of
from complexes.simplicial import minimal_nonfaces
from homology.chains import FieldSpec
from .bounds import dhs_bound, dhs_parameter, restriction_dhs_parameter, taylor_bound
from .hochster import homology_lattice

logger = logging.getLogger(__name__)

BOUND_IDS = ("taylor", "dhs")


@dataclass(frozen=True)
class SuitabilityWitness:
    subset: int
    reg: int
    bound: object
    parameter: int

    @property
    def slack(self):
        return self.bound - self.reg

    def as_dict(self):
        return {
            "subset": list(vertices_of(self.subset)),
            "reg": self.reg,
            "bound": str(self.bound),
            "parameter": self.parameter,
            "slack": str(self.slack),
        }


@dataclass(frozen=True)
class SuitabilityResult:
    bound_id: str
    passed: bool
    checked: int
    skipped: int
    worst: SuitabilityWitness = None
    violations: tuple = ()

    def __bool__(self):
        return self.passed


def _restriction_generator_degrees(complex_, lattice):
    """s(Δ|_T) per local index: largest minimal nonface of Δ inside T (0 if none)"""
    try:
        nonfaces = [(mask, popcount(mask)) for mask in minimal_nonfaces(complex_)]
    except FullSimplex:
        nonfaces = []
    degrees = []
    for local in range(len(lattice.betti)):
        mask = lattice.mask_of(local)
        degrees.append(max((size for nf, size in nonfaces if nf & mask == nf), default=0))
    return degrees


def check_suitable(complex_, bound_id, field=None, k=None, cap=None, force=False, jobs=None):
    """
    Check reg(k[Δ|_T]) <= bound(|T|, parameter of Δ|_T) for every nonempty T.

    taylor: the parameter is s(Δ|_T); restrictions that are simplices
            (zero ideal) have nothing to bound and are skipped.
    dhs:    the parameter is k capped by |T|-3; raises HypothesisUnmet when Δ
            is not flag or has a short induced cycle.
    Returns the tightest (smallest slack) witness.
    """
    if bound_id not in BOUND_IDS:
        raise BadParameters(f"unknown bound '{bound_id}', expected one of {BOUND_IDS}")
    field = field or FieldSpec()
    if bound_id == "dhs":
        k = dhs_parameter(complex_, k)

    lattice = homology_lattice(complex_, field, cap=cap, force=force, jobs=jobs)
    regs = lattice.restricted_regularities()
    generator_degrees = _restriction_generator_degrees(complex_, lattice) if bound_id == "taylor" else None

    worst = None
    violations = []
    checked = skipped = 0
    for local in range(1, len(regs)):
        mask = lattice.mask_of(local)
        size = popcount(mask)
        if bound_id == "taylor":
            parameter = generator_degrees[local]
            if parameter < 2:
                skipped += 1
                continue
            bound = taylor_bound(size, parameter)
            within = regs[local] <= guarded_floor(bound)
        else:
            parameter = restriction_dhs_parameter(k, size)
            try:
                bound = dhs_bound(size, parameter).value
            except DomainError:
                skipped += 1
                continue
            within = regs[local] <= guarded_floor(bound)

        checked += 1
        witness = SuitabilityWitness(subset=mask, reg=regs[local], bound=bound, parameter=parameter)
        if not within:
            violations.append(witness)
        if worst is None or (witness.slack, -size) < (worst.slack, -popcount(worst.subset)):
            worst = witness

    if violations:
        logger.error("%s bound not suitable for %s: %s violations", bound_id, complex_, len(violations))
    return SuitabilityResult(
        bound_id=bound_id,
        passed=not violations,
        checked=checked,
        skipped=skipped,
        worst=worst,
        violations=tuple(violations),
    )
