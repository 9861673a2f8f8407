"""The reduced-space count: the residue at t = 1 of the Weyl-weighted forms
over positive-moment components (the smooth main term), plus correction
terms at the other roots of unity lying on some component's wall set (the
orbifold corrections), and the verification report comparing everything
against the invariant count and the brute-force oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactnum import rational_part
from .fixedpoint import (
    InvalidInstanceError,
    ProblemInstance,
    has_errors,
    hypotheses_hold,
    validate,
    wall_set,
)
from .lefschetz import WeylFactor, residue_of_h, rr_invariant
from .oracle import character_polynomial, invariant_multiplicity


@dataclass(frozen=True)
class ReducedRR:
    """Reduced-space count split into the smooth term and the corrections.

    ``corrections`` maps the order d of a primitive root of unity to the
    (rational) sum of residues over the whole Galois orbit of primitive
    d-th roots; ``residues_by_exponent`` keeps the individual cyclotomic
    residues for diagnostics, keyed by the exponent k of zeta_N**k.
    """

    main: Fraction
    corrections: dict[int, Fraction]
    residues_by_exponent: dict[int, object]
    total: Fraction


def _positive_components(p: ProblemInstance):
    return [f for f in p.components if f.moment > 0]


def rr_reduced_main(p: ProblemInstance) -> Fraction:
    """Sum over positive-moment components of the residue of Weyl * h_F at
    t = 1: the evaluation of the Todd class against the reduced space, which
    is the full answer exactly when the action on the zero level is free."""
    findings = validate(p)
    if has_errors(findings):
        raise InvalidInstanceError(
            "; ".join(str(f) for f in findings if f.level == "ERROR")
        )
    weyl = WeylFactor.for_group(p.group)
    n = p.conductor
    total = Fraction(0)
    for f in _positive_components(p):
        total += rational_part(residue_of_h(f, 0, weyl, conductor=n))
    return total


def kawasaki_residues(p: ProblemInstance) -> dict[int, object]:
    """Individual residues at the nontrivial wall roots of unity: exponent
    k of zeta_N**k mapped to the (generally cyclotomic) sum over
    positive-moment components whose wall set contains that root.  Roots on
    no wall are skipped: those residues vanish identically."""
    weyl = WeylFactor.for_group(p.group)
    n = p.conductor
    walls_by_component = {
        f.name: set(wall_set(f, n)) for f in p.components
    }
    out: dict[int, object] = {}
    for k in range(1, n):
        active = [
            f for f in _positive_components(p)
            if k in walls_by_component[f.name]
        ]
        if not active:
            continue
        value = Fraction(0)
        for f in active:
            value = value + residue_of_h(f, k, weyl, conductor=n)
        out[k] = value
    return out


def kawasaki_corrections(p: ProblemInstance) -> dict[int, Fraction]:
    """Correction terms grouped by Galois orbit: the key is the order d > 1
    of the primitive roots in the orbit, the value the exact rational orbit
    sum.  An irrational orbit sum raises NotRationalError (it would mean an
    incomplete orbit, i.e. a bug or corrupted data)."""
    findings = validate(p)
    if has_errors(findings):
        raise InvalidInstanceError(
            "; ".join(str(f) for f in findings if f.level == "ERROR")
        )
    n = p.conductor
    per_orbit: dict[int, object] = {}
    for k, value in kawasaki_residues(p).items():
        d = n // gcd(n, k)
        per_orbit[d] = per_orbit.get(d, Fraction(0)) + value
    return {d: rational_part(v) for d, v in sorted(per_orbit.items())}


def reduced_rr(p: ProblemInstance) -> ReducedRR:
    main = rr_reduced_main(p)
    residues = kawasaki_residues(p)
    n = p.conductor
    per_orbit: dict[int, object] = {}
    for k, value in residues.items():
        d = n // gcd(n, k)
        per_orbit[d] = per_orbit.get(d, Fraction(0)) + value
    corrections = {d: rational_part(v) for d, v in sorted(per_orbit.items())}
    total = main + sum(corrections.values(), Fraction(0))
    return ReducedRR(main, corrections, residues, total)


# ---------------------------------------------------------------------------
# the full verification report
# ---------------------------------------------------------------------------

@dataclass
class ResidueRow:
    component: str
    entries: list  # [(pole label, exact scalar)]
    total: object  # exact scalar; zero by the global residue theorem

    def labels(self):
        return [label for label, _ in self.entries]


@dataclass
class Report:
    instance_name: str
    group: str
    n_components: int
    conductor: int
    dimension: int | None
    findings: list
    hypotheses_ok: bool
    lefschetz: Fraction | None
    reduced: ReducedRR | None
    oracle: int | None
    character: object | None
    residue_table: list
    verdict: str
    timings: dict = field(default_factory=dict)

    @property
    def values_agree(self) -> bool:
        return (
            self.lefschetz is not None
            and self.reduced is not None
            and self.oracle is not None
            and self.lefschetz == self.reduced.total == self.oracle
        )


def pole_labels(p: ProblemInstance) -> list:
    """Column order for residue tables: 0, the wall roots of unity
    (t = 1 first), then infinity."""
    n = p.conductor
    walls = sorted(set().union(*(wall_set(f, n) for f in p.components)))
    return ["zero"] + walls + ["infinity"]


def residue_table(p: ProblemInstance) -> list[ResidueRow]:
    """Residues of Weyl * h_F at every pole site, per component, with the
    row sums (zero, by the residue theorem on the sphere)."""
    weyl = WeylFactor.for_group(p.group)
    n = p.conductor
    rows = []
    for f in p.components:
        entries = []
        total = Fraction(0)
        for site in pole_labels(p):
            value = residue_of_h(f, site, weyl, conductor=n)
            label = site if isinstance(site, str) else _root_label(n, site)
            entries.append((label, value))
            total = total + value
        rows.append(ResidueRow(f.name, entries, total))
    return rows


def _root_label(n: int, k: int) -> str:
    if k == 0:
        return "t=1"
    return f"zeta_{n}^{k}"


def verify_quantization(p: ProblemInstance, degree_bound: int | None = None) -> Report:
    """Compute the invariant count, the reduced count with corrections and
    the oracle character count, and compare.

    The verdict is PASS when the stated hypotheses hold and all three agree,
    NOT-ASSERTED when a hypothesis fails (the values are still reported but
    equality is not claimed), FAIL otherwise.  ERROR-level findings raise
    InvalidInstanceError instead of producing a report.  ``degree_bound``
    raises (never lowers) the oracle's expansion bound.
    """
    findings = validate(p)
    if has_errors(findings):
        raise InvalidInstanceError(
            "; ".join(str(f) for f in findings if f.level == "ERROR")
        )
    ok = hypotheses_hold(findings)
    timings = {}

    t0 = time.perf_counter()
    lefschetz_value = rr_invariant(p)
    timings["lefschetz_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    reduced = reduced_rr(p)
    timings["reduction_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    character = character_polynomial(p, degree_bound)
    oracle_value = invariant_multiplicity(character, p.group)
    timings["oracle_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    table = residue_table(p)
    timings["residue_table_s"] = time.perf_counter() - t0

    agree = lefschetz_value == reduced.total == oracle_value
    if not ok:
        verdict = "NOT-ASSERTED"
    elif agree:
        verdict = "PASS"
    else:
        verdict = "FAIL"
    try:
        dim = p.dimension()
    except ValueError:
        dim = None
    return Report(
        instance_name=p.name,
        group=p.group.value,
        n_components=len(p.components),
        conductor=p.conductor,
        dimension=dim,
        findings=findings,
        hypotheses_ok=ok,
        lefschetz=lefschetz_value,
        reduced=reduced,
        oracle=oracle_value,
        character=character,
        residue_table=table,
        verdict=verdict,
        timings=timings,
    )
