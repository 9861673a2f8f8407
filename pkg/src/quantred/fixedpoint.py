"""Input data model: a rank-one group, the components of the circle-fixed
set with their localization data, validation, and a JSON schema.

Each fixed component carries:

* ``moment``       the integer weight of the circle action on the line
                   bundle's fiber over the component;
* ``weights``      the nonzero integer weights on the normal directions;
* ``normal_chern`` one first Chern class per normal direction;
* ``omega``        the nilpotent part of the symplectic class restricted
                   to the component;
* ``todd``         the Todd class of the component's tangent bundle.

Sign conventions are fixed once and for all by the calibration test: the
two-point projective-line instance with weights +1/-1 and moments +1/-1
must produce the character t**-1 + 1 + t.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .cohomology import CohomologyClass, RingPresentation
from .exactnum import lcm


class GroupKind(Enum):
    U1 = "U1"
    SU2 = "SU2"
    SO3 = "SO3"

    @property
    def is_rank_one_nonabelian(self) -> bool:
        return self is not GroupKind.U1


class SchemaError(ValueError):
    """An instance document failed to parse against the input schema."""


class InvalidInstanceError(ValueError):
    """Validation found errors that block computation."""


@dataclass(frozen=True)
class Finding:
    level: str  # "ERROR" | "WARN" | "INFO"
    code: str
    message: str
    component: str | None = None

    def __str__(self):
        where = f" [{self.component}]" if self.component else ""
        return f"{self.level}{where}: {self.message}"


class FixedComponent:
    """One connected component of the fixed-point set."""

    __slots__ = ("name", "ring", "moment", "weights", "normal_chern", "omega", "todd")

    def __init__(self, name, ring, moment, weights, normal_chern, omega, todd):
        weights = tuple(int(b) for b in weights)
        normal_chern = tuple(normal_chern)
        if len(weights) != len(normal_chern):
            raise ValueError(
                f"component {name!r}: {len(weights)} weights but "
                f"{len(normal_chern)} normal Chern classes"
            )
        if not isinstance(moment, int):
            raise ValueError(f"component {name!r}: moment must be an integer")
        for c in normal_chern:
            if c.presentation != ring:
                raise ValueError(f"component {name!r}: Chern class in wrong ring")
            if not c.is_nilpotent():
                raise ValueError(
                    f"component {name!r}: normal Chern classes must have zero "
                    "constant term"
                )
        if omega.presentation != ring or not omega.is_nilpotent():
            raise ValueError(
                f"component {name!r}: omega must be nilpotent in the "
                "component's ring"
            )
        if todd.presentation != ring or todd.constant_term() != 1:
            raise ValueError(
                f"component {name!r}: Todd class must have constant term 1"
            )
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "moment", int(moment))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "normal_chern", normal_chern)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "todd", todd)

    def __setattr__(self, *args):
        raise AttributeError("components are immutable")

    @property
    def n_plus(self) -> int:
        """Sum of the positive normal weights."""
        return sum(b for b in self.weights if b > 0)

    @property
    def n_minus(self) -> int:
        """Sum of absolute values of the negative normal weights."""
        return sum(-b for b in self.weights if b < 0)

    @property
    def is_isolated(self) -> bool:
        return self.ring.rank == 0

    @property
    def dimension(self) -> int:
        """Real dimension of the ambient manifold seen from this component."""
        return self.ring.top_degree + 2 * len(self.weights)

    def __repr__(self):
        return (
            f"FixedComponent({self.name!r}, moment={self.moment}, "
            f"weights={list(self.weights)})"
        )


class ProblemInstance:
    __slots__ = ("group", "components", "name")

    def __init__(self, group, components, name="instance"):
        components = tuple(components)
        if not components:
            raise ValueError("an instance needs at least one fixed component")
        names = [f.name for f in components]
        if len(set(names)) != len(names):
            raise ValueError("component names must be unique")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "name", str(name))

    def __setattr__(self, *args):
        raise AttributeError("instances are immutable")

    @property
    def conductor(self) -> int:
        """lcm of 4 and every |weight|: the one cyclotomic field in which all
        wall roots of unity (and i) live."""
        values = [4] + [abs(b) for f in self.components for b in f.weights]
        if self.group is GroupKind.SU2:
            values.append(2)
        return lcm(*values)

    def dimension(self) -> int:
        dims = {f.dimension for f in self.components}
        if len(dims) != 1:
            raise ValueError(f"components disagree about dim M: {sorted(dims)}")
        return dims.pop()

    def component(self, name: str) -> FixedComponent:
        for f in self.components:
            if f.name == name:
                return f
        raise KeyError(name)

    def __repr__(self):
        return (
            f"ProblemInstance({self.name!r}, {self.group.value}, "
            f"{len(self.components)} components)"
        )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(p: ProblemInstance) -> list[Finding]:
    """Structured findings about an instance.

    ERROR-level findings make the residue computations meaningless (a fixed
    component sitting on the zero level, a zero normal weight, moments not
    mirrored for a nonabelian group).  WARN findings flag instances for which
    the two sides are not asserted to agree; INFO findings are informational.
    """
    findings = []
    for f in p.components:
        if f.moment == 0:
            findings.append(Finding(
                "ERROR", "moment-zero",
                "moment value 0: the component meets the zero level, so 0 is "
                "not a regular value", f.name))
        if any(b == 0 for b in f.weights):
            findings.append(Finding(
                "ERROR", "weight-zero",
                "zero normal weight: the circle must act nontrivially on "
                "every normal direction", f.name))
    if all(abs(b) == 1 for f in p.components for b in f.weights):
        findings.append(Finding(
            "INFO", "quasi-free",
            "all weights are +1/-1: the action is quasi-free and no "
            "corrections at nontrivial roots of unity arise"))
    if p.group.is_rank_one_nonabelian:
        moments = sorted(f.moment for f in p.components)
        if moments != sorted(-m for m in moments):
            findings.append(Finding(
                "ERROR", "weyl-asymmetry",
                "moments are not symmetric under negation, impossible for an "
                f"action of {p.group.value}"))
    if p.group is GroupKind.SO3:
        if not any(abs(f.moment) > 1 for f in p.components):
            findings.append(Finding(
                "WARN", "so3-small-moments",
                "no component has |moment| > 1: equality of the two sides is "
                "not asserted for SO(3) in this range"))
    if p.group is GroupKind.SU2:
        if not any(abs(f.moment) > 2 for f in p.components):
            findings.append(Finding(
                "WARN", "su2-small-moments",
                "no component has |moment| > 2: equality of the two sides is "
                "not asserted for SU(2) in this range"))
        for f in p.components:
            if (f.moment, f.n_plus) == (1, 1) or (f.moment, f.n_minus) == (-1, 1):
                findings.append(Finding(
                    "WARN", "su2-excluded-component",
                    "moment +1 with positive-weight sum 1 (or the mirrored "
                    "case): equality is not asserted for SU(2)", f.name))
    return findings


def hypotheses_hold(findings) -> bool:
    """True when no WARN-level hypothesis failure is present."""
    return not any(f.level == "WARN" for f in findings)


def has_errors(findings) -> bool:
    return any(f.level == "ERROR" for f in findings)


def wall_set(f: FixedComponent, conductor: int | None = None) -> tuple[int, ...]:
    """Exponents k (mod the conductor N) of the roots of unity zeta_N**k
    with zeta**beta = 1 for some normal weight beta.  Always contains 0
    (the point t = 1)."""
    if conductor is None:
        conductor = lcm(4, *(abs(b) for b in f.weights))
    walls = set()
    for k in range(conductor):
        if any(b and (k * b) % conductor == 0 for b in f.weights):
            walls.add(k)
    walls.add(0)
    return tuple(sorted(walls))


def tensor_power(p: ProblemInstance, k: int) -> ProblemInstance:
    """Replace the line bundle by its k-th tensor power: every moment and
    every omega scales by k.  Weights and Chern data are untouched."""
    if k < 1:
        raise ValueError("tensor power must be a positive integer")
    comps = [
        FixedComponent(
            f.name, f.ring, f.moment * k, f.weights, f.normal_chern,
            f.omega * k, f.todd,
        )
        for f in p.components
    ]
    return ProblemInstance(p.group, comps, f"{p.name}^({k})")


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------
#
# {
#   "group": "U1",
#   "components": [
#     {"name": "north", "moment": 1, "weights": [1],
#      "ring": {"generators": [["x", 2]], "top_degree": 2,
#               "integrals": {"x": "1"}},
#      "omega": {"x": "3"},
#      "todd": {"1": "1", "x": "1"},
#      "normal_chern": [{"x": "1"}]}
#   ]
# }
#
# Polynomials are maps from monomial strings ("1", "x", "x^2*y") to exact
# rational literals ("7/3" or integers).  Floats are rejected.

_MONO_PART = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def _parse_rational(value, where):
    if isinstance(value, bool):
        raise SchemaError(f"{where}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise SchemaError(f"{where}: floats are not accepted; write an exact "
                          "rational string like \"7/3\"")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: bad rational literal {value!r}") from exc
    raise SchemaError(f"{where}: expected a rational literal, got {value!r}")


def _parse_monomial(key, pres, where):
    expo = [0] * pres.rank
    key = key.strip()
    if key in ("1", ""):
        return tuple(expo)
    for part in key.split("*"):
        m = _MONO_PART.match(part.strip())
        if not m:
            raise SchemaError(f"{where}: bad monomial {key!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        try:
            i = pres.generators.index(name)
        except ValueError:
            raise SchemaError(f"{where}: unknown generator {name!r}") from None
        expo[i] += power
    return tuple(expo)


def _parse_class(obj, pres, where) -> CohomologyClass:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected a monomial->rational map")
    coeffs = {}
    for key, value in obj.items():
        expo = _parse_monomial(key, pres, f"{where}.{key}")
        if any(e >= m for e, m in zip(expo, pres.orders)):
            continue  # nilpotent: the monomial is zero in the ring
        coeffs[expo] = coeffs.get(expo, 0) + _parse_rational(value, f"{where}.{key}")
    return CohomologyClass(pres, coeffs)


def _format_monomial(expo, pres) -> str:
    parts = [
        (g if e == 1 else f"{g}^{e}")
        for g, e in zip(pres.generators, expo) if e
    ]
    return "*".join(parts) if parts else "1"


def _format_rational(q: Fraction) -> str:
    return str(q)


def _class_to_dict(cls: CohomologyClass) -> dict:
    return {
        _format_monomial(e, cls.presentation): _format_rational(v)
        for e, v in sorted(cls.coeffs.items())
    }


def _parse_ring(obj, where) -> RingPresentation:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected a ring description")
    gens = obj.get("generators", [])
    if not isinstance(gens, list):
        raise SchemaError(f"{where}.generators: expected a list")
    names, orders = [], []
    for g in gens:
        if not (isinstance(g, (list, tuple)) and len(g) == 2):
            raise SchemaError(f"{where}.generators: entries are [name, order]")
        names.append(str(g[0]))
        orders.append(int(g[1]))
    top = obj.get("top_degree", 0)
    if not isinstance(top, int):
        raise SchemaError(f"{where}.top_degree: expected an integer")
    raw = obj.get("integrals")
    if raw is None:
        # a point integrates the empty monomial to 1; anything bigger must
        # spell its pushforward out
        raw = {"1": 1} if not names and top == 0 else {}
    if not isinstance(raw, dict):
        raise SchemaError(f"{where}.integrals: expected a map")
    probe = RingPresentation(names, orders, top, {})
    table = {}
    for key, value in raw.items():
        expo = _parse_monomial(key, probe, f"{where}.integrals.{key}")
        table[expo] = _parse_rational(value, f"{where}.integrals.{key}")
    try:
        return RingPresentation(names, orders, top, table)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def instance_from_dict(doc: dict, name="instance") -> ProblemInstance:
    if not isinstance(doc, dict):
        raise SchemaError("document root must be an object")
    try:
        group = GroupKind(doc.get("group", "U1"))
    except ValueError:
        raise SchemaError(
            f"group: expected one of U1/SU2/SO3, got {doc.get('group')!r}"
        ) from None
    comps_doc = doc.get("components")
    if not isinstance(comps_doc, list) or not comps_doc:
        raise SchemaError("components: expected a nonempty list")
    comps = []
    for i, cd in enumerate(comps_doc):
        where = f"components[{i}]"
        if not isinstance(cd, dict):
            raise SchemaError(f"{where}: expected an object")
        cname = cd.get("name", f"F{i}")
        ring = _parse_ring(cd.get("ring", {}), f"{where}.ring")
        moment = cd.get("moment")
        if not isinstance(moment, int) or isinstance(moment, bool):
            raise SchemaError(f"{where}.moment: expected an integer (no floats)")
        weights = cd.get("weights")
        if not isinstance(weights, list) or not all(
            isinstance(b, int) and not isinstance(b, bool) for b in weights
        ):
            raise SchemaError(f"{where}.weights: expected a list of integers")
        chern_doc = cd.get("normal_chern")
        if chern_doc is None:
            chern_doc = [{} for _ in weights]
        if not isinstance(chern_doc, list):
            raise SchemaError(f"{where}.normal_chern: expected a list")
        chern = [
            _parse_class(c, ring, f"{where}.normal_chern[{j}]")
            for j, c in enumerate(chern_doc)
        ]
        omega = _parse_class(cd.get("omega", {}), ring, f"{where}.omega")
        todd = _parse_class(cd.get("todd", {"1": 1}), ring, f"{where}.todd")
        try:
            comps.append(FixedComponent(cname, ring, moment, weights, chern, omega, todd))
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    try:
        return ProblemInstance(group, comps, name)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def instance_to_dict(p: ProblemInstance) -> dict:
    comps = []
    for f in p.components:
        ring = {
            "generators": [[g, m] for g, m in zip(f.ring.generators, f.ring.orders)],
            "top_degree": f.ring.top_degree,
            "integrals": {
                _format_monomial(e, f.ring): _format_rational(v)
                for e, v in sorted(f.ring.integrals.items())
            },
        }
        comps.append({
            "name": f.name,
            "moment": f.moment,
            "weights": list(f.weights),
            "ring": ring,
            "omega": _class_to_dict(f.omega),
            "todd": _class_to_dict(f.todd),
            "normal_chern": [_class_to_dict(c) for c in f.normal_chern],
        })
    return {"group": p.group.value, "components": comps}


def load_instance(path) -> ProblemInstance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}, "
                              f"column {exc.colno}: {exc.msg}") from exc
    import os

    name = os.path.splitext(os.path.basename(str(path)))[0]
    return instance_from_dict(doc, name=name)
