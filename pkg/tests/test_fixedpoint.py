import json
from fractions import Fraction

import pytest

from quantred import (
    FixedComponent,
    GroupKind,
    ProblemInstance,
    RingPresentation,
    SchemaError,
    catalog,
    catalog_names,
    has_errors,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    tensor_power,
    validate,
    wall_set,
)
from quantred.catalog import UnknownCatalogError

POINT = RingPresentation.point()


def point_component(name, moment, weights):
    return FixedComponent(
        name, POINT, moment, weights,
        [POINT.zero() for _ in weights], POINT.zero(), POINT.one(),
    )


# -- validation -----------------------------------------------------------

def test_quasi_free_info_no_errors():
    findings = validate(catalog("cp1-k", 2))
    assert not has_errors(findings)
    assert any(f.code == "quasi-free" and f.level == "INFO" for f in findings)


def test_moment_zero_is_error():
    p = ProblemInstance(GroupKind.U1, [point_component("f", 0, [1])])
    findings = validate(p)
    assert any(f.code == "moment-zero" and f.level == "ERROR" for f in findings)


def test_zero_weight_is_error():
    p = ProblemInstance(GroupKind.U1, [point_component("f", 1, [0])])
    assert any(f.code == "weight-zero" for f in validate(p))


def test_so3_small_moments_warn():
    findings = validate(catalog("so3-coadjoint", 1))
    assert any(f.code == "so3-small-moments" and f.level == "WARN" for f in findings)
    clean = validate(catalog("so3-coadjoint", 2))
    assert not any(f.level == "WARN" for f in clean)


def test_su2_warnings():
    findings = validate(catalog("su2-excluded"))
    codes = {f.code for f in findings if f.level == "WARN"}
    assert "su2-small-moments" in codes
    assert "su2-excluded-component" in codes


def test_weyl_asymmetry_is_error():
    p = ProblemInstance(
        GroupKind.SO3,
        [point_component("n", 2, [1]), point_component("s", -1, [-1])],
    )
    assert any(f.code == "weyl-asymmetry" for f in validate(p))


def test_validate_clean_on_catalog_defaults():
    for name in catalog_names():
        p = catalog(name)
        assert not has_errors(validate(p)), name


# -- wall sets ------------------------------------------------------------
# walls are returned as exponents k of zeta_N**k; exponent 0 is the point t=1

def test_wall_set_quasi_free():
    f = point_component("f", 1, [1, -1])
    assert wall_set(f) == (0,)


def test_wall_set_weight_two():
    f = point_component("f", 1, [2])
    assert wall_set(f) == (0, 2)  # conductor 4: {1, -1}


def test_wall_set_weights_two_three():
    f = point_component("f", 1, [2, 3])
    # conductor 12: 1, zeta_3, -1, zeta_3^2
    assert wall_set(f) == (0, 4, 6, 8)


def test_wall_set_respects_instance_conductor():
    p = catalog("cp2-k", 1)
    assert p.conductor == 12
    e0 = p.component("e0")  # weights 1, 3
    assert wall_set(e0, p.conductor) == (0, 4, 8)


# -- catalog ----------------------------------------------------------------

def test_cp1_k2_calibrated_data():
    p = catalog("cp1-k", 2)
    north, south = p.components
    assert (north.moment, north.weights) == (1, (1,))
    assert (south.moment, south.weights) == (-1, (-1,))


def test_cp1_double_walls():
    p = catalog("cp1-double")
    assert p.conductor == 4
    assert wall_set(p.component("north"), 4) == (0, 2)


def test_unknown_name():
    with pytest.raises(UnknownCatalogError):
        catalog("does-not-exist")


def test_fixed_entries_reject_k():
    with pytest.raises(ValueError):
        catalog("cp1-double", 3)


def test_conductor_values():
    assert catalog("cp1-k", 2).conductor == 4
    assert catalog("cp1-triple").conductor == 12
    assert catalog("cp2-k", 1).conductor == 12
    assert catalog("su2-sphere", 1).conductor == 4


def test_weyl_symmetry_of_nonabelian_entries():
    for name in ("so3-coadjoint", "so3-s2xs2", "su2-sphere", "su2-excluded"):
        p = catalog(name)
        moments = sorted(f.moment for f in p.components)
        assert moments == sorted(-m for m in moments), name


def test_dimension_consistency():
    assert catalog("cp1-k", 2).dimension() == 2
    assert catalog("cp2-k", 1).dimension() == 4
    assert catalog("cp1xcp1").dimension() == 4
    assert catalog("cp2-line").dimension() == 4
    assert catalog("so3-s2xs2").dimension() == 4


# -- tensor powers ------------------------------------------------------------

def test_tensor_power_scales_moments_and_omega():
    p = catalog("cp1xcp1")
    q = tensor_power(p, 3)
    for f, g in zip(p.components, q.components):
        assert g.moment == 3 * f.moment
        assert g.omega == f.omega * 3
        assert g.weights == f.weights
        assert g.normal_chern == f.normal_chern


def test_tensor_power_rejects_nonpositive():
    with pytest.raises(ValueError):
        tensor_power(catalog("cp1-k", 2), 0)


# -- component construction guards ---------------------------------------------

def test_component_rejects_mismatched_chern_count():
    with pytest.raises(ValueError):
        FixedComponent("f", POINT, 1, [1, 2], [POINT.zero()], POINT.zero(), POINT.one())


def test_component_rejects_nonnilpotent_omega():
    with pytest.raises(ValueError):
        FixedComponent("f", POINT, 1, [1], [POINT.zero()], POINT.one(), POINT.one())


def test_component_rejects_bad_todd():
    p1 = RingPresentation.projective_line()
    with pytest.raises(ValueError):
        FixedComponent("f", p1, 1, [1], [p1.zero()], p1.zero(), p1.gen("x"))


def test_instance_needs_unique_names():
    with pytest.raises(ValueError):
        ProblemInstance(
            GroupKind.U1,
            [point_component("f", 1, [1]), point_component("f", -1, [-1])],
        )


# -- JSON schema ----------------------------------------------------------------

def test_round_trip_through_dict():
    for name in ("cp1-k", "cp2-line", "cp1xcp1", "so3-s2xs2"):
        p = catalog(name)
        q = instance_from_dict(instance_to_dict(p), name=p.name)
        assert q.group == p.group
        for f, g in zip(p.components, q.components):
            assert f.name == g.name
            assert f.moment == g.moment
            assert f.weights == g.weights
            assert f.ring == g.ring
            assert f.omega == g.omega
            assert f.todd == g.todd
            assert f.normal_chern == g.normal_chern


def test_load_instance_from_file(tmp_path):
    doc = instance_to_dict(catalog("cp1-double"))
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(doc))
    p = load_instance(path)
    assert p.name == "inst"
    assert [f.moment for f in p.components] == [1, -1]


def test_floats_rejected():
    doc = instance_to_dict(catalog("cp1-k", 2))
    doc["components"][0]["omega"] = {"1": 0.5}
    with pytest.raises(SchemaError, match="float"):
        instance_from_dict(doc)


def test_float_moment_rejected():
    doc = instance_to_dict(catalog("cp1-k", 2))
    doc["components"][0]["moment"] = 1.0
    with pytest.raises(SchemaError, match="moment"):
        instance_from_dict(doc)


def test_bad_rational_literal():
    doc = instance_to_dict(catalog("cp1-k", 2))
    doc["components"][0]["omega"] = {"1": "1/0"}
    with pytest.raises(SchemaError, match="omega"):
        instance_from_dict(doc)


def test_unknown_generator_diagnostic():
    doc = instance_to_dict(catalog("cp1xcp1"))
    doc["components"][0]["omega"] = {"q": "1"}
    with pytest.raises(SchemaError, match="q"):
        instance_from_dict(doc)


def test_unknown_group():
    with pytest.raises(SchemaError, match="group"):
        instance_from_dict({"group": "E8", "components": []})


def test_point_ring_integrals_default_to_one():
    doc = {
        "group": "U1",
        "components": [
            {"name": "a", "moment": 1, "weights": [1], "ring": {}},
            {"name": "b", "moment": -1, "weights": [-1], "ring": {}},
        ],
    }
    p = instance_from_dict(doc)
    assert p.components[0].ring == RingPresentation.point()
    # a two-point sphere written with maximal shorthand still computes
    from quantred import character_polynomial

    assert character_polynomial(p).coefficients == {-1: 1, 0: 1, 1: 1}


def test_exact_rationals_in_schema():
    pres = {"generators": [["x", 2]], "top_degree": 2, "integrals": {"x": "1"}}
    doc = {
        "group": "U1",
        "components": [
            {"name": "a", "moment": 1, "weights": [1], "ring": pres,
             "omega": {"x": "7/3"}, "todd": {"1": "1", "x": "1/2"},
             "normal_chern": [{"x": "-2/5"}]},
            {"name": "b", "moment": -1, "weights": [-1], "ring": pres,
             "omega": {"x": "7/3"}, "todd": {"1": "1", "x": "1/2"},
             "normal_chern": [{"x": "-2/5"}]},
        ],
    }
    p = instance_from_dict(doc)
    f = p.components[0]
    assert f.omega.coeffs[(1,)] == Fraction(7, 3)
    assert f.normal_chern[0].coeffs[(1,)] == Fraction(-2, 5)
