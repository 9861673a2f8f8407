from fractions import Fraction

import pytest

from quantred import (
    Cyclotomic,
    FixedComponent,
    GroupKind,
    InvalidInstanceError,
    ProblemInstance,
    RingPresentation,
    WeylFactor,
    catalog,
    catalog_names,
    kawasaki_corrections,
    kawasaki_residues,
    rational_part,
    reduced_rr,
    residue_of_h,
    residue_table,
    root_of_unity,
    rr_invariant,
    rr_reduced_main,
    tensor_power,
    verify_quantization,
)

POINT = RingPresentation.point()


def point_component(name, moment, weights):
    return FixedComponent(
        name, POINT, moment, weights,
        [POINT.zero() for _ in weights], POINT.zero(), POINT.one(),
    )


# -- main term -------------------------------------------------------------------

def test_main_term_cp1():
    assert rr_reduced_main(catalog("cp1-k", 2)) == 1


def test_main_term_empty_positive_side():
    p = ProblemInstance(
        GroupKind.U1,
        [point_component("a", -1, [1]), point_component("b", -2, [-1])],
    )
    assert rr_reduced_main(p) == 0


def test_main_term_is_fractional_on_orbifold_reductions():
    # the smooth-case formula alone gives a non-integer on non-quasi-free data
    assert rr_reduced_main(catalog("cp1-double")) == Fraction(1, 2)
    assert rr_reduced_main(catalog("cp1-triple")) == Fraction(1, 3)
    assert rr_reduced_main(catalog("cp2-k", 4)) == Fraction(17, 12)
    assert rr_reduced_main(catalog("cp2-line-double")) == Fraction(3, 4)


def test_main_term_requires_validity():
    p = ProblemInstance(GroupKind.U1, [point_component("f", 0, [1])])
    with pytest.raises(InvalidInstanceError):
        rr_reduced_main(p)


# -- corrections ------------------------------------------------------------------

def test_quasi_free_entries_have_no_corrections():
    for name in ("cp1-k", "cp1xcp1", "cp2-line", "so3-coadjoint", "so3-s2xs2"):
        assert kawasaki_corrections(catalog(name)) == {}, name


def test_cp1_double_correction():
    corr = kawasaki_corrections(catalog("cp1-double"))
    assert corr == {2: Fraction(-1, 2)}


def test_cp1_triple_galois_orbit():
    p = catalog("cp1-triple")
    residues = kawasaki_residues(p)  # conductor 12: order-3 roots at k = 4, 8
    assert set(residues) == {4, 8}
    z3 = root_of_unity(12, 4)
    assert residues[4] == z3 / 3
    # the two residues are Galois conjugates ...
    assert residues[8] == residues[4].galois(5)
    # ... individually irrational, with rational orbit sum
    assert isinstance(residues[4], Cyclotomic) and not residues[4].is_rational()
    assert kawasaki_corrections(p) == {3: Fraction(-1, 3)}


def test_corrections_ignore_negative_moment_components():
    p = catalog("cp1-double")
    weyl = WeylFactor.for_group(p.group)
    north = p.component("north")
    # the correction equals the north residue alone: south sits at negative
    # moment and is filtered out even though -1 lies on its wall set
    assert kawasaki_residues(p)[2] == residue_of_h(north, 2, weyl, conductor=4)
    south = p.component("south")
    assert residue_of_h(south, 2, weyl, conductor=4) != 0


def test_cp2_default_corrections():
    assert kawasaki_corrections(catalog("cp2-k", 4)) == {
        2: Fraction(1, 4), 3: Fraction(1, 3)
    }


def test_nilpotent_kawasaki_term():
    corr = kawasaki_corrections(catalog("cp2-line-double"))
    assert corr == {2: Fraction(-3, 4)}


def test_orbit_sums_are_rational_everywhere():
    # rational_part is applied inside kawasaki_corrections; it must never
    # raise on catalog data, including tensor powers
    for name in catalog_names():
        p = catalog(name)
        kawasaki_corrections(p)
        kawasaki_corrections(tensor_power(p, 3))


# -- the identity -----------------------------------------------------------------

def test_totals_match_invariant_count():
    for name in catalog_names():
        p = catalog(name)
        if name == "su2-excluded":
            continue
        red = reduced_rr(p)
        assert red.total == red.main + sum(red.corrections.values())
        assert red.total == rr_invariant(p), name


def test_quasi_free_two_term_identity():
    # with all weights +-1 the main term alone equals the invariant count
    for name in ("cp1-k", "cp1xcp1", "cp2-line", "so3-s2xs2"):
        p = catalog(name)
        assert rr_reduced_main(p) == rr_invariant(p), name


def test_correction_is_necessary_on_cp1_double():
    p = catalog("cp1-double")
    lef = rr_invariant(p)
    red = reduced_rr(p)
    assert red.main != lef
    assert red.main + red.corrections[2] == lef


# -- tensor-power polynomiality ------------------------------------------------------

def exact_finite_differences(values, order):
    d = list(values)
    for _ in range(order):
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
    return d


def test_tensor_polynomiality():
    for name, degree in (("cp1-k", 0), ("cp2-k", 1)):
        base = catalog(name)
        totals = [reduced_rr(tensor_power(base, k)).total for k in range(1, 7)]
        diffs = exact_finite_differences(totals, degree + 1)
        assert all(d == 0 for d in diffs), (name, totals)


# -- verify_quantization ---------------------------------------------------------------

def test_pass_verdicts():
    for name in ("cp1-k", "cp1-double", "cp2-k", "cp1xcp1", "cp2-line",
                  "cp2-line-double", "so3-coadjoint", "so3-s2xs2"):
        report = verify_quantization(catalog(name))
        assert report.verdict == "PASS", name
        assert report.values_agree
        assert report.hypotheses_ok


def test_not_asserted_with_differing_sides():
    report = verify_quantization(catalog("su2-excluded"))
    assert report.verdict == "NOT-ASSERTED"
    assert not report.hypotheses_ok
    assert report.lefschetz == 1
    assert report.reduced.total == 0
    assert report.oracle == 1
    assert not report.values_agree


def test_not_asserted_small_so3():
    report = verify_quantization(catalog("so3-coadjoint", 1))
    assert report.verdict == "NOT-ASSERTED"


def test_report_contents():
    report = verify_quantization(catalog("cp1-double"))
    assert report.group == "U1"
    assert report.conductor == 4
    assert report.n_components == 2
    assert report.dimension == 2
    assert report.character == {-1: 1, 1: 1}
    assert set(report.timings) >= {"lefschetz_s", "reduction_s", "oracle_s"}
    assert report.reduced.residues_by_exponent.keys() == {2}


def test_verify_raises_on_invalid():
    p = ProblemInstance(GroupKind.U1, [point_component("f", 0, [1])])
    with pytest.raises(InvalidInstanceError):
        verify_quantization(p)


# -- nonabelian instances with nonzero counts ---------------------------------------
# the catalog's SO(3)/SU(2) entries all have vanishing counts; these two
# pin the Weyl-factor arithmetic against classical representation theory

def test_so3_triple_product_of_spheres():
    # SO(3) rotating S2(3) x S2(2) x S2(2): the invariant count is the
    # multiplicity of the trivial representation in V3 (x) V2 (x) V2, which
    # equals the multiplicity of V3 inside V2 (x) V2 = V0+V1+V2+V3+V4: one
    from itertools import product as cartesian

    comps = []
    for signs in cartesian((1, -1), repeat=3):
        m = 3 * signs[0] + 2 * signs[1] + 2 * signs[2]
        name = "p" + "".join("pn"[s < 0] for s in signs)
        comps.append(point_component(name, m, list(signs)))
    p = ProblemInstance(GroupKind.SO3, comps, "so3-triple")
    report = verify_quantization(p)
    assert report.verdict == "PASS"
    assert report.lefschetz == report.reduced.total == report.oracle == 1
    assert report.reduced.corrections == {}  # quasi-free


def test_su2_projective_three_space():
    # SU(2) on the projectivization of the spin-3/2 representation (torus
    # weights -3,-1,1,3), with the fourth bundle power: the sections form
    # Sym^4 of spin-3/2 = V6+V4+V3+V2+V0, dimension 35, one trivial summand.
    # Corrections appear at four Galois orbits and sum to 1 - 1/12.
    ws = [-3, -1, 1, 3]
    comps = [
        point_component(f"e{j}", -4 * wj, [wi - wj for wi in ws if wi != wj])
        for j, wj in enumerate(ws)
    ]
    p = ProblemInstance(GroupKind.SU2, comps, "su2-cp3")
    report = verify_quantization(p)
    assert report.verdict == "PASS"
    assert report.lefschetz == report.reduced.total == report.oracle == 1
    assert report.character.total_dimension() == 35
    assert report.reduced.main == Fraction(1, 12)
    assert report.reduced.corrections == {
        2: Fraction(1, 12), 3: Fraction(1, 6), 4: Fraction(1, 2), 6: Fraction(1, 6),
    }


# -- residue table ----------------------------------------------------------------------

def test_residue_rows_sum_to_zero():
    for name in catalog_names():
        rows = residue_table(catalog(name))
        for row in rows:
            assert rational_part(row.total) == 0, (name, row.component)


def test_residue_table_quasi_free_has_no_extra_columns():
    rows = residue_table(catalog("cp1-k", 2))
    assert rows[0].labels() == ["zero", "t=1", "infinity"]


def test_residue_table_shows_wall_columns():
    rows = residue_table(catalog("cp1-double"))
    assert rows[0].labels() == ["zero", "t=1", "zeta_4^2", "infinity"]
