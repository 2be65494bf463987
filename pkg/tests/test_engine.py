"""Graded elements: normal forms, products, basis solves, printing."""

import random

import pytest

from quadrics.burnside import BurnsideScalar, UnsolvableError
from quadrics.engine import (
    AmbiguousSolveError, RingElement, multiply, normal_form, solve_in_basis,
    solve_with_coefficients, tau_transfer, verify_presentation,
)
from quadrics.presentation import coset_basis, load_presentation, mono_str
from quadrics.scalars import FragmentError, PointScalar

B = BurnsideScalar
BD2 = load_presentation("Q_BD", 2)


def elt(space, scalar=None, **exps):
    scalar = PointScalar.integer(1) if scalar is None else scalar
    return RingElement.from_mono(space, space.mono(exps), scalar)


def test_normal_form_of_complementary_section():
    assert str(normal_form(elt(BD2, xp=1))) == "e^2*divq + x"
    # idempotent
    nf = normal_form(elt(BD2, xp=1))
    assert normal_form(nf) == nf


def test_section_squares():
    assert str(multiply(elt(BD2, x=1), elt(BD2, x=1))) == "-e^2*divq*x"
    assert multiply(elt(BD2, x=1), elt(BD2, xp=1)).is_zero()
    dd = load_presentation("Q_DD", 2)
    assert multiply(elt(dd, x=1), elt(dd, xp=1)).is_zero()


def test_divided_class_square_closes_in_the_basis():
    sq = multiply(elt(BD2, divq=1), elt(BD2, divq=1))
    assert str(sq) == "-e^-2*kappa*divq*x + tau2*z00*z11*cxw*x + e^4*z1^-2*divq"
    assert normal_form(sq) == sq


def test_declared_relations_hold_under_multiplication():
    for name, q in [("Q_BD", 0), ("Q_BD", 3), ("Q_DD", 2), ("Q22", None),
                    ("Gr222", None), ("BU1", None), ("X1q", 2)]:
        sp = load_presentation(name, q)
        for rel in sp.relations:
            lhs = RingElement.from_terms(sp, rel.lhs)
            # a truncation relation may have an empty right-hand side
            rhs = RingElement.from_terms(sp, rel.rhs, grading=lhs.grading)
            assert normal_form(lhs) == normal_form(rhs), (sp.name, rel.name)


def test_declared_units_normalize_to_one():
    for name, q in [("BU1", None), ("Q_BD", 0)]:
        sp = load_presentation(name, q)
        assert sp.units, sp.name
        for uname, u, v in sp.units:
            lhs = RingElement.from_terms(sp, u)
            rhs = RingElement.from_terms(sp, v)
            assert multiply(lhs, rhs) == RingElement.one(sp), (sp.name, uname)


def test_from_terms_rejects_mixed_gradings():
    one = PointScalar.integer(1)
    with pytest.raises(ValueError):
        RingElement.from_terms(BD2, ((one, BD2.mono(x=1)),
                                     (one, BD2.mono(z00=1))))


def test_zero_element_needs_an_explicit_grading():
    with pytest.raises(ValueError):
        RingElement.from_terms(BD2, ())
    z = RingElement.from_terms(BD2, (), grading=BD2.group.element(sigma=2))
    assert z.is_zero()
    assert multiply(z, elt(BD2, x=1)).is_zero()


def test_products_outside_the_fragment_fail_loudly():
    # odd euler power against a divided kappa class: the scalar product
    # leaves the fragment, and the evaluation fallback cannot recover it
    a = elt(BD2, PointScalar.e_power(1), z00=1, z11=1, cw=1)
    b = elt(BD2, PointScalar.kappa_negative(1), x=1)
    with pytest.raises(UnsolvableError) as info:
        multiply(a, b)
    assert isinstance(info.value.__context__, FragmentError)


def test_step_bound_is_read_from_the_environment(monkeypatch):
    monkeypatch.setenv("QUADRICS_STEP_BOUND", "1")
    with pytest.raises(RuntimeError, match="QUADRICS_STEP_BOUND=1"):
        multiply(elt(BD2, x=1), elt(BD2, x=1))


def test_solve_recovers_the_complementary_section():
    g = BD2.mono_grading(BD2.mono(xp=1))
    rho, fix = BD2.eval_mono(BD2.mono(xp=1))
    el, records, ambiguous = solve_with_coefficients(BD2, g, rho, fix)
    assert str(el) == "e^2*divq + x"
    assert not ambiguous
    coeffs = {mono_str(m): c for _, m, c in records}
    assert coeffs == {"divq": 1, "x": 1, "z00*z11*cw*x": 0}
    assert solve_in_basis(BD2, g, rho, fix) == el


def test_solve_round_trips_on_sampled_cosets():
    rng = random.Random(5)
    for name, q in [("Q_BD", 1), ("Q_DD", 2), ("Gr222", None)]:
        sp = load_presentation(name, q)
        for _ in range(4):
            key = (rng.randint(-2, 2), rng.randint(-2, 2))
            for m in coset_basis(sp, key):
                rho, fix = sp.eval_mono(m)
                el = solve_in_basis(sp, sp.mono_grading(m), rho, fix)
                assert el == RingElement.from_mono(sp, m), (sp.name, mono_str(m))


def test_inconsistent_targets_are_rejected():
    g = BD2.mono_grading(BD2.mono(x=1))
    rho, fix = BD2.eval_mono(BD2.mono(x=1))
    with pytest.raises(UnsolvableError):
        solve_in_basis(BD2, g, rho * 0, fix)  # rho says 0, fix disagrees


def test_phantom_coset_is_ambiguous_but_tie_break_restores_slots():
    # on the four-point quadric some far cosets evaluate with a kernel:
    # raise-mode flags them, the default tie-break still returns the slot
    q22 = load_presentation("Q22")
    for m in coset_basis(q22, (-2, -2, -2)):
        g = q22.mono_grading(m)
        rho, fix = q22.eval_mono(m)
        with pytest.raises(AmbiguousSolveError):
            solve_with_coefficients(q22, g, rho, fix, ambiguity="raise")
        el, _, ambiguous = solve_with_coefficients(q22, g, rho, fix)
        assert ambiguous
        assert el == RingElement.from_mono(q22, m)


def test_tau_transfer():
    assert str(tau_transfer(elt(BD2, x=1))) == "tau2*x"
    assert str(tau_transfer(elt(BD2, x=1), 2)) == "tau4*x"
    # transfer of a unit times xi collapses by Frobenius reciprocity
    xi = RingElement.from_mono(BD2, BD2.mono(), PointScalar.xi_power(1))
    assert str(tau_transfer(RingElement.one(BD2)) * xi) == "g"


def test_printing_parenthesizes_additive_scalars():
    el = elt(BD2, PointScalar.from_burnside(B(5, 11)), x=1)
    assert str(el) == "(5+11*g)*x"
    gel = RingElement.from_mono(BD2, BD2.mono(), PointScalar.from_burnside(B(0, 1)))
    assert str(gel) == "g"
    assert str(elt(BD2, PointScalar.from_burnside(B(0, 1)), x=1)) == "g*x"


def test_evaluation_is_multiplicative_and_cached():
    u = elt(BD2, divq=1)
    v = elt(BD2, x=1)
    ru, fu = u.evaluate()
    rv, fv = v.evaluate()
    rw, fw = multiply(u, v).evaluate()
    assert rw == ru * rv and fw == fu * fv
    assert u.evaluate() is u.evaluate()


def test_verify_presentation_report_shape():
    report = verify_presentation(load_presentation("Q_BD", 0))
    assert report["schema"] == "quadrics/verify/1"
    assert report["space"] == "Q_BD(q=0)"
    assert report["ok"] is True
    assert report["failures"] == []
    assert all(isinstance(v, bool) for v in report["checks"].values())
    assert len(report["checks"]) >= 5
