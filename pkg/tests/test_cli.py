"""Surface syntax and subcommands: parse, print, run, exit codes."""

import json
import random

import pytest

from quadrics.burnside import BurnsideScalar
from quadrics.cli import Expression, ParseError, parse, parse_nonequiv, run
from quadrics.nonequiv import NonequivClass, TruncatedRing
from quadrics.presentation import load_presentation
from quadrics.scalars import PointScalar

B = BurnsideScalar


# --- expression parsing ---

def test_parse_scalars():
    assert parse("1").terms == ((PointScalar.integer(1), ()),)
    assert parse("-3").terms == ((PointScalar.integer(-3), ()),)
    assert parse("g").terms == ((PointScalar.from_burnside(B(0, 1)), ()),)
    assert parse("kappa").terms == ((PointScalar.from_burnside(B(2, -1)), ()),)
    assert parse("e^3").terms == ((PointScalar.e_power(3), ()),)
    assert parse("xi^2").terms == ((PointScalar.xi_power(2), ()),)
    assert parse("tau4").terms == ((PointScalar.tau_power(2), ()),)


def test_parse_divided_kappa():
    k1 = PointScalar.kappa_negative(1)
    assert parse("kappa*e^-2").terms == ((k1, ()),)
    assert parse("e^-2*kappa").terms == ((k1, ()),)
    # dividing twice deepens the class, and the square doubles it
    assert parse("kappa*e^-4").terms == ((PointScalar.kappa_negative(2), ()),)
    sq = parse("(kappa*e^-2)^2").terms
    assert sq == ((PointScalar.kappa_negative(2) + PointScalar.kappa_negative(2), ()),)


def test_parse_monomials_and_precedence():
    e = parse("2*z00^-3*x + e^2*divq")
    assert str(e) == "2*z00^-3*x + e^2*divq"
    e2 = parse("(5+11*g)*x")
    assert e2.terms == ((PointScalar.from_burnside(B(5, 11)), (("x", 1),)),)
    # subtraction binds termwise
    e3 = parse("x - e^2*divq")
    assert str(e3) == "x - e^2*divq"


def test_parse_q_binding():
    assert parse("cxw^q", q=3) == parse("cxw^3")
    assert parse("z00^-q", q=2) == parse("z00^-2")
    with pytest.raises(ParseError, match="not bound"):
        parse("cxw^q")


def test_parse_errors_carry_columns():
    with pytest.raises(ParseError) as info:
        parse("x*(1+")
    assert "column 6" in str(info.value)
    with pytest.raises(ParseError):
        parse("x^")
    with pytest.raises(ParseError):
        parse("^2")
    with pytest.raises(ParseError):
        parse("e^-3")  # negative euler powers must pair with kappa
    with pytest.raises(ParseError):
        parse("x^-1")  # only component classes admit negative powers


def test_to_element_validates_letters_and_admissibility():
    bd2 = load_presentation("Q_BD", 2)
    el = parse("x + e^2*divq").to_element(bd2)
    assert str(el) == "e^2*divq + x"
    with pytest.raises(ValueError, match="not a generator"):
        parse("cl*x").to_element(bd2)
    with pytest.raises(ValueError, match="not admissible"):
        parse("z00^-1").to_element(bd2)


def test_parse_nonequiv():
    ring = TruncatedRing.even_quadric(2)
    cls = parse_nonequiv("27*c^2*y", ring)
    assert cls == 27 * NonequivClass.from_exponents(ring, (2, 1))
    assert parse_nonequiv("0", ring) == NonequivClass.zero(ring)
    with pytest.raises(ParseError):
        parse_nonequiv("w^2", ring)


def test_generated_expressions_round_trip():
    rng = random.Random(23)
    scalars = [
        PointScalar.integer(4), PointScalar.from_burnside(B(5, 11)),
        PointScalar.from_burnside(B(0, 1)), PointScalar.e_power(3),
        PointScalar.xi_power(2), PointScalar.tau_power(1),
        PointScalar.kappa_negative(1), -PointScalar.e_power(1),
    ]
    names = ("z00", "z11", "z1", "cw", "cxw", "x", "xp", "divq")
    for _ in range(120):
        terms = []
        for _ in range(rng.randint(1, 3)):
            picked = rng.sample(names, rng.randint(0, 2))
            mono = tuple((n, rng.choice([1, 2, -1]) if n.startswith("z")
                          else rng.randint(1, 2))
                         for n in sorted(picked, key=names.index))
            terms.append((rng.choice(scalars), mono))
        expr = Expression(terms)
        assert parse(str(expr)) == expr, str(expr)


# --- subcommands ---

def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf_text_output(capsys):
    code, out, _ = invoke(capsys, "nf", "Q22", "x*x")
    assert code == 0
    assert out == "e^2*x\nrho: 0\nfix: 0; 1; 0; 1\n"


def test_nf_json_output(capsys):
    code, out, _ = invoke(capsys, "nf", "Q22", "x*x", "--json")
    assert code == 0
    assert json.loads(out) == {
        "schema": "quadrics/nf/1", "space": "Q22", "q": None,
        "input": "x*x", "normal_form": "e^2*x",
        "rho": "0", "fix": ["0", "1", "0", "1"],
    }


def test_nf_binds_q_exponents(capsys):
    code, out, _ = invoke(capsys, "nf", "X1q", "--q", "2", "e^2*(cxw^q)")
    assert code == 0
    assert out.splitlines()[0] == "e^2*cxw^2"
    code, _, err = invoke(capsys, "nf", "BU1", "e^2*(cxw^q)")
    assert code == 2
    assert "q is not bound" in err


def test_nf_error_exit_codes(capsys):
    assert invoke(capsys, "nf", "Q_BD", "--q", "2", "x*(1+")[0] == 2
    assert invoke(capsys, "nf", "Q_BD", "--q", "2", "cl*x")[0] == 2
    assert invoke(capsys, "nf", "Q_BD", "x")[0] == 2  # missing q
    assert invoke(capsys, "nf", "Q22", "--q", "1", "x")[0] == 2


def test_verify_text_output(capsys):
    code, out, _ = invoke(capsys, "verify", "Q_BD", "--q", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ok   letter-degrees"
    assert lines[-1] == "Q_BD(q=0): ok (13 checks)"
    assert all(line.startswith("ok   ") for line in lines[:-1])


def test_verify_json_output(capsys):
    code, out, _ = invoke(capsys, "verify", "BU1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "quadrics/verify/1"
    assert doc["ok"] is True and doc["failures"] == []
    assert doc["checks"]["unit:unit-0"] is True


def test_solve_text_output(capsys):
    code, out, _ = invoke(capsys, "solve", "Q_BD", "--q", "2",
                          "--coset", "0,-2", "--rho", "y", "--fix", "0;1;y")
    assert code == 0
    assert out.splitlines() == [
        "x",
        "         0 * e^2 * divq",
        "         1 * 1 * x",
        "         0 * e^-2*kappa * z00*z11*cw*x",
    ]


def test_solve_json_output(capsys):
    code, out, _ = invoke(capsys, "solve", "Q_BD", "--q", "2",
                          "--coset", "0,-2", "--rho", "y", "--fix", "0;1;y",
                          "--json")
    assert code == 0
    assert json.loads(out) == {
        "schema": "quadrics/solve/1", "space": "Q_BD(q=2)", "q": 2,
        "coset": [0, -2], "degree": {"one": 4, "sigma": 2}, "element": "x",
        "records": [
            {"coefficient": 0, "template": "e^2", "mono": "divq"},
            {"coefficient": {"a": 1, "b": 0}, "template": "1", "mono": "x"},
            {"coefficient": 0, "template": "e^-2*kappa",
             "mono": "z00*z11*cw*x"},
        ],
        "ambiguous": False,
    }


def test_solve_flags_evaluation_equal_classes(capsys):
    code, out, _ = invoke(capsys, "solve", "Q22", "--coset=-2,-2,-2",
                          "--rho", "1", "--fix", "0;1;1;1")
    assert code == 0
    assert out.splitlines()[0] == "z00^2"
    assert out.splitlines()[-1] == ("note: this degree carries "
                                    "evaluation-equal classes; the "
                                    "basis-order tie-break was applied")


def test_solve_degree_flag_and_failure_modes(capsys):
    # all-zero targets cannot pin down a degree within the coset
    code, _, err = invoke(capsys, "solve", "Q_BD", "--q", "2",
                          "--coset", "0,-2", "--rho", "0", "--fix", "0;0;0")
    assert code == 1 and "--degree" in err
    code, out, _ = invoke(capsys, "solve", "Q_BD", "--q", "2",
                          "--coset", "0,-2", "--rho", "0", "--fix", "0;0;0",
                          "--degree", "4,2")
    assert code == 0 and out.splitlines()[0] == "0"
    code, _, err = invoke(capsys, "solve", "Q_BD", "--q", "2",
                          "--coset", "0,-2", "--rho", "y", "--fix", "0;1")
    assert code == 2 and "3 fixed components" in err


def test_lines27_text_output(capsys):
    code, out, _ = invoke(capsys, "lines27", "--parity", "even")
    assert code == 0
    assert out.splitlines() == [
        "alpha = 5+11*g   (underlying count 27, fixed count 5)",
        "beta  = 1 on the component-11 ruling",
        "10 conjugate pairs, 6 invariant lines, and the distinguished line "
        "over component 11:",
        "  2*10 + 6 + 1 = 27",
        "class: e^2*z00^-4*cxl*x + (5+11*g)*z00^-3*z11*cl*cxl*x",
    ]


def test_lines27_json_output(capsys):
    code, out, _ = invoke(capsys, "lines27", "--parity", "odd", "--json")
    assert code == 0
    assert json.loads(out) == {
        "schema": "quadrics/lines27/1", "parity": "odd",
        "alpha": {"a": 5, "b": 11}, "beta": 1,
        "free_pairs": 10, "invariant_lines": 6,
        "fixed_line_component": "00", "total": 27,
    }


def test_unknown_space_is_an_argparse_error(capsys):
    assert invoke(capsys, "nf", "Q_XX", "--q", "1", "x")[0] == 2
    assert invoke(capsys, "verify", "Q_BD", "--q", "77")[0] == 2
