"""Command-line front end with a small expression language over the rings.

Surface syntax (ASCII throughout; the full token table is in --help):

    expr     :=  ['-'] term (('+' | '-') term)*
    term     :=  factor ('*' factor)*
    factor   :=  atom ['^' exponent]
    atom     :=  '(' expr ')' | integer | name
    exponent :=  ['-'] (integer | 'q')

Scalar names are g, kappa, e, xi and tau2, tau4, ... (the transfers of
the successive invertible classes); integers are Burnside multiples of
1.  Everything else must be a ring generator: z00 z11 z01 z10 z0 z1
(zeta classes), cw cxw cl cxl (Chern classes of the canonical line
bundles and their twists), x xp (the two ruling section classes) and
divq (the divided correction class).  Negative powers are grammatical
only on zeta names -- whether a particular power is licensed in a given
space is the engine's admissibility check -- and on e when a kappa
factor is present in the same term (kappa*e^-2k is the k-th divided
kappa class).  The exponent letter q stands for the space parameter
bound by --q.

Subcommands:

    verify <space> [--q N]                     re-derive the presentation
    nf <space> [--q N] <expr>                  normal form + evaluations
    solve <space> [--q N] --coset m[,n[,p]]
          --rho <expr> --fix <expr;...>        solve for a class from its
                                               evaluation targets
    lines27 [--parity even|odd]                the refined 27-lines count

Exit codes: 0 success, 1 failed verification or unsolvable targets,
2 usage or parse errors.  --json switches every subcommand to a stable
JSON rendering carrying a versioned "schema" key.  The environment
variable QUADRICS_STEP_BOUND overrides the rewriting step bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .burnside import BurnsideScalar, UnsolvableError
from .engine import (RingElement, _has_additive_op, normal_form,
                     solve_with_coefficients, verify_presentation)
from .enumerative import PARITIES, euler_sym3
from .nonequiv import NonequivClass, TruncatedRing
from .presentation import (SpacePresentation, load_presentation, mono_str,
                           FixedTuple)
from .scalars import ONE, FragmentError, PointScalar

Mono = tuple[tuple[str, int], ...]

GENERATORS = ("z00", "z11", "z01", "z10", "z0", "z1",
              "cw", "cxw", "x", "xp", "divq", "cl", "cxl")
ZETA_NAMES = frozenset(("z00", "z11", "z01", "z10", "z0", "z1"))
SPACES = ("BU1", "X1q", "Q_BD", "Q_DD", "Q22", "Gr222")

_SCALAR_HELP = """\
token           meaning
-----           -------
1, 2, -3, ...   integer multiples of the unit of the Burnside ring
g               the free orbit class, g*g = 2*g
kappa           2 - g; kappa*e^-2k is the k-th divided kappa class
e^k             Euler class of the sign line (degree (0, k))
xi              invertible orientation class (degree (-2, 2))
tau2, tau4, ..  transfers tau(iota^-2), tau(iota^-4), .. (degree (2j, -2j))
z00 z11 z01 z10 component zeta classes (negative powers allowed when
z0 z1           licensed by a section class in the same monomial)
cw cxw          Chern class of the canonical line bundle and its twist
cl cxl          the same pair on the Grassmannian
x xp            section classes of the two rulings
divq            divided correction class (top Chern over the base)
q               in exponents: the space parameter bound by --q
"""


# --------------------------------------------------------------------------
# tokenizing and parsing
# --------------------------------------------------------------------------

class ParseError(ValueError):
    """Syntax or identifier error, annotated with a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i + 1))
            i = j
            continue
        if ch in "^*+-()":
            tokens.append((ch, ch, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", "", n + 1))
    return tokens


# A parsed value is a list of terms; eneg holds e-exponent still owed
# (from e^-k factors), resolved against a kappa once the term is complete.
@dataclass
class _Term:
    scalar: PointScalar
    eneg: int
    mono: dict[str, int]


def _term_mul(a: _Term, b: _Term, column: int) -> _Term:
    try:
        scalar = a.scalar * b.scalar
    except FragmentError as err:
        raise ParseError(str(err), column) from None
    mono = dict(a.mono)
    for name, exp in b.mono.items():
        mono[name] = mono.get(name, 0) + exp
    return _Term(scalar, a.eneg + b.eneg, mono)


def _value_mul(a: list[_Term], b: list[_Term], column: int) -> list[_Term]:
    return [_term_mul(s, t, column) for s in a for t in b]


def _value_pow(value: list[_Term], exponent: int, column: int) -> list[_Term]:
    if exponent < 0:
        raise ParseError("negative powers are only allowed on zeta names "
                         "and on e next to a kappa", column)
    out = [_Term(ONE, 0, {})]
    for _ in range(exponent):
        out = _value_mul(out, value, column)
    return out


def _resolve_eneg(term: _Term, column: int) -> PointScalar:
    """Fold owed negative e-powers into the scalar, spending a kappa."""
    scalar, eneg = term.scalar, term.eneg
    if not eneg or not scalar:
        return scalar
    total = scalar.e - eneg
    if total >= 0:
        return PointScalar(scalar.coeff, total, scalar.xi, scalar.tau,
                           scalar.kneg)
    if total % 2:
        raise ParseError("negative e-powers must pair up evenly", column)
    extra = -total // 2
    if scalar.kneg:
        # already a divided kappa class; deepen it
        return PointScalar(scalar.coeff, 0, scalar.xi, scalar.tau,
                           scalar.kneg + extra)
    c = scalar.coeff
    if c.a != -2 * c.b:
        raise ParseError("a negative e-power needs a kappa factor in the "
                         "same term", column)
    # coeff = p * kappa; divide it out and re-attach as e^-2*extra * kappa
    stripped = PointScalar(BurnsideScalar(-c.b, 0), 0, scalar.xi, scalar.tau, 0)
    try:
        return stripped * PointScalar.kappa_negative(extra)
    except FragmentError as err:
        raise ParseError(str(err), column) from None


class _Parser:
    def __init__(self, text: str, q: int | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.q = q

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> list[_Term]:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> list[_Term]:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = [_Term(-t.scalar, t.eneg, t.mono) for t in value]
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            rhs = self.term()
            if op == "-":
                rhs = [_Term(-t.scalar, t.eneg, t.mono) for t in rhs]
            value = value + rhs
        return value

    def term(self) -> list[_Term]:
        value = self.factor()
        while self.peek()[0] == "*":
            _, _, column = self.take()
            value = _value_mul(value, self.factor(), column)
        return value

    def factor(self) -> list[_Term]:
        kind, text, column = self.take()
        if kind == "(":
            value = self.expr()
            self.expect(")")
            if self.peek()[0] == "^":
                value = _value_pow(value, self.exponent(), column)
            return value
        if kind == "int":
            base = [_Term(PointScalar.from_burnside(
                BurnsideScalar(int(text), 0)), 0, {})]
            if self.peek()[0] == "^":
                return _value_pow(base, self.exponent(), column)
            return base
        if kind == "name":
            exponent = self.exponent() if self.peek()[0] == "^" else None
            return self.named(text, exponent, column)
        raise ParseError(f"unexpected {text!r}", column)

    def exponent(self) -> int:
        self.expect("^")
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        kind, text, column = self.take()
        if kind == "int":
            return sign * int(text)
        if kind == "name" and text == "q":
            if self.q is None:
                raise ParseError("the exponent q is not bound; pass --q",
                                 column)
            return sign * self.q
        raise ParseError("an exponent must be an integer or q", column)

    def named(self, name: str, exponent: int | None, column: int) -> list[_Term]:
        if name in GENERATORS:
            exp = 1 if exponent is None else exponent
            if exp < 0 and name not in ZETA_NAMES:
                raise ParseError(
                    f"negative powers are only allowed on zeta names, "
                    f"not {name!r}", column)
            return [_Term(ONE, 0, {name: exp} if exp else {})]
        if name == "e":
            exp = 1 if exponent is None else exponent
            if exp >= 0:
                return [_Term(PointScalar.e_power(exp) if exp else ONE, 0, {})]
            return [_Term(ONE, -exp, {})]
        scalar = None
        if name == "g":
            scalar = PointScalar.from_burnside(BurnsideScalar(0, 1))
        elif name == "kappa":
            scalar = PointScalar.from_burnside(BurnsideScalar(2, -1))
        elif name == "xi":
            scalar = PointScalar.xi_power(1)
        elif name.startswith("tau") and name[3:].isdigit():
            weight = int(name[3:])
            if weight % 2 or weight == 0:
                raise ParseError(f"{name!r}: transfers come in even weights "
                                 "tau2, tau4, ...", column)
            scalar = PointScalar.tau_power(weight // 2)
        if scalar is None:
            raise ParseError(f"unknown identifier {name!r}", column)
        base = [_Term(scalar, 0, {})]
        return base if exponent is None else _value_pow(base, exponent, column)


# --------------------------------------------------------------------------
# expressions
# --------------------------------------------------------------------------

_PRINT_ORDER = {name: i for i, name in enumerate(GENERATORS)}


class Expression:
    """A parsed sum of scalar-dressed monomials, space-independent.

    Adjacent terms over the same monomial merge when their scalars share a
    shape, so a distributed product like (5+11*g)*x comes back as one term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        merged: list[tuple[PointScalar, tuple]] = []
        for scalar, mono in terms:
            mono = tuple(mono)
            if (merged and merged[-1][1] == mono
                    and merged[-1][0].shape() == scalar.shape()):
                merged[-1] = (merged[-1][0] + scalar, mono)
            else:
                merged.append((scalar, mono))
        self.terms = tuple((s, m) for s, m in merged if s)

    def __str__(self):
        return render_terms(self.terms)

    def __eq__(self, other):
        return isinstance(other, Expression) and self.terms == other.terms

    def to_element(self, space: SpacePresentation) -> RingElement:
        pairs = []
        for scalar, mono in self.terms:
            for name, _ in mono:
                if name not in space.letters:
                    raise ValueError(
                        f"{name!r} is not a generator of {space.name}")
            m = space.mono(dict(mono))
            if not space.is_admissible(m):
                raise ValueError(f"monomial {mono_str(m)} is not admissible "
                                 f"in {space.name}: an unlicensed negative "
                                 "power")
            pairs.append((scalar, m))
        if not pairs:
            raise ValueError("cannot infer the degree of the zero expression")
        return RingElement.from_terms(space, pairs)


def render_terms(terms) -> str:
    """Print scalar/monomial pairs in the surface syntax."""
    if not terms:
        return "0"
    chunks = []
    for scalar, mono in terms:
        s, m = str(scalar), mono_str(mono)
        if mono and _has_additive_op(s):
            s = f"({s})"
        if not mono:
            text = s
        elif s == "1":
            text = m
        elif s == "-1":
            text = f"-{m}"
        else:
            text = f"{s}*{m}"
        if chunks and not text.startswith("-"):
            chunks.append(f" + {text}")
        elif chunks:
            chunks.append(f" - {text[1:]}")
        else:
            chunks.append(text)
    return "".join(chunks)


def parse(text: str, q: int | None = None) -> Expression:
    """Parse surface syntax into an Expression (see module docstring)."""
    raw = _Parser(text, q).parse()
    terms = []
    for term in raw:
        scalar = _resolve_eneg(term, 1)
        if not scalar:
            continue
        mono = tuple((name, exp) for name, exp in
                     sorted(term.mono.items(),
                            key=lambda kv: _PRINT_ORDER.get(kv[0], 99))
                     if exp)
        terms.append((scalar, mono))
    return Expression(terms)


# --------------------------------------------------------------------------
# the secondary, nonequivariant expression language (--rho / --fix)
# --------------------------------------------------------------------------

def parse_nonequiv(text: str, ring: TruncatedRing,
                   q: int | None = None) -> NonequivClass:
    """Parse a polynomial in the ring's own variables (plus integers)."""
    parser = _Parser(text, q)
    value = _ne_expr(parser, ring)
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return value


def _ne_expr(p: _Parser, ring: TruncatedRing) -> NonequivClass:
    negate = False
    if p.peek()[0] == "-":
        p.take()
        negate = True
    value = _ne_term(p, ring)
    if negate:
        value = -value
    while p.peek()[0] in ("+", "-"):
        op, _, _ = p.take()
        rhs = _ne_term(p, ring)
        value = value - rhs if op == "-" else value + rhs
    return value


def _ne_term(p: _Parser, ring: TruncatedRing) -> NonequivClass:
    value = _ne_factor(p, ring)
    while p.peek()[0] == "*":
        p.take()
        value = value * _ne_factor(p, ring)
    return value


def _ne_factor(p: _Parser, ring: TruncatedRing) -> NonequivClass:
    kind, text, column = p.take()
    if kind == "(":
        value = _ne_expr(p, ring)
        p.expect(")")
    elif kind == "int":
        value = NonequivClass.from_exponents(
            ring, (0,) * len(ring.vars), int(text))
    elif kind == "name":
        if text not in ring.vars:
            raise ParseError(f"unknown variable {text!r}; this ring has "
                             f"variables {list(ring.vars) or 'none'}", column)
        raw = tuple(1 if v == text else 0 for v in ring.vars)
        value = NonequivClass.from_exponents(ring, raw)
    else:
        raise ParseError(f"unexpected {text!r}", column)
    if p.peek()[0] == "^":
        exponent = p.exponent()
        if exponent < 0:
            raise ParseError("negative power in an evaluation target", column)
        out = NonequivClass.from_exponents(ring, (0,) * len(ring.vars), 1)
        for _ in range(exponent):
            out = out * value
        value = out
    return value


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _load(args) -> SpacePresentation:
    q = getattr(args, "q", None)
    return load_presentation(args.space, q)


def _cmd_verify(args) -> int:
    report = verify_presentation(_load(args))
    if args.json:
        print(json.dumps(report))
    else:
        for name, ok in report["checks"].items():
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
        state = "ok" if report["ok"] else "FAILED"
        print(f"{report['space']}: {state} ({len(report['checks'])} checks)")
    return 0 if report["ok"] else 1


def _cmd_nf(args) -> int:
    space = _load(args)
    element = parse(args.expr, space.q).to_element(space)
    reduced = normal_form(element)
    rho, fix = reduced.evaluate()
    if args.json:
        print(json.dumps({
            "schema": "quadrics/nf/1",
            "space": space.name,
            "q": space.q,
            "input": args.expr,
            "normal_form": str(reduced),
            "rho": str(rho),
            "fix": [str(part) for part in fix.parts],
        }))
    else:
        print(reduced)
        print(f"rho: {rho}")
        print(f"fix: {'; '.join(str(part) for part in fix.parts)}")
    return 0


def _infer_grading(space: SpacePresentation, key: tuple[int, ...],
                   rho: NonequivClass, fix: FixedTuple, degree):
    """Reconstruct the full degree from the coset key and target degrees."""
    labels = space.group.labels
    base = -key[-1]
    omega = {labels[0]: base}
    for label, offset in zip(labels[1:], key):
        omega[label] = offset + base
    if degree is not None:
        one, sigma = degree
    else:
        one = None
        for label, part in zip(labels, fix.parts):
            if part:
                one = part.homogeneous_degree() + 2 * omega[label]
                break
        if one is None:
            raise UnsolvableError("every fixed target is zero; pass "
                                  "--degree one,sigma")
        if not rho:
            raise UnsolvableError("the underlying target is zero; pass "
                                  "--degree one,sigma")
        sigma = rho.homogeneous_degree() - one
    grading = space.group.element(one, sigma, omega)
    if grading.coset_key() != tuple(key):
        raise ValueError(f"degree {grading} does not lie over coset {key}")
    return grading


def _cmd_solve(args) -> int:
    space = _load(args)
    try:
        key = tuple(int(part) for part in args.coset.split(","))
    except ValueError:
        raise ValueError(f"--coset wants integers like 1,-2, got "
                         f"{args.coset!r}") from None
    expected = len(space.group.labels) - 1
    if len(key) != expected:
        raise ValueError(f"{space.name} cosets are indexed by {expected} "
                         f"integer(s), got {len(key)}")
    degree = None
    if args.degree:
        one, sigma = (int(part) for part in args.degree.split(","))
        degree = (one, sigma)

    rho = parse_nonequiv(args.rho, space.underlying, space.q)
    fix_texts = args.fix.split(";")
    if len(fix_texts) != len(space.fixed_rings):
        raise ValueError(f"{space.name} has {len(space.fixed_rings)} fixed "
                         f"components; --fix wants that many ;-separated "
                         f"expressions, got {len(fix_texts)}")
    fix = FixedTuple(parse_nonequiv(text, ring, space.q)
                     for text, ring in zip(fix_texts, space.fixed_rings))

    grading = _infer_grading(space, key, rho, fix, degree)
    element, records, ambiguous = solve_with_coefficients(
        space, grading, rho, fix)
    if args.json:
        print(json.dumps({
            "schema": "quadrics/solve/1",
            "space": space.name,
            "q": space.q,
            "coset": list(key),
            "degree": {"one": grading.one, "sigma": grading.sigma},
            "element": str(element),
            "records": [
                {"coefficient": ({"a": c.a, "b": c.b}
                                 if isinstance(c, BurnsideScalar) else c),
                 "template": str(t),
                 "mono": mono_str(m)}
                for t, m, c in records],
            "ambiguous": ambiguous,
        }))
    else:
        print(element)
        for template, mono, coeff in records:
            print(f"  {str(coeff):>8s} * {template} * {mono_str(mono)}")
        if ambiguous:
            print("note: this degree carries evaluation-equal classes; "
                  "the basis-order tie-break was applied")
    return 0


def _cmd_lines27(args) -> int:
    result = euler_sym3(args.parity)
    if args.json:
        print(json.dumps(result.to_json()))
    else:
        print(f"alpha = {result.alpha}   (underlying count "
              f"{result.alpha.rho}, fixed count {result.alpha.fix})")
        print(f"beta  = {result.beta} on the component-"
              f"{result.fixed_line_component} ruling")
        print(f"{result.free_pairs} conjugate pairs, "
              f"{result.invariant_lines} invariant lines, and the "
              f"distinguished line over component "
              f"{result.fixed_line_component}:")
        print(f"  2*{result.free_pairs} + {result.invariant_lines} + "
              f"{result.beta} = {result.total}")
        print(f"class: {result.element}")
    return 0


# --------------------------------------------------------------------------
# entry points
# --------------------------------------------------------------------------

def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="quadrics",
        description="Exact equivariant cohomology of the low quadrics.",
        epilog=_SCALAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    def space_args(p, needs_q=True):
        p.add_argument("space", choices=SPACES,
                       help="one of " + ", ".join(SPACES))
        if needs_q:
            p.add_argument("--q", type=int, default=None,
                           help="bundle parameter for the parametrized "
                            "families (Q_BD, Q_DD, X1q)")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output with a schema key")

    p = sub.add_parser("verify",
                       help="re-derive everything a presentation asserts")
    space_args(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nf", help="normal form and evaluations")
    space_args(p)
    p.add_argument("expr", help="expression in the surface syntax")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("solve",
                       help="recover a class from its evaluation targets")
    space_args(p)
    p.add_argument("--coset", required=True, metavar="m[,n[,p]]",
                   help="integer coset key, comma-separated")
    p.add_argument("--rho", required=True,
                   help="underlying target (variables of the underlying ring)")
    p.add_argument("--fix", required=True,
                   help="fixed targets, one per component, ;-separated")
    p.add_argument("--degree", default=None, metavar="one,sigma",
                   help="full degree when the targets do not determine it")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("lines27", help="the refined 27-lines count")
    p.add_argument("--parity", choices=PARITIES, default="even")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lines27)
    return top


def run(argv=None) -> int:
    """Run one command line; returns the exit code instead of exiting."""
    parser = _build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except (UnsolvableError, FragmentError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
