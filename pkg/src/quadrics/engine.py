"""Exact arithmetic over the space presentations.

Elements are finite sums of point-ring scalars against admissible
monomials in the space's letters, homogeneous in the full grading.
Products are computed by running the presentation's rewrite rules to a
fixpoint and then, when the result is not already supported on the
coset table, solving for the unique basis combination with the same
evaluation.  The same solver, fed the declared restriction targets
instead, is what turns the stated section/pushforward lemmas into
machine checks: `verify_presentation` replays all of them.

Rewriting is bounded by the QUADRICS_STEP_BOUND environment variable
(default 10000 rule applications per product) and fails loudly rather
than silently truncating.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Mapping

from .burnside import BurnsideScalar, UnsolvableError, burnside_solve
from .grading import GradingElement
from .nonequiv import NonequivClass
from .presentation import (FixedTuple, Mono, SpacePresentation, Terms,
                           mono_mul, mono_str)
from .scalars import (ONE, FragmentError, PointScalar, scalar_dressing)

DEFAULT_STEP_BOUND = 10_000


def _step_bound() -> int:
    return int(os.environ.get("QUADRICS_STEP_BOUND", DEFAULT_STEP_BOUND))


def _has_additive_op(text: str) -> bool:
    """Whether a rendered scalar contains a top-level + or -.

    Such a scalar must be parenthesized before a trailing *monomial or
    the printed element would not re-parse to itself (signs following
    '^', '*' or '(' are unary and harmless, as is anything already
    inside parentheses).
    """
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif i and depth == 0 and ch in "+-" and text[i - 1] not in "^*(":
            return True
    return False


def _accumulate(acc: dict[Mono, PointScalar], mono: Mono, scalar: PointScalar) -> None:
    if not scalar:
        return
    existing = acc.get(mono)
    total = scalar if existing is None else existing + scalar
    if total:
        acc[mono] = total
    elif existing is not None:
        del acc[mono]


class RingElement:
    """A homogeneous class: point-ring scalars against admissible monomials."""

    __slots__ = ("space", "grading", "terms", "_eval")

    def __init__(self, space: SpacePresentation, grading: GradingElement,
                 terms: Mapping[Mono, PointScalar] | Terms = ()):
        self.space = space
        self.grading = grading
        pairs = terms.items() if isinstance(terms, Mapping) else \
            [(m, s) for s, m in terms]
        clean: dict[Mono, PointScalar] = {}
        for mono, scalar in pairs:
            if not scalar:
                continue
            degree = space.mono_grading(mono) + space.group.element(*scalar.grading())
            if degree != grading:
                raise ValueError(
                    f"term {scalar}*{mono_str(mono)} has degree {degree}, "
                    f"not {grading}")
            _accumulate(clean, mono, scalar)
        self.terms = clean
        self._eval = None

    # --- constructors ---

    @classmethod
    def from_terms(cls, space: SpacePresentation, terms: Terms,
                   grading: GradingElement | None = None) -> "RingElement":
        if grading is None:
            if not terms:
                raise ValueError("the zero element needs an explicit grading")
            scalar, mono = terms[0]
            grading = space.mono_grading(mono) + space.group.element(*scalar.grading())
        return cls(space, grading, terms)

    @classmethod
    def from_mono(cls, space: SpacePresentation, mono: Mono,
                  scalar: PointScalar = ONE) -> "RingElement":
        return cls.from_terms(space, ((scalar, mono),))

    @classmethod
    def zero(cls, space: SpacePresentation, grading: GradingElement) -> "RingElement":
        return cls(space, grading, {})

    @classmethod
    def one(cls, space: SpacePresentation) -> "RingElement":
        return cls(space, space.group.zero(), {(): ONE})

    # --- structure ---

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> Terms:
        return tuple((self.terms[m], m) for m in sorted(self.terms))

    def evaluate(self) -> tuple[NonequivClass, FixedTuple]:
        if self._eval is None:
            rho = NonequivClass.zero(self.space.underlying)
            fix = FixedTuple.zero(self.space.fixed_rings)
            for mono, scalar in self.terms.items():
                mr, mf = self.space.eval_mono(mono)
                rho = rho + scalar.rho_multiplier() * mr
                fix = fix + scalar.fix_multiplier() * mf
            self._eval = (rho, fix)
        return self._eval

    # --- arithmetic ---

    def _check(self, other: "RingElement") -> None:
        if self.space is not other.space:
            raise ValueError("elements live over different spaces")
        if self.grading != other.grading:
            raise ValueError(f"degrees differ: {self.grading} vs {other.grading}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        out = dict(self.terms)
        for mono, scalar in other.terms.items():
            _accumulate(out, mono, scalar)
        return RingElement(self.space, self.grading, out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __neg__(self) -> "RingElement":
        return RingElement(self.space, self.grading,
                           {m: -s for m, s in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self, other)
        if isinstance(other, PointScalar):
            return scalar_multiple(self, other)
        if isinstance(other, BurnsideScalar):
            return RingElement(self.space, self.grading,
                               {m: s.scale(other) for m, s in self.terms.items()})
        if isinstance(other, int):
            return self * BurnsideScalar(other, 0)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, RingElement):
            return NotImplemented
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElement) and self.space is other.space
                and self.grading == other.grading and self.terms == other.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for scalar, mono in self.sorted_terms():
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

    def __repr__(self):
        return f"RingElement({self.space.name}: {self!s})"


# --------------------------------------------------------------------------
# rewriting
# --------------------------------------------------------------------------

def _applicable_rule(space: SpacePresentation, mono: Mono):
    exps = dict(mono)
    for rule in space.rules:
        if not all(exps.get(n, 0) >= e for n, e in rule.lhs):
            continue
        if rule.guard == "admissible":
            stripped = mono_mul(mono, tuple((n, -e) for n, e in rule.lhs),
                                space.letter_order)
            if not all(space.is_admissible(mono_mul(stripped, d, space.letter_order))
                       for _, d in rule.rhs):
                continue
        return rule
    return None


_DIVIDED_SQUARES: dict[tuple, Terms] = {}


def _divided_square(space: SpacePresentation) -> Terms:
    """divq^2 re-expanded over the basis; computed once per space by solving."""
    key = (space.name, space.q)
    expansion = _DIVIDED_SQUARES.get(key)
    if expansion is None:
        mono = space.mono(divq=2)
        grading = space.mono_grading(mono)
        rho, fix = space.eval_mono(mono)
        element = solve_in_basis(space, grading, rho, fix)
        expansion = element.sorted_terms()
        _DIVIDED_SQUARES[key] = expansion
    return expansion


def _rewrite(space: SpacePresentation, terms: Mapping[Mono, PointScalar]) -> dict[Mono, PointScalar]:
    bound = _step_bound()
    steps = 0
    out: dict[Mono, PointScalar] = {}
    work = [(m, s) for m, s in terms.items()]
    order = space.letter_order
    while work:
        mono, scalar = work.pop()
        if not scalar:
            continue
        steps += 1
        if steps > bound:
            raise RuntimeError(
                f"rewriting exceeded QUADRICS_STEP_BOUND={bound} steps in {space.name}")
        if dict(mono).get("divq", 0) >= 2:
            rest = mono_mul(mono, (("divq", -2),), order)
            for s2, delta in _divided_square(space):
                work.append((mono_mul(rest, delta, order), scalar * s2))
            continue
        rule = _applicable_rule(space, mono)
        if rule is None:
            _accumulate(out, mono, scalar)
            continue
        stripped = mono_mul(mono, tuple((n, -e) for n, e in rule.lhs), order)
        for s2, delta in rule.rhs:
            work.append((mono_mul(stripped, delta, order), scalar * s2))
    return out


def _canonical(space: SpacePresentation, grading: GradingElement,
               terms: dict[Mono, PointScalar]) -> RingElement:
    if not terms:
        return RingElement.zero(space, grading)
    element = RingElement(space, grading, terms)
    if space.family == "BU1":
        return element
    try:
        table = space.coset_basis(grading)
    except ValueError:
        # deep bundle cosets have no finite table; the reduced form stands
        return element
    if all(m in set(table) for m in element.terms):
        return element
    rho, fix = element.evaluate()
    try:
        return solve_in_basis(space, grading, rho, fix, ambiguity="raise")
    except AmbiguousSolveError:
        # The evaluation pair cannot place this class in the table uniquely;
        # the rewritten form is exact as it stands, so keep it.
        return element


def multiply(u: RingElement, v: RingElement) -> RingElement:
    if u.space is not v.space:
        raise ValueError("elements live over different spaces")
    space = u.space
    grading = u.grading + v.grading
    try:
        raw: dict[Mono, PointScalar] = {}
        for m1, s1 in u.terms.items():
            for m2, s2 in v.terms.items():
                _accumulate(raw, mono_mul(m1, m2, space.letter_order), s1 * s2)
        return _canonical(space, grading, _rewrite(space, raw))
    except FragmentError:
        # The termwise scalars left the implemented point-ring fragment;
        # the product itself is still determined by its evaluation.
        ru, fu = u.evaluate()
        rv, fv = v.evaluate()
        return solve_in_basis(space, grading, ru * rv, fu * fv)


def scalar_multiple(u: RingElement, scalar: PointScalar) -> RingElement:
    grading = u.grading + u.space.group.element(*scalar.grading())
    try:
        out: dict[Mono, PointScalar] = {}
        for mono, s in u.terms.items():
            _accumulate(out, mono, scalar * s)
        return _canonical(u.space, grading, _rewrite(u.space, out))
    except FragmentError:
        rho, fix = u.evaluate()
        return solve_in_basis(u.space, grading,
                              scalar.rho_multiplier() * rho,
                              fix * scalar.fix_multiplier())


def normal_form(u: RingElement) -> RingElement:
    try:
        return _canonical(u.space, u.grading, _rewrite(u.space, dict(u.terms)))
    except FragmentError:
        rho, fix = u.evaluate()
        return solve_in_basis(u.space, u.grading, rho, fix)


def tau_transfer(u: RingElement, j: int = 1) -> RingElement:
    """Multiplication by tau(iota^{-2j}); Frobenius makes this the transfer."""
    return scalar_multiple(u, PointScalar.tau_power(j))


# --------------------------------------------------------------------------
# solving against evaluation
# --------------------------------------------------------------------------

class AmbiguousSolveError(UnsolvableError):
    """The evaluation pair does not pin down the coefficients uniquely."""


def _exact_solve(rows: list[list[int]], rhs: list[int],
                 ncols: int) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Row-reduce an integer system over Q.

    Returns (particular solution with free unknowns set to 0, kernel basis
    vectors — one per free unknown).  Raises UnsolvableError when the system
    is inconsistent.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for row in m[r:]:
        if row[ncols]:
            raise UnsolvableError("evaluation targets are inconsistent with the basis")
    sol = [Fraction(0)] * ncols
    for row, c in zip(m, pivots):
        sol[c] = row[ncols]
    kernel: list[list[Fraction]] = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(m, pivots):
            vec[pc] = -row[fc]
        kernel.append(vec)
    return sol, kernel


def _tie_break(sol: list[Fraction], kernel: list[list[Fraction]],
               pairs: list[tuple[int, int]]) -> list[Fraction]:
    """Pick the canonical integral solution of an underdetermined solve.

    The solution set is sol + span(kernel); the canonical representative is
    the integral, Burnside-parity-consistent point whose coefficients are
    smallest from the last unknown backwards, so earlier-listed basis slots
    absorb whatever the evaluation pair cannot attribute uniquely.
    """
    if len(kernel) > 2:
        raise AmbiguousSolveError(
            f"evaluation pair leaves {len(kernel)} coefficients free")
    denom = 1
    for vec in kernel:
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    for x in sol:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    if denom > 12:
        raise AmbiguousSolveError("tie-break search window too coarse")
    steps = [Fraction(k, denom) for k in range(-8 * denom, 8 * denom + 1)]
    best_key = None
    best = None
    for ts in product(steps, repeat=len(kernel)):
        x = list(sol)
        for t, vec in zip(ts, kernel):
            if t:
                x = [a + t * b for a, b in zip(x, vec)]
        if any(v.denominator != 1 for v in x):
            continue
        if any((x[i] - x[j]) % 2 != 0 for i, j in pairs):
            continue
        key = tuple((abs(v), 0 if v >= 0 else 1) for v in reversed(x))
        if best_key is None or key < best_key:
            best_key, best = key, x
    if best is None:
        raise AmbiguousSolveError(
            "no integral Burnside-consistent solution in the tie-break window")
    return best


def solve_with_coefficients(space: SpacePresentation, grading: GradingElement,
                            rho_target: NonequivClass, fix_target: FixedTuple,
                            ansatz: Iterable[tuple[PointScalar, Mono]] | None = None,
                            ambiguity: str = "tiebreak"):
    """Solve target = sum_i c_i * template_i * mono_i exactly.

    Without an ansatz the candidates are the coset-table slots of `grading`,
    each dressed with the unique point-ring scalar filling the degree gap
    (slots whose gap supports nothing drop out).  Coefficients live in the
    Burnside ring where the template is a plain Burnside scalar and in Z
    otherwise.  Returns (element, records, ambiguous) with one (template,
    mono, coefficient) record per candidate, zeros included.

    Some cosets carry distinct classes with equal evaluation pairs (e.g. a
    kappa-multiple of one slot against the e^-2 kappa dressing of another);
    there the system is honestly underdetermined.  With ambiguity="tiebreak"
    the basis-order rule above picks the canonical representative and the
    returned flag is True; with ambiguity="raise" an AmbiguousSolveError
    escapes instead.
    """
    if not isinstance(fix_target, FixedTuple):
        fix_target = FixedTuple(fix_target)
    candidates: list[tuple[PointScalar, Mono, str]] = []
    if ansatz is not None:
        for template, mono in ansatz:
            domain = "burnside" if template.shape() == (0, 0, 0, 0) else "int"
            candidates.append((template, mono, domain))
    else:
        for mono in space.coset_basis(grading):
            gap = grading - space.mono_grading(mono)
            dressed = scalar_dressing(gap.to_ro_c2())
            if dressed is None:
                continue
            candidates.append((dressed[0], mono, dressed[1]))

    columns: list[tuple[int, ...]] = []  # unknown indices per candidate
    n_unknowns = 0
    for _, _, domain in candidates:
        if domain == "burnside":
            columns.append((n_unknowns, n_unknowns + 1))
            n_unknowns += 2
        else:
            columns.append((n_unknowns,))
            n_unknowns += 1

    rows: list[list[int]] = []
    rhs: list[int] = []

    def add_row(rhs_value: int, weights: list[tuple[int, int]]):
        row = [0] * n_unknowns
        for idx, w in weights:
            row[idx] += w
        rows.append(row)
        rhs.append(rhs_value)

    evals = [space.eval_mono(mono) for _, mono, _ in candidates]
    for key in space.underlying.basis_keys():
        weights = []
        for (template, _, domain), cols, (mrho, _) in zip(candidates, columns, evals):
            w = template.rho_multiplier() * mrho.coefficient(key)
            if w:
                weights.append((cols[0], w))
        add_row(rho_target.coefficient(key), weights)
    for ci, ring in enumerate(space.fixed_rings):
        for key in ring.basis_keys():
            weights = []
            for (template, _, domain), cols, (_, mfix) in zip(candidates, columns, evals):
                w = template.fix_multiplier() * mfix.parts[ci].coefficient(key)
                if w:
                    weights.append((cols[-1], w))
            add_row(fix_target.parts[ci].coefficient(key), weights)

    if n_unknowns == 0:
        if rho_target or fix_target:
            raise UnsolvableError(f"nothing lives in degree {grading} of {space.name}")
        return RingElement.zero(space, grading), (), False

    solution, kernel = _exact_solve(rows, rhs, n_unknowns)
    ambiguous = bool(kernel)
    if ambiguous:
        if ambiguity == "raise":
            raise AmbiguousSolveError(
                "underdetermined solve: the evaluation pair does not separate "
                f"the dressed basis slots in degree {grading}")
        pairs = [cols for _, cols in zip(candidates, columns) if len(cols) == 2]
        solution = _tie_break(solution, kernel, pairs)
    for value in solution:
        if value.denominator != 1:
            raise UnsolvableError(f"non-integral coefficient {value} in degree {grading}")

    records = []
    terms: dict[Mono, PointScalar] = {}
    for (template, mono, domain), cols in zip(candidates, columns):
        if domain == "burnside":
            coeff = burnside_solve(int(solution[cols[0]]), int(solution[cols[1]]))
        else:
            coeff = int(solution[cols[0]])
        records.append((template, mono, coeff))
        scaled = template.scale(coeff if isinstance(coeff, BurnsideScalar)
                                else BurnsideScalar(coeff, 0))
        _accumulate(terms, mono, scaled)
    return RingElement(space, grading, terms), tuple(records), ambiguous


def solve_in_basis(space: SpacePresentation, grading: GradingElement,
                   rho_target: NonequivClass, fix_target: FixedTuple,
                   ansatz=None, ambiguity: str = "tiebreak") -> RingElement:
    return solve_with_coefficients(space, grading, rho_target, fix_target,
                                   ansatz=ansatz, ambiguity=ambiguity)[0]


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

_SAMPLE_KEYS = {
    2: ((0,), (1,), (2,), (-1,), (-2,)),
    3: ((0, 0), (1, 0), (0, -1), (-1, 1), (2, -1)),
    4: ((0, 0, 0), (1, 0, 0), (0, -1, -1), (-1, 1, 0), (0, 1, 0)),
}


def _sample_keys(space: SpacePresentation):
    keys = _SAMPLE_KEYS[len(space.group.labels)]
    if space.family == "X1q":
        keys = tuple(k for k in keys if k[0] > -space.q) if space.q >= 1 else keys
    return keys


def verify_presentation(space: SpacePresentation) -> dict:
    """Re-derive everything the presentation asserts; report per-check results."""
    checks: dict[str, bool] = {}
    failures: list[str] = []

    def record(name: str, ok: bool, detail: str = ""):
        checks[name] = bool(ok)
        if not ok:
            failures.append(f"{name}" + (f": {detail}" if detail else ""))

    bad = []
    for name in space.letter_order:
        letter = space.letters[name]
        if letter.rho and letter.rho.homogeneous_degree() != letter.grading.underlying_dim():
            bad.append(f"{name} (underlying)")
        for label, part in zip(space.group.labels, letter.fix.parts):
            if part and part.homogeneous_degree() != letter.grading.fixed_degree(label):
                bad.append(f"{name} (component {label})")
    record("letter-degrees", not bad, ", ".join(bad))

    for rel in space.relations:
        lhs = RingElement.from_terms(space, rel.lhs)
        rhs = RingElement.from_terms(space, rel.rhs, grading=lhs.grading)
        ok = lhs.evaluate() == rhs.evaluate()
        if ok:
            try:
                ok = normal_form(lhs) == normal_form(rhs)
            except ValueError:
                pass  # no table at this degree; evaluation equality stands
        record(f"relation:{rel.name}", ok)

    for rule in space.rules:
        lhs = RingElement.from_mono(space, rule.lhs)
        rhs = RingElement.from_terms(space, rule.rhs, grading=lhs.grading)
        record(f"rule:{rule.name}", lhs.evaluate() == rhs.evaluate())

    for name, terms in space.derived.items():
        if name not in space.letters:
            continue
        letter_elt = RingElement.from_mono(space, space.mono({name: 1}))
        expansion = RingElement.from_terms(space, terms, grading=letter_elt.grading)
        ok = letter_elt.evaluate() == expansion.evaluate()
        if ok:
            try:
                ok = normal_form(letter_elt) == normal_form(expansion)
            except ValueError:
                pass
        record(f"derived:{name}", ok)

    for name, unit_terms, inverse_terms in space.units:
        product = multiply(RingElement.from_terms(space, unit_terms),
                           RingElement.from_terms(space, inverse_terms))
        record(f"unit:{name}", product == RingElement.one(space))

    if space.lemma_ansatz is not None:
        rho, fix = space.pushforward_targets["section"]
        grading = space.letters["xp"].grading
        try:
            solved, _, _ = solve_with_coefficients(space, grading, rho, fix,
                                                ansatz=space.lemma_ansatz)
            expected = RingElement.from_terms(space, space.lemma_expected,
                                              grading=grading)
            record("section-class", solved == expected)
        except UnsolvableError as err:
            record("section-class", False, str(err))

    for name, declared in space.pushforwards.items():
        rho, fix = space.pushforward_targets[name]
        expected = RingElement.from_terms(space, declared)
        try:
            solved, _, _ = solve_with_coefficients(space, expected.grading, rho, fix,
                                                ansatz=space.pushforward_ansatz)
            # The declared formula may use a different spanning set than the
            # ansatz (e.g. a zeta_1*c_chi_omega term), so compare normal forms.
            record(f"pushforward:{name}", normal_form(solved) == normal_form(expected))
        except UnsolvableError as err:
            record(f"pushforward:{name}", False, str(err))

    if space.identifications:
        ident = {k: RingElement.from_terms(space, v)
                 for k, v in space.identifications.items()}
        record("identification:first-factor",
               multiply(ident["cw1"], ident["cxw1"]).is_zero())
        record("identification:second-factor",
               multiply(ident["cw2"], ident["cxw2"]).is_zero())
        lhs = multiply(ident["cw_bundle"], ident["cxw_bundle"])
        prod = multiply(ident["cw1"], ident["cw2"])
        shift = RingElement.from_mono(space, space.mono(z00=2, z01=1, z10=1),
                                      PointScalar.tau_power(1))
        record("identification:bundle-factor", lhs == multiply(shift, prod))

    if space.family != "BU1":
        bad = []
        for key in _sample_keys(space):
            for slot in space.coset_basis(key):
                u = RingElement.from_mono(space, slot)
                rho, fix = u.evaluate()
                try:
                    back = solve_in_basis(space, u.grading, rho, fix)
                except UnsolvableError as err:
                    bad.append(f"{mono_str(slot)}: {err}")
                    continue
                if back != u:
                    bad.append(mono_str(slot))
        record("coset-tables", not bad, ", ".join(bad[:4]))

    return {
        "schema": "quadrics/verify/1",
        "space": space.name,
        "q": space.q,
        "checks": checks,
        "failures": failures,
        "ok": not failures,
    }


def annihilator_check(space: SpacePresentation,
                      z: RingElement) -> tuple[bool, bool]:
    """Decide (partner * z == 0, z in the section ideal) independently.

    The two booleans agree exactly when the annihilator of the section
    class is the principal ideal on the complementary class.  Only the
    families with a single ruling through the distinguished section
    satisfy that law; for the two-ruling even quadrics the complementary
    section lands in the other ruling and the law fails, so asking for
    it is an error rather than a false negative.
    """
    if space.annihilator_pair is None:
        raise ValueError(
            f"{space.name}: the annihilator law does not hold (the complementary "
            "section lies in the other ruling); only Q_BD and Q22 support it")
    section, partner = space.annihilator_pair
    partner_elt = RingElement.from_mono(space, space.mono({partner: 1}))
    killed = multiply(partner_elt, z).is_zero()
    member = all(dict(mono).get(section, 0) >= 1
                 for mono in normal_form(z).terms)
    return killed, member
