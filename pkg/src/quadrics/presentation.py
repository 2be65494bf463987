"""Presentations of the C2-spaces whose cohomology the engine computes.

A SpacePresentation bundles, for one space,

  * the grading group (one label per fixed-set component),
  * truncated integer cohomology rings for the underlying space and for
    every fixed component, together with the evaluation (restriction)
    of each generating letter into them,
  * the letters' gradings and divisibility credits -- the set of
    component classes whose negative powers a letter's presence
    licenses in an admissible monomial,
  * an ordered list of grading-preserving rewrite rules, the ring
    relations they orient, derived-element definitions, unit pairs and
    section/pushforward data,
  * additive coset tables: a finite free-module basis over the point
    ring for every coset of the RO(C2)-plus-base-class grading lattice.

Five families are available through load_presentation:

  BU1      the classifying space of complex lines (no coset tables;
           evaluation only, windowed),
  X1q      the projectivized bundle over it with fibre P(C + C^q sigma),
  Q_BD     the odd-dimensional smooth quadrics containing X1q,
  Q_DD     the even-dimensional ones (two disjoint section families),
  Gr222    the Grassmannian of lines in P3, presented as Q_DD at q = 2
           with the Pluecker letters renamed,
  Q22      the split four-fixed-point quadric surface P1 x P1.

Everything downstream -- normal forms, coefficient solving,
verification, the line count -- is generic over this data.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .burnside import ONE_MINUS_KAPPA
from .grading import GradingElement, GradingGroup
from .nonequiv import NonequivClass, TruncatedRing
from .scalars import PointScalar

Mono = tuple[tuple[str, int], ...]
Terms = tuple[tuple[PointScalar, Mono], ...]

MAX_Q = 16

_ONE = PointScalar.integer(1)
_E2 = PointScalar.e_power(2)
_XI = PointScalar.xi_power(1)
_TAU = PointScalar.tau_power(1)
_K1 = PointScalar.kappa_negative(1)  # e^-2 kappa
_UNIT_MINUS_KAPPA = PointScalar.from_burnside(ONE_MINUS_KAPPA)


class FixedTuple:
    """One cohomology class per fixed-set component, componentwise ring ops."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[NonequivClass]):
        self.parts = tuple(parts)

    @classmethod
    def zero(cls, rings: Iterable[TruncatedRing]) -> "FixedTuple":
        return cls(NonequivClass.zero(r) for r in rings)

    @classmethod
    def unit(cls, rings: Iterable[TruncatedRing]) -> "FixedTuple":
        return cls(NonequivClass.unit(r) for r in rings)

    def __add__(self, other: "FixedTuple") -> "FixedTuple":
        return FixedTuple(a + b for a, b in zip(self.parts, other.parts))

    def __sub__(self, other: "FixedTuple") -> "FixedTuple":
        return FixedTuple(a - b for a, b in zip(self.parts, other.parts))

    def __neg__(self) -> "FixedTuple":
        return FixedTuple(-a for a in self.parts)

    def __mul__(self, other) -> "FixedTuple":
        if isinstance(other, int):
            return FixedTuple(a * other for a in self.parts)
        return FixedTuple(a * b for a, b in zip(self.parts, other.parts))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, FixedTuple) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"FixedTuple({self!s})"

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


class Letter:
    """A multiplicative generator: grading, evaluation, divisibility credits."""

    __slots__ = ("name", "grading", "rho", "fix", "credits")

    def __init__(self, name: str, grading: GradingElement, rho: NonequivClass,
                 fix: FixedTuple, credits: Iterable[str] = ()):
        self.name = name
        self.grading = grading
        self.rho = rho
        self.fix = fix
        self.credits = frozenset(credits)

    def __repr__(self):
        return f"Letter({self.name})"


class RewriteRule:
    """lhs-divisible monomials M rewrite to sum_i scalar_i * (M - lhs + delta_i).

    Rules preserve the grading.  A rule with guard="admissible" only fires
    when every resulting monomial is admissible (used for expansions of
    section letters whose negative-credit shapes must stay packaged).
    """

    __slots__ = ("name", "lhs", "rhs", "guard")

    def __init__(self, name: str, lhs: Mono,
                 rhs: tuple[tuple[PointScalar, Mono], ...], guard: str | None = None):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.guard = guard

    def __repr__(self):
        return f"RewriteRule({self.name})"


class Relation:
    """A stated ring relation, kept in its quotable two-sided form."""

    __slots__ = ("name", "lhs", "rhs")

    def __init__(self, name: str, lhs: Terms, rhs: Terms):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return f"Relation({self.name})"


class Inclusion:
    """Restriction data along a fixed-point section of the ambient quadric."""

    __slots__ = ("name", "target_name", "target_q", "omega_images", "zeta_images")

    def __init__(self, name: str, target_name: str, target_q: int | None,
                 omega_images: Mapping[str, GradingElement],
                 zeta_images: Mapping[str, Mono]):
        self.name = name
        self.target_name = target_name
        self.target_q = target_q
        self.omega_images = dict(omega_images)
        self.zeta_images = dict(zeta_images)

    def __repr__(self):
        return f"Inclusion({self.name} -> {self.target_name})"


def _mono_of(order: tuple[str, ...], exps: Mapping[str, int]) -> Mono:
    for name in exps:
        if name not in order:
            raise KeyError(f"unknown letter {name!r}")
    return tuple((name, exps[name]) for name in order if exps.get(name, 0))


def mono_mul(a: Mono, b: Mono, order: tuple[str, ...]) -> Mono:
    out = dict(a)
    for name, exp in b:
        out[name] = out.get(name, 0) + exp
    return _mono_of(order, out)


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for name, exp in m:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


class SpacePresentation:
    __slots__ = (
        "name", "family", "q", "group", "underlying", "fixed_rings",
        "letters", "letter_order", "invertible", "rules", "relations",
        "derived", "units", "lemma_ansatz", "lemma_expected",
        "pushforwards", "pushforward_targets", "pushforward_ansatz",
        "identifications", "inclusions", "annihilator_pair",
        "_table_cache", "_eval_cache", "_grading_cache",
    )

    def __init__(self, name, family, q, group, underlying, fixed_rings,
                 letters, letter_order, invertible=(), rules=(), relations=(),
                 derived=None, units=(), lemma_ansatz=None, lemma_expected=None,
                 pushforwards=None, pushforward_targets=None,
                 pushforward_ansatz=None, identifications=None, inclusions=None,
                 annihilator_pair=None):
        self.name = name
        self.family = family
        self.q = q
        self.group = group
        self.underlying = underlying
        self.fixed_rings = tuple(fixed_rings)
        self.letters = dict(letters)
        self.letter_order = tuple(letter_order)
        self.invertible = frozenset(invertible)
        self.rules = tuple(rules)
        self.relations = tuple(relations)
        self.derived = dict(derived or {})
        self.units = tuple(units)
        self.lemma_ansatz = lemma_ansatz
        self.lemma_expected = lemma_expected
        self.pushforwards = dict(pushforwards or {})
        self.pushforward_targets = dict(pushforward_targets or {})
        self.pushforward_ansatz = pushforward_ansatz
        self.identifications = dict(identifications or {})
        self.inclusions = dict(inclusions or {})
        self.annihilator_pair = annihilator_pair
        self._table_cache = {}
        self._eval_cache = {}
        self._grading_cache = {}

    def __repr__(self):
        return f"SpacePresentation({self.name}, q={self.q})"

    # --- monomials ---

    def mono(self, exps: Mapping[str, int] | None = None, **kw: int) -> Mono:
        merged = dict(exps or {})
        for name, exp in kw.items():
            merged[name] = merged.get(name, 0) + exp
        return _mono_of(self.letter_order, merged)

    def mono_grading(self, m: Mono) -> GradingElement:
        g = self._grading_cache.get(m)
        if g is None:
            g = self.group.zero()
            for name, exp in m:
                g = g + exp * self.letters[name].grading
            self._grading_cache[m] = g
        return g

    def is_admissible(self, m: Mono) -> bool:
        """Negative powers must be invertible or licensed by a present letter."""
        licensed: set[str] = set()
        for name, exp in m:
            if exp > 0:
                licensed |= self.letters[name].credits
        for name, exp in m:
            if exp < 0 and name not in self.invertible and name not in licensed:
                return False
        return True

    # --- evaluation ---

    def eval_mono(self, m: Mono) -> tuple[NonequivClass, FixedTuple]:
        cached = self._eval_cache.get(m)
        if cached is not None:
            return cached
        rho = NonequivClass.unit(self.underlying)
        parts = [NonequivClass.unit(r) for r in self.fixed_rings]
        unit_u = NonequivClass.unit(self.underlying)
        for name, exp in m:
            letter = self.letters[name]
            if exp >= 0:
                rho = rho * letter.rho ** exp
                for i, v in enumerate(letter.fix.parts):
                    parts[i] = parts[i] * v ** exp
            else:
                # Divided classes: only component letters go negative, and
                # their restrictions are units or vanish outright.
                if letter.rho != unit_u:
                    raise ValueError(f"{name} has no invertible underlying restriction")
                for i, v in enumerate(letter.fix.parts):
                    if not v:
                        parts[i] = NonequivClass.zero(self.fixed_rings[i])
                    elif v != NonequivClass.unit(self.fixed_rings[i]):
                        raise ValueError(f"{name} has a non-unit fixed restriction")
        result = (rho, FixedTuple(parts))
        self._eval_cache[m] = result
        return result

    def generator_evaluation(self, name: str) -> tuple[NonequivClass, FixedTuple]:
        letter = self.letters[name]
        return (letter.rho, letter.fix)

    # --- coset tables ---

    def coset_basis(self, key) -> tuple[Mono, ...]:
        if isinstance(key, GradingElement):
            key = key.coset_key()
        key = tuple(key) if isinstance(key, (tuple, list)) else (key,)
        cached = self._table_cache.get(key)
        if cached is not None:
            return cached
        if self.family == "BU1":
            raise ValueError("the classifying space carries no finite coset tables")
        if self.family == "X1q":
            if len(key) != 1:
                raise ValueError(f"expected a 1-component coset key, got {key}")
            monos = [self.mono(s) for s in
                     _x1q_slots(key[0], self.q, has_divq=False)]
        elif self.family in ("BD", "DD", "Gr"):
            if len(key) != 2:
                raise ValueError(f"expected a 2-component coset key, got {key}")
            monos = self._quadric_coset(key)
        else:  # Q22
            if len(key) != 3:
                raise ValueError(f"expected a 3-component coset key, got {key}")
            monos = self._q22_coset(key)
        for m in monos:
            if self.mono_grading(m).coset_key() != key:
                raise AssertionError(f"slot {mono_str(m)} lands off-coset {key}")
            if not self.is_admissible(m):
                raise AssertionError(f"inadmissible slot {mono_str(m)} at {key}")
        table = tuple(monos)
        self._table_cache[key] = table
        return table

    def _quadric_coset(self, key: tuple[int, int]) -> list[Mono]:
        m, n = key
        q = self.q
        depth = q if self.family == "BD" else q - 1
        cw, cxw = ("cl", "cxl") if self.family == "Gr" else ("cw", "cxw")

        def sub(slot: Mapping[str, int], extra: Mapping[str, int]) -> Mono:
            out = dict(extra)
            for name, exp in slot.items():
                if name == "z0":
                    out["z00"] = out.get("z00", 0) + exp
                    out["z11"] = out.get("z11", 0) + exp
                elif name == "cw":
                    out[cw] = out.get(cw, 0) + exp
                elif name == "cxw":
                    out[cxw] = out.get(cxw, 0) + exp
                else:
                    out[name] = out.get(name, 0) + exp
            return self.mono(out)

        if m >= 0:
            first_prefix, k1 = {"z11": m}, n
            x_prefix, section, k2 = {"z00": -m}, "x", n - m + depth
        else:
            first_prefix, k1 = {"z00": -m}, n - m
            x_prefix, section, k2 = {"z11": m}, "xp", n + depth
        monos = [sub(s, first_prefix) for s in _x1q_slots(k1, q, has_divq=True)]
        x_prefix[section] = 1
        monos += [sub(s, x_prefix) for s in _x1q_slots(k2, q, has_divq=True)]
        return monos

    def _q22_coset(self, key: tuple[int, int, int]) -> list[Mono]:
        k1, k2, k3 = key
        m, n = k1, k3 - k2

        def sub(slot: Mapping[str, int], extra: Mapping[str, int]) -> Mono:
            out = dict(extra)
            adds = []
            for name, exp in slot.items():
                if name == "z0":
                    adds += [("z00", exp), ("z11", exp)]
                elif name == "z1":
                    adds += [("z01", exp), ("z10", exp)]
                elif name == "divq":
                    # The fibre slot divisible by the off-diagonal class is
                    # carried by cxw here, which that class divides.
                    adds += [("cxw", exp)]
                else:
                    adds += [(name, exp)]
            for name, exp in adds:
                out[name] = out.get(name, 0) + exp
            return self.mono(out)

        prefix = {"z11": m} if m >= 0 else {"z00": -m}
        if n >= 0:
            prefix["z10"] = n
        else:
            prefix["z01"] = -n
        pk = self.mono_grading(self.mono(prefix)).coset_key()
        kappa_off = k2 - pk[1]
        if k3 - pk[2] != kappa_off:
            raise AssertionError(f"incoherent coset key {key}")
        monos = [sub(s, prefix) for s in _x1q_slots(kappa_off, 1, has_divq=True)]

        x_prefix = {"z00": -m, "z01": -n, "x": 1}
        pk = self.mono_grading(self.mono(x_prefix)).coset_key()
        s_off = k2 - pk[1]
        if k3 - pk[2] != s_off:
            raise AssertionError(f"incoherent coset key {key}")
        monos += [sub(s, x_prefix) for s in _x1q_slots(s_off, 1, has_divq=True)]
        return monos

    # --- serialization ---

    def to_json(self) -> dict:
        return {
            "schema": "quadrics/presentation/1",
            "space": self.name,
            "q": self.q,
            "components": list(self.group.labels),
            "underlying_ring": self.underlying.name,
            "fixed_rings": [r.name for r in self.fixed_rings],
            "letters": [
                {
                    "name": name,
                    "grading": str(self.letters[name].grading),
                    "underlying": str(self.letters[name].rho),
                    "fixed": [str(p) for p in self.letters[name].fix.parts],
                    "licenses": sorted(self.letters[name].credits),
                }
                for name in self.letter_order
            ],
            "invertible": sorted(self.invertible),
            "relations": [r.name for r in self.relations],
            "rewrite_rules": [r.name for r in self.rules],
        }


def _x1q_slots(k: int, q: int, *, has_divq: bool) -> list[dict[str, int]]:
    """Basis slots of one fibre-bundle coset, over names z0 z1 cw cxw divq.

    For q = 0 the bundle is a fixed section and the second component class
    is invertible, so every coset is a single translated slot.  For q >= 1
    there are q + 1 slots; the last one needs the divided class divq as
    soon as k <= -q, which only exists inside an ambient quadric.
    """
    if q == 0:
        return [{"z1": k}] if k else [{}]
    slots = []
    for j in range(q + 1):
        if j == q and k <= -q:
            if not has_divq:
                raise ValueError(
                    f"coset {k} of the q={q} bundle has no finite table "
                    "(its last slot is a divided class of the ambient quadric)")
            slots.append({"z1": k + q, "divq": 1})
            continue
        a = -k - j
        if a >= 0:
            slots.append({"z0": a, "cxw": j})
        elif j == 0:
            slots.append({"z1": k})
        else:
            slots.append({"z0": a + 2, "cw": 1, "cxw": j - 1})
    return slots


# --------------------------------------------------------------------------
# space builders
# --------------------------------------------------------------------------

def _cls(ring: TruncatedRing, *exps: int) -> NonequivClass:
    return NonequivClass.from_exponents(ring, tuple(exps))


def _point_profile(rings, *values) -> FixedTuple:
    """A fixed tuple whose entries are integers or ready-made classes."""
    parts = []
    for ring, v in zip(rings, values):
        if isinstance(v, NonequivClass):
            parts.append(v)
        elif v == 0:
            parts.append(NonequivClass.zero(ring))
        else:
            parts.append(NonequivClass.unit(ring) * v)
    return FixedTuple(parts)


def _terms(order: tuple[str, ...], *pairs) -> Terms:
    return tuple((scalar, _mono_of(order, exps)) for scalar, exps in pairs)


def _build_bu1() -> SpacePresentation:
    # The classifying space itself: evaluation is windowed polynomial
    # algebra (degrees beyond the window are not probed by anything the
    # package computes) and there are no finite coset tables.
    window = 32
    group = GradingGroup(("0", "1"))
    und = TruncatedRing.truncated_poly(window, name="poly-window")
    f0 = TruncatedRing.truncated_poly(window, name="poly-window-0")
    f1 = TruncatedRing.truncated_poly(window, name="poly-window-1")
    rings = (f0, f1)
    order = ("z0", "z1", "cw", "cxw")
    c = _cls(und, 1)
    letters = {
        "z0": Letter("z0", group.omega("0"), NonequivClass.unit(und),
                     _point_profile(rings, 0, 1)),
        "z1": Letter("z1", group.omega("1"), NonequivClass.unit(und),
                     _point_profile(rings, 1, 0)),
        "cw": Letter("cw", group.element(2, omega={"1": 1}), c,
                     _point_profile(rings, _cls(f0, 1), 1), credits=("z0",)),
        "cxw": Letter("cxw", group.element(2, omega={"0": 1}), c,
                      _point_profile(rings, 1, _cls(f1, 1)), credits=("z1",)),
    }
    t = lambda *pairs: _terms(order, *pairs)
    rules = (
        RewriteRule("zeta-merge", _mono_of(order, {"z0": 1, "z1": 1}),
                    t((_XI, {}))),
        RewriteRule("twisted-euler-reduction",
                    _mono_of(order, {"z1": 1, "cxw": 1}),
                    t((_UNIT_MINUS_KAPPA, {"z0": 1, "cw": 1}), (_E2, {}))),
        RewriteRule("diagonal-square-reduction",
                    _mono_of(order, {"z0": 2, "cw": 1}),
                    t((_XI, {"cxw": 1}), (_E2, {"z0": 1}))),
    )
    relations = (
        Relation("zeta-product", t((_ONE, {"z0": 1, "z1": 1})), t((_XI, {}))),
        Relation("twisted-euler", t((_ONE, {"z1": 1, "cxw": 1})),
                 t((_UNIT_MINUS_KAPPA, {"z0": 1, "cw": 1}), (_E2, {}))),
    )
    units = (
        ("unit-0", t((_ONE, {}), (-_K1, {"z0": 1, "cw": 1})),
         t((_UNIT_MINUS_KAPPA, {}), (_K1, {"z1": 1, "cxw": 1}))),
    )
    derived = {
        "eps0": t((_K1, {"z0": 1, "cw": 1})),
        "eps1": t((_K1, {"z1": 1, "cxw": 1})),
    }
    return SpacePresentation(
        "BU1", "BU1", None, group, und, rings, letters, order,
        rules=rules, relations=relations, units=units, derived=derived)


def _build_x1q(q: int) -> SpacePresentation:
    group = GradingGroup(("0", "1"))
    und = TruncatedRing.truncated_poly(q + 1)
    rings = (TruncatedRing.point(),
             TruncatedRing.truncated_poly(q) if q >= 1 else TruncatedRing.zero())
    order = ("z0", "z1", "cw", "cxw") if q >= 1 else ("z0", "z1")
    c = _cls(und, 1)
    letters = {
        "z0": Letter("z0", group.omega("0"), NonequivClass.unit(und),
                     _point_profile(rings, 0, 1)),
        "z1": Letter("z1", group.omega("1"), NonequivClass.unit(und),
                     _point_profile(rings, 1, 0)),
    }
    if q >= 1:
        letters["cw"] = Letter("cw", group.element(2, omega={"1": 1}), c,
                               _point_profile(rings, 0, 1), credits=("z0",))
        letters["cxw"] = Letter(
            "cxw", group.element(2, omega={"0": 1}), c,
            _point_profile(rings, 1, _cls(rings[1], 1)),
            credits=("z1",) if q == 1 else ())
    t = lambda *pairs: _terms(order, *pairs)
    rules = [RewriteRule("zeta-merge", _mono_of(order, {"z0": 1, "z1": 1}),
                         t((_XI, {})))]
    relations = [Relation("zeta-product", t((_ONE, {"z0": 1, "z1": 1})),
                          t((_XI, {})))]
    if q >= 1:
        rules += [
            RewriteRule("fibre-truncation",
                        _mono_of(order, {"cw": 1, "cxw": q}), ()),
            RewriteRule("twisted-euler-reduction",
                        _mono_of(order, {"z1": 1, "cxw": 1}),
                        t((_UNIT_MINUS_KAPPA, {"z0": 1, "cw": 1}), (_E2, {}))),
            RewriteRule("diagonal-square-reduction",
                        _mono_of(order, {"z0": 2, "cw": 1}),
                        t((_XI, {"cxw": 1}), (_E2, {"z0": 1}))),
        ]
        relations += [
            Relation("fibre-truncation", t((_ONE, {"cw": 1, "cxw": q})), ()),
            Relation("twisted-euler", t((_ONE, {"z1": 1, "cxw": 1})),
                     t((_UNIT_MINUS_KAPPA, {"z0": 1, "cw": 1}), (_E2, {}))),
        ]
    return SpacePresentation(
        f"X1q(q={q})", "X1q", q, group, und, rings, letters, order,
        invertible=("z1",) if q == 0 else (),
        rules=rules, relations=relations)


def _quadric_inclusions(q, *, gr=False):
    target = load_presentation("X1q", q)
    tg = target.group
    zero = tg.zero()
    cw, cxw = ("cl", "cxl") if gr else ("cw", "cxw")
    mk = lambda exps: _mono_of(target.letter_order, exps)
    euler = {cw: mk({"cw": 1}), cxw: mk({"cxw": 1})} if q >= 1 else {}
    return {
        "i0": Inclusion("i0", "X1q", q,
                        {"00": tg.omega("0"), "11": zero, "1": tg.omega("1")},
                        dict({"z00": mk({"z0": 1}), "z11": mk({}),
                              "z1": mk({"z1": 1})}, **euler)),
        "i2": Inclusion("i2", "X1q", q,
                        {"00": zero, "11": tg.omega("0"), "1": tg.omega("1")},
                        dict({"z00": mk({}), "z11": mk({"z0": 1}),
                              "z1": mk({"z1": 1})}, **euler)),
    }


def _build_quadric(family: str, q: int) -> SpacePresentation:
    """Common builder for the odd (BD) and even (DD/Gr) ambient quadrics."""
    gr = family == "Gr"
    cw, cxw = ("cl", "cxl") if gr else ("cw", "cxw")
    group = GradingGroup(("00", "11", "1"))
    if family == "BD":
        und = TruncatedRing.odd_quadric(q)
        mid = TruncatedRing.odd_quadric(q - 1)
        depth = q
    else:
        und = TruncatedRing.even_quadric(q)
        mid = TruncatedRing.proj_line_square() if gr else TruncatedRing.even_quadric(q - 1)
        depth = q - 1
    rings = (TruncatedRing.point(), TruncatedRing.point(), mid)
    order = ("z00", "z11", "z1", cw, cxw, "divq", "x", "xp")
    if q == 0:
        order = ("z00", "z11", "z1", cw, cxw, "x", "xp")

    omega_w = group.element(2, omega={"1": 1})
    chi = group.element(2, omega={"00": 1, "11": 1})
    sigma2 = group.element(0, 2)
    c_u, y_u = _cls(und, 1, 0), _cls(und, 0, 1)
    cq_u = _cls(und, q, 0)
    if gr:
        c_m, y_m = _cls(mid, 1, 0) + _cls(mid, 0, 1), _cls(mid, 0, 1)
    else:
        c_m, y_m = _cls(mid, 1, 0), _cls(mid, 0, 1)

    letters = {
        "z00": Letter("z00", group.omega("00"), NonequivClass.unit(und),
                      _point_profile(rings, 0, 1, 1)),
        "z11": Letter("z11", group.omega("11"), NonequivClass.unit(und),
                      _point_profile(rings, 1, 0, 1)),
        "z1": Letter("z1", group.omega("1"), NonequivClass.unit(und),
                     _point_profile(rings, 1, 1, 0)),
        cw: Letter(cw, omega_w, c_u, _point_profile(rings, 0, 0, 1),
                   credits=("z00", "z11", "z1") if q == 0 else ("z00", "z11")),
        cxw: Letter(cxw, chi, c_u, _point_profile(rings, 1, 1, c_m)),
        "x": Letter("x", depth * chi + sigma2, y_u,
                    _point_profile(rings, 0, 1, y_m), credits=("z00",)),
    }
    if q >= 1:
        letters["divq"] = Letter("divq", q * chi, cq_u,
                                 _point_profile(rings, 1, -1, 0), credits=("z1",))
    if family == "BD":
        xp_rho, xp_mid = y_u, y_m
    else:
        xp_rho, xp_mid = y_u - cq_u, y_m
    letters["xp"] = Letter("xp", letters["x"].grading, xp_rho,
                           _point_profile(rings, 1, 0, xp_mid), credits=("z11",))

    t = lambda *pairs: _terms(order, *pairs)
    mono = lambda exps: _mono_of(order, exps)

    rules = [RewriteRule("zeta-merge", mono({"z00": 1, "z11": 1, "z1": 1}),
                         t((_XI, {})))]
    relations = [Relation("zeta-product", t((_ONE, {"z00": 1, "z11": 1, "z1": 1})),
                          t((_XI, {})))]

    if family == "BD":
        if q == 0:
            x_sq = t((_E2, {"x": 1}))
            rules += [
                RewriteRule("section-vanishing", mono({"x": 1, "xp": 1}), ()),
                RewriteRule("x-square", mono({"x": 2}), x_sq),
                RewriteRule("euler-transfer", mono({cw: 1}),
                            t((_TAU, {"z1": 1, "x": 1}))),
                RewriteRule("xp-expansion", mono({"xp": 1}),
                            t((_UNIT_MINUS_KAPPA, {"x": 1}), (_E2, {})),
                            guard="admissible"),
            ]
            relations += [
                Relation("x-square", t((_ONE, {"x": 2})), x_sq),
                Relation("euler-transfer",
                         t((_ONE, {cw: 1}), (-_K1, {cw: 1, "x": 1})),
                         t((_TAU, {"z1": 1, "x": 1}))),
            ]
            derived = {"xp": t((_UNIT_MINUS_KAPPA, {"x": 1}), (_E2, {}))}
            units = (("section-unit", t((_ONE, {}), (-_K1, {"x": 1})),
                      t((_ONE, {}), (-_K1, {"x": 1}))),)
            lemma_ansatz = ((_ONE, mono({"x": 1})), (_E2, mono({})))
        else:
            x_sq_paper = t((_E2, {cxw: q, "x": 1}))
            rules += [
                RewriteRule("section-vanishing", mono({"x": 1, "xp": 1}), ()),
                # x-square, oriented at the divided-class basis slot
                RewriteRule("x-square", mono({"x": 2}),
                            t((-_E2, {"divq": 1, "x": 1}))),
                RewriteRule("euler-times-divided", mono({cw: 1, "divq": 1}),
                            t((_TAU, {"z1": 1, "x": 1}))),
                RewriteRule("chi-euler-to-divided", mono({cxw: q}),
                            t((_ONE, {"divq": 1}), (_K1, {"x": 1}))),
                RewriteRule("twisted-euler-reduction", mono({"z1": 1, cxw: 1}),
                            t((_UNIT_MINUS_KAPPA, {"z00": 1, "z11": 1, cw: 1}),
                              (_E2, {}))),
                RewriteRule("diagonal-square-reduction",
                            mono({"z00": 2, "z11": 2, cw: 1}),
                            t((_XI, {cxw: 1}), (_E2, {"z00": 1, "z11": 1}))),
                RewriteRule("xp-expansion", mono({"xp": 1}),
                            t((_ONE, {"x": 1}), (_E2, {"divq": 1})),
                            guard="admissible"),
            ]
            relations += [
                Relation("x-square", t((_ONE, {"x": 2})), x_sq_paper),
                Relation("euler-times-divided",
                         t((_ONE, {cw: 1, "divq": 1})),
                         t((_TAU, {"z1": 1, "x": 1}))),
                Relation("divided-class", t((_ONE, {"divq": 1})),
                         t((_ONE, {cxw: q}), (-_K1, {"x": 1}))),
            ]
            derived = {"xp": t((_ONE, {"x": 1}), (_E2, {"divq": 1}))}
            units = ()
            lemma_ansatz = ((_ONE, mono({"x": 1})), (_E2, mono({"divq": 1})),
                            (_K1, mono({"z00": 1, "z11": 1, cw: 1, "x": 1})))
        lemma_expected = derived["xp"]
        annihilator_pair = ("x", "xp")
    else:
        # Even quadrics: two disjoint section families, no vanishing pair.
        if q % 2 == 1:
            x_sq = t((_E2, {cxw: q - 1, "x": 1}))
            x_sq_rule = x_sq
        else:
            x_sq = t((_ONE, {"z1": 1, cxw: q, "x": 1}))
            # oriented form: push through the divided class, the twisted
            # unit swallows the correction term exactly
            x_sq_rule = t((_UNIT_MINUS_KAPPA, {"z1": 1, "divq": 1, "x": 1}))
        rules += [
            RewriteRule("x-square", mono({"x": 2}), x_sq_rule),
            RewriteRule("euler-times-divided", mono({cw: 1, "divq": 1}),
                        t((_TAU, {"z00": 1, "z11": 1, cw: 1, "x": 1}))),
            RewriteRule("chi-euler-to-divided", mono({cxw: q}),
                        t((_ONE, {"divq": 1}), (_K1, {cxw: 1, "x": 1}))),
            RewriteRule("twisted-euler-reduction", mono({"z1": 1, cxw: 1}),
                        t((_UNIT_MINUS_KAPPA, {"z00": 1, "z11": 1, cw: 1}),
                          (_E2, {}))),
            RewriteRule("diagonal-square-reduction",
                        mono({"z00": 2, "z11": 2, cw: 1}),
                        t((_XI, {cxw: 1}), (_E2, {"z00": 1, "z11": 1}))),
            RewriteRule("xp-expansion", mono({"xp": 1}),
                        t((_ONE, {"x": 1}),
                          (-_UNIT_MINUS_KAPPA, {"z1": 1, "divq": 1})),
                        guard="admissible"),
        ]
        relations += [
            Relation("x-square", t((_ONE, {"x": 2})), x_sq),
            Relation("euler-times-divided", t((_ONE, {cw: 1, "divq": 1})),
                     t((_TAU, {"z00": 1, "z11": 1, cw: 1, "x": 1}))),
            Relation("divided-class", t((_ONE, {"divq": 1})),
                     t((_ONE, {cxw: q}), (-_K1, {cxw: 1, "x": 1}))),
            Relation("twisted-euler", t((_ONE, {"z1": 1, cxw: 1})),
                     t((_UNIT_MINUS_KAPPA, {"z00": 1, "z11": 1, cw: 1}),
                       (_E2, {}))),
        ]
        derived = {"xp": t((_ONE, {"x": 1}),
                           (-_UNIT_MINUS_KAPPA, {"z1": 1, "divq": 1}))}
        units = ()
        lemma_ansatz = ((_ONE, mono({"x": 1})), (_ONE, mono({"z1": 1, "divq": 1})),
                        (_E2, mono({cxw: q - 1})),
                        (_K1, mono({"z00": 1, "z11": 1, cw: 1, "x": 1})))
        lemma_expected = t((-_UNIT_MINUS_KAPPA, {"x": 1}), (_ONE, {"z1": 1, "divq": 1}))
        annihilator_pair = None

    # Declared restriction targets of the complementary section class: it
    # restricts to 1 on the first fixed family, vanishes on the second, and
    # meets the middle component in the ruling class.
    if family == "BD":
        section_rho = y_u
    else:
        section_rho = cq_u - y_u
    section_target = (section_rho, _point_profile(rings, 1, 0, y_m))

    name = {"BD": f"Q_BD(q={q})", "DD": f"Q_DD(q={q})", "Gr": "Gr222"}[family]
    return SpacePresentation(
        name, family, q, group, und, rings, letters, order,
        invertible=("z1",) if q == 0 else (),
        rules=rules, relations=relations, derived=derived, units=units,
        lemma_ansatz=lemma_ansatz, lemma_expected=lemma_expected,
        pushforward_targets={"section": section_target},
        inclusions=_quadric_inclusions(q, gr=gr),
        annihilator_pair=annihilator_pair)


def _build_q22() -> SpacePresentation:
    group = GradingGroup(("00", "11", "01", "10"))
    und = TruncatedRing.proj_line_square()
    pt = TruncatedRing.point()
    rings = (pt, pt, pt, pt)
    order = ("z00", "z11", "z01", "z10", "cw", "cxw", "x", "x0", "x1", "x2")
    x1_u, x2_u = _cls(und, 1, 0), _cls(und, 0, 1)
    c_u, y_u = x1_u + x2_u, x1_u

    omega_w = group.element(2, omega={"01": 1, "10": 1})
    chi = group.element(2, omega={"00": 1, "11": 1})
    sigma2 = group.element(0, 2)

    letters = {
        "z00": Letter("z00", group.omega("00"), NonequivClass.unit(und),
                      _point_profile(rings, 0, 1, 1, 1)),
        "z11": Letter("z11", group.omega("11"), NonequivClass.unit(und),
                      _point_profile(rings, 1, 0, 1, 1)),
        "z01": Letter("z01", group.omega("01"), NonequivClass.unit(und),
                      _point_profile(rings, 1, 1, 0, 1)),
        "z10": Letter("z10", group.omega("10"), NonequivClass.unit(und),
                      _point_profile(rings, 1, 1, 1, 0)),
        "cw": Letter("cw", omega_w, c_u, _point_profile(rings, 0, 0, 1, 1),
                     credits=("z00", "z11")),
        "cxw": Letter("cxw", chi, c_u, _point_profile(rings, 1, 1, 0, 0),
                      credits=("z01", "z10")),
        "x": Letter("x", sigma2, y_u, _point_profile(rings, 0, 1, 0, 1),
                    credits=("z00", "z01")),
        # the four section classes: x = (i3)!(1) and its three companions
        "x0": Letter("x0", sigma2, x1_u, _point_profile(rings, -1, 0, -1, 0),
                     credits=("z11", "z10")),
        "x1": Letter("x1", sigma2, -x2_u, _point_profile(rings, -1, 0, 0, 1),
                     credits=("z11", "z01")),
        "x2": Letter("x2", sigma2, -x2_u, _point_profile(rings, 0, 1, -1, 0),
                     credits=("z00", "z10")),
    }

    t = lambda *pairs: _terms(order, *pairs)
    mono = lambda exps: _mono_of(order, exps)
    zeta0 = {"z00": 1, "z11": 1}
    zeta1 = {"z01": 1, "z10": 1}

    rules = (
        RewriteRule("zeta-merge",
                    mono({"z00": 1, "z11": 1, "z01": 1, "z10": 1}),
                    t((_XI, {}))),
        RewriteRule("disjoint-sections-03", mono({"x": 1, "x0": 1}), ()),
        RewriteRule("disjoint-sections-21", mono({"x2": 1, "x1": 1}), ()),
        RewriteRule("x-square", mono({"x": 2}), t((_E2, {"x": 1}))),
        RewriteRule("euler-product", mono({"cw": 1, "cxw": 1}),
                    t((_TAU, dict(zeta0, cw=1, x=1)))),
        RewriteRule("twisted-euler-reduction",
                    mono({"z01": 1, "z10": 1, "cxw": 1}),
                    t((_UNIT_MINUS_KAPPA, dict(zeta0, cw=1)), (_E2, {}))),
        RewriteRule("diagonal-square-reduction",
                    mono({"z00": 2, "z11": 2, "cw": 1}),
                    t((_XI, {"cxw": 1}), (_E2, zeta0))),
        RewriteRule("x0-expansion", mono({"x0": 1}),
                    t((_ONE, {"x": 1}), (-_E2, {})), guard="admissible"),
        RewriteRule("x1-expansion", mono({"x1": 1}),
                    t((_ONE, {"x": 1}), (-_ONE, dict(zeta1, cxw=1))),
                    guard="admissible"),
        RewriteRule("x2-expansion", mono({"x2": 1}),
                    t((_ONE, {"x": 1}), (-_ONE, dict(zeta0, cw=1))),
                    guard="admissible"),
    )
    relations = (
        Relation("zeta-product",
                 t((_ONE, {"z00": 1, "z11": 1, "z01": 1, "z10": 1})),
                 t((_XI, {}))),
        Relation("x-square", t((_ONE, {"x": 2})), t((_E2, {"x": 1}))),
        Relation("euler-product", t((_ONE, {"cw": 1, "cxw": 1})),
                 t((_TAU, dict(zeta0, cw=1, x=1)))),
    )
    derived = {
        "x0": t((_ONE, {"x": 1}), (-_E2, {})),
        "x1": t((_ONE, {"x": 1}), (-_ONE, dict(zeta1, cxw=1))),
        "x2": t((_ONE, {"x": 1}), (-_ONE, dict(zeta0, cw=1))),
        "eps": t((_K1, dict(zeta0, cw=1))),
    }
    pushforwards = {
        "i3": t((_ONE, {"x": 1})),
        "i2": t((-_UNIT_MINUS_KAPPA, {"x": 1}), (_ONE, dict(zeta0, cw=1)),
                (-_K1, dict(zeta0, cw=1, x=1))),
        "i1": t((-_ONE, {"x": 1}), (_K1, dict(zeta0, cw=1, x=1)),
                (_ONE, dict(zeta1, cxw=1))),
        "i0": t((_UNIT_MINUS_KAPPA, {"x": 1}), (_E2, {})),
    }
    pushforward_targets = {
        "i3": (y_u, _point_profile(rings, 0, 1, 0, 1)),
        "i2": (c_u - y_u, _point_profile(rings, 0, 1, 1, 0)),
        "i1": (c_u - y_u, _point_profile(rings, 1, 0, 0, 1)),
        "i0": (y_u, _point_profile(rings, 1, 0, 1, 0)),
    }
    pushforward_ansatz = ((_ONE, mono({"x": 1})), (_ONE, mono(zeta0 | {"cw": 1})),
                          (_E2, mono({})), (_K1, mono(zeta0 | {"cw": 1, "x": 1})))
    identifications = {
        "cw1": t((_ONE, {"z00": -1, "z01": -1, "x": 1})),
        "cxw1": t((_UNIT_MINUS_KAPPA, {"z11": -1, "z10": -1, "x0": 1})),
        "cw2": t((-_UNIT_MINUS_KAPPA, {"z00": -1, "z10": -1, "x2": 1}),
                 (-_K1, {"z11": 1, "z10": -1, "cw": 1, "x2": 1})),
        "cxw2": t((-_ONE, {"z11": -1, "z01": -1, "x1": 1}),
                  (_K1, {"z00": 1, "z01": -1, "cw": 1, "x1": 1})),
        "cw_bundle": t((_ONE, {"cw": 1})),
        "cxw_bundle": t((_ONE, {"cxw": 1})),
    }

    x11 = load_presentation("X1q", 1)
    tg = x11.group
    zero = tg.zero()
    mk = lambda exps: _mono_of(x11.letter_order, exps)
    one_img, o0, o1 = mk({}), tg.omega("0"), tg.omega("1")
    inclusions = {
        "i0": Inclusion("i0", "X1q", 1,
                        {"00": o0, "11": zero, "01": o1, "10": zero},
                        {"z00": mk({"z0": 1}), "z11": one_img,
                         "z01": mk({"z1": 1}), "z10": one_img}),
        "i1": Inclusion("i1", "X1q", 1,
                        {"00": o0, "11": zero, "01": zero, "10": o1},
                        {"z00": mk({"z0": 1}), "z11": one_img,
                         "z01": one_img, "z10": mk({"z1": 1})}),
        "i2": Inclusion("i2", "X1q", 1,
                        {"00": zero, "11": o0, "01": o1, "10": zero},
                        {"z00": one_img, "z11": mk({"z0": 1}),
                         "z01": mk({"z1": 1}), "z10": one_img}),
        "i3": Inclusion("i3", "X1q", 1,
                        {"00": zero, "11": o0, "01": zero, "10": o1},
                        {"z00": one_img, "z11": mk({"z0": 1}),
                         "z01": one_img, "z10": mk({"z1": 1})}),
    }
    return SpacePresentation(
        "Q22", "Q22", None, group, und, rings, letters, order,
        rules=rules, relations=relations, derived=derived,
        pushforwards=pushforwards, pushforward_targets=pushforward_targets,
        pushforward_ansatz=pushforward_ansatz,
        identifications=identifications, inclusions=inclusions,
        annihilator_pair=("x", "x0"))


_FAMILIES = {
    "BU1": (None, None),
    "X1q": (0, MAX_Q),
    "Q_BD": (0, MAX_Q),
    "Q_DD": (2, MAX_Q),
    "Gr222": (None, None),
    "Q22": (None, None),
}


@lru_cache(maxsize=None)
def load_presentation(name: str, q: int | None = None) -> SpacePresentation:
    """Construct (and cache) the presentation of one space.

    Q_BD(q) is the quadric of complex dimension 2q + 1, Q_DD(q) the one of
    dimension 2q (q >= 2); Gr222 and Q22 are the q = 2 and q = 1 even
    special cases with their own letters, and X1q/BU1 are the building
    blocks they restrict to.
    """
    if name not in _FAMILIES:
        raise ValueError(f"unknown space {name!r}; expected one of {sorted(_FAMILIES)}")
    lo, hi = _FAMILIES[name]
    if lo is None:
        if q is not None:
            raise ValueError(f"{name} does not take a parameter q")
    else:
        if q is None:
            raise ValueError(f"{name} needs the bundle parameter q")
        if not (lo <= q <= hi):
            raise ValueError(f"q={q} out of range [{lo}, {hi}] for {name}")
    if name == "BU1":
        return _build_bu1()
    if name == "X1q":
        return _build_x1q(q)
    if name == "Q_BD":
        return _build_quadric("BD", q)
    if name == "Q_DD":
        return _build_quadric("DD", q)
    if name == "Gr222":
        return _build_quadric("Gr", 2)
    return _build_q22()


def coset_basis(space: SpacePresentation, key) -> tuple[Mono, ...]:
    return space.coset_basis(key)


def generator_evaluation(space: SpacePresentation, name: str):
    return space.generator_evaluation(name)
