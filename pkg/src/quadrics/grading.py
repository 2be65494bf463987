"""Gradings for cohomology indexed on representations of the fundamental groupoid.

The grading group of a space with fixed-set components labelled c_1, ..., c_r
is the free abelian group on 1, sigma and dual-line classes W_{c_1}, ...,
W_{c_r}, modulo the single relation

    W_{c_1} + ... + W_{c_r} = 2*sigma - 2.

Every element has a unique canonical form in which the last label's W does
not appear; all arithmetic works on that form.  Restriction to the fixed
component c sends W_c to 2*sigma - 2 and every other W to 0, which gives the
fixed-degree bookkeeping, and restriction along an equivariant map is linear
over 1 and sigma with a table of W-images.

The two-generator subgroup relevant to coset decompositions is the image of
the grading group of the base projective space ("the BU(1) part"), spanned by
1, sigma and the sum of the diagonal W's.  Quadric gradings split uniquely as
integer offsets along one (or, for the split four-component quadric, two)
chosen W's plus a BU(1) part; coset_offsets/from_offsets implement that
splitting and are inverse to each other.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class GradingGroup:
    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if len(labels) < 2:
            raise ValueError("a grading group needs at least two component labels")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate component labels: {labels}")
        self.labels = labels

    def element(self, one: int = 0, sigma: int = 0,
                omega: Mapping[str, int] | None = None) -> "GradingElement":
        """Canonicalize integer coordinates, eliminating the last label's W."""
        w = [0] * len(self.labels)
        if omega:
            for label, coeff in omega.items():
                w[self.labels.index(label)] += coeff
        last = w[-1]
        if last:
            # W_last = 2*sigma - 2 - sum of the other W's
            one -= 2 * last
            sigma += 2 * last
            w = [c - last for c in w]
            w[-1] = 0
        return GradingElement(self, one, sigma, tuple(w))

    def zero(self) -> "GradingElement":
        return self.element()

    def omega(self, label: str) -> "GradingElement":
        return self.element(omega={label: 1})

    def coset_labels(self) -> tuple[str, ...]:
        """The W's whose integer offsets index cosets of the BU(1) part."""
        if len(self.labels) == 2:
            return ()
        if len(self.labels) == 3:
            return (self.labels[1],)
        return (self.labels[1], self.labels[3])

    def __eq__(self, other) -> bool:
        return isinstance(other, GradingGroup) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GradingGroup({list(self.labels)!r})"


class GradingElement:
    __slots__ = ("group", "one", "sigma", "omega")

    def __init__(self, group: GradingGroup, one: int, sigma: int,
                 omega: tuple[int, ...]):
        if len(omega) != len(group.labels) or omega[-1] != 0:
            raise ValueError("non-canonical coordinates; build elements via GradingGroup.element")
        self.group = group
        self.one = one
        self.sigma = sigma
        self.omega = omega

    # --- abelian group structure ---

    def _check(self, other: "GradingElement"):
        if self.group != other.group:
            raise ValueError("gradings live in different groups")

    def __add__(self, other: "GradingElement") -> "GradingElement":
        self._check(other)
        return GradingElement(self.group, self.one + other.one, self.sigma + other.sigma,
                              tuple(a + b for a, b in zip(self.omega, other.omega)))

    def __sub__(self, other: "GradingElement") -> "GradingElement":
        self._check(other)
        return GradingElement(self.group, self.one - other.one, self.sigma - other.sigma,
                              tuple(a - b for a, b in zip(self.omega, other.omega)))

    def __neg__(self) -> "GradingElement":
        return GradingElement(self.group, -self.one, -self.sigma,
                              tuple(-a for a in self.omega))

    def __mul__(self, n: int) -> "GradingElement":
        return GradingElement(self.group, n * self.one, n * self.sigma,
                              tuple(n * a for a in self.omega))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.one or self.sigma or any(self.omega))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradingElement) and self.group == other.group
                and self.one == other.one and self.sigma == other.sigma
                and self.omega == other.omega)

    def __hash__(self):
        return hash((self.group, self.one, self.sigma, self.omega))

    # --- the maps the engine consumes ---

    def underlying_pair(self) -> tuple[int, int]:
        """RO(C2) degree (1-part, sigma-part); W's restrict to 0 underlying... """
        return (self.one, self.sigma)

    def underlying_dim(self) -> int:
        """Total degree of the underlying nonequivariant restriction."""
        return self.one + self.sigma

    def fixed_degree(self, label: str) -> int:
        """Degree of the restriction to the fixed component `label`."""
        return self.one - 2 * self.omega[self.group.labels.index(label)]

    def fixed_profile(self) -> tuple[tuple[str, int], ...]:
        return tuple((label, self.fixed_degree(label)) for label in self.group.labels)

    def coset_key(self) -> tuple[int, ...]:
        """W-offsets relative to the first label; constant on BU(1)-part cosets."""
        w0 = self.omega[0]
        return tuple(w - w0 for w in self.omega[1:])

    def is_bu1(self) -> bool:
        """Whether the grading lies in the image of the base projective space."""
        offsets, _ = self.coset_offsets()
        return not any(offsets)

    def coset_offsets(self) -> tuple[tuple[int, ...], "GradingElement"]:
        """Split as integer offsets along the coset W's plus a BU(1) part."""
        reps = self.group.coset_labels()
        beta = self
        offsets = []
        if len(self.group.labels) == 3:
            m = self.omega[1] - self.omega[0]
            offsets = [m]
            beta = self - m * self.group.omega(reps[0])
        elif len(self.group.labels) == 4:
            m = self.omega[1] - self.omega[0]
            n = -self.omega[2]
            offsets = [m, n]
            beta = self - m * self.group.omega(reps[0]) - n * self.group.omega(reps[1])
        return tuple(offsets), beta

    def to_ro_c2(self) -> tuple[int, int]:
        """The (1, sigma) pair, defined only when no W appears."""
        if any(self.omega):
            raise ValueError(f"{self} is not an RO(C2) grading")
        return (self.one, self.sigma)

    # --- rendering ---

    def __str__(self):
        parts = []

        def term(coeff, symbol):
            if coeff == 0:
                return
            if symbol == "":
                parts.append(f"{coeff:+d}")
            elif coeff == 1:
                parts.append(f"+{symbol}")
            elif coeff == -1:
                parts.append(f"-{symbol}")
            else:
                parts.append(f"{coeff:+d}{symbol}")

        term(self.one, "")
        term(self.sigma, "s")
        for label, w in zip(self.group.labels, self.omega):
            term(w, f"W{label}")
        if not parts:
            return "0"
        head = parts[0]
        head = head[1:] if head.startswith("+") else head
        return " ".join([head] + [f"{p[0]} {p[1:]}" for p in parts[1:]])

    def __repr__(self):
        return f"<{self}>"


def canonicalize(group: GradingGroup, one: int = 0, sigma: int = 0,
                 omega: Mapping[str, int] | None = None) -> GradingElement:
    """Canonical form of one*1 + sigma*s + sum omega[c]*W_c."""
    return group.element(one, sigma, omega)


def fixed_profile(alpha: GradingElement) -> tuple[tuple[str, int], ...]:
    """Degree of the restriction to each fixed component, by label."""
    return alpha.fixed_profile()


def restrict_along(alpha: GradingElement, images: Mapping[str, GradingElement],
                   target: GradingGroup) -> GradingElement:
    """Push a grading through an equivariant map with the given W-images.

    The map is linear, fixes 1 and sigma, and sends W_c to images[c]; the
    images must be given for every label that can carry a nonzero canonical
    coordinate (all but the last).
    """
    result = target.element(alpha.one, alpha.sigma)
    for label, w in zip(alpha.group.labels, alpha.omega):
        if w:
            img = images.get(label)
            if img is None:
                raise KeyError(f"no W-image for component {label!r}")
            if img.group != target:
                raise ValueError(f"W-image for {label!r} lies in the wrong group")
            result = result + w * img
    return result


def from_offsets(group: GradingGroup, offsets: tuple[int, ...],
                 base: GradingElement) -> GradingElement:
    """Inverse of GradingElement.coset_offsets."""
    reps = group.coset_labels()
    if len(offsets) != len(reps):
        raise ValueError(f"expected {len(reps)} offsets for {group}")
    result = base
    for off, label in zip(offsets, reps):
        result = result + off * group.omega(label)
    return result
