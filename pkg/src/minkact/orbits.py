"""Orbit analysis: orbit dimension and causal type at a point, cohomogeneity
via seeded exact sampling, symbolic invariant-function certification, and
orbit-space evidence (line vs half-line with singular-orbit data).

Everything here is exact: sample points are rational, ranks come from
Fraction row reduction (never a numerical threshold), and invariance of a
function along the action is certified by polynomial identities, not by
numerical quadrature.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra import AlgebraElement, fundamental_field
from .linalg import CausalClass, causal_type, echelon_basis, frac
from .subalgebra import Subalgebra


class EvidenceFailedError(AssertionError):
    """An orbit-space evidence obligation did not hold."""


class NotInvariantError(ValueError):
    """A candidate invariant fails along the action; carries a witness."""

    def __init__(self, element_index, derivative, point, value):
        self.element_index = element_index
        self.derivative = derivative
        self.point = point
        self.value = value
        super().__init__(
            f"Lie derivative along basis element {element_index} is nonzero "
            f"(value {value} at {point})"
        )


# ---------------------------------------------------------------------------
# Exact polynomials in the four point coordinates
# ---------------------------------------------------------------------------


class Poly:
    """Multivariate polynomial in p1..p4 over the rationals (dict of monomials)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = frac(c)
                if c != 0:
                    self.terms[tuple(mono)] = c

    @staticmethod
    def const(c):
        return Poly({(0, 0, 0, 0): frac(c)})

    @staticmethod
    def var(k):
        mono = [0, 0, 0, 0]
        mono[k] = 1
        return Poly({tuple(mono): Fraction(1)})

    @staticmethod
    def covector(cov):
        """Linear form cov . p."""
        out = Poly()
        for k, c in enumerate(cov):
            if c != 0:
                out = out + Poly.var(k).scale(c)
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return Poly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return Poly(out)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    def scale(self, c):
        c = frac(c)
        return Poly({m: c * v for m, v in self.terms.items()})

    def diff(self, k):
        out = {}
        for mono, c in self.terms.items():
            if mono[k]:
                new = list(mono)
                new[k] -= 1
                out[tuple(new)] = out.get(tuple(new), Fraction(0)) + c * mono[k]
        return Poly(out)

    def eval(self, p):
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for k, e in enumerate(mono):
                for _ in range(e):
                    term *= p[k]
            total += term
        return total

    def nonzero_point(self):
        """A small integer point where the polynomial is nonzero (None if zero)."""
        if self.is_zero():
            return None
        grid = (0, 1, -1, 2, -2, 3, -3)
        for a in grid:
            for b in grid:
                for c in grid:
                    for d in grid:
                        p = (Fraction(a), Fraction(b), Fraction(c), Fraction(d))
                        if self.eval(p) != 0:
                            return p
        return None  # unreachable for the low degrees used here

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ("p1", "p2", "p3", "p4")
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            factors = [f"{names[k]}^{e}" if e > 1 else names[k]
                       for k, e in enumerate(mono) if e]
            body = "*".join(factors)
            parts.append(f"{c}" + (f"*{body}" if body else ""))
        return " + ".join(parts)


def field_polys(elt: AlgebraElement):
    """The four components of elt's Killing field as degree-one polynomials."""
    comps = []
    for m in range(4):
        poly = Poly.const(elt.trans[m])
        for n in range(4):
            if elt.linear[m][n] != 0:
                poly = poly + Poly.var(n).scale(elt.linear[m][n])
        comps.append(poly)
    return comps


def lie_derivative(f: Poly, elt: AlgebraElement) -> Poly:
    comps = field_polys(elt)
    out = Poly()
    for k in range(4):
        out = out + f.diff(k) * comps[k]
    return out


@dataclass(frozen=True)
class InvariantCertificate:
    """Symbolic proof that a polynomial is constant on every orbit."""

    function: Poly
    n_elements: int


def invariant_function_check(h: Subalgebra, f: Poly) -> InvariantCertificate:
    """Certify L_X f = 0 for every basis element X, as a polynomial identity.

    Raises NotInvariantError with an explicit witness point otherwise.
    """
    for idx, elt in enumerate(h.basis):
        deriv = lie_derivative(f, elt)
        if not deriv.is_zero():
            point = deriv.nonzero_point()
            raise NotInvariantError(idx, deriv, point, deriv.eval(point))
    return InvariantCertificate(function=f, n_elements=len(h.basis))


@dataclass(frozen=True)
class ExpInvariant:
    """Invariant of the form F(p) = L(p) * exp(-E(p)/scale) for covectors L, E.

    Not polynomial, but its constancy along the action is still an exact
    polynomial identity: scale*L(v) - L(p)*E(v) = 0 for every generator field
    v.  Exact values are only extracted at points where E vanishes.
    """

    level_cov: tuple
    exp_cov: tuple
    scale: Fraction

    def certify(self, h: Subalgebra):
        level = Poly.covector(self.level_cov)
        for idx, elt in enumerate(h.basis):
            comps = field_polys(elt)
            l_of_v = Poly()
            e_of_v = Poly()
            for k in range(4):
                l_of_v = l_of_v + comps[k].scale(self.level_cov[k])
                e_of_v = e_of_v + comps[k].scale(self.exp_cov[k])
            deriv = l_of_v.scale(self.scale) - level * e_of_v
            if not deriv.is_zero():
                point = deriv.nonzero_point()
                raise NotInvariantError(idx, deriv, point, deriv.eval(point))
        return InvariantCertificate(function=level, n_elements=len(h.basis))

    def value_exact(self, p):
        if sum(c * x for c, x in zip(self.exp_cov, p)) != 0:
            raise ValueError("exact value only available where the exponent vanishes")
        return sum(c * x for c, x in zip(self.level_cov, p))


# ---------------------------------------------------------------------------
# Orbit dimension and cohomogeneity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    point: tuple
    dim: int
    tangent_basis: tuple
    causal: CausalClass


def orbit_dimension(h: Subalgebra, p) -> OrbitReport:
    """Exact rank and causal class of the tangent space of the orbit through p."""
    p = tuple(frac(x) for x in p)
    fields = [fundamental_field(b, p) for b in h.basis]
    tangent = echelon_basis(fields)
    return OrbitReport(
        point=p,
        dim=len(tangent),
        tangent_basis=tuple(tangent),
        causal=causal_type(tangent),
    )


_DENOMINATORS = (3, 4, 5, 7)


def sample_points(seed: int, n: int):
    """n pseudo-random rational points in [-10, 10]^4, reproducible from seed.

    Per-coordinate denominators are distinct small primes-ish so that the
    samples rarely strike thin degenerate loci by accident.
    """
    rng = random.Random(seed)
    points = []
    for _ in range(n):
        points.append(tuple(
            Fraction(rng.randint(-10 * d, 10 * d), d) for d in _DENOMINATORS
        ))
    return points


@dataclass(frozen=True)
class CohomReport:
    max_orbit_dim: int
    cohomogeneity: int
    strata: tuple  # ((point, dim), ...) over every evaluated point

    def observed_dims(self):
        return tuple(sorted({dim for _, dim in self.strata}, reverse=True))


def cohomogeneity(h: Subalgebra, seed: int = 42, samples: int = 32,
                  extra_points=()) -> CohomReport:
    """Max orbit dimension over seeded samples plus declared special points."""
    points = sample_points(seed, samples) + [tuple(frac(x) for x in p) for p in extra_points]
    strata = []
    best = 0
    for p in points:
        rep = orbit_dimension(h, p)
        strata.append((p, rep.dim))
        best = max(best, rep.dim)
    return CohomReport(max_orbit_dim=best, cohomogeneity=4 - best, strata=tuple(strata))


# ---------------------------------------------------------------------------
# Orbit-space evidence
# ---------------------------------------------------------------------------


class OrbitSpaceKind(Enum):
    LINE = "Line"
    HALFLINE = "HalfLine"


@dataclass(frozen=True)
class OrbitSpaceSpec:
    """Declared orbit-space evidence obligations for a catalog entry.

    ``transversal`` is a tuple of exact points meant to hit pairwise distinct
    orbits; ``singular`` (half-line case only) is (dim, CausalKind) together
    with witness points realizing the singular orbit.
    """

    kind: OrbitSpaceKind
    invariant: object  # Poly or ExpInvariant
    transversal: tuple
    singular: tuple | None = None  # (dim, CausalKind)
    singular_witnesses: tuple = ()
    boundary_value: Fraction = Fraction(0)


@dataclass(frozen=True)
class OrbitSpaceReport:
    kind: OrbitSpaceKind
    singular: tuple | None
    notes: tuple


def _invariant_value(spec: OrbitSpaceSpec, p):
    if isinstance(spec.invariant, ExpInvariant):
        return spec.invariant.value_exact(p)
    return spec.invariant.eval(p)


def orbit_space_report(h: Subalgebra, spec: OrbitSpaceSpec, seed: int = 42,
                       samples: int = 32) -> OrbitSpaceReport:
    """Run the evidence obligations for a declared orbit-space type.

    Line: certified invariant, all sampled orbits of dimension 3, invariant
    separating the declared transversal.  Half-line: additionally one singular
    orbit with the declared dimension and causal class sitting at the boundary
    level of the invariant, with every off-boundary sample three-dimensional
    and the invariant one-sided.  Raises EvidenceFailedError on any breach.
    """
    notes = []
    if isinstance(spec.invariant, ExpInvariant):
        spec.invariant.certify(h)
        notes.append("invariant certified (exponential form, exact identity)")
    else:
        invariant_function_check(h, spec.invariant)
        notes.append("invariant certified (polynomial identity)")

    values = [_invariant_value(spec, p) for p in spec.transversal]
    if len(set(values)) != len(values):
        raise EvidenceFailedError("transversal does not separate orbit levels")
    notes.append(f"transversal hits {len(values)} distinct invariant levels")

    sample = sample_points(seed, samples)
    if spec.kind is OrbitSpaceKind.LINE:
        for p in list(sample) + list(spec.transversal):
            rep = orbit_dimension(h, p)
            if rep.dim != 3:
                raise EvidenceFailedError(f"expected a 3-dimensional orbit at {p}, got {rep.dim}")
        notes.append(f"all {len(sample) + len(spec.transversal)} probed orbits are hypersurfaces")
        return OrbitSpaceReport(OrbitSpaceKind.LINE, None, tuple(notes))

    sing_dim, sing_kind = spec.singular
    for w in spec.singular_witnesses:
        rep = orbit_dimension(h, w)
        if rep.dim != sing_dim or rep.causal.kind is not sing_kind:
            raise EvidenceFailedError(
                f"singular witness {w}: got dim {rep.dim} {rep.causal.kind.value}, "
                f"expected dim {sing_dim} {sing_kind.value}"
            )
        if _invariant_value(spec, w) != spec.boundary_value:
            raise EvidenceFailedError("singular witness is not at the boundary level")
    notes.append(f"singular orbit verified: dim {sing_dim}, {sing_kind.value}")

    for p in sample:
        value = _invariant_value(spec, p)
        if value < spec.boundary_value:
            raise EvidenceFailedError("invariant is not one-sided")
        rep = orbit_dimension(h, p)
        expected = sing_dim if value == spec.boundary_value else 3
        if rep.dim != expected:
            raise EvidenceFailedError(
                f"orbit at {p} has dim {rep.dim}, expected {expected}"
            )
    if any(v == spec.boundary_value for v in values):
        notes.append("transversal includes the boundary orbit")
    else:
        raise EvidenceFailedError("transversal misses the boundary level")
    if any(v < spec.boundary_value for v in values):
        raise EvidenceFailedError("transversal crosses the boundary level")
    notes.append(f"off-boundary samples are hypersurfaces ({len(sample)} checked)")
    return OrbitSpaceReport(OrbitSpaceKind.HALFLINE, spec.singular, tuple(notes))
