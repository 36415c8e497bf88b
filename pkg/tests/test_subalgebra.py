"""Subalgebras: closure decisions, translation normal form, invariants."""

from fractions import Fraction

import pytest

from minkact.algebra import (
    GENERATOR_MATRICES,
    GENERATOR_ORDER,
    AlgebraElement,
    adjoint,
    coords10,
    standard_generator,
)
from minkact.group import rational_rotation_12, translation
from minkact.linalg import CausalKind, DependentBasisError, vec4
from minkact.subalgebra import (
    NotClosed,
    OneParamType,
    closure_check,
    invariants,
    normalize_translations,
    one_param_type,
    require_closed,
    split_parts,
)

YK1 = standard_generator("Yk1")
YK2 = standard_generator("Yk2")
YK3 = standard_generator("Yk3")
YA = standard_generator("Ya")
YN1 = standard_generator("Yn1")
YN2 = standard_generator("Yn2")
E1 = standard_generator("e1")
E2 = standard_generator("e2")
E3 = standard_generator("e3")
E4 = standard_generator("e4")
ELL = E3 - E4


def test_rotation_and_one_null_rotation_do_not_close():
    verdict = closure_check((YK1, YN1))
    assert isinstance(verdict, NotClosed)
    assert (verdict.i, verdict.j) == (0, 1)
    # [Yk1, Yn1] = -Yn2, which is outside the span
    assert verdict.witness == YN2.scaled(-1)


def test_rotation_with_both_null_rotations_closes():
    h = require_closed((YK1, YN1, YN2))
    assert h.dim == 3
    assert h.contains(YN2.scaled(Fraction(-7, 3)))


def test_closure_check_rejects_dependent_basis():
    with pytest.raises(DependentBasisError):
        closure_check((YK1, YK1.scaled(2)))


def test_structure_constants_cached_for_closed_spans():
    h = require_closed((YA, YN1, YN2))
    assert h.structure[(0, 1)] is not None
    # [Ya, Yn1] = -Yn1: coefficient vector over the basis
    assert list(h.structure[(0, 1)]) == [0, -1, 0]


def test_split_parts_separates_translations():
    h = require_closed((YK1, E3, E4))
    translations, projection = split_parts(h)
    assert len(translations) == 2 and len(projection) == 1
    assert projection[0] == GENERATOR_MATRICES["Yk1"]


# ---------------------------------------------------------------------------
# one-parameter types
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name,expected", [
    ("Yk1", OneParamType.ELLIPTIC),
    ("Yk2", OneParamType.ELLIPTIC),
    ("Yk3", OneParamType.ELLIPTIC),
    ("Ya", OneParamType.HYPERBOLIC),
    ("Yn1", OneParamType.PARABOLIC),
    ("Yn2", OneParamType.PARABOLIC),
])
def test_one_param_types_of_generators(name, expected):
    assert one_param_type(GENERATOR_MATRICES[name]) is expected


def test_one_param_type_of_mixture_is_mixed():
    mix = YK1.scaled(2) + YA.scaled(3)
    assert one_param_type(mix.linear) is OneParamType.MIXED


def test_one_param_type_zero():
    zero = tuple((Fraction(0),) * 4 for _ in range(4))
    assert one_param_type(zero) is OneParamType.ZERO


def test_one_param_type_is_conjugation_invariant():
    g = rational_rotation_12(Fraction(1, 5))
    for name in GENERATOR_ORDER:
        x = standard_generator(name)
        assert one_param_type(adjoint(g, x).linear) is one_param_type(x.linear)


# ---------------------------------------------------------------------------
# translation normal form
# ---------------------------------------------------------------------------


def test_normalize_fully_decorated_lorentz_algebra():
    """All six generators with their forced translation decorations move to a
    common fixed point; the normalizing vector is determined by the four
    family parameters."""
    u1, u2, v1, x3 = 1, 2, 3, 5
    decorations = (
        (u1, u2, 0, 0), (v1, 0, u2, 0), (0, v1, -u1, 0),
        (0, 0, x3, v1), (x3 + v1, 0, u2, -u2), (0, x3 + v1, -u1, u1),
    )
    basis = tuple(
        AlgebraElement(GENERATOR_MATRICES[n], vec4(*d))
        for n, d in zip(GENERATOR_ORDER, decorations)
    )
    p, hn = normalize_translations(require_closed(basis))
    assert p == vec4(u2, -u1, -v1, -x3)
    assert all(b.trans == vec4(0, 0, 0, 0) for b in hn.basis)


def test_normalize_keeps_essential_decorations():
    # the drifting boost: the e1 component cannot be translated away
    lam = Fraction(5, 2)
    h = require_closed((YA + E1.scaled(lam), E2, ELL))
    p, hn = normalize_translations(h)
    assert p == vec4(0, 0, 0, 0)
    assert hn.basis[0].trans == vec4(lam, 0, 0, 0)


def test_normalize_undoes_translation_conjugation():
    lam = Fraction(5, 2)
    h = require_closed((YA + E1.scaled(lam), E2, ELL))
    q = vec4(-10, Fraction(39, 4), 5, Fraction(-60, 7))
    conj = require_closed(tuple(adjoint(translation(q), b) for b in h.basis))
    p, hn = normalize_translations(conj)
    # only the boost plane of q is visible to this family
    assert p == vec4(0, 0, q[2], q[3])
    assert hn.basis[0].trans == vec4(lam, 0, 0, 0)
    assert hn.span_rows() == h.span_rows()


def test_normalize_decorated_null_rotations():
    lam, mu = Fraction(1), Fraction(3)
    basis = (YN1 + E2.scaled(lam), YN2 + E1.scaled(lam) + E2.scaled(mu), ELL)
    h = require_closed(basis)
    q = vec4(2, -3, 1, 4)
    conj = require_closed(tuple(adjoint(translation(q), b) for b in h.basis))
    p, hn = normalize_translations(conj)
    assert p == vec4(q[0], q[1], q[2] + q[3], 0)
    assert hn.span_rows() == h.span_rows()


def test_normalization_residuals_are_conjugation_invariant():
    """The surviving decorations after normalization must not depend on where
    the group sits in space — they are the family's true parameters."""
    basis = (YN1 + E4.scaled(3), E2, ELL)
    h = require_closed(basis)
    _, hn0 = normalize_translations(h)
    for q in (vec4(1, 2, 3, 5), vec4(0, -7, Fraction(1, 3), 0)):
        conj = require_closed(tuple(adjoint(translation(q), b) for b in h.basis))
        _, hn = normalize_translations(conj)
        assert hn.span_rows() == hn0.span_rows()


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_invariants_of_boost_with_spacelike_plane():
    inv = invariants(require_closed((YA, E1, E2)))
    assert inv.dim == 3
    assert inv.translation_dim == 2
    assert inv.translation_causal.kind is CausalKind.SPACELIKE
    assert inv.projection_dim == 1
    assert inv.one_param_profile == (OneParamType.HYPERBOLIC,)


def test_invariants_profile_is_sorted_and_conjugation_invariant():
    h = require_closed((YK1, YA, YN1, YN2))
    inv = invariants(h)
    assert inv.one_param_profile == (
        OneParamType.ELLIPTIC, OneParamType.HYPERBOLIC,
        OneParamType.PARABOLIC, OneParamType.PARABOLIC)
    g = translation(vec4(1, 2, 3, 5))
    conj = require_closed(tuple(adjoint(g, b) for b in h.basis))
    assert invariants(conj) == inv


def test_invariants_profile_reads_projection_not_basis():
    # basis mixes Yk1 into a hyperbolic element; the projection span is what counts
    h = require_closed((YK1.scaled(2), YA + YK1, E3 - E4))
    inv = invariants(h)
    assert inv.one_param_profile == (OneParamType.ELLIPTIC, OneParamType.HYPERBOLIC)


def test_describe_is_stable():
    inv = invariants(require_closed((YK1, E3, E4)))
    assert inv.describe() == ("dim 3; translations 2 (Lorentzian (1,1,0)); "
                              "linear 1 [Elliptic]")
