"""Properness certificates: fixed points, escaping sequences, recovery maps."""

import math
from fractions import Fraction

import numpy as np
import pytest

from minkact.algebra import standard_generator
from minkact.catalog import catalog
from minkact.linalg import vec4
from minkact.properness import (
    RecoveryMismatchError,
    WitnessFailedError,
    WitnessSequence,
    check_witness,
    compact_rotation_certificate,
    fixed_point_nonproper_certificate,
    fixed_point_witness,
    nilpotent_pair_witness,
    null_family_element,
    parameter_recovery_check,
    recover_null_family,
    recover_rotation_translation,
    recover_spatial_rotation,
    recover_translation,
    rotation_between,
)
from minkact.group import act
from minkact.subalgebra import OneParamType, require_closed

YK1 = standard_generator("Yk1")
YK2 = standard_generator("Yk2")
YK3 = standard_generator("Yk3")
YA = standard_generator("Ya")
YN1 = standard_generator("Yn1")
E1 = standard_generator("e1")
E2 = standard_generator("e2")
E3 = standard_generator("e3")
E4 = standard_generator("e4")


# ---------------------------------------------------------------------------
# fixed-point certificates
# ---------------------------------------------------------------------------


def test_boost_with_spacelike_translations_has_noncompact_stabilizer():
    cert = fixed_point_nonproper_certificate(require_closed((YK1, YA)))
    assert cert is not None
    assert cert.coefficients == (0, 1)
    assert cert.kind is OneParamType.HYPERBOLIC
    assert cert.point == (0, 0, 0, 0)


def test_null_rotation_fixed_point_found():
    cert = fixed_point_nonproper_certificate(require_closed((YN1, E2)))
    assert cert is not None
    assert cert.kind is OneParamType.PARABOLIC


def test_no_certificate_for_translations():
    assert fixed_point_nonproper_certificate(require_closed((E1, E2, E3))) is None


def test_compact_rotation_certificate():
    assert compact_rotation_certificate(require_closed((YK1, YK2, YK3)))
    assert not compact_rotation_certificate(require_closed((YK1, E3, E4)))
    assert not compact_rotation_certificate(require_closed((YA,)))


PROPER = [e for e in catalog() if e.proper]
NONPROPER = [e for e in catalog()
             if not e.proper and e.entry_id != "T3:nilpotent-pair"]


@pytest.mark.parametrize("entry", PROPER, ids=lambda e: e.entry_id)
def test_proper_entries_have_no_fixed_point_certificate(entry):
    h = require_closed(entry.build(entry.defaults[0]))
    assert fixed_point_nonproper_certificate(h) is None


@pytest.mark.parametrize("entry", NONPROPER, ids=lambda e: e.entry_id)
def test_nonproper_entries_have_fixed_point_certificate(entry):
    h = require_closed(entry.build(entry.defaults[0]))
    assert fixed_point_nonproper_certificate(h) is not None


# ---------------------------------------------------------------------------
# escaping-sequence witnesses
# ---------------------------------------------------------------------------


def test_hyperbolic_fixed_point_witness_checks_out():
    report = check_witness(fixed_point_witness(YA, (0, 0, 0, 0),
                                               OneParamType.HYPERBOLIC))
    assert report.steps == (1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)
    assert report.group_norms[-1] > 10 * report.group_norms[0]
    assert report.point_gap == 0.0 and report.image_gap == 0.0


def test_parabolic_fixed_point_witness_checks_out():
    report = check_witness(fixed_point_witness(YN1, (0, 0, 0, 0),
                                               OneParamType.PARABOLIC))
    assert report.image_gap < 1e-6


def test_nilpotent_pair_witness_checks_out():
    report = check_witness(nilpotent_pair_witness(Fraction(1), Fraction(3)))
    assert report.group_norms[-1] > 10 * report.group_norms[0]
    assert report.image_gap < 1e-6


def test_bounded_sequence_is_rejected():
    fake = WitnessSequence(
        description="identity forever",
        group_at=lambda n: (np.eye(4), np.zeros(4)),
        point_at=lambda n: np.zeros(4),
    )
    with pytest.raises(WitnessFailedError, match="do not diverge"):
        check_witness(fake)


def test_wandering_base_point_is_rejected():
    fake = WitnessSequence(
        description="diverging group, non-Cauchy points",
        group_at=lambda n: (float(n) * np.eye(4), np.zeros(4)),
        point_at=lambda n: np.array([math.sin(float(n)), 0.0, 0.0, 0.0]),
    )
    with pytest.raises(WitnessFailedError, match="not Cauchy"):
        check_witness(fake)


# ---------------------------------------------------------------------------
# recovery maps
# ---------------------------------------------------------------------------


def test_recover_translation_inside_span():
    span = (vec4(1, 0, 0, 0), vec4(0, 1, 0, 0))
    g = recover_translation(vec4(3, 4, 5, 6), vec4(1, 7, 5, 6), span)
    assert act(g, vec4(3, 4, 5, 6)) == vec4(1, 7, 5, 6)


def test_recover_translation_rejects_escaping_displacement():
    span = (vec4(0, 1, 0, 0),)
    with pytest.raises(RecoveryMismatchError, match="escapes"):
        recover_translation(vec4(0, 0, 0, 0), vec4(1, 0, 0, 0), span)


def test_recover_rotation_translation_roundtrip():
    from minkact.group import Isometry, rational_rotation_12
    rot = rational_rotation_12(Fraction(2, 5))
    g = Isometry(rot.V, vec4(0, 0, Fraction(7, 3), -2))
    x = vec4(1, 2, 3, 5)
    y = act(g, x)
    got = recover_rotation_translation(x, y)
    assert act(got, x) == y


def test_recover_rotation_half_turn_is_out_of_chart():
    with pytest.raises(RecoveryMismatchError, match="half-turn"):
        recover_rotation_translation(vec4(1, 0, 0, 0), vec4(-1, 0, 0, 0))


def test_rotation_between_exact():
    x3 = (Fraction(1), Fraction(2), Fraction(2))
    y3 = (Fraction(3), Fraction(0), Fraction(0))
    v = rotation_between(x3, y3)
    assert tuple(sum(v[i][j] * x3[j] for j in range(3)) for i in range(3)) == y3
    # orthogonality: V V^T = I
    for i in range(3):
        for j in range(3):
            dot = sum(v[i][k] * v[j][k] for k in range(3))
            assert dot == (1 if i == j else 0)


def test_rotation_between_requires_equal_norms():
    with pytest.raises(ValueError, match="norms differ"):
        rotation_between((1, 0, 0), (2, 0, 0))


def test_recover_spatial_rotation_respects_time_constraint():
    with pytest.raises(RecoveryMismatchError, match="time coordinates"):
        recover_spatial_rotation(vec4(1, 0, 0, 0), vec4(1, 0, 0, 5), allow_e4=False)


def test_null_family_recovery_is_exact():
    mu = Fraction(2)
    g = null_family_element(Fraction(1, 3), Fraction(-4), Fraction(5, 7), mu)
    x = vec4(1, 2, 3, 5)
    y = act(g, x)
    assert recover_null_family(x, y, mu) == (Fraction(1, 3), Fraction(-4), Fraction(5, 7))


@pytest.mark.parametrize("kind,params", [
    ("translation", {"span": (vec4(1, 0, 0, 0), vec4(0, 1, 0, 0), vec4(0, 0, 1, 0))}),
    ("translation", {"span": (vec4(0, 1, 0, 0), vec4(0, 0, 1, -1))}),
    ("so2", {}),
    ("so3", {}),
    ("rotation-only", {}),
    ("boost", {"lam": Fraction(1, 2)}),
    ("null", {"mu": Fraction(2)}),
])
def test_parameter_recovery_families(kind, params):
    report = parameter_recovery_check(kind, params, trials=40)
    assert report.trials == 40


def test_parameter_recovery_unknown_kind():
    with pytest.raises(ValueError, match="unknown recovery kind"):
        parameter_recovery_check("spiral", {}, trials=1)
