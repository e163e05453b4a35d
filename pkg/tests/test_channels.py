import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnetcap import ChannelKind, ChannelModel, DomainError, weight
from qnetcap.channels import ETA_MIN, binary_entropy

# 1 - H2(0.1) at 40 digits (mpmath)
DEPHASING_01 = 0.5310044064107187787


def h2_oracle(p):
    mpmath.mp.dps = 40
    p = mpmath.mpf(p)
    if p in (0, 1):
        return 0.0
    return float(-p * mpmath.log(p, 2) - (1 - p) * mpmath.log(1 - p, 2))


def test_pure_loss_half():
    assert weight(ChannelModel.pure_loss(0.5)) == 1.0


def test_pure_loss_point_nine():
    assert abs(weight(ChannelModel.pure_loss(0.9)) - (-math.log2(0.1))) < 1e-12


def test_erasure_full_is_zero():
    assert weight(ChannelModel.erasure(1.0)) == 0.0


def test_dephasing_oracle():
    assert weight(ChannelModel.dephasing(0.1)) == pytest.approx(DEPHASING_01, abs=1e-14)


def test_custom_passthrough():
    assert weight(ChannelModel.custom(2.5)) == 2.5


def test_amplifier_gain_two():
    assert weight(ChannelModel.amplifier(2.0)) == 1.0


@pytest.mark.parametrize(
    "kind,param",
    [("pure_loss", 1.0), ("pure_loss", 0.0), ("pure_loss", 1.2), ("erasure", -0.1), ("erasure", 1.5),
     ("dephasing", 2.0), ("amplifier", 1.0), ("amplifier", 0.5), ("custom", -1.0),
     ("custom", math.inf), ("pure_loss", math.nan)],
)
def test_out_of_domain(kind, param):
    with pytest.raises(DomainError) as exc:
        ChannelModel(kind, param)
    assert exc.value.field == "param"


def test_unknown_kind():
    with pytest.raises(DomainError) as exc:
        ChannelModel("thermal", 0.5)
    assert exc.value.field == "kind"


def test_distillable_flags():
    assert ChannelModel.pure_loss(0.3).distillable
    assert ChannelModel(ChannelKind.ERASURE, 0.3, distillable=False).distillable
    assert not ChannelModel.custom(1.0).distillable
    assert ChannelModel.custom(1.0, distillable=True).distillable


def test_eta_cap_reported():
    near = ChannelModel.pure_loss(1.0 - 1e-15)
    assert near.capped and not ChannelModel.pure_loss(0.5).capped
    assert math.isfinite(near.weight)
    assert near.weight == pytest.approx(-math.log2(ETA_MIN), rel=1e-6)


@given(st.floats(0.0, 1.0))
def test_binary_entropy_matches_oracle(p):
    assert binary_entropy(p) == pytest.approx(h2_oracle(p), abs=1e-12)


def test_monotonicity_sweeps():
    etas = np.linspace(1e-6, 1 - 1e-6, 400)
    pl = [weight(ChannelModel.pure_loss(e)) for e in etas]
    assert all(b > a for a, b in zip(pl, pl[1:]))
    ps = np.linspace(0, 1, 401)
    er = [weight(ChannelModel.erasure(p)) for p in ps]
    assert all(b <= a for a, b in zip(er, er[1:]))
    dp = [weight(ChannelModel.dephasing(p)) for p in ps if p <= 0.5]
    assert all(b <= a + 1e-15 for a, b in zip(dp, dp[1:]))


@given(
    st.one_of(
        st.tuples(st.just("pure_loss"), st.floats(1e-300, 1.0, exclude_max=True)),
        st.tuples(st.just("erasure"), st.floats(0.0, 1.0)),
        st.tuples(st.just("dephasing"), st.floats(0.0, 1.0)),
        st.tuples(st.just("amplifier"), st.floats(1.0, 1e12, exclude_min=True)),
        st.tuples(st.just("custom"), st.floats(0.0, 1e9)),
    )
)
def test_weight_finite_nonnegative(kp):
    w = weight(ChannelModel(*kp))
    assert math.isfinite(w) and w >= 0.0
