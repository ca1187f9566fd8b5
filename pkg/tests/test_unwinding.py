import numpy as np
import pytest

from blaschke import (
    DepthExhausted,
    InsufficientDepth,
    ZeroSeries,
    as_series,
    h2_norm_sq,
    reconstruct,
    residual_decay_rate,
    unwind,
)
from blaschke.series import add, scale


def test_monomial_terminates_in_one_round():
    e = unwind(as_series([0.0, 0.0, 1.0]), depth=5)
    assert e.terminated
    assert e.depth == 1
    assert e.constants == (1 + 0j,)
    assert np.allclose(e.cumulative_blaschke[0].coeffs, [0, 0, 1])
    assert e.residual_h2 == (0.0,)


def test_constant_terminates_immediately():
    e = unwind(as_series([2.5]), depth=3)
    assert e.terminated
    assert e.constants == (2.5 + 0j,)
    assert e.residual_h2 == (0.0,)


def test_two_round_fixture():
    # z(1+z) sheds z first, then the leftover z in one more round;
    # the boundary root at -1 stays in the analytic factor
    e = unwind(as_series([0.0, 1.0, 1.0]), depth=5)
    assert e.terminated
    assert e.depth == 2
    assert e.constants == (1 + 0j, 1 + 0j)
    assert e.residual_h2 == pytest.approx((1.0, 0.0))
    assert np.allclose(reconstruct(e, 0).coeffs, [0, 1, 0])
    assert np.allclose(reconstruct(e, 1).coeffs, [0, 1, 1])


def test_depth_and_zero_input_validation():
    with pytest.raises(ValueError):
        unwind(as_series([1.0]), depth=0)
    with pytest.raises(ZeroSeries):
        unwind(as_series([0.0, 0.0]), depth=2)


def test_require_termination_raises_with_partial_result():
    f = as_series([1.0, 0.5, 0.25, 0.125])
    with pytest.raises(DepthExhausted) as err:
        unwind(f, depth=2, require_termination=True)
    partial = err.value.expansion
    assert partial.depth == 2
    assert not partial.terminated
    # same run without the flag returns the partial expansion quietly
    quiet = unwind(f, depth=2)
    assert quiet.residual_h2 == partial.residual_h2


def test_residuals_strictly_decrease():
    rng = np.random.default_rng(41)
    f = as_series(rng.standard_normal(9) + 1j * rng.standard_normal(9))
    e = unwind(f, depth=6)
    floor = 1e-20 * e.input_h2
    for a, b in zip(e.residual_h2, e.residual_h2[1:]):
        assert b < a or a <= floor


def test_energy_bookkeeping():
    rng = np.random.default_rng(42)
    f = as_series(rng.standard_normal(9) + 1j * rng.standard_normal(9))
    e = unwind(f, depth=6)
    total = h2_norm_sq(f)
    running = 0.0
    for n in range(e.depth):
        running += abs(e.constants[n]) ** 2
        assert running + e.residual_h2[n] == pytest.approx(total, rel=1e-12)


def test_reconstruction_error_bounded_by_residual_energy():
    # the leftover is the low-order projection of (inner factor times
    # residual), so its energy can only undershoot the residual energy
    rng = np.random.default_rng(43)
    f = as_series(rng.standard_normal(7))
    e = unwind(f, depth=4)
    errors = []
    for n in range(e.depth):
        diff = add(f, scale(reconstruct(e, n), -1.0))
        err = h2_norm_sq(diff)
        errors.append(err)
        assert err <= e.residual_h2[n] * (1 + 1e-12) + 1e-15
    assert errors == sorted(errors, reverse=True)


def test_reconstruction_exact_at_termination():
    e = unwind(as_series([0.25, -1.0, 0.5, 1.0]), depth=64)
    assert e.terminated
    rebuilt = reconstruct(e, e.depth - 1)
    assert np.allclose(rebuilt.padded(4), [0.25, -1.0, 0.5, 1.0], atol=1e-10)


def test_reconstruct_index_bounds():
    e = unwind(as_series([0.0, 1.0]), depth=1)
    with pytest.raises(IndexError):
        reconstruct(e, 1)
    with pytest.raises(IndexError):
        reconstruct(e, -1)


def test_decay_rate_needs_two_rounds():
    e = unwind(as_series([0.0, 1.0]), depth=3)
    assert e.depth == 1
    with pytest.raises(InsufficientDepth):
        residual_decay_rate(e)


def test_decay_rate_ratios():
    rng = np.random.default_rng(44)
    f = as_series(rng.standard_normal(8))
    e = unwind(f, depth=5)
    ratios = residual_decay_rate(e)
    assert all(0 <= r < 1 for r in ratios)
    expected = [
        b / a for a, b in zip(e.residual_h2, e.residual_h2[1:]) if a > 0
    ]
    assert ratios == expected


def test_json_shape():
    e = unwind(as_series([0.0, 1.0, 1.0]), depth=3)
    full = e.to_json_dict()
    assert set(full) == {
        "constants",
        "residual_h2",
        "terminated",
        "input_h2",
        "cumulative_blaschke",
    }
    lean = e.to_json_dict(include_series=False)
    assert "cumulative_blaschke" not in lean


def test_constants_never_zero():
    rng = np.random.default_rng(45)
    for _ in range(5):
        f = as_series(rng.standard_normal(10) + 1j * rng.standard_normal(10))
        e = unwind(f, depth=5)
        assert all(abs(c) > 0 for c in e.constants)
