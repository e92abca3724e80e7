"""Shared test helpers."""

from templeflux.riemann import CONTACT2, NONCLASSICAL, RAREFACTION1, SHOCK1
from templeflux.state import flux_f, lambda_w


def assert_fan_valid(fan):
    """Structural invariants every wave fan must satisfy."""
    waves = fan.waves
    if waves:
        assert waves[0].left == fan.far_left
        assert waves[-1].right == fan.far_right
    for a, b in zip(waves, waves[1:]):
        assert a.right == b.left, "states must chain"
        assert a.upper_speed <= b.speed + 1e-12, "speeds must be nondecreasing"
    c_minus, c_plus = fan.c_pair
    nc_count = 0
    for wv in waves:
        hl, wl = wv.left
        hr, wr = wv.right
        if wv.kind == SHOCK1:
            assert wl == wr and hl > hr
            assert wv.speed_hi is None
        elif wv.kind == RAREFACTION1:
            assert wl == wr and hl < hr
            assert wv.speed <= wv.speed_hi
            assert abs(wv.speed - wv.c_mult * lambda_w(fan.laws, hl, wl)) < 1e-12
            assert abs(wv.speed_hi - wv.c_mult * lambda_w(fan.laws, hr, wl)) < 1e-12
        elif wv.kind == CONTACT2:
            # contacts preserve h except when emerging from a vacuum state
            assert hl == hr or hl == wl
            assert wv.speed >= -1e-12
            assert abs(wv.speed - c_plus * fan.laws.velocity.value(hr)) < 1e-12
        elif wv.kind == NONCLASSICAL:
            nc_count += 1
            assert wv.speed == 0.0
            assert abs(c_minus * flux_f(fan.laws, wv.left) - c_plus * flux_f(fan.laws, wv.right)) < 1e-10
        else:
            raise AssertionError(f"unknown wave kind {wv.kind}")
    assert nc_count <= 1
