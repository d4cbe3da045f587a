"""Smoke tests for the python bindings: the main entry points are callable
and reproduce a few pinned values computed independently."""

import math

import pytest

import hetnet_ffr as hf


def bundled_network():
    t1 = hf.db_to_linear(1.0)
    net = hf.NetworkConfig()
    net.tiers = [hf.TierConfig(1.0, 1.0, t1),
                 hf.TierConfig(2.0, 0.1, t1),
                 hf.TierConfig(4.0, 0.01, t1)]
    net.alpha = 4.0
    net.sigma2 = 0.0
    net.delta = 3
    net.beta = 4.0
    return net


def test_conversions_and_eta():
    assert hf.db_to_linear(10.0) == pytest.approx(10.0, abs=1e-12)
    assert hf.linear_to_db(100.0) == pytest.approx(20.0, abs=1e-12)
    assert hf.eta(4.0, 3) == pytest.approx(2.0, abs=1e-12)


def test_kernel_pins():
    assert hf.rho(1.0, 4.0) == pytest.approx(0.785398163397, abs=1e-10)
    assert hf.rho(10.0, 4.0) == pytest.approx(3.99876005056, abs=1e-10)
    assert hf.psi(4.0, 4.0) == pytest.approx(1.57079632679, abs=1e-10)


def test_edge_ccdf_pin():
    net = bundled_network()
    assert hf.strict_ffr_edge_ccdf(1.0, net) == pytest.approx(
        0.736277002798, abs=1e-9)
    assert hf.sfr_edge_ccdf(1.0, net) == pytest.approx(0.341245212642, abs=1e-9)


def test_curve_shape():
    grid = hf.ThresholdGrid(-10.0, 20.0, 1.0)
    assert len(grid) == 31
    assert grid.at_db(0) == pytest.approx(-10.0)
    curve = hf.ccdf_curve("strict_ffr", bundled_network(), grid)
    assert len(curve.values) == 31
    assert curve.values[10] == pytest.approx(0.736277002798, abs=1e-9)
    assert all(w == "" for w in curve.warnings)
    assert all(b <= a + 1e-12 for a, b in zip(curve.values, curve.values[1:]))


def test_simulation_is_deterministic():
    grid = hf.ThresholdGrid(-10.0, 20.0, 10.0)
    cfg = hf.McConfig()
    cfg.drops = 400
    cfg.seed = 9
    net = bundled_network()
    a = hf.simulate_closed("strict_ffr", net, grid, cfg)
    b = hf.simulate_closed("strict_ffr", net, grid, cfg)
    assert a.n_conditioned >= 400  # whole batches, so it may overshoot
    assert a.n_conditioned == b.n_conditioned
    assert list(a.values) == list(b.values)
    assert all(0.0 <= v <= 1.0 for v in a.values)


def test_average_rate_tuple():
    net = hf.NetworkConfig()
    net.tiers = [hf.TierConfig(1.0, 1.0, 1.0)]
    net.alpha = 4.0
    net.delta = 1
    net.beta = 1.0
    nats, bits = hf.average_edge_rate("universal", net)
    assert nats == pytest.approx(1.48898762467, abs=1e-7)
    assert bits == pytest.approx(nats / math.log(2.0), abs=1e-12)


def test_parse_scenario_dict():
    doc = """{
      "scheme": "sfr", "access": "open",
      "tiers": [{"density": 1.0, "power": 1.0, "ffr_threshold_db": 1.0},
                {"density": 4.0, "power": 0.1, "ffr_threshold_db": 5.0}],
      "alpha": 4.0, "noise": 0.0, "delta": 3, "beta": 4.0,
      "open_thresholds": {"t1_db": 1.0, "t2_db": 5.0},
      "grid": {"start_db": -10.0, "stop_db": 20.0, "step_db": 1.0}
    }"""
    sc = hf.parse_scenario(doc)
    assert sc["scheme"] == "sfr"
    assert sc["access"] == "open"
    assert sc["net"].alpha == 4.0
    assert len(sc["grid"]) == 31
    assert sc["open"].t2 == pytest.approx(hf.db_to_linear(5.0))


def test_errors_surface_as_hffr_error():
    with pytest.raises(hf.HffrError):
        hf.rho(1.0, 1.5)  # pathloss exponent below the divergence bound
    with pytest.raises(hf.HffrError):
        hf.parse_scenario("{}")


def test_discrepancy_report_present():
    text = hf.discrepancy_report()
    assert isinstance(text, str)
    assert "implemented" in text
