import math
import os

import pytest

import wsnsim


def test_radio_model():
    assert wsnsim.tx_cost(2000, 100.0) == pytest.approx(2.1e-3, rel=1e-15)
    assert wsnsim.rx_cost(2000) == pytest.approx(1.0e-4, rel=1e-15)
    assert wsnsim.tx_cost(2000, 0.0) == wsnsim.rx_cost(2000)
    assert wsnsim.tx_delay(2000) == pytest.approx(0.2)
    radio = wsnsim.RadioParams()
    radio.e_agg = 5e-9
    assert wsnsim.aggregate_cost(2000, 5, radio) == pytest.approx(5e-5)


def test_gates_and_classes():
    assert wsnsim.leach_threshold(0.05, 19) == 1.0
    assert wsnsim.leach_threshold(0.05, 3, in_g=False) == 0.0
    assert not wsnsim.teen_should_transmit(56, 55)
    assert wsnsim.apteen_should_transmit(56, 55, rounds_since_tx=5)
    assert [wsnsim.priya_classify(v) for v in (20, 30, 45, 60, 75)] == [
        "sleep", "normal", "normal", "normal", "critical"]
    assert wsnsim.tdma_slots([9, 3, 7]) == [(3, 0), (7, 1), (9, 2)]


def test_simulate_is_deterministic_and_conserves_energy():
    cfg = "nodes = 30\npriya.clusters = 3\nrounds = 200\n"
    a = wsnsim.simulate(cfg, "priya", seed=4)
    b = wsnsim.simulate(cfg, "priya", seed=4)
    assert a == b
    drop = a["initial_total"] - a["remaining_total"]
    assert math.isclose(a["ledger_total"], drop, rel_tol=1e-9)
    assert len(a["series"]["alive"]) == 200


def test_sleeping_field_sends_nothing():
    cfg = "sensing.lo = 0\nsensing.hi = 25\nrounds = 50\n"
    r = wsnsim.simulate(cfg, "priya", seed=2)
    assert r["summary"]["total_bs_packets"] == 0
    assert r["data_tx_joules"] == 0.0


def test_config_errors():
    with pytest.raises(wsnsim.ConfigError, match="unsupported protocol"):
        wsnsim.simulate("", "pegasis")
    with pytest.raises(ValueError):
        wsnsim.resolve_config("priya.range_lo = 70")


def test_run_experiment(tmp_path):
    cfg = "nodes = 20\npriya.clusters = 2\nrounds = 30\n"
    written = wsnsim.run_experiment(cfg, str(tmp_path), ["priya", "leach"], [1, 2])
    assert sorted(written) == sorted(
        ["deaths.csv", "energy.csv", "packets.csv", "node_energy.csv", "summary.csv", "resolved.cfg"])
    with open(os.path.join(tmp_path, "summary.csv")) as f:
        rows = f.read().splitlines()
    assert len(rows) == 1 + 4
