"""End-to-end smoke tests for the compiled python module."""

import json
import math

import pytest

import vertexplace as vp


def test_constants():
    assert vp.ETHERNET_MBPS == 100.0
    assert vp.WIFI_MBPS == 25.0
    assert vp.DEFAULT_IMAGE_MB == 100.0


def test_generation_is_seeded():
    a = vp.generate_graph("er", 20, p=0.3, seed=7)
    b = vp.generate_graph("er", 20, p=0.3, seed=7)
    c = vp.generate_graph("er", 20, p=0.3, seed=8)
    assert a == b
    assert a != c
    assert a.n == 20

    tree = vp.generate_graph("ba", 16, m=1, seed=1)
    assert tree.edge_count == 15

    ring = vp.generate_graph("sw", 12, k=2, p=0.0, seed=1)
    assert ring.edge_count == 12  # pure ring lattice when no shortcuts land


def test_generation_argument_errors():
    with pytest.raises(ValueError):
        vp.generate_graph("er", 10)  # missing p
    with pytest.raises(ValueError):
        vp.generate_graph("er", 10, p=1.5)
    with pytest.raises(ValueError):
        vp.generate_graph("nope", 10, p=0.5)


def test_adapter_assignment():
    t = vp.generate_graph("er", 8, p=0.5, seed=3)
    wired = vp.assign_adapters(t, 0.5, seed=9)
    wifi = sum(1 for node in wired.nodes if node.adapter == "wifi")
    assert wifi == 4
    for e in wired.edges:
        assert e.capacity_mbps in (25.0, 100.0)


def test_solvers_produce_valid_covers():
    t = vp.generate_graph("er", 20, p=0.3, seed=11)
    opt = len(vp.brute_force_mvc(t))
    approx = vp.approx_cover(t, seed=1)
    greedy = vp.greedy_cover(t, variant="degree", seed=1)
    genetic = vp.genetic_cover(t, config=vp.GaConfig(12, 6, 0.1), seed=1)
    for cover in (approx, greedy, genetic):
        assert vp.is_valid_cover(t, cover)
        assert len(cover) >= opt
    assert len(approx) <= 2 * opt
    assert approx.producer in ("approx", "greedy_edge_pair")


def test_cost_function_star():
    # Star on five vertices, all ethernet, replica at the hub: one replica
    # plus four unit transfer terms.
    edges = [vp.Edge(0, v, capacity_mbps=100.0) for v in range(1, 5)]
    t = vp.Topology(5, edges)
    hub = vp.CoverSolution([0])
    breakdown = vp.cost_function(t, hub, image_size_mb=100.0)
    assert breakdown.replica_count == 1
    assert breakdown.transfer_term == 4.0
    assert breakdown.cf == 5.0
    assert not breakdown.unreachable
    assert vp.set_cover_cost(t, hub) == 100.0  # one replica at unit storage cost
    assert breakdown.cf >= len(hub)


def test_simulated_distribution_star():
    # Same star but over 25 Mbps links: every leaf pulls at full link rate.
    edges = [vp.Edge(0, v, capacity_mbps=25.0) for v in range(1, 5)]
    t = vp.Topology(5, edges)
    reports = vp.simulate_distribution(t, vp.CoverSolution([0]), image_size_mb=100.0)
    assert [r.dst for r in reports] == [1, 2, 3, 4]
    for r in reports:
        assert r.provider == 0
        assert r.rate_mbps == pytest.approx(25.0)
        assert r.seconds == pytest.approx(4.0)


def test_maxmin_allocation():
    t = vp.Topology(3, [vp.Edge(0, 1, capacity_mbps=10.0), vp.Edge(1, 2, capacity_mbps=20.0)])
    flows = [vp.Flow(0, 1, [0]), vp.Flow(0, 2, [0, 1])]
    alloc = vp.maxmin_allocate(t, flows)
    assert alloc.rates == pytest.approx([5.0, 5.0])
    assert alloc.residuals == pytest.approx([0.0, 15.0])


def test_serialization_round_trips():
    t = vp.assign_adapters(vp.generate_graph("sw", 10, k=2, p=0.5, seed=2), 0.4, seed=5)
    text = vp.serialize_topology(t)
    assert vp.deserialize_topology(text) == t
    assert vp.serialize_topology(vp.deserialize_topology(text)) == text

    cover = vp.greedy_cover(t, variant="degree", seed=4)
    assert vp.deserialize_cover(vp.serialize_cover(cover)) == cover

    with pytest.raises(ValueError):
        vp.deserialize_topology("not json")


def test_training_and_inference():
    path = vp.Topology(3, [vp.Edge(0, 1), vp.Edge(1, 2)])
    cfg = vp.TrainConfig(episodes=30, hidden_dim=4, layers=1, seed=3)
    result = vp.train_on(path, cfg)
    assert len(result.episode_returns) == 30
    assert len(result.cover_sizes) == 30
    again = vp.train_on(path, cfg)
    assert result.params == again.params

    cover = vp.infer_cover(result.params, path)
    assert vp.is_valid_cover(path, cover)
    assert cover.producer == "gnosis"

    text = vp.serialize_model(result.params, cfg)
    params, cfg_back = vp.deserialize_model(text)
    assert params == result.params
    assert cfg_back.episodes == 30
    with pytest.raises(ValueError):
        vp.deserialize_model("{}")


def test_training_config_errors():
    with pytest.raises(ValueError):
        vp.TrainConfig(gamma=1.5)
    with pytest.raises(ValueError):
        vp.TrainConfig(advantage="bogus")


def test_gradient_check():
    t = vp.generate_graph("er", 6, p=0.5, seed=21)
    params = vp.GnosisParams.init(3, 6, 2, seed=2)
    report = vp.gradient_check(params, t, tol=1e-4, fd_step=1e-5)
    assert report.passed
    assert report.max_rel_error_policy < 1e-4
    assert report.max_rel_error_value < 1e-4


def test_benchmark_suite_and_csv():
    cfg = {
        "families": [{"family": "er", "params": [0.3]}],
        "sizes": [8, 12],
        "algorithms": ["approx", "greedy"],
        "repetitions": 2,
        "base_seed": 5,
    }
    result = vp.run_suite(json.dumps(cfg), workers=1)
    assert len(result.records) == 8
    assert all(r.ok() for r in result.records)
    assert all(r.cf >= r.vcs for r in result.records)

    csv = vp.emit_csv(result.records)
    parsed = vp.parse_csv(csv)
    assert vp.emit_csv(parsed) == csv

    svg = vp.emit_plot(result.records, "vcs")
    assert svg.startswith("<svg")
    assert svg.endswith("</svg>\n")

    with pytest.raises(ValueError):
        vp.parse_csv("junk")
    with pytest.raises(ValueError):
        vp.emit_plot(result.records, "speed")

    defaults = json.loads(vp.default_suite_config())
    assert {f["family"] for f in defaults["families"]} == {"er", "sw", "ba"}
    assert defaults["repetitions"] == 10
