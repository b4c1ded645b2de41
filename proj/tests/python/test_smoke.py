import math

import pytest

import pgsynth


def test_arbiter_realizable():
    r = pgsynth.synthesize("G !(g1 & g2) & G(r1 -> F g1) & G(r2 -> F g2)",
                           ["r1", "r2"], ["g1", "g2"])
    assert r.realizable
    assert r.verified
    assert r.n_states == 3
    assert r.aag.startswith("aag ")
    assert "mealy states 3" in r.mealy
    assert r.combination in ("raw+unstructured", "raw+structured", "reduced+unstructured")


def test_unrealizable():
    r = pgsynth.synthesize("G(g <-> X r)", ["r"], ["g"])
    assert not r.realizable
    assert r.mealy == "" and r.aag == ""


def test_exploration_strategies_agree():
    verdicts = {s: pgsynth.synthesize("G(r -> F g)", ["r"], ["g"], exploration=s).realizable
                for s in ("bfs", "bfs+", "pq", "pq+")}
    assert all(verdicts.values())


def test_parse_error():
    with pytest.raises(pgsynth.ParseError):
        pgsynth.synthesize("G (g &", [], ["g"])


def test_bad_exploration():
    with pytest.raises(ValueError):
        pgsynth.synthesize("G g", [], ["g"], exploration="dfs")


def test_quality():
    assert pgsynth.quality(9, 9) == pytest.approx(2.0)
    assert pgsynth.quality(99, 9) == pytest.approx(1.0)
    assert math.isclose(pgsynth.quality(4, 9), 2 - math.log10(5 / 10))
    assert pgsynth.quality(10**9, 0) == 0.0
