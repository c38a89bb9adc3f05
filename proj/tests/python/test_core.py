import math
import random

import pytest

import synthroute as sr


def test_spellings_share_a_key():
    assert sr.same_molecule("OCC", "CCO")
    assert sr.canonical_key("c1ccccc1") == sr.canonical_key("c1cc(ccc1)")
    assert sr.tanimoto("CCO", "OCC") == 1.0
    assert 0.0 <= sr.tanimoto("CCO", "c1ccccc1") < 1.0


def test_parse_errors_carry_the_code():
    with pytest.raises(sr.Error) as err:
        sr.canonical_key("C1CC")
    assert err.value.code == "UnmatchedRing"


def test_cumulative_yield_chain():
    tree = sr.RouteTree("CCO")
    a = tree.add(0, "CCO", "CC=O", 0.8, 2.0)
    b = tree.add(a, "CC=O", "CC(=O)O", 0.9, 5.0)
    node = tree.node(b)
    assert node["total_yield"] == pytest.approx(0.72, abs=1e-15)
    assert node["total_duration"] == pytest.approx(7.0)
    assert [s["path"] for s in tree.decision_sequences()] == [[0, a, b]]
    with pytest.raises(sr.Error) as err:
        tree.add(b, "CCO", "CC=O", 0.5, 1.0)
    assert err.value.code == "ReactantMismatch"


def test_case_study_ranking():
    rows = sr.rank([(1, 2, 0.72, 7.0), (2, 1, 0.5, 1.0)], 0.1, 0.3, 0.6)
    assert [r["leaf"] for r in rows] == [1, 2]
    assert rows[0]["weighted_score"] == pytest.approx(0.6)
    assert rows[1]["weighted_score"] == pytest.approx(0.4)
    with pytest.raises(sr.Error) as err:
        sr.rank([(1, 1, 0.5, 1.0)], 0.5, 0.6, 0.2)
    assert err.value.code == "InvalidWeights"


def test_sigma_hits_the_perplexity():
    rng = random.Random(3)
    d = [rng.uniform(0.1, 10.0) for _ in range(60)]
    s = sr.search_sigma(d, 15.0)
    assert s["converged"]
    assert abs(math.log(s["perplexity"]) - math.log(15.0)) < 1e-4


def test_tsne_is_deterministic():
    rng = random.Random(5)
    vecs = [[rng.gauss(0, 1) for _ in range(8)] for _ in range(30)]
    a = sr.tsne(vecs, perplexity=5.0, iterations=300, seed=7)
    b = sr.tsne(vecs, perplexity=5.0, iterations=300, seed=7)
    assert a == b
    assert len(a) == 30


def test_overlap_removal_separates_points():
    rng = random.Random(11)
    pts = [(rng.uniform(0, 20), rng.uniform(0, 20)) for _ in range(50)]
    out, converged, _ = sr.remove_overlap(pts, 2.0, 300, 1)
    assert converged
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            assert math.dist(out[i], out[j]) >= 2.0 - 1e-9


def test_eval_fixture(fixtures):
    m = sr.evaluate_files(str(fixtures / "eval" / "gold.jsonl"),
                          str(fixtures / "eval" / "pred.jsonl"))
    assert (m["tp"], m["fp"], m["fn"]) == (5, 1, 2)
    assert m["precision"] == pytest.approx(0.833, abs=1e-3)
    assert m["recall"] == pytest.approx(0.714, abs=1e-3)
    assert m["f1"] == pytest.approx(0.769, abs=1e-3)
    assert sr.metrics_from_counts(0, 0, 0)["f1"] == 0.0
