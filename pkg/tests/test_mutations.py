"""Every mutation is caught, every lemma catches something, and failures replay."""

import pytest

from oxtoby.errors import ConfigError
from oxtoby.harness.campaign import CampaignConfig, replay_record, run_campaign
from oxtoby.harness.lemmas import LEMMAS, check_lemma
from oxtoby.harness.mutations import MUTATIONS, mutated

PROFILES = [{"ratios": [3, 3, 3, 3], "radius": 300}, {"ratios": [3, 4, 3], "radius": 200}]


def _fails(name):
    cfg = CampaignConfig.from_dict({"profiles": PROFILES, "mutation": name})
    return [r for r in run_campaign(cfg).records if r["status"] == "fail"]


@pytest.fixture(scope="module")
def matrix():
    return {name: _fails(name) for name in MUTATIONS}


@pytest.mark.parametrize("name", list(MUTATIONS))
def test_mutation_detected(matrix, name):
    assert matrix[name], f"{name} escaped every lemma"


@pytest.mark.parametrize("name", list(MUTATIONS))
def test_counterexamples_replay(matrix, name):
    for rec in matrix[name]:
        assert replay_record(rec) == rec["counterexample"]["violation"]


@pytest.mark.parametrize("lemma_id", list(LEMMAS))
def test_each_lemma_is_sensitive(matrix, lemma_id):
    killers = [n for n, recs in matrix.items() if any(r["lemma"] == lemma_id for r in recs)]
    assert killers, f"no mutation makes {lemma_id} fail"


def test_pinned_level_hits_block_at_zero():
    fg = mutated("pin-level-4", (3, 3, 3, 3))
    res = check_lemma("L6.2", fg, 300)
    inst = res.counterexample["instance"]
    assert inst["n0"] <= 0 <= inst["n1"]


def test_unknown_mutation():
    with pytest.raises(ConfigError):
        mutated("nope", (3, 3))

