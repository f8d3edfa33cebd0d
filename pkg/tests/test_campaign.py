import pytest

from oxtoby.errors import ConfigError
from oxtoby.harness.campaign import CampaignConfig, run_campaign


def _strip(records):
    return [{k: v for k, v in r.items() if k != "wall_time"} for r in records]


def test_default_campaign_passes():
    report = run_campaign(CampaignConfig.default())
    assert len(report.records) == 26
    assert report.ok and report.exit_code() == 0


def test_empty_lemma_list():
    report = run_campaign(CampaignConfig.from_dict({"lemmas": []}))
    assert report.records == [] and report.exit_code() == 0


def test_small_radius_recorded():
    cfg = CampaignConfig.from_dict({"profiles": [[3, 3, 3, 3]], "window_radius": 50,
                                    "lemmas": ["L6.2", "T6.1fwd"]})
    report = run_campaign(cfg)
    assert [r["status"] for r in report.records] == ["error", "error"]
    assert all("BoundsTooSmall" in r["error"] for r in report.records)
    assert report.exit_code() == 2


def test_deterministic():
    cfg = CampaignConfig.from_dict({"profiles": [[3, 4, 3]], "window_radius": 200, "seed": 3})
    assert _strip(run_campaign(cfg).records) == _strip(run_campaign(cfg).records)


def test_parallel_matches_serial():
    raw = {"profiles": [[3, 3, 3, 3], [3, 4, 3]], "window_radius": 300,
           "lemmas": ["L5.4", "L6.5"], "mutation": "drop-top-level"}
    serial = run_campaign(CampaignConfig.from_dict(raw))
    parallel = run_campaign(CampaignConfig.from_dict({**raw, "jobs": 2}))
    assert _strip(serial.records) == _strip(parallel.records)


def test_sink_streams_in_order():
    seen = []
    cfg = CampaignConfig.from_dict({"lemmas": ["L3.4", "L6.3"]})
    report = run_campaign(cfg, seen.append)
    assert seen == report.records
    assert [(r["lemma"], r["ratios"]) for r in seen] == [
        ("L3.4", [3, 3, 3, 3]), ("L6.3", [3, 3, 3, 3]), ("L3.4", [3, 4, 3]), ("L6.3", [3, 4, 3])]


def test_depth_truncates_profiles():
    cfg = CampaignConfig.from_dict({"profiles": [[3, 3, 3, 3, 3]], "depth": 3, "window_radius": 27})
    assert cfg.profiles[0].ratios == (3, 3, 3)
    assert run_campaign(cfg).ok


@pytest.mark.parametrize("raw", [
    {"profiles": [[3, 2]], "window_radius": 10},
    {"profiles": [[3, 3]]},
    {"lemmas": ["L0"]},
    {"lemmas": "some"},
    {"mutation": "nope"},
    {"jobs": 0},
    {"depth": 9},
    {"window": 3},
    [1, 2],
])
def test_bad_configs(raw):
    with pytest.raises(ConfigError):
        CampaignConfig.from_dict(raw)


def test_config_round_trip():
    cfg = CampaignConfig.from_dict({"lemmas": ["L5.5"], "seed": 4})
    assert CampaignConfig.from_dict(cfg.to_dict()) == cfg
