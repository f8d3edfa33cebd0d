"""Batch lemma campaigns over ratio profiles.

A campaign is the cross product of lemmas and profiles. Each pair yields one
flat record; errors inside a check (e.g. a window too small) are recorded, not
raised, so a long run always produces a complete report.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..core.growth import FastGrowth
from ..errors import ConfigError, OxtobyError
from .lemmas import LEMMAS, check_lemma, replay
from .mutations import mutated

log = logging.getLogger(__name__)

DEFAULT_PROFILES = ({"ratios": [3, 3, 3, 3], "radius": 300},
                    {"ratios": [3, 4, 3], "radius": 200})


@dataclass(frozen=True)
class Profile:
    ratios: tuple
    radius: int


@dataclass(frozen=True)
class CampaignConfig:
    profiles: tuple
    lemmas: tuple
    seed: int = 0
    mutation: Optional[str] = None
    jobs: int = 1

    @classmethod
    def default(cls) -> "CampaignConfig":
        return cls.from_dict({})

    @classmethod
    def from_dict(cls, raw: dict) -> "CampaignConfig":
        """Build from the human config format.

        Keys: ``profiles`` (list of ratio lists or {ratios, radius} maps),
        ``window_radius`` (default radius), ``depth`` (truncate every profile),
        ``lemmas`` ("all" or a list), ``seed``, ``mutation``, ``jobs``.
        """
        if not isinstance(raw, dict):
            raise ConfigError("config must be a mapping")
        known = {"profiles", "window_radius", "depth", "lemmas", "seed", "mutation", "jobs"}
        extra = set(raw) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        radius = raw.get("window_radius")
        depth = raw.get("depth")
        profiles = []
        for entry in raw.get("profiles", DEFAULT_PROFILES):
            if isinstance(entry, dict):
                ratios = entry.get("ratios")
                r = entry.get("radius", radius)
            else:
                ratios, r = entry, radius
            if not isinstance(ratios, (list, tuple)) or not ratios:
                raise ConfigError(f"bad ratio profile {entry!r}")
            ratios = tuple(ratios)
            if depth is not None:
                if not isinstance(depth, int) or not 1 <= depth <= len(ratios):
                    raise ConfigError(f"depth {depth!r} does not fit profile {list(ratios)}")
                ratios = ratios[:depth]
            try:
                FastGrowth(ratios)
            except (TypeError, ValueError) as exc:
                raise ConfigError(str(exc)) from None
            if r is None:
                raise ConfigError(f"no radius for profile {list(ratios)}")
            if not isinstance(r, int) or r < 1:
                raise ConfigError(f"radius must be a positive integer, got {r!r}")
            profiles.append(Profile(ratios, r))

        lemmas = raw.get("lemmas", "all")
        if lemmas == "all":
            lemmas = tuple(LEMMAS)
        elif isinstance(lemmas, (list, tuple)):
            bad = [x for x in lemmas if x not in LEMMAS]
            if bad:
                raise ConfigError(f"unknown lemmas: {bad}")
            lemmas = tuple(lemmas)
        else:
            raise ConfigError("lemmas must be 'all' or a list of identifiers")

        seed = raw.get("seed", 0)
        jobs = raw.get("jobs", 1)
        if not isinstance(seed, int) or not isinstance(jobs, int) or jobs < 1:
            raise ConfigError("seed must be an integer and jobs a positive integer")
        mutation = raw.get("mutation")
        if mutation is not None:
            mutated(mutation, (3,))  # validates the name
        return cls(tuple(profiles), lemmas, seed, mutation, jobs)

    def to_dict(self) -> dict:
        return {
            "profiles": [{"ratios": list(p.ratios), "radius": p.radius} for p in self.profiles],
            "lemmas": list(self.lemmas),
            "seed": self.seed,
            "mutation": self.mutation,
            "jobs": self.jobs,
        }


def engine(ratios, mutation: Optional[str] = None) -> FastGrowth:
    return FastGrowth(tuple(ratios)) if mutation is None else mutated(mutation, ratios)


def _run_one(task) -> dict:
    lemma_id, ratios, radius, mutation, seed = task
    rec = {"lemma": lemma_id, "ratios": list(ratios), "radius": radius,
           "mutation": mutation, "seed": seed, "status": "pass", "instances": 0,
           "skipped": 0, "counterexample": None, "error": None}
    t0 = time.perf_counter()
    try:
        res = check_lemma(lemma_id, engine(ratios, mutation), radius, seed)
    except (OxtobyError, ArithmeticError, IndexError, RuntimeError) as exc:
        # a corrupted engine may break the scan itself; that is reported too
        rec["status"] = "error"
        rec["error"] = f"{type(exc).__name__}: {exc}"
    else:
        rec["instances"] = res.instances
        rec["skipped"] = res.skipped
        if not res.passed:
            rec["status"] = "fail"
            rec["counterexample"] = res.counterexample
    rec["wall_time"] = round(time.perf_counter() - t0, 6)
    return rec


@dataclass
class CampaignReport:
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] == "pass" for r in self.records)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "error": 0}
        for r in self.records:
            out[r["status"]] += 1
        return out

    def exit_code(self) -> int:
        """0 all pass, 1 violations, 2 checks that could not run."""
        c = self.counts()
        if c["error"]:
            return 2
        return 1 if c["fail"] else 0


def run_campaign(cfg: CampaignConfig, sink: Optional[Callable[[dict], None]] = None) -> CampaignReport:
    """Run every (lemma, profile) pair in config order.

    ``sink`` receives each record as soon as it is in order, so reports can
    stream to disk.
    """
    tasks = [(lem, p.ratios, p.radius, cfg.mutation, cfg.seed)
             for p in cfg.profiles for lem in cfg.lemmas]
    report = CampaignReport()
    if not tasks:
        return report
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = pool.map(_run_one, tasks)
            for rec in results:
                _emit(report, rec, sink)
    else:
        for task in tasks:
            _emit(report, _run_one(task), sink)
    return report


def _emit(report, rec, sink):
    log.info("%s %s: %s (%d instances)", rec["lemma"], rec["ratios"], rec["status"],
             rec["instances"])
    if rec["status"] != "pass":
        log.debug("detail: %s", rec["counterexample"] or rec["error"])
    report.records.append(rec)
    if sink is not None:
        sink(rec)


def replay_record(rec: dict) -> Optional[str]:
    """Re-run the counterexample of a fail record in isolation."""
    if rec.get("status") != "fail":
        raise ValueError("only fail records carry a counterexample")
    fg = engine(rec["ratios"], rec.get("mutation"))
    return replay(rec["lemma"], fg, rec["counterexample"]["instance"])
