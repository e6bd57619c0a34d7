from __future__ import annotations

from pathlib import Path

import pytest

import chirpsim
from chirpsim.scenario import ScenarioSpec, parse_scenario, scenario_from_dict

PKG_DIR = Path(chirpsim.__file__).parent
AURASIGHT_PATH = PKG_DIR / "scenarios" / "aurasight.scenario.json"
SCHEMA_PATH = PKG_DIR / "data" / "tweet_v1.schema.json"
RETWEET_FIXTURE_PATH = PKG_DIR / "data" / "v1_retweet_fixture.json"

FULL_LEXICONS = {
    "dredge_words": ["MoonFest", "CometWatch", "SkyParade"],
    "unreliable_domains": ["tinfoil-times.example", "shadow-ledger.example"],
    "news_domains": ["daily-orbit.example", "plaza-wire.example"],
    "factcheck_domains": ["checkpoint.example"],
}


def make_actor(actor_id: str, agent_class: str = "human", **overrides) -> dict:
    actor = {
        "id": actor_id,
        "display_name": actor_id.replace("_", " ").title(),
        "screen_name": actor_id,
        "agent_class": agent_class,
        "active_hours": [[9, 17]],
        "posts_min": 0,
        "posts_max": 3,
    }
    if agent_class in ("announcer_bot", "cyborg") and "period_hours" not in overrides:
        overrides = {"period_hours": 4, **overrides}
    actor.update(overrides)
    return actor


def make_scenario(
    actors: list[dict],
    groups: list[dict] | None = None,
    narratives: list[dict] | None = None,
    events: list[dict] | None = None,
    num_timesteps: int = 24,
    lexicons: dict | None = None,
    name: str = "test-world",
) -> dict:
    if groups is None:
        groups = [{
            "id": "g1",
            "members": [{"actor": a["id"], "role": "full"} for a in actors],
        }]
    if narratives is None:
        narratives = [{
            "id": "n1",
            "topic": "chatter",
            "description": "Neighbors swap notes about the street market. Posts are friendly.",
            "groups": [g["id"] for g in groups],
            "window": [0, num_timesteps - 1],
            "ratio": 1,
            "stance": "neutral",
            "hashtags": ["StreetMarket"],
        }]
    return {
        "name": name,
        "start_time": "2030-07-01T00:00:00+00:00",
        "num_timesteps": num_timesteps,
        "actors": actors,
        "groups": groups,
        "events": events or [],
        "narratives": narratives,
        "lexicons": lexicons if lexicons is not None else dict(FULL_LEXICONS),
    }


def build_spec(*args, **kwargs) -> ScenarioSpec:
    return scenario_from_dict(make_scenario(*args, **kwargs))


@pytest.fixture(scope="session")
def aurasight_spec() -> ScenarioSpec:
    return parse_scenario(AURASIGHT_PATH)
