"""Validator rule corpus: one positive and one negative fixture per rule,
each checked against its exact expected report."""

from __future__ import annotations

import json

from chirpsim.scenario import scenario_from_dict
from chirpsim.validation import (
    ACTOR_NEVER_POSTS,
    GENRE_SPECIFIC_GROUP_COUNT,
    MULTI_GROUP_REQUIRED,
    NARRATIVE_CONCURRENCY_LOW,
    NARRATIVE_COVERAGE_GAP,
    NEWS_BOT_SCREEN_NAME,
    PERIODIC_MISSING_PERIOD,
    SELF_DECLARED_SCREEN_NAME,
    SYNC_BOT_TOPOLOGY,
    Severity,
    has_errors,
    report_to_json_lines,
    validate,
)

from conftest import build_spec, make_actor, make_scenario


def narratives_for(groups: list[str], window: list[int], count: int = 2) -> list[dict]:
    """Enough concurrent coverage to keep rules (f)/(g) quiet."""
    return [
        {
            "id": f"n_{g}_{i}",
            "topic": "chatter",
            "description": "Members compare notes on the week. Posts stay friendly.",
            "groups": [g],
            "window": window,
            "ratio": 1,
            "stance": "neutral",
            "hashtags": [],
        }
        for g in groups
        for i in range(count)
    ]


def codes(report) -> list[str]:
    return [e.code for e in report]


# --- rule (a): synchronized bot topology ------------------------------------

def _sync_world(sync_role_in_bot_group: str, other_bot_role: str) -> dict:
    actors = [
        make_actor("sync", "synchronized_bot"),
        make_actor("feeder", "content_generation_bot"),
        make_actor("h1"), make_actor("h2"), make_actor("h3"),
    ]
    groups = [
        {"id": "botpen", "members": [
            {"actor": "sync", "role": sync_role_in_bot_group},
            {"actor": "feeder", "role": other_bot_role},
            {"actor": "h1", "role": "full"},
        ]},
        {"id": "humans", "members": [
            {"actor": "h2", "role": "full"},
            {"actor": "h3", "role": "full"},
            {"actor": "sync", "role": "source"},
        ]},
    ]
    return make_scenario(
        actors, groups=groups,
        narratives=narratives_for(["botpen", "humans"], [0, 23]),
    )


def test_rule_a_positive():
    # Bot-pen home (other bot is a source) + source seat in the human group.
    spec = scenario_from_dict(_sync_world("full", "source"))
    assert codes(validate(spec)) == []


def test_rule_a_negative_no_source_only_home():
    spec = scenario_from_dict(_sync_world("full", "full"))
    report = validate(spec)
    assert codes(report) == [SYNC_BOT_TOPOLOGY]
    assert report[0].severity is Severity.ERROR
    assert "sync" in report[0].message


def test_rule_a_negative_full_in_human_majority_group():
    data = _sync_world("full", "source")
    data["groups"][1]["members"][2]["role"] = "full"  # sync full among humans
    report = validate(scenario_from_dict(data))
    assert codes(report) == [SYNC_BOT_TOPOLOGY]
    assert "human-majority" in report[0].message


# --- rule (b): genre-specific bot in exactly one group ----------------------

def _genre_world(n_groups: int) -> dict:
    actors = [make_actor("genre", "genre_specific_bot"), make_actor("h1"), make_actor("h2")]
    groups = [
        {"id": "g1", "members": [
            {"actor": "h1", "role": "full"},
            {"actor": "genre", "role": "full"},
        ]},
        {"id": "g2", "members": [
            {"actor": "h2", "role": "full"},
        ] + ([{"actor": "genre", "role": "full"}] if n_groups == 2 else [])},
    ]
    return make_scenario(actors, groups=groups,
                         narratives=narratives_for(["g1", "g2"], [0, 23]))


def test_rule_b_positive():
    assert codes(validate(scenario_from_dict(_genre_world(1)))) == []


def test_rule_b_negative():
    report = validate(scenario_from_dict(_genre_world(2)))
    assert codes(report) == [GENRE_SPECIFIC_GROUP_COUNT]
    assert report[0].severity is Severity.ERROR
    assert report[0].location == "genre"


# --- rule (c): bridging/conversational bots need >= 2 groups -----------------

def _multi_group_world(cls: str, n_groups: int) -> dict:
    actors = [make_actor("bot", cls), make_actor("h1"), make_actor("h2")]
    groups = [
        {"id": "g1", "members": [
            {"actor": "h1", "role": "full"},
            {"actor": "bot", "role": "full"},
        ]},
        {"id": "g2", "members": [
            {"actor": "h2", "role": "full"},
        ] + ([{"actor": "bot", "role": "full"}] if n_groups == 2 else [])},
    ]
    return make_scenario(actors, groups=groups,
                         narratives=narratives_for(["g1", "g2"], [0, 23]))


def test_rule_c_positive():
    assert codes(validate(scenario_from_dict(_multi_group_world("bridging_bot", 2)))) == []
    assert codes(validate(scenario_from_dict(_multi_group_world("conversational_bot", 2)))) == []


def test_rule_c_negative():
    for cls in ("bridging_bot", "conversational_bot"):
        report = validate(scenario_from_dict(_multi_group_world(cls, 1)))
        assert codes(report) == [MULTI_GROUP_REQUIRED], cls
        assert report[0].severity is Severity.ERROR


# --- rules (d)/(e): naming conventions ---------------------------------------

def test_rule_d_positive():
    spec = build_spec([make_actor("sd", "self_declared_bot", screen_name="plaza_bot")],
                      narratives=narratives_for(["g1"], [0, 23]))
    assert codes(validate(spec)) == []


def test_rule_d_negative():
    spec = build_spec([make_actor("sd", "self_declared_bot", screen_name="plaza_pal")],
                      narratives=narratives_for(["g1"], [0, 23]))
    report = validate(spec)
    assert codes(report) == [SELF_DECLARED_SCREEN_NAME]
    assert report[0].severity is Severity.WARNING


def test_rule_e_positive():
    spec = build_spec([make_actor("nb", "news_bot", screen_name="orbit_news")],
                      narratives=narratives_for(["g1"], [0, 23]))
    assert codes(validate(spec)) == []


def test_rule_e_negative():
    spec = build_spec([make_actor("nb", "news_bot", screen_name="orbit_feed")],
                      narratives=narratives_for(["g1"], [0, 23]))
    report = validate(spec)
    assert codes(report) == [NEWS_BOT_SCREEN_NAME]
    assert report[0].severity is Severity.WARNING


# --- rules (f)/(g): narrative timeline coverage ------------------------------

def test_rule_f_positive():
    spec = build_spec([make_actor("a")], num_timesteps=9,
                      narratives=narratives_for(["g1"], [0, 8]))
    assert codes(validate(spec)) == []


def test_rule_f_negative_gap_listed():
    # A 9:00-17:00 day (9 hourly steps); narratives active 9:00-12:00 only.
    data = make_scenario([make_actor("a")], num_timesteps=9,
                         narratives=narratives_for(["g1"], [0, 2]))
    data["start_time"] = "2030-07-01T09:00:00+00:00"
    report = validate(scenario_from_dict(data))
    assert sorted(codes(report)) == sorted([NARRATIVE_COVERAGE_GAP, NARRATIVE_CONCURRENCY_LOW])
    gap = next(e for e in report if e.code == NARRATIVE_COVERAGE_GAP)
    assert gap.severity is Severity.WARNING
    assert "3-8" in gap.message  # timesteps 12:00 through 17:00

    # Independent oracle: brute-force scan of the (group x timestep) table.
    spec = scenario_from_dict(data)
    expected_gaps = []
    for t in range(spec.num_timesteps):
        active = [n for n in spec.narratives if "g1" in n.groups and n.covers(t)]
        if not active:
            expected_gaps.append(t)
    assert expected_gaps == [3, 4, 5, 6, 7, 8]


def test_rule_g_positive():
    spec = build_spec([make_actor("a")], narratives=narratives_for(["g1"], [0, 23], count=2))
    assert codes(validate(spec)) == []


def test_rule_g_negative_single_narrative():
    spec = build_spec([make_actor("a")], narratives=narratives_for(["g1"], [0, 23], count=1))
    report = validate(spec)
    assert codes(report) == [NARRATIVE_CONCURRENCY_LOW]
    assert report[0].severity is Severity.WARNING
    assert "0-23" in report[0].message


# --- rule (h): periodic classes need period_hours ----------------------------

def test_rule_h_positive():
    spec = build_spec(
        [make_actor("an", "announcer_bot", period_hours=4),
         make_actor("cy", "cyborg", period_hours=6)],
        narratives=narratives_for(["g1"], [0, 23]),
    )
    assert codes(validate(spec)) == []


def test_rule_h_negative():
    actors = [make_actor("an", "announcer_bot"), make_actor("cy", "cyborg")]
    for a in actors:
        a.pop("period_hours", None)
    spec = build_spec(actors, narratives=narratives_for(["g1"], [0, 23]))
    report = validate(spec)
    assert codes(report) == [PERIODIC_MISSING_PERIOD, PERIODIC_MISSING_PERIOD]
    assert {e.location for e in report} == {"an", "cy"}
    assert all(e.severity is Severity.ERROR for e in report)
    assert has_errors(report)


# --- extras -------------------------------------------------------------------

def test_posts_max_zero_warns():
    spec = build_spec([make_actor("a", posts_max=0, posts_min=0)],
                      narratives=narratives_for(["g1"], [0, 23]))
    report = validate(spec)
    assert codes(report) == [ACTOR_NEVER_POSTS]


def test_validate_is_pure_and_order_stable():
    data = _sync_world("full", "full")
    data["actors"].append(make_actor("nb", "news_bot", screen_name="plain"))
    data["groups"][1]["members"].append({"actor": "nb", "role": "full"})
    spec = scenario_from_dict(data)
    first = validate(spec)
    second = validate(spec)
    assert first == second
    assert [e.code for e in first] == sorted(e.code for e in first)


def test_report_exports_as_json_lines():
    spec = build_spec([make_actor("nb", "news_bot", screen_name="plain")],
                      narratives=narratives_for(["g1"], [0, 23]))
    lines = report_to_json_lines(validate(spec)).strip().split("\n")
    entry = json.loads(lines[0])
    assert set(entry) == {"severity", "code", "message", "location"}
    assert entry["code"] == NEWS_BOT_SCREEN_NAME


def test_aurasight_validates_clean(aurasight_spec):
    assert validate(aurasight_spec) == []
