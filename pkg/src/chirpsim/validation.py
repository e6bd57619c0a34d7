"""Placement and timeline rules checked before a scenario is simulated.

Errors block simulation, warnings do not. ``validate`` is pure and
order-stable: the same spec always yields the identical report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .behavior import AgentClass, PERIODIC_CLASSES
from .scenario import Role, ScenarioSpec

# Rule codes, in report order.
SYNC_BOT_TOPOLOGY = "sync_bot_topology"                # (a) error
GENRE_SPECIFIC_GROUP_COUNT = "genre_specific_group_count"  # (b) error
MULTI_GROUP_REQUIRED = "multi_group_required"          # (c) error
SELF_DECLARED_SCREEN_NAME = "self_declared_screen_name"    # (d) warning
NEWS_BOT_SCREEN_NAME = "news_bot_screen_name"          # (e) warning
NARRATIVE_COVERAGE_GAP = "narrative_coverage_gap"      # (f) warning
NARRATIVE_CONCURRENCY_LOW = "narrative_concurrency_low"    # (g) warning
PERIODIC_MISSING_PERIOD = "periodic_missing_period"    # (h) error
ACTOR_NEVER_POSTS = "actor_never_posts"                # extra warning (posts_max 0)


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ValidationEntry:
    severity: Severity
    code: str
    message: str
    location: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "severity": self.severity.value,
                "code": self.code,
                "message": self.message,
                "location": self.location,
            },
            ensure_ascii=False,
        )


def has_errors(report: list[ValidationEntry]) -> bool:
    return any(e.severity is Severity.ERROR for e in report)


def report_to_json_lines(report: list[ValidationEntry]) -> str:
    return "".join(entry.to_json() + "\n" for entry in report)


def _ranges(timesteps: list[int]) -> str:
    """Compress sorted timesteps into 'a-b, c' spans."""
    spans: list[str] = []
    start = prev = timesteps[0]
    for t in timesteps[1:]:
        if t == prev + 1:
            prev = t
            continue
        spans.append(f"{start}-{prev}" if start != prev else str(start))
        start = prev = t
    spans.append(f"{start}-{prev}" if start != prev else str(start))
    return ", ".join(spans)


def _human_majority(spec: ScenarioSpec, group_id: str) -> bool:
    members = spec.group(group_id).members
    humans = sum(
        1
        for m in members
        if spec.actor(m.actor_id).agent_class in (AgentClass.HUMAN, AgentClass.ORGANIZATION)
    )
    return humans * 2 > len(members)


def validate(spec: ScenarioSpec) -> list[ValidationEntry]:
    entries: list[ValidationEntry] = []
    add = entries.append

    for actor in spec.actors:
        memberships = spec.memberships_of(actor.id)
        cls = actor.agent_class

        # (a) Synchronized bots: one home group with other bots to draw from,
        # all of them source-role, and source-only placement wherever humans
        # are the majority.
        if cls is AgentClass.SYNCHRONIZED_BOT:
            has_home = False
            for group_id, _ in memberships:
                others = [
                    m for m in spec.group(group_id).members if m.actor_id != actor.id
                ]
                other_bots = [m for m in others if spec.actor(m.actor_id).is_bot]
                if other_bots and all(m.role is Role.SOURCE for m in other_bots):
                    has_home = True
                    break
            if not has_home:
                add(ValidationEntry(
                    Severity.ERROR,
                    SYNC_BOT_TOPOLOGY,
                    f"synchronized bot '{actor.id}' has no group where all other "
                    "bot members are source-role",
                    actor.id,
                ))
            for group_id, role in memberships:
                if role is not Role.SOURCE and _human_majority(spec, group_id):
                    add(ValidationEntry(
                        Severity.ERROR,
                        SYNC_BOT_TOPOLOGY,
                        f"synchronized bot '{actor.id}' must be source-role in "
                        f"human-majority group '{group_id}'",
                        actor.id,
                    ))

        # (b) Genre-specific bots sit in exactly one group.
        if cls is AgentClass.GENRE_SPECIFIC_BOT and len(memberships) != 1:
            add(ValidationEntry(
                Severity.ERROR,
                GENRE_SPECIFIC_GROUP_COUNT,
                f"genre-specific bot '{actor.id}' is in {len(memberships)} groups, "
                "expected exactly 1",
                actor.id,
            ))

        # (c) Bridging and conversational bots need at least two groups.
        if cls in (AgentClass.BRIDGING_BOT, AgentClass.CONVERSATIONAL_BOT):
            if len(memberships) < 2:
                add(ValidationEntry(
                    Severity.ERROR,
                    MULTI_GROUP_REQUIRED,
                    f"{cls.value} '{actor.id}' is in {len(memberships)} group(s), "
                    "needs at least 2",
                    actor.id,
                ))

        # (d)/(e) Naming conventions for self-identifying classes.
        if cls is AgentClass.SELF_DECLARED_BOT and "bot" not in actor.screen_name.lower():
            add(ValidationEntry(
                Severity.WARNING,
                SELF_DECLARED_SCREEN_NAME,
                f"self-declared bot '{actor.id}' screen name "
                f"'{actor.screen_name}' does not contain 'bot'",
                actor.id,
            ))
        if cls is AgentClass.NEWS_BOT and "news" not in actor.screen_name.lower():
            add(ValidationEntry(
                Severity.WARNING,
                NEWS_BOT_SCREEN_NAME,
                f"news bot '{actor.id}' screen name '{actor.screen_name}' "
                "does not contain 'news'",
                actor.id,
            ))

        # (h) Periodic classes need their period.
        if cls in PERIODIC_CLASSES and actor.period_hours is None:
            add(ValidationEntry(
                Severity.ERROR,
                PERIODIC_MISSING_PERIOD,
                f"{cls.value} '{actor.id}' has no period_hours",
                actor.id,
            ))

        if actor.posts_max == 0:
            add(ValidationEntry(
                Severity.WARNING,
                ACTOR_NEVER_POSTS,
                f"actor '{actor.id}' has posts_max 0 and can never act",
                actor.id,
            ))

    # (f)/(g) Narrative timeline coverage per group.
    for group in spec.groups:
        active_count = [0] * spec.num_timesteps
        for narrative in spec.narratives:
            if group.id in narrative.groups:
                for t in range(narrative.window[0], narrative.window[1] + 1):
                    active_count[t] += 1
        gaps = [t for t, c in enumerate(active_count) if c == 0]
        thin = [t for t, c in enumerate(active_count) if c < 2]
        if gaps:
            add(ValidationEntry(
                Severity.WARNING,
                NARRATIVE_COVERAGE_GAP,
                f"group '{group.id}' has no active narrative at timesteps "
                f"{_ranges(gaps)}; the engine will fall back to the global pool",
                group.id,
            ))
        if thin:
            add(ValidationEntry(
                Severity.WARNING,
                NARRATIVE_CONCURRENCY_LOW,
                f"group '{group.id}' has fewer than 2 active narratives at "
                f"timesteps {_ranges(thin)}",
                group.id,
            ))

    entries.sort(key=lambda e: (e.code, e.location, e.message))
    return entries
