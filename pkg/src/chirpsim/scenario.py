"""Scenario file model: the declarative world a run is driven by.

A scenario is a UTF-8 JSON document with top-level keys
``name, start_time, num_timesteps, actors[], groups[], events[], narratives[],
lexicons``. One timestep is one hour. Windows are inclusive pairs of timestep
indices; active hours are inclusive local-clock pairs (``[9, 17]`` covers the
9:00 through 17:00 hours) and may wrap past midnight.

Parsing materializes every cross-reference and rejects structural defects
(dangling ids, unknown classes, inverted bounds). Placement *rules* — which
groups a bot class may sit in, coverage of the narrative timeline — live in
:mod:`chirpsim.validation` and return a report instead of raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Iterable

from .behavior import AgentClass, Operator, PERIODIC_CLASSES, is_bot


class ScenarioError(Exception):
    """Raised for malformed or inconsistent scenario files."""


class Role(str, Enum):
    FULL = "full"
    LEADER = "leader"
    SOURCE = "source"


class Stance(str, Enum):
    PRO = "pro"
    ANTI = "anti"
    NEUTRAL = "neutral"


DEFAULT_EXCITEMENT = 2.0
DEFAULT_BEND_MANEUVERS = ("bridge", "back", "explain", "enhance")
DEFAULT_RANDO_LOCATIONS = (
    ("Ethal", 0.35),
    ("Odria", 0.35),
    ("Nareth", 0.15),
    ("Federation of Severni", 0.15),
)
DEFAULT_RANDO_NAMES = (
    "Aino Verlat", "Bohdan Kresnik", "Casimira Holt", "Davor Lindqvist",
    "Elzbieta Maron", "Fyodor Aalten", "Grietje Olsavik", "Hanna Petrulis",
    "Ivo Skandera", "Jarek Nyland", "Katriina Volen", "Lubomir Estvane",
    "Maret Siluda", "Nikola Fenström", "Oksana Reval", "Pavel Juritsen",
    "Ruta Kalmaris", "Stellan Drovak", "Tuuli Anseri", "Ulrik Bovaren",
    "Vesna Lohtaja", "Wim Zoravec", "Yelena Marsk", "Zoran Ettiva",
    "Ilona Vastrel", "Matis Orkanen", "Sanna Previk", "Teodor Vilkas",
)


@dataclass(frozen=True)
class Identity:
    age: int | None = None
    gender: str | None = None
    location: str | None = None
    nationality: str | None = None


@dataclass(frozen=True)
class ActorSpec:
    id: str
    display_name: str
    screen_name: str
    agent_class: AgentClass
    active_hours: tuple[tuple[int, int], ...]
    posts_min: int
    posts_max: int
    period_hours: int | None = None
    tone: tuple[str, ...] = ()
    identity: Identity | None = None
    operated_by: Operator = Operator.HUMAN
    # Optional per-day override of active_hours, keyed by simulated day index.
    active_hours_by_day: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()

    def windows_for_day(self, day: int) -> tuple[tuple[int, int], ...]:
        for d, windows in self.active_hours_by_day:
            if d == day:
                return windows
        return self.active_hours

    @property
    def is_bot(self) -> bool:
        return is_bot(self.agent_class, self.operated_by)


@dataclass(frozen=True)
class Membership:
    actor_id: str
    role: Role


@dataclass(frozen=True)
class GroupSpec:
    id: str
    members: tuple[Membership, ...]


@dataclass(frozen=True)
class EventSpec:
    id: str
    label: str
    window: tuple[int, int]
    excitement: float = DEFAULT_EXCITEMENT

    def covers(self, timestep: int) -> bool:
        return self.window[0] <= timestep <= self.window[1]


@dataclass(frozen=True)
class NarrativeSpec:
    id: str
    topic: str
    description: str
    groups: tuple[str, ...]
    window: tuple[int, int]
    ratio: int
    stance: Stance
    hashtags: tuple[str, ...] = ()

    def covers(self, timestep: int) -> bool:
        return self.window[0] <= timestep <= self.window[1]


@dataclass(frozen=True)
class Lexicons:
    dredge_words: tuple[str, ...] = ()
    unreliable_domains: tuple[str, ...] = ()
    news_domains: tuple[str, ...] = ()
    factcheck_domains: tuple[str, ...] = ()
    bend_maneuvers: tuple[str, ...] = DEFAULT_BEND_MANEUVERS
    rando_names: tuple[str, ...] = DEFAULT_RANDO_NAMES
    rando_locations: tuple[tuple[str, float], ...] = DEFAULT_RANDO_LOCATIONS


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    start_time: datetime
    num_timesteps: int
    actors: tuple[ActorSpec, ...]
    groups: tuple[GroupSpec, ...]
    events: tuple[EventSpec, ...]
    narratives: tuple[NarrativeSpec, ...]
    lexicons: Lexicons
    _actor_index: dict[str, ActorSpec] = field(
        default_factory=dict, compare=False, repr=False
    )
    _group_index: dict[str, GroupSpec] = field(
        default_factory=dict, compare=False, repr=False
    )
    _narrative_index: dict[str, NarrativeSpec] = field(
        default_factory=dict, compare=False, repr=False
    )
    _memberships: dict[str, tuple[tuple[str, Role], ...]] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self):
        self._actor_index.update({a.id: a for a in self.actors})
        self._group_index.update({g.id: g for g in self.groups})
        self._narrative_index.update({n.id: n for n in self.narratives})
        by_actor: dict[str, list[tuple[str, Role]]] = {a.id: [] for a in self.actors}
        for g in self.groups:
            for m in g.members:
                by_actor[m.actor_id].append((g.id, m.role))
        self._memberships.update({k: tuple(v) for k, v in by_actor.items()})

    def actor(self, actor_id: str) -> ActorSpec:
        return self._actor_index[actor_id]

    def group(self, group_id: str) -> GroupSpec:
        return self._group_index[group_id]

    def narrative(self, narrative_id: str) -> NarrativeSpec:
        return self._narrative_index[narrative_id]

    def memberships_of(self, actor_id: str) -> tuple[tuple[str, Role], ...]:
        return self._memberships[actor_id]

    def groups_of(self, actor_id: str) -> tuple[str, ...]:
        """All groups the actor belongs to, any role."""
        return tuple(g for g, _ in self._memberships[actor_id])

    def interaction_groups_of(self, actor_id: str) -> tuple[str, ...]:
        """Groups where the actor may author interactions (Full or Leader role)."""
        return tuple(
            g for g, role in self._memberships[actor_id] if role is not Role.SOURCE
        )

    def leaders_of(self, group_id: str) -> tuple[str, ...]:
        return tuple(
            m.actor_id for m in self._group_index[group_id].members if m.role is Role.LEADER
        )

    def hour_of(self, timestep: int) -> int:
        return (self.start_time.hour + timestep) % 24

    def day_of(self, timestep: int) -> int:
        return (self.start_time.hour + timestep) // 24

    def events_at(self, timestep: int) -> tuple[EventSpec, ...]:
        return tuple(e for e in self.events if e.covers(timestep))

    def narratives_at(self, timestep: int) -> tuple[NarrativeSpec, ...]:
        return tuple(n for n in self.narratives if n.covers(timestep))

    def narratives_for(self, group_ids: Iterable[str], timestep: int) -> tuple[NarrativeSpec, ...]:
        wanted = set(group_ids)
        return tuple(
            n for n in self.narratives
            if n.covers(timestep) and wanted.intersection(n.groups)
        )


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _require(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise ScenarioError(f"{where}: missing required key '{key}'")
    return obj[key]


def _parse_window(value: Any, where: str, num_timesteps: int) -> tuple[int, int]:
    try:
        start, end = int(value[0]), int(value[1])
    except (TypeError, ValueError, IndexError):
        raise ScenarioError(f"{where}: window must be a [start, end] pair") from None
    if start > end:
        raise ScenarioError(f"{where}: window start {start} > end {end}")
    if start < 0 or end >= num_timesteps:
        raise ScenarioError(
            f"{where}: window [{start}, {end}] outside simulation bounds "
            f"[0, {num_timesteps - 1}]"
        )
    return (start, end)


def _parse_hours(value: Any, where: str) -> tuple[tuple[int, int], ...]:
    windows = []
    for pair in value:
        try:
            start, end = int(pair[0]), int(pair[1])
        except (TypeError, ValueError, IndexError):
            raise ScenarioError(f"{where}: active_hours entries must be [start, end]") from None
        if not (0 <= start <= 23 and 0 <= end <= 23):
            raise ScenarioError(f"{where}: hours must be in 0..23, got [{start}, {end}]")
        windows.append((start, end))
    return tuple(windows)


def _parse_actor(obj: dict) -> ActorSpec:
    actor_id = str(_require(obj, "id", "actor"))
    where = f"actor '{actor_id}'"
    class_str = str(_require(obj, "agent_class", where))
    try:
        agent_class = AgentClass(class_str)
    except ValueError:
        raise ScenarioError(f"{where}: unknown agent class '{class_str}'") from None

    posts_min = int(_require(obj, "posts_min", where))
    posts_max = int(_require(obj, "posts_max", where))
    if posts_min < 0:
        raise ScenarioError(f"{where}: posts_min must be >= 0")
    if posts_min > posts_max:
        raise ScenarioError(f"{where}: posts_min {posts_min} > posts_max {posts_max}")

    period_hours = obj.get("period_hours")
    if period_hours is not None:
        period_hours = int(period_hours)
        if period_hours <= 0:
            raise ScenarioError(f"{where}: period_hours must be positive")
        if agent_class not in PERIODIC_CLASSES:
            raise ScenarioError(
                f"{where}: period_hours given but class '{agent_class.value}' "
                "does not post periodically"
            )

    operated_by = Operator.HUMAN
    if "operated_by" in obj:
        if agent_class is not AgentClass.DREDGER:
            raise ScenarioError(f"{where}: operated_by is only valid for dredgers")
        try:
            operated_by = Operator(obj["operated_by"])
        except ValueError:
            raise ScenarioError(
                f"{where}: operated_by must be 'human' or 'bot'"
            ) from None

    identity = None
    if obj.get("identity") is not None:
        ident = obj["identity"]
        identity = Identity(
            age=int(ident["age"]) if ident.get("age") is not None else None,
            gender=ident.get("gender"),
            location=ident.get("location"),
            nationality=ident.get("nationality"),
        )

    overrides = []
    for day_str, windows in sorted(obj.get("active_hours_by_day", {}).items()):
        overrides.append((int(day_str), _parse_hours(windows, where)))

    return ActorSpec(
        id=actor_id,
        display_name=str(_require(obj, "display_name", where)),
        screen_name=str(_require(obj, "screen_name", where)),
        agent_class=agent_class,
        active_hours=_parse_hours(_require(obj, "active_hours", where), where),
        posts_min=posts_min,
        posts_max=posts_max,
        period_hours=period_hours,
        tone=tuple(str(t) for t in obj.get("tone", [])),
        identity=identity,
        operated_by=operated_by,
        active_hours_by_day=tuple(overrides),
    )


def _parse_group(obj: dict, actor_ids: set[str]) -> GroupSpec:
    group_id = str(_require(obj, "id", "group"))
    where = f"group '{group_id}'"
    members = []
    seen = set()
    for entry in _require(obj, "members", where):
        actor_id = str(_require(entry, "actor", f"{where} member"))
        if actor_id not in actor_ids:
            raise ScenarioError(f"{where}: member references unknown actor '{actor_id}'")
        if actor_id in seen:
            raise ScenarioError(f"{where}: actor '{actor_id}' listed more than once")
        seen.add(actor_id)
        try:
            role = Role(entry.get("role", "full"))
        except ValueError:
            raise ScenarioError(
                f"{where}: invalid role '{entry.get('role')}' for '{actor_id}'"
            ) from None
        members.append(Membership(actor_id, role))
    if not any(m.role in (Role.FULL, Role.LEADER) for m in members):
        raise ScenarioError(
            f"{where}: needs at least one full or leader member (sources never act)"
        )
    return GroupSpec(id=group_id, members=tuple(members))


def _parse_lexicons(obj: dict) -> Lexicons:
    def str_tuple(key: str, default: tuple = ()) -> tuple[str, ...]:
        return tuple(str(x) for x in obj.get(key, default)) if obj.get(key, default) else tuple(default)

    locations: tuple[tuple[str, float], ...] = DEFAULT_RANDO_LOCATIONS
    if obj.get("rando_locations"):
        locations = tuple(
            (str(entry[0]), float(entry[1])) for entry in obj["rando_locations"]
        )
        total = sum(w for _, w in locations)
        if total <= 0:
            raise ScenarioError("lexicons: rando_locations weights must sum to > 0")
    return Lexicons(
        dredge_words=str_tuple("dredge_words"),
        unreliable_domains=str_tuple("unreliable_domains"),
        news_domains=str_tuple("news_domains"),
        factcheck_domains=str_tuple("factcheck_domains"),
        bend_maneuvers=str_tuple("bend_maneuvers", DEFAULT_BEND_MANEUVERS),
        rando_names=str_tuple("rando_names", DEFAULT_RANDO_NAMES),
        rando_locations=locations,
    )


_LEXICON_NEEDS = {
    AgentClass.DREDGER: ("dredge_words", "unreliable_domains"),
    AgentClass.NEWS_BOT: ("news_domains",),
    AgentClass.INFORMATION_CORRECTION_BOT: ("factcheck_domains",),
}


def _check_unique(items: Iterable[str], kind: str) -> None:
    seen = set()
    for item in items:
        if item in seen:
            raise ScenarioError(f"duplicate {kind} id '{item}'")
        seen.add(item)


def scenario_from_dict(data: dict) -> ScenarioSpec:
    if not isinstance(data, dict):
        raise ScenarioError("scenario root must be a JSON object")
    name = str(_require(data, "name", "scenario"))
    raw_start = str(_require(data, "start_time", "scenario"))
    try:
        start_time = datetime.fromisoformat(raw_start.replace("Z", "+00:00"))
    except ValueError:
        raise ScenarioError(f"scenario: invalid ISO-8601 start_time '{raw_start}'") from None
    if start_time.tzinfo is None:
        start_time = start_time.replace(tzinfo=timezone.utc)
    num_timesteps = int(_require(data, "num_timesteps", "scenario"))
    if num_timesteps <= 0:
        raise ScenarioError("scenario: num_timesteps must be positive")

    actors = tuple(_parse_actor(a) for a in _require(data, "actors", "scenario"))
    _check_unique((a.id for a in actors), "actor")
    # Screen names identify network nodes in the exported edge list.
    _check_unique((a.screen_name.lower() for a in actors), "screen name")
    actor_ids = {a.id for a in actors}

    groups = tuple(_parse_group(g, actor_ids) for g in _require(data, "groups", "scenario"))
    _check_unique((g.id for g in groups), "group")
    group_ids = {g.id for g in groups}

    events = []
    for obj in _require(data, "events", "scenario"):
        event_id = str(_require(obj, "id", "event"))
        where = f"event '{event_id}'"
        excitement = float(obj.get("excitement", DEFAULT_EXCITEMENT))
        if excitement < 1.0:
            raise ScenarioError(f"{where}: excitement must be >= 1")
        events.append(
            EventSpec(
                id=event_id,
                label=str(obj.get("label", event_id)),
                window=_parse_window(_require(obj, "window", where), where, num_timesteps),
                excitement=excitement,
            )
        )
    _check_unique((e.id for e in events), "event")

    narratives = []
    for obj in _require(data, "narratives", "scenario"):
        narr_id = str(_require(obj, "id", "narrative"))
        where = f"narrative '{narr_id}'"
        narr_groups = tuple(str(g) for g in _require(obj, "groups", where))
        if not narr_groups:
            raise ScenarioError(f"{where}: groups must be non-empty")
        for g in narr_groups:
            if g not in group_ids:
                raise ScenarioError(f"{where}: references unknown group '{g}'")
        ratio = int(_require(obj, "ratio", where))
        if ratio < 1:
            raise ScenarioError(f"{where}: ratio must be >= 1")
        try:
            stance = Stance(_require(obj, "stance", where))
        except ValueError:
            raise ScenarioError(f"{where}: invalid stance '{obj.get('stance')}'") from None
        narratives.append(
            NarrativeSpec(
                id=narr_id,
                topic=str(obj.get("topic", "")),
                description=str(_require(obj, "description", where)),
                groups=narr_groups,
                window=_parse_window(_require(obj, "window", where), where, num_timesteps),
                ratio=ratio,
                stance=stance,
                hashtags=tuple(str(h) for h in obj.get("hashtags", [])),
            )
        )
    _check_unique((n.id for n in narratives), "narrative")

    lexicons = _parse_lexicons(data.get("lexicons") or {})
    present_classes = {a.agent_class for a in actors}
    for cls, needed in _LEXICON_NEEDS.items():
        if cls in present_classes:
            for key in needed:
                if not getattr(lexicons, key):
                    raise ScenarioError(
                        f"lexicons: '{key}' must be non-empty when the scenario "
                        f"contains a {cls.value}"
                    )

    return ScenarioSpec(
        name=name,
        start_time=start_time,
        num_timesteps=num_timesteps,
        actors=actors,
        groups=groups,
        events=events,
        narratives=tuple(narratives),
        lexicons=lexicons,
    )


def parse_scenario(path: str | Path) -> ScenarioSpec:
    """Load and materialize a scenario file.

    Raises ScenarioError with line/column context for malformed JSON and with
    the offending identifier for dangling references or unknown classes.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return scenario_from_dict(data)


# ---------------------------------------------------------------------------
# Serialization (canonical form: parse -> serialize -> parse is identity)
# ---------------------------------------------------------------------------

def _actor_to_dict(a: ActorSpec) -> dict:
    out: dict[str, Any] = {
        "id": a.id,
        "display_name": a.display_name,
        "screen_name": a.screen_name,
        "agent_class": a.agent_class.value,
        "active_hours": [list(w) for w in a.active_hours],
        "posts_min": a.posts_min,
        "posts_max": a.posts_max,
    }
    if a.period_hours is not None:
        out["period_hours"] = a.period_hours
    if a.tone:
        out["tone"] = list(a.tone)
    if a.identity is not None:
        ident = {
            k: v
            for k, v in (
                ("age", a.identity.age),
                ("gender", a.identity.gender),
                ("location", a.identity.location),
                ("nationality", a.identity.nationality),
            )
            if v is not None
        }
        out["identity"] = ident
    if a.agent_class is AgentClass.DREDGER:
        out["operated_by"] = a.operated_by.value
    if a.active_hours_by_day:
        out["active_hours_by_day"] = {
            str(day): [list(w) for w in windows] for day, windows in a.active_hours_by_day
        }
    return out


def scenario_to_dict(spec: ScenarioSpec) -> dict:
    return {
        "name": spec.name,
        "start_time": spec.start_time.isoformat(),
        "num_timesteps": spec.num_timesteps,
        "actors": [_actor_to_dict(a) for a in spec.actors],
        "groups": [
            {
                "id": g.id,
                "members": [{"actor": m.actor_id, "role": m.role.value} for m in g.members],
            }
            for g in spec.groups
        ],
        "events": [
            {"id": e.id, "label": e.label, "window": list(e.window), "excitement": e.excitement}
            for e in spec.events
        ],
        "narratives": [
            {
                "id": n.id,
                "topic": n.topic,
                "description": n.description,
                "groups": list(n.groups),
                "window": list(n.window),
                "ratio": n.ratio,
                "stance": n.stance.value,
                "hashtags": list(n.hashtags),
            }
            for n in spec.narratives
        ],
        "lexicons": {
            "dredge_words": list(spec.lexicons.dredge_words),
            "unreliable_domains": list(spec.lexicons.unreliable_domains),
            "news_domains": list(spec.lexicons.news_domains),
            "factcheck_domains": list(spec.lexicons.factcheck_domains),
            "bend_maneuvers": list(spec.lexicons.bend_maneuvers),
            "rando_names": list(spec.lexicons.rando_names),
            "rando_locations": [[name, weight] for name, weight in spec.lexicons.rando_locations],
        },
    }


def serialize_scenario(spec: ScenarioSpec) -> str:
    return json.dumps(scenario_to_dict(spec), indent=2, ensure_ascii=False) + "\n"
