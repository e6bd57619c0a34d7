"""Stage 2: turn activation decisions into planned actions.

For each post slot the author picks a narrative (ratio-weighted among the
narratives its groups have active), draws an interaction kind uniformly from
its capability row, and — for retweets/quotes/replies — picks a target via the
attachment mix: preferential (co-group, same narrative), follow-the-leader
(leader-authored, same narrative), or random (anything recent). Empty pools
fall back leader → preferential → random → original tweet.

Targets come from the current and previous timestep only. Bare retweets are
not targetable (interacting with a retweet means interacting with the
underlying status); source-role memberships never let an actor author
interactions inside that group, though source-authored posts remain targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Protocol

from .behavior import BehaviorFlag, capabilities, flags
from .config import AttachmentMix
from .rng import RunRandomness
from .scenario import ActorSpec, ScenarioSpec
from .activation import ActivationDecision


class ActionKind(str, Enum):
    TWEET = "tweet"
    RETWEET = "retweet"
    QUOTE = "quote"
    REPLY = "reply"


class AttachmentKind(str, Enum):
    PREFERENTIAL = "preferential"
    FOLLOW_THE_LEADER = "follow_the_leader"
    RANDOM = "random"


class NoActiveNarrativeError(Exception):
    """No narrative anywhere in the scenario covers this timestep."""


class TargetablePost(Protocol):
    id: str
    author_id: str
    narrative_id: str
    kind: ActionKind
    timestep: int
    author_is_bot: bool


@dataclass(frozen=True)
class PlannedAction:
    author_id: str
    timestep: int
    slot: int
    narrative_id: str
    kind: ActionKind
    target_post_id: str | None = None
    attachment: AttachmentKind | None = None
    mentions: tuple[str, ...] = ()


class PostIndex:
    """Recent posts, queryable as interaction targets.

    Holds the current and previous timestep; anything older is pruned when the
    clock advances.
    """

    def __init__(self):
        self._by_timestep: dict[int, list[TargetablePost]] = {}

    def add(self, post: TargetablePost) -> None:
        self._by_timestep.setdefault(post.timestep, []).append(post)

    def advance(self, timestep: int) -> None:
        for ts in [t for t in self._by_timestep if t < timestep - 1]:
            del self._by_timestep[ts]

    def eligible(self, timestep: int) -> list[TargetablePost]:
        pool: list[TargetablePost] = []
        for ts in (timestep - 1, timestep):
            for post in self._by_timestep.get(ts, ()):
                if post.kind is not ActionKind.RETWEET:
                    pool.append(post)
        return pool

    def get(self, post_id: str) -> TargetablePost | None:
        for posts in self._by_timestep.values():
            for post in posts:
                if post.id == post_id:
                    return post
        return None


def select_narrative(
    actor_id: str,
    timestep: int,
    spec: ScenarioSpec,
    rng: Random,
) -> tuple[str, bool]:
    """Pick a narrative for the actor, ratio-weighted.

    Full/leader memberships speak first: an actor draws from the narratives of
    groups it actively belongs to, so a figure who is merely cited (source) by
    fan groups does not adopt the fan voice. Source-only actors draw from
    their source groups' narratives. Returns (narrative_id,
    used_global_fallback); when no membership has anything active the draw is
    uniform over everything active at this timestep, and an empty global pool
    is a scenario defect.
    """
    candidates = spec.narratives_for(spec.interaction_groups_of(actor_id), timestep)
    if not candidates:
        candidates = spec.narratives_for(spec.groups_of(actor_id), timestep)
    if candidates:
        weights = [n.ratio for n in candidates]
        return rng.choices(candidates, weights=weights, k=1)[0].id, False
    pool = spec.narratives_at(timestep)
    if not pool:
        raise NoActiveNarrativeError(
            f"no narrative active anywhere at timestep {timestep}"
        )
    return rng.choice(pool).id, True


def sample_attachment(mix: AttachmentMix, rng: Random) -> AttachmentKind:
    draw = rng.random()
    if draw < mix.preferential:
        return AttachmentKind.PREFERENTIAL
    if draw < mix.preferential + mix.leader:
        return AttachmentKind.FOLLOW_THE_LEADER
    return AttachmentKind.RANDOM


_FALLBACK_ORDER = (
    AttachmentKind.FOLLOW_THE_LEADER,
    AttachmentKind.PREFERENTIAL,
    AttachmentKind.RANDOM,
)


def _pools(
    author: ActorSpec,
    narrative_id: str,
    timestep: int,
    index: PostIndex,
    spec: ScenarioSpec,
) -> dict[AttachmentKind, list[TargetablePost]]:
    eligible = [p for p in index.eligible(timestep) if p.author_id != author.id]
    if BehaviorFlag.ONLY_INTERACTS_WITH_BOTS in flags(author.agent_class):
        eligible = [p for p in eligible if p.author_is_bot]

    groups = spec.interaction_groups_of(author.id)
    co_members: set[str] = set()
    leaders: set[str] = set()
    for group_id in groups:
        for member in spec.group(group_id).members:
            co_members.add(member.actor_id)
        leaders.update(spec.leaders_of(group_id))

    return {
        AttachmentKind.PREFERENTIAL: [
            p for p in eligible
            if p.author_id in co_members and p.narrative_id == narrative_id
        ],
        AttachmentKind.FOLLOW_THE_LEADER: [
            p for p in eligible
            if p.author_id in leaders and p.narrative_id == narrative_id
        ],
        AttachmentKind.RANDOM: eligible,
    }


def choose_target(
    author: ActorSpec,
    narrative_id: str,
    timestep: int,
    slot: int,
    index: PostIndex,
    spec: ScenarioSpec,
    mix: AttachmentMix,
    rng: Random,
    log: list[dict] | None = None,
) -> PlannedAction | None:
    """Plan one action for an activated author, or None when nothing is possible.

    The kind is drawn uniformly from the author's capability row; the
    quote/reply column splits 50/50 once drawn. A drawn interaction with no
    reachable target degrades to an original tweet when the author can tweet,
    otherwise the slot produces nothing (logged).
    """
    caps = capabilities(author.agent_class)
    columns: list[str] = []
    if caps.can_tweet:
        columns.append("tweet")
    if caps.can_retweet:
        columns.append("retweet")
    if caps.can_quote_reply:
        columns.append("quote_reply")

    column = rng.choice(columns)
    if column == "tweet":
        return PlannedAction(
            author_id=author.id,
            timestep=timestep,
            slot=slot,
            narrative_id=narrative_id,
            kind=ActionKind.TWEET,
        )

    attachment = sample_attachment(mix, rng)
    pools = _pools(author, narrative_id, timestep, index, spec)
    chosen_attachment = attachment
    pool = pools[attachment]
    if not pool:
        for fallback in _FALLBACK_ORDER:
            if fallback is attachment:
                continue
            if pools[fallback]:
                chosen_attachment = fallback
                pool = pools[fallback]
                break

    if not pool:
        if log is not None:
            log.append({
                "event": "empty_pool",
                "timestep": timestep,
                "actor": author.id,
                "narrative": narrative_id,
                "wanted": column,
            })
        if caps.can_tweet:
            return PlannedAction(
                author_id=author.id,
                timestep=timestep,
                slot=slot,
                narrative_id=narrative_id,
                kind=ActionKind.TWEET,
            )
        return None

    target = rng.choice(pool)
    if column == "retweet":
        kind = ActionKind.RETWEET
    else:
        kind = ActionKind.QUOTE if rng.random() < 0.5 else ActionKind.REPLY
    return PlannedAction(
        author_id=author.id,
        timestep=timestep,
        slot=slot,
        narrative_id=narrative_id,
        kind=kind,
        target_post_id=target.id,
        attachment=chosen_attachment,
    )


def _bridging_mentions(
    author: ActorSpec, spec: ScenarioSpec, rng: Random
) -> tuple[str, ...]:
    # Tag one member from each of (up to) two distinct groups the bot belongs to.
    groups = [g for g in spec.groups_of(author.id)]
    if not groups:
        return ()
    picked = rng.sample(groups, k=min(2, len(groups)))
    mentions: list[str] = []
    for group_id in picked:
        members = [
            m.actor_id
            for m in spec.group(group_id).members
            if m.actor_id != author.id and m.actor_id not in mentions
        ]
        if members:
            mentions.append(rng.choice(members))
    return tuple(mentions)


def build_timestep_plan(
    decisions: list[ActivationDecision],
    spec: ScenarioSpec,
    index: PostIndex,
    mix: AttachmentMix,
    rng: RunRandomness,
    log: list[dict] | None = None,
) -> list[PlannedAction]:
    """Plan every slot of every decision, in actor order then slot order."""
    plan: list[PlannedAction] = []
    for decision in decisions:
        author = spec.actor(decision.actor_id)
        for slot in range(decision.num_posts):
            stream = rng.actor_stream("plan", author.id)
            narrative_id, fallback = select_narrative(
                author.id, decision.timestep, spec, stream
            )
            if fallback and log is not None:
                log.append({
                    "event": "narrative_fallback",
                    "timestep": decision.timestep,
                    "actor": author.id,
                    "narrative": narrative_id,
                })
            action = choose_target(
                author,
                narrative_id,
                decision.timestep,
                slot,
                index,
                spec,
                mix,
                stream,
                log,
            )
            if action is None:
                continue
            if BehaviorFlag.TAGS_MULTIPLE_COMMUNITIES in flags(author.agent_class):
                action = PlannedAction(
                    author_id=action.author_id,
                    timestep=action.timestep,
                    slot=action.slot,
                    narrative_id=action.narrative_id,
                    kind=action.kind,
                    target_post_id=action.target_post_id,
                    attachment=action.attachment,
                    mentions=_bridging_mentions(author, spec, stream),
                )
            plan.append(action)
    return plan
