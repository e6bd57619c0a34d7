"""Agent class taxonomy: capabilities, volume/directive multipliers, behavior flags.

Everything here is a fixed lookup table. Nineteen classes exist: two human
classes (individuals and organizations, which share one capability row),
sixteen bot classes, and dredgers (which may be operated by a human or a bot;
the operator picks the multipliers).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class AgentClass(str, Enum):
    HUMAN = "human"
    ORGANIZATION = "organization"
    GENERAL_BOT = "general_bot"
    SOCIAL_INFLUENCE_BOT = "social_influence_bot"
    CHAOS_BOT = "chaos_bot"
    AMPLIFIER_BOT = "amplifier_bot"
    REPEATER_BOT = "repeater_bot"
    BRIDGING_BOT = "bridging_bot"
    SYNCHRONIZED_BOT = "synchronized_bot"
    ANNOUNCER_BOT = "announcer_bot"
    CYBORG = "cyborg"
    INFORMATION_CORRECTION_BOT = "information_correction_bot"
    CONTENT_GENERATION_BOT = "content_generation_bot"
    ENGAGEMENT_GENERATION_BOT = "engagement_generation_bot"
    SELF_DECLARED_BOT = "self_declared_bot"
    GENRE_SPECIFIC_BOT = "genre_specific_bot"
    CONVERSATIONAL_BOT = "conversational_bot"
    NEWS_BOT = "news_bot"
    DREDGER = "dredger"


class CyborgPhase(str, Enum):
    HUMAN = "human"
    BOT = "bot"


class Operator(str, Enum):
    """Who runs a dredger account."""

    HUMAN = "human"
    BOT = "bot"


class BehaviorFlag(str, Enum):
    ERRATIC = "erratic"
    REPEATS_OWN_TWEETS = "repeats_own_tweets"
    TAGS_MULTIPLE_COMMUNITIES = "tags_multiple_communities"
    ONLY_INTERACTS_WITH_BOTS = "only_interacts_with_bots"
    PERIODIC = "periodic"
    ALTERNATES_CYBORG_PHASE = "alternates_cyborg_phase"
    USES_FACTCHECK_URLS = "uses_factcheck_urls"
    USES_NEWS_URLS = "uses_news_urls"
    USES_DREDGE_WORDS = "uses_dredge_words"
    HIGH_EMOTIONAL_CUES = "high_emotional_cues"
    SINGLE_TOPIC = "single_topic"


@dataclass(frozen=True)
class CapabilityRow:
    can_tweet: bool
    can_retweet: bool
    can_quote_reply: bool


HUMAN_CLASSES = frozenset({AgentClass.HUMAN, AgentClass.ORGANIZATION})
BOT_CLASSES = frozenset(
    c for c in AgentClass if c not in HUMAN_CLASSES and c is not AgentClass.DREDGER
)

# Classes that require a posting period and skip the activation draw.
PERIODIC_CLASSES = frozenset({AgentClass.ANNOUNCER_BOT, AgentClass.CYBORG})

# Bot classes a rando account may be assigned.
RANDO_BOT_CLASSES = (
    AgentClass.AMPLIFIER_BOT,
    AgentClass.CHAOS_BOT,
    AgentClass.SOCIAL_INFLUENCE_BOT,
    AgentClass.CYBORG,
    AgentClass.SYNCHRONIZED_BOT,
    AgentClass.ANNOUNCER_BOT,
    AgentClass.GENRE_SPECIFIC_BOT,
    AgentClass.ENGAGEMENT_GENERATION_BOT,
)

_YYY = CapabilityRow(True, True, True)

_CAPABILITIES: dict[AgentClass, CapabilityRow] = {
    AgentClass.HUMAN: _YYY,
    AgentClass.ORGANIZATION: _YYY,  # organizations share the human row
    AgentClass.GENERAL_BOT: _YYY,
    AgentClass.SOCIAL_INFLUENCE_BOT: _YYY,
    AgentClass.CHAOS_BOT: _YYY,
    AgentClass.AMPLIFIER_BOT: CapabilityRow(False, True, False),
    AgentClass.REPEATER_BOT: CapabilityRow(True, False, False),
    AgentClass.BRIDGING_BOT: _YYY,
    AgentClass.SYNCHRONIZED_BOT: _YYY,
    AgentClass.ANNOUNCER_BOT: _YYY,
    AgentClass.CYBORG: _YYY,
    AgentClass.INFORMATION_CORRECTION_BOT: CapabilityRow(True, False, False),
    AgentClass.CONTENT_GENERATION_BOT: CapabilityRow(True, False, False),
    AgentClass.ENGAGEMENT_GENERATION_BOT: CapabilityRow(True, False, False),
    AgentClass.SELF_DECLARED_BOT: _YYY,
    AgentClass.GENRE_SPECIFIC_BOT: _YYY,
    AgentClass.CONVERSATIONAL_BOT: CapabilityRow(True, False, True),
    AgentClass.NEWS_BOT: CapabilityRow(True, True, False),
    AgentClass.DREDGER: _YYY,
}

_FLAGS: dict[AgentClass, frozenset[BehaviorFlag]] = {
    AgentClass.CHAOS_BOT: frozenset({BehaviorFlag.ERRATIC}),
    AgentClass.REPEATER_BOT: frozenset({BehaviorFlag.REPEATS_OWN_TWEETS}),
    AgentClass.BRIDGING_BOT: frozenset({BehaviorFlag.TAGS_MULTIPLE_COMMUNITIES}),
    AgentClass.SYNCHRONIZED_BOT: frozenset({BehaviorFlag.ONLY_INTERACTS_WITH_BOTS}),
    AgentClass.ANNOUNCER_BOT: frozenset({BehaviorFlag.PERIODIC}),
    AgentClass.CYBORG: frozenset(
        {BehaviorFlag.PERIODIC, BehaviorFlag.ALTERNATES_CYBORG_PHASE}
    ),
    AgentClass.INFORMATION_CORRECTION_BOT: frozenset({BehaviorFlag.USES_FACTCHECK_URLS}),
    AgentClass.NEWS_BOT: frozenset({BehaviorFlag.USES_NEWS_URLS}),
    AgentClass.DREDGER: frozenset({BehaviorFlag.USES_DREDGE_WORDS}),
    AgentClass.ENGAGEMENT_GENERATION_BOT: frozenset({BehaviorFlag.HIGH_EMOTIONAL_CUES}),
    AgentClass.GENRE_SPECIFIC_BOT: frozenset({BehaviorFlag.SINGLE_TOPIC}),
}

# Persona blurbs fed to the text backend; written by us, one per class.
PERSONA: dict[AgentClass, str] = {
    AgentClass.HUMAN: "an individual person posting casually with a personable voice",
    AgentClass.ORGANIZATION: (
        "an official account run on behalf of an institution; formal, on-message writing"
    ),
    AgentClass.GENERAL_BOT: "a generic automated account that posts about its groups' topics",
    AgentClass.SOCIAL_INFLUENCE_BOT: "an automated account built to sway public opinion",
    AgentClass.CHAOS_BOT: (
        "an automated account that derails conversations with disruptive, confusing posts"
    ),
    AgentClass.AMPLIFIER_BOT: "an automated account that boosts reach by retweeting",
    AgentClass.REPEATER_BOT: "an automated account that posts the same message repeatedly",
    AgentClass.BRIDGING_BOT: (
        "an automated account that tags people from different communities to link them"
    ),
    AgentClass.SYNCHRONIZED_BOT: (
        "an automated account operating in lockstep with other bots, redistributing their posts"
    ),
    AgentClass.ANNOUNCER_BOT: "an automated account posting notifications on a fixed schedule",
    AgentClass.CYBORG: (
        "a prominent account mixing automation with human oversight, used for strategic posts"
    ),
    AgentClass.INFORMATION_CORRECTION_BOT: (
        "an automated account replying to misinformation with fact-check links"
    ),
    AgentClass.CONTENT_GENERATION_BOT: "an automated account producing original posts in volume",
    AgentClass.ENGAGEMENT_GENERATION_BOT: (
        "an automated account chasing interactions with highly emotive wording"
    ),
    AgentClass.SELF_DECLARED_BOT: "an automated account that openly states it is a bot",
    AgentClass.GENRE_SPECIFIC_BOT: "an automated account posting about a single topic only",
    AgentClass.CONVERSATIONAL_BOT: "an automated account that talks with users via replies",
    AgentClass.NEWS_BOT: "an automated account sharing news headlines and article links",
    AgentClass.DREDGER: (
        "an account hijacking trending phrases to push links to unreliable websites"
    ),
}


def capabilities(cls: AgentClass) -> CapabilityRow:
    """Permitted interaction kinds for a class."""
    return _CAPABILITIES[cls]


def flags(cls: AgentClass) -> frozenset[BehaviorFlag]:
    return _FLAGS.get(cls, frozenset())


def is_bot(cls: AgentClass, operated_by: Operator = Operator.HUMAN) -> bool:
    """Whether the account behaves as automated. Dredgers follow their operator."""
    if cls is AgentClass.DREDGER:
        return operated_by is Operator.BOT
    return cls in BOT_CLASSES


def post_multiplier(
    cls: AgentClass,
    phase: CyborgPhase | None = None,
    operated_by: Operator = Operator.HUMAN,
) -> Fraction:
    """Posting-volume multiplier relative to the human baseline.

    `phase` is required for cyborgs and rejected for every other class.
    """
    if cls is AgentClass.CYBORG:
        if phase is None:
            raise ValueError("cyborg post_multiplier requires a phase")
        return Fraction(2) if phase is CyborgPhase.BOT else Fraction(1)
    if phase is not None:
        raise ValueError(f"phase supplied for non-cyborg class {cls.value}")
    if cls in HUMAN_CLASSES:
        return Fraction(1)
    if cls is AgentClass.DREDGER:
        return Fraction(2) if operated_by is Operator.BOT else Fraction(1)
    return Fraction(2)


def bend_multiplier(cls: AgentClass, operated_by: Operator = Operator.HUMAN) -> Fraction:
    """Probability multiplier for including a shaping-maneuver directive in a prompt."""
    if cls in HUMAN_CLASSES:
        return Fraction(1)
    if cls in (AgentClass.SOCIAL_INFLUENCE_BOT, AgentClass.CHAOS_BOT):
        return Fraction(4)
    if cls is AgentClass.DREDGER:
        return Fraction(2) if operated_by is Operator.BOT else Fraction(1)
    return Fraction(2)


@dataclass(frozen=True)
class BehaviorProfile:
    agent_class: AgentClass
    capabilities: CapabilityRow
    post_multiplier: Fraction
    bend_multiplier: Fraction
    flags: frozenset[BehaviorFlag]
    persona: str


def profile(
    cls: AgentClass,
    phase: CyborgPhase | None = None,
    operated_by: Operator = Operator.HUMAN,
) -> BehaviorProfile:
    """Full behavior row for a class. Cyborgs need a phase; see post_multiplier."""
    if cls is AgentClass.CYBORG and phase is None:
        phase = CyborgPhase.BOT
    return BehaviorProfile(
        agent_class=cls,
        capabilities=capabilities(cls),
        post_multiplier=post_multiplier(cls, phase if cls is AgentClass.CYBORG else None, operated_by),
        bend_multiplier=bend_multiplier(cls, operated_by),
        flags=flags(cls),
        persona=PERSONA[cls],
    )
