"""Stage 3: build prompts, obtain text, enforce class constraints, spawn randos.

Retweets bypass generation and copy the target verbatim. Everything else goes
through the six-part prompt bundle and the configured backend, then through
the class constraint check; a post that still violates after the configured
regeneration attempts is repaired deterministically (missing required tokens
and links are appended) and the repair is logged.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from datetime import datetime, timedelta
from random import Random
from typing import Callable
from urllib.parse import urlparse

from .backends import BackendError, TextBackend, effective_length
from .behavior import (
    AgentClass,
    BehaviorFlag,
    PERSONA,
    RANDO_BOT_CLASSES,
    bend_multiplier,
    capabilities,
    flags,
)
from .config import ConfigError, ContentParams
from .interactions import ActionKind, PlannedAction
from .prompts import PromptBundle
from .scenario import Lexicons, NarrativeSpec, ScenarioSpec

MAX_POST_LENGTH = 280

_HASHTAG_RE = re.compile(r"#(\w+)")
_MENTION_RE = re.compile(r"@(\w+)")
_URL_RE = re.compile(r"https?://[^\s\"')\]]+")


@dataclass(frozen=True)
class Post:
    id: str
    author_id: str
    author_screen: str
    timestep: int
    created_at: datetime
    second_of_hour: int
    kind: ActionKind
    text: str
    narrative_id: str
    target_post_id: str | None = None
    hashtags: tuple[str, ...] = ()
    urls: tuple[str, ...] = ()
    mentions: tuple[str, ...] = ()  # resolved canonical screen names
    author_is_bot: bool = False
    source: str = "planned"  # planned | repeat | rando


@dataclass(frozen=True)
class RandoActor:
    id: str
    display_name: str
    screen_name: str
    agent_class: AgentClass
    tweets_per_day: int
    age: int
    location: str
    nationality: str
    gender: str

    @property
    def is_bot(self) -> bool:
        return self.agent_class is not AgentClass.HUMAN


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


class HistoryIndex:
    """Last few generated texts per narrative, for few-shot context."""

    def __init__(self, max_len: int):
        self.max_len = max_len
        self._texts: dict[str, list[str]] = {}

    def recent(self, narrative_id: str) -> tuple[str, ...]:
        return tuple(self._texts.get(narrative_id, ()))

    def record(self, narrative_id: str, text: str) -> None:
        bucket = self._texts.setdefault(narrative_id, [])
        bucket.append(text)
        if len(bucket) > self.max_len:
            del bucket[: len(bucket) - self.max_len]


def _host(url_or_domain: str) -> str:
    value = url_or_domain.strip().lower()
    if "://" in value:
        value = urlparse(value).netloc
    else:
        value = value.split("/", 1)[0]
    return value.removeprefix("www.")


def _matching_urls(urls: tuple[str, ...], domains: tuple[str, ...]) -> list[str]:
    lex_hosts = {_host(d) for d in domains}
    matched = []
    for url in urls:
        host = _host(url)
        if any(host == lex or host.endswith("." + lex) for lex in lex_hosts):
            matched.append(url)
    return matched


def parse_entities(text: str) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
    """(hashtags, urls, mention screen names) found in the text."""
    urls = tuple(dict.fromkeys(m.group(0).rstrip(".,;:!?") for m in _URL_RE.finditer(text)))
    bare = _URL_RE.sub(" ", text)
    hashtags = tuple(dict.fromkeys(_HASHTAG_RE.findall(bare)))
    mentions = tuple(dict.fromkeys(_MENTION_RE.findall(bare)))
    return hashtags, urls, mentions


def enforce_constraints(
    agent_class: AgentClass, text: str, lexicons: Lexicons
) -> list[Violation]:
    """Class content requirements; an empty list means the text is acceptable."""
    violations: list[Violation] = []
    _, urls, _ = parse_entities(text)
    lowered = text.lower()

    if agent_class is AgentClass.DREDGER:
        found = {w for w in lexicons.dredge_words if w.lower() in lowered}
        if len(found) < 2:
            violations.append(Violation(
                "dredge_words",
                f"dredger text has {len(found)} dredge word(s), needs at least 2",
            ))
        matched = _matching_urls(urls, lexicons.unreliable_domains)
        if len(set(matched)) < 2:
            violations.append(Violation(
                "unreliable_urls",
                f"dredger text has {len(set(matched))} unreliable-domain URL(s), "
                "needs at least 2",
            ))
    elif agent_class is AgentClass.NEWS_BOT:
        if not _matching_urls(urls, lexicons.news_domains):
            violations.append(Violation(
                "news_url", "news bot text has no news-domain URL"
            ))
    elif agent_class is AgentClass.INFORMATION_CORRECTION_BOT:
        if not _matching_urls(urls, lexicons.factcheck_domains):
            violations.append(Violation(
                "factcheck_url", "correction bot text has no fact-check URL"
            ))

    if effective_length(text) > MAX_POST_LENGTH:
        violations.append(Violation(
            "too_long",
            f"text is {effective_length(text)} code points after URL "
            f"normalization, limit is {MAX_POST_LENGTH}",
        ))
    return violations


def _ensure_url(domain: str) -> str:
    return domain if "://" in domain else f"https://{domain}"


def repair_text(agent_class: AgentClass, text: str, lexicons: Lexicons) -> str:
    """Deterministically append whatever required tokens/links are missing,
    trimming prose from the end if the result would run over the limit."""
    additions: list[str] = []
    _, urls, _ = parse_entities(text)
    lowered = text.lower()

    if agent_class is AgentClass.DREDGER:
        present = [w for w in lexicons.dredge_words if w.lower() in lowered]
        for word in lexicons.dredge_words:
            if len(present) >= 2:
                break
            if word not in present:
                additions.append(word)
                present.append(word)
        matched = set(_matching_urls(urls, lexicons.unreliable_domains))
        for domain in lexicons.unreliable_domains:
            if len(matched) >= 2:
                break
            url = _ensure_url(domain)
            if url not in matched:
                additions.append(url)
                matched.add(url)
    elif agent_class is AgentClass.NEWS_BOT:
        if not _matching_urls(urls, lexicons.news_domains):
            additions.append(_ensure_url(lexicons.news_domains[0]))
    elif agent_class is AgentClass.INFORMATION_CORRECTION_BOT:
        if not _matching_urls(urls, lexicons.factcheck_domains):
            additions.append(_ensure_url(lexicons.factcheck_domains[0]))

    tail = (" " + " ".join(additions)) if additions else ""
    body = text
    while body and effective_length(body + tail) > MAX_POST_LENGTH:
        body = body[: len(body) - 8].rstrip()
    return (body + tail).strip()


# ---------------------------------------------------------------------------
# Prompt assembly
# ---------------------------------------------------------------------------

def _persona_text(
    display_name: str,
    screen_name: str,
    agent_class: AgentClass,
    tones: tuple[str, ...],
    identity_bits: str = "",
) -> str:
    text = f"You are {display_name} (@{screen_name}), {PERSONA[agent_class]}."
    if identity_bits:
        text += " " + identity_bits
    if tones:
        text += f" Your usual tone: {', '.join(tones)}."
    return text


def _requirement_lines(
    agent_class: AgentClass,
    tones: tuple[str, ...],
    narrative: NarrativeSpec,
    lexicons: Lexicons,
    mention_handles: tuple[str, ...],
    target_text: str | None,
    target_kind: ActionKind | None,
) -> str:
    lines: list[str] = []
    if tones:
        lines.append(f"Tone: {', '.join(tones)}")
    cls_flags = flags(agent_class)
    if BehaviorFlag.USES_NEWS_URLS in cls_flags:
        lines.append("Write like a news headline.")
        if not lexicons.news_domains:
            raise ConfigError("news bot present but lexicons.news_domains is empty")
        lines.append(
            "Include at least one of these links: "
            + " ".join(_ensure_url(d) for d in lexicons.news_domains)
        )
    if BehaviorFlag.USES_FACTCHECK_URLS in cls_flags:
        if not lexicons.factcheck_domains:
            raise ConfigError(
                "correction bot present but lexicons.factcheck_domains is empty"
            )
        lines.append(
            "Include at least one of these links: "
            + " ".join(_ensure_url(d) for d in lexicons.factcheck_domains)
        )
    if BehaviorFlag.USES_DREDGE_WORDS in cls_flags:
        if not lexicons.dredge_words or not lexicons.unreliable_domains:
            raise ConfigError("dredger present but dredge lexicons are empty")
        lines.append(
            "Include at least two of these phrases: " + "; ".join(lexicons.dredge_words)
        )
        lines.append(
            "Include at least two of these links: "
            + " ".join(_ensure_url(d) for d in lexicons.unreliable_domains)
        )
    if BehaviorFlag.HIGH_EMOTIONAL_CUES in cls_flags:
        lines.append("Use strongly emotional wording and urge people to react.")
    if BehaviorFlag.SINGLE_TOPIC in cls_flags:
        lines.append("Stay strictly on your one topic.")
    if agent_class is AgentClass.SELF_DECLARED_BOT:
        lines.append("Openly note that you are an automated account.")
    if mention_handles:
        lines.append("Mention: " + " ".join(f"@{h}" for h in mention_handles))
    if narrative.hashtags:
        lines.append(
            "Include hashtags: " + " ".join(f"#{h}" for h in narrative.hashtags[:3])
        )
    if target_text is not None and target_kind is not None:
        verb = "quoting" if target_kind is ActionKind.QUOTE else "replying to"
        lines.append(f'You are {verb} this post: "{target_text}"')
    return "\n".join(lines)


def assemble_prompt(
    action: PlannedAction,
    spec: ScenarioSpec,
    history: HistoryIndex,
    rng: Random,
    params: ContentParams,
    target: Post | None = None,
) -> PromptBundle:
    """Six-part bundle for a planned (non-retweet) action.

    Quotes and replies take the *target's* narrative; the bend directive is
    included with probability base_bend times the class multiplier.
    """
    if action.kind is ActionKind.RETWEET:
        raise ValueError("retweets copy text and take no prompt")
    author = spec.actor(action.author_id)
    if action.kind in (ActionKind.QUOTE, ActionKind.REPLY):
        if target is None:
            raise ValueError("quote/reply prompt needs the target post")
        narrative = spec.narrative(target.narrative_id)
    else:
        narrative = spec.narrative(action.narrative_id)

    identity_bits = ""
    if author.identity is not None:
        pieces = [
            part
            for part in (
                f"age {author.identity.age}" if author.identity.age else "",
                author.identity.gender or "",
                f"from {author.identity.location}" if author.identity.location else "",
            )
            if part
        ]
        if pieces:
            identity_bits = "You are " + ", ".join(pieces) + "."

    bend: tuple[str, ...] = ()
    rate = min(1.0, params.base_bend * float(
        bend_multiplier(author.agent_class, author.operated_by)
    ))
    if rate > 0 and rng.random() < rate:
        bend = (rng.choice(spec.lexicons.bend_maneuvers),)

    mention_handles = tuple(
        spec.actor(actor_id).screen_name for actor_id in action.mentions
    )
    return PromptBundle(
        system=params.system_prompt,
        persona=_persona_text(
            author.display_name,
            author.screen_name,
            author.agent_class,
            author.tone,
            identity_bits,
        ),
        narrative=narrative.description,
        history=history.recent(narrative.id),
        bend_directives=bend,
        specifics=_requirement_lines(
            author.agent_class,
            author.tone,
            narrative,
            spec.lexicons,
            mention_handles,
            target.text if target is not None else None,
            action.kind if target is not None else None,
        ),
    )


# ---------------------------------------------------------------------------
# Post realization
# ---------------------------------------------------------------------------

@dataclass
class PostFactory:
    """Allocates ids and timestamps; the id base is derived from the run seed."""

    start_time: datetime
    id_base: int
    _counter: int = field(default=0)

    def next_id(self) -> str:
        self._counter += 1
        return str(self.id_base + self._counter)

    def stamp(self, timestep: int, rng: Random, not_before: int | None = None) -> tuple[datetime, int]:
        lo = 0 if not_before is None else min(not_before, 3599)
        offset = rng.randint(lo, 3599)
        return self.start_time + timedelta(hours=timestep, seconds=offset), offset


def generate_post(
    action: PlannedAction,
    bundle: PromptBundle | None,
    backend: TextBackend,
    rng: Random,
    *,
    factory: PostFactory,
    lexicons: Lexicons,
    params: ContentParams,
    author_screen: str,
    author_is_bot: bool,
    agent_class: AgentClass,
    resolve_mention: Callable[[str], str | None],
    target: Post | None = None,
    log: list[dict] | None = None,
    source: str = "planned",
) -> Post | None:
    """Realize one planned action as a post, or None if the backend gave up.

    Retweets copy the target text and entities verbatim. Generated text that
    still violates class constraints after the configured regeneration
    attempts is repaired in place and logged.
    """
    if action.kind is ActionKind.RETWEET:
        if target is None:
            raise ValueError("retweet needs a target post")
        created_at, offset = factory.stamp(
            action.timestep,
            rng,
            target.second_of_hour if target.timestep == action.timestep else None,
        )
        return Post(
            id=factory.next_id(),
            author_id=action.author_id,
            author_screen=author_screen,
            timestep=action.timestep,
            created_at=created_at,
            second_of_hour=offset,
            kind=ActionKind.RETWEET,
            text=target.text,
            narrative_id=target.narrative_id,
            target_post_id=target.id,
            hashtags=target.hashtags,
            urls=target.urls,
            mentions=target.mentions,
            author_is_bot=author_is_bot,
            source=source,
        )

    if bundle is None:
        raise ValueError("non-retweet actions need a prompt bundle")

    text: str | None = None
    for attempt in range(1 + params.regen_attempts):
        try:
            candidate = backend.generate(bundle)
        except BackendError as exc:
            retries_left = params.max_backend_retries - attempt
            if log is not None:
                log.append({
                    "event": "backend_retry" if retries_left > 0 else "action_dropped",
                    "timestep": action.timestep,
                    "actor": action.author_id,
                    "error": str(exc),
                })
            if retries_left <= 0:
                return None
            continue
        if not enforce_constraints(agent_class, candidate, lexicons):
            text = candidate
            break
        text = candidate  # keep last attempt for repair
        if log is not None and attempt < params.regen_attempts:
            log.append({
                "event": "regeneration",
                "timestep": action.timestep,
                "actor": action.author_id,
                "attempt": attempt + 1,
            })
    if text is None:
        return None
    if enforce_constraints(agent_class, text, lexicons):
        text = repair_text(agent_class, text, lexicons)
        if log is not None:
            log.append({
                "event": "constraint_repair",
                "timestep": action.timestep,
                "actor": action.author_id,
            })

    hashtags, urls, raw_mentions = parse_entities(text)
    mentions: list[str] = []
    for handle in raw_mentions:
        resolved = resolve_mention(handle)
        if resolved is None:
            if log is not None:
                log.append({
                    "event": "mention_unresolved",
                    "timestep": action.timestep,
                    "actor": action.author_id,
                    "handle": handle,
                })
            continue
        if resolved != author_screen and resolved not in mentions:
            mentions.append(resolved)

    created_at, offset = factory.stamp(
        action.timestep,
        rng,
        target.second_of_hour
        if target is not None and target.timestep == action.timestep
        else None,
    )
    narrative_id = (
        target.narrative_id
        if target is not None and action.kind in (ActionKind.QUOTE, ActionKind.REPLY)
        else action.narrative_id
    )
    return Post(
        id=factory.next_id(),
        author_id=action.author_id,
        author_screen=author_screen,
        timestep=action.timestep,
        created_at=created_at,
        second_of_hour=offset,
        kind=action.kind,
        text=text,
        narrative_id=narrative_id,
        target_post_id=target.id if target is not None else None,
        hashtags=hashtags,
        urls=urls,
        mentions=tuple(mentions),
        author_is_bot=author_is_bot,
        source=source,
    )


def repeat_copies(
    original: Post, rng: Random, factory: PostFactory
) -> list[Post]:
    """Verbatim same-timestep copies for a repeater bot original (K in 1..3)."""
    copies = []
    for _ in range(rng.randint(1, 3)):
        created_at, offset = factory.stamp(
            original.timestep, rng, not_before=original.second_of_hour
        )
        copies.append(replace(
            original,
            id=factory.next_id(),
            created_at=created_at,
            second_of_hour=offset,
            source="repeat",
        ))
    return copies


# ---------------------------------------------------------------------------
# Randos
# ---------------------------------------------------------------------------

def _screen_slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]", "", name.lower())


def make_rando(rng: Random, lexicons: Lexicons, rando_id: str) -> RandoActor:
    """Identity draws happen in a fixed order so the profile is reproducible."""
    is_bot_account = rng.random() < 0.5
    agent_class = rng.choice(RANDO_BOT_CLASSES) if is_bot_account else AgentClass.HUMAN
    name = rng.choice(lexicons.rando_names)
    tweets_per_day = rng.randint(0, 3)
    age = rng.randint(21, 40)
    names = [loc for loc, _ in lexicons.rando_locations]
    weights = [w for _, w in lexicons.rando_locations]
    location = rng.choices(names, weights=weights, k=1)[0]
    gender = rng.choice(("female", "male"))
    suffix = rando_id.rsplit("_", 1)[-1]
    return RandoActor(
        id=rando_id,
        display_name=name,
        screen_name=f"{_screen_slug(name)}_{suffix}",
        agent_class=agent_class,
        tweets_per_day=tweets_per_day,
        age=age,
        location=location,
        nationality=location,
        gender=gender,
    )


def _rando_poisson(lam: float, rng: Random) -> int:
    if lam <= 0:
        return 0
    threshold = math.exp(-lam)
    k, p = 0, 1.0
    while True:
        p *= rng.random()
        if p <= threshold:
            return k
        k += 1


def spawn_randos(
    post: Post,
    spec: ScenarioSpec,
    backend: TextBackend,
    params: ContentParams,
    streams: Callable[[int], Random],
    factory: PostFactory,
    history: HistoryIndex,
    next_rando_id: Callable[[], str],
    log: list[dict] | None = None,
) -> list[tuple[RandoActor, Post | None]]:
    """Three ephemeral accounts reacting to an original tweet.

    Each is a bot or human with equal probability; a Poisson draw picks the
    reaction (0 -> nothing, 1 -> retweet, >=2 -> quote), filtered by the
    rando's own capability row (synchronized randos also need a bot author).
    """
    if post.kind is not ActionKind.TWEET:
        raise ValueError("randos spawn from original tweets only")
    narrative = spec.narrative(post.narrative_id)
    results: list[tuple[RandoActor, Post | None]] = []
    for i in range(3):
        rng = streams(i)
        rando = make_rando(rng, spec.lexicons, next_rando_id())
        bucket = _rando_poisson(params.rando_rate, rng)
        caps = capabilities(rando.agent_class)
        wants: ActionKind | None = None
        if bucket == 1 and caps.can_retweet:
            wants = ActionKind.RETWEET
        elif bucket >= 2 and caps.can_quote_reply:
            wants = ActionKind.QUOTE
        if wants is not None and BehaviorFlag.ONLY_INTERACTS_WITH_BOTS in flags(
            rando.agent_class
        ) and not post.author_is_bot:
            wants = None

        if wants is None:
            results.append((rando, None))
            continue

        action = PlannedAction(
            author_id=rando.id,
            timestep=post.timestep,
            slot=0,
            narrative_id=post.narrative_id,
            kind=wants,
            target_post_id=post.id,
        )
        if wants is ActionKind.RETWEET:
            reaction = generate_post(
                action, None, backend, rng,
                factory=factory,
                lexicons=spec.lexicons,
                params=params,
                author_screen=rando.screen_name,
                author_is_bot=rando.is_bot,
                agent_class=rando.agent_class,
                resolve_mention=lambda handle: None,
                target=post,
                log=log,
                source="rando",
            )
        else:
            bundle = PromptBundle(
                system=params.system_prompt,
                persona=_persona_text(
                    rando.display_name,
                    rando.screen_name,
                    rando.agent_class,
                    (),
                    f"You are a passerby account from {rando.location}.",
                ),
                narrative=narrative.description,
                history=history.recent(narrative.id),
                bend_directives=(),
                specifics=_requirement_lines(
                    rando.agent_class,
                    (),
                    narrative,
                    spec.lexicons,
                    (),
                    post.text,
                    ActionKind.QUOTE,
                ),
            )
            reaction = generate_post(
                action, bundle, backend, rng,
                factory=factory,
                lexicons=spec.lexicons,
                params=params,
                author_screen=rando.screen_name,
                author_is_bot=rando.is_bot,
                agent_class=rando.agent_class,
                resolve_mention=lambda handle: None,
                target=post,
                log=log,
                source="rando",
            )
        results.append((rando, reaction))
    return results
