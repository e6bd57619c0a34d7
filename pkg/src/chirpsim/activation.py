"""Stage 1: decide who acts this hour and how many posts they make.

Activation probability is a plateau with linear tapers: p_peak inside any
active-hours window, decaying linearly to p_base over taper_width hours on
each side, p_base elsewhere. Events multiply the probability while their
window is open (clamped to 1). Announcer bots and cyborgs skip the draw
entirely and post on their fixed period; chaos bots ignore the clock.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Sequence

from .behavior import (
    AgentClass,
    BehaviorFlag,
    CyborgPhase,
    PERIODIC_CLASSES,
    flags,
    post_multiplier,
)
from .config import ActivationParams
from .rng import RunRandomness
from .scenario import ActorSpec, EventSpec, ScenarioSpec


class Trigger(str, Enum):
    PEAK_SAMPLE = "peak_sample"
    OFF_PEAK_SAMPLE = "off_peak_sample"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class ActivationDecision:
    actor_id: str
    timestep: int
    num_posts: int
    trigger: Trigger
    phase: CyborgPhase | None = None


def _covers(window: tuple[int, int], hour: int) -> bool:
    start, end = window
    if start <= end:
        return start <= hour <= end
    return hour >= start or hour <= end  # wraps past midnight


def _window_distance(windows: Sequence[tuple[int, int]], hour: int) -> int:
    """Circular distance in hours to the nearest active window (0 if inside)."""
    best = 24
    for window in windows:
        if _covers(window, hour):
            return 0
        start, end = window
        best = min(best, (start - hour) % 24, (hour - end) % 24)
    return best


def hour_in_active_windows(actor: ActorSpec, timestep: int, start_hour: int = 0) -> bool:
    hour = (start_hour + timestep) % 24
    day = (start_hour + timestep) // 24
    return _window_distance(actor.windows_for_day(day), hour) == 0


def _base_probability(
    actor: ActorSpec, hour: int, day: int, params: ActivationParams
) -> float:
    if BehaviorFlag.ERRATIC in flags(actor.agent_class):
        return params.p_peak
    windows = actor.windows_for_day(day)
    if not windows:
        return params.p_base
    distance = _window_distance(windows, hour)
    if distance == 0:
        return params.p_peak
    if params.taper_width > 0 and distance <= params.taper_width:
        return params.p_peak - (params.p_peak - params.p_base) * distance / params.taper_width
    return params.p_base


def activation_probability(
    actor: ActorSpec,
    timestep: int,
    events: Sequence[EventSpec],
    params: ActivationParams,
    start_hour: int = 0,
) -> float:
    hour = (start_hour + timestep) % 24
    day = (start_hour + timestep) // 24
    base = _base_probability(actor, hour, day, params)
    for event in events:
        if event.covers(timestep):
            base *= event.excitement
    return min(1.0, base)


def _poisson(lam: float, rng: Random) -> int:
    if lam <= 0:
        return 0
    threshold = math.exp(-lam)
    k, p = 0, 1.0
    while True:
        p *= rng.random()
        if p <= threshold:
            return k
        k += 1


def sample_post_count(
    actor: ActorSpec, rng: Random, phase: CyborgPhase | None = None
) -> int:
    """Truncated Poisson draw for the number of posts in one activation.

    λ is the class multiplier times the midpoint of (posts_min, posts_max);
    draws repeat until the result lands in [max(1, scaled min), scaled max].
    """
    multiplier = int(
        post_multiplier(
            actor.agent_class,
            phase if actor.agent_class is AgentClass.CYBORG else None,
            actor.operated_by,
        )
    )
    if actor.posts_max == 0:
        raise ValueError(f"actor '{actor.id}' has posts_max 0 and can never post")
    lam = multiplier * (actor.posts_min + actor.posts_max) / 2
    lo = max(1, multiplier * actor.posts_min)
    hi = multiplier * actor.posts_max
    while True:
        draw = _poisson(lam, rng)
        if lo <= draw <= hi:
            return draw


def first_active_timestep(actor: ActorSpec, start_hour: int = 0, horizon: int = 24 * 366) -> int | None:
    for ts in range(horizon):
        if hour_in_active_windows(actor, ts, start_hour):
            return ts
    return None


def periodic_due(actor: ActorSpec, timestep: int, start_hour: int = 0) -> bool:
    """Whether a periodic actor posts at this timestep.

    Due ticks fall every period_hours from the actor's first active timestep,
    and only while the hour is inside its active windows.
    """
    if actor.agent_class not in PERIODIC_CLASSES:
        raise ValueError(
            f"periodic_due called for non-periodic class {actor.agent_class.value}"
        )
    if actor.period_hours is None:
        raise ValueError(f"actor '{actor.id}' has no period_hours")
    if not hour_in_active_windows(actor, timestep, start_hour):
        return False
    first = first_active_timestep(actor, start_hour, horizon=timestep + 1)
    if first is None:
        return False
    return (timestep - first) % actor.period_hours == 0


def cyborg_phase(actor: ActorSpec, timestep: int, start_hour: int = 0) -> CyborgPhase:
    """Phase a cyborg runs in at the given (due) timestep.

    The first due tick runs in the bot phase; the phase flips on every
    subsequent due tick. Computed from the count of prior due ticks so the
    result never depends on evaluation order.
    """
    prior = sum(
        1 for ts in range(timestep) if periodic_due(actor, ts, start_hour)
    )
    return CyborgPhase.BOT if prior % 2 == 0 else CyborgPhase.HUMAN


def select_active_agents(
    spec: ScenarioSpec,
    timestep: int,
    params: ActivationParams,
    rng: RunRandomness,
) -> list[ActivationDecision]:
    """One Bernoulli draw per non-periodic actor; due periodic actors bypass it.

    Output order equals scenario actor order. Actors whose probability is
    exactly zero consume no randomness (streams are keyed, not shared).
    """
    start_hour = spec.start_time.hour
    hour = (start_hour + timestep) % 24
    day = (start_hour + timestep) // 24
    excitement = 1.0
    for event in spec.events:
        if event.covers(timestep):
            excitement *= event.excitement
    decisions: list[ActivationDecision] = []
    for actor in spec.actors:
        if actor.posts_max == 0:
            continue
        if actor.agent_class in PERIODIC_CLASSES:
            if actor.period_hours is None:
                continue  # validator reports this as an error upstream
            if not periodic_due(actor, timestep, start_hour):
                continue
            phase = (
                cyborg_phase(actor, timestep, start_hour)
                if actor.agent_class is AgentClass.CYBORG
                else None
            )
            stream = rng.actor_stream("act", actor.id)
            decisions.append(
                ActivationDecision(
                    actor_id=actor.id,
                    timestep=timestep,
                    num_posts=sample_post_count(actor, stream, phase),
                    trigger=Trigger.PERIODIC,
                    phase=phase,
                )
            )
            continue

        p = min(1.0, _base_probability(actor, hour, day, params) * excitement)
        if p <= 0.0:
            continue
        stream = rng.actor_stream("act", actor.id)
        if stream.random() >= p:
            continue
        trigger = (
            Trigger.PEAK_SAMPLE
            if _window_distance(actor.windows_for_day(day), hour) == 0
            else Trigger.OFF_PEAK_SAMPLE
        )
        decisions.append(
            ActivationDecision(
                actor_id=actor.id,
                timestep=timestep,
                num_posts=sample_post_count(actor, stream),
                trigger=trigger,
            )
        )
    return decisions
