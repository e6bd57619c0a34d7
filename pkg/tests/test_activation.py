"""Activation curve, post-count sampler, and periodic classes."""

from __future__ import annotations

import math
from random import Random

import numpy as np

from chirpsim.activation import (
    ActivationDecision,
    Trigger,
    activation_probability,
    cyborg_phase,
    first_active_timestep,
    periodic_due,
    sample_post_count,
    select_active_agents,
)
from chirpsim.behavior import CyborgPhase
from chirpsim.config import ActivationParams
from chirpsim.rng import RunRandomness
from chirpsim.scenario import EventSpec, scenario_from_dict

from conftest import build_spec, make_actor, make_scenario

PARAMS = ActivationParams(p_peak=0.6, p_base=0.05, taper_width=2)


def actor_9_17(**kw):
    return build_spec([make_actor("a", **kw)]).actor("a")


def test_inside_window_returns_peak():
    assert activation_probability(actor_9_17(), 11, [], PARAMS) == 0.6


def test_taper_midpoint_matches_interpolation_oracle():
    # Window end is hour 17; the taper runs (17, p_peak) -> (19, p_base).
    oracle = float(np.interp(18, [17, 19], [0.6, 0.05]))
    assert math.isclose(oracle, 0.325)
    assert math.isclose(activation_probability(actor_9_17(), 18, [], PARAMS), oracle)
    # Symmetric before the window: (7, p_base) -> (9, p_peak).
    oracle_before = float(np.interp(8, [7, 9], [0.05, 0.6]))
    assert math.isclose(activation_probability(actor_9_17(), 8, [], PARAMS), oracle_before)


def test_beyond_taper_returns_base():
    assert activation_probability(actor_9_17(), 21, [], PARAMS) == 0.05
    assert activation_probability(actor_9_17(), 3, [], PARAMS) == 0.05


def test_excitement_multiplies_and_clamps():
    event = EventSpec(id="e", label="e", window=(10, 14), excitement=2.0)
    assert activation_probability(actor_9_17(), 11, [event], PARAMS) == 1.0
    mild = EventSpec(id="m", label="m", window=(10, 14), excitement=1.5)
    assert math.isclose(
        activation_probability(actor_9_17(), 11, [mild], PARAMS), 0.9
    )
    # Outside the event window the multiplier does not apply.
    assert activation_probability(actor_9_17(), 15, [event], PARAMS) == 0.6


def test_curve_is_monotone_from_window_and_bounded():
    actor = actor_9_17()
    probs = [activation_probability(actor, t, [], PARAMS) for t in range(24)]
    assert all(0 <= p <= 1 for p in probs)
    # Distance from the 9..17 window grows 17->19 and 8->7; probability must not rise.
    assert probs[17] >= probs[18] >= probs[19] >= probs[20]
    assert probs[9] >= probs[8] >= probs[7] >= probs[6]


def test_chaos_bot_ignores_the_clock():
    chaos = actor_9_17(agent_class="chaos_bot")
    for hour in (3, 11, 18, 23):
        assert activation_probability(chaos, hour, [], PARAMS) == 0.6
    event = EventSpec(id="e", label="e", window=(0, 23), excitement=2.0)
    assert activation_probability(chaos, 3, [event], PARAMS) == 1.0


def test_window_wrapping_past_midnight():
    actor = actor_9_17(active_hours=[[22, 2]])
    assert activation_probability(actor, 23, [], PARAMS) == 0.6
    assert activation_probability(actor, 1, [], PARAMS) == 0.6
    assert math.isclose(activation_probability(actor, 3, [], PARAMS), 0.325)


def test_per_day_active_hours_override():
    spec = build_spec(
        [make_actor("a", active_hours_by_day={"1": [[18, 22]]})], num_timesteps=48
    )
    actor = spec.actor("a")
    assert activation_probability(actor, 11, [], PARAMS) == 0.6   # day 0: 9-17
    assert activation_probability(actor, 24 + 11, [], PARAMS) == 0.05  # day 1 overridden
    assert activation_probability(actor, 24 + 20, [], PARAMS) == 0.6


def test_post_count_respects_bounds():
    rng = Random(7)
    actor = actor_9_17(posts_min=0, posts_max=3)
    draws = {sample_post_count(actor, rng) for _ in range(2000)}
    assert draws == {1, 2, 3}


def test_post_count_degenerate_interval():
    rng = Random(7)
    actor = actor_9_17(posts_min=2, posts_max=2)
    assert {sample_post_count(actor, rng) for _ in range(50)} == {2}


def _truncated_poisson_mean(lam: float, lo: int, hi: int) -> float:
    probs = [math.exp(-lam) * lam**k / math.factorial(k) for k in range(hi + 1)]
    z = sum(probs[lo:])
    return sum(k * probs[k] for k in range(lo, hi + 1)) / z


def test_post_count_matches_truncated_poisson_oracle():
    # (posts 0..4): human draws Poisson(2) on [1,4], bot Poisson(4) on [1,8].
    human = actor_9_17(posts_min=0, posts_max=4)
    bot = build_spec([make_actor("b", "general_bot", posts_min=0, posts_max=4)]).actor("b")
    rng = Random(11)
    n = 100_000
    human_mean = sum(sample_post_count(human, rng) for _ in range(n)) / n
    bot_mean = sum(sample_post_count(bot, rng) for _ in range(n)) / n
    assert math.isclose(human_mean, _truncated_poisson_mean(2.0, 1, 4), rel_tol=0.01)
    assert math.isclose(bot_mean, _truncated_poisson_mean(4.0, 1, 8), rel_tol=0.01)
    # The truncation floor max(1, .) biases this config's ratio below 2.
    assert math.isclose(
        bot_mean / human_mean,
        _truncated_poisson_mean(4.0, 1, 8) / _truncated_poisson_mean(2.0, 1, 4),
        rel_tol=0.02,
    )


def test_cyborg_post_count_follows_phase():
    cyborg = build_spec(
        [make_actor("c", "cyborg", posts_min=2, posts_max=2, period_hours=4)]
    ).actor("c")
    rng = Random(3)
    assert sample_post_count(cyborg, rng, CyborgPhase.HUMAN) == 2
    assert sample_post_count(cyborg, rng, CyborgPhase.BOT) == 4


def test_periodic_due_schedule():
    actor = build_spec(
        [make_actor("an", "announcer_bot", period_hours=2)]
    ).actor("an")
    due_hours = [t for t in range(24) if periodic_due(actor, t)]
    assert due_hours == [9, 11, 13, 15, 17]
    assert not periodic_due(actor, 10)


def test_periodic_daily_over_three_days():
    actor = build_spec(
        [make_actor("an", "announcer_bot", period_hours=24)], num_timesteps=72
    ).actor("an")
    due = [t for t in range(72) if periodic_due(actor, t)]
    assert due == [9, 33, 57]  # enumeration oracle: once per simulated day
    assert first_active_timestep(actor) == 9


def test_periodic_contract_violation():
    human = actor_9_17()
    try:
        periodic_due(human, 9)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for non-periodic class")


def test_cyborg_phase_flips_each_due_tick():
    actor = build_spec(
        [make_actor("c", "cyborg", period_hours=2)], num_timesteps=48
    ).actor("c")
    due = [t for t in range(48) if periodic_due(actor, t)]
    phases = [cyborg_phase(actor, t) for t in due]
    assert phases[0] is CyborgPhase.BOT
    assert all(a is not b for a, b in zip(phases, phases[1:]))


def test_select_yields_nothing_at_zero_probability():
    spec = build_spec([make_actor("a"), make_actor("b")])
    params = ActivationParams(p_peak=0.6, p_base=0.0, taper_width=0)
    decisions = select_active_agents(spec, 3, params, RunRandomness(1))
    assert decisions == []


def test_select_binomial_rate():
    actors = [make_actor(f"a{i}") for i in range(1000)]
    spec = build_spec(actors)
    decisions = select_active_agents(spec, 11, PARAMS, RunRandomness(5))
    # Binomial oracle: n=1000, p=0.6 -> sigma ~ 15.5; allow 3 sigma.
    assert abs(len(decisions) - 600) <= 3 * math.sqrt(1000 * 0.6 * 0.4)
    assert all(d.trigger is Trigger.PEAK_SAMPLE for d in decisions)
    assert all(d.num_posts >= 1 for d in decisions)


def test_off_peak_activations_carry_off_peak_trigger():
    actors = [make_actor(f"a{i}") for i in range(400)]
    spec = build_spec(actors)
    decisions = select_active_agents(spec, 3, PARAMS, RunRandomness(13))
    assert decisions  # p_base 0.05 over 400 actors practically guarantees hits
    assert all(d.trigger is Trigger.OFF_PEAK_SAMPLE for d in decisions)


def test_select_preserves_actor_order_and_determinism():
    actors = [make_actor(f"a{i}") for i in range(50)]
    spec = build_spec(actors)
    first = select_active_agents(spec, 11, PARAMS, RunRandomness(42))
    second = select_active_agents(spec, 11, PARAMS, RunRandomness(42))
    assert first == second
    order = [d.actor_id for d in first]
    assert order == sorted(order, key=lambda a: int(a[1:]))


def test_periodic_bypasses_probability_draw():
    data = make_scenario(
        [make_actor("an", "announcer_bot", period_hours=4)],
    )
    spec = scenario_from_dict(data)
    params = ActivationParams(p_peak=0.6, p_base=0.0, taper_width=0)
    decisions = select_active_agents(spec, 9, params, RunRandomness(0))
    assert len(decisions) == 1
    decision = decisions[0]
    assert isinstance(decision, ActivationDecision)
    assert decision.trigger is Trigger.PERIODIC


def test_posts_max_zero_actor_never_selected():
    spec = build_spec([make_actor("a", posts_min=0, posts_max=0)])
    for t in range(24):
        assert select_active_agents(spec, t, PARAMS, RunRandomness(9)) == []
