"""chirpsim: scenario-driven social media post simulation.

Load a declarative scenario (actors, groups, events, timed narratives), run
the hourly activate/plan/generate loop, and emit Twitter-API-V1-shaped post
records plus the weighted all-communication network.
"""

from .behavior import AgentClass, CapabilityRow, capabilities, bend_multiplier, post_multiplier
from .config import SimConfig, load_config
from .engine import RunResult, simulate_run
from .scenario import ScenarioSpec, parse_scenario, serialize_scenario
from .validation import validate

__all__ = [
    "AgentClass",
    "CapabilityRow",
    "RunResult",
    "ScenarioSpec",
    "SimConfig",
    "bend_multiplier",
    "capabilities",
    "load_config",
    "parse_scenario",
    "post_multiplier",
    "serialize_scenario",
    "simulate_run",
    "validate",
]
