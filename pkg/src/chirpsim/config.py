"""Run configuration: activation curve, attachment mix, content knobs, backend."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


class ConfigError(Exception):
    pass


DEFAULT_SYSTEM_PROMPT = (
    "You are running a role-playing exercise that helps analysts learn to "
    "recognize manipulation on social media. Stay in character and write one "
    "post of at most 280 characters. Output only the post text."
)


@dataclass(frozen=True)
class ActivationParams:
    p_peak: float = 0.6
    p_base: float = 0.05
    taper_width: int = 2

    def __post_init__(self):
        if not (0 <= self.p_base < self.p_peak <= 1):
            raise ConfigError(
                f"activation requires 0 <= p_base < p_peak <= 1, got "
                f"p_base={self.p_base}, p_peak={self.p_peak}"
            )
        if self.taper_width < 0:
            raise ConfigError("taper_width must be >= 0")


@dataclass(frozen=True)
class AttachmentMix:
    preferential: float = 0.60
    leader: float = 0.30
    random: float = 0.10

    def __post_init__(self):
        total = self.preferential + self.leader + self.random
        if abs(total - 1.0) > 1e-9:
            raise ConfigError(f"attachment mix must sum to 1, got {total}")
        if min(self.preferential, self.leader, self.random) < 0:
            raise ConfigError("attachment mix entries must be >= 0")


@dataclass(frozen=True)
class ContentParams:
    base_bend: float = 0.15          # directive rate before class multipliers
    history_len: int = 3             # few-shot messages carried per narrative
    regen_attempts: int = 2          # regenerations before deterministic repair
    rando_rate: float = 0.8          # Poisson rate for rando reactions
    max_backend_retries: int = 2     # transport retries before dropping an action
    system_prompt: str = DEFAULT_SYSTEM_PROMPT

    def __post_init__(self):
        if not (0 <= self.base_bend <= 1):
            raise ConfigError("base_bend must be in [0, 1]")
        if self.history_len < 0 or self.regen_attempts < 0 or self.rando_rate < 0:
            raise ConfigError("content parameters must be non-negative")


@dataclass(frozen=True)
class BackendConfig:
    kind: str = "stub"               # "stub" | "openai-compatible"
    endpoint: str = ""
    model: str = ""
    api_key_env: str = "OPENAI_API_KEY"
    timeout_s: float = 60.0

    def __post_init__(self):
        if self.kind not in ("stub", "openai-compatible"):
            raise ConfigError(f"unknown backend kind '{self.kind}'")
        if self.kind == "openai-compatible" and not self.endpoint:
            raise ConfigError("openai-compatible backend requires an endpoint")


@dataclass(frozen=True)
class SimConfig:
    activation: ActivationParams = field(default_factory=ActivationParams)
    attachment: AttachmentMix = field(default_factory=AttachmentMix)
    content: ContentParams = field(default_factory=ContentParams)
    backend: BackendConfig = field(default_factory=BackendConfig)


def config_from_dict(data: dict) -> SimConfig:
    try:
        return SimConfig(
            activation=ActivationParams(**data.get("activation", {})),
            attachment=AttachmentMix(**data.get("attachment", {})),
            content=ContentParams(**data.get("content", {})),
            backend=BackendConfig(**data.get("backend", {})),
        )
    except TypeError as exc:
        raise ConfigError(f"bad config key: {exc}") from None


def config_to_dict(config: SimConfig) -> dict:
    return {
        "activation": {
            "p_peak": config.activation.p_peak,
            "p_base": config.activation.p_base,
            "taper_width": config.activation.taper_width,
        },
        "attachment": {
            "preferential": config.attachment.preferential,
            "leader": config.attachment.leader,
            "random": config.attachment.random,
        },
        "content": {
            "base_bend": config.content.base_bend,
            "history_len": config.content.history_len,
            "regen_attempts": config.content.regen_attempts,
            "rando_rate": config.content.rando_rate,
            "max_backend_retries": config.content.max_backend_retries,
            "system_prompt": config.content.system_prompt,
        },
        "backend": {
            "kind": config.backend.kind,
            "endpoint": config.backend.endpoint,
            "model": config.backend.model,
            "api_key_env": config.backend.api_key_env,
            "timeout_s": config.backend.timeout_s,
        },
    }


def load_config(path: str | Path) -> SimConfig:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return config_from_dict(data)
