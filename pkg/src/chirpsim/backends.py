"""Text backends: the offline deterministic stub and an OpenAI-compatible client.

The stub is a pure function of the prompt bundle — same bundle, same text,
across processes — so whole runs reproduce bit-for-bit without a network. It
honors the machine-readable requirement lines the prompt assembler writes into
the specifics part (hashtags, mentions, required phrases and links), which is
also what a real model is being asked to do.
"""

from __future__ import annotations

import hashlib
import os
import re
from typing import Protocol

import httpx

from .config import BackendConfig, ConfigError
from .prompts import PromptBundle


class BackendError(Exception):
    """Transport or protocol failure; the caller may retry."""


class TextBackend(Protocol):
    name: str

    def generate(self, bundle: PromptBundle) -> str: ...


_OPENERS = (
    "Honestly?", "Okay so", "Can't stop thinking about this.", "Real talk:",
    "You heard it here:", "Just saying —", "Look,", "Today of all days:",
    "No way around it:", "Everyone seeing this?",
)
_CLOSERS = (
    "Thoughts?", "Pass it on.", "More soon.", "You know I'm right.",
    "Don't look away.", "Stay tuned.", "That's the whole story.", "Believe it.",
)
_BEND_PHRASES = {
    "bridge": "This matters to every community watching.",
    "back": "Standing fully behind this.",
    "explain": "Let me spell out why this matters.",
    "enhance": "And it gets bigger the closer you look.",
}

_TONE_LINE = re.compile(r"^Tone: (.+)$", re.MULTILINE)
_HASHTAG_LINE = re.compile(r"^Include hashtags: (.+)$", re.MULTILINE)
_MENTION_LINE = re.compile(r"^Mention: (.+)$", re.MULTILINE)
_PHRASES_LINE = re.compile(r"^Include at least (\w+) of these phrases: (.+)$", re.MULTILINE)
_LINKS_LINE = re.compile(r"^Include at least (\w+) of these links: (.+)$", re.MULTILINE)
_COUNT_WORDS = {"one": 1, "two": 2, "three": 3}

_URL_RE = re.compile(r"https?://\S+")
URL_DISPLAY_LENGTH = 23  # every link counts as a short-link, like the platform does


def effective_length(text: str) -> int:
    """Code points with each URL counted as a fixed-width short link."""
    stripped = _URL_RE.sub("", text)
    n_urls = len(_URL_RE.findall(text))
    return len(stripped) + n_urls * URL_DISPLAY_LENGTH


class StubBackend:
    """Deterministic template generator used for tests and offline runs."""

    name = "stub"

    def generate(self, bundle: PromptBundle) -> str:
        digest = hashlib.sha256(bundle.serialize().encode("utf-8")).digest()
        pick = lambda pool, i: pool[digest[i] % len(pool)]  # noqa: E731

        gist = bundle.narrative.split(".")[0].strip()
        if len(gist) > 110:
            gist = gist[:107].rstrip() + "..."

        tones = []
        match = _TONE_LINE.search(bundle.specifics)
        if match:
            tones = [t.strip() for t in match.group(1).split(",") if t.strip()]

        words: list[str] = [pick(_OPENERS, 0), gist + "."]
        if tones:
            words.append(f"Feeling {pick(tones, 1)} about it.")
        for directive in bundle.bend_directives:
            words.append(_BEND_PHRASES.get(directive, "Spread the word."))
        if bundle.history and digest[2] % 2 == 0:
            words.append("Seen what everyone's been posting? Exactly this.")
        words.append(pick(_CLOSERS, 3))

        tail: list[str] = []
        match = _MENTION_LINE.search(bundle.specifics)
        if match:
            tail.extend(match.group(1).split())
        match = _PHRASES_LINE.search(bundle.specifics)
        if match:
            needed = _COUNT_WORDS.get(match.group(1), 1)
            phrases = [p.strip() for p in match.group(2).split(";") if p.strip()]
            tail.extend(phrases[:needed])
        match = _HASHTAG_LINE.search(bundle.specifics)
        if match:
            tail.extend(match.group(1).split())
        match = _LINKS_LINE.search(bundle.specifics)
        if match:
            needed = _COUNT_WORDS.get(match.group(1), 1)
            links = match.group(2).split()
            tail.extend(links[:needed])

        tail_text = (" " + " ".join(tail)) if tail else ""
        body = " ".join(words)
        # Trim prose until the required tail fits the length budget.
        while words and effective_length(body + tail_text) > 280:
            words.pop()
            body = " ".join(words)
        return (body + tail_text).strip()


class OpenAICompatibleBackend:
    """Chat-completion client for any OpenAI-compatible endpoint."""

    name = "openai-compatible"

    def __init__(self, config: BackendConfig, transport: httpx.BaseTransport | None = None):
        if not config.endpoint:
            raise ConfigError("openai-compatible backend requires an endpoint")
        self._config = config
        api_key = os.environ.get(config.api_key_env, "")
        headers = {"Content-Type": "application/json"}
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self._client = httpx.Client(
            timeout=config.timeout_s, headers=headers, transport=transport
        )

    def generate(self, bundle: PromptBundle) -> str:
        payload = {
            "model": self._config.model,
            "messages": bundle.as_messages(),
        }
        try:
            response = self._client.post(self._config.endpoint, json=payload)
            response.raise_for_status()
            data = response.json()
            return str(data["choices"][0]["message"]["content"]).strip()
        except httpx.HTTPError as exc:
            raise BackendError(f"chat completion request failed: {exc}") from exc
        except (KeyError, IndexError, ValueError) as exc:
            raise BackendError(f"malformed chat completion response: {exc}") from exc

    def close(self) -> None:
        self._client.close()


def make_backend(
    config: BackendConfig, transport: httpx.BaseTransport | None = None
) -> TextBackend:
    if config.kind == "stub":
        return StubBackend()
    return OpenAICompatibleBackend(config, transport=transport)
