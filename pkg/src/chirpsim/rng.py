"""Deterministic random substreams for a run.

One substream per (purpose, actor), keyed by actor id, so per-actor draw
sequences never depend on how other actors are evaluated; one-shot keyed
streams for ephemeral consumers (rando spawns). Keys are hashed with SHA-256
(never the salted builtin hash) so runs reproduce across processes.
"""

from __future__ import annotations

import hashlib
from random import Random


def derive_seed(seed: int, *labels: object) -> int:
    material = repr((seed,) + tuple(str(x) for x in labels)).encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


class RunRandomness:
    """Factory for the run's random streams."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._cache: dict[tuple[object, ...], Random] = {}

    def stream(self, *labels: object) -> Random:
        """Fresh stream for a one-shot key; nothing is retained."""
        return Random(derive_seed(self.seed, *labels))

    def actor_stream(self, purpose: str, actor_id: str) -> Random:
        """Cached per-(purpose, actor) substream, consumed across timesteps."""
        key = (purpose, actor_id)
        stream = self._cache.get(key)
        if stream is None:
            stream = Random(derive_seed(self.seed, purpose, actor_id))
            self._cache[key] = stream
        return stream
