"""Prompt bundle: the six ordered parts every generation request is built from."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class PromptBundle:
    """Parts are always concatenated in field order:
    system, persona, narrative, history, bend directives, specifics.
    """

    system: str
    persona: str
    narrative: str
    history: tuple[str, ...] = ()
    bend_directives: tuple[str, ...] = ()
    specifics: str = ""

    def serialize(self) -> str:
        """Canonical byte-stable form; identical bundles serialize identically."""
        return json.dumps(
            {
                "system": self.system,
                "persona": self.persona,
                "narrative": self.narrative,
                "history": list(self.history),
                "bend_directives": list(self.bend_directives),
                "specifics": self.specifics,
            },
            ensure_ascii=False,
            separators=(",", ":"),
        )

    def user_text(self) -> str:
        parts = [self.persona, self.narrative]
        if self.history:
            parts.append(
                "Recent posts in this conversation:\n"
                + "\n".join(f"- {text}" for text in self.history)
            )
        if self.bend_directives:
            parts.append(
                "Shape the post with these maneuvers: "
                + ", ".join(self.bend_directives)
            )
        if self.specifics:
            parts.append(self.specifics)
        return "\n\n".join(parts)

    def as_messages(self) -> list[dict]:
        """Chat-completion message list (system + combined user content)."""
        return [
            {"role": "system", "content": self.system},
            {"role": "user", "content": self.user_text()},
        ]
