"""Serialize runs: V1-shaped tweet records (NDJSON), edges CSV, manifest.

Records carry the field subset downstream network tooling consumes; field
order is fixed so a run serializes byte-identically. Network nodes are screen
names, which makes the exported edge list recomputable from the NDJSON alone.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .config import SimConfig, config_to_dict
from .content import Post
from .engine import RunResult, UserInfo
from .interactions import ActionKind
from .scenario import ScenarioSpec, serialize_scenario


class CorruptRunError(Exception):
    """A referenced target post is missing from the run."""


_WEEKDAYS = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")
_MONTHS = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
)


def v1_timestamp(moment: datetime) -> str:
    """'Wed Oct 10 20:19:24 +0000 2018' — locale-independent, always UTC."""
    utc = moment.astimezone(timezone.utc)
    return (
        f"{_WEEKDAYS[utc.weekday()]} {_MONTHS[utc.month - 1]} "
        f"{utc.day:02d} {utc.hour:02d}:{utc.minute:02d}:{utc.second:02d} "
        f"+0000 {utc.year}"
    )


def _user_object(info: UserInfo) -> dict:
    return {
        "id_str": info.numeric_id,
        "name": info.display_name,
        "screen_name": info.screen_name,
        "description": info.description,
    }


def _entities(
    post: Post,
    users_by_screen: dict[str, UserInfo],
    extra_mention: UserInfo | None = None,
) -> dict:
    mentions = []
    if extra_mention is not None:
        mentions.append(
            {"screen_name": extra_mention.screen_name, "id_str": extra_mention.numeric_id}
        )
    for screen in post.mentions:
        info = users_by_screen.get(screen)
        if info is None:
            continue
        if extra_mention is not None and info.screen_name == extra_mention.screen_name:
            continue
        mentions.append({"screen_name": info.screen_name, "id_str": info.numeric_id})
    return {
        "hashtags": [{"text": tag} for tag in post.hashtags],
        "urls": [{"expanded_url": url} for url in post.urls],
        "user_mentions": mentions,
    }


def post_to_record(
    post: Post,
    users: dict[str, UserInfo],
    users_by_screen: dict[str, UserInfo],
    posts_by_id: dict[str, Post],
    nested: bool = False,
) -> dict:
    """One V1-shaped record. Nested statuses are emitted one level deep only."""
    author = users[post.author_id]
    record: dict = {
        "created_at": v1_timestamp(post.created_at),
        "id_str": post.id,
        "full_text": post.text,
        "user": _user_object(author),
        "in_reply_to_status_id_str": None,
        "retweeted_status": None,
        "quoted_status": None,
        "entities": _entities(post, users_by_screen),
    }

    if nested or post.target_post_id is None:
        return record

    target = posts_by_id.get(post.target_post_id)
    if target is None:
        raise CorruptRunError(f"target post '{post.target_post_id}' not found")
    target_author = users[target.author_id]
    target_record = post_to_record(target, users, users_by_screen, posts_by_id, nested=True)

    if post.kind is ActionKind.RETWEET:
        record["full_text"] = f"RT @{target_author.screen_name}: {target.text}"
        record["retweeted_status"] = target_record
        record["entities"] = _entities(post, users_by_screen, extra_mention=target_author)
    elif post.kind is ActionKind.QUOTE:
        record["quoted_status"] = target_record
    elif post.kind is ActionKind.REPLY:
        record["in_reply_to_status_id_str"] = target.id
    return record


def run_records(result: RunResult) -> list[dict]:
    users_by_screen = {info.screen_name: info for info in result.users.values()}
    posts_by_id = {post.id: post for post in result.posts}
    return [
        post_to_record(post, result.users, users_by_screen, posts_by_id)
        for post in result.posts
    ]


# ---------------------------------------------------------------------------
# All-communication network
# ---------------------------------------------------------------------------

_EDGE_KINDS = ("retweets", "quotes", "replies", "mentions")


@dataclass(frozen=True)
class CommEdge:
    source: str  # screen names
    target: str
    weight: int
    retweets: int
    quotes: int
    replies: int
    mentions: int


def _edges_from_counts(counts: dict[tuple[str, str], dict[str, int]]) -> list[CommEdge]:
    edges = []
    for (source, target), kinds in sorted(counts.items()):
        weight = sum(kinds.values())
        edges.append(CommEdge(
            source=source,
            target=target,
            weight=weight,
            retweets=kinds["retweets"],
            quotes=kinds["quotes"],
            replies=kinds["replies"],
            mentions=kinds["mentions"],
        ))
    return edges


def _bump(counts: dict, source: str, target: str, kind: str) -> None:
    entry = counts.setdefault((source, target), {k: 0 for k in _EDGE_KINDS})
    entry[kind] += 1


def build_comm_network(posts: list[Post]) -> list[CommEdge]:
    """Directed weighted interaction edges aggregated over the run.

    Retweets/quotes/replies point author -> target author; every explicit
    mention adds a mention edge. Originals (including repeater copies) add
    nothing on their own.
    """
    author_by_post = {post.id: post.author_screen for post in posts}
    counts: dict[tuple[str, str], dict[str, int]] = {}
    kind_field = {
        ActionKind.RETWEET: "retweets",
        ActionKind.QUOTE: "quotes",
        ActionKind.REPLY: "replies",
    }
    for post in posts:
        if post.target_post_id is not None:
            if post.target_post_id not in author_by_post:
                raise CorruptRunError(
                    f"target post '{post.target_post_id}' not found in run"
                )
            _bump(
                counts,
                post.author_screen,
                author_by_post[post.target_post_id],
                kind_field[post.kind],
            )
        for mention in post.mentions:
            if mention != post.author_screen:
                _bump(counts, post.author_screen, mention, "mentions")
    return _edges_from_counts(counts)


def export_network_from_ndjson(path: str | Path) -> list[CommEdge]:
    """Recompute the edge list from emitted records alone.

    The mention the RT prefix injects is the retweet interaction itself, so it
    is skipped; all other user_mentions count as mention edges.
    """
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))

    author_by_id: dict[str, str] = {}
    for record in records:
        author_by_id[record["id_str"]] = record["user"]["screen_name"]

    counts: dict[tuple[str, str], dict[str, int]] = {}
    for record in records:
        source = record["user"]["screen_name"]
        retweeted = record.get("retweeted_status")
        quoted = record.get("quoted_status")
        reply_to = record.get("in_reply_to_status_id_str")
        rt_author = None
        if retweeted is not None:
            rt_author = retweeted["user"]["screen_name"]
            _bump(counts, source, rt_author, "retweets")
        elif quoted is not None:
            _bump(counts, source, quoted["user"]["screen_name"], "quotes")
        elif reply_to is not None:
            if reply_to not in author_by_id:
                raise CorruptRunError(f"reply target '{reply_to}' not found in file")
            _bump(counts, source, author_by_id[reply_to], "replies")
        skipped_rt_mention = False
        for mention in record["entities"]["user_mentions"]:
            screen = mention["screen_name"]
            if rt_author is not None and screen == rt_author and not skipped_rt_mention:
                skipped_rt_mention = True
                continue
            if screen != source:
                _bump(counts, source, screen, "mentions")
    return _edges_from_counts(counts)


def write_edges_csv(edges: list[CommEdge], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["source", "target", "weight"] + list(_EDGE_KINDS))
        for edge in edges:
            writer.writerow([
                edge.source, edge.target, edge.weight,
                edge.retweets, edge.quotes, edge.replies, edge.mentions,
            ])


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def scenario_hash(spec: ScenarioSpec) -> str:
    return hashlib.sha256(serialize_scenario(spec).encode("utf-8")).hexdigest()


def config_hash(config: SimConfig) -> str:
    blob = json.dumps(config_to_dict(config), sort_keys=True).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def build_manifest(result: RunResult, config: SimConfig) -> dict:
    randos_posted = sum(
        1 for p in result.posts if result.users[p.author_id].is_rando
    )
    return {
        "scenario": result.spec.name,
        "scenario_hash": scenario_hash(result.spec),
        "config_hash": config_hash(config),
        "seed": result.seed,
        "backend": config.backend.kind,
        "num_timesteps": result.spec.num_timesteps,
        "post_count": len(result.posts),
        "actors_by_class": result.actors_by_class(),
        "posts_by_class": result.posts_by_class(),
        "randos_spawned": result.randos_spawned,
        "randos_posted": randos_posted,
    }


def emit_run(result: RunResult, config: SimConfig, out_dir: str | Path) -> dict[str, Path]:
    """Write posts.ndjson, edges.csv, run_manifest.json, run_log.ndjson."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "posts": out / "posts.ndjson",
        "edges": out / "edges.csv",
        "manifest": out / "run_manifest.json",
        "log": out / "run_log.ndjson",
    }

    with open(paths["posts"], "w", encoding="utf-8", newline="\n") as fh:
        for record in run_records(result):
            fh.write(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
            fh.write("\n")

    write_edges_csv(build_comm_network(result.posts), paths["edges"])

    with open(paths["manifest"], "w", encoding="utf-8", newline="\n") as fh:
        json.dump(build_manifest(result, config), fh, indent=2, sort_keys=True)
        fh.write("\n")

    with open(paths["log"], "w", encoding="utf-8", newline="\n") as fh:
        for entry in result.log:
            fh.write(json.dumps(entry, ensure_ascii=False, separators=(",", ":")))
            fh.write("\n")

    return paths
