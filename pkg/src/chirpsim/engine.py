"""The per-timestep run loop: activate, plan, generate.

Each hour runs the three stages in order. Posts commit in plan order; a
repeater original immediately emits its verbatim copies, and every committed
original tweet immediately spawns its three randos. With a deterministic
backend the entire run is a pure function of (scenario, config, seed).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .activation import select_active_agents
from .backends import TextBackend, make_backend
from .behavior import AgentClass, BehaviorFlag, PERSONA, flags
from .config import SimConfig
from .content import (
    HistoryIndex,
    Post,
    PostFactory,
    RandoActor,
    assemble_prompt,
    generate_post,
    repeat_copies,
    spawn_randos,
)
from .interactions import ActionKind, PostIndex, build_timestep_plan
from .rng import RunRandomness, derive_seed
from .scenario import ScenarioSpec


@dataclass(frozen=True)
class UserInfo:
    numeric_id: str
    display_name: str
    screen_name: str
    description: str
    agent_class: AgentClass
    is_rando: bool = False


@dataclass
class RunResult:
    spec: ScenarioSpec
    seed: int
    posts: list[Post] = field(default_factory=list)
    users: dict[str, UserInfo] = field(default_factory=dict)  # author_id -> info
    log: list[dict] = field(default_factory=list)
    activations: list[int] = field(default_factory=list)  # per timestep
    randos_spawned: int = 0

    def posts_by_class(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for post in self.posts:
            cls = self.users[post.author_id].agent_class.value
            counts[cls] = counts.get(cls, 0) + 1
        return dict(sorted(counts.items()))

    def actors_by_class(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for actor in self.spec.actors:
            counts[actor.agent_class.value] = counts.get(actor.agent_class.value, 0) + 1
        return dict(sorted(counts.items()))


def simulate_run(
    spec: ScenarioSpec,
    config: SimConfig,
    seed: int,
    backend: TextBackend | None = None,
) -> RunResult:
    if backend is None:
        backend = make_backend(config.backend)
    rng = RunRandomness(seed)
    factory = PostFactory(
        start_time=spec.start_time,
        id_base=10**15 + derive_seed(seed, "post-id-base") % (9 * 10**14),
    )
    history = HistoryIndex(config.content.history_len)
    index = PostIndex()
    result = RunResult(spec=spec, seed=seed)

    resolver: dict[str, str] = {}  # lowercased handle -> canonical screen name
    for i, actor in enumerate(spec.actors):
        result.users[actor.id] = UserInfo(
            numeric_id=str(1_000_000 + i),
            display_name=actor.display_name,
            screen_name=actor.screen_name,
            description=PERSONA[actor.agent_class].capitalize() + ".",
            agent_class=actor.agent_class,
        )
        resolver[actor.screen_name.lower()] = actor.screen_name

    rando_seq = 0

    def next_rando_id() -> str:
        nonlocal rando_seq
        rando_seq += 1
        return f"rando_{rando_seq:06d}"

    def register_rando(rando: RandoActor) -> None:
        seq = int(rando.id.rsplit("_", 1)[-1])
        result.users[rando.id] = UserInfo(
            numeric_id=str(1_000_000 + len(spec.actors) + seq),
            display_name=rando.display_name,
            screen_name=rando.screen_name,
            description=f"{PERSONA[rando.agent_class].capitalize()}. "
            f"{rando.location}, age {rando.age}.",
            agent_class=rando.agent_class,
            is_rando=True,
        )
        resolver.setdefault(rando.screen_name.lower(), rando.screen_name)

    def commit(post: Post, record_history: bool) -> None:
        result.posts.append(post)
        index.add(post)
        if record_history and post.kind is not ActionKind.RETWEET:
            history.record(post.narrative_id, post.text)

    for timestep in range(spec.num_timesteps):
        index.advance(timestep)
        decisions = select_active_agents(spec, timestep, config.activation, rng)
        result.activations.append(len(decisions))
        plan = build_timestep_plan(
            decisions, spec, index, config.attachment, rng, result.log
        )

        for action in plan:
            actor = spec.actor(action.author_id)
            stream = rng.actor_stream("content", action.author_id)
            target = index.get(action.target_post_id) if action.target_post_id else None
            if action.target_post_id is not None and target is None:
                # Target was planned but its post never materialized (dropped).
                result.log.append({
                    "event": "target_missing",
                    "timestep": timestep,
                    "actor": action.author_id,
                    "target": action.target_post_id,
                })
                continue
            bundle = None
            if action.kind is not ActionKind.RETWEET:
                bundle = assemble_prompt(
                    action, spec, history, stream, config.content, target
                )
            post = generate_post(
                action,
                bundle,
                backend,
                stream,
                factory=factory,
                lexicons=spec.lexicons,
                params=config.content,
                author_screen=actor.screen_name,
                author_is_bot=actor.is_bot,
                agent_class=actor.agent_class,
                resolve_mention=lambda handle: resolver.get(handle.lower()),
                target=target,
                log=result.log,
            )
            if post is None:
                continue
            commit(post, record_history=True)

            fresh_tweets = [post] if post.kind is ActionKind.TWEET else []
            if (
                post.kind is ActionKind.TWEET
                and BehaviorFlag.REPEATS_OWN_TWEETS in flags(actor.agent_class)
            ):
                for copy in repeat_copies(post, stream, factory):
                    commit(copy, record_history=False)
                    fresh_tweets.append(copy)

            for tweet in fresh_tweets:
                reactions = spawn_randos(
                    tweet,
                    spec,
                    backend,
                    config.content,
                    streams=lambda i, _pid=tweet.id: rng.stream("rando", _pid, i),
                    factory=factory,
                    history=history,
                    next_rando_id=next_rando_id,
                    log=result.log,
                )
                result.randos_spawned += len(reactions)
                for rando, reaction in reactions:
                    register_rando(rando)
                    if reaction is not None:
                        commit(reaction, record_history=True)

    return result
