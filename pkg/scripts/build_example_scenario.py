#!/usr/bin/env python3
"""Generate the bundled 3-day song-contest scenario.

Produces src/chirpsim/scenarios/aurasight.scenario.json: a fictional pop
culture episode where a star from a large country (Odria) wins the national
final of its small neighbor (Ethal), splitting fans, nationalists, press,
bot networks, and dredgers across 18 groups and three event-driven days.

The output is deterministic; rerunning the script reproduces the file
byte-for-byte. Group compositions (class and role counts) are asserted at the
bottom, and the result must validate with zero errors and zero warnings.
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chirpsim.scenario import parse_scenario, scenario_from_dict, serialize_scenario
from chirpsim.validation import Severity, validate

OUT_PATH = Path(__file__).resolve().parents[1] / "src/chirpsim/scenarios/aurasight.scenario.json"

# Group ids.
OF = "OliverFans"
OFOB = "OliverFansOnlyBots"
EF = "EthalianFans"
EFOB = "EthalianFansOnlyBots"
EN = "EthalianNationalists"
ENB = "ENationalistBots"
ES = "EthalianSingers"
ESAB = "EthalianSingersAndBots"
OLIVER = "Oliver"
OAB = "OliverAndBots"
ACA = "AgencyCultureArt"
ACAS = "ACASystem"
TC = "TheCritical"
CS = "CriticalSystem"
VV = "Viviblog"
VVS = "ViviblogSystem"
DR = "Dredgers"
DOB = "DredgersOnlyBots"

GROUP_ORDER = [ES, ACA, TC, ENB, ESAB, EN, OLIVER, DOB, VVS, EFOB, VV, OF, ACAS, CS, OFOB, DR, OAB, EF]

# Class/role composition of every group (full members include leaders).
COMPOSITION: dict[str, dict[str, dict[str, int]]] = {
    ES: {"full": {"human": 2}, "source": {}},
    ACA: {"full": {"organization": 1}, "source": {"human": 1}},
    TC: {"full": {"organization": 1}, "source": {}},
    ENB: {
        "full": {"synchronized_bot": 1},
        "source": {
            "human": 1, "bridging_bot": 2, "content_generation_bot": 1,
            "amplifier_bot": 1, "chaos_bot": 1, "repeater_bot": 1,
            "social_influence_bot": 1, "news_bot": 2, "conversational_bot": 1,
            "engagement_generation_bot": 1, "information_correction_bot": 1,
            "cyborg": 1, "announcer_bot": 1, "genre_specific_bot": 1,
        },
    },
    ESAB: {"full": {"engagement_generation_bot": 1, "cyborg": 1}, "source": {"human": 2}},
    EN: {
        "full": {
            "human": 25, "conversational_bot": 3, "engagement_generation_bot": 1,
            "bridging_bot": 3, "content_generation_bot": 1, "amplifier_bot": 2,
            "chaos_bot": 2, "repeater_bot": 1, "social_influence_bot": 1,
            "information_correction_bot": 1, "cyborg": 1, "announcer_bot": 1,
            "genre_specific_bot": 1,
        },
        "source": {
            "organization": 1, "content_generation_bot": 1, "cyborg": 1,
            "synchronized_bot": 1, "news_bot": 2,
        },
    },
    OLIVER: {"full": {"human": 1}, "source": {}},
    DOB: {
        "full": {"synchronized_bot": 1},
        "source": {
            "chaos_bot": 2, "content_generation_bot": 2, "repeater_bot": 1,
            "announcer_bot": 1, "information_correction_bot": 2,
            "engagement_generation_bot": 1, "genre_specific_bot": 1, "cyborg": 1,
            "conversational_bot": 1, "amplifier_bot": 1, "bridging_bot": 1,
            "news_bot": 1,
        },
    },
    VVS: {
        "full": {"content_generation_bot": 1, "announcer_bot": 1, "cyborg": 1, "news_bot": 1},
        "source": {"organization": 1},
    },
    EFOB: {
        "full": {"synchronized_bot": 1},
        "source": {
            "repeater_bot": 2, "engagement_generation_bot": 1, "chaos_bot": 1,
            "conversational_bot": 2, "content_generation_bot": 2, "news_bot": 1,
            "amplifier_bot": 1, "announcer_bot": 1, "cyborg": 1, "bridging_bot": 1,
            "genre_specific_bot": 1, "information_correction_bot": 1,
        },
    },
    VV: {"full": {"organization": 1}, "source": {"human": 3}},
    OF: {
        "full": {
            "human": 28, "content_generation_bot": 2, "chaos_bot": 1,
            "information_correction_bot": 1, "amplifier_bot": 2,
            "conversational_bot": 2, "announcer_bot": 1, "repeater_bot": 1,
            "cyborg": 1, "social_influence_bot": 1, "genre_specific_bot": 2,
            "bridging_bot": 2, "engagement_generation_bot": 2,
        },
        "source": {
            "human": 1, "organization": 2, "content_generation_bot": 1,
            "engagement_generation_bot": 1, "news_bot": 4, "synchronized_bot": 1,
            "announcer_bot": 2, "cyborg": 2, "repeater_bot": 1,
        },
    },
    ACAS: {
        "full": {"news_bot": 2, "announcer_bot": 1, "repeater_bot": 1, "cyborg": 1},
        "source": {"organization": 1},
    },
    CS: {
        "full": {"content_generation_bot": 1, "cyborg": 1, "news_bot": 2},
        "source": {"organization": 1},
    },
    OFOB: {
        "full": {"synchronized_bot": 1},
        "source": {
            "content_generation_bot": 2, "chaos_bot": 1, "information_correction_bot": 1,
            "amplifier_bot": 2, "conversational_bot": 2, "announcer_bot": 1,
            "repeater_bot": 1, "cyborg": 1, "social_influence_bot": 1, "news_bot": 1,
            "genre_specific_bot": 2, "bridging_bot": 1, "engagement_generation_bot": 1,
        },
    },
    DR: {
        "full": {
            "dredger": 20, "chaos_bot": 2, "content_generation_bot": 2,
            "repeater_bot": 1, "announcer_bot": 1, "information_correction_bot": 2,
            "engagement_generation_bot": 1, "genre_specific_bot": 1, "cyborg": 1,
            "conversational_bot": 1, "amplifier_bot": 1, "bridging_bot": 1,
        },
        "source": {"news_bot": 1, "synchronized_bot": 1},
    },
    OAB: {"full": {"engagement_generation_bot": 1, "news_bot": 1}, "source": {"human": 1}},
    EF: {
        "full": {
            "human": 25, "repeater_bot": 2, "engagement_generation_bot": 1,
            "chaos_bot": 1, "conversational_bot": 5, "content_generation_bot": 2,
            "bridging_bot": 2, "amplifier_bot": 1, "cyborg": 2,
            "genre_specific_bot": 1, "information_correction_bot": 1,
        },
        "source": {
            "human": 2, "organization": 1, "content_generation_bot": 1,
            "announcer_bot": 1, "engagement_generation_bot": 1, "cyborg": 1,
            "news_bot": 2, "synchronized_bot": 1,
        },
    },
}

# Actors that live in several groups: principals, the synchronized bots
# (home bot group + source seat in the matching human group), and the
# bridging/conversational bots whose classes require multiple groups.
SHARED_ACTORS: list[tuple[str, str, str, list[tuple[str, str]]]] = [
    # (actor id, display name, class, [(group, role), ...])
    ("oliver", "Oliver", "human",
     [(OLIVER, "full"), (ACA, "source"), (OF, "source"), (OAB, "source"), (VV, "source")]),
    ("ezekiel", "Ezekiel", "human",
     [(ES, "full"), (ESAB, "source"), (VV, "source"), (EF, "source")]),
    ("ella", "Ella", "human",
     [(ES, "full"), (ESAB, "source"), (VV, "source"), (EF, "source")]),
    ("agency_culture_art", "Agency for Odrian Culture and Art", "organization",
     [(ACA, "full"), (ACAS, "source"), (OF, "source")]),
    ("viviblog", "Viviblog", "organization",
     [(VV, "full"), (VVS, "source"), (OF, "source"), (EF, "source")]),
    ("the_critical", "The Critical", "organization",
     [(TC, "full"), (CS, "source"), (EN, "source")]),
    ("en_figurehead", "Vetra Kolhan", "human",
     [(EN, "leader"), (ENB, "source")]),
    ("sync_enb", "Northern Echo Relay", "synchronized_bot",
     [(ENB, "full"), (EN, "source")]),
    ("sync_ofob", "Aura Signal Mirror", "synchronized_bot",
     [(OFOB, "full"), (OF, "source")]),
    ("sync_efob", "Ethal Wave Repost", "synchronized_bot",
     [(EFOB, "full"), (EF, "source")]),
    ("sync_dob", "Deal Drop Relay", "synchronized_bot",
     [(DOB, "full"), (DR, "source")]),
    ("bridge_01", "Threadweaver North", "bridging_bot", [(EN, "full"), (ENB, "source")]),
    ("bridge_02", "Crosspost Beacon", "bridging_bot", [(EN, "full"), (ENB, "source")]),
    ("bridge_03", "Signal Splice", "bridging_bot", [(EN, "full"), (DOB, "source"), (DR, "full")]),
    ("bridge_04", "Aura Crosslink", "bridging_bot", [(OF, "full"), (OFOB, "source")]),
    ("bridge_05", "Fandom Ferry", "bridging_bot", [(OF, "full"), (EF, "full")]),
    ("bridge_06", "Ethal Relay Knot", "bridging_bot", [(EF, "full"), (EFOB, "source")]),
    ("conv_01", "Chatterbox Lumi", "conversational_bot", [(EF, "full"), (ENB, "source")]),
    ("conv_02", "Reply Gardener", "conversational_bot", [(EF, "full"), (DOB, "source")]),
    ("conv_03", "Talkative Tide", "conversational_bot", [(EF, "full"), (EFOB, "source")]),
    ("conv_04", "Banter Engine", "conversational_bot", [(EF, "full"), (EFOB, "source")]),
    ("conv_05", "Dialogue Drift", "conversational_bot", [(EF, "full"), (OFOB, "source"), (EN, "full")]),
    ("conv_06", "Quip Current", "conversational_bot", [(EN, "full"), (DR, "full")]),
    ("conv_07", "Aura Answerer", "conversational_bot", [(OF, "full"), (OFOB, "source")]),
    ("conv_08", "Chorus Chat", "conversational_bot", [(OF, "full"), (EN, "full")]),
]

# Members promoted to leaders: (group, class, how many of its remaining slots).
# Leaders must actually post hourly for the follow-the-leader channel to bite,
# so they are drawn from the human fulls (periodic cyborgs post too rarely).
LEADER_MARKS: dict[str, list[tuple[str, int]]] = {
    OF: [("human", 3)],
    EF: [("human", 3)],
    EN: [("human", 1)],  # plus the shared figurehead, marked explicitly
}

GROUP_TONES: dict[str, list[str]] = {
    OF: ["excited", "happy"], OFOB: ["excited", "happy"], OAB: ["excited", "happy"],
    EF: ["hopeful", "positive"], EFOB: ["hopeful", "positive"],
    ES: ["hopeful", "positive"], ESAB: ["hopeful", "positive"],
    EN: ["angry", "indignant"], ENB: ["angry", "indignant"],
    VV: ["journalistic", "neutral"], VVS: ["journalistic", "neutral"],
    TC: ["journalistic", "nationalistic"], CS: ["journalistic", "nationalistic"],
    ACA: ["patriotic"], ACAS: ["patriotic"],
    DR: ["incoherent", "joking"], DOB: ["incoherent", "joking"],
    OLIVER: ["happy", "positive", "grateful", "professional"],
}

GROUP_SLUG = {
    OF: "ofans", OFOB: "ofbots", EF: "efans", EFOB: "efbots", EN: "enats",
    ENB: "enbots", ES: "esingers", ESAB: "esbots", OLIVER: "oliver", OAB: "oabots",
    ACA: "aca", ACAS: "acabots", TC: "critical", CS: "csbots", VV: "viviblog",
    VVS: "vvbots", DR: "dredgers", DOB: "drbots",
}

CLASS_SLUG = {
    "human": "human", "organization": "org", "general_bot": "genbot",
    "social_influence_bot": "swaybot", "chaos_bot": "chaosbot",
    "amplifier_bot": "ampbot", "repeater_bot": "repbot", "bridging_bot": "bridgebot",
    "synchronized_bot": "syncbot", "announcer_bot": "announcer", "cyborg": "cyborg",
    "information_correction_bot": "factbot", "content_generation_bot": "contentbot",
    "engagement_generation_bot": "hypebot", "self_declared_bot": "declaredbot",
    "genre_specific_bot": "genrebot", "conversational_bot": "chatbot",
    "news_bot": "news", "dredger": "dredger",
}

HUMAN_NAMES = [
    "Maila Torven", "Okko Pellas", "Sirja Vainu", "Teodor Almik", "Lume Kattai",
    "Priit Sovanen", "Anneli Kurvits", "Rasmus Oja", "Katre Lepp", "Madis Verev",
    "Liisa Toom", "Jaak Sarapik", "Tuule Rannak", "Oskar Vilde", "Mirtel Kask",
    "Henrik Paju", "Saara Mets", "Villem Koppel", "Ingrid Talvik", "Margus Laan",
    "Kertu Saar", "Ando Merila", "Piret Kivi", "Tanel Roos", "Helmi Aas",
    "Juhan Pold", "Leena Orav", "Karl Uibo", "Estra Vikat", "Mati Kuusk",
    "Dagny Holm", "Severin Latva", "Ulvi Marran", "Bronis Kettu", "Ilvara Sode",
    "Petras Onnela", "Ruti Valkea", "Stellan Kiuru", "Zanna Verlo", "Haldor Esk",
]

BOT_NAME_BITS = [
    "Pulse", "Echo", "Signal", "Beacon", "Relay", "Circuit", "Spark", "Wire",
    "Current", "Chorus", "Drift", "Vector", "Prism", "Lattice", "Mosaic", "Nova",
]

PERIODS_ANNOUNCER = [3, 4, 6]
PERIODS_CYBORG = [6, 8, 12]


def build_actors_and_groups() -> tuple[list[dict], list[dict]]:
    actors: dict[str, dict] = {}
    memberships: dict[str, list[tuple[str, str]]] = {g: [] for g in GROUP_ORDER}
    remaining = {
        g: {role: Counter(COMPOSITION[g][role]) for role in ("full", "source")}
        for g in GROUP_ORDER
    }
    announcer_i = cyborg_i = human_i = bot_i = 0

    def consume(group: str, role: str, cls: str) -> None:
        bucket = remaining[group]["full" if role == "leader" else role]
        if bucket[cls] <= 0:
            raise AssertionError(f"no remaining {role} {cls} slot in {group}")
        bucket[cls] -= 1

    def base_actor(actor_id: str, display: str, cls: str, home: str) -> dict:
        nonlocal announcer_i, cyborg_i
        actor = {
            "id": actor_id,
            "display_name": display,
            "screen_name": actor_id,
            "agent_class": cls,
            "active_hours": [[9, 17]],
            "posts_min": 0,
            "posts_max": 3,
            "tone": GROUP_TONES[home],
        }
        if cls == "organization":
            actor["posts_max"] = 2
        if cls == "announcer_bot":
            actor.update(posts_min=1, posts_max=2,
                         period_hours=PERIODS_ANNOUNCER[announcer_i % 3])
            announcer_i += 1
        if cls == "cyborg":
            actor.update(posts_min=1, posts_max=3,
                         period_hours=PERIODS_CYBORG[cyborg_i % 3])
            cyborg_i += 1
        if cls == "dredger":
            actor["operated_by"] = "human"
        return actor

    for actor_id, display, cls, seats in SHARED_ACTORS:
        home = seats[0][0]
        actor = base_actor(actor_id, display, cls, home)
        if actor_id == "oliver":
            actor.update(posts_min=1, identity={"location": "Odria", "nationality": "Odrian"})
        if actor_id in ("ezekiel", "ella"):
            actor.update(posts_min=1, identity={"location": "Ethal", "nationality": "Ethalian"})
        actors[actor_id] = actor
        for group, role in seats:
            consume(group, role, cls)
            memberships[group].append((actor_id, role))

    leader_quota = {
        group: Counter(dict(marks)) for group, marks in LEADER_MARKS.items()
    }

    for group in GROUP_ORDER:
        slug = GROUP_SLUG[group]
        for role in ("full", "source"):
            for cls in sorted(remaining[group][role]):
                count = remaining[group][role][cls]
                for _ in range(count):
                    if cls in ("human", "dredger"):
                        display = HUMAN_NAMES[human_i % len(HUMAN_NAMES)]
                        if human_i >= len(HUMAN_NAMES):
                            display += f" {human_i // len(HUMAN_NAMES) + 1}"
                        human_i += 1
                    else:
                        display = (
                            f"{BOT_NAME_BITS[bot_i % len(BOT_NAME_BITS)]} "
                            f"{BOT_NAME_BITS[(bot_i // 3 + 5) % len(BOT_NAME_BITS)]}"
                            f" {bot_i % 97}"
                        )
                        bot_i += 1
                    n = sum(1 for a in actors.values()
                            if a["id"].startswith(f"{slug}_{CLASS_SLUG[cls]}_"))
                    actor_id = f"{slug}_{CLASS_SLUG[cls]}_{n + 1:02d}"
                    actors[actor_id] = base_actor(actor_id, display, cls, group)
                    seat_role = role
                    if role == "full" and leader_quota.get(group, Counter())[cls] > 0:
                        leader_quota[group][cls] -= 1
                        seat_role = "leader"
                    memberships[group].append((actor_id, seat_role))
                remaining[group][role][cls] = 0

    groups = [
        {"id": g, "members": [{"actor": a, "role": r} for a, r in memberships[g]]}
        for g in GROUP_ORDER
    ]
    return list(actors.values()), groups


# ---------------------------------------------------------------------------
# Narrative timeline: 3 days x (background + event-driven waves)
# ---------------------------------------------------------------------------

def ts(day: int, hour: int) -> int:
    return day * 24 + hour

EVENTS = [
    {"id": "ev1_finals_win", "label": "Oliver wins Ethal's national final",
     "window": [ts(0, 12), ts(0, 16)], "excitement": 2.0},
    {"id": "ev2_pr_statement", "label": "Oliver releases a PR statement",
     "window": [ts(1, 11), ts(1, 16)], "excitement": 2.0},
    {"id": "ev3_confirmation", "label": "Nareth confirms Oliver as Ethal's representative",
     "window": [ts(2, 12), ts(2, 16)], "excitement": 2.0},
]

FULL_RUN = (0, 71)

def N(id, topic, desc, groups, window, ratio, stance, hashtags):
    return {
        "id": id, "topic": topic, "description": desc, "groups": groups,
        "window": list(window), "ratio": ratio, "stance": stance,
        "hashtags": hashtags,
    }

NARRATIVES = [
    # Evergreen background, two per group, full run, ratio 1.
    N("bg_adorable_oliver", "general chatter",
      "Fans of Oliver share adorable clips and candid moments of the star. "
      "Posts gush over small gestures, outfits, and his cat Meowdy. "
      "Messages are warm, playful, and very pro-Oliver.",
      [OF, OFOB], FULL_RUN, 1, "pro", ["Olisight", "Oliknights"]),
    N("bg_fan_art", "general chatter",
      "Fans of Oliver trade fan art, edits, and lyric cards. "
      "Posts compliment each other's work and tease upcoming pieces. "
      "Messages are friendly and very pro-Oliver.",
      [OF, OFOB], FULL_RUN, 1, "pro", ["Oliknights", "AuraSight2030"]),
    N("bg_ethal_pop", "general chatter",
      "Fans of Ethalian singers discuss the state of Ethalian pop in general. "
      "Posts weigh new releases, festival lineups, and local playlists. "
      "Messages are hopeful about the scene and neutral toward Oliver.",
      [EF, EFOB], FULL_RUN, 1, "neutral", ["EthalPop", "SupportLocal"]),
    N("bg_local_gigs", "general chatter",
      "Fans of Ethalian singers report from small local gigs around Ethal. "
      "Posts recount setlists and crowd moments and urge others to attend. "
      "Messages are upbeat and community-minded.",
      [EF, EFOB], FULL_RUN, 1, "neutral", ["SupportLocal", "EthalPop"]),
    N("bg_broad_aurasight", "general chatter",
      "Viviblog covers broad AuraSight 2030 chatter from across the Northern Region. "
      "Posts round up qualifiers, staging rumors, and travel notes for Nareth. "
      "Messages are journalistic and neutral.",
      [VV, VVS], FULL_RUN, 1, "neutral", ["AuraSight2030"]),
    N("bg_culture_desk", "general chatter",
      "Viviblog's culture desk posts short minutes on regional pop culture. "
      "Posts note chart moves, label news, and anniversaries. "
      "Messages are brisk and neutral.",
      [VV, VVS], FULL_RUN, 1, "neutral", ["NorthernPop"]),
    N("bg_critical_pieces", "general chatter",
      "The Critical publishes thought pieces on Ethalian identity and the region's politics. "
      "Posts question trade deals and cultural imports from larger neighbors. "
      "Messages are formal, nationalistic, and wary of Odria.",
      [TC, CS], FULL_RUN, 1, "anti", ["EthalHistory", "OurHistory"]),
    N("bg_letters_editor", "general chatter",
      "The Critical shares letters from readers about everyday Ethalian life. "
      "Posts pick pointed quotes about language, heritage, and being overlooked. "
      "Messages are earnest and proudly Ethalian.",
      [TC, CS], FULL_RUN, 1, "neutral", ["OurHistory"]),
    N("bg_oliver_selfpromo", "general chatter",
      "Oliver, on his official account, posts about rehearsals, thanks, and daily life. "
      "Posts are written in first person with gratitude toward fans everywhere. "
      "Messages are positive and professional.",
      [OLIVER], FULL_RUN, 1, "pro", ["Olisight"]),
    N("bg_rehearsal_diary", "general chatter",
      "Oliver, on his official account, keeps a light rehearsal diary. "
      "Posts mention vocal warmups, song tweaks, and his team's work. "
      "Messages are positive and first-person.",
      [OLIVER], FULL_RUN, 1, "pro", ["AuraSight2030"]),
    N("bg_oliver_promo", "general chatter",
      "Supporter accounts push promo for Oliver, echoing his official messages. "
      "Posts urge fans to stream his single and share milestones. "
      "Messages are enthusiastic and very pro-Oliver.",
      [OAB], FULL_RUN, 1, "pro", ["Olisight", "StreamOliver"]),
    N("bg_fan_drives", "general chatter",
      "Supporter accounts organize fan support drives for Oliver. "
      "Posts coordinate voting reminders, hashtags, and playlist targets. "
      "Messages are upbeat and directive.",
      [OAB], FULL_RUN, 1, "pro", ["StreamOliver"]),
    N("bg_esingers_selfpromo", "general chatter",
      "Ezekiel and Ella post about their music and thank their supporters. "
      "Posts tease a collaboration single and studio sessions. "
      "Messages are hopeful and positive.",
      [ES], FULL_RUN, 1, "neutral", ["ExESongCollab", "NewSingle"]),
    N("bg_tour_prep", "general chatter",
      "Ezekiel and Ella share tour preparation notes and backstage photos. "
      "Posts thank venues and hint at added dates. "
      "Messages are warm and fan-facing.",
      [ES], FULL_RUN, 1, "neutral", ["NewSingle"]),
    N("bg_esingers_promo", "general chatter",
      "Supporter accounts promote Ezekiel and Ella's releases and shows. "
      "Posts push presave links and fan votes for the duo. "
      "Messages are loyal and positive about the Ethalian singers.",
      [ESAB], FULL_RUN, 1, "neutral", ["SupportEzekiel", "NewSingle"]),
    N("bg_stream_team", "general chatter",
      "Supporter accounts run stream-team updates for Ezekiel and Ella. "
      "Posts track chart positions and celebrate small wins. "
      "Messages are chipper and encouraging.",
      [ESAB], FULL_RUN, 1, "neutral", ["SupportEzekiel"]),
    N("bg_odria_promotion", "general chatter",
      "The Agency for Odrian Culture and Art promotes Odrian artists and heritage. "
      "Posts spotlight exhibitions, language courses, and touring performers. "
      "Messages are formal and patriotic.",
      [ACA, ACAS], FULL_RUN, 1, "pro", ["CelebratingOdria"]),
    N("bg_odrian_almanac", "general chatter",
      "The Agency for Odrian Culture and Art shares an almanac of Odrian culture. "
      "Posts mark composer birthdays and folk traditions. "
      "Messages are stately and proud.",
      [ACA, ACAS], FULL_RUN, 1, "pro", ["CelebratingOdria", "OdriaNOliver"]),
    N("bg_dredger_mania", "general chatter",
      "Accounts hijack trending contest phrases to push miracle deals and secret reports. "
      "Posts mash hashtags with clickbait about celebrities and cures. "
      "Messages are incoherent, jokey, and stuffed with links.",
      [DR, DOB], FULL_RUN, 1, "neutral", ["Olisight", "EthalErasure"]),
    N("bg_hot_deals", "general chatter",
      "Accounts push hot-deals roundups riding whatever tag is trending. "
      "Posts promise discounts, leaks, and one weird trick. "
      "Messages are spammy and link-heavy.",
      [DR, DOB], FULL_RUN, 1, "neutral", ["AuraSight2030"]),
    N("bg_nationalists_discussion", "general chatter",
      "Ethalian nationalists discuss overlooked local talent and businesses. "
      "Posts argue that home-grown effort is ignored while imports get applause. "
      "Messages are indignant and protective of Ethal.",
      [EN, ENB], FULL_RUN, 1, "anti", ["EthalPolitics", "SupportLocal", "ILoveEthal"]),
    N("bg_heritage_threads", "general chatter",
      "Ethalian nationalists write threads on Ethalian language and heritage. "
      "Posts celebrate dialect words, old songs, and resistance stories. "
      "Messages are proud and emphatic about Ethal's rich past.",
      [EN, ENB], FULL_RUN, 1, "anti", ["EthalHistory", "ILoveEthal"]),

    # Day 1 pre-event: finals watch-alongs.
    N("d1_oliver_fans_discussion", "national final",
      "Fans of Oliver buzz ahead of Ethal's national final where he is a surprise entrant. "
      "Posts trade predictions, seat photos, and streaming plans. "
      "Messages are excited and very pro-Oliver.",
      [OF, OFOB], (ts(0, 0), ts(0, 23)), 4, "pro", ["Olisight", "EthalFinals2030"]),
    N("d1_ethalian_fans_discussion", "national final",
      "Fans of Ethalian singers rally around Ezekiel and Ella before the national final. "
      "Posts share signs, chants, and voting reminders for the duo. "
      "Messages are hopeful and loyal to the Ethalian singers.",
      [EF, EFOB], (ts(0, 0), ts(0, 23)), 4, "neutral", ["SupportEzekiel", "EthalFinals2030"]),
    N("d1_viviblog_live", "national final",
      "Viviblog liveblogs Ethal's national final from the arena. "
      "Posts log running order, jury notes, and crowd reactions minute by minute. "
      "Messages are journalistic and neutral.",
      [VV, VVS], (ts(0, 9), ts(0, 11)), 5, "neutral", ["EthalFinals2030", "AuraSight2030"]),
    N("d1_oliver_fans_watching", "national final",
      "Fans of Oliver post live as he takes the stage at Ethal's final. "
      "Posts scream over his staging, his vocals, and every camera cut. "
      "Messages are ecstatic and very pro-Oliver.",
      [OF, OFOB], (ts(0, 9), ts(0, 11)), 5, "pro", ["Olisight", "EthalFinals2030"]),
    N("d1_ethalian_fans_watching", "national final",
      "Fans of Ethalian singers post live during Ezekiel and Ella's final performances. "
      "Posts cheer every note and grumble at the jury's cold faces. "
      "Messages are fervent and supportive of the duo.",
      [EF, EFOB], (ts(0, 9), ts(0, 11)), 5, "neutral", ["SupportEzekiel", "EthalFinals2030"]),

    # Day 1, topic: an Odrian wins Ethal's finals.
    N("d1_odria_double_rep", "odrian wins ethal finals",
      "The Agency for Odrian Culture and Art celebrates that Odria is doubly represented at AuraSight. "
      "Posts stress that Oliver's win honors both nations and showcases Odrian artistry abroad. "
      "Messages are formal, patriotic, and very pro-Oliver.",
      [ACA, ACAS], (ts(0, 12), ts(0, 14)), 5, "pro", ["OdriaAtAurasight", "OdriaNOliver"]),
    N("d1_olivers_thanks", "odrian wins ethal finals",
      "Oliver, on his official account, thanks Ethal and its jury for the phenomenal honor of winning the national final. "
      "Posts promise to represent Ethal with everything he has at AuraSight 2030 in Nareth. "
      "Messages are written positively, in first person, with gratitude.",
      [OLIVER], (ts(0, 12), ts(0, 13)), 5, "pro",
      ["Olisight", "ThankYouEthal", "AuraSight2030", "OliLovesEthal"]),
    N("d1_performance_blew_mind", "odrian wins ethal finals",
      "Fans of Oliver rave that his winning performance blew their minds. "
      "Posts replay the high note, the pyro cue, and the standing ovation. "
      "Messages are euphoric and very pro-Oliver.",
      [OF, OFOB], (ts(0, 12), ts(0, 16)), 5, "pro", ["Olisight", "AuraSight2030"]),
    N("d1_celebrating_win", "odrian wins ethal finals",
      "Supporter accounts celebrate Oliver's win in Ethal's final. "
      "Posts push congratulation tags and clip compilations. "
      "Messages are jubilant and very pro-Oliver.",
      [OAB], (ts(0, 12), ts(0, 13)), 5, "pro", ["Olisight", "ThankYouEthal"]),
    N("d1_results_report", "odrian wins ethal finals",
      "Viviblog reports the results of Ethal's national final: a shock win for last-minute entrant Oliver. "
      "Posts carry jury scores, televote splits, and first reactions from both camps. "
      "Messages are journalistic and neutral.",
      [VV, VVS], (ts(0, 12), ts(0, 13)), 5, "neutral", ["EthalFinals2030", "AuraSight2030"]),
    N("d1_evidence_cheated", "odrian wins ethal finals",
      "Ezekiel and Ella hint at evidence that Oliver's entry bent the rules. "
      "Posts question his late registration and ask who approved it. "
      "Messages are wounded but measured, and anti-Oliver.",
      [ES], (ts(0, 13), ts(0, 14)), 5, "anti", ["EthalFinals2030"]),
    N("d1_do_own_research", "odrian wins ethal finals",
      "Supporter accounts of the Ethalian singers urge everyone to do their own research about Oliver's win. "
      "Posts juxtapose registration dates and jury ties and ask leading questions. "
      "Messages are suspicious and anti-Oliver.",
      [ESAB], (ts(0, 13), ts(0, 16)), 5, "anti", ["SupportEzekiel", "EthalFinals2030"]),
    N("d1_supporting_accusations", "odrian wins ethal finals",
      "Fans of Ethalian singers amplify the duo's accusations about the final. "
      "Posts demand the federation audit the result and release the tally. "
      "Messages are angry on the singers' behalf and anti-Oliver.",
      [EF, EFOB], (ts(0, 14), ts(0, 16)), 4, "anti", ["SupportEzekiel", "EthalErasure"]),
    N("d1_no_ethalian_born", "odrian wins ethal finals",
      "Fans of Ethalian singers lament that Ethal has no Ethalian-born representative this year. "
      "Posts ask how a foreign star can carry Ethal's flag at AuraSight. "
      "Messages are bitter and anti-Oliver.",
      [EF, EFOB], (ts(0, 12), ts(0, 15)), 3, "anti", ["EthalAtAurasight", "EthalErasure"]),
    N("d1_singers_were_better", "odrian wins ethal finals",
      "Fans of Ethalian singers insist Ezekiel and Ella simply sang better on the night. "
      "Posts clip side-by-side performances and praise the duo's folklore arrangements. "
      "Messages are partisan for the singers and anti-Oliver.",
      [EF, EFOB], (ts(0, 13), ts(0, 16)), 5, "anti", ["SupportEzekiel"]),
    N("d1_not_first_time", "odrian wins ethal finals",
      "The Critical writes that this is not the first time Odria has taken what is Ethal's. "
      "Posts link the win to the conquest of 1835 and to slights five years ago. "
      "Messages are stern, nationalistic, and anti-Oliver.",
      [TC, CS], (ts(0, 13), ts(0, 16)), 5, "anti", ["EthalHistory", "OurHistory"]),
    N("d1_stay_in_odria", "odrian wins ethal finals",
      "Fans of Ethalian singers and Ethalian nationalists converge on one demand: Oliver should stay in Odria. "
      "Posts say every country should field its own people and Odria has stages enough. "
      "Messages are blunt and anti-Oliver.",
      [EF, EN, ENB, EFOB], (ts(0, 14), ts(0, 16)), 5, "anti", ["EthalErasure", "EthalAtAurasight"]),
    N("d1_culture_suppressed", "odrian wins ethal finals",
      "Ethalian nationalists argue Ethal's culture is being suppressed in its own final. "
      "Posts recount how Ethalian-language entries keep losing airtime to imports. "
      "Messages emphasize anger and powerlessness and are anti-Oliver.",
      [EN, ENB], (ts(0, 13), ts(0, 16)), 4, "anti", ["EthalErasure", "ILoveEthal"]),
    N("d1_wheres_something_books", "odrian wins ethal finals",
      "Accounts spam a mystery about a missing bookstore chain while riding the finals tags. "
      "Posts promise the real story behind the disappearance at a suspicious link. "
      "Messages are baity, incoherent, and link-stuffed.",
      [DR, DOB], (ts(0, 12), ts(0, 16)), 5, "neutral", ["EthalFinals2030"]),

    # Day 1, topic: the song is in Odrian.
    N("d1_beautiful_song", "song in odrian",
      "The Agency for Odrian Culture and Art praises the beauty of Oliver's Odrian-language song. "
      "Posts call the language a treasure and the lyrics poetry for the whole region. "
      "Messages are patriotic and very pro-Oliver.",
      [ACA, ACAS], (ts(0, 14), ts(0, 16)), 5, "pro", ["CelebratingOdria", "OdriaNOliver"]),
    N("d1_odrian_banger", "song in odrian",
      "Fans of Oliver declare his Odrian-language entry an absolute banger. "
      "Posts loop the chorus, translate lines for each other, and start dance clips. "
      "Messages are giddy and very pro-Oliver.",
      [OF, OFOB], (ts(0, 14), ts(0, 16)), 6, "pro", ["Olisight", "OdrianBanger"]),
    N("d1_folklore_missing", "song in odrian",
      "Ezekiel and Ella note their entry carried Ethal's folklore and history from the 1700s, which the winner's song lacks. "
      "Posts mourn the folk instruments and dialect verses that won't be heard in Nareth. "
      "Messages are wistful and anti-Oliver.",
      [ES], (ts(0, 14), ts(0, 16)), 4, "anti", ["EthalAtAurasight"]),
    N("d1_missing_out", "song in odrian",
      "Supporter accounts of the Ethalian singers say AuraSight is missing out on Ezekiel and Ella. "
      "Posts push the duo's single as what Ethal should have sent. "
      "Messages are rueful and anti-Oliver.",
      [ESAB], (ts(0, 14), ts(0, 16)), 5, "anti", ["SupportEzekiel", "NewSingle"]),
    N("d1_not_looking_forward", "song in odrian",
      "Fans of Ethalian singers admit they are not looking forward to AuraSight anymore. "
      "Posts say watching a foreign song under Ethal's flag will sting too much. "
      "Messages are deflated and anti-Oliver.",
      [EF, EFOB], (ts(0, 15), ts(0, 16)), 3, "anti", ["EthalAtAurasight"]),
    N("d1_report_esingers", "song in odrian",
      "Viviblog reports on Ezekiel and Ella's statements about the Odrian-language winning song. "
      "Posts quote both camps and note the federation has not responded. "
      "Messages are journalistic and neutral.",
      [VV, VVS], (ts(0, 15), ts(0, 16)), 5, "neutral", ["EthalFinals2030"]),
    N("d1_foreign_invader", "song in odrian",
      "Ethalian nationalists call Odria a foreign invader returning by other means. "
      "Posts recall 1835 and say the language of the conqueror now fronts Ethal's entry. "
      "Messages emphasize anger and Ethal's rich past, and are anti-Oliver.",
      [EN, ENB], (ts(0, 15), ts(0, 16)), 3, "anti", ["EthalHistory", "EthalErasure"]),
    N("d1_speakeasies", "song in odrian",
      "Accounts push a rumor that secret speakeasies are now open across Ethal. "
      "Posts ride the contest tags with a link to the supposed address list. "
      "Messages are jokey, incoherent, and link-heavy.",
      [DR], (ts(0, 15), ts(0, 16)), 5, "neutral", ["EthalFinals2030"]),

    # Day 2 background waves.
    N("d2_revisiting_performance", "general chatter",
      "Fans of Oliver rewatch and dissect his winning performance the morning after. "
      "Posts rank camera angles and vocal runs and share reaction threads. "
      "Messages are affectionate and very pro-Oliver.",
      [OF, OFOB], (ts(1, 9), ts(1, 11)), 2, "pro", ["Olisight"]),
    N("d2_ella_tour", "general chatter",
      "Fans of Ethalian singers discuss Ella's upcoming tour dates. "
      "Posts compare venues, plan carpools, and speculate about guest spots. "
      "Messages are hopeful and positive about the duo.",
      [EF, EFOB], (ts(1, 9), ts(1, 16)), 2, "neutral", ["SupportEzekiel", "NewSingle"]),

    # Day 2, topic: Oliver wants to find his father.
    N("d2_father_search", "oliver seeks father",
      "Oliver, on his official account, explains that AuraSight is his best shot at finding his estranged Ethalian father. "
      "Posts say the search, not politics, brought him to Ethal's final. "
      "Messages are written positively, in first person, and with feeling.",
      [OLIVER], (ts(1, 11), ts(1, 12)), 5, "pro", ["Olisight", "AuraSight2030"]),
    N("d2_support_search", "oliver seeks father",
      "Supporter accounts urge fans to support Oliver in his search for his father. "
      "Posts frame the run as a family story and ask for kindness. "
      "Messages are tender and very pro-Oliver.",
      [OAB], (ts(1, 12), ts(1, 14)), 5, "pro", ["Olisight", "OliLovesEthal"]),
    N("d2_report_statement", "oliver seeks father",
      "Viviblog reports on Oliver's PR statement about his missing father. "
      "Posts summarize the claims and note what remains unverified. "
      "Messages are journalistic and neutral.",
      [VVS, VV], (ts(1, 11), ts(1, 13)), 5, "neutral", ["AuraSight2030"]),
    N("d2_odrian_soul", "oliver seeks father",
      "The Agency for Odrian Culture and Art says Oliver's devotion to family represents the Odrian soul. "
      "Posts tie his search to Odrian values of kinship and song. "
      "Messages are patriotic and very pro-Oliver.",
      [ACA, ACAS], (ts(1, 12), ts(1, 14)), 5, "pro", ["CelebratingOdria", "OdriaNOliver"]),
    N("d2_good_heart", "oliver seeks father",
      "Fans of Oliver say the statement proves he has a good heart. "
      "Posts share the quote about his father with crying emojis and support tags. "
      "Messages are moved and very pro-Oliver.",
      [OF, OFOB], (ts(1, 12), ts(1, 16)), 4, "pro", ["OliLovesEthal", "Olisight"]),
    N("d2_lying_shame", "oliver seeks father",
      "Fans of Ethalian singers argue Oliver is lying about the father story out of shame. "
      "Posts call the statement damage control for a win that feels stolen. "
      "Messages are scornful and anti-Oliver.",
      [EF, EFOB], (ts(1, 13), ts(1, 16)), 4, "anti", ["EthalErasure"]),
    N("d2_encroach_again", "oliver seeks father",
      "Ethalian nationalists read the statement as Odria trying to encroach on Ethal again. "
      "Posts say sentimental cover stories opened doors for influence before. "
      "Messages are distrustful and anti-Oliver.",
      [EN, ENB], (ts(1, 14), ts(1, 16)), 4, "anti", ["EthalPolitics", "EthalErasure"]),

    # Day 2, topic: Ethal and Odria are 'brothers'.
    N("d2_brothers_statement", "ethal odria brothers",
      "Oliver, on his official account, says Ethal and Odria share a joint intertwined history and are brothers. "
      "Posts express his joy in representing Ethal and his commitment to win for Ethal in Nareth in July 2030. "
      "Messages are written positively and in first person.",
      [OLIVER], (ts(1, 13), ts(1, 16)), 5, "pro", ["OliLovesEthal", "AuraSight2030"]),
    N("d2_singers_odrian_market", "ethal odria brothers",
      "Fans of Oliver cite evidence that Ethalian singers often perform for the Odrian market and earn most of their living from Odrian audiences. "
      "Posts point out that this includes Ezekiel and Ella, who are complaining about Oliver, and say fairness means Ethal should be gracious and support Odrian singers too. "
      "Messages are very pro-Oliver and somewhat anti-Ezekiel and anti-Ella.",
      [OF, OFOB], (ts(1, 14), ts(1, 16)), 4, "pro", ["Olisight", "OdriaNOliver"]),
    N("d2_invasive_language", "ethal odria brothers",
      "Ethalian nationalists discuss how the Odrian language is an invasive alien language to Ethal and its people. "
      "Posts describe how Ethalians were forced to learn Odrian after the conquest of 1835 and emphasize the survival of the Ethalian language. "
      "Messages emphasize anger, unfairness, powerlessness, and Ethal's rich past, and call that period a violent destruction inflicted by Odria.",
      [EN, ENB], (ts(1, 14), ts(1, 16)), 4, "anti", ["EthalHistory", "ILoveEthal"]),
    N("d2_colonization", "ethal odria brothers",
      "The Critical runs a series on Odria's colonization of Ethal and what 'brotherhood' erases. "
      "Posts cite archives from the occupation and rebut the joint-history framing. "
      "Messages are formal, nationalistic, and anti-Oliver.",
      [TC, CS], (ts(1, 14), ts(1, 16)), 4, "anti", ["EthalHistory", "OurHistory"]),
    N("d2_history_repeats", "ethal odria brothers",
      "Ethalian nationalists warn that history repeats itself when Ethal forgets. "
      "Posts line up 1835, the trade deals, and now the contest as one pattern. "
      "Messages are alarmed and anti-Oliver.",
      [EN, ENB], (ts(1, 15), ts(1, 16)), 4, "anti", ["EthalHistory", "EthalPolitics"]),
    N("d2_lineage_testing", "ethal odria brothers",
      "Accounts hawk genetic lineage testing discounts off the back of Oliver's father story. "
      "Posts promise to reveal whether you are secretly Odrian or Ethalian at a link. "
      "Messages are absurd, jokey, and link-stuffed.",
      [DR, DOB], (ts(1, 12), ts(1, 16)), 5, "neutral", ["AuraSight2030"]),

    # Day 3 background waves.
    N("d3_theorycrafting", "general chatter",
      "Fans of Oliver theorycraft what his AuraSight staging and song revamp will look like. "
      "Posts mock up running orders and argue over key changes. "
      "Messages are playful and very pro-Oliver.",
      [OF, OFOB], (ts(2, 9), ts(2, 16)), 2, "pro", ["AuraSight2030", "Olisight"]),
    N("d3_ezekiel_ella_relationship", "general chatter",
      "Fans of Ethalian singers speculate warmly about Ezekiel and Ella's creative partnership. "
      "Posts reread old interviews and celebrate the duo's chemistry. "
      "Messages are fond and positive.",
      [EF, EFOB], (ts(2, 9), ts(2, 16)), 2, "neutral", ["ExESongCollab"]),

    # Day 3, topic: Nareth confirms Oliver.
    N("d3_congratulations_visit", "nareth confirms oliver",
      "The Agency for Odrian Culture and Art congratulates Oliver and invites the region to visit Odria before Nareth. "
      "Posts bundle travel guides with pride in the double representation. "
      "Messages are formal, patriotic, and very pro-Oliver.",
      [ACA, ACAS], (ts(2, 12), ts(2, 14)), 5, "pro", ["CelebratingOdria", "OdriaAtAurasight"]),
    N("d3_thanks_nareth", "nareth confirms oliver",
      "Oliver, on his official account, thanks Nareth and Ethal for confirming him as Ethal's representative. "
      "Posts promise Ethal's flag will fly high on the Nareth stage. "
      "Messages are grateful, professional, and first-person.",
      [OLIVER], (ts(2, 12), ts(2, 13)), 5, "pro", ["ThankYouEthal", "AuraSight2030"]),
    N("d3_support_at_nareth", "nareth confirms oliver",
      "Supporter accounts rally fans to support Oliver at Nareth. "
      "Posts organize watch parties, travel threads, and banner designs. "
      "Messages are energetic and very pro-Oliver.",
      [OAB], (ts(2, 12), ts(2, 15)), 5, "pro", ["Olisight", "AuraSight2030"]),
    N("d3_report_confirmation", "nareth confirms oliver",
      "Viviblog reports Nareth's official confirmation of Oliver as Ethal's representative. "
      "Posts carry the federation statement and reactions from all camps. "
      "Messages are journalistic and neutral.",
      [VVS, VV], (ts(2, 12), ts(2, 14)), 5, "neutral", ["AuraSight2030"]),
    N("d3_deserves_best", "nareth confirms oliver",
      "Fans of Oliver say he deserves the best after days of abuse. "
      "Posts flood support tags and share his kindest fan interactions. "
      "Messages are protective and very pro-Oliver.",
      [OF, OFOB], (ts(2, 12), ts(2, 16)), 4, "pro", ["Olisight", "OliLovesEthal"]),
    N("d3_nareth_no_ethics", "nareth confirms oliver",
      "Fans of Ethalian singers accuse Nareth of having no ethics for waving the result through. "
      "Posts demand the host explain what review, if any, took place. "
      "Messages are furious and anti-Oliver.",
      [EF, EFOB], (ts(2, 13), ts(2, 16)), 4, "anti", ["EthalErasure", "AuraSight2030"]),
    N("d3_five_years_ago", "nareth confirms oliver",
      "The Critical revisits the ugly clash between Ethal and Odria at the contest five years ago. "
      "Posts argue the federation learned nothing since then. "
      "Messages are somber, nationalistic, and anti-Oliver.",
      [TC, CS], (ts(2, 13), ts(2, 16)), 4, "anti", ["OurHistory", "EthalHistory"]),
    N("d3_disqualify_himself", "nareth confirms oliver",
      "Fans of Ethalian singers call on Oliver to disqualify himself for Ethal's dignity. "
      "Posts say stepping aside is the only honorable exit left. "
      "Messages are insistent and anti-Oliver.",
      [EF, EFOB], (ts(2, 14), ts(2, 16)), 4, "anti", ["EthalAtAurasight", "EthalErasure"]),
    N("d3_seeking_legal", "nareth confirms oliver",
      "Ezekiel and Ella announce they are seeking a legal review of the national final. "
      "Posts say their lawyers are preparing a filing over the registration window. "
      "Messages are resolute and anti-Oliver.",
      [ES], (ts(2, 14), ts(2, 16)), 5, "anti", ["SupportEzekiel"]),
    N("d3_crowdfunding_legal", "nareth confirms oliver",
      "Supporter accounts open crowdfunding for the singers' legal battle. "
      "Posts share the donation link and tally milestones hourly. "
      "Messages are urgent and anti-Oliver.",
      [ESAB], (ts(2, 14), ts(2, 16)), 5, "anti", ["SupportEzekiel"]),
    N("d3_evidence_five_years", "nareth confirms oliver",
      "Fans of Ethalian singers and nationalists compile evidence from the incident five years ago. "
      "Posts build timelines claiming Odria has gamed the contest before. "
      "Messages are conspiratorial and anti-Oliver.",
      [EF, EN, ENB, EFOB], (ts(2, 15), ts(2, 16)), 3, "anti", ["EthalHistory", "EthalErasure"]),
    N("d3_trojan_horse", "nareth confirms oliver",
      "The Critical warns that Oliver is a trojan horse for Odrian influence. "
      "Posts argue the song is the wrapping and the politics the payload. "
      "Messages are ominous, nationalistic, and anti-Oliver.",
      [TC, CS], (ts(2, 15), ts(2, 16)), 4, "anti", ["EthalPolitics", "OurHistory"]),
]

LEXICONS = {
    "dredge_words": ["Olisight", "EthalErasure", "AuraSight2030", "OdriaAtAurasight", "EthalFinals2030"],
    "unreliable_domains": [
        "prison-planet-report.example",
        "northern-truth-vault.example",
        "genetiq-dna-deals.example",
        "speakeasy-insider.example",
    ],
    "news_domains": ["viviblog.example", "northern-wire.example", "aurasight-daily.example"],
    "factcheck_domains": ["ethal-factcheck.example", "northfacts.example"],
    "bend_maneuvers": ["bridge", "back", "explain", "enhance"],
}


def main() -> None:
    actors, groups = build_actors_and_groups()
    data = {
        "name": "aurasight",
        "start_time": "2030-07-01T00:00:00+00:00",
        "num_timesteps": 72,
        "actors": actors,
        "groups": groups,
        "events": EVENTS,
        "narratives": NARRATIVES,
        "lexicons": LEXICONS,
    }
    spec = scenario_from_dict(data)

    # Composition must reproduce the intended class/role counts exactly.
    for group in spec.groups:
        for role_name, expected in COMPOSITION[group.id].items():
            got = Counter()
            for m in group.members:
                role = "full" if m.role.value in ("full", "leader") else "source"
                if role == role_name:
                    got[spec.actor(m.actor_id).agent_class.value] += 1
            assert got == Counter(expected), (
                f"{group.id}/{role_name}: {got} != {Counter(expected)}"
            )
    assert len(spec.actors) >= 150, f"only {len(spec.actors)} actors"

    report = validate(spec)
    errors = [e for e in report if e.severity is Severity.ERROR]
    assert not errors, "\n".join(e.message for e in errors)
    assert not report, "\n".join(e.message for e in report)

    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text(serialize_scenario(spec), encoding="utf-8")
    reparsed = parse_scenario(OUT_PATH)
    assert reparsed == spec
    print(f"wrote {OUT_PATH} ({len(spec.actors)} actors, {len(spec.groups)} groups, "
          f"{len(spec.narratives)} narratives)")


if __name__ == "__main__":
    main()
