"""Seeded planted-signal corpus for demos and end-to-end checks"""
import numpy as np

from reddit_sentiment.corpus.dump import RawComment

POSITIVE_POOL: tuple[str, ...] = (
    "good", "great", "happy", "excellent", "wonderful", "love",
    "safe", "hopeful", "grateful", "relieved", "glad", "thankful",
)  # fmt: skip
NEGATIVE_POOL: tuple[str, ...] = (
    "bad", "terrible", "sad", "awful", "hate", "angry",
    "scared", "worried", "horrible", "frustrated", "miserable", "upset",
)  # fmt: skip
TOPIC_WORDS: tuple[str, ...] = (
    "vaccine", "lockdown", "pandemic", "covid", "booster", "quarantine", "coronavirus",
)  # fmt: skip
FILLER_WORDS: tuple[str, ...] = (
    "the", "people", "government", "today", "week", "province", "hospital", "news",
    "report", "numbers", "cases", "clinic", "appointment", "mask", "rules", "travel",
    "work", "family", "friends", "city", "pharmacy", "doctor", "nurse", "staff", "data",
    "policy", "minister", "update", "schedule", "line", "wait", "site", "online",
    "booking", "weekend", "morning", "evening", "neighbour", "school", "office", "store",
    "plan", "time", "month", "year", "restrictions", "testing", "results", "variant",
    "summer", "we", "they", "it", "was", "is", "after", "before", "with", "for", "at",
)  # fmt: skip

# 2021-01-01T00:00:00Z
COLLECTION_START_UTC = 1609459200
COLLECTION_DAYS = 181


def _body(rng: np.random.Generator, content: list[str], length: int) -> str:
    fillers = rng.choice(FILLER_WORDS, size=max(0, length - len(content))).tolist()
    words = content + fillers
    return " ".join(words[i] for i in rng.permutation(len(words)))


def make_planted_corpus(
    n_messages: int = 2000,
    seed: int = 0,
    outlier_fraction: float = 0.1,
    n_off_topic: int = 0,
    n_bots: int = 0,
    subreddit: str = "canada",
    min_length: int = 15,
    max_length: int = 60,
) -> list[RawComment]:
    """
    Generate a corpus with a known sentiment signal

    In-band messages (min_length..max_length words) carry one topic keyword and two to four
    words from a single sentiment pool, so both scorers agree on them. A fraction of messages
    are length outliers (10 words or fewer, or 250 words or more) holding equally many
    positive and negative pool words; the demo lexicons weigh those pools so that the two
    scorers disagree on every outlier. Off-topic and bot comments are appended to exercise
    the filters.

    Args:
        n_messages: Number of topic messages, outliers included
        seed: Seed of the generator
        outlier_fraction: Share of topic messages that are length outliers, half short, half long
        n_off_topic: Extra comments without topic keywords
        n_bots: Extra topic comments written by bots
        subreddit: Subreddit of every comment
        min_length: Shortest in-band message
        max_length: Longest in-band message

    Returns:
        Comments in shuffled order
    """
    if not 10 < min_length <= max_length < 250:
        raise ValueError("In-band lengths must lie inside 11..249 words")
    rng = np.random.default_rng(seed)
    n_outliers = int(round(n_messages * outlier_fraction))
    n_short = n_outliers // 2
    n_long = n_outliers - n_short

    bodies = []
    for i in range(n_messages):
        topic = [str(rng.choice(TOPIC_WORDS))]
        if i < n_short:
            content = topic + [str(rng.choice(POSITIVE_POOL)), str(rng.choice(NEGATIVE_POOL))]
            bodies.append(_body(rng, content, int(rng.integers(3, 11))))
        elif i < n_outliers:
            k = int(rng.integers(3, 8))
            content = (
                topic
                + rng.choice(POSITIVE_POOL, size=k).tolist()
                + rng.choice(NEGATIVE_POOL, size=k).tolist()
            )
            bodies.append(_body(rng, content, int(rng.integers(250, 320))))
        else:
            pool = POSITIVE_POOL if rng.random() < 0.5 else NEGATIVE_POOL
            content = topic + rng.choice(pool, size=int(rng.integers(2, 5))).tolist()
            bodies.append(_body(rng, content, int(rng.integers(min_length, max_length + 1))))

    authors = [f"user{int(a)}" for a in rng.integers(0, max(1, n_messages // 3), size=n_messages)]
    for _ in range(n_off_topic):
        bodies.append(_body(rng, [], int(rng.integers(min_length, max_length + 1))))
        authors.append(f"user{int(rng.integers(0, max(1, n_messages // 3)))}")
    for i in range(n_bots):
        bodies.append(
            _body(rng, ["vaccine"], 20) + " i am a bot and this action was performed automatically"
        )
        authors.append("AutoModerator" if i % 2 == 0 else "RemindMeBot")

    order = rng.permutation(len(bodies))
    created = COLLECTION_START_UTC + rng.integers(0, COLLECTION_DAYS * 86400, size=len(bodies))
    return [
        RawComment(
            id=f"t1_{position:06x}",
            author=authors[index],
            body=bodies[index],
            created_utc=int(created[position]),
            subreddit=subreddit,
        )
        for position, index in enumerate(order)
    ]
