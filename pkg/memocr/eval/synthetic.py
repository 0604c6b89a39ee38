"""A generator of synthetic long-context question answering instances.

Every instance asks who wrote a song performed by a band. The context
holds one evidence sentence answering the question, several sentences
about the same song that do not name its author, a sentence answering a
detail-oriented question about where the song was recorded, distractor
sentences about other songs, and filler.
"""

import random
from typing import List, Tuple

from .instance import EvalInstance
from .suite import EvalSuite

__all__ = ["make_suite"]

FIRST_NAMES = [
    "Gene", "Carla", "Hugo", "Maren", "Otis", "Priya", "Tomas", "Ines",
    "Felix", "Nadia", "Rufus", "Elena", "Boris", "Lena", "Amos", "Greta",
]
LAST_NAMES = [
    "MacLellan", "Okafor", "Lindqvist", "Duarte", "Whitcombe", "Haraldsen",
    "Moreau", "Castellan", "Brennan", "Yamada", "Kowalski", "Abernathy",
    "Ferreira", "Novak", "Delacroix", "Osei",
]
SONG_ADJECTIVES = [
    "Silver", "Crimson", "Hollow", "Velvet", "Amber", "Distant",
    "Broken", "Electric", "Wandering", "Frozen", "Golden", "Lonesome",
]
SONG_NOUNS = [
    "Harbor", "Lantern", "Meadow", "Compass", "Horizon", "Orchard",
    "Ember", "Lullaby", "Canyon", "Highway", "Sparrow", "Tide",
]
BAND_ADJECTIVES = ["Midnight", "Restless", "Painted", "Northern", "Rusty", "Velour", "Copper", "Wild"]
BAND_NOUNS = ["Owls", "Pilots", "Foxes", "Rivers", "Engines", "Saints", "Ravens", "Drifters"]
CITIES = [
    "Halifax", "Lisbon", "Osaka", "Tucson", "Bergen",
    "Glasgow", "Porto", "Quebec", "Adelaide", "Memphis",
]

RELATED = [
    "The song {song} was performed live by {band} for years.",
    "{band} performed {song} on national television.",
    "Critics praised {song} when {band} first released it.",
    "Fans of {band} still request {song} at every concert.",
    "A remastered {song} by {band} appeared decades later.",
    "{band} often closed their concerts with {song}.",
    "Radio stations played {song} by {band} for many weeks.",
]
DISTRACTOR = "{person} composed the tune {song} with {band} in {year}."
FILLER = [
    "Rain fell over the valley for most of the afternoon.",
    "A new bakery opened near the train station last spring.",
    "The museum extended its opening hours during the holidays.",
    "Several families moved to the coastal villages that year.",
    "Local farmers reported an unusually large apple harvest.",
    "The old bridge was repaired after a long public debate.",
    "Schools in the region introduced evening language classes.",
    "A ferry service connected the two islands every morning.",
    "The library received a donation of rare maps and atlases.",
    "Traffic on the eastern road doubled within a decade.",
    "Volunteers planted hundreds of trees along the river bank.",
    "The town council approved a budget for new street lamps.",
    "A small observatory was built on the hill outside town.",
    "Fishermen complained about the price of fuel that season.",
    "The annual market drew visitors from neighbouring towns.",
    "An exhibition of ceramics attracted large crowds in autumn.",
]

SENTENCES_PER_CHUNK = 5


def _pick(rng: random.Random, words: List[str], exclude: Tuple[str, ...]) -> str:
    return rng.choice([word for word in words if word not in exclude])


def _person(rng: random.Random, exclude: Tuple[str, ...] = ()) -> str:
    return f"{_pick(rng, FIRST_NAMES, exclude)} {_pick(rng, LAST_NAMES, exclude)}"


def _make_instance(rng: random.Random, index: int) -> EvalInstance:
    person = _person(rng)
    song_words = (rng.choice(SONG_ADJECTIVES), rng.choice(SONG_NOUNS))
    band_words = (rng.choice(BAND_ADJECTIVES), rng.choice(BAND_NOUNS))
    song, band = " ".join(song_words), "The {} {}".format(*band_words)
    city, year = rng.choice(CITIES), rng.randint(1962, 1999)

    evidence = f"{person} wrote the song {song} for {band}."
    detail = f"{band} recorded {song} in {city} during {year}."
    sentences = [evidence, detail]
    sentences.extend(template.format(song=song, band=band) for template in RELATED)

    # distractors never share a word with the song, the band or the author
    taken = song_words + band_words + tuple(person.split())
    for _ in range(rng.randint(8, 14)):
        sentences.append(
            DISTRACTOR.format(
                person=_person(rng, taken),
                song=f"{_pick(rng, SONG_ADJECTIVES, taken)} {_pick(rng, SONG_NOUNS, taken)}",
                band=f"The {_pick(rng, BAND_ADJECTIVES, taken)} {_pick(rng, BAND_NOUNS, taken)}",
                year=rng.randint(1962, 1999),
            )
        )
    sentences.extend(rng.sample(FILLER, 6))
    rng.shuffle(sentences)

    chunks = [
        " ".join(sentences[i : i + SENTENCES_PER_CHUNK])
        for i in range(0, len(sentences), SENTENCES_PER_CHUNK)
    ]
    return EvalInstance(
        f"synthetic-{index:03}",
        f"Who wrote the song {song} performed by {band}?",
        [person],
        chunks=chunks,
        detail_question=f"In which city did {band} record {song}?",
        detail_answers=[city],
        evidence=[evidence],
        dataset="synthetic",
    )


def make_suite(n: int = 50, seed: int = 0) -> EvalSuite:
    """Generate a suite of synthetic instances.

    The same ``n`` and ``seed`` always generate the same suite.

    Example:
        >>> suite = memocr.make_suite(2, seed=1)
        >>> len(suite)
        2
        >>> suite[0].question.startswith("Who wrote the song")
        True

    """
    if n < 1:
        raise ValueError("`n` must be strictly positive")
    rng = random.Random(seed)
    return EvalSuite(instances=[_make_instance(rng, i) for i in range(n)])
