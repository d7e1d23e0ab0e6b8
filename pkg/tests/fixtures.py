"""Shared fixture documents and random-document generation for the tests."""

import random

from blond import builtin_profile, document_from_tokens

ENGLISH = builtin_profile("english")


def worked_example():
    """The single-sentence pair whose count vectors anchor the whole metric:
    reference with VBD x2, VBZ x1, a he-group pronoun, and entity
    'Wang Wenhao'; candidate with VBZ x3 and the pronoun flipped to she."""
    ref = document_from_tokens(
        "d1",
        [[
            ("He", "PRP"), ("rejected", "VBD"), ("the", "DT"), ("call", "NN"),
            ("irritatedly", "RB"), ("and", "CC"), ("cursed", "VBD"), (".", "."),
            ('"', "``"), ("This", "DT"), ("Wang", "NNP"), ("Wenhao", "NNP"),
            ("is", "VBZ"), ("practically", "RB"), ("crazy", "JJ"), ("!", "."),
            ('"', "''"),
        ]],
        entities=[(0, 10, 12, "PERSON")],
        profile=ENGLISH,
    )
    cand = document_from_tokens(
        "d1",
        [[
            ("She", "PRP"), ("snaps", "VBZ"), ("the", "DT"), ("phone", "NN"),
            ("and", "CC"), ("curses", "VBZ"), (",", ","), ('"', "``"),
            ("This", "DT"), ("Wang", "NNP"), ("Wenhao", "NNP"), ("is", "VBZ"),
            ("just", "RB"), ("neurotic", "JJ"), ("!", "."), ('"', "''"),
        ]],
        entities=[(0, 9, 11, "PERSON")],
        profile=ENGLISH,
    )
    return cand, ref


def discourse_fixture():
    """Three-sentence document with two candidates.

    Candidate A paraphrases freely but keeps every checkpoint: the entity
    mentioned twice, one past-tense verb per sentence, pronouns she and him.
    Candidate B copies far more reference words but drops the entity and
    flips the she pronoun. So A wins on checkpoints while B wins on
    unigram overlap.
    """
    ref = document_from_tokens(
        "fig",
        [
            [("Qiao", "NNP"), ("Lian", "NNP"), ("stood", "VBD"), ("up", "RP"), (".", ".")],
            [("She", "PRP"), ("was", "VBD"), ("very", "RB"), ("happy", "JJ"), (".", ".")],
            [("Qiao", "NNP"), ("Lian", "NNP"), ("saw", "VBD"), ("him", "PRP"), (".", ".")],
        ],
        entities=[(0, 0, 2, "PERSON"), (2, 0, 2, "PERSON")],
        profile=ENGLISH,
    )
    cand_a = document_from_tokens(
        "fig",
        [
            [("Qiao", "NNP"), ("Lian", "NNP"), ("rose", "VBD"), ("slowly", "RB"), (".", ".")],
            [("She", "PRP"), ("felt", "VBD"), ("glad", "JJ"), (".", ".")],
            [("Qiao", "NNP"), ("Lian", "NNP"), ("noticed", "VBD"), ("him", "PRP"), (".", ".")],
        ],
        entities=[(0, 0, 2, "PERSON"), (2, 0, 2, "PERSON")],
        profile=ENGLISH,
    )
    cand_b = document_from_tokens(
        "fig",
        [
            [("Joe", "NNP"), ("Lian", "NNP"), ("stood", "VBD"), ("up", "RP"), (".", ".")],
            [("He", "PRP"), ("was", "VBD"), ("very", "RB"), ("happy", "JJ"), (".", ".")],
            [("Joe", "NNP"), ("Lian", "NNP"), ("saw", "VBD"), ("him", "PRP"), (".", ".")],
        ],
        entities=[(0, 0, 2, "PERSON"), (2, 0, 2, "PERSON")],
        profile=ENGLISH,
    )
    return ref, cand_a, cand_b


NAMES = ["Qiao Lian", "Wang Wenhao", "Ye Qing Luo", "Anna", "Old Zhou"]
PLACES = ["Paris", "Shanghai", "Berlin"]
VERBS = [
    ("walked", "VBD"), ("said", "VBD"), ("smiled", "VBD"), ("runs", "VBZ"),
    ("laughs", "VBZ"), ("sleep", "VBP"), ("can", "MD"), ("going", "VBG"),
    ("taken", "VBN"), ("go", "VB"),
]
PRONOUNS = [
    ("he", "PRP"), ("she", "PRP"), ("him", "PRP"), ("her", "PRP"),
    ("it", "PRP"), ("they", "PRP"), ("his", "PRP$"), ("them", "PRP"),
]
FILLERS = [
    ("the", "DT"), ("morning", "NN"), ("light", "NN"), ("street", "NN"),
    ("quietly", "RB"), ("old", "JJ"), ("house", "NN"), ("again", "RB"),
    ("toward", "IN"), ("door", "NN"), ("slowly", "RB"), ("red", "JJ"),
]


def random_document(rng: random.Random, doc_id: str, *, with_ambiguity=True):
    """A random but well-formed document guaranteed to carry at least one
    entity mention, one tense-tagged verb, one pronoun, and (optionally)
    one ambiguity annotation, so every checkpoint family is defined."""
    n_sent = rng.randint(2, 5)
    sentences = []
    entities = []
    for s in range(n_sent):
        # segments keep multi-token mentions contiguous through the shuffle
        segments = []
        if rng.random() < 0.7 or s == 0:
            name = rng.choice(NAMES)
            segments.append(([(p, "NNP") for p in name.split()], "PERSON"))
        if rng.random() < 0.3:
            segments.append(([(rng.choice(PLACES), "NNP")], "GPE"))
        segments.append(([rng.choice(VERBS)], None))
        segments.append(([rng.choice(PRONOUNS)], None))
        for _ in range(rng.randint(0, 4)):
            segments.append(([rng.choice(FILLERS)], None))
        rng.shuffle(segments)

        toks = []
        for seg_tokens, fine_tag in segments:
            if fine_tag is not None:
                entities.append((s, len(toks), len(toks) + len(seg_tokens), fine_tag))
            toks.extend(seg_tokens)
        toks.append((".", "."))
        sentences.append(toks)

    ambiguity = []
    if with_ambiguity:
        s = rng.randrange(n_sent)
        term = rng.choice([t[0] for t in sentences[s]])
        ambiguity.append((s, term))

    return document_from_tokens(
        doc_id, sentences, entities=entities, ambiguity=ambiguity, profile=ENGLISH
    )


def random_corpus(rng: random.Random, size: int, prefix="doc"):
    width = len(str(size))
    return [
        random_document(rng, f"{prefix}{i:0{width}d}") for i in range(size)
    ]
