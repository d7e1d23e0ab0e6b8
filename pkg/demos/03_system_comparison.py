#!/usr/bin/env python3
"""Meta-evaluation: compare two synthetic systems and correlate metrics.

Builds a 60-document corpus, simulates a strong and a weak system by
mutating the reference with different error rates, then runs the paired
t-test between their per-document scores and correlates two score variants.
"""

import random

from blond import (
    ScoreVector,
    builtin_profile,
    correlation_matrix,
    document_from_tokens,
    paired_t,
    pearson,
    score_corpus,
)

profile = builtin_profile("english")
rng = random.Random(7)

NAMES = ["Qiao Lian", "Wang Wenhao", "Anna"]
VERBS = [("walked", "VBD"), ("said", "VBD"), ("runs", "VBZ"), ("can", "MD")]
WORDS = [("the", "DT"), ("street", "NN"), ("quietly", "RB"), ("house", "NN"),
         ("door", "NN"), ("red", "JJ")]
PRONOUNS = [("he", "PRP"), ("she", "PRP"), ("they", "PRP")]


def make_reference(doc_id):
    sentences, entities = [], []
    for s in range(rng.randint(3, 6)):
        toks = []
        name = rng.choice(NAMES).split()
        entities.append((s, 0, len(name), "PERSON"))
        toks.extend((p, "NNP") for p in name)
        toks.append(rng.choice(VERBS))
        toks.append(rng.choice(PRONOUNS))
        toks.extend(rng.choice(WORDS) for _ in range(rng.randint(1, 4)))
        toks.append((".", "."))
        sentences.append(toks)
    return document_from_tokens(doc_id, sentences, entities=entities, profile=profile)


def corrupt(doc, error_rate):
    """Simulate a system: sometimes flip pronouns, retell entities, vary words."""
    sentences = []
    for sent in doc.sentences:
        toks = []
        for token in sent:
            surface, pos = token.surface, token.pos
            if rng.random() < error_rate:
                if surface.lower() in ("he", "she"):
                    surface = "she" if surface.lower() == "he" else "he"
                elif pos == "NNP":
                    surface = "Joe"
                elif pos in ("NN", "JJ", "RB", "DT"):
                    surface = rng.choice(WORDS)[0]
            toks.append((surface, pos))
        sentences.append(toks)
    return document_from_tokens(doc.doc_id, sentences)


references = [make_reference(f"doc{i:03d}") for i in range(60)]
strong = [corrupt(doc, 0.10) for doc in references]
weak = [corrupt(doc, 0.35) for doc in references]

rows = {}
for system_id, outputs in (("strong", strong), ("weak", weak)):
    for variant in ("blond", "dblond"):
        reports, summary = score_corpus(outputs, [references], profile, variant)
        rows[(system_id, variant)] = ScoreVector.from_pairs(
            [(r.doc_id, r.total) for r in reports],
            system_id=system_id,
            metric_id=f"{variant}:{system_id}",
        )
        print(f"{system_id:<7} {variant:<7} mean {summary.mean:6.2f}"
              f"  variance {summary.variance:7.2f}  n {summary.n_docs}")

print()
result = paired_t(rows[("strong", "blond")], rows[("weak", "blond")])
print(f"paired t (strong vs weak, blond): t = {result.t:.2f}, "
      f"p = {result.p_two_sided:.2e}, band {result.significance_band}")

corr = pearson(rows[("strong", "blond")], rows[("strong", "dblond")])
print(f"pearson blond vs dblond on the strong system: r = {corr.r:.3f} "
      f"95% CI ({corr.ci_low:.3f}, {corr.ci_high:.3f})")

labels, matrix = correlation_matrix(
    [rows[("strong", "blond")], rows[("strong", "dblond")], rows[("weak", "blond")]]
)
print()
print("\t".join(["r"] + labels))
for label, row in zip(labels, matrix):
    print("\t".join([label] + [f"{value:.3f}" for value in row]))
