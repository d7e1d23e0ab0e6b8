#!/usr/bin/env python3
"""Count vectors step by step: axes, raw counts, weights, recall, distance.

Walks the single-sentence pair where the candidate keeps the named entity,
turns two past-tense verbs into present tense, and flips he to she.
"""

from blond import (
    apply_weights,
    build_axes,
    builtin_profile,
    count_checkpoints,
    distance_component,
    document_from_tokens,
    recall_component,
)

profile = builtin_profile("english")

reference = document_from_tokens(
    "ex",
    [[("He", "PRP"), ("rejected", "VBD"), ("the", "DT"), ("call", "NN"),
      ("irritatedly", "RB"), ("and", "CC"), ("cursed", "VBD"), (".", "."),
      ('"', "``"), ("This", "DT"), ("Wang", "NNP"), ("Wenhao", "NNP"),
      ("is", "VBZ"), ("practically", "RB"), ("crazy", "JJ"), ("!", "."), ('"', "''")]],
    entities=[(0, 10, 12, "PERSON")],
    profile=profile,
)
candidate = document_from_tokens(
    "ex",
    [[("She", "PRP"), ("snaps", "VBZ"), ("the", "DT"), ("phone", "NN"),
      ("and", "CC"), ("curses", "VBZ"), (",", ","), ('"', "``"), ("This", "DT"),
      ("Wang", "NNP"), ("Wenhao", "NNP"), ("is", "VBZ"), ("just", "RB"),
      ("neurotic", "JJ"), ("!", "."), ('"', "''")]],
    entities=[(0, 9, 11, "PERSON")],
    profile=profile,
)

axes = {axis.key: axis for axis in build_axes(reference, profile)}

print("entity axis:", axes["E"].labels)
print("tense axis: ", axes["V"].labels)
print("pronoun axis:", axes["P"].labels)
print()

for key in ("E", "V", "P"):
    axis = axes[key]
    ref_counts = count_checkpoints(reference, axis)
    cand_counts = count_checkpoints(candidate, axis)
    print(f"[{key}] reference counts {ref_counts.per_sentence.tolist()}"
          f"  candidate counts {cand_counts.per_sentence.tolist()}")

    ref_w = apply_weights(ref_counts, profile)
    cand_w = apply_weights(cand_counts, profile)
    print(f"    weighted ref {ref_w.per_sentence.round(3).tolist()}"
          f"  weighted cand {cand_w.per_sentence.round(3).tolist()}")

    recall = recall_component(ref_w, cand_w)
    dist = distance_component(ref_w, cand_w, profile.alpha)
    print(f"    recall {recall:.4f}   distance (alpha={profile.alpha:g}) {dist:.4f}")
    print()

# The entity survives (recall 1), a third of the weighted tense mass is
# matched (0.15/0.55), and the pronoun flip zeroes pronoun recall while
# pushing its distance to sqrt(2): the substitution counts on both sides
# of the difference vector.
