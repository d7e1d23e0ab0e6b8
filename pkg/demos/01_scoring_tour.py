#!/usr/bin/env python3
"""Tour of the score variants on a tiny annotated document pair."""

from blond import builtin_profile, document_from_tokens, score_document_all

profile = builtin_profile("english")

# A three-sentence reference. Entities are annotated with fine NER tags and
# merged to coarse categories by the profile; 'watching' carries a human
# ambiguity annotation, which is what the "+" variants consume.
reference = document_from_tokens(
    "ch1",
    [
        [("Qiao", "NNP"), ("Lian", "NNP"), ("stood", "VBD"), ("up", "RP"), (".", ".")],
        [("What", "WP"), ("are", "VBP"), ("you", "PRP"), ("watching", "VBG"), ("?", ".")],
        [("She", "PRP"), ("was", "VBD"), ("watching", "VBG"), ("The", "DT"),
         ("Avengers", "NNP"), (".", ".")],
    ],
    entities=[(0, 0, 2, "PERSON"), (2, 4, 5, "WORK_OF_ART")],
    ambiguity=[(1, "watching"), (2, "watching")],
    profile=profile,
)

# The system translation keeps the entity and the tense pattern but renders
# 'watching' as 'looking at' and flips the pronoun.
candidate = document_from_tokens(
    "ch1",
    [
        [("Qiao", "NNP"), ("Lian", "NNP"), ("stood", "VBD"), ("up", "RP"), (".", ".")],
        [("What", "WP"), ("are", "VBP"), ("you", "PRP"), ("looking", "VBG"),
         ("at", "IN"), ("?", ".")],
        [("He", "PRP"), ("was", "VBD"), ("looking", "VBG"), ("at", "IN"),
         ("The", "DT"), ("Avengers", "NNP"), (".", ".")],
    ],
    entities=[(0, 0, 2, "PERSON")],
    profile=profile,
)

variants = ["blond", "dblond", "blond+", "dblond+",
            "blond-d", "dblond-d", "blond-d+", "dblond-d+"]
reports = score_document_all(candidate, [reference], profile, variants)

print(f"{'variant':<10} {'total':>9}  components")
for report in reports:
    parts = ", ".join(
        f"{cs.component}={cs.value:.3f}" if cs.defined else f"{cs.component}=undef"
        for cs in report.components
    )
    print(f"{report.variant:<10} {report.total:>9.4f}  {parts}")

# The recall variants read 'higher is better' on a 0..100 scale; the -d
# variants read 'lower is better'. The "+" rows include the A component,
# which punishes 'looking' where the annotated reference term is 'watching'.
#
# Distance totals combine by unsmoothed geometric mean, so one perfectly
# matched family (here E and V are both 0-distance) collapses the total to
# 0 on a document this small; over real many-sentence documents exact
# zero-distance families are rare.
