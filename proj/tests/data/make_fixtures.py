#!/usr/bin/env python3
"""Regenerates the rigged end-to-end fixtures in this directory."""
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent
rng = random.Random(7)

FILLER_NOUNS = ["river", "window", "garden", "teacher", "journey", "morning", "letter", "music", "table", "city"]
FILLER_VERBS = ["crossed", "opened", "visited", "wrote", "found", "painted", "watched", "kept"]


def fillers(n):
    out = []
    for _ in range(n):
        a, b = rng.sample(FILLER_NOUNS, 2)
        out.append(f"the {a} {rng.choice(FILLER_VERBS)} a {b} .")
    return out


def pad(lines, total):
    lines = lines + fillers(total - len(lines))
    rng.shuffle(lines)
    return lines


# ---- bracketing ----
LEFT = [("bone", "marrow", "cells"), ("heart", "rate", "variability"), ("blood", "pressure", "monitor"),
        ("lung", "cancer", "treatment"), ("body", "mass", "index")]
RIGHT = [("polymerase", "chain", "reaction"), ("protein", "kinase", "inhibitor"), ("liver", "enzyme", "assay"),
         ("retinal", "vein", "occlusion"), ("skin", "graft", "rejection")]

lines = []
for a, b, c in LEFT:
    lines += [f"the {a} {b} is important ."] * 6
    lines += [f"{a} {b} {c} was measured .", f"the {c} of the {a} {b} was high .", f"{a}{b} {c} appeared ."]
    lines += [f"new {c} results arrived ."] * 3
for a, b, c in RIGHT:
    lines += [f"the {b} {c} is important ."] * 6
    lines += [f"{a} {b} {c} was measured .", f"the {b} {c} of the {a} was high .", f"{a} {b}{c} appeared ."]
    lines += [f"the {a} {c} was seen ."] * 2
    lines += [f"a {a} sample arrived ."] * 1
(HERE / "bracket_corpus.txt").write_text("\n".join(pad(lines, 200)) + "\n")
with open(HERE / "bracket10.tsv", "w") as f:
    f.write("# w1\tw2\tw3\tlabel\n")
    for t in LEFT:
        f.write("\t".join(t) + "\tleft\n")
    for t in RIGHT:
        f.write("\t".join(t) + "\tright\n")

# ---- PP attachment ----
PATTERNS = [
    (("meet", "demands", "from", "customers"), "N", 1, "we meet the customer demands ."),
    (("had", "program", "in", "place"), "V", 2, "they had in place a program ."),
    (("gave", "apple", "to", "boy"), "V", 3, "it was to the boy that i gave an apple ."),
    (("shaken", "confidence", "in", "markets"), "N", 4, "confidence in markets shaken by news ."),
    (("put", "client", "at", "odds"), "V", 5, "they put him at odds with rules ."),
    (("eat", "spaghetti", "with", "sauce"), "N", 6, "this is spaghetti with sauce ."),
]
OF_QUADS = [("left", "chairmanship", "of", "firm"), ("bought", "shares", "of", "stock"),
            ("raised", "price", "of", "bread"), ("cut", "number", "of", "jobs"), ("sold", "half", "of", "company")]
lines = [p[3] for p in PATTERNS]
lines += ["he left the chairmanship with the firm .", "they bought shares for cash ."]
(HERE / "pp_corpus.txt").write_text("\n".join(pad(lines, 200)) + "\n")
with open(HERE / "pp_patterns.tsv", "w") as f:
    f.write("# v\tn1\tp\tn2\tlabel; row k is the fixture for paraphrase pattern k\n")
    for q, label, pat, _ in PATTERNS:
        f.write("\t".join(q) + f"\t{label}\n")
with open(HERE / "pp_of.tsv", "w") as f:
    f.write("# v\tn1\tp\tn2\tlabel\n")
    for q in OF_QUADS:
        f.write("\t".join(q) + "\tN\n")

# ---- coordination ----
COORD = [
    (("cotton", "and", "acetate", "fibers"), "noun", "number"),
    (("steel", "and", "glass", "buildings"), "noun", "number"),
    (("trees", "and", "tree", "houses"), "NP", "h1"),
    (("cats", "and", "dog", "owners"), "NP", "number"),
]
lines = []
for (n1, c, n2, h), label, _ in COORD[:2]:
    lines += [f"{n2} {c} {n1} {h} were listed .", f"{n1} {h} {c} {n2} {h} were listed .",
              f"{n2} {h} {c} {n1} {h} were listed .", f"some {n1} {h} arrived ."]
lines += ["tree houses and trees were listed .", "dog owners and cats were listed .", "dog owners met ."]
(HERE / "coord_corpus.txt").write_text("\n".join(pad(lines, 200)) + "\n")
with open(HERE / "coord_fixtures.tsv", "w") as f:
    f.write("# n1\tc\tn2\th\tlabel; cues: number, number, h1, number\n")
    for q, label, cue in COORD:
        f.write("\t".join(q) + f"\t{label}\n")

# ---- relational similarity (tagged) ----
TAGGED = [
    "the_DT ostrich_NN is_VBZ a_DT large_JJ bird_NN ._.",
    "an_DT ostrich_NN is_VBZ a_DT bird_NN ._.",
    "the_DT lion_NN is_VBZ a_DT big_JJ cat_NN ._.",
    "geese_NNS fly_VBP in_IN a_DT flock_NN ._.",
    "the_DT ewe_NN of_IN the_DT sheep_NN grazed_VBD ._.",
    "the_DT cub_NN of_IN a_DT bear_NN slept_VBD ._.",
    "primates_NNS include_VBP monkeys_NNS ._.",
    "the_DT engine_NN powers_VBZ the_DT car_NN ._.",
    "the_DT pilot_NN flies_VBZ the_DT plane_NN ._.",
    "a_DT sailor_NN and_CC a_DT ship_NN ._.",
    "the_DT farmer_NN owns_VBZ the_DT field_NN ._.",
]
TAG_NOUNS = ["river", "window", "garden", "teacher", "morning", "letter", "table", "city"]
TAG_VERBS = [("crossed", "VBD"), ("opened", "VBD"), ("visited", "VBD"), ("found", "VBD")]
rel = list(TAGGED)
while len(rel) < 200:
    a, b = rng.sample(TAG_NOUNS, 2)
    v, t = rng.choice(TAG_VERBS)
    rel.append(f"the_DT {a}_NN {v}_{t} a_DT {b}_NN ._.")
rng.shuffle(rel)
(HERE / "relsim_corpus.txt").write_text("\n".join(rel) + "\n")
(HERE / "sat.txt").write_text(
    "# rigged: the stem shares its only feature with (a)\n"
    "ostrich bird\nlion cat\ngoose flock\newe sheep\ncub bear\nprimate monkey\na\n\n"
    "# tie: no candidate shares a feature with the stem\n"
    "engine car\npilot plane\nsailor ship\nfarmer field\nriver city\n")
