#!/usr/bin/env python3
# Copyright 2026 The ssaudit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the derived fixture files next to this script.

mini_inventory.json and inflections.json are hand-written; everything else
here is derived from them with a fixed seed.
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
DIM = 16

PAIRS = [
    ("I highly recommend it .", "I highly urge it .", 1),
    ("Michael Phelps won the gold medal and set a world record .",
     "Michael Phelps winning the gold medal and put a world record .", 1),
    ("The company misses analysts expectations .",
     "The firm miss analysts expectations .", 0),
    ("They had a good day .", "They had a bad day .", 1),
    ("Fears for T N pension after talks .",
     "Fears for T percent pension after talks .", 0),
]

SENTENCES = [
    "Michael Phelps won the gold medal and set a world record .",
    "The company misses analysts expectations .",
    "Earnings per share rise .",
    "The team plans to run a private company .",
    "She recommends the book .",
]

# Reconstruction predictions for "On" in a news headline.
ON_RECONSTRUCT = [
    "around", "round", "a", "here", "ongoing", "over", "in", "the", "involved",
    "pending", "at", "next", "now", "under", "for", "ahead", "set", "off",
    "currently", "onto", "given", "considered", "about", "held", "on", "of",
    "to", "by", "time", "with"]


def load(name):
    with open(os.path.join(HERE, name)) as f:
        return json.load(f)


def unit(rng):
    v = [rng.gauss(0.0, 1.0) for _ in range(DIM)]
    n = sum(x * x for x in v) ** 0.5
    return [x / n for x in v]


def mix(a, b, wa, wb):
    return [wa * x + wb * y for x, y in zip(a, b)]


def main():
    rng = random.Random(20240601)
    inventory = load("mini_inventory.json")
    inflections = load("inflections.json")

    vocab = []
    seen = set()

    def add(w):
        w = w.lower()
        if w and w not in seen:
            seen.add(w)
            vocab.append(w)

    for key, senses in inventory.items():
        add(key.split("|")[0])
        for s in senses:
            for field in ("synonyms", "antonyms", "derivations"):
                for w in s.get(field, []):
                    add(w)
    for key, forms in inflections.items():
        add(key.split("|")[0])
        for w in forms.values():
            add(w)
    for orig, adv, _ in PAIRS:
        for w in orig.split() + adv.split():
            add(w)
    for s in SENTENCES:
        for w in s.split():
            add(w)
    for w in ON_RECONSTRUCT:
        add(w)
    for i in range(40):
        add("filler%02d" % i)

    base = {w: unit(rng) for w in vocab}
    # Synonyms of a sense drift toward a shared centre.
    for key, senses in inventory.items():
        for s in senses:
            centre = unit(rng)
            for w in s["synonyms"]:
                base[w.lower()] = mix(base[w.lower()], centre, 0.6, 0.4)
    # Inflected forms stay close to their lemma.
    for key, forms in inflections.items():
        lemma = key.split("|")[0]
        for w in forms.values():
            base[w] = mix(base[lemma], unit(rng), 0.9, 0.1)

    with open(os.path.join(HERE, "vectors.txt"), "w") as f:
        for w in vocab:
            f.write(w + " " + " ".join("%.6f" % x for x in base[w]) + "\n")

    with open(os.path.join(HERE, "freq.tsv"), "w") as f:
        for rank, w in enumerate(vocab):
            f.write("%s\t%d\n" % (w, 100000 // (rank + 1)))

    table = {"on": [{"token": w, "score": -0.1 * i} for i, w in enumerate(ON_RECONSTRUCT)]}
    table["recommend"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["recommends", "recommended", "urge", "commend", "suggest", "##ed", ",", "advise"])]
    table["won"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["wins", "win", "winning", "took", "lost", "gained"])]
    table["set"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["sets", "setting", "put", "established", "broke", "fix"])]
    table["company"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["firm", "companies", "business", "group", "fellowship"])]
    table["misses"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["missed", "beats", "meets", "misses", "hits"])]
    table["good"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["great", "bad", "fine", "better", "nice"])]
    table["n"] = [{"token": w, "score": -0.5 * i} for i, w in enumerate(
        ["##s", "new", "uk", "pension"])]
    with open(os.path.join(HERE, "mlm_table.json"), "w") as f:
        json.dump(table, f, indent=1)

    victim = {
        "labels": 2,
        "bias": [0.0, 0.0],
        "weights": {
            "recommend": [-1.0, 1.5], "commend": [-1.0, 1.2],
            "good": [-0.5, 1.0], "won": [-0.5, 1.0], "misses": [1.0, -0.5],
            "fears": [1.0, -0.5], "bad": [1.0, -1.0], "urge": [0.6, -0.2],
            "lose": [1.2, -1.0], "loss": [0.8, -0.6],
        },
    }
    with open(os.path.join(HERE, "victim.json"), "w") as f:
        json.dump(victim, f, indent=1)

    with open(os.path.join(HERE, "pairs.jsonl"), "w") as f:
        for orig, adv, label in PAIRS:
            f.write(json.dumps({"original": orig, "adversarial": adv, "label": label}) + "\n")

    with open(os.path.join(HERE, "sentences.txt"), "w") as f:
        for s in SENTENCES:
            f.write(s + "\n")


if __name__ == "__main__":
    main()
