#!/usr/bin/env python3
"""Regenerate the bundled English resource set under crates/core/resources/en.

Needs `pip install wordfreq pyphen`. Hand-curated files (stopwords, POS
lexicon, synonyms, similes) are not touched; this script only rebuilds the
dictionary, the usage series and the hyphenation patterns.
"""
import hashlib
import math
import os
import re
import sys

import pyphen
import wordfreq

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "resources", "en")
DICT_SIZE = 10000
USAGE_WORDS = 1500
YEARS = list(range(2000, 2009))


def curated_vocabulary():
    words = set()
    for name in ("pos_lexicon.tsv", "synonyms.tsv", "similes.tsv"):
        with open(os.path.join(OUT, name)) as fh:
            for line in fh:
                if not line.strip() or line.startswith("#"):
                    continue
                cols = line.rstrip("\n").split("\t")
                for c in cols:
                    if re.fullmatch(r"[a-z]+", c) and c not in ("noun", "verb", "adj", "adv", "other"):
                        words.add(c)
    return words


def build_dictionary():
    stop = set()
    with open(os.path.join(OUT, "stopwords.txt")) as fh:
        stop = {l.strip() for l in fh if l.strip() and not l.startswith("#")}
    chosen = []
    seen = set()
    for w in wordfreq.iter_wordlist("en", wordlist="large"):
        if len(chosen) >= DICT_SIZE:
            break
        if not re.fullmatch(r"[a-z]{2,}", w) or w in seen:
            continue
        seen.add(w)
        chosen.append(w)
    for w in sorted(curated_vocabulary() - seen):
        chosen.append(w)
    rows = []
    for w in chosen:
        count = max(1, round(wordfreq.word_frequency(w, "en", wordlist="large") * 1e9))
        rows.append((w, count))
    with open(os.path.join(OUT, "dictionary.tsv"), "w") as fh:
        fh.write("# word\tcount  (counts per 1e9 tokens, wordfreq 'large' English list)\n")
        for w, c in rows:
            fh.write(f"{w}\t{c}\n")
    return rows, stop


def drift(word):
    h = hashlib.sha256(word.encode()).digest()
    return (h[0] / 255.0 - 0.5) * 1.2


def build_usage(rows, stop):
    with open(os.path.join(OUT, "usage.tsv"), "w") as fh:
        fh.write("# word\tyear\tvalue  (synthetic yearly relative usage, 2000-2008)\n")
        n = 0
        for w, c in rows:
            if n >= USAGE_WORDS:
                break
            if w in stop:
                continue
            n += 1
            base = c / 1e9
            d = drift(w)
            for k, y in enumerate(YEARS):
                v = base * max(0.05, 1.0 + d * k / (len(YEARS) - 1))
                fh.write(f"{w}\t{y}\t{v:.6e}\n")


def build_patterns():
    src = os.path.join(os.path.dirname(pyphen.__file__), "dictionaries", "hyph_en_US.dic")
    pats = []
    with open(src, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if re.fullmatch(r"[.a-z0-9]+", line) and re.search(r"[a-z]", line) and re.search(r"[0-9]", line):
                pats.append(line)
    with open(os.path.join(OUT, "hyphen.pat"), "w") as fh:
        fh.write("# US English Liang patterns, ASCII subset of hyph_en_US.dic (Hyphen/OpenOffice.org).\n")
        fh.write("# BSD-style license: unlimited copying, redistribution and modification permitted\n")
        fh.write("# with this copyright and license information. Based on plain TeX hyphen.tex.\n")
        fh.write("LEFTMIN=2\nRIGHTMIN=2\n")
        for p in pats:
            fh.write(p + "\n")
        fh.write("# local additions\n")
        fh.write("ap8p9lic\n")


def main():
    rows, stop = build_dictionary()
    build_usage(rows, stop)
    build_patterns()
    print(f"dictionary: {len(rows)} words", file=sys.stderr)


if __name__ == "__main__":
    main()
