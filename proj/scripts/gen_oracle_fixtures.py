#!/usr/bin/env python3
"""Regenerate the stemmer and lemmatiser oracle fixtures under tests/fixtures.

The expected outputs come from reference implementations that are independent
of the C++ code: NLTK's PorterStemmer (all three modes), NLTK's LancasterStemmer,
the Snowball project's generated English stemmer (``snowballstemmer``), and
NLTK's WordNetLemmatizer reading the bundled WordNet 3.0 files.

Usage: python3 scripts/gen_oracle_fixtures.py --full-wordnet <WordNet-3.0/dict>
"""

import argparse
import os
import random
import re
import shutil
import tempfile

from nltk.stem.lancaster import LancasterStemmer
from nltk.stem.porter import PorterStemmer
import snowballstemmer

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)
ALPHA = re.compile(r"^[a-z]+$")


def load_vocabulary(wordnet_dir):
    words = set()
    for pos in ("noun", "verb", "adj", "adv"):
        with open(os.path.join(wordnet_dir, "index." + pos), encoding="utf-8") as fp:
            for line in fp:
                if line.startswith(" "):
                    continue
                lemma = line.split(" ", 1)[0]
                if ALPHA.match(lemma):
                    words.add(lemma)
        with open(os.path.join(wordnet_dir, pos + ".exc"), encoding="utf-8") as fp:
            for line in fp:
                for term in line.split():
                    if ALPHA.match(term):
                        words.add(term)
    # Regular inflections of verb lemmas exercise the suffix rules harder than
    # dictionary headwords alone.
    with open(os.path.join(wordnet_dir, "index.verb"), encoding="utf-8") as fp:
        for line in fp:
            lemma = line.split(" ", 1)[0]
            if ALPHA.match(lemma) and len(lemma) > 3:
                words.update({lemma + "s", lemma + "ing", lemma + "ed", lemma + "er"})
    return sorted(words)


def write_pairs(path, pairs):
    with open(path, "w", encoding="utf-8") as fp:
        for word, out in pairs:
            fp.write(f"{word}\t{out}\n")


def load_nltk_wordnet(full_dict_dir):
    """NLTK's reader needs the complete WordNet 3.0 dict (data.*, index.sense,
    lexnames), not only the index and exception files the toolkit bundles."""
    import nltk

    data_root = tempfile.mkdtemp(prefix="nltk-data-")
    shutil.copytree(full_dict_dir, os.path.join(data_root, "corpora", "wordnet"))
    nltk.data.path.insert(0, data_root)
    from nltk.corpus import wordnet

    wordnet.ensure_loaded()
    return wordnet


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wordnet", default=os.path.join(ROOT, "data", "wordnet"))
    ap.add_argument("--full-wordnet", required=True,
                    help="complete WordNet 3.0 dict directory (for the NLTK oracle)")
    ap.add_argument("--out", default=os.path.join(ROOT, "tests", "fixtures"))
    args = ap.parse_args()

    vocab = load_vocabulary(args.wordnet)
    rng = random.Random(20250101)
    sample = sorted(rng.sample(vocab, 30000))
    lancaster_sample = sorted(rng.sample(vocab, 10000))

    stem_dir = os.path.join(args.out, "stemmers")
    os.makedirs(stem_dir, exist_ok=True)
    for mode, name in (
        (PorterStemmer.NLTK_EXTENSIONS, "porter_nltk.tsv"),
        (PorterStemmer.MARTIN_EXTENSIONS, "porter_martin.tsv"),
        (PorterStemmer.ORIGINAL_ALGORITHM, "porter_original.tsv"),
    ):
        st = PorterStemmer(mode=mode)
        write_pairs(os.path.join(stem_dir, name), [(w, st.stem(w)) for w in sample])

    snow = snowballstemmer.stemmer("english")
    write_pairs(os.path.join(stem_dir, "snowball_english.tsv"),
                [(w, snow.stemWord(w)) for w in sample])

    lan = LancasterStemmer()
    write_pairs(os.path.join(stem_dir, "lancaster.tsv"),
                [(w, lan.stem(w)) for w in lancaster_sample])

    wn = load_nltk_wordnet(args.full_wordnet)
    lem_sample = sorted(rng.sample(vocab, 5000))
    lem_dir = os.path.join(args.out, "lemmatizer")
    os.makedirs(lem_dir, exist_ok=True)
    with open(os.path.join(lem_dir, "morphy.tsv"), "w", encoding="utf-8") as fp:
        for w in lem_sample:
            outs = []
            for pos in ("n", "v", "a", "r"):
                lemmas = wn._morphy(w, pos)
                outs.append(min(lemmas, key=len) if lemmas else w)
            fp.write(w + "\t" + "\t".join(outs) + "\n")
    print(f"vocabulary={len(vocab)} porter/snowball={len(sample)} "
          f"lancaster={len(lancaster_sample)} lemmatizer={len(lem_sample)}")


if __name__ == "__main__":
    main()
