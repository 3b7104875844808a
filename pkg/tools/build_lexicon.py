"""Regenerate ``tag_lexicon.tsv`` from Brill's lexicon as shipped in pattern3.

Usage: python tools/build_lexicon.py /path/to/pattern3/text/en/en-lexicon.txt

The source lexicon lists the most likely tag first; we keep only that tag,
lowercase every word, and let a lowercase entry win over a capitalized one.
"""

import re
import sys
from pathlib import Path

WORD_TAGS = {
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
}
WORD_RE = re.compile(r"^[a-z0-9]+(?:['’-][a-z0-9]+)*$")

HEADER = """\
# word<TAB>PENN_TAG, lowercase words, most likely tag only.
# Derived from the lexicon of Brill's rule-based tagger v1.14
# (Copyright 1993 MIT and University of Pennsylvania, MIT license)
# with additions from the CMU Twitter POS data (CC-BY 3.0),
# as redistributed by the pattern3 package (BSD license).
# Regenerate with tools/build_lexicon.py.
"""


def main(src: str, dst: str) -> None:
    lexicon: dict[str, tuple[bool, str]] = {}
    for line in Path(src).read_text(encoding="utf-8").splitlines():
        if line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2 or parts[1] not in WORD_TAGS:
            continue
        word = parts[0]
        norm = word.casefold()
        if not WORD_RE.match(norm):
            continue
        is_lower = word == norm
        seen = lexicon.get(norm)
        if seen is None or (is_lower and not seen[0]):
            lexicon[norm] = (is_lower, parts[1])
    with open(dst, "w", encoding="utf-8") as fh:
        fh.write(HEADER)
        for word in sorted(lexicon):
            fh.write(f"{word}\t{lexicon[word][1]}\n")


if __name__ == "__main__":
    here = Path(__file__).resolve().parent.parent
    out = sys.argv[2] if len(sys.argv) > 2 else str(here / "src/sloggen/data/tag_lexicon.tsv")
    main(sys.argv[1], out)
