#!/usr/bin/env python3
"""Class counts through 12 edges without aborting, plus c=10 link Gauss codes."""

import sys
from collections import defaultdict

sys.path.insert(0, "/root/proj/scripts")
from generate_census import (
    generate_levels, build_classes, trace_medial, canonical_gauss, gauss_text,
)


def main():
    store, levels = generate_levels(12)
    for m in range(2, 13):
        classes = build_classes(store, levels[m])
        n_knots = n_links = 0
        link_words = []
        for members in classes:
            words = canonical_gauss(trace_medial(store.graphs[members[0]]))
            if len(words) == 1:
                n_knots += 1
            else:
                n_links += 1
                link_words.append(words)
        print(f"{m} crossings: {len(classes)} classes ({n_knots} knots, {n_links} links)",
              flush=True)
        if m == 10:
            with open("/root/proj/.scratch/links10.txt", "w") as f:
                for words in sorted(link_words, key=lambda ws: (len(ws), [len(w) for w in ws], ws)):
                    f.write(gauss_text(words) + "\n")


if __name__ == "__main__":
    main()
