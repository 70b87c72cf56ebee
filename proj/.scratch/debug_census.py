#!/usr/bin/env python3
"""Debug the c=10 link class count: validate every union with the Whitney
rank polynomial (2-switch invariant; duality transposes it)."""

import sys
from collections import defaultdict
from itertools import combinations

sys.path.insert(0, "/root/proj/scripts")
from generate_census import (
    Store, generate_levels, two_switch_neighbors, dual_edges, trace_medial,
    canonical_gauss, normalize,
)


def rank_poly(edges):
    """Multiset of (corank, nullity) pairs over all edge subsets."""
    m = len(edges)
    verts = sorted({x for e in edges for x in e})
    n = len(verts)
    full_rank = None
    pairs = defaultdict(int)

    def rank(subset_edges):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for u, v in subset_edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    full_rank = rank(edges)
    for mask in range(1 << m):
        sub = [edges[i] for i in range(m) if mask >> i & 1]
        r = rank(sub)
        pairs[(full_rank - r, len(sub) - r)] += 1
    return tuple(sorted(pairs.items()))


def transpose(poly):
    return tuple(sorted((((j, i), c) for (i, j), c in poly)))


def main():
    store, levels = generate_levels(10)
    m = 10
    gids = levels[m]
    print(f"{len(gids)} graphs at {m} edges; computing rank polynomials...", flush=True)
    poly = {g: rank_poly(store.graphs[g]) for g in gids}
    print("done", flush=True)

    parent = {g: g for g in gids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b, why):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    bad = 0
    for gid in gids:
        edges = store.graphs[gid]
        for nb in two_switch_neighbors(edges):
            other = store.find(nb)
            assert other is not None
            if poly[other] != poly[gid]:
                bad += 1
                print(f"BAD 2-switch: {edges} -> {store.graphs[other]}")
            union(gid, other, "switch")
        dual = store.find(dual_edges(edges))
        assert dual is not None
        if poly[dual] != transpose(poly[gid]):
            bad += 1
            print(f"BAD dual: {edges} -> {store.graphs[dual]}")
        union(gid, dual, "dual")

    classes = defaultdict(list)
    for gid in gids:
        classes[find(gid)].append(gid)
    print(f"{len(classes)} classes, {bad} invariant violations")

    # Check class-internal consistency: every member's poly must be the
    # representative's poly or its transpose.
    mixed = 0
    for root, members in classes.items():
        base = poly[members[0]]
        for g in members[1:]:
            if poly[g] not in (base, transpose(base)):
                mixed += 1
                print(f"MIXED class rooted {root}: member {g}")
                break
    print(f"{mixed} mixed classes")

    # Component counts per class for the knot/link split.
    n_knots = n_links = 0
    for root, members in sorted(classes.items()):
        words = trace_medial(store.graphs[members[0]])
        if len(words) == 1:
            n_knots += 1
        else:
            n_links += 1
    print(f"{n_knots} knots, {n_links} links")

    # How many distinct poly-pairs exist among link classes? If the partition
    # by {poly, transpose} is finer than the class partition, unions were too
    # aggressive in a poly-respecting way is impossible -- but count anyway.
    pair_key = lambda g: min(poly[g], transpose(poly[g]))
    pairs_links = set()
    pairs_all = set()
    for g in gids:
        pairs_all.add(pair_key(g))
    print(f"{len(pairs_all)} distinct rank-poly pairs among all {len(gids)} graphs")


if __name__ == "__main__":
    main()
