#!/usr/bin/env python3
"""Independent enumeration of 2-connected loopless planar multigraphs with m
edges (by underlying simple support + multiplicities), probed against the
level-by-level store to find any missing graphs."""

import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx

sys.path.insert(0, "/root/proj/scripts")
from generate_census import Store, generate_levels, normalize, same_multigraph

M = int(sys.argv[1]) if len(sys.argv) > 1 else 10


def compositions(total, parts):
    """All tuples of `parts` positive ints summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def simple_supports_brute(v, kmax):
    """Unlabeled 2-connected planar simple graphs on exactly v vertices with
    at most kmax edges, via labeled subset brute force."""
    slots = list(combinations(range(v), 2))
    found = []  # list of graphs
    buckets = defaultdict(list)
    for k in range(v, kmax + 1):
        for subset in combinations(range(len(slots)), k):
            deg = [0] * v
            for s in subset:
                a, b = slots[s]
                deg[a] += 1
                deg[b] += 1
            if min(deg) < 2:
                continue
            g = nx.Graph(slots[s] for s in subset)
            if g.number_of_nodes() != v or not nx.is_biconnected(g):
                continue
            if not nx.check_planarity(g, counterexample=False)[0]:
                continue
            key = (k, tuple(sorted(deg)))
            hit = False
            for other in buckets[key]:
                if nx.is_isomorphic(g, other):
                    hit = True
                    break
            if not hit:
                buckets[key].append(g)
                found.append(g)
    return found


def path_edges(a, b, length, next_id):
    """Edges of an a-b path with `length` edges through fresh vertices."""
    cur = a
    out = []
    for i in range(length - 1):
        out.append((cur, next_id))
        cur = next_id
        next_id += 1
    out.append((cur, b))
    return out, next_id


def theta(a, b, c):
    edges = []
    nid = 2
    for ln in (a, b, c):
        part, nid = path_edges(0, 1, ln, nid)
        edges += part
    return edges


def big_vertex_supports(v, kmax):
    """Supports with v >= 8 vertices (so k in {v, v+1, v+2} up to kmax):
    cycles, thetas, and subdivided cycle-rank-3 bases."""
    out = []
    if v <= kmax:
        out.append([(i, (i + 1) % v) for i in range(v)])  # cycle
    if v + 1 <= kmax:
        for a in range(1, v + 2):
            for b in range(a, v + 2):
                c = v + 1 - a - b
                if c < b:
                    continue
                if a == 1 and b == 1:
                    continue  # parallel edge, not simple
                out.append(theta(a, b, c))
    if v + 2 <= kmax:
        # Cycle-rank-3 bases: loopy multigraphs, min degree >= 3, e0 = n0 + 2.
        for n0 in range(1, 5):
            e0 = n0 + 2
            slots = [(i, j) for i in range(n0) for j in range(i, n0)]
            for mult in multiplicity_vectors(e0, len(slots)):
                deg = [0] * n0
                base = []
                for (i, j), w in zip(slots, mult):
                    for _ in range(w):
                        base.append((i, j))
                        deg[i] += 1
                        deg[j] += 1
                if any(d < 3 for d in deg):
                    continue
                gs = nx.MultiGraph(base)
                if gs.number_of_nodes() != n0 or not nx.is_connected(gs):
                    continue
                # Distribute v - n0 subdivision points over the e0 edges.
                for pts in nonneg_compositions(v - n0, e0):
                    nid = n0
                    edges = []
                    ok = True
                    for (a, b), extra in zip(base, pts):
                        if a == b and extra < 2:
                            ok = False
                            break
                        part, nid = path_edges(a, b, extra + 1, nid)
                        edges += part
                    if not ok:
                        continue
                    g = nx.Graph()
                    g.add_edges_from(edges)
                    if g.number_of_edges() != len(edges):
                        continue  # parallel edges survived: not simple
                    if not nx.is_biconnected(g):
                        continue
                    if not nx.check_planarity(g, counterexample=False)[0]:
                        continue
                    out.append(edges)
    # Dedupe.
    uniq = []
    for edges in out:
        g = nx.Graph(edges)
        if not any(nx.is_isomorphic(g, nx.Graph(o)) for o in uniq):
            uniq.append(edges)
    return [list(nx.Graph(e).edges()) for e in uniq]


def multiplicity_vectors(total, parts):
    return compositions(total + parts, parts) if False else (
        tuple(x - 0 for x in c) for c in nonneg_compositions(total, parts))


def nonneg_compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in nonneg_compositions(total - first, parts - 1):
            yield (first,) + rest


def main():
    store, levels = generate_levels(M)
    level_set = set(levels[M])
    print(f"store has {len(levels[M])} graphs with {M} edges", flush=True)

    probes = []  # normalized multigraph edge tuples

    # v = 2: dipole.
    probes.append(normalize([(0, 1)] * M))

    for v in range(3, min(M, 7) + 1):
        sup = simple_supports_brute(v, M)
        print(f"v={v}: {len(sup)} simple supports", flush=True)
        for g in sup:
            edges = list(g.edges())
            k = len(edges)
            for comp in compositions(M, k):
                multi = []
                for e, w in zip(edges, comp):
                    multi += [e] * w
                probes.append(normalize(multi))

    for v in range(8, M + 1):
        sup = big_vertex_supports(v, M)
        print(f"v={v}: {len(sup)} simple supports", flush=True)
        for edges in sup:
            k = len(edges)
            for comp in compositions(M, k):
                multi = []
                for e, w in zip(edges, comp):
                    multi += [e] * w
                probes.append(normalize(multi))

    print(f"{len(probes)} labeled probes; checking against store...", flush=True)
    missing = []
    for edges in probes:
        gid = store.find(edges)
        if gid is None:
            if not any(same_multigraph(edges, o) for o in missing):
                missing.append(edges)
        else:
            assert gid in level_set
    print(f"{len(missing)} distinct multigraphs missing from the store:")
    for edges in missing:
        print(" ", edges)

    # Also count the independent enumeration's distinct total for comparison.
    s2 = Store()
    total = 0
    for edges in probes:
        _, inserted = s2.insert(edges)
        if inserted:
            total += 1
    print(f"independent enumeration found {total} distinct multigraphs "
          f"(store has {len(levels[M])})")


if __name__ == "__main__":
    main()
