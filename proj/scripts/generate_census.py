#!/usr/bin/env python3
"""Generate the bundled census fixtures (data/knots_c12.csv, data/links_c10.csv).

Prime reduced alternating link diagrams with c crossings correspond to
2-connected loopless planar multigraph embeddings (checkerboard / Tait
graphs) with c edges, and two such embedded graphs give the same link type
exactly when they are related by flypes, planar duality (the other
checkerboard color), and sphere symmetries including reflection (mirror
image).  So:

  1. enumerate all such embeddings as combinatorial maps (rotation systems),
     level by level -- inserting an edge across a face and subdividing an
     edge both preserve the class and suffice to reach everything from the
     2-cycle, and face insertion keeps planarity for free;
  2. group the maps into orbits under flypes and duality (reflection is
     already folded into the canonical form);
  3. for one representative per orbit, trace the medial diagram's strands
     and emit the resulting Gauss code.

A flype acts at a direct edge e = uv together with a run of attached pieces
at the 2-cut {u,v} occupying a contiguous stretch of rotation slots next to
e at both u and v.  The run is flipped half a turn about the axis through
its two boundary pivots: its darts at u move to v (and vice versa) in
end-for-end reversed order, every internal rotation reverses, and e hops to
the far side of the run.  (Keeping the piece order while swapping the ends
is a mutation, not a flype -- it starts producing wrong identifications at
11 crossings where mutant pairs live.)  Flypes whose "crossing" lies in the
other checkerboard color show up as flypes of the dual map, so closing
under dual + one-sided flypes covers everything.

The per-crossing-number class counts are asserted against the known census
populations before anything is written.
"""

import sys
from collections import defaultdict
from itertools import combinations

MAX_EDGES = 12
MAX_LINK_EDGES = 10

KNOT_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 18, 9: 41, 10: 123, 11: 367, 12: 1288}
LINK_COUNTS = {2: 1, 3: 0, 4: 1, 5: 1, 6: 5, 7: 7, 8: 21, 9: 55, 10: 174,
               11: 548, 12: 2020}

# A map on m edges is a rotation permutation sigma over darts 0..2m-1; dart d
# belongs to edge d//2 and its reversal is d^1.  Vertices are sigma-cycles,
# faces are cycles of phi(d) = sigma[d^1].


def inverse(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def cycles_of(perm):
    seen = [False] * len(perm)
    out = []
    for d in range(len(perm)):
        if seen[d]:
            continue
        cyc = []
        x = d
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def phi_of(sigma):
    return tuple(sigma[d ^ 1] for d in range(len(sigma)))


def check_map(sigma):
    """Connected planar map invariants: Euler characteristic 2."""
    n = len(sigma)
    assert n % 2 == 0
    assert sorted(sigma) == list(range(n))
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        d = stack.pop()
        for nxt in (sigma[d], d ^ 1):
            if not seen[nxt]:
                seen[nxt] = True
                stack.append(nxt)
    assert all(seen), "map not connected"
    v = len(cycles_of(sigma))
    f = len(cycles_of(phi_of(sigma)))
    assert v - n // 2 + f == 2, "map not planar"


def encode(sigma, root):
    """Complete invariant of the map rooted at `root` with orientation sigma."""
    n = len(sigma)
    label = [-1] * n
    label[root] = 0
    order = [root]
    seq = []
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nxt in (sigma[d], d ^ 1):
            if label[nxt] < 0:
                label[nxt] = len(order)
                order.append(nxt)
            seq.append(label[nxt])
    return tuple(seq)


def canonical(sigma):
    """Canonical form up to sphere isomorphism and reflection."""
    best = None
    for s in (tuple(sigma), inverse(sigma)):
        for root in range(len(s)):
            e = encode(s, root)
            if best is None or e < best:
                best = e
    return best


def rot_of(sigma):
    """vertex id -> rotation list of darts; plus dart -> vertex id."""
    rots = cycles_of(sigma)
    vert = [0] * len(sigma)
    for i, cyc in enumerate(rots):
        for d in cyc:
            vert[d] = i
    return rots, vert


def sigma_from_rots(rots):
    n = sum(len(r) for r in rots)
    sigma = [0] * n
    for cyc in rots:
        for i, d in enumerate(cyc):
            sigma[d] = cyc[(i + 1) % len(cyc)]
    return tuple(sigma)


BASE = sigma_from_rots([[0, 2], [1, 3]])  # two vertices joined by two edges


def children(sigma):
    """All maps obtained by subdividing an edge or inserting an edge into a
    face between two corners at distinct vertices."""
    n = len(sigma)
    m = n // 2
    rots, vert = rot_of(sigma)
    out = set()

    for e in range(m):
        a, b = 2 * e, 2 * e + 1
        new = [list(c) for c in rots]
        # Edge e keeps dart a; dart b moves to the new vertex w, and the new
        # edge m runs from w (dart 2m) to b's old spot (dart 2m+1).
        new[vert[b]][new[vert[b]].index(b)] = n + 1
        new.append([b, n])
        out.add(canonical(sigma_from_rots(new)))

    phi = phi_of(sigma)
    for face in cycles_of(phi):
        for d1, d2 in combinations(face, 2):
            u, v = vert[d1 ^ 1], vert[d2 ^ 1]
            if u == v:
                continue
            new = [list(c) for c in rots]
            # Corner of this face at the head of d: right after d^1 in its
            # rotation.  Insert dart n at d1's corner, dart n+1 at d2's.
            new[u].insert(new[u].index(d1 ^ 1) + 1, n)
            new[v].insert(new[v].index(d2 ^ 1) + 1, n + 1)
            out.add(canonical(sigma_from_rots(new)))
    return out


def generate_levels(max_edges):
    levels = {2: {canonical(BASE): BASE}}
    for m in range(3, max_edges + 1):
        fresh = {}
        for parent in levels[m - 1].values():
            for key in children(parent):
                if key not in fresh:
                    fresh[key] = reconstruct(key)
        levels[m] = fresh
        print(f"  {m} edges: {len(fresh)} maps", flush=True)
    return levels


def reconstruct(code):
    """Rebuild a sigma permutation from its canonical encoding."""
    n = len(code) // 2
    sigma = [0] * n
    alpha = [0] * n
    for d in range(n):
        sigma[d] = code[2 * d]
        alpha[d] = code[2 * d + 1]
    # Relabel so that alpha(d) = d^1: pair darts in first-encounter order.
    rename = [-1] * n
    nxt = 0
    for d in range(n):
        if rename[d] < 0:
            rename[d] = nxt
            rename[alpha[d]] = nxt + 1
            nxt += 2
    out = [0] * n
    for d in range(n):
        out[rename[d]] = rename[sigma[d]]
    return tuple(out)


def dual(sigma):
    return phi_of(sigma)


# ---------------------------------------------------------------------------
# Flypes.


def flype_images(sigma):
    out = set()
    for s in (tuple(sigma), inverse(sigma)):
        out.update(one_sided_flypes(s))
    return out


def one_sided_flypes(sigma):
    n = len(sigma)
    m = n // 2
    rots, vert = rot_of(sigma)
    out = set()
    for e in range(m):
        a, b = 2 * e, 2 * e + 1
        u, v = vert[a], vert[b]
        if u == v:
            continue  # loopless anyway
        # Items at the 2-cut {u,v}: direct edges and connected pieces.
        piece = {}  # vertex -> piece id (vertices other than u, v)
        for w in range(len(rots)):
            if w not in (u, v):
                piece[w] = w
        def find(x):
            while piece[x] != x:
                piece[x] = piece[piece[x]]
                x = piece[x]
            return x
        for d in range(0, n, 2):
            p, q = vert[d], vert[d ^ 1]
            if p not in (u, v) and q not in (u, v):
                piece[find(p)] = find(q)

        def item_of(dart_at_cut):
            far = vert[dart_at_cut ^ 1]
            if far in (u, v):
                return ("e", dart_at_cut // 2)
            return ("p", find(far))

        rot_u = rots[u][rots[u].index(a):] + rots[u][:rots[u].index(a)]
        rot_v = rots[v][rots[v].index(b):] + rots[v][:rots[v].index(b)]
        for t in range(1, len(rot_u) - 1):
            run_u = rot_u[1:1 + t]
            run_items = {item_of(d) for d in run_u}
            # The run must be item-closed at u ...
            if any(item_of(d) in run_items for d in rot_u[1 + t:]):
                continue
            # ... and sit at the tail of rot_v (adjacent to b on the other
            # side, rotations at v running mirrored relative to u).
            run_v = [d for d in rot_v[1:] if item_of(d) in run_items]
            if rot_v[-len(run_v):] != run_v:
                continue
            keep_u = rot_u[1 + t:]
            keep_v = rot_v[1:len(rot_v) - len(run_v)]
            run_verts = {w for w in piece
                         if find(w) in {it[1] for it in run_items
                                        if it[0] == "p"}}

            # Half-turn about the run's boundary pivots: the transplanted
            # darts read end-for-end reversed, interiors reflect.
            new = [list(c) for c in rots]
            new[u] = [a] + keep_u + list(reversed(run_v))
            new[v] = [b] + list(reversed(run_u)) + keep_v
            for w in run_verts:
                new[w] = list(reversed(rots[w]))
            cand = sigma_from_rots(new)
            check_map(cand)
            out.add(canonical(cand))
    return out


# ---------------------------------------------------------------------------
# Medial link of a map.


def trace_medial(sigma):
    """Strand words of the medial link.  Strand state: (edge, entry end,
    face); crossing the edge switches to its other face and leaves through
    the corner of that face at the far endpoint."""
    n = len(sigma)
    phi = phi_of(sigma)
    face_of = [0] * n
    for fid, cyc in enumerate(cycles_of(phi)):
        for d in cyc:
            face_of[d] = fid

    for k in range(n // 2):
        assert face_of[2 * k] != face_of[2 * k + 1], "bridge edge"

    sigma_inv = inverse(sigma)

    def step(state):
        k, i, f = state
        f0, f1 = face_of[2 * k], face_of[2 * k + 1]
        fprime = f1 if f == f0 else f0
        exit_dart = 2 * k + (1 - i)
        prev_dart = sigma_inv[exit_dart]
        next_dart = sigma[exit_dart]
        if face_of[exit_dart] == fprime:
            nxt = prev_dart
        elif face_of[next_dart] == fprime:
            nxt = next_dart
        else:
            raise AssertionError("no corner in the target face")
        return (nxt // 2, nxt % 2, fprime)

    def reverse(state):
        k, i, f = state
        f0, f1 = face_of[2 * k], face_of[2 * k + 1]
        return (k, 1 - i, f1 if f == f0 else f0)

    visited = set()
    words = []
    for k in range(n // 2):
        for i in (0, 1):
            for f in (face_of[2 * k], face_of[2 * k + 1]):
                start = (k, i, f)
                if start in visited:
                    continue
                word = []
                s = start
                while True:
                    visited.add(s)
                    word.append(s[0] + 1)
                    s = step(s)
                    if s == start:
                        break
                s = reverse(start)
                assert s not in visited
                while s not in visited:
                    visited.add(s)
                    s = step(s)
                words.append(word)
    assert len(visited) == 2 * n
    counts = defaultdict(int)
    for w in words:
        for x in w:
            counts[x] += 1
    assert all(c == 2 for c in counts.values())
    return words


def canonical_gauss(words):
    rename = {}
    out = []
    for w in words:
        comp = []
        for x in w:
            if x not in rename:
                rename[x] = len(rename) + 1
            comp.append(rename[x])
        out.append(comp)
    return out


def gauss_text(words):
    return "[" + ",".join("[" + ",".join(map(str, w)) + "]" for w in words) + "]"


# ---------------------------------------------------------------------------


def build_classes(level):
    """Orbits of the level's maps under flypes and duality."""
    keys = sorted(level.keys())
    index = {k: i for i, k in enumerate(keys)}
    parent = list(range(len(keys)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for k in keys:
        sigma = level[k]
        dk = canonical(dual(sigma))
        assert dk in index, "planar dual missing from the level"
        union(index[k], index[dk])
        for fk in flype_images(sigma):
            assert fk in index, "flype image missing from the level"
            union(index[k], index[fk])

    classes = defaultdict(list)
    for k in keys:
        classes[find(index[k])].append(k)
    return [sorted(v) for _, v in sorted(classes.items())]


def self_test():
    check_map(BASE)
    hopf = trace_medial(BASE)
    assert sorted(map(len, hopf)) == [2, 2], hopf
    # Triangle: vertices 0,1,2; edges 0=(0,1), 1=(1,2), 2=(2,0).
    tri = sigma_from_rots([[0, 5], [1, 2], [3, 4]])
    check_map(tri)
    trefoil = canonical_gauss(trace_medial(tri))
    assert trefoil == [[1, 2, 3, 1, 2, 3]], trefoil
    # C4.
    c4 = sigma_from_rots([[0, 7], [1, 2], [3, 4], [5, 6]])
    check_map(c4)
    assert sorted(map(len, trace_medial(c4))) == [4, 4]
    # Flype sanity: triangle with a doubled edge has flypes; all its flype
    # images must be maps of the same 4-edge level.
    lv = generate_levels(4)
    assert len(lv[3]) == 2 and len(lv[4]) == 3


def main():
    self_test()
    print("enumerating 2-connected loopless planar maps:", flush=True)
    levels = generate_levels(MAX_EDGES)

    knots = []  # (c, gauss words)
    links = []
    for m in range(2, MAX_EDGES + 1):
        classes = build_classes(levels[m])
        per_class = []
        for members in classes:
            words = canonical_gauss(trace_medial(levels[m][members[0]]))
            per_class.append(words)
        per_class.sort(key=lambda ws: (len(ws), [len(w) for w in ws], ws))
        n_knots = n_links = 0
        for words in per_class:
            if len(words) == 1:
                n_knots += 1
                if m >= 3:
                    knots.append((m, words))
            else:
                n_links += 1
                if m <= MAX_LINK_EDGES:
                    links.append((m, words))
        print(f"  {m} crossings: {len(classes)} classes "
              f"({n_knots} knots, {n_links} links)", flush=True)
        if m >= 3 and n_knots != KNOT_COUNTS.get(m, 0):
            sys.exit(f"knot count mismatch at c={m}: got {n_knots}, "
                     f"want {KNOT_COUNTS.get(m, 0)}")
        if n_links != LINK_COUNTS.get(m, 1 if m == 2 else 0):
            sys.exit(f"link count mismatch at c={m}: got {n_links}, "
                     f"want {LINK_COUNTS.get(m)}")

    with open("data/knots_c12.csv", "w") as out:
        out.write("Name,Gauss Code\n")
        index = defaultdict(int)
        for c, words in knots:
            index[c] += 1
            out.write(f'{c}a{index[c]},"{gauss_text(words)}"\n')
    with open("data/links_c10.csv", "w") as out:
        out.write("Name,Gauss Code\n")
        index = defaultdict(int)
        for c, words in links:
            index[c] += 1
            out.write(f'L{c}a{index[c]},"{gauss_text(words)}"\n')
    print(f"wrote {len(knots)} knots and {len(links)} links")


if __name__ == "__main__":
    main()
