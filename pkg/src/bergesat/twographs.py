"""Small ordinary-graph helpers shared by the checker and the oracle.

A 2-graph is a pair (n, pairs): n vertices labeled 0..n-1 and a tuple of
ascending vertex pairs.  Everything here targets link-sized graphs (at
most a handful of vertices), where brute-force canonical forms are exact
and fast: a connected graph is canonicalized by minimizing its edge list
over all degree-preserving relabelings, and a general graph by the
sorted multiset of its component forms.
"""

from itertools import combinations, permutations, product


def components(n, pairs):
    """Connected components as (sorted vertex list, edge count) pairs."""
    adj = {v: [] for v in range(n)}
    for x, y in pairs:
        adj[x].append(y)
        adj[y].append(x)
    seen = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        verts = []
        while stack:
            u = stack.pop()
            verts.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts.sort()
        ec = sum(len(adj[u]) for u in verts) // 2
        out.append((verts, ec))
    return out


def canonical_connected(verts, pairs):
    """Canonical form of a connected graph given by its vertex list and pairs.

    Vertices are first relabeled 0..k-1 grouped by ascending degree, then
    the lexicographically least edge tuple over all relabelings that
    permute within degree classes is taken.  Exact for any size, intended
    for k <= 8 or so.
    """
    k = len(verts)
    deg = {v: 0 for v in verts}
    for x, y in pairs:
        deg[x] += 1
        deg[y] += 1
    by_deg = sorted(verts, key=lambda v: (deg[v], v))
    base = {v: i for i, v in enumerate(by_deg)}
    # contiguous index ranges per degree class
    classes = []
    i = 0
    while i < k:
        j = i
        while j < k and deg[by_deg[j]] == deg[by_deg[i]]:
            j += 1
        classes.append(range(i, j))
        i = j
    base_pairs = [tuple(sorted((base[x], base[y]))) for x, y in pairs]
    best = None
    for perms in product(*(permutations(c) for c in classes)):
        relab = {}
        for c, p in zip(classes, perms):
            for src, dst in zip(c, p):
                relab[src] = dst
        cand = tuple(sorted(tuple(sorted((relab[x], relab[y]))) for x, y in base_pairs))
        if best is None or cand < best:
            best = cand
    degs = tuple(sorted(deg.values()))
    return (k, degs, best)


def canonical_form(n, pairs):
    """Canonical form of an arbitrary 2-graph: multiset of component forms.

    Isolated vertices contribute the trivial component form (1, (0,), ()).
    """
    forms = []
    for verts, _ in components(n, pairs):
        keep = set(verts)
        sub = [p for p in pairs if p[0] in keep and p[1] in keep]
        forms.append(canonical_connected(verts, sub))
    return tuple(sorted(forms))


def are_isomorphic(g1, g2):
    """Isomorphism of two (n, pairs) graphs; degree-multiset prefilter first."""
    n1, p1 = g1
    n2, p2 = g2
    if n1 != n2 or len(p1) != len(p2):
        return False
    d1 = [0] * n1
    d2 = [0] * n2
    for x, y in p1:
        d1[x] += 1
        d1[y] += 1
    for x, y in p2:
        d2[x] += 1
        d2[y] += 1
    if sorted(d1) != sorted(d2):
        return False
    return canonical_form(n1, tuple(p1)) == canonical_form(n2, tuple(p2))


# --- constructors for the named link shapes -------------------------------

def path(k):
    return (k, tuple((i, i + 1) for i in range(k - 1)))


def cycle(k):
    return (k, tuple(tuple(sorted((i, (i + 1) % k))) for i in range(k)))


def complete(k):
    return (k, tuple(combinations(range(k), 2)))


def complete_minus_edge(k):
    pairs = tuple(p for p in combinations(range(k), 2) if p != (0, 1))
    return (k, pairs)


def star(leaves):
    return (leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def matching(k):
    return (2 * k, tuple((2 * i, 2 * i + 1) for i in range(k)))


def complete_bipartite(a, b):
    return (a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def t0():
    """The 5-vertex tree with degree sequence (1, 1, 1, 2, 3)."""
    return (5, ((0, 1), (1, 2), (1, 3), (3, 4)))


def disjoint(g1, g2):
    n1, p1 = g1
    n2, p2 = g2
    return (n1 + n2, p1 + tuple((x + n1, y + n1) for x, y in p2))
