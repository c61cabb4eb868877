"""Independent ground truth for the rest of the package.

Three tools live here, deliberately sharing no logic with the checker:

* a matching-based Berge degree (augmenting paths on the link's
  vertex/edge incidence structure), cross-checked everywhere against the
  closed-form |N(v)| - tree(L(v));
* an exhaustive saturation-spectrum sweep over all edge subsets for tiny
  n, vectorized over bitmasks;
* an exhaustive enumeration of the small link shapes together with the
  degree-deficiency bound table computed from first principles.

The exhaustive sweep is guaranteed for n <= 6 (2^20 subsets).  n = 7 is
permitted behind ``allow_large=True`` and is a genuine batch job: 2^35
subsets, intended to be split with ``shards``/``shard`` and merged with
``merge_spectrum_results``.  No per-mask isomorphism pruning is applied;
deduplication happens only among recorded witnesses.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .hypercore import Hypergraph3
from . import twographs


# --- matching route for the Berge degree ----------------------------------

def _max_matching(pairs):
    """Maximum matching between link vertices and the pairs they lie in."""
    verts = sorted({v for p in pairs for v in p})
    inc = {v: [] for v in verts}
    for j, (x, y) in enumerate(pairs):
        inc[x].append(j)
        inc[y].append(j)
    owner = {}

    def augment(v, seen):
        for j in inc[v]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = v
                return True
        return False

    size = 0
    for v in verts:
        if augment(v, set()):
            size += 1
    return size


def berge_degree_matching(g: Hypergraph3, v: int) -> int:
    """Berge degree of v as a maximum incidence matching.

    Independent of the component-count formula in hypercore; the two must
    agree on every input.
    """
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex id {v!r} out of range [0, {g.vertex_count - 1}]")
    pairs = [tuple(x for x in e if x != v) for e in g.edges if v in e]
    return _max_matching(pairs)


# --- exhaustive spectrum ---------------------------------------------------

@dataclass
class SpectrumResult:
    n: int
    ell: int
    realizable: tuple[int, ...]
    witnesses: dict
    counts: dict | None
    sat_observed: int | None
    ex_observed: int | None


_BLOCK = 1 << 20


def _popcount(arr):
    f = getattr(np, "bitwise_count", None)
    if f is not None:
        return f(arr)
    pc16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    out = pc16[arr & 0xFFFF].astype(np.int64)
    out += pc16[(arr >> 16) & 0xFFFF]
    out += pc16[(arr >> 32) & 0xFFFF]
    return out


def _degree_tables(n, triples, pos):
    """Per-vertex Berge-degree lookup over all link bit patterns.

    Entry v is an int8 array of length 2^len(pos[v]): the Berge degree of
    v (by the matching route) when exactly the triples flagged by the
    pattern are present.
    """
    tables = []
    for v in range(n):
        plist = [tuple(x for x in triples[t] if x != v) for t in pos[v]]
        k = len(plist)
        tab = np.zeros(1 << k, dtype=np.int8)
        for code in range(1 << k):
            chosen = [plist[j] for j in range(k) if code >> j & 1]
            tab[code] = _max_matching(chosen)
        tables.append(tab)
    return tables


def exhaustive_spectrum(n, ell, allow_large=False, shards=1, shard=0) -> SpectrumResult:
    """Every saturated edge count on n labeled vertices, by full sweep.

    Iterates all 2^C(n,3) edge subsets in bitmask order (bit i is the
    i-th triple in lexicographic order) and records each saturated one.
    For every realizable m the witness is the saturated subset with the
    smallest mask value, and counts[m] is the number of labeled saturated
    graphs with m edges.  Deterministic.
    """
    if n < 0 or ell < 1:
        raise ValueError(f"bad arguments n={n}, ell={ell}")
    if n > 7 or (n == 7 and not allow_large):
        raise ValueError(
            f"n={n} exceeds the exhaustive cap (6; 7 requires allow_large=True)"
        )
    if not 0 <= shard < shards:
        raise ValueError(f"shard {shard} out of range for {shards} shards")

    triples = list(combinations(range(n), 3))
    T = len(triples)
    if T == 0:
        # no possible edges: the empty graph is vacuously saturated
        g = Hypergraph3(n, ())
        if shard == 0:
            return SpectrumResult(n, ell, (0,), {0: g}, {0: 1}, 0, 0)
        return SpectrumResult(n, ell, (), {}, {}, None, None)
    pos = [[i for i, t in enumerate(triples) if v in t] for v in range(n)]
    tables = _degree_tables(n, triples, pos)

    total = 1 << T
    lo = total * shard // shards
    hi = total * (shard + 1) // shards

    best_mask = {}
    counts = {}

    for base in range(lo, hi, _BLOCK):
        masks = np.arange(base, min(base + _BLOCK, hi), dtype=np.uint64)
        codes = []
        for v in range(n):
            code = np.zeros(len(masks), dtype=np.uint32)
            for j, p in enumerate(pos[v]):
                code |= ((masks >> np.uint64(p)) & np.uint64(1)).astype(np.uint32) << j
            codes.append(code)
        dbs = [tables[v][codes[v]] for v in range(n)]
        ok = np.ones(len(masks), dtype=bool)
        for v in range(n):
            ok &= dbs[v] <= ell - 1
        for t in range(T):
            if not ok.any():
                break
            present = (masks >> np.uint64(t)) & np.uint64(1) != 0
            creates = np.zeros(len(masks), dtype=bool)
            for v in triples[t]:
                j = pos[v].index(t)
                creates |= tables[v][codes[v] | (1 << j)] >= ell
            ok &= present | creates
        if not ok.any():
            continue
        sel = masks[ok]
        ms = _popcount(sel)
        for m, c in zip(*np.unique(ms, return_counts=True)):
            m = int(m)
            counts[m] = counts.get(m, 0) + int(c)
        for m in np.unique(ms):
            first = int(sel[ms == m][0])
            m = int(m)
            if m not in best_mask or first < best_mask[m]:
                best_mask[m] = first

    witnesses = {}
    for m, mask in best_mask.items():
        edges = tuple(triples[i] for i in range(T) if mask >> i & 1)
        witnesses[m] = Hypergraph3(n, edges)
    realizable = tuple(sorted(counts))
    sat = realizable[0] if realizable else None
    ex = realizable[-1] if realizable else None
    return SpectrumResult(n, ell, realizable, witnesses, counts, sat, ex)


def merge_spectrum_results(parts) -> SpectrumResult:
    """Merge shard results of one (n, ell) sweep; deterministic."""
    parts = list(parts)
    if not parts:
        raise ValueError("nothing to merge")
    n, ell = parts[0].n, parts[0].ell
    if any(p.n != n or p.ell != ell for p in parts):
        raise ValueError("mismatched shards")
    counts = {}
    witnesses = {}
    for p in parts:
        for m, c in (p.counts or {}).items():
            counts[m] = counts.get(m, 0) + c
        for m, w in p.witnesses.items():
            # earlier shards hold smaller masks; keep the first seen
            if m not in witnesses:
                witnesses[m] = w
    realizable = tuple(sorted(counts))
    sat = realizable[0] if realizable else None
    ex = realizable[-1] if realizable else None
    return SpectrumResult(n, ell, realizable, witnesses, counts, sat, ex)


def sat_ex_observed(n, ell, allow_large=False):
    """(min, max) of the realizable set, or None when nothing is realizable."""
    res = exhaustive_spectrum(n, ell, allow_large=allow_large)
    if not res.realizable:
        return None
    return (res.sat_observed, res.ex_observed)


# --- link catalog and the deficiency bound table ---------------------------

# the named shapes, in the published row order
_NAMED_ROWS = (
    ("4K2", 8, twographs.matching(4)),
    ("2K2+P3", 7, twographs.disjoint(twographs.matching(2), twographs.path(3))),
    ("3K2", 6, twographs.matching(3)),
    ("K2+K1,3", 6, twographs.disjoint(twographs.matching(1), twographs.star(3))),
    ("K2+P4", 6, twographs.disjoint(twographs.matching(1), twographs.path(4))),
    ("2P3", 6, twographs.disjoint(twographs.path(3), twographs.path(3))),
    ("K2+K3", 5, twographs.disjoint(twographs.matching(1), twographs.complete(3))),
    ("K2+P3", 5, twographs.disjoint(twographs.matching(1), twographs.path(3))),
    ("P5", 5, twographs.path(5)),
    ("K1,4", 5, twographs.star(4)),
    ("T0", 5, twographs.t0()),
)

PUBLISHED_BOUNDS = (18, 15, 15, 14, 12, 12, 9, 12, 9, 12, 9)


@dataclass
class LinkClass:
    vertices: int
    edge_count: int
    tree_count: int
    deficit: int
    degrees: tuple[int, ...]
    canon: tuple
    name: str | None


@dataclass
class CatalogReport:
    classes: list
    strata: dict
    computed_bounds: tuple[int, ...]
    published_bounds: tuple[int, ...]
    discrepancies: tuple[str, ...]
    row_names: tuple[str, ...]


def _connected_classes(max_vertices, max_edges):
    """Isomorphism classes of connected graphs, >= 2 vertices, <= max_edges edges."""
    out = {}
    for nv in range(2, max_vertices + 1):
        if nv - 1 > max_edges:
            break
        all_pairs = list(combinations(range(nv), 2))
        for ne in range(nv - 1, max_edges + 1):
            if ne > len(all_pairs):
                break
            for sub in combinations(all_pairs, ne):
                comps = twographs.components(nv, sub)
                if len(comps) != 1:
                    continue
                canon = twographs.canonical_connected(list(range(nv)), sub)
                if canon not in out:
                    out[canon] = (nv, ne)
    return out


def _bound_from_structure(edge_count, degrees):
    l1 = sum(1 for d in degrees if d == 1)
    l2 = sum(1 for d in degrees if d == 2)
    l4 = sum(1 for d in degrees if d == 4)
    return 6 - edge_count + 2 * l1 + l2 + 2 * l4


def enumerate_link_catalog(max_vertices=8, max_edges=6) -> CatalogReport:
    """All link shapes up to the given size, with the deficiency bound table.

    Enumerates every isomorphism class of 2-graphs without isolated
    vertices on at most max_vertices vertices with at most max_edges
    edges (connected classes first, then all disjoint combinations).
    Classes whose deficit |V| - tree is at most 4 and that span at least
    5 vertices are asserted to be exactly the named catalog, stratum by
    stratum, and for each named row both the recomputed bound
    6 - |E| + 2*L1 + L2 + 2*L4 and the published value are reported.
    """
    conn = _connected_classes(max_vertices, max_edges)
    conn_list = sorted(conn.items(), key=lambda kv: (kv[1][0], kv[1][1], kv[0]))

    combos = []

    def extend(start, used_v, used_e, acc):
        if acc:
            combos.append(tuple(acc))
        for i in range(start, len(conn_list)):
            canon, (nv, ne) = conn_list[i]
            if used_v + nv > max_vertices or used_e + ne > max_edges:
                continue
            acc.append(i)
            extend(i, used_v + nv, used_e + ne, acc)
            acc.pop()

    extend(0, 0, 0, [])

    named_canon = {}
    for name, stratum, (gn, gp) in _NAMED_ROWS:
        named_canon[twographs.canonical_form(gn, gp)] = name

    classes = []
    seen = set()
    for combo in combos:
        parts = [conn_list[i] for i in combo]
        canon_multi = tuple(sorted(p[0] for p in parts))
        if canon_multi in seen:
            continue
        seen.add(canon_multi)
        nv = sum(p[1][0] for p in parts)
        ne = sum(p[1][1] for p in parts)
        tree = sum(1 for p in parts if p[1][1] == p[1][0] - 1)
        degrees = []
        for p in parts:
            degrees.extend(p[0][1])
        degrees = tuple(sorted(degrees))
        name = named_canon.get(canon_multi)
        classes.append(
            LinkClass(nv, ne, tree, nv - tree, degrees, canon_multi, name)
        )

    strata = {s: [] for s in (5, 6, 7, 8)}
    for c in classes:
        if c.deficit <= 4 and c.vertices >= 5:
            if c.vertices not in strata:
                raise AssertionError(
                    f"link class outside strata: {c.vertices} vertices, {c.canon}"
                )
            strata[c.vertices].append(c)

    for s, members in strata.items():
        for c in members:
            if c.name is None:
                raise AssertionError(
                    f"unexpected link class in stratum |N|={s}: degrees {c.degrees}"
                )

    computed = []
    for name, stratum, (gn, gp) in _NAMED_ROWS:
        canon = twographs.canonical_form(gn, gp)
        match = [c for c in classes if c.canon == canon]
        if len(match) != 1:
            raise AssertionError(f"named class {name} not found exactly once")
        c = match[0]
        computed.append(_bound_from_structure(c.edge_count, c.degrees))
    computed = tuple(computed)
    names = tuple(r[0] for r in _NAMED_ROWS)
    discrepancies = tuple(
        names[i] for i in range(len(names)) if computed[i] != PUBLISHED_BOUNDS[i]
    )
    return CatalogReport(
        classes, strata, computed, PUBLISHED_BOUNDS, discrepancies, names
    )
