"""Upper embeddability: spanning-tree criteria, certificates and verdicts.

A connected graph has a one-face orientable embedding exactly when some
spanning tree leaves a co-tree whose components all have an even number
of edges.  A configuration is embeddable in *every* orientation of its
triples if some spanning tree leaves every point vertex with even co-tree
valency; a dominating point set of size (v-1)/2 whose union with all
blocks induces a tree yields such a spanning tree directly.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .core import (Configuration, Graph, LeviGraph, RotationSystem,
                   SpanningTree, cycle_rank, levi_graph, trace_faces)


class SearchBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- co-trees


@dataclass(frozen=True)
class CotreeReport:
    components: tuple[tuple[tuple[int, ...], int], ...]   # (vertices, edge count)
    valency: tuple[int, ...]                              # co-tree valency per vertex

    @property
    def num_edges(self) -> int:
        return sum(m for _, m in self.components)

    @property
    def all_even(self) -> bool:
        return all(m % 2 == 0 for _, m in self.components)

    def point_valencies(self, v: int) -> tuple[int, ...]:
        return self.valency[:v]


def _component_counts(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    verts: dict[int, set] = {}
    count: dict[int, int] = {}
    for a, b in edges:
        r = find(a)
        verts.setdefault(r, set()).update((a, b))
        count[r] = count.get(r, 0) + 1
    return sorted((tuple(sorted(verts[r])), count[r]) for r in verts)


def cotree_report(g: Graph, t: SpanningTree) -> CotreeReport:
    t.check(g)
    co = t.cotree(g)
    val = [0] * g.n
    for a, b in co:
        val[a] += 1
        val[b] += 1
    return CotreeReport(tuple(_component_counts(g.n, co)), tuple(val))


def verify_even_point_cotree(g: LeviGraph, t: SpanningTree) -> bool:
    """True iff every point vertex has even valency in the co-tree of ``t``."""
    rep = cotree_report(g, t)
    return all(x % 2 == 0 for x in rep.point_valencies(g.v))


# ----------------------------------------------------- exact tree search


@dataclass(frozen=True)
class TreeSearchResult:
    tree: SpanningTree | None
    complete: bool            # True when the search space was exhausted or a tree found
    nodes: int                # search nodes visited

    @property
    def refuted(self) -> bool:
        return self.tree is None and self.complete


def _edge_order(g: Graph):
    # BFS order keeps decided regions compact, so co-tree components close early
    seen = {0}
    order, queue = [], [0]
    done = set()
    while queue:
        u = queue.pop(0)
        for w in g.adj[u]:
            e = (min(u, w), max(u, w))
            if e not in done:
                done.add(e)
                order.append(e)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def jungerman_bruteforce(g: Graph, tree_limit: int | None = None) -> TreeSearchResult:
    """Search spanning trees by deletion/contraction for one whose co-tree
    components are all even.

    Each edge in turn is contracted (tree) or deleted (co-tree).  A branch
    dies when a deletion disconnects the graph or when a co-tree component
    whose vertices have no undecided edges left has odd size.  Every
    search node stands for the set of trees extending its partial choice;
    ``tree_limit`` caps the number of nodes visited, after which the result
    has ``complete=False`` (never a refutation).
    """
    n = g.n
    if n == 0 or not g.is_connected():
        raise ValueError("graph must be connected and non-empty")
    edges = _edge_order(g)
    if cycle_rank(g) % 2:
        return TreeSearchResult(None, True, 0)
    undecided = [len(a) for a in g.adj]
    status = {}           # edge -> "t" or "c"
    tparent = list(range(n))
    co_adj = [[] for _ in range(n)]
    examined = 0

    def tfind(x):
        while tparent[x] != x:
            x = tparent[x]
        return x

    def connected_without(k):
        # is the graph of tree + undecided edges (excluding edges[k]) connected?
        avail = [[] for _ in range(n)]
        for i in range(k + 1, len(edges)):
            a, b = edges[i]
            avail[a].append(b)
            avail[b].append(a)
        for e, s in status.items():
            if s == "t":
                a, b = e
                avail[a].append(b)
                avail[b].append(a)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        cnt = 1
        while stack:
            u = stack.pop()
            for w in avail[u]:
                if not seen[w]:
                    seen[w] = True
                    cnt += 1
                    stack.append(w)
        return cnt == n

    def closed_odd(x):
        # co-tree component of x: odd and closed?
        seen = {x}
        stack = [x]
        m2 = 0
        while stack:
            u = stack.pop()
            if undecided[u]:
                return False
            m2 += len(co_adj[u])
            for w in co_adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return (m2 // 2) % 2 == 1

    result = []

    def rec(k):
        nonlocal examined
        if result:
            return True
        if tree_limit is not None and examined >= tree_limit:
            return False
        examined += 1
        if k == len(edges):
            tree = SpanningTree.of(e for e, s in status.items() if s == "t")
            result.append(tree)
            return True
        a, b = edges[k]
        undecided[a] -= 1
        undecided[b] -= 1
        ra, rb = tfind(a), tfind(b)
        found = False
        if ra != rb:
            tparent[ra] = rb
            status[(a, b)] = "t"
            if not (closed_odd(a) or closed_odd(b)):
                found = rec(k + 1)
            del status[(a, b)]
            tparent[ra] = ra
        if not found and (ra == rb or connected_without(k)):
            status[(a, b)] = "c"
            co_adj[a].append(b)
            co_adj[b].append(a)
            if not closed_odd(a):
                found = rec(k + 1)
            co_adj[a].pop()
            co_adj[b].pop()
            del status[(a, b)]
        undecided[a] += 1
        undecided[b] += 1
        return found

    rec(0)
    if result:
        return TreeSearchResult(result[0], True, examined)
    complete = tree_limit is None or examined < tree_limit
    return TreeSearchResult(None, complete, examined)


def count_spanning_trees(g: Graph) -> int:
    """Kirchhoff count, exact with fractions; used to size brute-force runs."""
    from fractions import Fraction

    n = g.n
    if n <= 1:
        return 1
    m = [[Fraction(0)] * (n - 1) for _ in range(n - 1)]
    for u in range(1, n):
        m[u - 1][u - 1] = Fraction(len(g.adj[u]))
        for w in g.adj[u]:
            if w:
                m[u - 1][w - 1] -= 1
    det = Fraction(1)
    size = n - 1
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, size):
                    m[r][k] -= f * m[c][k]
    return int(det)


# ------------------------------------------------------- heuristic search


def _odd_components(g: Graph, tree_edges: set) -> int:
    co = [e for e in g.edges() if e not in tree_edges]
    return sum(1 for _, m in _component_counts(g.n, co) if m % 2)


def jungerman_search(g: Graph, budget: int = 10_000, seed: int = 0) -> SpanningTree | None:
    """Randomised local search for a spanning tree with all-even co-tree
    components.  One-sided: ``None`` only means nothing was found.

    Moves exchange a co-tree edge with a tree edge on its fundamental
    cycle and are kept when the number of odd co-tree components does not
    grow; the walk restarts from a fresh random tree after a stall.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if cycle_rank(g) % 2:
        return None
    rng = random.Random(seed)
    all_edges = g.edges()
    n = g.n
    steps = 0

    def random_tree():
        order = all_edges[:]
        rng.shuffle(order)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree = set()
        for a, b in order:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                tree.add((a, b))
        return tree

    def tree_path(tree, s, t):
        adj = [[] for _ in range(n)]
        for a, b in tree:
            adj[a].append(b)
            adj[b].append(a)
        prev = {s: None}
        stack = [s]
        while stack:
            u = stack.pop()
            if u == t:
                break
            for w in adj[u]:
                if w not in prev:
                    prev[w] = u
                    stack.append(w)
        path = []
        u = t
        while prev[u] is not None:
            p = prev[u]
            path.append((min(p, u), max(p, u)))
            u = p
        return path

    while steps < budget:
        tree = random_tree()
        score = _odd_components(g, tree)
        stall = 0
        while steps < budget and stall < 4 * len(all_edges):
            if score == 0:
                return SpanningTree.of(tree)
            steps += 1
            co = [e for e in all_edges if e not in tree]
            e = rng.choice(co)
            f = rng.choice(tree_path(tree, *e))
            tree.remove(f)
            tree.add(e)
            new = _odd_components(g, tree)
            if new <= score or rng.random() < 0.02:
                stall = stall + 1 if new >= score else 0
                score = new
            else:
                tree.remove(e)
                tree.add(f)
                stall += 1
        if score == 0:
            return SpanningTree.of(tree)
    return None


# ------------------------------------------- dominating-set certificates


@dataclass(frozen=True)
class DominatingTreeCertificate:
    s: tuple[int, ...]
    tree: SpanningTree

    def check(self, cfg: Configuration) -> None:
        """Raise ``ValueError`` unless this certifies every-orientation
        embeddability of ``cfg``."""
        v = cfg.v
        g = levi_graph(cfg)
        S = set(self.s)
        if v % 2 == 0 or len(S) != (v - 1) // 2 or len(self.s) != len(S):
            raise ValueError("dominating set has the wrong size")
        if not all(S & set(b) for b in cfg.blocks):
            raise ValueError("some block misses the dominating set")
        induced = [(p, w) for p in S for w in g.adj[p]]
        if len(induced) != 3 * (v - 1) // 2:
            raise ValueError("induced edge count is wrong")
        sub = set(SpanningTree.of(induced).edges)
        if not sub <= self.tree.edges:
            raise ValueError("tree does not extend the induced subgraph")
        self.tree.check(g)
        # the induced subgraph must itself be a tree on S and all blocks
        seen = {min(S)}
        stack = [min(S)]
        nbr: dict[int, list[int]] = {}
        for a, b in sub:
            nbr.setdefault(a, []).append(b)
            nbr.setdefault(b, []).append(a)
        while stack:
            u = stack.pop()
            for w in nbr.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(S) + v:
            raise ValueError("points of S and the blocks do not induce a connected subgraph")
        if not verify_even_point_cotree(g, self.tree):
            raise ValueError("a point has odd co-tree valency")


def complete_dominating_tree(cfg: Configuration, s) -> SpanningTree:
    """Induced tree on S and all blocks, plus each other point joined to its
    lowest-index block."""
    v = cfg.v
    S = set(s)
    stars = cfg.point_stars()
    edges = [(p, v + j) for p in S for j in stars[p]]
    edges += [(p, v + stars[p][0]) for p in range(v) if p not in S]
    return SpanningTree.of(edges)


def _is_dominating_tree(cfg, s) -> bool:
    v = cfg.v
    stars = cfg.point_stars()
    parent = list(range(2 * v))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    hit = [False] * v
    for p in s:
        for j in stars[p]:
            hit[j] = True
            a, b = find(p), find(v + j)
            if a == b:
                return False
            parent[a] = b
    return all(hit)


def _greedy_set(cfg):
    v = cfg.v
    k = (v - 1) // 2
    stars = cfg.point_stars()
    covered = [False] * v
    s = []
    for _ in range(k):
        best, gain = -1, -1
        for p in range(v):
            if p in s:
                continue
            g = sum(1 for j in stars[p] if not covered[j])
            if g > gain:
                best, gain = p, g
        s.append(best)
        for j in stars[best]:
            covered[j] = True
    return sorted(s)


def dominating_tree_certificate(cfg: Configuration, time_budget: float | None = None
                                ) -> DominatingTreeCertificate | None:
    """Find a point set S, |S| = (v-1)/2, meeting every block such that S and
    all blocks induce a tree in the Levi graph.

    The greedy set (largest number of newly met blocks, lowest index on
    ties) is tried first; then all subsets in lexicographic order, pruned
    when the remaining picks cannot meet the unmet blocks or when a point
    would close a cycle.  ``None`` means no such set exists.
    """
    v = cfg.v
    if v % 2 == 0 or v < 3:
        raise ValueError("needs odd v")
    k = (v - 1) // 2
    seed = _greedy_set(cfg)
    if _is_dominating_tree(cfg, seed):
        return DominatingTreeCertificate(tuple(seed), complete_dominating_tree(cfg, seed))
    deadline = None if time_budget is None else time.monotonic() + time_budget
    stars = cfg.point_stars()
    hits = [0] * v
    parent = list(range(2 * v))
    chosen: list[int] = []
    ticks = 0

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(start, unmet):
        nonlocal ticks
        left = k - len(chosen)
        if left == 0:
            return unmet == 0
        if unmet > 3 * left:
            return False
        ticks += 1
        if deadline is not None and ticks % 1024 == 0 and time.monotonic() > deadline:
            raise SearchBudgetExceeded("dominating-set search ran out of time")
        for p in range(start, v - left + 1):
            roots = [find(v + j) for j in stars[p]]
            if len(set(roots)) < 3:
                continue
            # union p with its blocks; roots are distinct trees
            links = []
            for r in roots:
                links.append(r)
                parent[r] = p
            gain = 0
            for j in stars[p]:
                if hits[j] == 0:
                    gain += 1
                hits[j] += 1
            chosen.append(p)
            if rec(p + 1, unmet - gain):
                return True
            chosen.pop()
            for j in stars[p]:
                hits[j] -= 1
            for r in links:
                parent[r] = r
        return False

    if rec(0, v):
        s = tuple(chosen)
        return DominatingTreeCertificate(s, complete_dominating_tree(cfg, s))
    return None


# --------------------------------------------------- rotation search


def orientation_from_triples(cfg: Configuration, cyclic_triples) -> tuple[int, ...]:
    """Per-block flip bits from cyclic orders: 0 when block ``j`` is read as
    its sorted triple (a<b<c as a->b->c), 1 for the reverse cycle."""
    out = []
    for b, t in zip(cfg.blocks, cyclic_triples):
        a0, a1, a2 = sorted(b)
        t = list(t)
        if sorted(t) != [a0, a1, a2]:
            raise ValueError(f"{t} is not an ordering of block {b}")
        i = t.index(a0)
        out.append(0 if t[(i + 1) % 3] == a1 else 1)
    return tuple(out)


class RotationLimitExceeded(ValueError):
    pass


def find_single_face_rotation(g: LeviGraph, orientations, limit: int = 19
                              ) -> RotationSystem | None:
    """Exhaustively look for a one-face rotation with the block rotations
    fixed by ``orientations`` (flip bit per block).

    Point rotations are tried in lexicographic order of their flip bits.
    Face walks are tracked as chains of darts; a branch dies as soon as a
    walk closes before covering every dart.
    """
    v = g.v
    if v > limit:
        raise RotationLimitExceeded(f"v = {v} is above the exhaustive limit {limit}")
    if len(orientations) != v:
        raise ValueError("need one orientation per block")
    D = g.num_darts
    rev = g.reverse
    off = g.dart_offset
    # chain bookkeeping: only valid at chain endpoints
    end_of = list(range(D))     # start -> end
    start_of = list(range(D))   # end -> start
    length = [1] * D            # by start
    log = []

    def link(d, e):
        """phi(d) = e.  Returns False when a short face closes."""
        s = start_of[d]
        if s == e:
            return length[s] == D
        t = end_of[e]
        log.append((s, t, end_of[s], start_of[t], length[s]))
        end_of[s] = t
        start_of[t] = s
        length[s] += length[e]
        return True

    def unwind(k):
        while len(log) > k:
            s, t, es, st, ls = log.pop()
            end_of[s] = es
            start_of[t] = st
            length[s] = ls

    def links_for(u, flip):
        order = (0, 1, 2) if not flip else (0, 2, 1)
        nxt = {order[i]: order[(i + 1) % 3] for i in range(3)}
        out = []
        for slot in range(3):
            d_in = rev[off[u] + slot]            # dart arriving at u along slot
            out.append((d_in, off[u] + nxt[slot]))
        return out

    for j in range(v):
        for d, e in links_for(v + j, orientations[j]):
            if not link(d, e):
                return None
    flips = [0] * v

    def rec(p):
        if p == v:
            return True
        for f in (0, 1):
            k = len(log)
            ok = True
            for d, e in links_for(p, f):
                if not link(d, e):
                    ok = False
                    break
            if ok and rec(p + 1):
                flips[p] = f
                return True
            unwind(k)
        return False

    if not rec(0):
        return None
    rot = RotationSystem.from_flips(g, flips + list(orientations))
    assert len(trace_faces(g, rot).faces) == 1
    return rot


@dataclass(frozen=True)
class OrientationSurvey:
    embeddable: int
    total: int                       # orientations examined (block 0 fixed)
    witness: RotationSystem | None   # for the all-zero orientation, if any
    failures: tuple[tuple[int, ...], ...]


def survey_orientations(g: LeviGraph, limit: int = 19, stop_on_failure: bool = False
                        ) -> OrientationSurvey:
    """Run the rotation search for every orientation with block 0 fixed.

    Reversing every rotation reverses every face, so orientation ``o`` and
    its complement are embeddable together; fixing block 0 halves the work.
    """
    v = g.v
    ok = 0
    fails = []
    witness = None
    for code in range(2 ** (v - 1)):
        o = (0,) + tuple((code >> (v - 2 - i)) & 1 for i in range(v - 1))
        rot = find_single_face_rotation(g, o, limit)
        if rot is None:
            fails.append(o)
            if stop_on_failure:
                return OrientationSurvey(ok, code + 1, witness, tuple(fails))
        else:
            ok += 1
            if witness is None:
                witness = rot
    return OrientationSurvey(ok, 2 ** (v - 1), witness, tuple(fails))


# ----------------------------------------------------------- ring cuts


@dataclass(frozen=True)
class RingCutCertificate:
    edges: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]   # e12, e23, e31
    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    n: tuple[int, int, int]
    m: tuple[int, int, int]

    def check(self, g: Graph) -> None:
        """Raise ``ValueError`` unless the certificate is valid for ``g``."""
        comps = g.components(removed=self.edges)
        if len(comps) != 3:
            raise ValueError(f"removing the edges leaves {len(comps)} parts, not 3")
        if sorted(tuple(c) for c in comps) != sorted(self.parts):
            raise ValueError("parts do not match the components")
        which = {}
        for i, part in enumerate(self.parts):
            for u in part:
                which[u] = i
        for k, (a, b) in enumerate(self.edges):
            if b not in g.adj[a]:
                raise ValueError(f"{a}-{b} is not an edge")
            i, j = which[a], which[b]
            if {i, j} != {k, (k + 1) % 3}:
                raise ValueError("edges do not form a ring P1-P2-P3-P1")
        for i, part in enumerate(self.parts):
            ps = set(part)
            mi = sum(1 for a, b in g.edges() if a in ps and b in ps and (a, b) not in self.edges)
            if len(part) != self.n[i] or mi != self.m[i]:
                raise ValueError("part sizes disagree")
            if (mi - len(part) + 1) % 2 == 0:
                raise ValueError(f"part {i + 1} has even cycle rank")


def _bridges(n, adj, skip):
    """Bridges of the graph with edge ``skip`` removed (iterative Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, pu, it = stack[-1]
            adv = False
            for w in it:
                e = (min(u, w), max(u, w))
                if e == skip or w == pu:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(adj[w])))
                    adv = True
                    break
                low[u] = min(low[u], disc[w])
            if not adv:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.append((min(p, u), max(p, u)))
    return out


def _ring_from_triple(g: Graph, trip) -> RingCutCertificate | None:
    comps = g.components(removed=trip)
    if len(comps) != 3:
        return None
    which = {}
    for i, c in enumerate(comps):
        for u in c:
            which[u] = i
    pairs = [frozenset((which[a], which[b])) for a, b in trip]
    if any(len(p) != 2 for p in pairs) or len(set(pairs)) != 3:
        return None
    eset = set(trip)
    ms = []
    for c in comps:
        cs = set(c)
        ms.append(sum(1 for a, b in g.edges() if a in cs and b in cs and (a, b) not in eset))
    if any((m - len(c) + 1) % 2 == 0 for m, c in zip(ms, comps)):
        return None
    # order the edges as P1-P2, P2-P3, P3-P1 with P1 the part holding vertex min
    e12 = next(e for e, p in zip(trip, pairs) if p == {0, 1})
    e23 = next(e for e, p in zip(trip, pairs) if p == {1, 2})
    e31 = next(e for e, p in zip(trip, pairs) if p == {0, 2})
    return RingCutCertificate((e12, e23, e31), tuple(tuple(c) for c in comps),
                              tuple(len(c) for c in comps), tuple(ms))


def ring_cut_certificate(g: Graph) -> RingCutCertificate | None:
    """First (in lexicographic order of edge triples) set of three edges whose
    removal leaves three connected parts joined in a ring, every part
    having odd cycle rank.  Any such witness rules out an all-even co-tree.

    Only edges lying in 2-edge cuts can take part, so candidates come from
    the bridges of ``g - e`` for each edge ``e``.
    """
    edges = g.edges()
    partner = {e: set(_bridges(g.n, g.adj, e)) for e in edges}
    cand = sorted(e for e in edges if partner[e])
    for i, a in enumerate(cand):
        for j in range(i + 1, len(cand)):
            b = cand[j]
            if b not in partner[a]:
                continue
            for c in cand[j + 1:]:
                if c in partner[a] and c in partner[b]:
                    cert = _ring_from_triple(g, (a, b, c))
                    if cert is not None:
                        return cert
    return None


def ring_cut_bruteforce(g: Graph) -> RingCutCertificate | None:
    """Reference scan over all 3-edge subsets."""
    for trip in combinations(g.edges(), 3):
        cert = _ring_from_triple(g, trip)
        if cert is not None:
            return cert
    return None


# ------------------------------------------------------------- verdicts


class Status(str, Enum):
    EVERY = "EveryOrientation"
    SOME = "SomeOrientation"
    NONE = "NoOrientation"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Policy:
    exhaustive_limit: int = 19
    time_budget: float | None = None
    seed: int = 0


@dataclass(frozen=True)
class Verdict:
    status: Status
    method: str
    witness: object = None
    detail: dict = field(default_factory=dict)


def verdict(cfg: Configuration, policy: Policy | None = None) -> Verdict:
    """Decide upper embeddability in every orientation, with a witness.

    Order: dominating-tree certificate, ring-cut refutation, then (for
    small v) an exhaustive survey of orientations.  Anything else is
    ``Unknown``.
    """
    policy = policy or Policy()
    v = cfg.v
    if v % 2 == 0:
        raise ValueError(f"v = {v} is even; a one-face embedding needs odd v")
    g = levi_graph(cfg)
    if not g.is_connected():
        raise ValueError("configuration is not connected")
    try:
        cert = dominating_tree_certificate(cfg, policy.time_budget)
    except SearchBudgetExceeded:
        cert = None
    if cert is not None:
        return Verdict(Status.EVERY, "dominating-tree", cert)
    ring = ring_cut_certificate(g)
    if ring is not None:
        return Verdict(Status.NONE, "ring-cut", ring)
    if v <= policy.exhaustive_limit:
        sv = survey_orientations(g, policy.exhaustive_limit)
        detail = {"embeddable": sv.embeddable, "orientations": sv.total}
        if sv.embeddable == sv.total:
            return Verdict(Status.EVERY, "orientation-survey", sv.witness, detail)
        if sv.embeddable:
            return Verdict(Status.SOME, "orientation-survey", sv.witness, detail)
        return Verdict(Status.NONE, "orientation-survey", None, detail)
    return Verdict(Status.UNKNOWN, "none")
