"""Automorphisms, canonical forms and the structural properties of v_3s.

Terminology: ``Aut`` is the group of incidence-preserving permutations that
keep points as points; the *full* group of the Levi graph also contains the
anti-automorphisms, which swap points and blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import graph6
from .canon import canonical_labeling
from .core import Configuration, Graph, LeviGraph, dual, levi_graph


@dataclass(frozen=True)
class CanonicalForm:
    certificate: str            # graph6 of the canonically relabelled graph
    relabeling: tuple[int, ...]  # vertex -> canonical position
    respect_colors: bool


def canonical_form(g: Graph, respect_colors: bool = True) -> CanonicalForm:
    """Canonical certificate of ``g``.

    With ``respect_colors`` the points of a Levi graph keep positions
    ``0..v-1``, so two Levi graphs share a certificate exactly when their
    configurations are isomorphic.  Without it, a configuration and its dual
    share a certificate.
    """
    colors = g.color if (respect_colors and isinstance(g, LeviGraph)) else None
    res = canonical_labeling(g.adj, colors)
    pos = res.position()
    cert = graph6.encode(g.relabeled(pos))
    return CanonicalForm(cert, tuple(pos), respect_colors)


def config_certificate(cfg: Configuration) -> str:
    return canonical_form(levi_graph(cfg), True).certificate


def canonical_configuration(cfg: Configuration) -> Configuration:
    """The isomorphic copy of ``cfg`` in canonical labelling."""
    return graph6.decode_levi(config_certificate(cfg)).to_configuration()


# ----------------------------------------------------------------- groups


@dataclass
class AutGroupInfo:
    generators: list[tuple[int, ...]]           # full group, Levi vertices
    order: int
    color_generators: list[tuple[int, ...]]
    color_order: int
    point_orbits: list[list[int]]
    block_orbits: list[list[int]]
    flag_orbits: list[list[tuple[int, int]]]       # under Aut, flags as (point, block vertex)
    edge_orbits_full: list[list[tuple[int, int]]]  # under the full group

    @property
    def index(self) -> int:
        return self.order // self.color_order


def _orbits(n, gens, items=None, act=None):
    items = list(range(n)) if items is None else items
    index = {x: i for i, x in enumerate(items)}
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for i, x in enumerate(items):
            j = index[act(g, x) if act else g[x]]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i, x in enumerate(items):
        groups.setdefault(find(i), []).append(x)
    return sorted(groups.values())


def _act_edge(g, e):
    a, b = g[e[0]], g[e[1]]
    return (a, b) if a < b else (b, a)


def aut_group(g: LeviGraph) -> AutGroupInfo:
    full = canonical_labeling(g.adj)
    col = canonical_labeling(g.adj, g.color)
    v = g.v
    edges = g.edges()
    return AutGroupInfo(
        generators=full.generators,
        order=full.order,
        color_generators=col.generators,
        color_order=col.order,
        point_orbits=_orbits(g.n, col.generators, list(range(v))),
        block_orbits=_orbits(g.n, col.generators, list(range(v, g.n))),
        flag_orbits=_orbits(g.n, col.generators, edges, _act_edge),
        edge_orbits_full=_orbits(g.n, full.generators, edges, _act_edge),
    )


def iter_automorphisms(g: Graph, seed: dict[int, int] | None = None, *,
                       preserve=None, involution: bool = False) -> Iterator[tuple[int, ...]]:
    """Every automorphism of ``g`` extending the partial map ``seed``.

    ``preserve`` optionally lists a per-vertex class that images must keep
    (or, if it is the string ``"swap"`` together with a Levi graph, must
    exchange).  With ``involution`` only maps of order at most two are
    produced; the constraint is propagated while extending, not checked
    afterwards.
    """
    n = g.n
    adj = g.adj
    sets = [set(a) for a in adj]
    if preserve == "swap":
        v = g.v  # type: ignore[attr-defined]
        compatible = lambda x, y: (x < v) != (y < v)
    elif preserve is not None:
        compatible = lambda x, y: preserve[x] == preserve[y]
    else:
        compatible = lambda x, y: True
    img = [-1] * n
    pre = [-1] * n

    def assign(x, y, log):
        if img[x] == y:
            return True
        if img[x] != -1 or pre[y] != -1 or not compatible(x, y) or len(adj[x]) != len(adj[y]):
            return False
        img[x] = y
        pre[y] = x
        log.append(x)
        for w in adj[x]:
            if img[w] != -1 and img[w] not in sets[y]:
                return False
        if involution and x != y:
            return assign(y, x, log)
        return True

    def undo(log, k):
        while len(log) > k:
            x = log.pop()
            pre[img[x]] = -1
            img[x] = -1

    def rec(log):
        # pick a mapped vertex with an unmapped neighbour
        for x in range(n):
            if img[x] != -1:
                free = [w for w in adj[x] if img[w] == -1]
                if free:
                    break
        else:
            x = -1
        if x == -1:
            un = [u for u in range(n) if img[u] == -1]
            if not un:
                yield tuple(img)
                return
            u = un[0]
            for y in range(n):
                if pre[y] == -1:
                    k = len(log)
                    if assign(u, y, log):
                        yield from rec(log)
                    undo(log, k)
            return
        targets = [t for t in adj[img[x]] if pre[t] == -1]
        if len(targets) != len(free):
            return
        w = free[0]
        for t in targets:
            k = len(log)
            if assign(w, t, log):
                yield from rec(log)
            undo(log, k)

    log: list[int] = []
    for x, y in (seed or {}).items():
        if not assign(x, y, log):
            return
    yield from rec(log)


def _point_cycle_type_is_full(perm, v) -> bool:
    x, length = 0, 0
    while True:
        x = perm[x]
        length += 1
        if x == 0:
            return length == v


def has_polarity(g: LeviGraph) -> bool:
    """Is there a colour-swapping automorphism of order two?"""
    for b in range(g.v, g.n):
        for _ in iter_automorphisms(g, {0: b}, preserve="swap", involution=True):
            return True
    return False


def is_cyclic(g: LeviGraph, info: AutGroupInfo | None = None) -> bool:
    """Does Aut contain an element acting on the points as one v-cycle?"""
    v = g.v
    if info is not None and len(info.point_orbits) != 1:
        return False
    colors = g.color
    for p in range(1, v):
        for perm in iter_automorphisms(g, {0: p}, preserve=colors):
            if _point_cycle_type_is_full(perm, v):
                return True
    return False


def blocking_set(cfg: Configuration) -> tuple[int, ...] | None:
    """First blocking set in include-first order with point 0 included.

    Points are decided in index order, trying membership before
    non-membership, so the witness is the lexicographically greatest
    indicator vector among blocking sets containing point 0.  Since the
    complement of a blocking set is again one, fixing point 0 loses
    nothing.
    """
    v = cfg.v
    stars = cfg.point_stars()
    blocks = cfg.blocks
    state = [-1] * v

    def ok_after(p):
        for j in stars[p]:
            vals = [state[q] for q in blocks[j]]
            if -1 not in vals and (all(vals) or not any(vals)):
                return False
        return True

    def rec(p):
        if p == v:
            return True
        for val in (1, 0):
            state[p] = val
            if ok_after(p) and rec(p + 1):
                return True
        state[p] = -1
        return False

    state[0] = 1
    if ok_after(0) and rec(1):
        return tuple(p for p in range(v) if state[p] == 1)
    return None


@dataclass(frozen=True)
class Properties:
    self_dual: bool
    self_polar: bool
    point_transitive: bool
    cyclic: bool
    flag_transitive: bool
    weakly_flag_transitive: bool
    blocking_set_free: bool
    connected: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def predicates(cfg: Configuration, info: AutGroupInfo | None = None) -> Properties:
    g = levi_graph(cfg)
    info = info or aut_group(g)
    connected = g.is_connected()
    self_dual = config_certificate(cfg) == config_certificate(dual(cfg))
    self_polar = self_dual and has_polarity(g)
    point_transitive = len(info.point_orbits) == 1
    cyclic = point_transitive and is_cyclic(g, info)
    flag_transitive = len(info.flag_orbits) == 1
    weak = len(info.edge_orbits_full) == 1
    bfree = blocking_set(cfg) is None
    return Properties(self_dual, self_polar, point_transitive, cyclic,
                      flag_transitive, weak, bfree, connected)
