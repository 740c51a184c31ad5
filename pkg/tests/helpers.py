"""Shared reference data and independent oracles for the test suite."""
from __future__ import annotations

from functools import lru_cache

import networkx as nx

from v3embed.core import Configuration, Graph, LeviGraph, validate_configuration

# Levi graph of the 21_3 built from three Heawood graphs, nodes numbered
# 1..42; odd nodes are points, even nodes are blocks.  The last three
# edges join the three 14-vertex parts in a ring.
STITCHED21_EDGES = [
    (1, 2), (1, 14), (2, 3), (3, 8), (4, 5), (4, 13), (5, 6), (6, 7),
    (7, 8), (9, 10), (9, 14), (10, 11), (12, 13), (7, 14), (2, 5), (3, 10),
    (6, 11), (4, 9), (1, 12), (8, 13), (15, 16), (15, 28), (17, 22), (18, 19),
    (18, 27), (19, 20), (20, 21), (21, 22), (23, 24), (23, 28), (24, 25), (25, 26),
    (26, 27), (21, 28), (16, 19), (17, 24), (20, 25), (18, 23), (15, 26), (22, 27),
    (29, 30), (29, 42), (30, 31), (31, 36), (32, 33), (33, 34), (34, 35), (35, 36),
    (37, 38), (37, 42), (38, 39), (39, 40), (40, 41), (35, 42), (30, 33), (31, 38),
    (34, 39), (32, 37), (29, 40), (36, 41), (16, 41), (11, 32), (12, 17),
]
STITCHED21_RING = [(16, 41), (11, 32), (12, 17)]


def stitched21_levi_graph() -> tuple[LeviGraph, list[int]]:
    edges = [(a - 1, b - 1) for a, b in STITCHED21_EDGES]
    return LeviGraph.from_colored_edges(42, edges, lambda u: u % 2 == 0)


def stitched21_blocks() -> list[tuple[int, ...]]:
    """Blocks read off the even (white) nodes: each block is its three odd
    neighbours, renumbered 0..20."""
    nbr: dict[int, set] = {}
    for a, b in STITCHED21_EDGES:
        nbr.setdefault(a, set()).add(b)
        nbr.setdefault(b, set()).add(a)
    return [tuple(sorted((p - 1) // 2 for p in nbr[w])) for w in range(2, 43, 2)]


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def colored_nx(g: LeviGraph) -> nx.Graph:
    G = to_nx(g)
    nx.set_node_attributes(G, {u: int(g.is_point(u)) for u in range(g.n)}, "pt")
    return G


def nx_automorphism_count(g: Graph, colored: bool) -> int:
    G = colored_nx(g) if colored else to_nx(g)
    nm = (lambda a, b: a["pt"] == b["pt"]) if colored else None
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(G, G, node_match=nm)
               .isomorphisms_iter())


def naive_block_lists(v: int) -> list[tuple[tuple[int, int, int], ...]]:
    """Every sorted block list of a v_3 whose points first appear in
    increasing order.  Exhaustive and free of any canonical labelling."""
    out = []
    val = [0] * v
    pairs: set = set()
    blocks: list = []

    def rec(maxpt):
        if len(blocks) == v:
            out.append(tuple(blocks))
            return
        a = next(p for p in range(v) if val[p] < 3)
        prev = blocks[-1] if blocks else None
        for b in range(a + 1, min(v, maxpt + 2)):
            if val[b] >= 3 or (a, b) in pairs:
                continue
            for c in range(b + 1, min(v, max(maxpt, b) + 2)):
                if val[c] >= 3 or (a, c) in pairs or (b, c) in pairs:
                    continue
                t = (a, b, c)
                if prev and t < prev:
                    continue
                new = {(a, b), (a, c), (b, c)}
                for x in t:
                    val[x] += 1
                pairs.update(new)
                blocks.append(t)
                rec(max(maxpt, c))
                blocks.pop()
                pairs.difference_update(new)
                for x in t:
                    val[x] -= 1

    rec(0)
    return out


def nx_dedupe(graphs: list[nx.Graph], node_match=None) -> list[nx.Graph]:
    """Isomorphism classes by bucketing on a WL hash then pairwise tests."""
    buckets: dict[str, list[nx.Graph]] = {}
    attr = "pt" if node_match else None
    for G in graphs:
        h = nx.weisfeiler_lehman_graph_hash(G, node_attr=attr, iterations=4)
        reps = buckets.setdefault(h, [])
        if not any(nx.is_isomorphic(G, R, node_match=node_match) for R in reps):
            reps.append(G)
    return [R for reps in buckets.values() for R in reps]


def levi_nx_from_blocks(v: int, blocks, colored: bool = True) -> nx.Graph:
    G = nx.Graph()
    for u in range(2 * v):
        G.add_node(u, pt=int(u < v))
    for j, b in enumerate(blocks):
        for p in b:
            G.add_edge(p, v + j)
    return G


@lru_cache(maxsize=None)
def naive_classes(v: int, colored: bool = True) -> tuple[nx.Graph, ...]:
    """Oracle classes of coloured Levi graphs; the uncoloured classes are
    obtained by merging coloured representatives under plain isomorphism."""
    if not colored:
        return tuple(nx_dedupe(list(naive_classes(v, True))))
    graphs = [levi_nx_from_blocks(v, bl) for bl in naive_block_lists(v)]
    return tuple(nx_dedupe(graphs, lambda a, b: a["pt"] == b["pt"]))


@lru_cache(maxsize=None)
def census(v: int) -> tuple[Configuration, ...]:
    from v3embed.enumeration import generate_configurations

    return tuple(generate_configurations(v))


def valid(v, blocks) -> Configuration:
    return validate_configuration(v, blocks)
