import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import stitched21_blocks, to_nx
from v3embed import graph6
from v3embed.construct import FANO_BLOCKS, cyclic_config, fano, heawood, pappus
from v3embed.core import (ConfigurationError, Graph, RotationSystem, SpanningTree,
                          associated_graph, cycle_rank, disjoint_union, dual,
                          is_connected, levi_graph, parse_configuration, trace_faces,
                          validate_configuration)


def test_fano_validates():
    cfg = validate_configuration(7, FANO_BLOCKS)
    assert cfg.v == 7 and len(cfg.blocks) == 7


def test_duplicate_pair_rejected():
    blocks = [(0, 1, 2), (0, 1, 3)] + list(FANO_BLOCKS[2:])
    with pytest.raises(ConfigurationError) as exc:
        validate_configuration(7, blocks)
    kinds = {k for k, _ in exc.value.violations}
    assert ("duplicate_pair", (0, 1)) in exc.value.violations
    assert "valency" in kinds


def test_block_count_and_range_errors():
    with pytest.raises(ConfigurationError) as exc:
        validate_configuration(7, FANO_BLOCKS[:6])
    assert ("block_count", 6) in exc.value.violations
    with pytest.raises(ConfigurationError) as exc:
        validate_configuration(7, FANO_BLOCKS[:6] + [(0, 2, 9)])
    assert any(k == "index_range" for k, _ in exc.value.violations)


def _brute_pair_scan(v, blocks):
    seen = set()
    for b in blocks:
        for pr in combinations(sorted(b), 2):
            if pr in seen:
                return False
            seen.add(pr)
    return all(sum(p in b for b in blocks) == 3 for p in range(v)) and len(blocks) == v


def test_stitched21_blocks_validate():
    blocks = stitched21_blocks()
    assert _brute_pair_scan(21, blocks)
    cfg = validate_configuration(21, blocks)
    assert levi_graph(cfg).girth() >= 6


def test_text_round_trip():
    cfg = pappus()
    text = cfg.to_text(["a comment"])
    assert text.startswith("# a comment\n9\n")
    assert parse_configuration(text) == cfg.normalized()


@pytest.mark.parametrize("bad", ["", "7 7\n", "x\n", "3\n0 1\n"])
def test_parse_errors(bad):
    with pytest.raises(ConfigurationError):
        parse_configuration(bad)


def test_heawood():
    g = heawood()
    assert (g.n, g.num_edges, g.girth()) == (14, 21, 6)
    assert nx.is_isomorphic(to_nx(g), nx.heawood_graph())
    assert cycle_rank(g) == 8


def test_cyclic9_levi_graph_is_vertex_transitive():
    g = levi_graph(cyclic_config(9))
    G = to_nx(g)
    images = {m[0] for m in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter()}
    assert images == set(range(18))
    from v3embed.classify import _orbits, aut_group
    info = aut_group(g)
    assert info.order == 18
    assert len(_orbits(g.n, info.generators)) == 1
    # the Pappus graph is the Levi graph of the other point-transitive 9_3
    assert not nx.is_isomorphic(G, nx.pappus_graph())
    assert nx.is_isomorphic(to_nx(levi_graph(pappus())), nx.pappus_graph())


def test_associated_graph():
    assert nx.is_isomorphic(to_nx(associated_graph(fano())), nx.complete_graph(7))
    a = associated_graph(cyclic_config(9))
    circ = nx.circulant_graph(9, [1, 2, 3])
    assert set(a.edges()) == {tuple(sorted(e)) for e in circ.edges()}
    assert all(len(x) == 6 for x in a.adj)
    two = associated_graph(disjoint_union(fano(), fano()))
    comps = list(nx.connected_components(to_nx(two)))
    assert sorted(len(c) for c in comps) == [7, 7]


def test_dual_involution_and_connectivity():
    from v3embed.classify import config_certificate
    for cfg in (fano(), pappus(), cyclic_config(11)):
        d = dual(cfg)
        validate_configuration(d.v, d.blocks)
        assert config_certificate(dual(d)) == config_certificate(cfg)
    assert is_connected(fano())
    assert not is_connected(disjoint_union(fano(), fano()))


def test_levi_invariants_and_numbering():
    cfg = cyclic_config(13)
    g = levi_graph(cfg)
    assert (g.n, g.num_edges) == (26, 39)
    assert all(len(a) == 3 for a in g.adj)
    for j, b in enumerate(cfg.blocks):
        assert g.adj[13 + j] == b
    assert g.girth() >= 6 and cycle_rank(g) == 14


# ------------------------------------------------------------------ graph6


def test_graph6_matches_networkx():
    for g in (heawood(), levi_graph(pappus())):
        s = graph6.encode(g)
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert graph6.decode(s).adj == g.adj
        assert graph6.decode_levi(s) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 70), st.floats(0, 1), st.integers(0, 10**6))
def test_graph6_round_trip_random(n, p, seed):
    G = nx.gnp_random_graph(n, p, seed=seed)
    g = Graph.from_edges(n, G.edges())
    s = graph6.encode(g)
    assert s == nx.to_graph6_bytes(G, header=False).decode().strip()
    assert graph6.decode(s).adj == g.adj


# ------------------------------------------------------------ face tracing


def _random_rotation(g, rng):
    orders = []
    for u in range(g.n):
        a = list(g.adj[u])
        rng.shuffle(a)
        orders.append(a)
    return RotationSystem.from_orders(g, orders)


def test_torus_embedding_of_heawood_exists():
    g = heawood()
    found = None
    for code in range(2 ** 14):
        rot = RotationSystem.from_flips(g, [(code >> k) & 1 for k in range(14)])
        if len(trace_faces(g, rot).faces) == 7:
            found = rot
            break
    assert found is not None
    ft = trace_faces(g, found)
    assert ft.genus == 1 and sorted(ft.face_lengths()) == [6] * 7


def test_single_face_genus_formula():
    from v3embed.embed import find_single_face_rotation
    g = heawood()
    rot = find_single_face_rotation(g, (0,) * 7)
    assert trace_faces(g, rot).genus == 4


@pytest.mark.parametrize("cfg_factory", [fano, pappus, lambda: cyclic_config(11)])
def test_random_rotations_euler(cfg_factory):
    cfg = cfg_factory()
    g = levi_graph(cfg)
    v = cfg.v
    rng = random.Random(v)
    for _ in range(200):
        rot = _random_rotation(g, rng)
        rot.check(g)
        ft = trace_faces(g, rot)
        darts = [d for f in ft.faces for d in f]
        assert sorted(darts) == list(range(6 * v))
        assert sum(ft.face_lengths()) == 6 * v
        assert len(ft.faces) % 2 == v % 2
        assert 0 <= ft.genus <= (v + 1) // 2
        assert 2 - 2 * ft.genus == 2 * v - 3 * v + len(ft.faces)
        # reversing every rotation reverses faces but keeps their number
        assert len(trace_faces(g, rot.inverse()).faces) == len(ft.faces)


def test_faces_ordered_by_smallest_dart():
    g = heawood()
    ft = trace_faces(g, RotationSystem.from_flips(g, [0] * 14))
    firsts = [f[0] for f in ft.faces]
    assert firsts == sorted(firsts)
    assert all(f[0] == min(f) for f in ft.faces)


def test_spanning_tree_checks():
    g = heawood()
    t = SpanningTree.of(nx.minimum_spanning_tree(to_nx(g)).edges())
    t.check(g)
    assert len(t.cotree(g)) == 8
    short = SpanningTree.of(sorted(t.edges)[:-1])
    with pytest.raises(ValueError):
        short.check(g)
    # swap a tree edge for a co-tree edge that closes a cycle elsewhere
    e = t.cotree(g)[0]
    cyclic = [x for x in t.edges if set(x).isdisjoint(e)][0]
    with pytest.raises(ValueError):
        SpanningTree.of((t.edges - {cyclic}) | {e, (0, 99)}).check(g)
