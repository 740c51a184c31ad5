import random

import networkx as nx
import pytest

from helpers import census, colored_nx, nx_automorphism_count, to_nx
from v3embed.canon import canonical_labeling
from v3embed.classify import (aut_group, blocking_set, canonical_configuration,
                              canonical_form, config_certificate, has_polarity,
                              is_cyclic, iter_automorphisms, predicates)
from v3embed.construct import cyclic_config, fano, heawood, pappus
from v3embed.core import Graph, LeviGraph, dual, levi_graph


def _relabel_levi(g: LeviGraph, rng) -> LeviGraph:
    pts = list(range(g.v))
    blks = list(range(g.v, g.n))
    rng.shuffle(pts)
    rng.shuffle(blks)
    perm = pts + blks
    base = g.relabeled(perm)
    return LeviGraph(base.n, base.adj, g.v)


def test_relabel_invariance_on_small_census():
    rng = random.Random(0)
    graphs = [levi_graph(c) for v in (7, 8, 9) for c in census(v)]
    assert len(graphs) == 5
    for g in graphs:
        ref_c = canonical_form(g, True).certificate
        ref_u = canonical_form(g, False).certificate
        for _ in range(100):
            h = _relabel_levi(g, rng)
            assert canonical_form(h, True).certificate == ref_c
            # uncoloured mode also tolerates arbitrary vertex shuffles
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabeled(perm), False).certificate == ref_u


def test_relabeling_is_an_isomorphism():
    g = levi_graph(pappus())
    cf = canonical_form(g)
    image = g.relabeled(cf.relabeling)
    from v3embed import graph6
    assert graph6.encode(image) == cf.certificate
    assert all(cf.relabeling[p] < 9 for p in range(9))


def test_heawood_colour_modes():
    g = heawood()
    col = canonical_form(g, True)
    unc = canonical_form(g, False)
    # swapping the colour classes gives the dual, which is again Fano, so
    # the coloured certificate is unchanged; the uncoloured one ignores it
    swap = list(range(7, 14)) + list(range(7))
    h = g.relabeled(swap)
    h = LeviGraph(h.n, h.adj, 7)
    assert canonical_form(h, True).certificate == col.certificate
    assert canonical_form(h, False).certificate == unc.certificate
    # the uncoloured canonical image still splits into the two colour classes
    img = g.relabeled(unc.relabeling)
    sides = nx.bipartite.sets(to_nx(img))
    assert {frozenset(unc.relabeling[u] for u in range(7))} <= {frozenset(x) for x in sides}


def test_distinct_9_3_have_distinct_certificates():
    certs = {config_certificate(c) for c in census(9)}
    assert len(certs) == 3


def test_certificates_agree_with_networkx_isomorphism():
    cfgs = list(census(10))
    for i, a in enumerate(cfgs):
        for b in cfgs[i + 1:]:
            assert not nx.is_isomorphic(colored_nx(levi_graph(a)), colored_nx(levi_graph(b)),
                                        node_match=lambda x, y: x["pt"] == y["pt"])


@pytest.mark.parametrize("cfg", [fano(), pappus(), cyclic_config(9), cyclic_config(11)],
                         ids=["fano", "pappus", "cyclic9", "cyclic11"])
def test_group_orders_against_networkx(cfg):
    g = levi_graph(cfg)
    info = aut_group(g)
    assert info.order == nx_automorphism_count(g, colored=False)
    assert info.color_order == nx_automorphism_count(g, colored=True)
    assert info.index in (1, 2)
    for gen in info.generators:
        assert all(gen[b] in g.adj[gen[a]] for a, b in g.edges())


def test_heawood_group():
    info = aut_group(heawood())
    assert (info.order, info.color_order) == (336, 168)
    assert len(info.flag_orbits) == 1


def test_small_graph_orders():
    star_path = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    assert canonical_labeling(star_path.adj).order == nx_automorphism_count(star_path, False)
    rigid = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 3)])
    assert canonical_labeling(rigid.adj).order == nx_automorphism_count(rigid, False) == 1


def test_group_orders_match_networkx_on_census():
    for v in (7, 8, 9, 10):
        for c in census(v):
            g = levi_graph(c)
            assert aut_group(g).color_order == nx_automorphism_count(g, colored=True)


def test_iter_automorphisms_counts():
    g = levi_graph(pappus())
    assert sum(1 for _ in iter_automorphisms(g)) == 216
    assert sum(1 for _ in iter_automorphisms(g, preserve=g.color)) == 108
    inv = list(iter_automorphisms(g, involution=True))
    assert all(all(p[p[x]] == x for x in range(g.n)) for p in inv)


def test_fano_properties():
    p = predicates(fano())
    assert all(p.as_dict().values())


def test_pappus_properties():
    p = predicates(pappus())
    assert p.self_dual and p.self_polar and p.point_transitive and p.flag_transitive
    assert not p.cyclic
    assert not p.blocking_set_free


def test_cyclic_configurations_are_cyclic():
    for v in (7, 9, 11, 13, 15):
        g = levi_graph(cyclic_config(v))
        assert is_cyclic(g, aut_group(g))


def test_polarity_implies_self_dual_on_census():
    for v in (7, 8, 9, 10, 11):
        for c in census(v):
            p = predicates(c)
            assert not p.self_polar or p.self_dual
            assert not p.flag_transitive or p.weakly_flag_transitive
            assert not p.cyclic or p.point_transitive
            assert p.connected


def test_self_dual_agrees_with_networkx():
    for c in census(10):
        a = colored_nx(levi_graph(c))
        b = colored_nx(levi_graph(dual(c)))
        same = nx.is_isomorphic(a, b, node_match=lambda x, y: x["pt"] == y["pt"])
        assert same == predicates(c).self_dual


def test_polarity_by_enumeration():
    # an involutory colour swap exists iff some enumerated anti-automorphism squares to 1
    for v in (9, 10):
        for c in census(v):
            g = levi_graph(c)
            brute = any(all(p[p[x]] == x for x in range(g.n))
                        for p in iter_automorphisms(g, preserve="swap"))
            assert brute == has_polarity(g)


def _is_blocking(cfg, s):
    s = set(s)
    return all(0 < len(s & set(b)) < 3 for b in cfg.blocks)


def test_blocking_sets():
    for v in (8, 9, 10, 11):
        for c in census(v):
            w = blocking_set(c)
            if w is not None:
                assert 0 in w and _is_blocking(c, w)
                assert _is_blocking(c, set(range(v)) - set(w))
            else:
                from itertools import product
                assert not any(_is_blocking(c, [p for p in range(v) if bits[p]])
                               for bits in product((0, 1), repeat=v))
    assert blocking_set(fano()) is None


def test_canonical_configuration_is_fixed_point():
    for c in census(9):
        cc = canonical_configuration(c)
        assert canonical_configuration(cc) == cc
        assert config_certificate(cc) == config_certificate(c)
