import json
import random

import networkx as nx
import pytest

from helpers import census, levi_nx_from_blocks, naive_classes
from v3embed._kernel import rows_to_blocks
from v3embed.classify import canonical_form, config_certificate
from v3embed.construct import fano
from v3embed.core import dual, levi_graph, validate_configuration
from v3embed.enumeration import (COLUMNS, GenerationNode, TableRow, configs_from_graph,
                                 count_disconnected, doubly_lexical, format_table,
                                 generate_certificates,
                                 generate_levi_graphs, parse_table_csv, representative_rows,
                                 table_row, work_units)

EXPECTED_ROWS = {
    7: (1, 1, 1, 1, 1, 1, 1, 1, 0),
    8: (1, 1, 1, 1, 1, 1, 1, 0, 0),
    9: (3, 3, 3, 2, 1, 1, 1, 0, 0),
    10: (10, 10, 10, 2, 1, 1, 1, 0, 0),
    11: (31, 25, 25, 1, 1, 0, 0, 0, 0),
}

node_match = lambda a, b: a["pt"] == b["pt"]


@pytest.mark.parametrize("v", [7, 8, 9, 10])
def test_generation_matches_naive_oracle(v):
    oracle = naive_classes(v)
    ours = [levi_nx_from_blocks(v, c.blocks) for c in census(v)]
    assert len(ours) == len(oracle)
    for G in ours:
        assert sum(nx.is_isomorphic(G, R, node_match=node_match) for R in oracle) == 1


@pytest.mark.parametrize("v", [7, 8, 9, 10])
def test_uncoloured_graphs_match_oracle(v):
    oracle = naive_classes(v, colored=False)
    ours = list(generate_levi_graphs(v))
    assert len(ours) == len(oracle)


@pytest.mark.parametrize("v,rows", sorted(EXPECTED_ROWS.items()))
def test_table_rows(v, rows):
    row = table_row(v)
    assert row.counts() == rows
    row.check()


def test_graph_counts():
    assert [sum(1 for _ in generate_levi_graphs(v)) for v in (7, 8, 9, 10, 11)] == [1, 1, 3, 10, 28]


def test_emitted_graphs_are_valid_and_distinct():
    rng = random.Random(3)
    for v in (9, 10, 11):
        graphs = list(generate_levi_graphs(v))
        certs = [canonical_form(g, False).certificate for g in graphs]
        assert len(set(certs)) == len(certs)
        for g in graphs:
            assert g.is_connected() and g.girth() >= 6
            assert all(len(a) == 3 for a in g.adj)
            g.to_configuration()
            perm = list(range(g.n))
            rng.shuffle(perm)
            c = canonical_form(g.relabeled(perm), False).certificate
            assert [x == c for x in certs].count(True) == 1


def test_configs_from_graph():
    (f,) = configs_from_graph(levi_graph(fano()))
    assert config_certificate(f) == config_certificate(fano())
    total = sum(len(configs_from_graph(g)) for g in generate_levi_graphs(11))
    assert total == 31
    non_self_dual = [g for g in generate_levi_graphs(11) if len(configs_from_graph(g)) == 2]
    assert len(non_self_dual) == 3
    for g in non_self_dual:
        a, b = configs_from_graph(g)
        assert config_certificate(dual(a)) == config_certificate(b)


def test_doubly_lexical_is_stable():
    rng = random.Random(0)
    for c in census(10):
        rows = [sum(1 << (9 - j) for j in range(10) if p in c.blocks[j]) for p in range(10)]
        d = doubly_lexical(10, rows)
        assert list(d) == sorted(d, reverse=True)
        assert doubly_lexical(10, list(d)) == d
        # relabelling points and blocks never changes the representative
        rep = representative_rows(10, d)
        for _ in range(5):
            pp, bb = list(range(10)), list(range(10))
            rng.shuffle(pp)
            rng.shuffle(bb)
            shuffled = [0] * 10
            for p in range(10):
                for j in range(10):
                    if (rows[p] >> (9 - j)) & 1:
                        shuffled[pp[p]] |= 1 << (9 - bb[j])
            assert representative_rows(10, shuffled) == rep


def test_kernel_leaves_are_doubly_lexical_incidence_matrices():
    node = GenerationNode(9, ())
    leaves = node.leaves()
    assert len(leaves) > 0
    for r in leaves:
        r = [int(x) for x in r]
        assert r == sorted(r, reverse=True) and len(set(r)) == 9
        validate_configuration(9, rows_to_blocks(9, r))
        cols = [sum(((r[p] >> (8 - c)) & 1) << (8 - p) for p in range(9)) for c in range(9)]
        assert cols == sorted(cols, reverse=True)


def test_work_units_partition_leaves():
    v = 10
    whole = {tuple(int(x) for x in r) for r in GenerationNode(v, ()).leaves()}
    parts = []
    for node in work_units(v, 3):
        parts.extend(tuple(int(x) for x in r) for r in node.leaves())
    assert len(parts) == len(set(parts)) and set(parts) == whole


def test_jobs_and_checkpoint(tmp_path):
    ref = list(generate_certificates(10))
    assert list(generate_certificates(10, jobs=2)) == ref
    ck = tmp_path / "ck.json"
    first = list(generate_certificates(10, checkpoint=str(ck), max_units=2))
    data = json.loads(ck.read_text())
    assert data["format"] == "v3embed-checkpoint" and len(data["done"]) == 2
    assert first == ref[:len(first)]
    assert list(generate_certificates(10, checkpoint=str(ck))) == ref
    with pytest.raises(ValueError):
        list(generate_certificates(9, checkpoint=str(ck)))


def test_count_disconnected():
    a = {7: 1, 8: 1, 9: 3, 10: 10, 11: 31, 12: 229}
    assert [count_disconnected(v, a) for v in range(14, 20)] == [1, 1, 4, 13, 47, 290]
    assert count_disconnected(13, a) == 0
    with pytest.raises(ValueError):
        count_disconnected(21, a)


def test_disconnected_count_by_generation_v14_units():
    # the only disconnected 14_3 is two Fano planes; it is a kernel leaf too
    from v3embed.core import disjoint_union
    from v3embed.enumeration import is_representative
    cfg = disjoint_union(fano(), fano())
    rows = [sum(1 << (13 - j) for j in range(14) if p in cfg.blocks[j]) for p in range(14)]
    rep = representative_rows(14, rows)
    assert is_representative(14, rep)


def test_table_formats_round_trip():
    rows = [TableRow(v, *EXPECTED_ROWS[v]) for v in sorted(EXPECTED_ROWS)]
    csv = format_table(rows, csv=True)
    assert csv.splitlines()[0] == "v," + ",".join(COLUMNS)
    assert parse_table_csv(csv) == rows
    text = format_table(rows)
    assert text.splitlines()[1].split() == ["7", "1", "1", "1", "1", "1", "1", "1", "1", "0"]


def test_row_check_catches_bad_rows():
    with pytest.raises(AssertionError):
        TableRow(9, 3, 3, 3, 2, 1, 1, 2, 0, 0).check()
