"""Isomorph-free generation of v_3 configurations and their Levi graphs.

Generation is orderly.  The compiled kernel in ``_kernel`` lists every
doubly lexical incidence matrix (rows strictly decreasing, columns
non-increasing, both read as binary numbers with the first entry most
significant).  For each class of configurations one matrix is singled out
as the *representative*: take the canonical labelling of the coloured
Levi graph, then sort rows and columns alternately (descending) until
neither moves.  The result depends only on the isomorphism class and is
doubly lexical, so exactly one kernel leaf equals it.  A leaf is kept iff
it equals the representative of its own class.  No deduplication is
needed, and the search tree can be cut at any depth into independent
work units.

Levi graphs (uncoloured) are emitted once per class: a configuration is
emitted as a graph iff its certificate is not larger than its dual's.

Checkpoint files are JSON::

    {"format": "v3embed-checkpoint", "version": 1, "v": 12, "depth": 4,
     "units": <number of work units>,
     "done": {"<unit index>": ["<graph6 certificate>", ...], ...}}

Each finished unit records the certificates of the configurations it
accepted (connected or not), in leaf order.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import asdict, dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import graph6
from ._kernel import rows_to_blocks, search_leaves
from .canon import canonical_labeling
from .classify import (aut_group, config_certificate, predicates)
from .core import Configuration, LeviGraph, dual, levi_graph, validate_configuration

CHECKPOINT_FORMAT = "v3embed-checkpoint"
CHECKPOINT_VERSION = 1


# ------------------------------------------------------------ leaf test


def doubly_lexical(v: int, rows: list[int]) -> tuple[int, ...]:
    """Sort rows, then columns, descending, until both orders are stable.

    Rows are ``v``-bit integers with column 0 as the high bit.
    """
    rows = sorted(rows, reverse=True)
    while True:
        cols = []
        for c in range(v):
            bit = v - 1 - c
            key = 0
            for r in rows:
                key = (key << 1) | ((r >> bit) & 1)
            cols.append(key)
        order = sorted(range(v), key=lambda c: cols[c], reverse=True)
        if order == list(range(v)):
            return tuple(rows)
        new = []
        for r in rows:
            m = 0
            for c in order:
                m = (m << 1) | ((r >> (v - 1 - c)) & 1)
            new.append(m)
        rows = sorted(new, reverse=True)


def _levi_adj(v, rows):
    adj = [[] for _ in range(2 * v)]
    for p in range(v):
        m = int(rows[p])
        for c in range(v):
            if (m >> (v - 1 - c)) & 1:
                adj[p].append(v + c)
                adj[v + c].append(p)
    return adj


def representative_rows(v: int, rows) -> tuple[int, ...]:
    """The class representative matrix of the configuration given by ``rows``."""
    adj = _levi_adj(v, rows)
    res = canonical_labeling(adj, [0] * v + [1] * v)
    pos = res.position()
    canon_rows = []
    for p in res.labeling[:v]:
        m = 0
        for b in adj[p]:
            m |= 1 << (v - 1 - (pos[b] - v))
        canon_rows.append(m)
    return doubly_lexical(v, canon_rows)


def is_representative(v: int, rows) -> bool:
    return representative_rows(v, rows) == tuple(int(x) for x in rows)


# --------------------------------------------------------- work units


@dataclass(frozen=True)
class GenerationNode:
    """A partial incidence matrix: the first ``len(prefix)`` rows."""

    v: int
    prefix: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def _run(self, stop_depth: int) -> np.ndarray:
        v = self.v
        pre = np.zeros(v, np.int64)
        pre[:self.depth] = self.prefix
        cap = 1024
        while True:
            out = np.zeros((cap, v), np.int64)
            k = search_leaves(v, pre, self.depth, out, stop_depth)
            if k >= 0:
                return out[:k]
            cap *= 4

    def children(self, depth: int) -> list["GenerationNode"]:
        """Descendants at ``depth`` (all feasible partial matrices)."""
        return [GenerationNode(self.v, tuple(int(x) for x in r[:depth]))
                for r in self._run(depth)]

    def leaves(self) -> np.ndarray:
        return self._run(self.v)

    def accepted(self) -> list[Configuration]:
        """Configurations whose representative matrix is a leaf of this node."""
        out = []
        for r in self.leaves():
            if is_representative(self.v, r):
                out.append(validate_configuration(self.v, rows_to_blocks(self.v, r)))
        return out


def default_depth(v: int) -> int:
    return 3 if v <= 10 else 4


def work_units(v: int, depth: int | None = None) -> list[GenerationNode]:
    if v < 7:
        raise ValueError("no v_3 configurations exist for v < 7")
    depth = default_depth(v) if depth is None else depth
    return GenerationNode(v, ()).children(depth)


def _run_unit(node: GenerationNode) -> list[str]:
    return [config_certificate(c) for c in node.accepted()]


def _load_checkpoint(path, v, depth, units):
    if not path or not os.path.exists(path):
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if data.get("format") != CHECKPOINT_FORMAT or data.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"{path} is not a version {CHECKPOINT_VERSION} checkpoint")
    if (data["v"], data["depth"], data["units"]) != (v, depth, units):
        raise ValueError(f"{path} was written for a different run")
    return {int(k): val for k, val in data["done"].items()}


def _save_checkpoint(path, v, depth, units, done):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump({"format": CHECKPOINT_FORMAT, "version": CHECKPOINT_VERSION, "v": v,
                   "depth": depth, "units": units,
                   "done": {str(k): done[k] for k in sorted(done)}}, fh)
    os.replace(tmp, path)


def generate_certificates(v: int, *, jobs: int = 1, depth: int | None = None,
                          checkpoint: str | None = None, max_units: int | None = None
                          ) -> Iterator[str]:
    """Certificates of all configurations v_3 (connected or not), one per
    class, in work-unit order.  Output order does not depend on ``jobs``.

    With ``checkpoint`` finished units are recorded and skipped on resume.
    ``max_units`` stops after that many new units (for budgeted runs); the
    caller can tell from the checkpoint whether the run is complete.
    """
    depth = default_depth(v) if depth is None else depth
    units = work_units(v, depth)
    done = _load_checkpoint(checkpoint, v, depth, len(units))
    todo = [i for i in range(len(units)) if i not in done]
    if max_units is not None:
        todo = todo[:max_units]
    results = {}
    if jobs > 1 and len(todo) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            for i, certs in zip(todo, ex.map(_run_unit, [units[i] for i in todo])):
                results[i] = certs
                if checkpoint:
                    done[i] = certs
                    _save_checkpoint(checkpoint, v, depth, len(units), done)
    else:
        for i in todo:
            results[i] = _run_unit(units[i])
            if checkpoint:
                done[i] = results[i]
                _save_checkpoint(checkpoint, v, depth, len(units), done)
    for i in range(len(units)):
        certs = done.get(i, results.get(i))
        if certs is None:
            return
        yield from certs


def generation_complete(checkpoint: str) -> bool:
    with open(checkpoint) as fh:
        data = json.load(fh)
    return len(data["done"]) == data["units"]


def generate_configurations(v: int, *, connected_only: bool = True, jobs: int = 1,
                            checkpoint: str | None = None) -> Iterator[Configuration]:
    """One canonical configuration per isomorphism class."""
    for cert in generate_certificates(v, jobs=jobs, checkpoint=checkpoint):
        g = graph6.decode_levi(cert)
        if connected_only and not g.is_connected():
            continue
        yield g.to_configuration()


def generate_levi_graphs(v: int, *, jobs: int = 1, checkpoint: str | None = None
                         ) -> Iterator[LeviGraph]:
    """Connected cubic bipartite girth >= 6 graphs on 2v vertices, one per
    isomorphism class (ignoring the colouring), each in the canonical
    colouring of the configuration with the smaller certificate."""
    for cfg in generate_configurations(v, jobs=jobs, checkpoint=checkpoint):
        if config_certificate(cfg) <= config_certificate(dual(cfg)):
            yield levi_graph(cfg)


def configs_from_graph(g: LeviGraph) -> list[Configuration]:
    """The configurations read off ``g`` with either colour class as points:
    one if they are isomorphic (self-dual), two otherwise."""
    c = g.to_configuration()
    d = dual(c)
    a, b = config_certificate(c), config_certificate(d)
    if a == b:
        return [graph6.decode_levi(a).to_configuration()]
    return [graph6.decode_levi(x).to_configuration() for x in sorted((a, b))]


# -------------------------------------------------------------- tables

COLUMNS = ("a", "b", "c", "d", "e", "f", "g", "h", "i")


@dataclass(frozen=True)
class TableRow:
    v: int
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    h: int
    i: int
    complete: bool = True

    def counts(self) -> tuple[int, ...]:
        return tuple(getattr(self, k) for k in COLUMNS)

    def check(self) -> None:
        if not (self.c <= self.b <= self.a and self.e <= self.d and self.f == self.g):
            raise AssertionError(f"row {self.v} violates column relations: {self.counts()}")

    def as_dict(self) -> dict:
        return asdict(self)


def count_disconnected(v: int, connected: dict[int, int]) -> int:
    """Disconnected v_3 counts: multisets of at least two connected
    configurations whose orders sum to ``v``.

    ``connected[w]`` is the number of connected w_3 (w >= 7).  This is the
    x^v coefficient of prod_w (1 - x^w)^(-connected[w]) minus connected[v].
    """
    need = [w for w in range(7, v - 6)]
    missing = [w for w in need if w not in connected]
    if missing:
        raise ValueError(f"connected counts missing for v = {missing}")
    # ways[n] = number of multisets of connected configurations of total order n
    ways = [0] * (v + 1)
    ways[0] = 1
    for w in need:
        a = connected[w]
        new = [0] * (v + 1)
        for n in range(v + 1):
            if not ways[n]:
                continue
            k = 0
            while n + k * w <= v:
                new[n + k * w] += ways[n] * comb(a + k - 1, k)
                k += 1
        ways = new
    return ways[v]


@lru_cache(maxsize=None)
def connected_count(v: int) -> int:
    return sum(1 for _ in generate_configurations(v))


def classify_all(configs: Iterable[Configuration]) -> Counter:
    tally = Counter()
    for cfg in configs:
        p = predicates(cfg, aut_group(levi_graph(cfg)))
        tally["a"] += 1
        for key, col in (("self_dual", "b"), ("self_polar", "c"), ("point_transitive", "d"),
                         ("cyclic", "e"), ("flag_transitive", "f"),
                         ("weakly_flag_transitive", "g"), ("blocking_set_free", "h")):
            tally[col] += getattr(p, key)
    return tally


def table_row(v: int, *, jobs: int = 1, checkpoint: str | None = None,
              lower_counts: dict[int, int] | None = None) -> TableRow:
    """Columns a-h over the connected configurations v_3; column i from
    ``count_disconnected`` using connected counts of smaller orders
    (computed by generation unless given)."""
    configs = list(generate_configurations(v, jobs=jobs, checkpoint=checkpoint))
    complete = checkpoint is None or generation_complete(checkpoint)
    tally = classify_all(configs)
    lower = dict(lower_counts or {})
    for w in range(7, v - 6):
        if w not in lower:
            lower[w] = connected_count(w)
    i = count_disconnected(v, lower)
    return TableRow(v, *(tally[k] for k in COLUMNS[:-1]), i, complete=complete)


def format_table(rows: list[TableRow], csv: bool = False) -> str:
    header = ("v",) + COLUMNS
    data = [(r.v,) + r.counts() for r in rows]
    if csv:
        return "\n".join(",".join(map(str, line)) for line in [header] + data) + "\n"
    widths = [max(len(str(line[k])) for line in [header] + data) for k in range(len(header))]
    return "\n".join("  ".join(str(x).rjust(w) for x, w in zip(line, widths))
                     for line in [header] + data) + "\n"


def parse_table_csv(text: str) -> list[TableRow]:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if lines[0].split(",") != ["v", *COLUMNS]:
        raise ValueError("unexpected CSV header")
    return [TableRow(*map(int, ln.split(","))) for ln in lines[1:]]
