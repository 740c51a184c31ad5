"""Named configurations and the constructions that build new ones.

* Fano plane / Heawood graph, cyclic configurations generated by {0,1,3}.
* Stitching: three Levi graphs each lose one edge and are joined in a ring.
* Martinetti steps: replace two disjoint blocks by three blocks through a
  new point, and the reverse move used to test reducibility.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from itertools import combinations

from .core import (Configuration, ConfigurationError, LeviGraph, levi_graph,
                   validate_configuration)

FANO_BLOCKS = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)]
PAPPUS_BLOCKS = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 4, 8), (0, 5, 7),
                 (1, 3, 8), (1, 5, 6), (2, 3, 7), (2, 4, 6)]


def fano() -> Configuration:
    return validate_configuration(7, FANO_BLOCKS)


def heawood() -> LeviGraph:
    return levi_graph(fano())


def pappus() -> Configuration:
    return validate_configuration(9, PAPPUS_BLOCKS)


def cyclic_config(v: int) -> Configuration:
    """Blocks {m, m+1, m+3} mod v for m = 0..v-1."""
    if v < 7 or v % 2 == 0:
        raise ValueError(f"cyclic family needs odd v >= 7, got {v}")
    return validate_configuration(v, [(m, (m + 1) % v, (m + 3) % v) for m in range(v)])


def cyclic_dominating_set(v: int) -> list[int]:
    """Explicit point set of size (v-1)/2 for ``cyclic_config(v)`` that meets
    every block and spans a connected subgraph together with all blocks."""
    if v < 7 or v % 2 == 0:
        raise ValueError(f"need odd v >= 7, got {v}")
    if v % 4 == 1:
        return sorted(x for i in range((v - 5) // 4 + 1) for x in (4 * i, 4 * i + 1))
    return [2 * i for i in range((v - 1) // 2 + 1) if i != (v - 3) // 2]


# ----------------------------------------------------------------- stitching


@dataclass(frozen=True)
class StitchPlan:
    """Which Levi edge (point, block index) to delete in each source."""

    deleted: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    @classmethod
    def default(cls, sources) -> "StitchPlan":
        out = []
        for c in sources:
            j = min(j for j, b in enumerate(c.blocks) if 0 in b)
            out.append((0, j))
        return cls(tuple(out))

    def to_json(self) -> str:
        return json.dumps({"deleted": [list(e) for e in self.deleted]})

    @classmethod
    def from_json(cls, text: str) -> "StitchPlan":
        data = json.loads(text)
        d = data["deleted"]
        if len(d) != 3:
            raise ValueError("a stitch plan deletes exactly three edges")
        return cls(tuple((int(p), int(j)) for p, j in d))


@dataclass(frozen=True)
class Stitched:
    config: Configuration
    ring_edges: tuple[tuple[int, int], ...]     # Levi edges (point, block vertex)
    parts: tuple[tuple[int, ...], ...]          # Levi vertices of each source


def stitch_detailed(c1: Configuration, c2: Configuration, c3: Configuration,
                    plan: StitchPlan | None = None) -> Stitched:
    srcs = (c1, c2, c3)
    plan = plan or StitchPlan.default(srcs)
    for c in srcs:
        if not levi_graph(c).is_connected():
            raise ValueError("stitching needs connected sources")
        if c.v % 2 == 0:
            warnings.warn(f"source of even order {c.v}: the ring-cut parity argument fails",
                          stacklevel=2)
    pshift = [0, c1.v, c1.v + c2.v]
    V = c1.v + c2.v + c3.v
    for (p, j), c in zip(plan.deleted, srcs):
        if not (0 <= j < c.v) or p not in c.blocks[j]:
            raise ValueError(f"point {p} is not on block {j}")
    blocks = []
    for i, c in enumerate(srcs):
        p_prev, _ = plan.deleted[i - 1]
        p_here, j_here = plan.deleted[i]
        for j, b in enumerate(c.blocks):
            pts = [x + pshift[i] for x in b]
            if j == j_here:
                # this block loses its own deleted point and gains the
                # valency-2 point of the previous source
                pts.remove(p_here + pshift[i])
                pts.append(p_prev + pshift[i - 1])
            blocks.append(tuple(sorted(pts)))
    cfg = validate_configuration(V, blocks)
    bshift = pshift
    ring = []
    parts = []
    for i in range(3):
        p_i, _ = plan.deleted[i]
        _, j_next = plan.deleted[(i + 1) % 3]
        ring.append((p_i + pshift[i], V + bshift[(i + 1) % 3] + j_next))
        parts.append(tuple(list(range(pshift[i], pshift[i] + srcs[i].v))
                           + list(range(V + bshift[i], V + bshift[i] + srcs[i].v))))
    return Stitched(cfg, tuple(ring), tuple(parts))


def stitch(c1, c2, c3, plan: StitchPlan | None = None) -> Configuration:
    """Delete one Levi edge from each source and join them in a ring:
    the freed point of source i joins the freed block of source i+1."""
    return stitch_detailed(c1, c2, c3, plan).config


# ------------------------------------------------------------------ Martinetti


@dataclass(frozen=True)
class MartinettiStep:
    """Blocks ``x`` and ``y`` (as point triples, with ``x[0]``/``y[0]`` the
    uncovered pair) are replaced by {x0, y0, z}, {x1, x2, z}, {y1, y2, z}."""

    x: tuple[int, int, int]
    y: tuple[int, int, int]

    def check(self, cfg: Configuration) -> None:
        blocks = set(cfg.blocks)
        if tuple(sorted(self.x)) not in blocks or tuple(sorted(self.y)) not in blocks:
            raise ConfigurationError([("not_a_block", (self.x, self.y))])
        if set(self.x) & set(self.y):
            raise ConfigurationError([("not_disjoint", (self.x, self.y))])
        pair = {self.x[0], self.y[0]}
        if any(pair <= set(b) for b in cfg.blocks):
            raise ConfigurationError([("duplicate_pair", tuple(sorted(pair)))])


def martinetti_extend(cfg: Configuration, step: MartinettiStep) -> Configuration:
    step.check(cfg)
    z = cfg.v
    x, y = step.x, step.y
    gone = {tuple(sorted(x)), tuple(sorted(y))}
    blocks = [b for b in cfg.blocks if b not in gone]
    blocks += [(x[0], y[0], z), (x[1], x[2], z), (y[1], y[2], z)]
    return validate_configuration(cfg.v + 1, blocks)


def martinetti_steps(cfg: Configuration):
    """All extension steps, one per (ordered block pair, choice of x0, y0)."""
    cover = {pr for b in cfg.blocks for pr in combinations(b, 2)}
    for bx, by in combinations(cfg.blocks, 2):
        if set(bx) & set(by):
            continue
        for x0 in bx:
            for y0 in by:
                if (min(x0, y0), max(x0, y0)) in cover:
                    continue
                x = (x0,) + tuple(p for p in bx if p != x0)
                y = (y0,) + tuple(p for p in by if p != y0)
                yield MartinettiStep(x, y)


@dataclass(frozen=True)
class Reduction:
    """A reverse Martinetti step: removing point ``z`` of the child."""

    z: int
    parent: Configuration
    step: MartinettiStep        # in parent labels; re-applying it rebuilds the child


def reductions(cfg: Configuration) -> list[Reduction]:
    """Every way to undo a Martinetti step.

    For each point z and each of its blocks taken as {x0, y0, z}, the other
    two blocks through z supply {x1, x2} and {y1, y2}; both assignments of
    x0/y0 are tried.  Parents keep the child's point order with z removed.
    """
    v = cfg.v
    out = []
    stars = cfg.point_stars()
    for z in range(v):
        zb = [cfg.blocks[j] for j in stars[z]]
        rest = [b for j, b in enumerate(cfg.blocks) if j not in stars[z]]
        relab = [p if p < z else p - 1 for p in range(v)]
        for k in range(3):
            pair = [p for p in zb[k] if p != z]
            others = [tuple(p for p in zb[m] if p != z) for m in range(3) if m != k]
            for a, b in ((pair[0], pair[1]), (pair[1], pair[0])):
                X = (a,) + others[0]
                Y = (b,) + others[1]
                blocks = rest + [tuple(sorted(X)), tuple(sorted(Y))]
                try:
                    parent = validate_configuration(
                        v - 1, [[relab[p] for p in blk] for blk in blocks])
                except ConfigurationError:
                    continue
                step = MartinettiStep(tuple(relab[p] for p in X), tuple(relab[p] for p in Y))
                out.append(Reduction(z, parent, step))
    return out


def is_reducible(cfg: Configuration) -> tuple[bool, list[Configuration]]:
    """Whether some reverse Martinetti step exists, with the distinct parents
    (up to isomorphism, canonical copies, in certificate order)."""
    from .classify import canonical_configuration, config_certificate

    seen = {}
    for r in reductions(cfg):
        cert = config_certificate(r.parent)
        if cert not in seen:
            seen[cert] = canonical_configuration(r.parent)
    return bool(seen), [seen[k] for k in sorted(seen)]
