"""Incidence structures, Levi graphs, rotation systems and face tracing.

Point indices are 0-based.  In a Levi graph the points occupy vertices
``0..v-1`` and the blocks ``v..2v-1`` (in block-list order), so the colour
class of a vertex is implied by its index.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

POINT = 0
BLOCK = 1


class ConfigurationError(ValueError):
    """Raised when a triple list is not a symmetric configuration v_3.

    ``violations`` holds ``(kind, detail)`` pairs, e.g.
    ``("duplicate_pair", (0, 1))`` or ``("valency", (4, 2))``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        kinds = ", ".join(f"{k} {d}" for k, d in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"invalid configuration: {kinds}{more}")


@dataclass(frozen=True)
class Configuration:
    """A symmetric configuration v_3: ``v`` points and ``v`` blocks of size 3.

    Build instances with :func:`validate_configuration`; the constructor
    itself does not check anything.
    """

    v: int
    blocks: tuple[tuple[int, int, int], ...]

    def point_stars(self) -> list[list[int]]:
        """Indices of the blocks through each point, ascending."""
        stars: list[list[int]] = [[] for _ in range(self.v)]
        for j, blk in enumerate(self.blocks):
            for p in blk:
                stars[p].append(j)
        return stars

    def normalized(self) -> "Configuration":
        return Configuration(self.v, tuple(sorted(self.blocks)))

    def relabel(self, perm: Sequence[int]) -> "Configuration":
        """Apply the point map ``p -> perm[p]``; block order is kept."""
        return Configuration(self.v, tuple(tuple(sorted(perm[p] for p in b)) for b in self.blocks))

    def to_text(self, header: Iterable[str] = ()) -> str:
        lines = [f"# {h}" for h in header]
        lines.append(str(self.v))
        lines.extend(" ".join(map(str, b)) for b in sorted(self.blocks))
        return "\n".join(lines) + "\n"


def validate_configuration(v: int, triples: Iterable[Iterable[int]]) -> Configuration:
    """Check ``triples`` against the v_3 axioms and return a Configuration.

    Every violation found is reported at once through
    :class:`ConfigurationError`.
    """
    v = int(v)
    blocks = []
    violations = []
    if v <= 0:
        raise ConfigurationError([("point_count", v)])
    count = 0
    for t in triples:
        count += 1
        t = tuple(int(x) for x in t)
        if len(t) != 3 or len(set(t)) != 3:
            violations.append(("block_shape", t))
            continue
        if any(x < 0 or x >= v for x in t):
            violations.append(("index_range", t))
            continue
        blocks.append(tuple(sorted(t)))
    if count != v:
        violations.append(("block_count", count))
    valency = Counter(p for b in blocks for p in b)
    for p in range(v):
        if valency[p] != 3:
            violations.append(("valency", (p, valency[p])))
    seen = {}
    for j, b in enumerate(blocks):
        for pair in combinations(b, 2):
            if pair in seen:
                violations.append(("duplicate_pair", pair))
            else:
                seen[pair] = j
    if violations:
        raise ConfigurationError(violations)
    return Configuration(v, tuple(blocks))


def parse_configuration(text: str) -> Configuration:
    """Read the text format: ``v`` on the first line, then one triple per line."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ConfigurationError([("empty", None)])
    if len(rows[0]) != 1:
        raise ConfigurationError([("header", " ".join(rows[0]))])
    try:
        v = int(rows[0][0])
        triples = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise ConfigurationError([("syntax", str(exc))]) from None
    return validate_configuration(v, triples)


def read_configuration(path) -> Configuration:
    with open(path, encoding="utf-8") as fh:
        return parse_configuration(fh.read())


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on ``0..n-1`` with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a}")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in self.adj[u] if u < w]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    # darts: dart d = offset[u] + slot, pointing from u to adj[u][slot]
    @cached_property
    def dart_offset(self) -> tuple[int, ...]:
        out, acc = [], 0
        for a in self.adj:
            out.append(acc)
            acc += len(a)
        return tuple(out)

    @property
    def num_darts(self) -> int:
        return sum(len(a) for a in self.adj)

    def dart(self, u: int, w: int) -> int:
        return self.dart_offset[u] + self.adj[u].index(w)

    @cached_property
    def dart_tail(self) -> tuple[int, ...]:
        return tuple(u for u in range(self.n) for _ in self.adj[u])

    @cached_property
    def dart_head(self) -> tuple[int, ...]:
        return tuple(w for u in range(self.n) for w in self.adj[u])

    @cached_property
    def reverse(self) -> tuple[int, ...]:
        off = self.dart_offset
        return tuple(off[w] + self.adj[w].index(u) for u in range(self.n) for w in self.adj[u])

    def components(self, removed: Iterable[tuple[int, int]] = ()) -> list[list[int]]:
        gone = {(min(a, b), max(a, b)) for a, b in removed}
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w] and (min(u, w), max(u, w)) not in gone:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def girth(self) -> float:
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``u`` renamed ``perm[u]``."""
        return Graph.from_edges(self.n, [(perm[a], perm[b]) for a, b in self.edges()])


@dataclass(frozen=True, eq=False)
class LeviGraph(Graph):
    """Point-block incidence graph; vertices below ``v`` are points."""

    v: int = 0

    @property
    def color(self) -> tuple[int, ...]:
        return tuple(POINT if u < self.v else BLOCK for u in range(self.n))

    def __eq__(self, other):
        return isinstance(other, LeviGraph) and self.v == other.v and self.adj == other.adj

    def __hash__(self):
        return hash((self.v, self.adj))

    def is_point(self, u: int) -> bool:
        return u < self.v

    def to_configuration(self) -> Configuration:
        v = self.v
        return validate_configuration(v, [[p for p in self.adj[b]] for b in range(v, 2 * v)])

    @classmethod
    def from_colored_edges(cls, n: int, edges, is_point) -> tuple["LeviGraph", list[int]]:
        """Renumber an arbitrary 2-coloured graph so points come first.

        Returns the Levi graph and the old->new vertex map.
        """
        pts = [u for u in range(n) if is_point(u)]
        blks = [u for u in range(n) if not is_point(u)]
        if len(pts) * 2 != n:
            raise ValueError("colour classes must have equal size")
        new = [0] * n
        for i, u in enumerate(pts + blks):
            new[u] = i
        base = Graph.from_edges(n, [(new[a], new[b]) for a, b in edges])
        for a, b in base.edges():
            if (a < len(pts)) == (b < len(pts)):
                raise ValueError(f"edge {a}-{b} joins vertices of the same colour")
        return cls(base.n, base.adj, len(pts)), new


def levi_graph(cfg: Configuration) -> LeviGraph:
    v = cfg.v
    edges = [(p, v + j) for j, b in enumerate(cfg.blocks) for p in b]
    base = Graph.from_edges(2 * v, edges)
    return LeviGraph(base.n, base.adj, v)


def associated_graph(cfg: Configuration) -> Graph:
    """Graph on the points joining every pair that shares a block."""
    return Graph.from_edges(cfg.v, [pr for b in cfg.blocks for pr in combinations(b, 2)])


def dual(cfg: Configuration) -> Configuration:
    """Swap points and blocks: block ``j`` becomes point ``j``."""
    return Configuration(cfg.v, tuple(tuple(s) for s in cfg.point_stars()))


def is_connected(obj) -> bool:
    g = levi_graph(obj) if isinstance(obj, Configuration) else obj
    return g.is_connected()


def disjoint_union(*cfgs: Configuration) -> Configuration:
    blocks, shift = [], 0
    for c in cfgs:
        blocks.extend(tuple(p + shift for p in b) for b in c.blocks)
        shift += c.v
    return Configuration(shift, tuple(blocks))


# ---------------------------------------------------------------- rotations


@dataclass(frozen=True)
class RotationSystem:
    """Successor permutation on darts: ``succ[d]`` is the next dart
    clockwise around the tail of ``d``."""

    succ: tuple[int, ...]

    @classmethod
    def from_orders(cls, g: Graph, orders: Sequence[Sequence[int]]) -> "RotationSystem":
        """``orders[u]`` lists the neighbours of ``u`` in cyclic order."""
        succ = [0] * g.num_darts
        for u in range(g.n):
            order = list(orders[u])
            if sorted(order) != list(g.adj[u]):
                raise ValueError(f"rotation at {u} is not a cyclic order of its neighbours")
            for i, w in enumerate(order):
                succ[g.dart(u, w)] = g.dart(u, order[(i + 1) % len(order)])
        return cls(tuple(succ))

    @classmethod
    def from_flips(cls, g: Graph, flips: Sequence[int]) -> "RotationSystem":
        """Rotation on a cubic graph: vertex ``u`` uses its sorted neighbour
        order when ``flips[u] == 0`` and the reverse cycle otherwise."""
        orders = []
        for u in range(g.n):
            a = g.adj[u]
            orders.append(a if not flips[u] else (a[0], a[2], a[1]) if len(a) == 3 else a[::-1])
        return cls.from_orders(g, orders)

    def orders(self, g: Graph) -> list[list[int]]:
        out = []
        for u in range(g.n):
            if not g.adj[u]:
                out.append([])
                continue
            d0 = g.dart_offset[u]
            seq, d = [], d0
            while True:
                seq.append(g.dart_head[d])
                d = self.succ[d]
                if d == d0:
                    break
            out.append(seq)
        return out

    def inverse(self) -> "RotationSystem":
        inv = [0] * len(self.succ)
        for d, e in enumerate(self.succ):
            inv[e] = d
        return RotationSystem(tuple(inv))

    def check(self, g: Graph) -> None:
        if len(self.succ) != g.num_darts:
            raise ValueError("rotation does not cover every dart")
        for u in range(g.n):
            darts = set(range(g.dart_offset[u], g.dart_offset[u] + len(g.adj[u])))
            if not darts:
                continue
            d0 = min(darts)
            seen, d = set(), d0
            while d not in seen:
                if d not in darts:
                    raise ValueError(f"rotation at {u} leaves its dart set")
                seen.add(d)
                d = self.succ[d]
            if seen != darts or d != d0:
                raise ValueError(f"rotation at {u} is not a single cycle")


@dataclass(frozen=True)
class FaceTrace:
    faces: tuple[tuple[int, ...], ...]
    num_vertices: int
    num_edges: int

    @property
    def genus(self) -> int:
        euler = self.num_vertices - self.num_edges + len(self.faces)
        g2 = 2 - euler
        if g2 % 2:
            raise ValueError("odd Euler characteristic; graph not connected?")
        return g2 // 2

    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


def trace_faces(g: Graph, rot: RotationSystem) -> FaceTrace:
    """Faces of the orientable embedding given by ``rot``.

    A face walk leaves along dart ``d`` and continues with the rotation
    successor of the reverse of ``d``.  Faces are listed by smallest dart.
    """
    succ, rev = rot.succ, g.reverse
    n = len(succ)
    seen = bytearray(n)
    faces = []
    for d0 in range(n):
        if seen[d0]:
            continue
        walk, d = [], d0
        while not seen[d]:
            seen[d] = 1
            walk.append(d)
            d = succ[rev[d]]
        faces.append(tuple(walk))
    return FaceTrace(tuple(faces), g.n, g.num_edges)


# ------------------------------------------------------------ spanning trees


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> "SpanningTree":
        return cls(frozenset(_key(a, b) for a, b in edges))

    def check(self, g: Graph) -> None:
        if len(self.edges) != g.n - 1:
            raise ValueError(f"tree has {len(self.edges)} edges, expected {g.n - 1}")
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            if b not in g.adj[a]:
                raise ValueError(f"{a}-{b} is not an edge of the graph")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError(f"edge {a}-{b} closes a cycle")
            parent[ra] = rb

    def cotree(self, g: Graph) -> list[tuple[int, int]]:
        return [e for e in g.edges() if e not in self.edges]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def cycle_rank(g: Graph) -> int:
    return g.num_edges - g.n + len(g.components())
