"""Canonical labelling and automorphism generators by partition refinement.

The search follows the individualisation-refinement scheme: refine the
ordered partition to an equitable one, split the first smallest non-trivial
cell by individualising each of its vertices in turn, recurse.  Leaves are
compared by the sequence of refinement traces along the path and then by
the relabelled adjacency.  Automorphisms found at equivalent leaves prune
sibling subtrees and yield the group order as the product of first-path
orbit lengths.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass
class CanonResult:
    labeling: list[int]          # labeling[i] = vertex placed at position i
    certificate: tuple           # adjacency in canonical positions
    generators: list[tuple[int, ...]]
    order: int

    def position(self) -> list[int]:
        pos = [0] * len(self.labeling)
        for i, u in enumerate(self.labeling):
            pos[u] = i
        return pos


def _refine(adj, lab, cell_of, clen, queue, inq, ncells):
    """Refine in place until equitable; returns (trace, number of cells)."""
    trace = []
    n = len(lab)
    while queue and ncells < n:
        s = queue.popleft()
        inq[s] = False
        cnt = {}
        for u in lab[s:s + clen[s]]:
            for w in adj[u]:
                cnt[w] = cnt.get(w, 0) + 1
        touched = sorted({cell_of[w] for w in cnt if clen[cell_of[w]] > 1})
        for c in touched:
            size = clen[c]
            groups = {}
            for u in lab[c:c + size]:
                k = cnt.get(u, 0)
                g = groups.get(k)
                if g is None:
                    groups[k] = [u]
                else:
                    g.append(u)
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            p = c
            parts = []
            for k in keys:
                g = groups[k]
                L = len(g)
                lab[p:p + L] = g
                for u in g:
                    cell_of[u] = p
                clen[p] = L
                parts.append(p)
                p += L
            ncells += len(keys) - 1
            trace.append((c, tuple((k, len(groups[k])) for k in keys)))
            if inq[c]:
                for q in parts[1:]:
                    queue.append(q)
                    inq[q] = True
            else:
                big = parts[0]
                for q in parts[1:]:
                    if clen[q] > clen[big]:
                        big = q
                for q in parts:
                    if q != big:
                        queue.append(q)
                        inq[q] = True
    return tuple(trace), ncells


def _orbits_fixing(gens, fixed, n):
    """Union-find orbit representative map for the generators that fix
    every vertex of ``fixed``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[x] == x for x in fixed):
            for x in range(n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return find


def canonical_labeling(adj, colors=None) -> CanonResult:
    """Canonical labelling of the graph given by adjacency lists.

    ``colors`` is an optional per-vertex sortable key; vertices are only
    mapped onto vertices with the same key, and keys keep their relative
    order in the canonical labelling.
    """
    n = len(adj)
    if colors is None:
        colors = [0] * n
    order = sorted(range(n), key=lambda u: colors[u])
    lab = order[:]
    cell_of = [0] * n
    clen = [0] * n
    queue = deque()
    inq = [False] * n
    start = 0
    ncells = 0
    for i in range(n + 1):
        if i == n or (i > start and colors[lab[i]] != colors[lab[start]]):
            if i > start:
                for u in lab[start:i]:
                    cell_of[u] = start
                clen[start] = i - start
                queue.append(start)
                inq[start] = True
                ncells += 1
                start = i
    if n == 0:
        return CanonResult([], (), [], 1)
    trace0, ncells = _refine(adj, lab, cell_of, clen, queue, inq, ncells)

    gens: list[tuple[int, ...]] = []
    first = {}   # "lab", "cert", "codes"
    best = {}
    orbit_sizes = []

    def leaf_cert(lab_):
        pos = [0] * n
        for i, u in enumerate(lab_):
            pos[u] = i
        return tuple(tuple(sorted(pos[w] for w in adj[u])) for u in lab_)

    def target_cell(cell_of_, clen_, lab_):
        bestc, bestl = -1, n + 1
        i = 0
        while i < n:
            L = clen_[i]
            if 1 < L < bestl:
                bestc, bestl = i, L
                if L == 2:
                    break
            i += L
        return bestc

    def add_gen(src_lab, dst_lab):
        g = [0] * n
        for a, b in zip(src_lab, dst_lab):
            g[a] = b
        g = tuple(g)
        if any(g[x] != x for x in range(n)):
            gens.append(g)

    def search(lab_, cell_of_, clen_, ncells_, codes, path, on_first, eq_first):
        """Returns the depth to which the search should backtrack."""
        depth = len(path)
        if ncells_ == n:
            cert = leaf_cert(lab_)
            if not first:
                first.update(lab=lab_[:], cert=cert, codes=codes[:], path=path[:])
                best.update(lab=lab_[:], cert=cert, codes=codes[:], path=path[:])
                return depth
            if eq_first and cert == first["cert"]:
                add_gen(first["lab"], lab_)
                k = 0
                fp = first["path"]
                while k < len(path) and path[k] == fp[k]:
                    k += 1
                return k
            key, bkey = (codes, cert), (best["codes"], best["cert"])
            if key == bkey:
                add_gen(best["lab"], lab_)
            elif key > bkey:
                best.update(lab=lab_[:], cert=cert, codes=codes[:], path=path[:])
            return depth

        c = target_cell(cell_of_, clen_, lab_)
        cell = sorted(lab_[c:c + clen_[c]])
        explored = []
        for w in cell:
            if explored:
                find = _orbits_fixing(gens, path, n)
                rw = find(w)
                if any(find(x) == rw for x in explored):
                    continue
            explored.append(w)
            # individualise w: move it to the front of its cell
            lab2 = lab_[:]
            cell_of2 = cell_of_[:]
            clen2 = clen_[:]
            i = lab2.index(w, c, c + clen2[c])
            lab2[c], lab2[i] = lab2[i], lab2[c]
            clen2[c + 1] = clen2[c] - 1
            clen2[c] = 1
            for u in lab2[c + 1:c + 1 + clen2[c + 1]]:
                cell_of2[u] = c + 1
            q = deque([c])
            inq2 = [False] * n
            inq2[c] = True
            tr, nc2 = _refine(adj, lab2, cell_of2, clen2, q, inq2, ncells_ + 1)
            tr = (c, tr)
            codes.append(tr)
            if first:
                fc = first["codes"]
                child_eq_first = eq_first and depth < len(fc) and tr == fc[depth]
                if not child_eq_first and codes < best["codes"][:depth + 1]:
                    codes.pop()
                    continue
            else:
                child_eq_first = True
            path.append(w)
            back = search(lab2, cell_of2, clen2, nc2, codes, path,
                          on_first and len(explored) == 1, child_eq_first)
            path.pop()
            codes.pop()
            if back < depth:
                return back
        if on_first:
            find = _orbits_fixing(gens, path, n)
            r0 = find(explored[0])
            orbit_sizes.append(sum(1 for x in cell if find(x) == r0))
        return depth

    search(lab, cell_of, clen, ncells, [], [], True, True)
    order_ = 1
    for s in orbit_sizes:
        order_ *= s
    return CanonResult(best["lab"], best["cert"], gens, order_)
