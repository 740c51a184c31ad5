"""JSON certificates for verdicts, and a checker that relies only on ``core``.

Document layout (``format`` = ``v3embed-certificate``, ``version`` = 1)::

    status         EveryOrientation | SomeOrientation | NoOrientation | Unknown
    kind           dominating_tree | ring_cut | orientation_survey | none
    configuration  {"v": v, "blocks": [[p, q, r], ...]}
    witness        kind-specific payload (below)
    self_check     counts and parities a reader can confirm by hand

dominating_tree: ``s`` (point list) and ``tree`` (Levi edges, points are
0..v-1 and block j is vertex v+j).  self_check holds ``s_size``,
``induced_edges``, ``tree_edges`` and the co-tree valency of each point.

ring_cut: ``edges`` (three Levi edges, P1-P2, P2-P3, P3-P1) and ``parts``.
self_check holds ``n``, ``m`` and ``cycle_rank`` per part.

orientation_survey: ``flips`` (one rotation bit per Levi vertex) of a
one-face rotation when one was found, plus ``embeddable`` and
``orientations`` counts.  Only the witness rotation can be re-checked
cheaply; the counts come from the exhaustive survey.
"""
from __future__ import annotations

import json

from .core import (Configuration, RotationSystem, SpanningTree, levi_graph,
                   trace_faces, validate_configuration)

FORMAT = "v3embed-certificate"
VERSION = 1


class CertificateError(ValueError):
    pass


def certificate_document(cfg: Configuration, verdict) -> dict:
    from .embed import DominatingTreeCertificate, RingCutCertificate, cotree_report

    doc = {"format": FORMAT, "version": VERSION, "status": verdict.status.value,
           "method": verdict.method,
           "configuration": {"v": cfg.v, "blocks": [list(b) for b in cfg.blocks]}}
    w = verdict.witness
    g = levi_graph(cfg)
    if isinstance(w, DominatingTreeCertificate):
        rep = cotree_report(g, w.tree)
        doc["kind"] = "dominating_tree"
        doc["witness"] = {"s": list(w.s), "tree": [list(e) for e in w.tree.sorted_edges()]}
        doc["self_check"] = {"s_size": len(w.s), "induced_edges": 3 * len(w.s),
                             "tree_edges": len(w.tree.edges),
                             "point_cotree_valency": list(rep.point_valencies(cfg.v))}
    elif isinstance(w, RingCutCertificate):
        doc["kind"] = "ring_cut"
        doc["witness"] = {"edges": [list(e) for e in w.edges],
                          "parts": [list(p) for p in w.parts]}
        doc["self_check"] = {"n": list(w.n), "m": list(w.m),
                             "cycle_rank": [m - n + 1 for n, m in zip(w.n, w.m)]}
    elif isinstance(w, RotationSystem) or verdict.method == "orientation-survey":
        doc["kind"] = "orientation_survey"
        doc["witness"] = {"flips": _flips(g, w) if w is not None else None}
        doc["self_check"] = dict(verdict.detail)
    else:
        doc["kind"] = "none"
        doc["witness"] = None
        doc["self_check"] = {}
    return doc


def _flips(g, rot):
    out = []
    for u, order in enumerate(rot.orders(g)):
        a = sorted(g.adj[u])
        i = order.index(a[0])
        out.append(0 if order[(i + 1) % 3] == a[1] else 1)
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    groups = {}
    for u in range(n):
        groups.setdefault(find(u), []).append(u)
    return sorted(groups.values())


def check_certificate(doc: dict) -> str:
    """Re-verify a certificate document from scratch.  Returns a one-line
    summary; raises ``CertificateError`` on any failure."""
    if doc.get("format") != FORMAT or doc.get("version") != VERSION:
        raise CertificateError("not a version 1 certificate document")
    c = doc["configuration"]
    cfg = validate_configuration(c["v"], c["blocks"])
    v = cfg.v
    g = levi_graph(cfg)
    kind = doc.get("kind")
    w = doc.get("witness")
    sc = doc.get("self_check", {})
    if kind == "dominating_tree":
        s = [int(p) for p in w["s"]]
        if len(set(s)) != len(s) or len(s) != (v - 1) // 2 or v % 2 == 0:
            raise CertificateError("S must have (v-1)/2 distinct points with v odd")
        S = set(s)
        for j, b in enumerate(cfg.blocks):
            if not S & set(b):
                raise CertificateError(f"block {j} misses S")
        induced = [(p, x) for p in s for x in g.adj[p]]
        if len(induced) != sc.get("induced_edges", len(induced)):
            raise CertificateError("induced edge count disagrees with self_check")
        comps = _components(2 * v, induced)
        big = [comp for comp in comps if len(comp) > 1]
        if len(big) != 1 or len(big[0]) != len(s) + v:
            raise CertificateError("S and the blocks do not induce one connected subgraph")
        tree = SpanningTree.of(tuple(e) for e in w["tree"])
        try:
            tree.check(g)
        except ValueError as exc:
            raise CertificateError(str(exc)) from exc
        if not {(min(a, b), max(a, b)) for a, b in induced} <= tree.edges:
            raise CertificateError("tree does not contain the induced subgraph")
        val = [0] * v
        for a, b in tree.cotree(g):
            val[min(a, b)] += 1
        if any(x % 2 for x in val):
            raise CertificateError("a point has odd co-tree valency")
        if "point_cotree_valency" in sc and list(sc["point_cotree_valency"]) != val:
            raise CertificateError("co-tree valencies disagree with self_check")
        return f"ok: dominating tree, |S| = {len(s)}, every point has even co-tree valency"
    if kind == "ring_cut":
        cut = {(min(a, b), max(a, b)) for a, b in w["edges"]}
        if len(cut) != 3 or any(b not in g.adj[a] for a, b in cut):
            raise CertificateError("need three distinct Levi edges")
        rest = [e for e in g.edges() if e not in cut]
        comps = _components(2 * v, rest)
        parts = [sorted(p) for p in w["parts"]]
        if comps != sorted(parts):
            raise CertificateError("parts are not the components after the cut")
        which = {u: i for i, p in enumerate(parts) for u in p}
        for k, (a, b) in enumerate(w["edges"]):
            if {which[a], which[b]} != {k, (k + 1) % 3}:
                raise CertificateError("cut edges do not join the parts in a ring")
        ranks = []
        for p in parts:
            ps = set(p)
            m = sum(1 for a, b in rest if a in ps)
            ranks.append(m - len(p) + 1)
        if any(r % 2 == 0 for r in ranks):
            raise CertificateError("a part has even cycle rank")
        if "cycle_rank" in sc and list(sc["cycle_rank"]) != ranks:
            raise CertificateError("cycle ranks disagree with self_check")
        return f"ok: ring cut, part cycle ranks {ranks}"
    if kind == "orientation_survey":
        if w and w.get("flips") is not None:
            rot = RotationSystem.from_flips(g, w["flips"])
            nf = len(trace_faces(g, rot).faces)
            if nf != 1:
                raise CertificateError(f"witness rotation has {nf} faces")
            return "ok: witness rotation has one face (survey counts not re-run)"
        return "ok: no witness rotation to check (survey counts not re-run)"
    if kind == "none":
        return "ok: no certificate (status Unknown)"
    raise CertificateError(f"unknown certificate kind {kind!r}")
