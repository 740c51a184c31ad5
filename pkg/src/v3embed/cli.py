"""Command-line interface: ``v3embed <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 Unknown verdict or exhausted
budget, 4 invalid input.
"""
from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_INVALID = 0, 2, 3, 4


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    seed: int
    version: str = __version__
    input_hashes: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self):
        self._t0 = time.monotonic()

    def finish(self) -> None:
        self.wall_time = round(time.monotonic() - self._t0, 3)

    def add_input(self, path: str) -> None:
        with open(path, "rb") as fh:
            self.input_hashes[path] = hashlib.sha256(fh.read()).hexdigest()

    def as_dict(self) -> dict:
        return asdict(self)

    def comment_lines(self) -> list[str]:
        return ["manifest " + json.dumps(self.as_dict(), sort_keys=True)]


class InvalidInput(Exception):
    pass


def _color(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _open_out(path):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w")


def _read_config(path, manifest):
    from .core import ConfigurationError, read_configuration

    try:
        cfg = read_configuration(path)
    except ConfigurationError as exc:
        raise InvalidInput(f"{path}: {exc}") from exc
    except OSError as exc:
        raise InvalidInput(str(exc)) from exc
    manifest.add_input(path)
    return cfg


def _write_sidecar(out_path, manifest):
    if out_path not in (None, "-"):
        with open(out_path + ".manifest.json", "w") as fh:
            json.dump(manifest.as_dict(), fh, indent=2, sort_keys=True)
    else:
        print(json.dumps(manifest.as_dict(), sort_keys=True), file=sys.stderr)


# ------------------------------------------------------------ subcommands


def cmd_generate(args, manifest):
    from . import graph6
    from .enumeration import configs_from_graph, generate_levi_graphs

    if args.v < 7:
        raise _Usage("v must be at least 7")
    graphs = configs = 0
    with _open_out(args.output) as out:
        for g in generate_levi_graphs(args.v, jobs=args.jobs, checkpoint=args.checkpoint):
            out.write(graph6.encode(g) + "\n")
            graphs += 1
            configs += len(configs_from_graph(g))
    manifest.finish()
    _write_sidecar(args.output, manifest)
    print(f"v = {args.v}: {graphs} Levi graphs, {configs} connected configurations",
          file=sys.stderr)
    return EXIT_OK


def cmd_table(args, manifest):
    from .enumeration import format_table, table_row

    if args.v_max < 7 or args.v_min < 7 or args.v_min > args.v_max:
        raise _Usage("need 7 <= v_min <= v_max")
    rows = []
    counts = {}
    complete = True
    for v in range(args.v_min, args.v_max + 1):
        ck = f"{args.checkpoint_dir}/table-{v}.json" if args.checkpoint_dir else None
        row = table_row(v, jobs=args.jobs, checkpoint=ck, lower_counts=counts)
        counts[v] = row.a
        complete &= row.complete
        rows.append(row)
        if args.progress:
            print(f"row {v} done", file=sys.stderr)
    manifest.finish()
    with _open_out(args.output) as out:
        text = format_table(rows, csv=args.csv)
        if not args.csv:
            text = "".join(f"# {ln}\n" for ln in manifest.comment_lines()) + text
        out.write(text)
    if args.csv:
        _write_sidecar(args.output, manifest)
    return EXIT_OK if complete else EXIT_UNKNOWN


def cmd_verdict(args, manifest):
    from .certificates import certificate_document, dumps
    from .embed import Policy, Status, verdict

    cfg = _read_config(args.config, manifest)
    if cfg.v % 2 == 0:
        raise InvalidInput(f"v = {cfg.v} is even; a one-face embedding needs odd v")
    policy = Policy(exhaustive_limit=args.exhaustive_limit, time_budget=args.time_budget,
                    seed=args.seed)
    try:
        res = verdict(cfg, policy)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    doc = certificate_document(cfg, res)
    manifest.finish()
    doc["manifest"] = manifest.as_dict()
    with _open_out(args.output) as out:
        out.write(dumps(doc))
    tag = _color(res.status.value, "32" if res.status != Status.UNKNOWN else "33")
    print(f"{args.config}: {tag} ({res.method})", file=sys.stderr)
    return EXIT_UNKNOWN if res.status == Status.UNKNOWN else EXIT_OK


def _named_source(name, manifest):
    from .construct import cyclic_config, fano, pappus

    if name == "fano":
        return fano()
    if name == "pappus":
        return pappus()
    if name.startswith("cyclic:"):
        return cyclic_config(int(name.split(":", 1)[1]))
    return _read_config(name, manifest)


def _parse_step(text):
    from .construct import MartinettiStep

    try:
        x, y = text.split(";")
        xs = tuple(int(t) for t in x.split(","))
        ys = tuple(int(t) for t in y.split(","))
    except ValueError as exc:
        raise _Usage("step must look like x0,x1,x2;y0,y1,y2") from exc
    if len(xs) != 3 or len(ys) != 3:
        raise _Usage("step must name two triples")
    return MartinettiStep(xs, ys)


def cmd_construct(args, manifest):
    from .construct import (StitchPlan, cyclic_config, fano, martinetti_extend,
                            martinetti_steps, pappus, stitch)
    from .core import ConfigurationError

    try:
        if args.family == "fano":
            cfg = fano()
        elif args.family == "pappus":
            cfg = pappus()
        elif args.family == "cyclic":
            if args.v is None:
                raise _Usage("cyclic needs --v")
            cfg = cyclic_config(args.v)
        elif args.family == "stitch":
            if not args.sources or len(args.sources) != 3:
                raise _Usage("stitch needs three --sources")
            srcs = [_named_source(s, manifest) for s in args.sources]
            plan = StitchPlan.from_json(open(args.plan).read()) if args.plan else None
            cfg = stitch(*srcs, plan=plan)
        else:  # martinetti
            if not args.sources or len(args.sources) != 1:
                raise _Usage("martinetti needs one --sources entry")
            base = _named_source(args.sources[0], manifest)
            step = _parse_step(args.step) if args.step else next(iter(martinetti_steps(base)), None)
            if step is None:
                raise InvalidInput("the configuration has no two disjoint blocks")
            cfg = martinetti_extend(base, step)
    except ConfigurationError as exc:
        raise InvalidInput(str(exc)) from exc
    except ValueError as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise _Usage(str(exc)) from exc
    manifest.finish()
    with _open_out(args.output) as out:
        out.write(cfg.to_text(manifest.comment_lines()))
    return EXIT_OK


def _layout(g, parts, seed):
    n = g.n
    if parts:
        pos = {}
        for k, part in enumerate(parts):
            ang = math.pi / 2 + 2 * math.pi * k / 3
            cx, cy = 0.55 * math.cos(ang), 0.55 * math.sin(ang)
            for i, u in enumerate(part):
                t = 2 * math.pi * i / len(part)
                pos[u] = (cx + 0.35 * math.cos(t), cy + 0.35 * math.sin(t))
        return pos
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(g.edges())
    return {u: tuple(p) for u, p in nx.spring_layout(G, seed=seed).items()}


def render_svg(g, parts=None, seed=0, caption_lines=(), comment="") -> str:
    size, pad = 600, 40
    pos = _layout(g, parts, seed)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0

    def xy(u):
        x, y = pos[u]
        return (pad + (x - lo_x) / span * (size - 2 * pad),
                pad + (y - lo_y) / span * (size - 2 * pad))

    extra = 20 * len(caption_lines)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + extra}">']
    if comment:
        out.append(f"<!-- {comment.replace('--', '- -')} -->")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    for a, b in g.edges():
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                   'stroke="black" stroke-width="1.5"/>')
    for u in range(g.n):
        x, y = xy(u)
        fill = "black" if g.is_point(u) else "white"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="6" fill="{fill}" stroke="black" '
                   f'stroke-width="1.5"><title>{u}</title></circle>')
    for i, line in enumerate(caption_lines):
        out.append(f'<text x="{pad}" y="{size + 15 + 20 * i}" font-family="sans-serif" '
                   f'font-size="13">{line}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_draw(args, manifest):
    from .core import RotationSystem, levi_graph, trace_faces
    from .embed import ring_cut_certificate

    cfg = _read_config(args.config, manifest)
    g = levi_graph(cfg)
    cert = ring_cut_certificate(g) if g.is_connected() else None
    parts = cert.parts if cert else None
    caption = []
    if args.rotation:
        manifest.add_input(args.rotation)
        data = json.load(open(args.rotation))
        try:
            if "flips" in data:
                rot = RotationSystem.from_flips(g, data["flips"])
            else:
                rot = RotationSystem.from_orders(g, data["orders"])
        except (KeyError, ValueError, IndexError) as exc:
            raise InvalidInput(f"bad rotation file: {exc}") from exc
        ft = trace_faces(g, rot)
        caption.append(f"faces: {len(ft.faces)}, genus {ft.genus}, "
                       f"face lengths {ft.face_lengths()}")
    manifest.finish()
    svg = render_svg(g, parts, args.seed, caption,
                     json.dumps(manifest.as_dict(), sort_keys=True))
    with _open_out(args.output) as out:
        out.write(svg)
    return EXIT_OK


def cmd_classify(args, manifest):
    from .classify import aut_group, config_certificate, predicates
    from .core import levi_graph

    records = []
    for path in args.configs:
        cfg = _read_config(path, manifest)
        info = aut_group(levi_graph(cfg))
        rec = {"file": path, "v": cfg.v, "certificate": config_certificate(cfg),
               "aut_order": info.color_order, "full_order": info.order}
        rec.update(predicates(cfg, info).as_dict())
        records.append(rec)
    manifest.finish()
    with _open_out(args.output) as out:
        if args.csv:
            keys = list(records[0]) if records else []
            out.write(",".join(keys) + "\n")
            for r in records:
                out.write(",".join(str(r[k]) for k in keys) + "\n")
        else:
            out.write(json.dumps({"records": records, "manifest": manifest.as_dict()},
                                 indent=2, sort_keys=True) + "\n")
    if args.csv:
        _write_sidecar(args.output, manifest)
    return EXIT_OK


def cmd_check(args, manifest):
    from .certificates import CertificateError, check_certificate
    from .core import ConfigurationError

    try:
        with open(args.certificate) as fh:
            doc = json.load(fh)
        msg = check_certificate(doc)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InvalidInput(f"{args.certificate}: {exc}") from exc
    except (CertificateError, ConfigurationError) as exc:
        print(f"{args.certificate}: {_color('FAILED', '31')}: {exc}")
        return EXIT_INVALID
    print(f"{args.certificate}: {_color(msg, '32')}")
    return EXIT_OK


# ------------------------------------------------------------------ parser


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="v3embed", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, output=True):
        sp.add_argument("--seed", type=int, default=0, help="seed for randomised steps (default 0)")
        if output:
            sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = sub.add_parser("generate", help="write one graph6 line per Levi graph class")
    sp.add_argument("v", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--checkpoint", help="JSON checkpoint file for resumable runs")
    common(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("table", help="counts of configurations by property, rows 7..V_MAX")
    sp.add_argument("v_max", type=int)
    sp.add_argument("--v-min", type=int, default=7)
    sp.add_argument("--csv", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--checkpoint-dir", help="directory for per-row checkpoints")
    sp.add_argument("--progress", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verdict", help="decide embeddability in every orientation")
    sp.add_argument("config")
    sp.add_argument("--exhaustive-limit", type=int, default=19)
    sp.add_argument("--time-budget", type=float, default=None,
                    help="seconds for the dominating-set search")
    common(sp)
    sp.set_defaults(func=cmd_verdict)

    sp = sub.add_parser("construct", help="build a named or derived configuration")
    sp.add_argument("family", choices=["fano", "pappus", "cyclic", "stitch", "martinetti"])
    sp.add_argument("--v", type=int)
    sp.add_argument("--sources", nargs="+",
                    help="fano, pappus, cyclic:W or a configuration file")
    sp.add_argument("--plan", help="JSON stitch plan file")
    sp.add_argument("--step", help="Martinetti step x0,x1,x2;y0,y1,y2 (x0,y0 uncovered)")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("draw", help="SVG drawing of the Levi graph")
    sp.add_argument("config")
    sp.add_argument("--rotation", help="JSON file with 'flips' or 'orders' to trace faces")
    common(sp)
    sp.set_defaults(func=cmd_draw)

    sp = sub.add_parser("classify", help="automorphism data and properties")
    sp.add_argument("configs", nargs="+")
    sp.add_argument("--csv", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("check", help="re-verify a certificate JSON using only the data model")
    sp.add_argument("certificate")
    common(sp, output=False)
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "seed")}
    manifest = RunManifest(args.command, params, args.seed)
    try:
        return args.func(args, manifest)
    except _Usage as exc:
        print(f"v3embed {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidInput as exc:
        print(f"v3embed {args.command}: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
