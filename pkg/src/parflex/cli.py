"""Command-line interface.

Exit status: 0 on success, 1 when the analysis answers in the negative (not
walk-independent, not a NAC-coloring, not symmetric, ...), 2 on bad usage
or unreadable input.  ``--json`` switches any command to one JSON document
on standard output carrying the same data as the text report.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from fractions import Fraction

from . import __version__
from .apc import compute_apc, compute_ribbons, detect_induced_k2s, suggest_braces
from .core import edge_key, validate_parallelogram_placement
from .errors import (
    ConsistencyError, DocumentError, FrameworkError, ParflexError, PartitionError, RigidError,
    SymmetryError, TilingError, WalkIndependenceError,
)
from .flex import decompose, evaluate_flex, rigidity_verdict
from .io import FrameworkDocument, read_document, serialize_document
from .nac import (
    MAX_ENUMERATION_VERTICES, RED, EdgeColoring, colorings_from_apc, is_cartesian_nac, is_nac,
    verify_color_changes,
)
from .product import embed, quotient_graphs
from .render import RenderSpec, Sweep, frame_angles, render_svg, trajectory, write_frames
from .symmetry import (
    action_from_rotation, cn_colorings, cn_flex, compute_cn_apc, equivariance_residual, evaluate_cn_flex,
    is_cn_symmetric_nac, recentered, validate_cn_symmetric,
)
from .tilings import TILINGS, TRIM_MODES, TilingSpec, generate_patch
from .walk import check_walk_independence

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad argument values that argparse cannot catch by itself."""


# ---- output helpers ----

def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    x = float(x)
    return 0.0 if x == 0 else x


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return f"{float(x) + 0.0:.12g}"


def _edge_text(e) -> str:
    return f"{e[0]}-{e[1]}"


class Report:
    """Collects a text report and the matching JSON payload."""

    def __init__(self, command: str, as_json: bool):
        self.data: dict = {"command": command}
        self.lines: list[str] = []
        self.as_json = as_json

    def line(self, text: str = ""):
        self.lines.append(text)

    def emit(self, status: int) -> int:
        self.data["exit_code"] = status
        if self.as_json:
            sys.stdout.write(json.dumps(self.data, indent=1) + "\n")
        else:
            sys.stdout.write("\n".join(self.lines) + ("\n" if self.lines else ""))
        return status


def _parse_edges(text: str):
    out = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        try:
            u, v = part.split("-")
            out.append(edge_key(int(u), int(v)))
        except ValueError:
            raise UsageError(f"cannot read edge {part!r}; write edges as u-v,u-v") from None
    return out


def _parse_floats(text: str, what: str, degrees: bool = False):
    try:
        vals = [float(Fraction(x)) for x in text.replace(" ", "").split(",") if x]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {what} {text!r}; expected comma-separated numbers") from None
    return [math.radians(v) for v in vals] if degrees else vals


def _parse_sweep(text: str, degrees: bool) -> Sweep:
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise UsageError(f"sweep {text!r} must be CLASS:START:STOP[:PHASE]")
    try:
        cls = int(parts[0])
        start, stop = (float(Fraction(p)) for p in parts[1:3])
        phase = int(parts[3]) if len(parts) == 4 else 0
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read sweep {text!r}") from None
    if degrees:
        start, stop = math.radians(start), math.radians(stop)
    return Sweep(cls, start % (2 * math.pi), stop % (2 * math.pi), phase)


def _classes_json(partition):
    return [[list(e) for e in cls] for cls in partition.classes]


def _placement_json(placement, vertices):
    return {str(v): [_num(placement[v][0]), _num(placement[v][1])] for v in vertices}


# ---- commands ----

def cmd_classes(args) -> int:
    doc = read_document(args.file)
    g = doc.framework.graph
    part = compute_ribbons(g) if args.ribbons else compute_apc(g)
    rep = Report("classes", args.json)
    rep.data.update(kind=part.kind, count=len(part), sizes=part.sizes(), classes=_classes_json(part))
    if args.ribbons:
        rep.line(f"{len(part)} ribbon{'s' if len(part) != 1 else ''}")
    else:
        rep.line(f"{len(part)} class{'es' if len(part) != 1 else ''}")
    for i, cls in enumerate(part.classes):
        rep.line(f"class {i} ({len(cls)} edges): {' '.join(_edge_text(e) for e in cls)}")
    return rep.emit(OK)


def cmd_check(args) -> int:
    doc = read_document(args.file)
    fw = doc.framework
    rep = Report("check", args.json)
    heavy = detect_induced_k2s(fw.graph)
    report = validate_parallelogram_placement(fw)
    part = compute_apc(fw.graph)
    wi = check_walk_independence(fw, part)
    rep.data["placement"] = {
        "valid": report.valid,
        "coincident_pairs": [list(p) for p in report.coincident_pairs],
        "non_parallelograms": [list(c) for c in report.non_parallelograms],
        "degenerate_cycles": [list(c) for c in report.degenerate_cycles],
        "induced_4_cycles": report.cycles_checked,
    }
    rep.data["induced_k2s"] = [{"pair": [h.u, h.v], "common": list(h.witnesses)} for h in heavy]
    rep.data["classes"] = len(part)
    rep.data["walk_independent"] = wi.independent
    rep.line(f"placement: {report.summary()}")
    for h in heavy:
        rep.line(f"induced K2,{len(h.witnesses)} between {h.u} and {h.v} (common {list(h.witnesses)})")
    rep.line(f"classes: {len(part)}")
    if wi.independent:
        rep.data["witness"] = None
        rep.line(f"walk-independence: independent ({wi.cycles_checked} fundamental cycles)")
    else:
        w = wi.witness
        rep.data["witness"] = {"cycle": list(w.cycle), "class": w.class_index,
                               "vector": [_num(w.vector[0]), _num(w.vector[1])]}
        rep.line("walk-independence: violated")
        rep.line(f"witness cycle: {' '.join(map(str, w.cycle))}")
        rep.line(f"class {w.class_index} sums to ({_fmt(w.vector[0])}, {_fmt(w.vector[1])}) around it")
    ok = report.valid and wi.independent and not heavy
    return rep.emit(OK if ok else NEGATIVE)


def cmd_verdict(args) -> int:
    doc = read_document(args.file)
    rep = Report("verdict", args.json)
    try:
        v = rigidity_verdict(doc.framework)
    except (FrameworkError, WalkIndependenceError) as exc:
        rep.data.update(flexible=None, error=str(exc))
        rep.line(f"no verdict: {exc}")
        return rep.emit(NEGATIVE)
    rep.data.update(flexible=v.flexible, classes=v.class_count, dof=v.dof)
    rep.line(v.describe())
    return rep.emit(OK)


def cmd_flex(args) -> int:
    doc = read_document(args.file)
    fw = doc.framework
    part = compute_apc(fw.graph)
    rep = Report("flex", args.json)
    rep.data["classes"] = len(part)
    angle_sets = [_parse_floats(a, "angles", args.degrees) for a in (args.angles or [])]
    sweeps = tuple(_parse_sweep(s, args.degrees) for s in (args.sweep or []))
    try:
        if angle_sets:
            fp = decompose(fw, part)
            samples = [(t, evaluate_flex(fp, t)) for t in angle_sets]
        else:
            spec = RenderSpec(frames=args.frames, schedule=sweeps)
            frames = trajectory(fw, spec, part)
            ts = frame_angles(spec, len(part))
            verts = fw.graph.vertices
            samples = [(list(t), {v: (pos[k, 0], pos[k, 1]) for k, v in enumerate(verts)})
                       for t, pos in zip(ts, frames)]
    except WalkIndependenceError as exc:
        rep.data["error"] = str(exc)
        rep.line(f"no flex: {exc}")
        return rep.emit(NEGATIVE)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verts = fw.graph.vertices
    rep.data["samples"] = [{"t": [_num(x) for x in t], "placement": _placement_json(p, verts)} for t, p in samples]
    for t, p in samples:
        rep.line("t = " + ", ".join(_fmt(x) for x in t))
        for v in verts:
            rep.line(f"  {v} {_fmt(p[v][0])} {_fmt(p[v][1])}")
    if args.svg:
        spec = RenderSpec(frames=args.frames if not angle_sets else 1, schedule=sweeps,
                          show_augmented=not args.hide_augmented)
        aug = frozenset(tuple(e) for e in doc.metadata.get("augmented_edges", ()))
        paths = write_frames(render_svg(fw, part, spec, aug), args.svg)
        rep.data["svg"] = paths
        rep.line(f"wrote {len(paths)} SVG frame{'s' if len(paths) != 1 else ''} to {args.svg}")
    return rep.emit(OK)


def _coloring_from_args(graph, args) -> EdgeColoring:
    if args.coloring:
        try:
            with open(args.coloring, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DocumentError(f"{args.coloring}: {exc}") from None
        red = raw.get("red") if isinstance(raw, dict) else None
        if not isinstance(red, list):
            raise DocumentError(f"{args.coloring}: expected an object with a 'red' edge list")
        edges = [edge_key(int(e[0]), int(e[1])) for e in red]
    else:
        edges = _parse_edges(args.red or "")
    unknown = [e for e in edges if not graph.has_edge(*e)]
    if unknown:
        raise UsageError(f"red edges {unknown[:3]} are not edges of the graph")
    return EdgeColoring.from_red(graph, edges)


def cmd_nac_verify(args) -> int:
    doc = read_document(args.file)
    g = doc.framework.graph
    col = _coloring_from_args(g, args)
    rep = Report("nac verify", args.json)
    nac = is_nac(g, col)
    cart = is_cartesian_nac(g, col)
    rep.data.update(is_nac=nac.is_nac, is_cartesian=cart.is_cartesian, reason=nac.reason or cart.reason,
                    witness_cycle=list(nac.witness_cycle))
    rep.line(f"NAC-coloring: {'yes' if nac else 'no'}" + (f" ({nac.reason})" if nac.reason else ""))
    if nac.witness_cycle:
        rep.line(f"witness cycle: {' '.join(map(str, nac.witness_cycle))}")
    rep.line(f"Cartesian: {'yes' if cart else 'no'}" + (f" ({cart.reason})" if nac and cart.reason else ""))
    if cart.pair:
        rep.data["pair"] = list(cart.pair)
        rep.data["red_path"] = list(cart.red_path)
        rep.data["blue_path"] = list(cart.blue_path)
    if g.n <= MAX_ENUMERATION_VERTICES and col.is_surjective():
        changes = verify_color_changes(g, col)
        rep.data["color_changes_ok"] = changes
        rep.line(f"every induced cycle changes color 0 or at least 3 times: {'yes' if changes else 'no'}")
    if doc.action is not None:
        cn = is_cn_symmetric_nac(g, doc.action, col)
        rep.data["cn_symmetric"] = cn.is_cn_nac
        rep.line(f"C{doc.action.n}-symmetric NAC-coloring: {'yes' if cn else 'no'}"
                 + (f" ({cn.reason})" if cn.reason else ""))
    return rep.emit(OK if nac else NEGATIVE)


def cmd_nac_from_classes(args) -> int:
    doc = read_document(args.file)
    g = doc.framework.graph
    part = compute_apc(g)
    rep = Report("nac from-classes", args.json)
    rows = []
    for k, col in enumerate(colorings_from_apc(part)):
        if args.limit is not None and k >= args.limit:
            break
        red_classes = [i for i, cls in enumerate(part.classes) if col[cls[0]] == RED]
        nac = is_nac(g, col)
        cart = is_cartesian_nac(g, col)
        rows.append({"red_classes": red_classes, "is_nac": nac.is_nac, "is_cartesian": cart.is_cartesian})
    rep.data.update(classes=len(part), colorings=rows)
    rep.line(f"{len(part)} classes, {len(rows)} colorings constant on classes (class 0 red)")
    for r in rows:
        rep.line(f"red classes {r['red_classes']}: NAC {'yes' if r['is_nac'] else 'no'}, "
                 f"Cartesian {'yes' if r['is_cartesian'] else 'no'}")
    return rep.emit(OK)


def cmd_embed(args) -> int:
    doc = read_document(args.file)
    g = doc.framework.graph
    part = compute_apc(g)
    rep = Report("embed", args.json)
    try:
        quotients = quotient_graphs(g, part)
        emb = embed(g, quotients)
    except (PartitionError, ConsistencyError) as exc:
        rep.data["error"] = str(exc)
        rep.line(f"no embedding: {exc}")
        return rep.emit(NEGATIVE)
    rep.data["quotients"] = [
        {"class": q.class_index, "nodes": [list(m) for m in q.members], "edges": [list(e) for e in sorted(q.edges)]}
        for q in quotients
    ]
    rep.data["image"] = {str(v): list(emb.image[v]) for v in g.vertices}
    rep.data["factor_sizes"] = list(emb.factor_sizes)
    rep.data["full_product"] = emb.is_full_product()
    for q in quotients:
        rep.line(f"Q{q.class_index}: {q.node_count} nodes, edges "
                 + " ".join(_edge_text(e) for e in sorted(q.edges)))
    for v in g.vertices:
        rep.line(f"h({v}) = ({', '.join(map(str, emb.image[v]))})")
    rep.line(f"full product: {'yes' if emb.is_full_product() else 'no'}")
    return rep.emit(OK)


def _symmetric_setup(args):
    doc = read_document(args.file)
    center = _parse_floats(args.center, "center")
    if len(center) != 2:
        raise UsageError("--center needs two coordinates x,y")
    fw = doc.framework
    if fw.tolerance.exact:
        center = [Fraction(c).limit_denominator(10**12) for c in args.center.split(",")]
    fw = recentered(fw, center)
    if doc.action is not None and args.n is None:
        action = doc.action
    else:
        if args.n is None:
            raise UsageError("give --n or a document with a symmetry block")
        action = action_from_rotation(fw, args.n, args.rotation)
    return doc, fw, action


def cmd_symmetry_classes(args) -> int:
    rep = Report("symmetry classes", args.json)
    try:
        doc, fw, action = _symmetric_setup(args)
    except SymmetryError as exc:
        rep.data["error"] = str(exc)
        rep.line(f"not symmetric: {exc}")
        return rep.emit(NEGATIVE)
    verdict = validate_cn_symmetric(fw, action)
    rep.data.update(n=action.n, omega={str(k): action.omega[k] for k in sorted(action.omega)},
                    valid=verdict.valid, problems=list(verdict.problems))
    rep.line(f"C{action.n} action: {'valid' if verdict else 'invalid'}")
    for p in verdict.problems:
        rep.line(f"  {p}")
    if not verdict:
        return rep.emit(NEGATIVE)
    cn = compute_cn_apc(fw.graph, action)
    rep.data.update(count=len(cn), sizes=cn.sizes(), classes=_classes_json(cn))
    rep.line(f"{len(cn)} symmetric class{'es' if len(cn) != 1 else ''}"
             + (" (symmetric-rigid)" if len(cn) < 2 else ""))
    for i, cls in enumerate(cn.classes):
        rep.line(f"class {i} ({len(cls)} edges): {' '.join(_edge_text(e) for e in cls)}")
    if args.colorings:
        rows = []
        for col in cn_colorings(cn):
            red = [i for i, cls in enumerate(cn.classes) if col[cls[0]] == RED]
            rows.append({"red_classes": red, "cn_nac": is_cn_symmetric_nac(fw.graph, action, col).is_cn_nac})
        rep.data["colorings"] = rows
        for r in rows:
            rep.line(f"red classes {r['red_classes']}: symmetric NAC {'yes' if r['cn_nac'] else 'no'}")
    return rep.emit(OK)


def cmd_symmetry_flex(args) -> int:
    rep = Report("symmetry flex", args.json)
    try:
        doc, fw, action = _symmetric_setup(args)
    except SymmetryError as exc:
        rep.data["error"] = str(exc)
        rep.line(f"not symmetric: {exc}")
        return rep.emit(NEGATIVE)
    verdict = validate_cn_symmetric(fw, action)
    if not verdict:
        rep.data.update(valid=False, problems=list(verdict.problems))
        rep.line("C{} action invalid: {}".format(action.n, "; ".join(verdict.problems)))
        return rep.emit(NEGATIVE)
    try:
        fp, cn = cn_flex(fw, action)
        t = _parse_floats(args.angles, "angles", args.degrees)
        placement = evaluate_cn_flex(fp, action, cn, t)
    except (RigidError, WalkIndependenceError) as exc:
        rep.data["error"] = str(exc)
        rep.line(f"no symmetric flex: {exc}")
        return rep.emit(NEGATIVE)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = equivariance_residual(placement, action)
    verts = fw.graph.vertices
    rep.data.update(classes=len(cn), t=[_num(x) for x in t], placement=_placement_json(placement, verts),
                    equivariance_residual=res)
    rep.line(f"{len(cn)} symmetric classes; t = " + ", ".join(_fmt(x) for x in t))
    for v in verts:
        rep.line(f"  {v} {_fmt(placement[v][0])} {_fmt(placement[v][1])}")
    rep.line(f"equivariance residual {res:.3g}")
    return rep.emit(OK)


def cmd_brace_suggest(args) -> int:
    doc = read_document(args.file)
    fw = doc.framework
    part = compute_apc(fw.graph)
    rep = Report("brace suggest", args.json)
    rep.data["classes"] = len(part)
    try:
        sug = suggest_braces(fw, part)
    except RigidError:
        rep.data.update(braces=[], feasible=True)
        rep.line("already rigid: a single class, no braces needed")
        return rep.emit(OK)
    rep.data.update(braces=[list(b) for b in sug.braces], feasible=sug.feasible,
                    groups=[list(gr) for gr in sug.groups])
    if not sug.feasible:
        rep.line("no brace set merges all classes; class groups that cannot meet:")
        for gr in sug.groups:
            rep.line(f"  {list(gr)}")
        return rep.emit(NEGATIVE)
    rep.line(f"{len(sug.braces)} brace{'s' if len(sug.braces) != 1 else ''}: "
             + " ".join(_edge_text(b) for b in sug.braces))
    return rep.emit(OK)


def cmd_tiling_gen(args) -> int:
    try:
        spec = TilingSpec(args.name, args.extent, args.augment, args.trim)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            patch = generate_patch(spec)
    except TilingError as exc:
        raise UsageError(str(exc)) from None
    meta = {
        "tiling": spec.name, "extent": spec.extent, "augmented": spec.augment_hexagons, "trim": spec.trim,
        "augmented_edges": [list(e) for e in sorted(patch.augmented_edges)],
        "hexagon_centers": {str(c): list(r) for c, r in sorted(patch.centers.items())},
    }
    text = serialize_document(FrameworkDocument(patch.framework, None, meta))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if args.json:
            sys.stdout.write(json.dumps({"command": "tiling gen", "output": args.output,
                                         "vertices": patch.graph.n, "edges": patch.graph.m,
                                         "exit_code": OK}, indent=1) + "\n")
        else:
            sys.stdout.write(f"wrote {spec.name} patch ({patch.graph.n} vertices, {patch.graph.m} edges) "
                             f"to {args.output}\n")
    else:
        sys.stdout.write(text)
    return OK


def cmd_tiling_list(args) -> int:
    names = sorted(TILINGS)
    if args.json:
        sys.stdout.write(json.dumps({"command": "tiling list", "tilings": names, "exit_code": OK}, indent=1) + "\n")
    else:
        sys.stdout.write("\n".join(names) + "\n")
    return OK


# ---- parser ----

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    doc_arg = argparse.ArgumentParser(add_help=False)
    doc_arg.add_argument("file", help="framework document (JSON), or - for standard input")

    p = argparse.ArgumentParser(prog="parflex", description="Flexibility of parallelogram frameworks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classes", parents=[common, doc_arg], help="angle-preserving classes")
    s.add_argument("--ribbons", action="store_true", help="ribbons (4-cycle relation only) instead")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("check", parents=[common, doc_arg],
                       help="parallelogram placement and walk-independence")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verdict", parents=[common, doc_arg], help="flexible or rigid, with degrees of freedom")
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("flex", parents=[common, doc_arg], help="flex samples or SVG frames")
    s.add_argument("--angles", action="append", metavar="T0,T1,...",
                   help="one angle per class (class 0 must be 0); repeat for several samples")
    s.add_argument("--sweep", action="append", metavar="CLASS:START:STOP[:PHASE]",
                   help="turn a class between two angles; repeat for several classes or phases")
    s.add_argument("--frames", type=int, default=10, help="number of frames for --sweep (default 10)")
    s.add_argument("--degrees", action="store_true", help="angles are in degrees")
    s.add_argument("--svg", metavar="DIR", help="also write one SVG per frame into DIR")
    s.add_argument("--hide-augmented", action="store_true", help="leave out hexagon augmentation edges")
    s.set_defaults(func=cmd_flex)

    nac = sub.add_parser("nac", help="NAC-colorings").add_subparsers(dest="nac_command", required=True)
    s = nac.add_parser("verify", parents=[common, doc_arg], help="check one coloring")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--red", metavar="U-V,...", help="red edges; every other edge is blue")
    group.add_argument("--coloring", metavar="FILE", help='JSON file {"red": [[u, v], ...]}')
    s.set_defaults(func=cmd_nac_verify)
    s = nac.add_parser("from-classes", parents=[common, doc_arg], help="colorings constant on classes")
    s.add_argument("--limit", type=int, help="stop after this many colorings")
    s.set_defaults(func=cmd_nac_from_classes)

    s = sub.add_parser("embed", parents=[common, doc_arg], help="quotient graphs and product embedding")
    s.set_defaults(func=cmd_embed)

    sym = sub.add_parser("symmetry", help="cyclic symmetry").add_subparsers(dest="sym_command", required=True)
    sym_common = argparse.ArgumentParser(add_help=False)
    sym_common.add_argument("--center", required=True, metavar="X,Y", help="rotation center")
    sym_common.add_argument("--n", type=int, help="rotation order (default: the document's symmetry block)")
    sym_common.add_argument("--rotation", choices=("cw", "ccw"), default="cw", help="rotation sense")
    s = sym.add_parser("classes", parents=[common, doc_arg, sym_common], help="symmetric classes")
    s.add_argument("--colorings", action="store_true", help="also test class-constant colorings")
    s.set_defaults(func=cmd_symmetry_classes)
    s = sym.add_parser("flex", parents=[common, doc_arg, sym_common], help="equivariant flex")
    s.add_argument("--angles", required=True, metavar="T0,T1,...", help="one angle per symmetric class")
    s.add_argument("--degrees", action="store_true", help="angles are in degrees")
    s.set_defaults(func=cmd_symmetry_flex)

    br = sub.add_parser("brace", help="rigidifying braces").add_subparsers(dest="brace_command", required=True)
    s = br.add_parser("suggest", parents=[common, doc_arg], help="fewest braces making the framework rigid")
    s.set_defaults(func=cmd_brace_suggest)

    tl = sub.add_parser("tiling", help="tessellation patches").add_subparsers(dest="tiling_command", required=True)
    s = tl.add_parser("gen", parents=[common], help="write a patch as a framework document")
    s.add_argument("name", help="tiling name, e.g. 3636 or 3^6")
    s.add_argument("--extent", type=int, default=2, help="cells in each direction from the center (default 2)")
    s.add_argument("--augment", action="store_true", help="add hexagon parallelograms")
    s.add_argument("--trim", choices=TRIM_MODES, help="boundary handling (default depends on the tiling)")
    s.add_argument("-o", "--output", help="write the document here instead of standard output")
    s.set_defaults(func=cmd_tiling_gen)
    s = tl.add_parser("list", parents=[common], help="supported tiling names")
    s.set_defaults(func=cmd_tiling_list)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParflexError) as exc:
        sys.stderr.write(f"parflex: error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
