"""JSON framework documents.

A document looks like::

    {"format": "parflex-framework", "version": 1, "mode": "float",
     "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, ...],
     "edges": [[0, 1], ...],
     "symmetry": {"n": 4, "omega": {"0": 1, ...}, "rotation": "cw"},
     "metadata": {...}}

Coordinates are JSON numbers or strings holding a rational ``"p/q"``.  In
exact mode they are kept as fractions and written back as strings, so a
document survives ``serialize(parse(text))`` unchanged.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import Framework, Graph, ToleranceConfig
from .errors import DocumentError, ParflexError, SymmetryError
from .symmetry import ORIENTATIONS, CyclicAction

FORMAT = "parflex-framework"
VERSION = 1


@dataclass
class FrameworkDocument:
    framework: Framework
    action: CyclicAction | None = None
    metadata: dict = field(default_factory=dict)


def _number(value: Any, where: str):
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected a number, got a boolean")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: {value!r} is not a decimal or a rational 'p/q'") from None
    raise DocumentError(f"{where}: expected a number, got {type(value).__name__}")


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, str) and value.lstrip("-").isdigit():
            return int(value)
        raise DocumentError(f"{where}: expected an integer id, got {value!r}")
    return value


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise DocumentError(f"{where}: missing field '{key}'")
    return obj[key]


def parse_document(text: str) -> FrameworkDocument:
    """Parse and validate a document; errors name the offending field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document_from_dict(raw)


def document_from_dict(raw: Any) -> FrameworkDocument:
    if not isinstance(raw, dict):
        raise DocumentError("document: expected a JSON object at the top level")
    fmt = raw.get("format", FORMAT)
    if fmt != FORMAT:
        raise DocumentError(f"format: expected {FORMAT!r}, got {fmt!r}")
    version = raw.get("version", VERSION)
    if version != VERSION:
        raise DocumentError(f"version: unsupported version {version!r}")
    mode = raw.get("mode", "float")
    if mode not in ("float", "exact"):
        raise DocumentError(f"mode: expected 'float' or 'exact', got {mode!r}")
    eps = raw.get("eps")
    try:
        if eps is None:
            tol = ToleranceConfig(eps=0, mode="exact") if mode == "exact" else ToleranceConfig()
        else:
            tol = ToleranceConfig(eps=_number(eps, "eps"), mode=mode)
    except ValueError as exc:
        raise DocumentError(f"mode/eps: {exc}") from None

    vertices = _require(raw, "vertices", "document")
    if not isinstance(vertices, list):
        raise DocumentError("vertices: expected a list")
    coords = {}
    for k, item in enumerate(vertices):
        where = f"vertices[{k}]"
        if not isinstance(item, dict):
            raise DocumentError(f"{where}: expected an object with id, x, y")
        vid = _int(_require(item, "id", where), f"{where}.id")
        if vid in coords:
            raise DocumentError(f"{where}.id: duplicate vertex id {vid}")
        coords[vid] = (_number(_require(item, "x", where), f"{where}.x"),
                       _number(_require(item, "y", where), f"{where}.y"))

    edges_raw = _require(raw, "edges", "document")
    if not isinstance(edges_raw, list):
        raise DocumentError("edges: expected a list of [u, v] pairs")
    edges = []
    for k, e in enumerate(edges_raw):
        if not isinstance(e, list) or len(e) != 2:
            raise DocumentError(f"edges[{k}]: expected a pair [u, v]")
        u, v = _int(e[0], f"edges[{k}][0]"), _int(e[1], f"edges[{k}][1]")
        for end, w in (("0", u), ("1", v)):
            if w not in coords:
                raise DocumentError(f"edges[{k}][{end}]: unknown vertex {w}")
        edges.append((u, v))

    try:
        graph = Graph(edges, vertices=coords)
        fw = Framework(graph, coords, tol)
    except ParflexError as exc:
        raise DocumentError(f"edges/vertices: {exc}") from None

    action = None
    if raw.get("symmetry") is not None:
        action = _parse_symmetry(raw["symmetry"], graph)
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DocumentError("metadata: expected an object")
    return FrameworkDocument(fw, action, metadata)


def _parse_symmetry(sym: Any, graph: Graph) -> CyclicAction:
    if not isinstance(sym, dict):
        raise DocumentError("symmetry: expected an object with n and omega")
    n = _int(_require(sym, "n", "symmetry"), "symmetry.n")
    omega_raw = _require(sym, "omega", "symmetry")
    if not isinstance(omega_raw, dict):
        raise DocumentError("symmetry.omega: expected an object mapping ids to ids")
    omega = {_int(k, f"symmetry.omega key {k!r}"): _int(v, f"symmetry.omega[{k}]") for k, v in omega_raw.items()}
    if set(omega) != set(graph.vertices):
        raise DocumentError("symmetry.omega: must map every vertex id")
    if set(omega.values()) != set(omega):
        raise DocumentError("symmetry.omega: not a permutation (two vertices share an image)")
    rotation = sym.get("rotation", "cw")
    if rotation not in ORIENTATIONS:
        raise DocumentError(f"symmetry.rotation: expected 'cw' or 'ccw', got {rotation!r}")
    try:
        return CyclicAction(n, omega, rotation)
    except SymmetryError as exc:
        raise DocumentError(f"symmetry: {exc}") from None


def _write_number(x, exact: bool):
    if exact:
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def document_to_dict(doc: FrameworkDocument) -> dict:
    fw = doc.framework
    exact = fw.tolerance.exact
    out: dict = {"format": FORMAT, "version": VERSION, "mode": fw.tolerance.mode}
    if not (exact and fw.eps == 0) and not (not exact and fw.eps == 1e-9):
        out["eps"] = _write_number(fw.eps, exact)
    out["vertices"] = [
        {"id": v, "x": _write_number(p[0], exact), "y": _write_number(p[1], exact)}
        for v, p in ((v, fw.placement[v]) for v in fw.graph.vertices)
    ]
    out["edges"] = [[u, v] for u, v in fw.graph.edges]
    if doc.action is not None:
        out["symmetry"] = {
            "n": doc.action.n,
            "omega": {str(k): doc.action.omega[k] for k in sorted(doc.action.omega)},
            "rotation": doc.action.orientation,
        }
    if doc.metadata:
        out["metadata"] = doc.metadata
    return out


def serialize_document(doc: FrameworkDocument | Framework, indent: int | None = 1) -> str:
    if isinstance(doc, Framework):
        doc = FrameworkDocument(doc)
    return json.dumps(document_to_dict(doc), indent=indent, sort_keys=False) + "\n"


def read_document(path: str) -> FrameworkDocument:
    """Read from a file path, or from standard input when ``path`` is ``-``."""
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError(f"{path}: {exc.strerror}") from None
    try:
        return parse_document(text)
    except DocumentError as exc:
        raise DocumentError(f"{path if path != '-' else '<stdin>'}: {exc}") from None


def write_document(doc: FrameworkDocument | Framework, path: str) -> None:
    text = serialize_document(doc)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
