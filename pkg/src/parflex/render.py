"""SVG snapshots and flex animations.

Every frame of one render shares a single scale and viewport so that frames
can be compared or stacked into an animation.  The y axis points up.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .apc import APCPartition, compute_apc
from .core import Framework, edge_key, enumerate_cycles
from .flex import decompose

TWO_PI = 2 * math.pi
# colorblind-safe qualitative palette
DEFAULT_PALETTE = ("#0072b2", "#d55e00", "#009e73", "#cc79a7", "#e69f00", "#56b4e9", "#f0e442", "#000000")


@dataclass(frozen=True)
class Sweep:
    """Class ``class_index`` turns from ``start`` to ``stop`` (radians,
    clockwise) during phase ``phase``.  The shorter way round is taken."""

    class_index: int
    start: float
    stop: float
    phase: int = 0


@dataclass(frozen=True)
class RenderSpec:
    frames: int = 1
    schedule: tuple[Sweep, ...] = ()
    width: int = 480
    height: int = 480
    margin: int = 16
    palette: tuple[str, ...] = DEFAULT_PALETTE
    show_augmented: bool = True
    hidden_edges: frozenset = frozenset()

    def __post_init__(self):
        if self.frames < 1:
            raise ValueError(f"frame count must be at least 1, got {self.frames}")
        if not self.palette:
            raise ValueError("palette must not be empty")
        for s in self.schedule:
            for a in (s.start, s.stop):
                if not 0 <= a < TWO_PI:
                    raise ValueError(f"sweep angle {a} of class {s.class_index} is outside [0, 2 pi)")
            if s.class_index == 0:
                raise ValueError("class 0 is the fixed reference and cannot sweep")
            if s.phase < 0:
                raise ValueError("sweep phases are numbered from 0")


def _arc(start: float, stop: float) -> float:
    """Signed shortest turn from ``start`` to ``stop``."""
    return (stop - start + math.pi) % TWO_PI - math.pi


def frame_angles(spec: RenderSpec, class_count: int) -> list[np.ndarray]:
    """Angle vector of every frame.

    Frames are spread evenly over all phases; a class sits at its start angle
    before its phase and at its stop angle after it.
    """
    for s in spec.schedule:
        if s.class_index >= class_count:
            raise ValueError(f"sweep names class {s.class_index} but there are only {class_count}")
    phases = max((s.phase for s in spec.schedule), default=0) + 1
    out = []
    for k in range(spec.frames):
        u = (k / (spec.frames - 1) if spec.frames > 1 else 0.0) * phases
        current = min(int(u), phases - 1)
        local = u - current
        t = np.zeros(class_count)
        for s in spec.schedule:
            if s.phase < current:
                frac = 1.0
            elif s.phase > current:
                frac = 0.0
            else:
                frac = local
            t[s.class_index] = s.start + frac * _arc(s.start, s.stop)
        out.append(t)
    return out


def trajectory(fw: Framework, spec: RenderSpec, partition: APCPartition | None = None) -> list[np.ndarray]:
    """Vertex positions (rows in vertex order) for every frame."""
    partition = compute_apc(fw.graph) if partition is None else partition
    if not spec.schedule:
        pts = np.array([[float(c) for c in fw.placement[v]] for v in fw.graph.vertices])
        return [pts.copy() for _ in range(spec.frames)]
    fp = decompose(fw, partition)
    # keep the base vertex where it is instead of at the origin
    anchor = np.array([float(c) for c in fw.placement[fp.base]])
    return [fp.positions(t) + anchor for t in frame_angles(spec, len(partition))]


def degeneracies(fw: Framework, pos: np.ndarray, eps: float = 1e-9, cycles=None) -> list[str]:
    """Coincident vertices and flattened 4-cycles of one frame."""
    verts = fw.graph.vertices
    notes = []
    seen: dict = {}
    for k, v in enumerate(verts):
        key = (round(pos[k, 0] / eps / 10), round(pos[k, 1] / eps / 10)) if eps else tuple(pos[k])
        if key in seen:
            notes.append(f"vertices {seen[key]} and {v} coincide")
        else:
            seen[key] = v
    row = {v: k for k, v in enumerate(verts)}
    for cyc in (enumerate_cycles(fw.graph).induced4cycles if cycles is None else cycles):
        a, b, c = (pos[row[x]] for x in cyc[:3])
        ab, bc = b - a, c - b
        if abs(ab[0] * bc[1] - ab[1] * bc[0]) <= eps * max(1.0, float(np.hypot(*ab) * np.hypot(*bc))):
            notes.append(f"4-cycle {tuple(cyc)} is flat")
    return notes


def _viewport(frames: Sequence[np.ndarray], spec: RenderSpec):
    allpts = np.vstack(frames)
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    inner_w, inner_h = spec.width - 2 * spec.margin, spec.height - 2 * spec.margin
    scale = min(inner_w / span[0], inner_h / span[1])
    # center the drawing in the canvas
    off_x = spec.margin + (inner_w - span[0] * scale) / 2
    off_y = spec.margin + (inner_h - span[1] * scale) / 2
    diag = float(np.hypot(*(span * scale)))
    return lo, scale, off_x, off_y, diag


def render_svg(fw: Framework, partition: APCPartition | None = None, spec: RenderSpec | None = None,
               augmented: frozenset = frozenset()) -> list[str]:
    """One SVG document per frame, edges stroked by class color.

    ``augmented`` edges are drawn dashed, or left out when ``show_augmented`` is off.
    """
    spec = RenderSpec() if spec is None else spec
    partition = compute_apc(fw.graph) if partition is None else partition
    frames = trajectory(fw, spec, partition)
    lo, scale, off_x, off_y, diag = _viewport(frames, spec)
    stroke = 0.01 * diag
    cycles = enumerate_cycles(fw.graph).induced4cycles
    verts = fw.graph.vertices
    row = {v: k for k, v in enumerate(verts)}
    hidden = {edge_key(*e) for e in spec.hidden_edges}
    if not spec.show_augmented:
        hidden |= {edge_key(*e) for e in augmented}
    aug = {edge_key(*e) for e in augmented}

    def px(p):
        x = off_x + (p[0] - lo[0]) * scale
        y = spec.height - (off_y + (p[1] - lo[1]) * scale)
        return f"{x:.3f}", f"{y:.3f}"

    out = []
    for k, pos in enumerate(frames):
        notes = degeneracies(fw, pos, fw.eps if fw.eps else 1e-9, cycles)
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" '
            f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
            f'<title>frame {k + 1} of {len(frames)}</title>',
            f'<g stroke-width="{stroke:.3f}" stroke-linecap="round">',
        ]
        for u, v in fw.graph.edges:
            if (u, v) in hidden:
                continue
            c = partition.class_of[(u, v)]
            x1, y1 = px(pos[row[u]])
            x2, y2 = px(pos[row[v]])
            dash = f' stroke-dasharray="{2 * stroke:.3f}"' if (u, v) in aug else ""
            lines.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{spec.palette[c % len(spec.palette)]}"'
                f'{dash} data-edge="{u}-{v}" data-class="{c}"/>'
            )
        lines.append("</g>")
        lines.append('<g fill="#222222">')
        for v in verts:
            x, y = px(pos[row[v]])
            lines.append(f'<circle cx="{x}" cy="{y}" r="{1.5 * stroke:.3f}" data-vertex="{v}"/>')
        lines.append("</g>")
        if notes:
            lines.append(f'<g class="degenerate" fill="#b00000" font-size="{max(8.0, 3 * stroke):.1f}">')
            for i, note in enumerate(notes[:5]):
                lines.append(f'<text x="{spec.margin}" y="{spec.margin + (i + 1) * max(8.0, 3 * stroke):.1f}">'
                             f'degenerate: {note}</text>')
            lines.append("</g>")
        lines.append("</svg>")
        out.append("\n".join(lines) + "\n")
    return out


def write_frames(svgs: Sequence[str], directory: str, stem: str = "frame") -> list[str]:
    os.makedirs(directory, exist_ok=True)
    width = max(3, len(str(len(svgs))))
    paths = []
    for k, text in enumerate(svgs):
        path = os.path.join(directory, f"{stem}{k:0{width}d}.svg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        paths.append(path)
    return paths
