import math
import re

import numpy as np
import pytest

from parflex import gallery
from parflex.apc import compute_apc
from parflex.render import RenderSpec, Sweep, degeneracies, frame_angles, render_svg, trajectory, write_frames

LINE = re.compile(r'<line x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)"')


def lengths(svg):
    return [math.hypot(float(x2) - float(x1), float(y2) - float(y1)) for x1, y1, x2, y2 in LINE.findall(svg)]


def test_square_sweep_keeps_drawn_lengths():
    fw = gallery.square()
    spec = RenderSpec(frames=7, schedule=(Sweep(1, 0.0, 1.2),))
    svgs = render_svg(fw, spec=spec)
    assert len(svgs) == 7
    first = lengths(svgs[0])
    for svg in svgs[1:]:
        # 3 decimal places in the output
        assert lengths(svg) == pytest.approx(first, abs=2e-3)


def test_trajectory_preserves_edge_lengths():
    fw = gallery.flex_example()
    part = compute_apc(fw.graph)
    spec = RenderSpec(frames=9, schedule=(Sweep(1, 0.0, 2.0), Sweep(2, 0.5, 5.5, phase=1)))
    row = {v: k for k, v in enumerate(fw.graph.vertices)}
    for pos in trajectory(fw, spec, part):
        for u, v in fw.graph.edges:
            assert np.hypot(*(pos[row[u]] - pos[row[v]])) == pytest.approx(
                math.dist(fw.placement[u], fw.placement[v]), abs=1e-12)


def test_phases_and_shortest_arc():
    spec = RenderSpec(frames=5, schedule=(Sweep(1, 0.0, 1.0, 0), Sweep(2, 6.0, 0.2, 1)))
    ts = frame_angles(spec, 3)
    assert ts[0].tolist() == [0.0, 0.0, 6.0]
    assert ts[2][1] == pytest.approx(1.0) and ts[2][2] == pytest.approx(6.0)
    # 6.0 -> 0.2 goes forward through 2 pi
    assert ts[3][2] == pytest.approx(6.0 + (0.2 + 2 * math.pi - 6.0) / 2)
    assert ts[4][2] == pytest.approx(0.2 + 2 * math.pi) or ts[4][2] == pytest.approx(0.2)


def test_flex_figure_keyframes():
    # sweeping one class back to zero, then the other all the way round
    start = gallery.flex_example(0, 20)
    part = compute_apc(start.graph)
    a, b = part.of(2, 7), part.of(1, 4)
    spec = RenderSpec(frames=5, schedule=(Sweep(a, 0.0, math.radians(20), 0),
                                          Sweep(b, 0.0, 2 * math.pi - math.radians(20), 1)))
    frames = trajectory(start, spec, part)
    verts = start.graph.vertices
    for pos, (x, y) in zip(frames, [(0, 20), (0, 10), (0, 0), (10, 0), (20, 0)]):
        want = gallery.flex_example(x, y)
        ref = np.array([[float(c) for c in want.placement[v]] for v in verts])
        assert np.abs((pos - pos[0]) - (ref - ref[0])).max() < 1e-12


def test_degenerate_frames_are_annotated():
    fw = gallery.square()
    spec = RenderSpec(frames=3, schedule=(Sweep(1, 0.0, math.pi / 2),))
    svgs = render_svg(fw, spec=spec)
    flat = [s for s in svgs if 'class="degenerate"' in s]
    assert len(flat) == 1 and "flat" in flat[0]
    pos = trajectory(fw, spec)[-1]
    assert degeneracies(fw, pos)


def test_augmented_edges_dashed_or_hidden():
    fw = gallery.square()
    aug = frozenset({(0, 1)})
    shown = render_svg(fw, augmented=aug)[0]
    assert shown.count("stroke-dasharray") == 1
    hidden = render_svg(fw, spec=RenderSpec(show_augmented=False), augmented=aug)[0]
    assert hidden.count("<line") == 3


@pytest.mark.parametrize("kwargs", [dict(frames=0), dict(palette=()),
                                    dict(schedule=(Sweep(1, 0.0, 7.0),)),
                                    dict(schedule=(Sweep(0, 0.0, 1.0),))])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        RenderSpec(**kwargs)


def test_unknown_class_in_schedule():
    with pytest.raises(ValueError):
        frame_angles(RenderSpec(schedule=(Sweep(5, 0.0, 1.0),)), 2)


def test_write_frames(tmp_path):
    paths = write_frames(render_svg(gallery.square(), spec=RenderSpec(frames=3, schedule=(Sweep(1, 0, 1),))),
                         str(tmp_path / "out"))
    assert [p.rsplit("/", 1)[1] for p in paths] == ["frame000.svg", "frame001.svg", "frame002.svg"]
    assert all(open(p).read().startswith("<?xml") for p in paths)
