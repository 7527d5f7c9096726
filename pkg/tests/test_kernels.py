import importlib

import pytest
from hypothesis import given

from parflex import _accel, _kernels_py
from parflex.apc import compute_apc, compute_ribbons, detect_induced_k2s
from parflex.core import Graph
from parflex.tilings import square_patch
from strategies import connected_graphs


def test_backend_selected_at_import():
    assert _accel.BACKEND in _accel.KERNELS
    assert "python" in _accel.KERNELS
    compiled = importlib.util.find_spec("parflex._kernels") is not None
    assert (_accel.BACKEND == "compiled") == compiled


def test_unknown_backend():
    with pytest.raises(ValueError, match="unavailable"):
        compute_apc(Graph([(0, 1)]), backend="fortran")


@given(connected_graphs())
def test_every_backend_gives_the_same_outputs(edges):
    g = Graph(edges)
    ref_apc = compute_apc(g, backend="python")
    ref_rib = compute_ribbons(g, backend="python")
    ref_k2s = detect_induced_k2s(g, backend="python")
    for name in _accel.KERNELS:
        assert compute_apc(g, backend=name) == ref_apc
        assert compute_ribbons(g, backend=name) == ref_rib
        assert detect_induced_k2s(g, backend=name) == ref_k2s


def test_raw_kernel_contract():
    g = square_patch(3, 3).graph
    roots, count, heavy = _kernels_py.apc_kernel(*g.csr(), g.m)
    assert len(roots) == g.m and count == 4 and heavy == []
    assert len({roots[i] for i in range(g.m)}) == 4
