from math import prod

import pytest
from hypothesis import given

from parflex import gallery
from parflex.apc import APCPartition, compute_apc
from parflex.core import Graph
from parflex.errors import ConsistencyError, PartitionError
from parflex.product import embed, quotient_graphs
from strategies import clean_frameworks


@given(clean_frameworks())
def test_embedding_of_flexible_frameworks(fw):
    part = compute_apc(fw.graph)
    if len(part) < 2:
        return
    quotients = quotient_graphs(fw.graph, part)
    emb = embed(fw.graph, quotients)
    assert len(set(emb.image.values())) == fw.graph.n
    assert len(emb.image) <= prod(emb.factor_sizes)
    for u, v in fw.graph.edges:
        diff = [i for i in range(len(part)) if emb.image[u][i] != emb.image[v][i]]
        assert diff == [part.of(u, v)]


def test_square_is_k2_times_k2():
    sq = gallery.square()
    emb = embed(sq.graph, quotient_graphs(sq.graph, compute_apc(sq.graph)))
    assert emb.factor_sizes == (2, 2) and emb.is_full_product()


def test_grid_is_path_product():
    g = gallery.grid(3, 4).graph
    emb = embed(g, quotient_graphs(g, compute_apc(g)))
    # five ribbons, each cutting the grid in two
    assert emb.factor_sizes == (2,) * 5
    assert not emb.is_full_product()


def test_forged_partition_rejected():
    # K3 split into two classes: removing one edge leaves its ends connected
    g = Graph([(0, 1), (1, 2), (0, 2)])
    forged = APCPartition(g, [[(0, 1)], [(1, 2), (0, 2)]])
    with pytest.raises(PartitionError):
        quotient_graphs(g, forged)


def test_flex_example_quotients():
    g = gallery.flex_example().graph
    qs = quotient_graphs(g, compute_apc(g))
    assert len(qs) == 3
    assert all(q.node_count >= 2 for q in qs)


def test_collapsing_map_rejected():
    sq = gallery.square()
    qs = quotient_graphs(sq.graph, compute_apc(sq.graph))
    with pytest.raises(ConsistencyError):
        embed(sq.graph, qs[:1])
