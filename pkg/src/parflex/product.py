"""Quotient graphs per class and the embedding into their Cartesian product."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .apc import APCPartition
from .core import Graph
from .errors import ConsistencyError, PartitionError


@dataclass(frozen=True)
class QuotientGraph:
    """Components of the graph minus one class, joined by that class's edges.

    Nodes are numbered ``0..k-1`` in order of their smallest vertex.
    """

    class_index: int
    members: tuple[tuple[int, ...], ...]
    edges: frozenset
    component_of: dict

    @property
    def node_count(self) -> int:
        return len(self.members)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges


def quotient_graphs(graph: Graph, partition: APCPartition) -> list[QuotientGraph]:
    partition.check_graph(graph)
    out = []
    for i, cls in enumerate(partition.classes):
        comps = graph.components(skip=set(cls))
        comp_of = {v: k for k, comp in enumerate(comps) for v in comp}
        qedges = set()
        for u, v in cls:
            a, b = comp_of[u], comp_of[v]
            if a == b:
                raise PartitionError(
                    f"class {i} is not an edge cut: edge {(u, v)} stays inside one component; "
                    "the framework is probably not walk-independent"
                )
            qedges.add((min(a, b), max(a, b)))
        out.append(QuotientGraph(i, tuple(tuple(c) for c in comps), frozenset(qedges), comp_of))
    return out


@dataclass(frozen=True)
class ProductEmbedding:
    image: dict  # vertex -> tuple of component ids, one per class
    quotients: tuple[QuotientGraph, ...]
    edge_count: int

    @property
    def factor_sizes(self) -> tuple[int, ...]:
        return tuple(q.node_count for q in self.quotients)

    def is_full_product(self) -> bool:
        """True when the graph is the whole product Q_1 x ... x Q_l (every
        product vertex and every product edge is hit)."""
        n = prod(self.factor_sizes)
        product_edges = sum(len(q.edges) * (n // q.node_count) for q in self.quotients)
        return len(self.image) == n and self.edge_count == product_edges


def embed(graph: Graph, quotients: list[QuotientGraph]) -> ProductEmbedding:
    """Map each vertex to its tuple of quotient components and verify the map
    is an injective homomorphism onto a non-trivial subgraph of the product."""
    image = {v: tuple(q.component_of[v] for q in quotients) for v in graph.vertices}
    seen: dict = {}
    for v, h in image.items():
        if h in seen:
            raise ConsistencyError(f"vertices {seen[h]} and {v} have the same image {h}")
        seen[h] = v
    for u, v in graph.edges:
        diff = [i for i, (a, b) in enumerate(zip(image[u], image[v])) if a != b]
        if len(diff) != 1:
            raise ConsistencyError(
                f"edge {(u, v)} changes {len(diff)} coordinates, expected exactly one"
            )
        i = diff[0]
        if not quotients[i].has_edge(image[u][i], image[v][i]):
            raise ConsistencyError(f"edge {(u, v)} does not map to an edge of quotient {i}")
    for i in range(len(quotients)):
        if len({h[i] for h in image.values()}) < 2:
            raise ConsistencyError(f"projection onto quotient {i} is constant")
    return ProductEmbedding(image, tuple(quotients), graph.m)
