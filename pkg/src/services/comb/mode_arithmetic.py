# src/services/comb/mode_arithmetic.py
import logging

import networkx as nx

from core.entities.comb import (
    EDGE_WEIGHT,
    CombSpec,
    ModeLabel,
    Polarization,
    PumpConfig,
    WireEdge,
    WireGraph,
)

logger = logging.getLogger(__name__)

Z = Polarization.Z
Y = Polarization.Y


def _ceil_half(p: int) -> int:
    return -(-p // 2)


def _order_key(n: int) -> tuple[int, int]:
    return (abs(n), n)


def epr_pairs(pump_index: int, comb: CombSpec) -> list[tuple[int, int]]:
    """
    List the two-mode squeezed pairs (k, p - k) of one pump inside the comb.

    Args:
        pump_index: Pump index p
        comb: Simulated comb slice

    Returns:
        Pairs with k >= ceil(p / 2); empty when the comb is too narrow
    """
    start = max(_ceil_half(pump_index), pump_index - comb.n_max, comb.n_min)
    stop = min(comb.n_max, pump_index - comb.n_min)
    pairs = []
    for k in range(start, stop + 1):
        if 2 * k == pump_index:
            logger.warning(
                "Skipping degenerate self-paired mode",
                extra={"pump_index": pump_index, "mode": k},
            )
            continue
        pairs.append((k, pump_index - k))
    return pairs


def frequency_graph(pumps: PumpConfig, comb: CombSpec) -> nx.Graph:
    """Frequency indices joined by their z-pump and y-pump partners."""
    graph = nx.Graph()
    graph.add_nodes_from(comb.indices)
    for pump in (Z, Y):
        for a, b in epr_pairs(pumps.index(pump), comb):
            graph.add_edge(a, b, pump=pump)
    return graph


def extract_wires(pumps: PumpConfig, comb: CombSpec) -> list[list[int]]:
    """
    Split the comb into frequency chains, one per connected component.

    Each chain starts at the endpoint with the smallest (|n|, n) and chains are
    sorted by their smallest (|n|, n) member.

    Args:
        pumps: Pump configuration
        comb: Simulated comb slice

    Returns:
        Ordered frequency sequences
    """
    graph = frequency_graph(pumps, comb)
    chains = []
    for component in nx.connected_components(graph):
        endpoints = [n for n in component if graph.degree(n) <= 1]
        start = min(endpoints or component, key=_order_key)
        chains.append(list(nx.dfs_preorder_nodes(graph, start)))
    chains.sort(key=lambda chain: min(_order_key(n) for n in chain))
    logger.debug(
        "Extracted wires",
        extra={"wires": len(chains), "m": pumps.m, "frequencies": comb.frequency_count},
    )
    return chains


def wire_index(pumps: PumpConfig, comb: CombSpec) -> dict[int, int]:
    """Map each frequency index to the position of its wire."""
    return {
        n: i for i, chain in enumerate(extract_wires(pumps, comb)) for n in chain
    }


def _pair_edges(a: int, b: int, pump: Polarization) -> list[WireEdge]:
    edges = []
    for pol_a in (Z, Y):
        for pol_b in (Z, Y):
            sign = -1 if pump is Y and pol_a is not pol_b else 1
            edges.append(
                WireEdge(ModeLabel(a, pol_a), ModeLabel(b, pol_b), sign * EDGE_WEIGHT),
            )
    return edges


def build_wire_graph(sequence: list[int], pumps: PumpConfig) -> WireGraph:
    """Dual-rail cluster graph over one frequency chain."""
    nodes = tuple(ModeLabel(n, pol) for n in sequence for pol in (Z, Y))
    edges: list[WireEdge] = []
    for a, b in zip(sequence, sequence[1:], strict=False):
        pump = pumps.pump_for_pair(a, b)
        if pump is None:
            continue
        edges.extend(_pair_edges(a, b, pump))
    return WireGraph(sequence=tuple(sequence), nodes=nodes, edges=tuple(edges))


def wire_graph(pumps: PumpConfig, comb: CombSpec) -> list[WireGraph]:
    """
    Build the dual-rail cluster graph of every wire.

    z-pump pairs are joined by four +1/2 edges; y-pump pairs by +1/2 edges
    between equal rails and -1/2 edges between opposite rails.

    Args:
        pumps: Pump configuration
        comb: Simulated comb slice

    Returns:
        One WireGraph per extracted wire
    """
    return [build_wire_graph(chain, pumps) for chain in extract_wires(pumps, comb)]


def to_networkx(graph: WireGraph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(graph.nodes)
    for edge in graph.edges:
        result.add_edge(edge.a, edge.b, weight=edge.weight)
    return result


def wires_payload(graphs: list[WireGraph]) -> dict[str, object]:
    return {"wires": [graph.to_payload() for graph in graphs]}
