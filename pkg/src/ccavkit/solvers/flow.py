"""Integral min-cost flow by successive shortest augmenting paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple


class NetworkError(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    tail: Hashable
    head: Hashable
    capacity: int
    cost: int


@dataclass(frozen=True)
class FlowNetwork:
    nodes: Tuple[Hashable, ...]
    arcs: Tuple[Arc, ...]
    source: Hashable
    sink: Hashable

    def __init__(self, nodes: Sequence[Hashable], arcs, source, sink):
        nodes = tuple(nodes)
        arcs = tuple(a if isinstance(a, Arc) else Arc(*a) for a in arcs)
        known = set(nodes)
        if len(known) != len(nodes):
            raise NetworkError("duplicate node")
        if source not in known or sink not in known:
            raise NetworkError("source and sink must be nodes")
        if source == sink:
            raise NetworkError("source equals sink")
        for a in arcs:
            if a.tail not in known or a.head not in known:
                raise NetworkError(f"arc {a} references an unknown node")
            if a.tail == a.head:
                raise NetworkError(f"self-loop at {a.tail!r}")
            for val in (a.capacity, a.cost):
                if isinstance(val, bool) or not isinstance(val, int) or val < 0:
                    raise NetworkError(f"arc {a} needs non-negative integer capacity and cost")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "sink", sink)


def min_cost_flow(net: FlowNetwork, target_value: int) -> Optional[Tuple[int, List[int]]]:
    """Cheapest integral flow of exactly ``target_value`` from source to sink.

    Returns ``(cost, per-arc flows)`` or ``None`` when the value cannot be
    reached.  Each augmentation follows a cheapest residual path found with
    Bellman-Ford, so optimality holds after every step.
    """
    if target_value < 0:
        raise NetworkError("target value must be non-negative")
    idx = {v: i for i, v in enumerate(net.nodes)}
    n = len(net.nodes)
    # residual edges: [head, residual capacity, cost, reverse edge index]
    graph: List[List[list]] = [[] for _ in range(n)]
    handles = []
    for a in net.arcs:
        u, v = idx[a.tail], idx[a.head]
        graph[u].append([v, a.capacity, a.cost, len(graph[v])])
        graph[v].append([u, 0, -a.cost, len(graph[u]) - 1])
        handles.append((u, len(graph[u]) - 1))
    s, t = idx[net.source], idx[net.sink]
    flow = cost = 0
    inf = float("inf")
    while flow < target_value:
        dist = [inf] * n
        prev = [None] * n
        dist[s] = 0
        for _ in range(n - 1):
            changed = False
            for u in range(n):
                du = dist[u]
                if du == inf:
                    continue
                for ei, (v, cap, c, _) in enumerate(graph[u]):
                    if cap > 0 and du + c < dist[v]:
                        dist[v] = du + c
                        prev[v] = (u, ei)
                        changed = True
            if not changed:
                break
        if dist[t] == inf:
            return None
        push = target_value - flow
        v = t
        while v != s:
            u, ei = prev[v]
            push = min(push, graph[u][ei][1])
            v = u
        v = t
        while v != s:
            u, ei = prev[v]
            edge = graph[u][ei]
            edge[1] -= push
            graph[v][edge[3]][1] += push
            v = u
        flow += push
        cost += push * dist[t]
    flows = [a.capacity - graph[u][ei][1] for a, (u, ei) in zip(net.arcs, handles)]
    return cost, flows
