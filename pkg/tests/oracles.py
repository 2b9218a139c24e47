"""Independent slow oracles used only by the test suite."""

from __future__ import annotations

import random
from typing import Optional

from ccavkit.core import CCAVInstance, VoteMultiset
from ccavkit.solvers.flow import FlowNetwork


def exhaustive_min_flow_cost(net: FlowNetwork, target: int) -> Optional[int]:
    """Cheapest integral flow of value ``target`` by trying every arc assignment.

    Arcs are ordered so that each node's arcs are finished as early as
    possible; a node is checked for conservation once its last arc is set.
    """
    order = {v: i for i, v in enumerate(net.nodes)}
    arcs = sorted(range(len(net.arcs)),
                  key=lambda i: max(order[net.arcs[i].tail], order[net.arcs[i].head]))
    last = {}
    for pos, i in enumerate(arcs):
        a = net.arcs[i]
        last[a.tail] = pos
        last[a.head] = pos
    closing = [[] for _ in arcs]
    for v, pos in last.items():
        closing[pos].append(v)
    untouched = [v for v in net.nodes if v not in last]

    def required(v):
        if v == net.source:
            return -target
        if v == net.sink:
            return target
        return 0

    if any(required(v) != 0 for v in untouched):
        return None
    balance = {v: 0 for v in net.nodes}
    best = [None]

    def rec(pos, cost):
        if best[0] is not None and cost >= best[0]:
            return
        if pos == len(arcs):
            best[0] = cost
            return
        a = net.arcs[arcs[pos]]
        for f in range(a.capacity + 1):
            balance[a.tail] -= f
            balance[a.head] += f
            if all(balance[v] == required(v) for v in closing[pos]):
                rec(pos + 1, cost + f * a.cost)
            balance[a.tail] += f
            balance[a.head] -= f

    rec(0, 0)
    return best[0]


def random_network(rng: random.Random, max_nodes: int = 8, max_arcs: int = 11,
                   max_cap: int = 4, max_cost: int = 5) -> FlowNetwork:
    n = rng.randint(2, max_nodes)
    nodes = list(range(n))
    arcs = []
    for _ in range(rng.randint(1, max_arcs)):
        u, v = rng.sample(nodes, 2)
        if v == 0 or u == n - 1:
            u, v = v, u
        arcs.append((u, v, rng.randint(0, max_cap), rng.randint(0, max_cost)))
    return FlowNetwork(nodes, arcs, 0, n - 1)


def random_instance(rng: random.Random, m: int, max_r: int = 8, max_u: int = 8,
                    max_k: int = 5) -> CCAVInstance:
    cands = [f"c{i}" for i in range(m)]

    def votes(n):
        out = []
        for _ in range(n):
            v = cands[:]
            rng.shuffle(v)
            out.append(tuple(v))
        return VoteMultiset(out)

    return CCAVInstance(cands, votes(rng.randint(0, max_r)), votes(rng.randint(0, max_u)),
                        rng.choice(cands), rng.randint(0, max_k))
