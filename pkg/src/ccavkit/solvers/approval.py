"""Polynomial CCAV for k-approval (k <= 3) and k-veto (k <= 2).

Only votes that approve ``p`` (k-approval) or that do not veto ``p``
(k-veto) can help, so each useful vote acts on at most two rival
candidates.  With at most two rivals per vote the selection problems are
degree-constrained subgraph problems on a multigraph:

* k-approval, fixed number ``j`` of added votes: rival ``c`` may receive at
  most ``s_p + j - s_c`` extra approvals, so we need a simple b-matching of
  size ``j``;
* 2-veto: rival ``c`` must be vetoed at least ``s_c - s_p`` times, a
  minimum b-edge cover, whose size is ``sum(b) - max b-matching``.

Max b-matchings are found with the usual vertex-copy gadget and blossom
matching from networkx.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..core import CCAVInstance, ElectionError, VoteMultiset, evaluate
from ..vectors import equivalent
from .brute import SolveResult, verified


def approval_vector(k: int, m: int) -> List[int]:
    top = min(k, m)
    return [1] * top + [0] * (m - top)


def veto_vector(k: int, m: int) -> List[int]:
    bottom = min(k, m)
    return [1] * (m - bottom) + [0] * bottom


def _check_shape(vector, expected, name):
    if vector is not None and not equivalent(vector, expected):
        raise ElectionError(f"vector {tuple(vector)} is not equivalent to {name}")


def _int_scores(inst: CCAVInstance, vector) -> Dict[str, int]:
    return {c: int(s) for c, s in evaluate(inst.registered, vector, inst.candidates).items()}


def max_b_matching(units: Sequence[Tuple[str, ...]], caps: Dict[str, int]) -> List[int]:
    """Indices of a maximum set of units whose loads respect ``caps``.

    Each unit is a tuple of one or two vertices; a selected unit adds one to
    the load of each of its vertices.
    """
    degree: Dict[str, int] = defaultdict(int)
    for load in units:
        for v in load:
            degree[v] += 1
    b = {v: max(0, min(caps.get(v, 0), d)) for v, d in degree.items()}
    g = nx.Graph()
    for i, load in enumerate(units):
        if any(b[v] == 0 for v in load):
            continue
        ends = [("u", i, side) for side in range(len(load))]
        g.add_nodes_from(ends)
        if len(ends) == 2:
            g.add_edge(ends[0], ends[1])
        for end, v in zip(ends, load):
            for copy in range(b[v]):
                g.add_edge(end, ("v", v, copy))
    matching = nx.max_weight_matching(g, maxcardinality=True)
    matched_to_vertex = set()
    for x, y in matching:
        if x[0] == "u" and y[0] == "v":
            matched_to_vertex.add(x[1:])
        elif y[0] == "u" and x[0] == "v":
            matched_to_vertex.add(y[1:])
    return [i for i, load in enumerate(units)
            if all((i, side) in matched_to_vertex for side in range(len(load)))]


def _expand_units(entries, limit):
    keys, loads = [], []
    for vote, count, load in entries:
        for _ in range(min(count, limit)):
            keys.append(vote)
            loads.append(load)
    return keys, loads


def solve_k_approval(inst: CCAVInstance, k_app: int, vector=None) -> SolveResult:
    if k_app not in (1, 2, 3):
        raise ElectionError(f"k-approval solver handles k in 1..3, got {k_app}")
    m, p = inst.m, inst.preferred
    own = approval_vector(k_app, m)
    _check_shape(vector, own, f"{k_app}-approval")
    top = min(k_app, m)
    s = _int_scores(inst, own)
    useful = [(vote, count, tuple(c for c in vote[:top] if c != p))
              for vote, count in inst.unregistered if p in vote[:top]]
    available = sum(count for _, count, _ in useful)
    method = f"{k_app}-approval"
    for j in range(min(inst.budget, available) + 1):
        final = s[p] + j
        caps = {c: final - s[c] for c in inst.candidates if c != p}
        if any(v < 0 for v in caps.values()):
            continue
        free = [(vote, load) for vote, count, load in useful if not load for _ in range(min(count, j))]
        keys, loads = _expand_units([e for e in useful if e[2]], j)
        chosen = [keys[i] for i in max_b_matching(loads, caps)]
        picks = [vote for vote, _ in free] + chosen
        if len(picks) >= j:
            return verified(inst, own, VoteMultiset(picks[:j]), method)
    return SolveResult(False, None, method)


def solve_k_veto(inst: CCAVInstance, k_veto: int, vector=None) -> SolveResult:
    if k_veto not in (1, 2):
        raise ElectionError(f"k-veto solver handles k in 1..2, got {k_veto}")
    m, p = inst.m, inst.preferred
    own = veto_vector(k_veto, m)
    _check_shape(vector, own, f"{k_veto}-veto")
    bottom = min(k_veto, m)
    method = f"{k_veto}-veto"
    s = _int_scores(inst, own)
    need = {c: max(0, s[c] - s[p]) for c in inst.candidates if c != p}
    total_need = sum(need.values())
    if total_need == 0:
        return verified(inst, own, VoteMultiset(), method)
    if total_need > bottom * inst.budget:
        return SolveResult(False, None, method)
    useful = [(vote, count, tuple(vote[m - bottom:]))
              for vote, count in inst.unregistered if p not in vote[m - bottom:]]
    incident: Dict[str, int] = defaultdict(int)
    for _, count, load in useful:
        for c in load:
            incident[c] += count
    if any(incident[c] < n for c, n in need.items()):
        return SolveResult(False, None, method)

    keys, loads = _expand_units(useful, inst.budget)
    if bottom == 1:
        picks = []
        for c, n in need.items():
            picks += [keys[i] for i, load in enumerate(loads) if load[0] == c][:n]
        return verified(inst, own, VoteMultiset(picks), method)

    matched = max_b_matching(loads, need)
    if total_need - len(matched) > inst.budget:
        return SolveResult(False, None, method)
    used = set(matched)
    covered: Dict[str, int] = defaultdict(int)
    for i in matched:
        for c in loads[i]:
            covered[c] += 1
    for c, n in need.items():
        for i, load in enumerate(loads):
            if covered[c] >= n:
                break
            if i in used or c not in load:
                continue
            used.add(i)
            for v in load:
                covered[v] += 1
    return verified(inst, own, VoteMultiset(keys[i] for i in sorted(used)), method)
