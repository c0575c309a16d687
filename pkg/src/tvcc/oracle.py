"""Brute-force catastrophe test on the state-transition graph.

The encoder is realized as a shift-register circuit in controller
canonical form: each input row i feeds a register holding the last R
values of ``w_i = u_i / den``, with ``R = max(m, deg den)``.  Nodes of the
graph are (phase, state) pairs, phase being the epoch modulo p.

An encoder is catastrophic iff some cycle reachable from the zero state
has all-zero outputs and at least one nonzero input.  Repeating such a
cycle forever feeds infinitely many ones while emitting finitely many.

Everything here is exponential in the register count, by design.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .catastrophic import Verdict
from .encoder import PeriodicEncoder, RationalPeriodicEncoder
from .gf2poly import ONE

__all__ = [
    "TooLarge",
    "MAX_STATE_BITS",
    "StateGraph",
    "Edge",
    "OracleResult",
    "realize",
    "oracle_check",
    "has_zero_output_cycle_dfs",
    "simulate",
    "replay_witness",
    "format_witness",
]

MAX_STATE_BITS = 20


class TooLarge(ValueError):
    """The state graph would exceed the register-bit guard."""


def _parity(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x) & 1


@dataclass(frozen=True)
class StateGraph:
    """Deterministic transition table of a realized encoder.

    ``next_state[phase, state, u]`` and ``output[phase, state, u]`` are
    packed integers; bit i of ``u`` is input row i and bit c of the output
    is output column c.  Register r of input row i occupies state bits
    ``i*R .. i*R + R - 1`` with bit ``i*R + j`` holding ``w_i`` from j + 1
    epochs ago.
    """

    p: int
    k: int
    n: int
    regs_per_row: int
    next_state: np.ndarray
    output: np.ndarray

    @property
    def state_bits(self) -> int:
        return self.k * self.regs_per_row

    @property
    def num_states(self) -> int:
        return 1 << self.state_bits

    @property
    def num_nodes(self) -> int:
        return self.p * self.num_states

    @property
    def num_edges(self) -> int:
        return self.next_state.size

    def node(self, phase: int, state: int) -> int:
        return phase * self.num_states + state

    def step(self, phase: int, state: int, u: int) -> tuple[int, int]:
        return int(self.next_state[phase, state, u]), int(self.output[phase, state, u])


@dataclass(frozen=True)
class Edge:
    phase: int
    state: int
    u: int
    next_state: int
    out: int


@dataclass(frozen=True)
class OracleResult:
    verdict: Verdict
    witness: tuple[Edge, ...] | None
    edges_visited: int

    @property
    def catastrophic(self) -> bool:
        return self.verdict is Verdict.CATASTROPHIC


def realize(e: PeriodicEncoder | RationalPeriodicEncoder) -> StateGraph:
    if isinstance(e, RationalPeriodicEncoder):
        base, den = e.base, e.den
    else:
        base, den = e, ONE
    if den.coeff(0) != 1:
        raise ValueError("denominator must have a unit constant term")
    p, k, n = base.p, base.k, base.n
    regs = max(base.memory, int(max(den.degree, 0)))
    bits = k * regs
    if bits > MAX_STATE_BITS:
        raise TooLarge(f"{bits} register bits exceed the oracle limit of {MAX_STATE_BITS}")

    rmask = (1 << regs) - 1
    fb_mask = den.value >> 1  # bit j <-> coefficient of D^(j+1)
    states = np.arange(1 << bits, dtype=np.int64)
    inputs = np.arange(1 << k, dtype=np.int64)
    reg = [(states >> (i * regs)) & rmask for i in range(k)]
    fb = [_parity(r & fb_mask) for r in reg]
    # full[i][s, u]: bit j is w_i from j epochs ago, bit 0 being the current one
    full = [(reg[i][:, None] << 1) | (((inputs[None, :] >> i) & 1) ^ fb[i][:, None]) for i in range(k)]
    nxt = np.zeros((1 << bits, 1 << k), dtype=np.int64)
    for i in range(k):
        nxt |= (full[i] & rmask) << (i * regs)

    out = np.zeros((p, 1 << bits, 1 << k), dtype=np.int64)
    for phase, c in enumerate(base.constituents):
        for col in range(n):
            acc = np.zeros_like(nxt)
            for i in range(k):
                tap = c.g[i, col].value
                if tap:
                    acc ^= _parity(full[i] & tap)
            out[phase] |= acc << col
    next_state = np.broadcast_to(nxt, (p,) + nxt.shape).copy()
    return StateGraph(p, k, n, regs, next_state, out)


def _reachable(g: StateGraph) -> np.ndarray:
    seen = np.zeros(g.num_nodes, dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.int64)
    ns = g.num_states
    while frontier.size:
        phase, state = np.divmod(frontier, ns)
        succ = ((phase + 1) % g.p)[:, None] * ns + g.next_state[phase, state]
        succ = np.unique(succ)
        succ = succ[~seen[succ]]
        seen[succ] = True
        frontier = succ
    return seen


def _zero_output_edges(g: StateGraph):
    """Source node, target node and input of every zero-output edge whose
    source is reachable from the zero state."""
    reach = _reachable(g)
    ns = g.num_states
    phase, state, u = np.nonzero(g.output == 0)
    src = phase * ns + state
    keep = reach[src]
    phase, state, u, src = phase[keep], state[keep], u[keep], src[keep]
    dst = ((phase + 1) % g.p) * ns + g.next_state[phase, state, u]
    return src, dst, u


def _edge(g: StateGraph, src: int, u: int) -> Edge:
    phase, state = divmod(src, g.num_states)
    nxt, out = g.step(phase, state, u)
    return Edge(phase, state, u, nxt, out)


def oracle_check(g: StateGraph) -> OracleResult:
    """Search the zero-output subgraph for a cycle carrying a nonzero input.

    Such an edge closes a cycle iff both endpoints share a strongly
    connected component (self-loops included).
    """
    src, dst, u = _zero_output_edges(g)
    if src.size == 0:
        return OracleResult(Verdict.NON_CATASTROPHIC, None, g.num_edges)
    adj = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(g.num_nodes,) * 2)
    _, label = connected_components(adj.tocsr(), directed=True, connection="strong")
    hit = np.nonzero((u != 0) & (label[src] == label[dst]))[0]
    if hit.size == 0:
        return OracleResult(Verdict.NON_CATASTROPHIC, None, g.num_edges)

    i = int(hit[0])
    s0, d0, comp = int(src[i]), int(dst[i]), label[src[i]]
    # shortest path d0 -> s0 inside the component closes the cycle
    inside = (label[src] == comp) & (label[dst] == comp)
    succ: dict[int, list[tuple[int, int]]] = {}
    for a, b, x in zip(src[inside].tolist(), dst[inside].tolist(), u[inside].tolist()):
        succ.setdefault(a, []).append((b, x))
    parent: dict[int, tuple[int, int]] = {d0: (-1, -1)}
    queue = deque([d0])
    while queue and s0 not in parent:
        a = queue.popleft()
        for b, x in succ.get(a, ()):
            if b not in parent:
                parent[b] = (a, x)
                queue.append(b)
    path = []
    node = s0
    while node != d0:
        prev, x = parent[node]
        path.append(_edge(g, prev, x))
        node = prev
    witness = (_edge(g, s0, int(u[i])),) + tuple(reversed(path))
    return OracleResult(Verdict.CATASTROPHIC, witness, g.num_edges)


def has_zero_output_cycle_dfs(g: StateGraph) -> bool:
    """Plain-Python cross-check of :func:`oracle_check`.

    For every nonzero-input zero-output edge a -> b, depth-first search
    from b for a path back to a.  Quadratic; small graphs only.
    """
    src, dst, u = _zero_output_edges(g)
    succ: dict[int, list[int]] = {}
    for a, b in zip(src.tolist(), dst.tolist()):
        succ.setdefault(a, []).append(b)
    for a, b, x in zip(src.tolist(), dst.tolist(), u.tolist()):
        if x == 0:
            continue
        stack, seen = [b], {b}
        while stack:
            node = stack.pop()
            if node == a:
                return True
            for nb in succ.get(node, ()):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return False


def simulate(g: StateGraph, u) -> np.ndarray:
    """Walk the graph from the zero state; returns the ``(epochs, n)`` output."""
    u = np.asarray(u, dtype=np.int64).reshape(-1, g.k)
    weights = 1 << np.arange(g.k)
    out = np.zeros((u.shape[0], g.n), dtype=np.uint8)
    state = 0
    for t, sym in enumerate(u):
        state, v = g.step(t % g.p, state, int(sym @ weights))
        out[t] = (v >> np.arange(g.n)) & 1
    return out


def replay_witness(g: StateGraph, witness) -> tuple[bool, int, int]:
    """Re-run a witness through the transition table.

    Returns ``(closes, input_weight, output_weight)``; ``closes`` is true
    when consecutive edges chain and the last one returns to the first
    node.
    """
    if not witness:
        return False, 0, 0
    phase, state = witness[0].phase, witness[0].state
    in_w = out_w = 0
    for e in witness:
        if (e.phase, e.state) != (phase, state):
            return False, in_w, out_w
        state, v = g.step(phase, state, e.u)
        phase = (phase + 1) % g.p
        in_w += e.u.bit_count()
        out_w += v.bit_count()
    closes = (phase, state) == (witness[0].phase, witness[0].state)
    return closes, in_w, out_w


def _bits(x: int, width: int) -> str:
    return "".join(str((x >> i) & 1) for i in range(width)) or "-"


def format_witness(g: StateGraph, witness) -> list[str]:
    """``phase state_bits input_bits -> next_state_bits / output_bits`` per edge."""
    sb = g.state_bits
    return [
        f"{e.phase} {_bits(e.state, sb)} {_bits(e.u, g.k)} -> "
        f"{_bits(e.next_state, sb)} / {_bits(e.out, g.n)}"
        for e in witness
    ]
