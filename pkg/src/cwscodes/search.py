"""Classical codeword search for a fixed graph state.

For a graph ``g`` and target distance ``d`` every error of weight below ``d``
becomes either a forbidden codeword difference (``Cl_S(E) != 0``) or a
linear constraint ``c . u = 0`` on each codeword (``Cl_S(E) = 0``). Valid
codeword sets are then exactly the cliques of the confusability graph on the
constrained vertex set, which is a Cayley graph: we fix the zero codeword and
search cliques among its neighbours.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from cwscodes.graph import CwsCode, Graph, to_standard_form, translate_error
from cwscodes.pauli import PauliOperator, enumerate_errors, parity
from cwscodes.verify import check_detection

__all__ = [
    "SearchProblem",
    "SearchResult",
    "build_problem",
    "candidate_vertices",
    "family",
    "search_clique",
    "ssw_code",
    "ssw_dimension",
]

log = logging.getLogger(__name__)

MAX_EXACT_QUBITS = 20


@dataclass(frozen=True)
class SearchProblem:
    graph: Graph
    target_distance: int
    forced_constraints: frozenset[int] = frozenset()
    forbidden_differences: frozenset[int] = frozenset()

    @property
    def n(self) -> int:
        return self.graph.n

    def admissible(self, c: int) -> bool:
        return all(parity(c & u) == 0 for u in self.forced_constraints)


@dataclass
class SearchResult:
    codewords: list[int]
    exact: bool
    elapsed: float
    graph: Graph
    target_distance: int
    nodes: int = 0
    history: list[tuple[float, int]] = field(default_factory=list)

    @property
    def K(self) -> int:
        return len(self.codewords)

    def to_code(self) -> CwsCode:
        return CwsCode(self.graph, tuple(self.codewords), self.target_distance)


def build_problem(g: Graph, d: int) -> SearchProblem:
    if d < 1:
        raise ValueError("target distance must be at least 1")
    if d == 1:
        return SearchProblem(g, d)
    forbidden: set[int] = set()
    forced: set[int] = set()
    for err in enumerate_errors(g.n, min(d - 1, g.n)):
        e = translate_error(g, err)
        if e:
            forbidden.add(e)
        else:
            forced.add(err.u)
    return SearchProblem(g, d, frozenset(forced), frozenset(forbidden))


def candidate_vertices(problem: SearchProblem) -> list[int]:
    """Nonzero admissible words adjacent to 0 (i.e. not forbidden)."""
    n = problem.n
    return [
        c
        for c in range(1, 1 << n)
        if c not in problem.forbidden_differences and problem.admissible(c)
    ]


def _adjacency(vertices: list[int], forbidden: frozenset[int]) -> np.ndarray:
    arr = np.asarray(vertices, dtype=np.int64)
    diff = arr[:, None] ^ arr[None, :]
    bad = np.isin(diff, np.fromiter(forbidden, dtype=np.int64, count=len(forbidden)))
    adj = ~bad
    np.fill_diagonal(adj, False)
    return adj


def _to_bitsets(adj: np.ndarray) -> list[int]:
    weights = [1 << j for j in range(adj.shape[0])]
    return [sum(w for w, b in zip(weights, row) if b) for row in adj.tolist()]


# -- exact branch and bound ---------------------------------------------------


class _Budget(Exception):
    pass


def _greedy_color_order(cand: int, nbrs: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand`` in index order; vertices listed by colour class."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~nbrs[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_exact(nbrs: list[int], deadline: float, initial: list[int]) -> tuple[list[int], bool, int]:
    best = list(initial)
    nodes = 0

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _Budget
        order, bounds = _greedy_color_order(cand, nbrs)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            new = cand & nbrs[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    try:
        expand([], (1 << len(nbrs)) - 1)
    except _Budget:
        return best, False, nodes
    return best, True, nodes


# -- heuristic local search ---------------------------------------------------


def _local_search(
    adj: np.ndarray,
    deadline: float,
    rng: np.random.Generator,
    target: int | None,
    penalty_delay: int = 2,
) -> tuple[list[int], list[tuple[float, int]]]:
    """Dynamic local search: greedy expansion, plateau swaps, vertex penalties.

    Penalties of clique members grow after every plateau phase and decay every
    ``penalty_delay`` phases; selections prefer low-penalty vertices, which
    steers restarts away from cliques already explored.
    """
    m = adj.shape[0]
    non_adj = (~adj).astype(np.int32)
    np.fill_diagonal(non_adj, 0)
    penalty = np.zeros(m, dtype=np.int64)
    in_clique = np.zeros(m, dtype=bool)
    miss = np.zeros(m, dtype=np.int32)
    clique: list[int] = []
    best: list[int] = []
    history: list[tuple[float, int]] = []
    start = time.monotonic()

    def add(v: int) -> None:
        nonlocal miss
        in_clique[v] = True
        clique.append(v)
        miss += non_adj[v]

    def remove(v: int) -> None:
        nonlocal miss
        in_clique[v] = False
        clique.remove(v)
        miss -= non_adj[v]

    def pick(mask: np.ndarray) -> int:
        choices = np.flatnonzero(mask)
        pen = penalty[choices]
        low = choices[pen == pen.min()]
        return int(rng.choice(low))

    add(int(rng.integers(m)))
    last = clique[0]
    phases = 0
    while time.monotonic() < deadline:
        plateau_start = set(clique)
        swapped = np.zeros(m, dtype=bool)
        while True:
            free = (miss == 0) & ~in_clique
            if free.any():
                last = pick(free)
                add(last)
                if len(clique) > len(best):
                    best = list(clique)
                    history.append((time.monotonic() - start, len(best)))
                    if target is not None and len(best) >= target:
                        return best, history
                continue
            swaps = (miss == 1) & ~in_clique & ~swapped
            if not swaps.any() or not (plateau_start & set(clique)):
                break
            v = pick(swaps)
            members = np.fromiter(clique, dtype=np.int64, count=len(clique))
            out = int(members[non_adj[v, members] == 1][0])
            remove(out)
            swapped[out] = True
            add(v)
            last = v
        penalty[in_clique] += 1
        phases += 1
        if phases % penalty_delay == 0:
            penalty = np.maximum(penalty - 1, 0)
        if penalty_delay > 1:
            for v in list(clique):
                if v != last:
                    remove(v)
        else:
            v = int(rng.integers(m))
            for u in list(clique):
                if non_adj[v, u]:
                    remove(u)
            if not in_clique[v]:
                add(v)
    return best, history


def search_clique(
    problem: SearchProblem,
    mode: Literal["exact", "heuristic"] = "exact",
    budget: float = 60.0,
    seed: int = 0,
    target: int | None = None,
) -> SearchResult:
    """Find a large codeword set for ``problem``.

    ``exact`` runs branch and bound with greedy-colouring bounds and returns
    ``exact=True`` only when optimality was proved within ``budget`` seconds.
    ``heuristic`` runs seeded tabu local search until ``budget`` expires or
    ``target`` codewords are found. The result always contains the zero word
    and is verified with :func:`check_detection` before being returned.
    """
    t0 = time.monotonic()
    deadline = t0 + budget
    g, n = problem.graph, problem.n
    if mode == "exact" and n > MAX_EXACT_QUBITS:
        raise ValueError(f"exact search refuses n > {MAX_EXACT_QUBITS}")
    if n > MAX_EXACT_QUBITS:
        log.warning("n=%d: candidate pool is sampled, not enumerated", n)
        rng = np.random.default_rng(seed)
        pool = {int(x) for x in rng.integers(1, 1 << n, size=1 << MAX_EXACT_QUBITS)}
        verts = sorted(
            c for c in pool if c not in problem.forbidden_differences and problem.admissible(c)
        )
    else:
        verts = candidate_vertices(problem)
    adj = _adjacency(verts, problem.forbidden_differences) if verts else np.zeros((0, 0), bool)

    nodes = 0
    history: list[tuple[float, int]] = []
    if not verts:
        chosen, exact = [], True
    elif mode == "exact":
        degree = adj.sum(axis=1)
        order = sorted(range(len(verts)), key=lambda i: (-int(degree[i]), verts[i]))
        sub = adj[np.ix_(order, order)]
        nbrs = _to_bitsets(sub)
        seed_clique, history = _local_search(
            sub, min(deadline, t0 + min(0.01 * budget, 0.1)), np.random.default_rng(seed), None
        )
        clique, exact, nodes = _max_clique_exact(nbrs, deadline, seed_clique)
        chosen = sorted(verts[order[i]] for i in clique)
    elif mode == "heuristic":
        goal = None if target is None else target - 1
        clique, history = _local_search(adj, deadline, np.random.default_rng(seed), goal)
        chosen = sorted(verts[i] for i in clique)
        exact = False
    else:
        raise ValueError(f"unknown search mode {mode!r}")

    codewords = [0] + chosen
    result = SearchResult(
        codewords, exact, time.monotonic() - t0, g, problem.target_distance, nodes,
        [(t, k + 1) for t, k in history],
    )
    if problem.target_distance > 1:
        report = check_detection(result.to_code(), min(problem.target_distance - 1, n))
        if not report.passed:
            raise AssertionError(f"search produced an invalid code: {report.failing_error}")
    return result


# -- code families -------------------------------------------------------------


def family(kind: str, n: int) -> Graph:
    """``ring`` (i ~ i+1 mod n), ``double_ring`` (two n/2 rings plus spokes
    i ~ i+n/2) or ``star`` (centre 0)."""
    if kind == "ring":
        if n < 3:
            raise ValueError("ring needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "double_ring":
        if n < 6 or n % 2:
            raise ValueError("double ring needs even n >= 6")
        h = n // 2
        edges = [(i, (i + 1) % h) for i in range(h)]
        edges += [(h + i, h + (i + 1) % h) for i in range(h)]
        edges += [(i, i + h) for i in range(h)]
        return Graph.from_edges(n, edges)
    if kind == "star":
        if n < 2:
            raise ValueError("star needs n >= 2")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    raise ValueError(f"unknown graph family {kind!r}")


def ssw_dimension(n: int) -> int:
    return (2 ** (n - 2) * (2 ** (n - 1) - math.comb(n - 1, (n - 1) // 2))) // 2 ** (n - 1)


def ssw_code(n: int) -> CwsCode:
    """Distance-two code on the star graph with odd-weight (n = 1 mod 4) or
    even-weight (n = 3 mod 4) words ``x`` of weight below (n-1)/2, word
    operators ``X^{x_0} Z^{x_1..x_{n-1}}``."""
    if n < 5 or n % 2 == 0:
        raise ValueError("star-graph codes need odd n >= 5")
    want = 1 if n % 4 == 1 else 0
    limit = (n - 1) // 2
    stab = [PauliOperator(n, 1, ((1 << n) - 1) ^ 1)]
    stab += [PauliOperator(n, 1 << q, 1) for q in range(1, n)]
    words = []
    for x in range(1 << n):
        w = x.bit_count()
        if w < limit and w % 2 == want:
            words.append(PauliOperator(n, x & 1, x & ~1))
    code, _ = to_standard_form(stab, words)
    return CwsCode(code.graph, code.codewords, 2)
