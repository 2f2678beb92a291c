"""Exact solvers for arc-preserving common-subsequence instances.

Three routes, all exact:

* :func:`lcs_dp` -- classic O(n*m) dynamic programming for arc-free inputs.
* :func:`diagonal_conflict_solve` -- identity-constrained instances
  (fragment width 1 / diagonal width 0) reduce to maximum independent set on
  a conflict graph; when every position carries at most one arc per side the
  conflict graph has maximum degree 2, its components are paths and cycles,
  and the optimum falls out in linear time.
* :func:`exact_search` -- pruned exhaustive search, the universal
  small-instance oracle.

:func:`solve` dispatches between them. Every solver returns the
lexicographically smallest optimal witness (pair list sorted by S1 position,
then S2 position), so outputs are byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import AnnotatedSequence, Arc, Mapping, MatchConstraint
from .errors import BudgetError, CapabilityError, InstanceError, WrongSolverError
from .mis import lexmin_maximum_independent_set

__all__ = [
    "SearchBudget",
    "SolveResult",
    "ConflictGraph",
    "lcs_dp",
    "build_conflict_graph",
    "diagonal_conflict_solve",
    "exact_search",
    "solve",
]


@dataclass(frozen=True)
class SearchBudget:
    """Hard limits for :func:`exact_search`.

    Exceeding a limit raises BudgetError; there is no silent truncation.

    Attributes:
        max_cells: cap on len(s1) * len(s2) for windowed/unconstrained search.
        max_identity_length: cap on sequence length for identity-constrained
            instances (fragment(1) / diagonal(0)).
        max_nodes: optional cap on explored search nodes.
    """

    max_cells: int = 400
    max_identity_length: int = 64
    max_nodes: int | None = None


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    length always equals len(witness.pairs); optimal is True for every
    solver in this module. stats carries solver-specific diagnostics
    (explored nodes, table sizes, conflict counts).
    """

    length: int
    witness: Mapping
    optimal: bool = True
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ConflictGraph:
    """Conflicts between candidate identity matches of two equal-length sequences.

    Vertices are the positions p with S1[p] = S2[p]. An edge joins p < q
    when exactly one of the two arc sets contains (p, q): matching both
    endpoints would then break arc preservation, so any valid identity
    mapping is an independent set here.
    """

    vertices: tuple[int, ...]
    edges: frozenset[Arc]

    @property
    def max_degree(self) -> int:
        degree = dict.fromkeys(self.vertices, 0)
        for p, q in self.edges:
            degree[p] += 1
            degree[q] += 1
        return max(degree.values(), default=0)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for p, q in self.edges:
            adj[p].add(q)
            adj[q].add(p)
        return adj


def _plain_string(s: str | AnnotatedSequence, side: str) -> str:
    if isinstance(s, AnnotatedSequence):
        if s.arcs:
            raise WrongSolverError(
                f"lcs_dp requires arc-free inputs but {side} carries "
                f"{len(s.arcs)} arc(s); use solve() or exact_search()"
            )
        return s.seq
    return s


def _suffix_lcs_table(s1: str, s2: str) -> list[list[int]]:
    """table[i][j] = LCS length of s1[i..] and s2[j..] (1-based suffixes)."""
    n, m = len(s1), len(s2)
    table = [[0] * (m + 2) for _ in range(n + 2)]
    for i in range(n, 0, -1):
        row, below = table[i], table[i + 1]
        for j in range(m, 0, -1):
            if s1[i - 1] == s2[j - 1]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = max(below[j], row[j + 1])
    return table


def lcs_dp(s1: str | AnnotatedSequence, s2: str | AnnotatedSequence) -> SolveResult:
    """Longest common subsequence of two plain strings, O(n*m) time and space.

    The arc-free case is ordinary LCS. The witness is recovered greedily
    from a suffix-length table: repeatedly take the lexicographically
    smallest pair that still completes an optimum.

    Raises:
        WrongSolverError: an input is an AnnotatedSequence with arcs.
    """
    str1 = _plain_string(s1, "S1")
    str2 = _plain_string(s2, "S2")
    n, m = len(str1), len(str2)
    table = _suffix_lcs_table(str1, str2)

    pairs: list[tuple[int, int]] = []
    i, j = 1, 1
    target = table[1][1]
    while target > 0:
        found = False
        for i2 in range(i, n + 1):
            if table[i2][j] < target:
                break
            for j2 in range(j, m + 1):
                if table[i2][j2] < target:
                    break
                if str1[i2 - 1] == str2[j2 - 1] and table[i2 + 1][j2 + 1] == target - 1:
                    pairs.append((i2, j2))
                    i, j = i2 + 1, j2 + 1
                    target -= 1
                    found = True
                    break
            if found:
                break
    return SolveResult(
        length=len(pairs),
        witness=Mapping(tuple(pairs)),
        stats={"solver": "lcs_dp", "table_cells": (n + 1) * (m + 1)},
    )


def build_conflict_graph(a1: AnnotatedSequence, a2: AnnotatedSequence) -> ConflictGraph:
    """Candidate identity matches and the arcs that put them in conflict.

    Vertices: positions where the sequences agree. Edges: pairs in the
    symmetric difference of the arc sets with both endpoints candidates.

    Raises:
        InstanceError: the sequences have different lengths.
    """
    if len(a1) != len(a2):
        raise InstanceError(
            f"conflict graph needs equal lengths, got {len(a1)} and {len(a2)}"
        )
    vertices = tuple(p for p in range(1, len(a1) + 1) if a1.base(p) == a2.base(p))
    vset = set(vertices)
    edges = frozenset(
        (p, q) for p, q in a1.arcs ^ a2.arcs if p in vset and q in vset
    )
    return ConflictGraph(vertices, edges)


def _path_mis(order: list[int], forced: dict[int, bool]) -> float:
    """Max independent set size along a path, honoring forced in/out states."""
    neg = float("-inf")
    v = order[0]
    take = 1 if forced.get(v) is not False else neg
    skip = 0 if forced.get(v) is not True else neg
    for v in order[1:]:
        take2 = skip + 1 if forced.get(v) is not False else neg
        skip2 = max(take, skip) if forced.get(v) is not True else neg
        take, skip = take2, skip2
    return max(take, skip)


def _cycle_mis(order: list[int], forced: dict[int, bool]) -> float:
    first, second, last = order[0], order[1], order[-1]
    best = float("-inf")
    if forced.get(first) is not True:
        f = dict(forced)
        f[first] = False
        best = max(best, _path_mis(order, f))
    if (
        forced.get(first) is not False
        and forced.get(second) is not True
        and forced.get(last) is not True
    ):
        f = dict(forced)
        f.update({first: True, second: False, last: False})
        best = max(best, _path_mis(order, f))
    return best


def _walk_component(comp: set[int], adj: dict[int, set[int]]) -> tuple[list[int], bool]:
    """Order a degree-<=2 component along its path or cycle."""
    endpoints = sorted(v for v in comp if len(adj[v] & comp) <= 1)
    is_cycle = not endpoints
    cur = endpoints[0] if endpoints else min(comp)
    order = [cur]
    prev = None
    while len(order) < len(comp):
        nxt = min(u for u in adj[cur] & comp if u != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order, is_cycle


def _lexmin_component_mis(order: list[int], is_cycle: bool) -> tuple[int, list[int]]:
    """Optimal size plus the lexicographically smallest optimal vertex set."""
    mis = _cycle_mis if is_cycle else _path_mis
    target = mis(order, {})
    forced: dict[int, bool] = {}
    for v in sorted(order):
        forced[v] = True
        if mis(order, forced) != target:
            forced[v] = False
    return int(target), sorted(v for v in order if forced[v])


def diagonal_conflict_solve(a1: AnnotatedSequence, a2: AnnotatedSequence) -> SolveResult:
    """Exact identity-constrained optimum when conflicts have degree <= 2.

    Under fragment(1)/diagonal(0) only positions p with S1[p] = S2[p] can be
    matched, and a set of matched positions is feasible exactly when it is
    independent in the conflict graph. When both arc sets keep endpoints
    disjoint, every vertex has at most one incident arc per side, so the
    conflict graph decomposes into paths and cycles and the maximum
    independent set is computed component by component in linear time
    (the optimum equals candidates minus a minimum vertex cover).

    Raises:
        InstanceError: unequal sequence lengths.
        CapabilityError: some conflict vertex has degree > 2 (use
            exact_search for those instances).
    """
    graph = build_conflict_graph(a1, a2)
    adj = graph.adjacency()
    max_deg = graph.max_degree
    if max_deg > 2:
        raise CapabilityError(
            f"conflict graph has degree {max_deg} > 2; use exact_search()"
        )

    chosen: list[int] = []
    total = 0
    components = 0
    seen: set[int] = set()
    for v in graph.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        components += 1
        if len(comp) == 1:
            total += 1
            chosen.append(v)
            continue
        order, is_cycle = _walk_component(comp, adj)
        size, members = _lexmin_component_mis(order, is_cycle)
        total += size
        chosen.extend(members)

    return SolveResult(
        length=total,
        witness=Mapping.identity(chosen),
        stats={
            "solver": "diagonal_conflict",
            "candidates": len(graph.vertices),
            "conflict_edges": len(graph.edges),
            "components": components,
        },
    )


def _identity_exact(
    a1: AnnotatedSequence, a2: AnnotatedSequence, budget: SearchBudget
) -> SolveResult:
    """Identity-constrained exhaustive search as maximum independent set."""
    n = min(len(a1), len(a2))
    candidates = [p for p in range(1, n + 1) if a1.base(p) == a2.base(p)]
    cset = set(candidates)
    adj: dict[int, set[int]] = {p: set() for p in candidates}
    for p, q in a1.arcs ^ a2.arcs:
        if p in cset and q in cset:
            adj[p].add(q)
            adj[q].add(p)
    size, members, nodes = lexmin_maximum_independent_set(
        candidates, adj, max_nodes=budget.max_nodes
    )
    return SolveResult(
        length=size,
        witness=Mapping.identity(members),
        stats={"solver": "exact_search", "nodes": nodes, "candidates": len(candidates)},
    )


def exact_search(
    a1: AnnotatedSequence,
    a2: AnnotatedSequence,
    mc: MatchConstraint,
    budget: SearchBudget | None = None,
) -> SolveResult:
    """Exact optimum over all constraint-satisfying arc-preserving mappings.

    Branch and bound over candidate pairs in lexicographic order. The upper
    bound is the plain LCS of the remaining suffixes, which is admissible
    because dropping arcs and constraints only relaxes the problem.
    Identity-forcing constraints take a specialized route (independent set
    on the conflict structure) with identical results and tie-break.

    Raises:
        BudgetError: the instance exceeds the configured search budget.
    """
    budget = budget or DEFAULT_BUDGET
    n, m = len(a1), len(a2)

    if mc.forces_identity():
        if max(n, m) > budget.max_identity_length:
            raise BudgetError(
                f"identity-constrained instance of length {max(n, m)} exceeds "
                f"budget {budget.max_identity_length}"
            )
        return _identity_exact(a1, a2, budget)

    if n * m > budget.max_cells:
        raise BudgetError(
            f"instance of size {n}x{m} exceeds budget of {budget.max_cells} cells"
        )

    s1, s2 = a1.seq, a2.seq
    p1, p2 = a1.arcs, a2.arcs
    table = _suffix_lcs_table(s1, s2)

    best: list[tuple[int, int]] = []
    best_len = -1
    cur: list[tuple[int, int]] = []
    nodes = 0
    max_nodes = budget.max_nodes

    def dfs(last_i: int, last_j: int) -> None:
        nonlocal nodes, best, best_len
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetError(f"exhaustive search exceeded {max_nodes} nodes")
        if len(cur) > best_len:
            best_len = len(cur)
            best = list(cur)
        if len(cur) + table[last_i + 1][last_j + 1] <= best_len:
            return
        for i in range(last_i + 1, n + 1):
            if len(cur) + table[i][last_j + 1] <= best_len:
                break
            for j in range(last_j + 1, m + 1):
                if len(cur) + table[i][j] <= best_len:
                    break
                if s1[i - 1] != s2[j - 1] or not mc.allows(i, j):
                    continue
                ok = True
                for pi, pj in cur:
                    if ((pi, i) in p1) != ((pj, j) in p2):
                        ok = False
                        break
                if ok:
                    cur.append((i, j))
                    dfs(i, j)
                    cur.pop()

    dfs(0, 0)
    return SolveResult(
        length=best_len,
        witness=Mapping(tuple(best)),
        stats={"solver": "exact_search", "nodes": nodes, "table_cells": (n + 1) * (m + 1)},
    )


def solve(
    a1: AnnotatedSequence,
    a2: AnnotatedSequence,
    mc: MatchConstraint,
    budget: SearchBudget | None = None,
) -> SolveResult:
    """Route an instance to the cheapest applicable exact solver.

    Arc-free unconstrained instances go to lcs_dp; identity-constrained
    instances with conflict degree <= 2 go to diagonal_conflict_solve;
    everything else goes to exact_search.
    """
    if not a1.arcs and not a2.arcs and mc.kind == "unconstrained":
        return lcs_dp(a1, a2)
    if mc.forces_identity() and len(a1) == len(a2):
        if build_conflict_graph(a1, a2).max_degree <= 2:
            return diagonal_conflict_solve(a1, a2)
    return exact_search(a1, a2, mc, budget)
