"""Independent-set reductions to identity-constrained subsequence instances.

Two constructions map a graph G with a target size k to a pair of annotated
sequences plus a decision threshold, such that (at least in the forward
direction) G has an independent set of size k exactly when the instance has
an arc-preserving common subsequence reaching the threshold under
same-position matching:

* :func:`reduce_theorem1`: single-letter alphabet. Both sequences are a^n;
  the first arc set is the edge set itself, the second is empty. Valid
  identity mappings are exactly the independent sets of G, so the optimum
  equals the graph's independence number.

* :func:`reduce_theorem2`: two-letter alphabet. Both sequences are
  (b a^n b)^n, one block of width n+2 per vertex. Each block is framed by a
  bracket arc (present on both sides); each graph edge (i, j) becomes an
  arc, present on the first side only, between an 'a' inside block i and an
  'a' inside block j. The threshold scales to k*(n+2).

The construction's backward direction is treated as an empirical question:
:func:`check_equivalence` measures both implications per (graph, k) pair
with exact oracles on both sides, and reports disagreements rather than
assuming them away.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .core import (
    AnnotatedSequence,
    Arc,
    Mapping,
    MatchConstraint,
    StructureLevel,
    is_arc_preserving,
    validate_mapping,
)
from .errors import BudgetError, ValidationError
from .mis import lexmin_maximum_independent_set
from .solvers import SearchBudget, solve

__all__ = [
    "Graph",
    "Provenance",
    "ReductionInstance",
    "MaxIndependentSet",
    "EquivalenceRow",
    "EquivalenceReport",
    "IndependenceViolationWarning",
    "max_independent_set",
    "reduce_theorem1",
    "reduce_theorem2",
    "extract_independent_set",
    "independence_violations",
    "check_equivalence",
    "REDUCTIONS",
]


class IndependenceViolationWarning(UserWarning):
    """An extracted vertex set is not independent in the source graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    Edges are canonicalized to (i, j) with i < j and deduplicated; loops are
    rejected. Connectivity is not required.
    """

    n: int
    edges: frozenset[Arc] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        canon = set()
        for i, j in self.edges:
            if i == j:
                raise ValidationError(f"loop at vertex {i} not allowed")
            if i > j:
                i, j = j, i
            if i < 1 or j > self.n:
                raise ValidationError(f"edge ({i}, {j}) outside vertices 1..{self.n}")
            canon.add((i, j))
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def edge_mask(self) -> int:
        """Bitmask of the edge set over the lexicographic edge universe."""
        index = {e: b for b, e in enumerate(edge_universe(self.n))}
        mask = 0
        for e in self.edges:
            mask |= 1 << index[e]
        return mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        universe = edge_universe(n)
        if mask < 0 or mask >= 1 << len(universe):
            raise ValidationError(f"mask {mask} out of range for n={n}")
        return cls(n, frozenset(e for b, e in enumerate(universe) if mask >> b & 1))


def edge_universe(n: int) -> list[Arc]:
    """All possible edges of an n-vertex graph in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


class MaxIndependentSet(NamedTuple):
    size: int
    vertices: tuple[int, ...]


def max_independent_set(
    g: Graph, max_vertices: int = 20, max_nodes: int | None = None
) -> MaxIndependentSet:
    """Exact maximum independent set of g by branch and bound.

    The witness is the lexicographically smallest optimum.

    Raises:
        BudgetError: g has more than max_vertices vertices.
    """
    if g.n > max_vertices:
        raise BudgetError(
            f"graph with {g.n} vertices exceeds independent-set budget {max_vertices}"
        )
    size, members, _ = lexmin_maximum_independent_set(
        range(1, g.n + 1), g.adjacency(), max_nodes=max_nodes
    )
    return MaxIndependentSet(size, members)


def independence_violations(g: Graph, vertices: Iterable[int]) -> set[Arc]:
    """Edges of g with both endpoints in the given vertex set."""
    vs = set(vertices)
    return {(i, j) for i, j in g.edges if i in vs and j in vs}


@dataclass(frozen=True)
class Provenance:
    """Which construction produced an instance, and from what."""

    theorem: str  # "T1" | "T2"
    case: str | None  # "I" | "II" for T2, None for T1
    graph: Graph
    k: int


@dataclass(frozen=True)
class ReductionInstance:
    """A reduced decision instance: sequences, constraint, and threshold."""

    a1: AnnotatedSequence
    a2: AnnotatedSequence
    mc: MatchConstraint
    threshold: int
    provenance: Provenance


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise RuntimeError(f"reduction construction invariant failed: {what}")


def reduce_theorem1(g: Graph, k: int) -> ReductionInstance:
    """Single-letter reduction: a^n with the edge set as the only arcs.

    S1 = S2 = a^n, P1 = E(g), P2 = empty, same-position matching, threshold k.
    """
    if k < 1:
        raise ValidationError("threshold k must be >= 1")
    seq = "a" * g.n
    return ReductionInstance(
        a1=AnnotatedSequence(seq, g.edges),
        a2=AnnotatedSequence(seq),
        mc=MatchConstraint.fragment(1),
        threshold=k,
        provenance=Provenance("T1", None, g, k),
    )


def reduce_theorem2(g: Graph, k: int) -> ReductionInstance:
    """Two-letter blocked reduction.

    For k > n the instance degenerates (case I): both sequences are the
    single letter "a" with no arcs and the threshold stays k, which is
    unsatisfiable for k > 1 by construction. Otherwise (case II) each vertex
    i becomes a block b a^n b of width n+2; block i is framed by the bracket
    arc ((i-1)(n+2)+1, i(n+2)) on both sides, and each edge (i, j) adds the
    arc ((i-1)(n+2)+j+1, (j-1)(n+2)+i+1), normalized to increasing order, on
    the first side only. The threshold is k(n+2).
    """
    if k < 1:
        raise ValidationError("threshold k must be >= 1")
    n = g.n
    if k > n:
        return ReductionInstance(
            a1=AnnotatedSequence("a"),
            a2=AnnotatedSequence("a"),
            mc=MatchConstraint.fragment(1),
            threshold=k,
            provenance=Provenance("T2", "I", g, k),
        )

    width = n + 2
    seq = ("b" + "a" * n + "b") * n
    brackets = {((i - 1) * width + 1, i * width) for i in range(1, n + 1)}
    edge_arcs = set()
    for i, j in g.edges:
        alpha = (i - 1) * width + j + 1
        beta = (j - 1) * width + i + 1
        edge_arcs.add((min(alpha, beta), max(alpha, beta)))
    a1 = AnnotatedSequence(seq, frozenset(brackets | edge_arcs))
    a2 = AnnotatedSequence(seq, frozenset(brackets))

    _check(len(seq) == n * width, "sequence length n(n+2)")
    _check(len(a1.arcs) == g.m + n, "|P1| = |E| + n")
    _check(len(a2.arcs) == n, "|P2| = n")
    _check(a1.structure().is_within(StructureLevel.CROSSING), "P1 within crossing")
    _check(a2.structure().is_within(StructureLevel.CHAIN), "P2 within chain")
    for alpha, beta in edge_arcs:
        _check(seq[alpha - 1] == "a" and seq[beta - 1] == "a", "edge arcs land on a's")

    return ReductionInstance(
        a1=a1,
        a2=a2,
        mc=MatchConstraint.fragment(1),
        threshold=k * width,
        provenance=Provenance("T2", "II", g, k),
    )


def extract_independent_set(inst: ReductionInstance, m: Mapping) -> frozenset[int]:
    """Read a vertex set off a valid mapping for a reduced instance.

    For the single-letter construction the set is {i : (i, i) matched} and
    is guaranteed independent; a violation means the instance was corrupted
    and raises. For the blocked construction the set is the vertices whose
    entire block is matched; independence is NOT guaranteed there, so
    violations only emit an IndependenceViolationWarning.

    Raises:
        ValidationError: m is not a valid, constraint-satisfying,
            arc-preserving mapping for the instance.
    """
    validate_mapping(m, inst.a1, inst.a2)
    for i, j in m.pairs:
        if not inst.mc.allows(i, j):
            raise ValidationError(f"mapping pair ({i}, {j}) violates {inst.mc}")
    if not is_arc_preserving(m, inst.a1, inst.a2):
        raise ValidationError("mapping is not arc-preserving for this instance")

    g = inst.provenance.graph
    matched = {i for i, _ in m.pairs}
    if inst.provenance.theorem == "T1":
        vertices = frozenset(matched)
        bad = independence_violations(g, vertices)
        if bad:
            raise RuntimeError(
                f"extracted set {sorted(vertices)} hits edges {sorted(bad)}; "
                "single-letter instances cannot produce this"
            )
        return vertices

    width = g.n + 2
    vertices = frozenset(
        i
        for i in range(1, g.n + 1)
        if all((i - 1) * width + off in matched for off in range(1, width + 1))
    )
    bad = independence_violations(g, vertices)
    if bad:
        warnings.warn(
            f"block-complete set {sorted(vertices)} is not independent "
            f"(edges {sorted(bad)})",
            IndependenceViolationWarning,
            stacklevel=2,
        )
    return vertices


@dataclass(frozen=True)
class EquivalenceRow:
    """One measured (graph, k) comparison between the two oracles.

    For skipped rows (a budget was exceeded) the measured fields are None
    and skip_reason says why; threshold is always available.
    """

    graph_id: str
    n: int
    m: int
    connected: bool
    k: int
    threshold: int
    is_answer: bool | None
    lapcs_len: int | None
    lapcs_answer: bool | None
    forward_ok: bool | None
    backward_ok: bool | None
    skipped: bool = False
    skip_reason: str | None = None

    @property
    def counterexample(self) -> bool:
        return not self.skipped and not (self.forward_ok and self.backward_ok)


@dataclass
class EquivalenceReport:
    """Collected rows of an equivalence sweep plus derived summaries."""

    theorem: str
    rows: list[EquivalenceRow]

    @property
    def counterexamples(self) -> list[EquivalenceRow]:
        return [r for r in self.rows if r.counterexample]

    @property
    def skipped_rows(self) -> list[EquivalenceRow]:
        return [r for r in self.rows if r.skipped]

    def summary(self) -> dict:
        done = [r for r in self.rows if not r.skipped]
        return {
            "theorem": self.theorem,
            "rows": len(self.rows),
            "completed": len(done),
            "skipped": len(self.skipped_rows),
            "forward_failures": sum(1 for r in done if not r.forward_ok),
            "backward_failures": sum(1 for r in done if not r.backward_ok),
            "counterexamples": [_row_dict(r) for r in self.counterexamples],
            "skipped_rows": [
                {"graph_id": r.graph_id, "k": r.k, "reason": r.skip_reason}
                for r in self.skipped_rows
            ],
        }


def _row_dict(r: EquivalenceRow) -> dict:
    return {
        "graph_id": r.graph_id,
        "n": r.n,
        "m": r.m,
        "connected": r.connected,
        "k": r.k,
        "is_answer": r.is_answer,
        "lapcs_len": r.lapcs_len,
        "threshold": r.threshold,
        "lapcs_answer": r.lapcs_answer,
        "forward_ok": r.forward_ok,
        "backward_ok": r.backward_ok,
    }


def default_graph_id(g: Graph) -> str:
    return f"g{g.n}-{g.edge_mask()}"


REDUCTIONS = {"T1": reduce_theorem1, "T2": reduce_theorem2}


def check_equivalence(
    g: Graph,
    k: int,
    theorem: str,
    graph_id: str | None = None,
    search_budget: SearchBudget | None = None,
    mis_max_vertices: int = 20,
) -> EquivalenceRow:
    """Measure both directions of a reduction's claimed equivalence.

    Computes max-IS >= k with the graph oracle and LAPCS >= threshold with
    the sequence oracle, then records whether each implies the other.
    Budget errors on either side mark the row skipped instead of failing.
    """
    if theorem not in REDUCTIONS:
        raise ValidationError(f"theorem must be 'T1' or 'T2', got {theorem!r}")
    gid = graph_id if graph_id is not None else default_graph_id(g)
    inst = REDUCTIONS[theorem](g, k)
    base = {
        "graph_id": gid,
        "n": g.n,
        "m": g.m,
        "connected": g.is_connected(),
        "k": k,
        "threshold": inst.threshold,
    }
    try:
        mis = max_independent_set(g, max_vertices=mis_max_vertices)
        result = solve(inst.a1, inst.a2, inst.mc, budget=search_budget)
    except BudgetError as exc:
        return EquivalenceRow(
            **base,
            is_answer=None,
            lapcs_len=None,
            lapcs_answer=None,
            forward_ok=None,
            backward_ok=None,
            skipped=True,
            skip_reason=str(exc),
        )
    is_answer = mis.size >= k
    lapcs_answer = result.length >= inst.threshold
    return EquivalenceRow(
        **base,
        is_answer=is_answer,
        lapcs_len=result.length,
        lapcs_answer=lapcs_answer,
        forward_ok=(not is_answer) or lapcs_answer,
        backward_ok=(not lapcs_answer) or is_answer,
    )
