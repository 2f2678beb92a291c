"""Data model for arc-annotated sequences.

An arc-annotated sequence is a string together with a set of arcs, each arc
linking two of its positions. Positions are 1-based everywhere in the public
API. Arc sets fall into five structure levels, from most to least
restrictive:

    plain     -- no arcs at all
    chain     -- arcs are pairwise disjoint and sequentially ordered
    nested    -- arcs may nest but never cross and never share endpoints
    crossing  -- arcs may cross but never share endpoints
    unlimited -- anything goes

Each level is defined by which of four restrictions hold (no endpoint
sharing, no crossing, no nesting, no arcs); the restrictions are evaluated
independently and :func:`classify_structure` reports the strictest level
whose full restriction set holds.

A common subsequence of two annotated sequences is represented by a
:class:`Mapping`: an order-preserving partial matching between positions.
The mapping preserves arcs when matched position pairs carry an arc on one
side exactly when they do on the other; see :func:`is_arc_preserving`.
Matches can additionally be restricted by a :class:`MatchConstraint`
(same-fragment or diagonal-band matching).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .errors import ValidationError

__all__ = [
    "Arc",
    "AnnotatedSequence",
    "StructureLevel",
    "Mapping",
    "MatchConstraint",
    "classify_structure",
    "is_arc_preserving",
    "allowed",
    "validate_mapping",
]

Arc = tuple[int, int]


class StructureLevel(IntEnum):
    """Arc-structure levels, ordered from most to least restrictive.

    The integer value is the permissiveness rank, so ``level_a <= level_b``
    means every arc set at level_a is also acceptable at level_b.
    """

    PLAIN = 0
    CHAIN = 1
    NESTED = 2
    CROSSING = 3
    UNLIMITED = 4

    def is_within(self, other: "StructureLevel") -> bool:
        """True if this level's arc sets are all permitted at `other`."""
        return self <= other

    def __str__(self) -> str:
        return self.name.lower()


def _canonical_arcs(arcs: Iterable[Arc], n: int) -> frozenset[Arc]:
    """Normalize arcs to (min, max) pairs and validate endpoints.

    Duplicate and reversed duplicates merge silently; (i, i) self-pairs and
    out-of-range endpoints are rejected.
    """
    canon = set()
    for arc in arcs:
        i, j = arc
        if i == j:
            raise ValidationError(f"arc ({i}, {j}) links a position to itself")
        if i > j:
            i, j = j, i
        if i < 1 or j > n:
            raise ValidationError(f"arc ({i}, {j}) outside positions 1..{n}")
        canon.add((i, j))
    return frozenset(canon)


@dataclass(frozen=True)
class AnnotatedSequence:
    """A sequence plus a set of arcs linking pairs of its positions.

    Arcs are canonicalized on construction: stored as (i, j) with i < j,
    deduplicated, endpoints validated against the sequence length. Instances
    are immutable.
    """

    seq: str
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", _canonical_arcs(self.arcs, len(self.seq)))

    def __len__(self) -> int:
        return len(self.seq)

    def base(self, i: int) -> str:
        """Letter at 1-based position i."""
        return self.seq[i - 1]

    def structure(self) -> StructureLevel:
        return classify_structure(self.arcs, len(self.seq))


def _no_shared_endpoints(arcs: frozenset[Arc]) -> bool:
    # Equivalent to the pairwise formulation: two distinct arcs sharing any
    # endpoint (left-left, right-right, or left-right) violate it.
    endpoints = [p for arc in arcs for p in arc]
    return len(set(endpoints)) == len(endpoints)


def _no_crossing(arcs: frozenset[Arc]) -> bool:
    ordered = sorted(arcs)
    for a in range(len(ordered)):
        a1, a2 = ordered[a]
        for b in range(a + 1, len(ordered)):
            b1, b2 = ordered[b]
            if (b1 <= a1 <= b2) != (b1 <= a2 <= b2):
                return False
            if (a1 <= b1 <= a2) != (a1 <= b2 <= a2):
                return False
    return True


def _no_nesting(arcs: frozenset[Arc]) -> bool:
    # Holds exactly when arcs can be laid out left to right with each arc
    # ending no later than the next one starts.
    ordered = sorted(arcs)
    for (_, a2), (b1, _) in zip(ordered, ordered[1:]):
        if a2 > b1:
            return False
    return True


def classify_structure(arcs: Iterable[Arc], n: int) -> StructureLevel:
    """Strictest structure level whose defining restrictions all hold.

    The restrictions are cumulative: chain requires no endpoint sharing, no
    crossing, and no nesting; nested drops the no-nesting requirement;
    crossing requires only no endpoint sharing. An empty arc set is plain.

    Raises:
        ValidationError: endpoint outside 1..n or a self-pair.
    """
    canon = _canonical_arcs(arcs, n)
    if not canon:
        return StructureLevel.PLAIN
    if not _no_shared_endpoints(canon):
        return StructureLevel.UNLIMITED
    if not _no_crossing(canon):
        return StructureLevel.CROSSING
    if not _no_nesting(canon):
        return StructureLevel.NESTED
    return StructureLevel.CHAIN


@dataclass(frozen=True)
class Mapping:
    """Order-preserving bijective partial matching between two sequences.

    `pairs` holds (i, j) position pairs, strictly increasing in both
    coordinates once sorted by i. Construction validates the structural
    invariants; agreement of the matched letters is relative to a pair of
    sequences and is checked by :func:`validate_mapping`.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.pairs))
        prev_i, prev_j = 0, 0
        for i, j in ordered:
            if i < 1 or j < 1:
                raise ValidationError(f"mapping pair ({i}, {j}) has a position < 1")
            if i <= prev_i or j <= prev_j:
                raise ValidationError(
                    "mapping pairs must be strictly increasing in both coordinates"
                )
            prev_i, prev_j = i, j
        object.__setattr__(self, "pairs", ordered)

    @classmethod
    def identity(cls, positions: Iterable[int]) -> "Mapping":
        return cls(tuple((p, p) for p in sorted(positions)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def inverse(self) -> "Mapping":
        return Mapping(tuple((j, i) for i, j in self.pairs))


def validate_mapping(m: Mapping, a1: AnnotatedSequence, a2: AnnotatedSequence) -> None:
    """Check m against a concrete pair of sequences.

    Raises:
        ValidationError: a position is out of range or matched letters differ.
    """
    for i, j in m.pairs:
        if i > len(a1) or j > len(a2):
            raise ValidationError(f"mapping pair ({i}, {j}) outside the sequences")
        if a1.base(i) != a2.base(j):
            raise ValidationError(
                f"mapping pair ({i}, {j}) matches different letters "
                f"({a1.base(i)!r} vs {a2.base(j)!r})"
            )


def is_arc_preserving(m: Mapping, a1: AnnotatedSequence, a2: AnnotatedSequence) -> bool:
    """True iff every two matched pairs carry an arc on both sides or neither.

    For pairs (i1, j1), (i2, j2) with i1 < i2, requires
    (i1, i2) in P1  <=>  (j1, j2) in P2.

    An invalid mapping raises ValidationError rather than returning False.
    """
    validate_mapping(m, a1, a2)
    pairs = m.pairs
    for a in range(len(pairs)):
        i1, j1 = pairs[a]
        for b in range(a + 1, len(pairs)):
            i2, j2 = pairs[b]
            if ((i1, i2) in a1.arcs) != ((j1, j2) in a2.arcs):
                return False
    return True


_KINDS = ("unconstrained", "fragment", "diagonal")


@dataclass(frozen=True)
class MatchConstraint:
    """Restriction on which position pairs (i, j) may be matched.

    fragment(c): both sequences are cut into blocks of length c (the last
    block may be shorter) and i may match j only within the same block
    index. diagonal(c): i may match j only when |i - j| <= c. fragment(1)
    and diagonal(0) both force i == j.
    """

    kind: str
    c: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "unconstrained" and self.c is not None:
            raise ValidationError("unconstrained constraint takes no width")
        if self.kind == "fragment" and (self.c is None or self.c < 1):
            raise ValidationError("fragment constraint requires c >= 1")
        if self.kind == "diagonal" and (self.c is None or self.c < 0):
            raise ValidationError("diagonal constraint requires c >= 0")

    @classmethod
    def unconstrained(cls) -> "MatchConstraint":
        return cls("unconstrained")

    @classmethod
    def fragment(cls, c: int) -> "MatchConstraint":
        return cls("fragment", c)

    @classmethod
    def diagonal(cls, c: int) -> "MatchConstraint":
        return cls("diagonal", c)

    def allows(self, i: int, j: int) -> bool:
        if self.kind == "fragment":
            return (i - 1) // self.c == (j - 1) // self.c
        if self.kind == "diagonal":
            return abs(i - j) <= self.c
        return True

    def forces_identity(self) -> bool:
        """True for fragment(1) and diagonal(0), which only allow i == j."""
        return (self.kind == "fragment" and self.c == 1) or (
            self.kind == "diagonal" and self.c == 0
        )

    def __str__(self) -> str:
        if self.kind == "unconstrained":
            return "unconstrained"
        return f"{self.kind}({self.c})"


def allowed(mc: MatchConstraint, i: int, j: int) -> bool:
    """Whether the constraint permits matching position i of S1 to j of S2."""
    return mc.allows(i, j)
