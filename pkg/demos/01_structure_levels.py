"""Walk through the five arc-structure levels and what breaks each one.

Arcs annotate a sequence with pairings between positions. Depending on
whether arcs may share endpoints, cross, or nest, an arc set classifies as
plain, chain, nested, crossing, or unlimited (strictest applicable level).
"""

from arcseq import AnnotatedSequence, StructureLevel, classify_structure

samples = [
    ("no arcs at all", "gcaucg", set()),
    ("two arcs, side by side", "gcaucguu", {(1, 4), (5, 8)}),
    ("one arc inside another", "gcau", {(1, 4), (2, 3)}),
    ("two arcs crossing", "gcau", {(1, 3), (2, 4)}),
    ("two arcs sharing position 1", "gcau", {(1, 3), (1, 4)}),
    ("endpoint chain 1-3, 3-5", "gcauc", {(1, 3), (3, 5)}),
]

print("classification of small arc sets")
print("=" * 48)
for label, seq, arcs in samples:
    level = classify_structure(arcs, len(seq))
    print(f"{label:32s} -> {level}")

# The levels are cumulative: each one admits everything the stricter ones do.
print()
print("level ordering (strict to permissive):")
print("  " + " < ".join(str(lv) for lv in StructureLevel))

# Removing arcs can only make a set stricter, never less strict.
print()
arcs = {(1, 3), (2, 4), (5, 8)}
a = AnnotatedSequence("gcaucguu", arcs)
print(f"start from {sorted(arcs)}: {a.structure()}")
for arc in sorted(arcs):
    rest = arcs - {arc}
    print(f"  drop {arc}: {sorted(rest)} -> {classify_structure(rest, 8)}")
