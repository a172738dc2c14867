"""
Classifying Severi triples and Hurwitz-Severi numbers
=====================================================

A triple (g, d, l) describes plane curves of degree d + l and genus g with
an l-fold point at p.  Projecting from p gives a degree-d map to the line.
"""

from hsnum.severi import (
    Kind, UnbendableUnsupported, classify, dims, hs_number, node_count,
)

# The worked cases: cubics and quartics seen from various points.
cases = {
    "smooth cubic, outside point": (1, 3, 0),
    "smooth cubic, point on it": (1, 2, 1),
    "nodal cubic, outside point": (0, 3, 0),
    "nodal cubic, smooth point": (0, 2, 1),
    "smooth quartic, point on it": (3, 3, 1),
    "smooth quartic, outside point": (3, 4, 0),
}
for name, t in cases.items():
    cls = classify(t)
    line = f"{name:32s} {t}  {cls.label:18s} nodes={node_count(t)}  dims={tuple(dims(t))}"
    try:
        hs = hs_number(t)
        line += f"  h={hs.hurwitz_input.value}  HS={hs.value}"
    except UnbendableUnsupported:
        line += "  HS: no formula (unbendable)"
    print(line)

# Where do the three kinds live?  One row per degree, l = 1, g = 0..12.
symbol = {Kind.BENDABLE: "B", Kind.SEMI_BENDABLE: "S", Kind.UNBENDABLE: "."}
for d in range(2, 8):
    row = "".join(symbol[classify((g, d, 1)).kind] if classify((g, d, 1)).nonempty else " "
                  for g in range(13))
    print(f"d={d}  {row}")

# Strongly bendable triples: the branching morphism is between spaces of the
# same dimension.  Only d = 2 (with g <= l) and two cubic cases qualify.
strong = sorted((g, d, l) for d in range(1, 8) for l in range(4) for g in range(8)
                if classify((g, d, l)).strongly_bendable)
print(strong)

# d = 2, l = 0 is the one place the count is fractional: the double cover
# has a nontrivial automorphism.
print(hs_number((0, 2, 0)).value)
