"""
Three ways to count transposition tuples
========================================

h_{g,1^d} counts tuples of r = 2d + 2g - 2 transpositions in S_d that
multiply to the identity and generate a transitive group.  The package
computes it three independent ways; here we watch them agree.
"""

from math import comb

from hsnum.hurwitz import (
    brute_force_count, connected_count, cut_and_join_walk, disconnected_count,
    hurwitz_simple, walk_disconnected_count,
)
from hsnum.partitions import class_size

# Start with the disconnected count for d = 3, r = 4.  Brute force walks all
# 3^4 = 81 tuples; the character sum has three terms (3^4 + (-3)^4 + 0) / 6.
print("brute      ", brute_force_count(3, 4))
print("characters ", disconnected_count(3, 4))
print("walk       ", cut_and_join_walk(3, 4)[(1, 1, 1)])

# The walk keeps the whole class vector.  Weighting each entry by the size
# of its conjugacy class recovers every one of the C(d,2)^r tuples.
vec = cut_and_join_walk(4, 6)
for mu, count in vec.items():
    print(f"  product of type {mu}: {count * class_size(mu)} tuples")
print("total", sum(c * class_size(mu) for mu, c in vec.items()), "=", comb(4, 2) ** 6)

# Transitive tuples come from removing the orbit of letter 1.
print("h_{1,1^3} =", connected_count(3, 6))
print("h_{1,1^3} via walk =", connected_count(3, 6, walk_disconnected_count))
print("h_{1,1^3} by enumeration =", brute_force_count(3, 6, require_transitive=True))

# The top-level entry point runs every feasible engine on request.
for g, d in [(0, 2), (1, 2), (0, 3), (1, 3), (3, 3), (2, 4)]:
    count = hurwitz_simple(g, d, method="all")
    print(f"h_({g},1^{d}) = {count.value}   engines: {dict(count.engines)}")

# Only the character sum scales.  Degree 20, genus 10 is 58 transpositions.
print("h_(10,1^20) =", hurwitz_simple(10, 20, method="characters").value)
