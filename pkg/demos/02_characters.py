"""
Symmetric group characters and the content sum
==============================================

The transposition class sum acts on the irreducible representation lambda
by the scalar C(d,2) chi^lambda(2,1^(d-2)) / f^lambda.  That scalar is just
the content sum of the diagram, which makes the character engine cheap.
"""

from math import comb

from hsnum.characters import border_strips, mn_character, transposition_class
from hsnum.partitions import conjugate, content_sum, dimension, partitions_of

# A character table for S_4 from the Murnaghan-Nakayama rule.
classes = partitions_of(4)
print("lambda \\ mu".ljust(14) + "".join(str(mu).ljust(14) for mu in classes))
for lam in classes:
    print(str(lam).ljust(14) + "".join(str(mn_character(lam, mu)).ljust(14) for mu in classes))

# Border strips of size 3 that can be peeled from (3, 2, 1), with their heights.
print(list(border_strips((3, 2, 1), 3)))

# Both routes to the central character, for every shape of size 6.
tau = transposition_class(6)
for lam in partitions_of(6):
    via_chars = comb(6, 2) * mn_character(lam, tau) // dimension(lam)
    print(lam, "contents:", content_sum(lam), "characters:", via_chars,
          "conjugate:", conjugate(lam))
