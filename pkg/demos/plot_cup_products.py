"""
Cup products by hand
====================

Products of nice factors follow a handful of rewriting rules.  This walks
through them on small examples, keeping the expansion formal (no lengths,
so nothing is pruned).
"""
from polychern import Ring, cup, format_cocycle, parse_cocycle

n = 7
a = parse_cocycle("(1 2 3)", Ring.Z, n)
b = parse_cocycle("(3 4 5)", Ring.Z, n)
print("(1 2 3) * (3 4 5) =", format_cocycle(cup(None, a, b)))

# one shared edge on the antidirected side: both factors get flipped first,
# which costs a sign each time over Z
a = parse_cocycle("(1 2 3')", Ring.Z, n)
b = parse_cocycle("(4 5 3')", Ring.Z, n)
print("(1 2 3') * (4 5 3') =", format_cocycle(cup(None, a, b)))

###############################################################################
# Over Z2 the square of a factor is not zero.  It is rewritten with the two
# smallest unused edges.
sq = parse_cocycle("(1 2)", Ring.Z2, n)
print("(1 2)^2 over Z2 =", format_cocycle(cup(None, sq, sq)))

###############################################################################
# The square of the Euler class, from two overlapping representatives:
e1 = parse_cocycle("(1 2)+(1 2')", Ring.Z2, 5)
e2 = parse_cocycle("(2 3)+(2 3')", Ring.Z2, 5)
print("e^2 =", format_cocycle(cup(None, e1, e2)))
