"""
Chern tables of pentagons
=========================

Every pentagon chamber with a nonempty moduli space is represented by one
of six length vectors, up to relabelling.  For each of them we print the
symmetric 5x5 table of products Ch(i) Ch(j).
"""
from polychern import chern_table, resolve_lengths

VECTORS = ["3,1,1,1,1", "2,1,1,1,eps", "3,2,2,1,1", "2,2,1,1,1", "1,1,1,1,1", "1,1,1,eps,eps"]

for text in VECTORS:
    L = resolve_lengths(text)
    print(f"L = ({text})   realized as {L}")
    for row in chern_table(L):
        print("   " + " ".join(f"{v:3d}" for v in row))
    print()

###############################################################################
# Two patterns are worth spotting.  The equilateral table has -3 on the
# diagonal and 1 elsewhere; and in the last chamber the three long edges
# carry vanishing classes, so only Ch(4) Ch(5) survives.
