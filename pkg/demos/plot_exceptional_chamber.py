"""
The exceptional chamber
=======================

When l2 + l3 exceeds the sum of all the other edges (with lengths sorted),
the three longest edges have vanishing Chern class.  The representatives
themselves prune to zero, since every term is an empty manifold.
"""
from polychern import chern_monomial, chern_rep, format_cocycle, resolve_lengths
from polychern.lengths import chern_nonvanishing

for n in (5, 6, 7):
    L = resolve_lengths("1,1,1," + ",".join(["eps"] * (n - 3)))
    print(f"n={n}  L={L}")
    print("   Ch(1) with partner 2:", format_cocycle(chern_rep(1, 2, L=L)))
    print("   Ch(1) with partner 4:", format_cocycle(chern_rep(1, 4, L=L)))
    print("   status:", {i: chern_nonvanishing(L, i).value for i in range(1, n + 1)})
    light = {i: 1 for i in range(4, n + 1)}
    print("   product of the light classes:", chern_monomial(L, light))

###############################################################################
# With a light partner the representative of Ch(1) is not the zero cocycle,
# but it still evaluates to zero against anything of complementary degree.
L = resolve_lengths("1,1,1,eps,eps")
print([chern_monomial(L, {1: 2} if j == 1 else {1: 1, j: 1}) for j in range(1, 6)])
