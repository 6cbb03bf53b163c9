"""
Equilateral polygons
====================

For the equilateral (2k+3)-gon the top power of a single Chern class has a
closed form, and the top power of the Euler class is a binomial
coefficient mod 2.  Here both are checked against the cocycle algebra and
against the triangle count.
"""
import time

from polychern import chern_monomial, euler_power_triangles, resolve_lengths
from polychern.oracle import chern_power_triangles, equilateral_closed_forms

print(" k   n   algebra  triangles  closed form")
for k in range(1, 6):
    n = 2 * k + 3
    L = resolve_lengths(",".join(["1"] * n))
    t0 = time.perf_counter()
    a = chern_monomial(L, {1: 2 * k})
    t = chern_power_triangles(L, 1)
    print(f"{k:2d} {n:3d} {a:8d} {t:10d} {equilateral_closed_forms(k, 'chern'):12d}"
          f"   ({time.perf_counter() - t0:.2f}s)")

###############################################################################
# The Euler power is 1 exactly when s + 1 is a power of two.
bits = []
for s in range(1, 9):
    L = resolve_lengths(",".join(["1"] * (2 * s + 3)))
    bits.append((s, euler_power_triangles(L), equilateral_closed_forms(s, "euler")))
for s, enum, lucas in bits:
    print(f"s={s}: enumerated {enum}, Lucas {lucas}")
