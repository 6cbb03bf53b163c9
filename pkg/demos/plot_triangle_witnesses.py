"""
Triangle witnesses
==================

A top intersection number is a signed count of triangular configurations.
The edges are split into three parallel groups; each group acts as one
side of the triangle.  ``list_triangles`` returns the configurations that
actually close, with their signs.
"""
from polychern import chern_monomial, list_triangles, resolve_lengths


def show(text, spec):
    L = resolve_lengths(text)
    configs = list_triangles(L, spec)
    print(f"L=({text})  monomial {spec}: algebra {chern_monomial(L, spec)}")
    for cfg, sign in configs:
        groups = "  ".join(
            "[" + " ".join([str(i) for i in I] + [f"{j}'" for j in J]) + "]" for I, J in cfg.groups
        )
        sides = ", ".join(f"{float(s):.4f}" for s in cfg.sides)
        print(f"   {sign:+d}  {groups}   sides {sides}")
    print(f"   total {sum(s for _, s in configs)}")


show("1,1,1,1,1", {1: 2})
show("3,2,2,1,1", {4: 1, 5: 1})
show("3,1,1,1,1", {1: 1, 2: 1})
