"""Poles of Z_k and how xi_k cancels them.

Z_k has poles at 0, at 1 and at the positive odd integers.  At the negative
even integers its behaviour depends on k: a simple zero for k = 0, regular
for k = 1, poles of order k - 1 beyond that.  The Gamma factors in xi_k
cancel every one of these exactly, and the jets show it happening.
"""

from zkxi.xik import lattice_leftover, xik_eval
from zkxi.zk import zk_jets_binomial

centers = (0, 1, 3, 5, -2, -4)
print("order of Z_k at each lattice point (negative = pole):")
print("   k " + "".join(f"{m:>6d}" for m in centers))
for k in range(5):
    row = [zk_jets_binomial(complex(m), k, k + 12)[k].valuation for m in centers]
    print(f"  {k:2d} " + "".join(f"{v:>6d}" for v in row))

print("\nafter multiplying by pi^{-s/2} s(s-1) / (Gamma(s/2)^{k-1} Gamma((1-s)/2)^k):")
for k in range(5):
    cells = []
    for m in centers:
        v, left = lattice_leftover(m, k)
        cells.append(f"{v:>3d}/{left:.0e}")
    print(f"  k={k}  " + "  ".join(cells))
print("  (order of the product, size of any leftover pole part)")

# values go smoothly through the snap radius around each lattice point
print("\nxi_2 moving through s = 3:")
for s in (2.9, 2.96, 2.99, 3.0, 3.01, 3.04, 3.1):
    print(f"  xi_2({s:5.2f}) = {xik_eval(s, 2).real:.12f}")
