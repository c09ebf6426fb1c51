"""Z_k(s) on the critical line.

Rotating Z_k(1/2 + it) by i^k e^{i theta(t)} gives the k-th derivative of
Hardy's Z-function.  Here we check that against mpmath, which
differentiates Z(t) numerically, and look at the three ways of building Z_k.
"""

import mpmath

from zkxi import hardy_derivatives, zk_eval

print("k-th derivatives of Z(t) at t = 40, ours against mpmath.siegelz:")
vals, imag = hardy_derivatives(40.0, 4)
for k, (v, r) in enumerate(zip(vals, imag)):
    ref = float(mpmath.siegelz(40.0, derivative=k))
    print(f"  k={k}  {v: .15f}  mpmath {ref: .15f}  leftover imaginary part {r:.1e}")

# the same number from the binomial sum, the recursion and the chi-root formula
b = zk_eval(0.5 + 40j, 3, route="all")
print("\nZ_3(1/2 + 40i) by route:")
for name, value in b.routes.items():
    print(f"  {name:10s} {value:.15g}")
print(f"  largest relative spread {b.route_spread:.1e}")

# Z(t) changes sign at each critical zero; the first one
v, _ = hardy_derivatives(14.134725141734693, 0)
print(f"\nZ(14.134725141734693) = {v[0]:.1e}")
