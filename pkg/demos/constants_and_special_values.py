"""Closed forms for xi_k at small integers.

xi_k(0) = (-1)^k (2k-1)!! / (4 sqrt(pi))^k, and the logarithmic derivative
there, B_k, has a closed form in log 2, log 4pi and Euler's gamma.  The odd
values xi_k(2n+1) are rational multiples of powers of pi times zeta(2n+1).
Every number printed here is compared with a direct evaluation.
"""

from zkxi import xik_constants, xik_special_value

print(" k   xi_k(0) closed      numeric             B_k closed          numeric")
for k in range(5):
    c = xik_constants(k, verify=True)
    print(f" {k}  {c.xi_at_zero: .15f} {c.numeric_xi_at_zero: .15f} "
          f"{c.B: .15f} {c.numeric_B: .15f}")

print("\nspecial values: closed form against xik_eval")
for k in range(4):
    for m in (1, 2, 3, 4, 5):
        sv = xik_special_value(k, m)
        print(f"  xi_{k}({m})  {sv.kind:4s}  {sv.closed_form.real: .15e}  "
              f"deviation {sv.deviation:.1e}")
