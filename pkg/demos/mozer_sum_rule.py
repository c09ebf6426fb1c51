"""The sum rule for d/dt (Z^(k+1)/Z^(k)).

d/dt (Z^(k+1)/Z^(k))(t) = -sum over zeros 1/(t - gamma)^2 + O(1/t).

Each term of the sum is positive, so the derivative is negative and the
ratio falls from +inf to -inf between consecutive zeros.  That is why
Z^(k+1) has exactly one zero in each gap.  Below, the left side comes from a
single jet evaluation and the sum from a zero list to T = 400, with the
zeros beyond 400 estimated from the mean density.
"""

from zkxi import mozer_residual, scan_zeros
from zkxi.zeros import ratio_derivative_signs

zl = {k: scan_zeros(k, 0.0, 400.0) for k in range(3)}

print("  k      t        lhs        zero sum    residual*t   with tail*t")
for k in range(3):
    for t in (50.0, 100.0, 150.0, 200.0):
        r = mozer_residual(k, t, zl[k])
        print(f"  {k}  {t:6.0f}  {r.lhs:11.5f}  {r.zero_sum:11.5f}  "
              f"{r.residual * t:10.4f}  {r.corrected * t:10.4f}")

for k in range(3):
    worst = max(v for _, v in ratio_derivative_signs(k, zl[k], 50.0, 400.0))
    print(f"k={k}: largest value of the derivative between zeros on [50, 400] is {worst:.3f}")
