"""How fast log xi_k(sigma) approaches (sigma/2) log sigma.

Stirling gives log xi_k(sigma) = (sigma/2)(log sigma - log 2 pi e) + O(log sigma),
so the ratio to (sigma/2) log sigma is roughly 1 - log(2 pi e)/log sigma.
The asymptotic claim holds, but the approach is very slow: the ratio is
below one half at sigma = 200 and reaches 0.85 only near sigma = 1e8.
"""

import math

from zkxi.xik import xik_log

print("  sigma    " + "".join(f"k={k:<8d}" for k in range(5)) + "1 - log(2 pi e)/log sigma")
for sigma in (50.0, 100.0, 200.0, 400.0, 800.0):
    ratios = [xik_log(sigma, k).real / (0.5 * sigma * math.log(sigma)) for k in range(5)]
    model = 1 - math.log(2 * math.pi * math.e) / math.log(sigma)
    print(f"  {sigma:6.0f}  " + "".join(f"{r:<10.4f}" for r in ratios) + f"{model:.4f}")

# where the model ratio crosses 0.85
print(f"\n1 - log(2 pi e)/log sigma = 0.85 at sigma = {math.exp(math.log(2 * math.pi * math.e) / 0.15):.2e}")
