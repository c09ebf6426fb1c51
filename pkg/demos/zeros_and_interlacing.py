"""Zeros of Z, Z', Z'' and how they sit between each other.

Between two consecutive zeros of Z^(k) there is exactly one zero of
Z^(k+1), at least for large t.  This scans [0, 200], prints the first few
zeros of each derivative side by side, counts them against the main term
(T/2pi) log(T/2pi) - T/2pi, and reports any gap that breaks the pattern.
"""

import math

from zkxi import count_vs_mainterm, interlace, scan_zeros

T = 200.0
lists = {k: scan_zeros(k, 0.0, T) for k in range(4)}

print("first zeros:")
for i in range(8):
    print("  " + "  ".join(f"Z^({k}) {lists[k].gammas[i]:10.6f}" for k in range(3)))

print(f"\ncounts in (0, {T:g}):")
for k in range(3):
    c = count_vs_mainterm(lists[k], T)
    print(f"  k={k}  N = {c.count}  main term {c.mainterm:.3f}  "
          f"deviation {c.deviation:+.3f}  (2 log T = {2 * math.log(T):.2f})")

print("\ninterlacing on [50, 200]:")
for k in range(3):
    rep = interlace(k, lists[k], lists[k + 1], 50.0, T)
    print(f"  k={k}: {rep.notes['pairs']} gaps, {rep.notes['violations']} violations")

# below t = 50 the pattern is not guaranteed; look anyway
rep = interlace(1, lists[1], lists[2], 0.0, 50.0)
print(f"  k=1 on [0, 50]: {rep.notes['violations']} violations")
