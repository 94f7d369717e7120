"""
The bound calculators side by side
==================================

Four ways to talk about the harmonious number of a k-uniform hypergraph with
m edges and maximum degree d:

  lower    — counting: t colors only offer C(t, k) distinct color sets
  theorem  — the asymptotic upper bound (1+eps) * k/(k-1) * (d(k-1)k!m)^(1/k)
  remark   — a fully explicit variant with lower-order terms spelled out
  lcl_min  — the smallest palette the exact rational certificate accepts
"""

from fractions import Fraction

from harmcolor import (
    lcl_condition,
    lcl_min_colors,
    lower_bound_colors,
    remark_bound,
    tau_grid_search,
    theorem_bound,
)

print(f"{'k':>2} {'d':>2} {'m':>6} {'lower':>6} {'theorem':>9} "
      f"{'remark':>9} {'lcl_min':>8}")
for k, d, m in [(2, 1, 8), (2, 2, 15), (3, 1, 15), (3, 2, 15), (4, 2, 50)]:
    print(f"{k:>2} {d:>2} {m:>6} {lower_bound_colors(k, m):>6} "
          f"{theorem_bound(k, d, m):>9.2f} {remark_bound(k, d, m):>9.2f} "
          f"{lcl_min_colors(k, d, m):>8}")

# the certificate itself is an exact rational inequality: tau must cover 1
# plus the weighted contributions of every event class at palette size t
print("\ncertificate at k=2, d=1, m=1 (tau = 2):")
for t in (10, 21, 30):
    res = lcl_condition(2, 1, 1, t)
    print(f"  t = {t:>3}: holds = {str(res.holds).lower():<5} "
          f"slack = {res.slack}  (~{float(res.slack):+.4f})")

# tau = k/(k-1) is the default, not the optimum; a coarse rational grid
# sometimes buys back a color
k, d, m = 3, 2, 15
default_t = lcl_min_colors(k, d, m)
best_tau, best_t = tau_grid_search(k, d, m, denominator=32)
print(f"\ntau tuning at (k={k}, d={d}, m={m}):")
print(f"  default tau = {Fraction(k, k - 1)}: minimal certified t = {default_t}")
print(f"  best tau on the /32 grid = {best_tau}: t = {best_t}")
