"""
How tight are the bounds on small instances?
============================================

Branch and bound gives the true harmonious number h(H) for small instances;
the counting lower bound and the greedy construction sandwich it, and the
closed-form upper bounds sit (far) above on instances this small — they are
asymptotic in m.
"""

from harmcolor import (
    builtin_instance,
    exact_harmonious_number,
    greedy_upper,
    lower_bound_colors,
    max_degree,
    remark_bound,
)

FAMILIES = [
    ("path", [3, 4, 5, 6, 7]),
    ("cycle", [3, 4, 5, 6, 7]),
    ("complete-graph", [3, 4, 5]),
    ("k-star", [2, 3, 4]),
]

print(f"{'instance':<20} {'m':>3} {'lower':>6} {'h(H)':>5} {'greedy':>7} "
      f"{'remark':>8}")
for family, sizes in FAMILIES:
    for size in sizes:
        h = builtin_instance(family, size)
        exact = exact_harmonious_number(h)
        _, greedy_t = greedy_upper(h)
        lo = lower_bound_colors(h.k, h.m)
        up = remark_bound(h.k, max_degree(h), h.m)
        assert lo <= exact <= greedy_t
        print(f"{family + '(' + str(size) + ')':<20} {h.m:>3} {lo:>6} "
              f"{exact:>5} {greedy_t:>7} {up:>8.1f}")

# 3-uniform matchings: disjoint edges only collide when their whole color
# sets coincide, so h grows like the counting bound C(t,3) >= m demands
print()
for q in range(1, 6):
    h = builtin_instance("matching", q, k=3)
    exact = exact_harmonious_number(h)
    lo = lower_bound_colors(3, q)
    print(f"matching({q}, k=3): lower {lo}, exact {exact}")
