"""Tabulate both witness families against the certified tau bounds.

The pencil family attains the global maximum (d-1)^2 at r = 0 and the
smooth-plus-line family attains the lower bound with the largest
possible r. Run:  python3 demos/bound_atlas.py
"""

from qci import PrimeField, analyze_curve, family

F = PrimeField(32003)

header = f"{'family':>18} {'d':>3} {'tau':>5} {'r':>3} {'lower':>6} {'upper':>6} {'class':<20}"
print(header)
print("-" * len(header))

for d in range(3, 11):
    rep = analyze_curve(family("lines_through_point", F, d=d))
    tb = rep.tau_bounds
    print(f"{'lines':>18} {d:>3} {rep.tau:>5} {rep.r:>3} {tb.lower:>6} {tb.upper:>6} {rep.curve_class:<20}")

for d in range(4, 11):
    rep = analyze_curve(family("smooth_plus_line", F, d=d))
    tb = rep.tau_bounds
    upper = tb.ii_bound if tb.ii_applicable else tb.upper
    print(f"{'smooth+line':>18} {d:>3} {rep.tau:>5} {rep.r:>3} {tb.lower:>6} {upper:>6} {rep.curve_class:<20}")
