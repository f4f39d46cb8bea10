"""Total Tjurina numbers and classification for a few plane curves.

Run:  python3 demos/walkthrough_curves.py
"""

from qci import CurveInput, PrimeField, analyze_curve, parse_poly, variables

F = PrimeField(32003)
x, y, z = variables(F)


def show(label, f):
    rep = analyze_curve(CurveInput(f))
    print(f"== {label}  (degree {rep.d})")
    if rep.refusal:
        print("   refused:", rep.refusal)
        print()
        return
    if rep.curve_class == "smooth":
        print("   smooth, tau = 0")
        print()
        return
    print(f"   tau = {rep.tau}  r = {rep.r}  class = {rep.curve_class}", end="")
    if rep.exponents:
        print(f"  exponents = {rep.exponents}", end="")
    if rep.plus_one_case:
        print(f"  extremal signature #{rep.plus_one_case}", end="")
    print()
    tb = rep.tau_bounds
    line = f"   bounds: {tb.lower} <= tau <= {tb.upper}"
    if tb.ii_applicable:
        line += f", sharpened to tau <= {tb.ii_bound}"
    print(line)
    print()


show("triangle of lines", x * y * z)
show("cuspidal cubic", parse_poly("x^3 - y^2*z", F))
show("three lines through a point", parse_poly("x^2*y + x*y^2", F))
show("smooth quartic", parse_poly("x^4 + y^4 + z^4", F))
show("two conics tangent at a point", (x * x + y * z) * (x * x + y * z + y * y))

# d-1 lines through a point plus one line missing it: free with
# the largest tau a non-pencil arrangement can reach
for d in (5, 8):
    f = z
    for i in range(1, d):
        f = f * (x - i * y)
    show(f"near pencil of {d} lines", f)
