"""Lower bounds and how the optimality factor rho behaves as fields grow.

rho = measured-or-claimed peak / bound.  rho = 1 is optimal, rho <= 2 is
near-optimal.  For every family the formula-mode trend decreases strictly
toward 1 as q grows, which is the asymptotic-optimality story told by the
sweep reports at small q.
"""

from qcss import bound_liu, bound_periodic, bound_welch, liu_applicable, rho_trend

print("bounds at (M, K, N) = (81, 8, 8):")
print(f"  periodic set-size bound     {bound_periodic(81, 8, 8):.4f}")
print(f"  aperiodic Welch-style bound {bound_welch(81, 8, 8):.4f}")
print(f"  aperiodic set-size bound    {bound_liu(81, 8, 8):.4f}")
print()

# the sharper aperiodic bound needs M >= 3K, K >= 2, N >= 2
ok, why = liu_applicable(23, 8, 8)
print(f"sharper bound at (23, 8, 8)? {ok} ({why})")
print()

PLANS = {"C": (2, range(2, 8)), "A": (2, range(1, 7)), "B": (2, range(1, 7)),
         "D": (2, range(2, 8)), "E": (3, range(2, 7)), "F": (2, range(2, 8))}

for fid, (p, ns) in PLANS.items():
    points, notes = rho_trend(fid, p, ns)
    path = "  ".join(f"q={q}: {r:.4f}" for q, r in points)
    print(f"family {fid}: {path}")
    for note in notes:
        print(f"  (skipped {note})")
