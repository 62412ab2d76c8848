"""Tour of the field tower: moduli, generators, traces, and the m-sequence.

Everything here is deterministic: building the same tower twice gives the
same tables, so exported sets and sweep reports are reproducible.
"""

from qcss import build_tower, msequence

ctx = build_tower(3, 2)
print(f"tower F_3 < F_9 < F_81: h = {ctx.h}, m = {ctx.m}")
print(f"beta = {ctx.beta} generates F_81^*, alpha = beta^10 = {ctx.alpha} generates F_9^*")

# the absolute trace splits F_9 into three equal fibers over F_3
fibers = {}
for x in ctx.elements():
    fibers.setdefault(ctx.trace_to_prime(x), []).append(x)
print("trace fibers:", {t: xs for t, xs in sorted(fibers.items())})

# discrete logs invert powering
x = 7
print(f"dlog({x}) = {ctx.dlog(x)}, alpha^{ctx.dlog(x)} = {ctx.pow(ctx.alpha, ctx.dlog(x))}")

# the relative-trace m-sequence has period q^2 - 1 = 80 and its zeros sit
# exactly q + 1 = 10 places apart, one per window
s = msequence(ctx)
zeros = [j for j, v in enumerate(s) if v == 0]
print(f"m-sequence zeros: {zeros}")
gaps = {(b - a) for a, b in zip(zeros, zeros[1:])}
print(f"gaps between zeros: {gaps}")
for start in (0, 17, 42):
    window = [s[(start + i) % len(s)] for i in range(10)]
    print(f"window at {start:2d}: {window}  (zeros: {window.count(0)})")
