# Cost of the GCD test versus the state diagram as memory grows.
#
# Family: G = [1+D^m, (1+D^m)(1+D)].  The GCD route is counted in
# coefficient bit operations, the state diagram in transition edges.
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tvcc.bench import doubling_ratios, loglog_slope, run_bench

rows = run_bench(range(2, 15))
ms = [r.m for r in rows]
ops = [r.gcd_ops for r in rows]
edges = [r.oracle_edges for r in rows]

for r in rows:
    print(f"m={r.m:2d}  gcd ops={r.gcd_ops:4d}  oracle edges={r.oracle_edges:6d}")
print("log-log slope of GCD ops:", round(loglog_slope(ms, ops), 3))
print("edge ratio per unit m:", sorted(set(round(x, 3) for x in doubling_ratios(edges))))

fig, ax = plt.subplots()
ax.semilogy(ms, ops, "o-", label="minor GCD (bit ops)")
ax.semilogy(ms, edges, "s-", label="state graph (edges)")
ax.set_xlabel("m")
ax.legend()
fig.savefig("complexity.png", dpi=100)
print("wrote complexity.png")
