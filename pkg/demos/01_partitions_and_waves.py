# %% [markdown]
# # Restricted partitions, quasipolynomials and Sylvester waves
#
# W(s, d) counts the ways to write s as a nonnegative combination of the
# generators d.  We compute it by dynamic programming, rebuild it as a
# quasipolynomial that also makes sense at negative s, and split it into
# waves for a continuous extension.

# %%
import numpy as np

from scalarpart import (
    brute_force_count,
    build_quasipoly,
    check_parity,
    denumerant_table,
    poly_part,
    qp_eval_integer,
    wave_decompose,
    wave_eval_real,
)

d = (2, 3, 6, 7)
table = denumerant_table(d, 20)
print("W(s, {2,3,6,7}) for s = 0..20:", table)
print("brute force at s=17:", brute_force_count(17, d))

# %% [markdown]
# One polynomial per residue class mod lcm(d) = 42.  The mean of the
# residue polynomials is the pure polynomial part, which must agree with
# the higher-order Bernoulli formula exactly.

# %%
q = build_quasipoly(d)
print("period:", q.period)
print("principal part (DP route):       ", q.principal_part())
print("principal part (Bernoulli route):", poly_part(d))
assert q.principal_part() == poly_part(d)

# %% [markdown]
# Continuing to negative s: zeros on -17..-1 and the parity
# W(s) = (-1)^(m+1) W(-s - 18).

# %%
print([int(qp_eval_integer(q, s)) for s in range(-22, 1)])
print(check_parity(q, 100))

# %% [markdown]
# The wave decomposition gives a smooth curve through the integer values.

# %%
wd = wave_decompose(q)
print("waves present:", wd.wave_indices)
for s in (16.0, 16.5, 17.0):
    print(f"W_cont({s}) = {wave_eval_real(wd, s):.6f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x = np.linspace(-30, 12, 2000)
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.plot(x, wave_eval_real(wd, x), lw=1)
    ints = np.arange(-30, 13)
    ax.plot(ints, [float(qp_eval_integer(q, int(s))) for s in ints], "r.", ms=5)
    ax.axhline(0, color="k", lw=0.5)
    ax.set_xlabel("s")
    ax.set_ylabel("W(s, {2,3,6,7})")
    fig.tight_layout()
    fig.savefig("partition_2367.png", dpi=120)
    print("wrote partition_2367.png")
except ImportError:
    pass
