# %% [markdown]
# # The relation residual between the integers
#
# With delta = 1 every term has integer periods and the residual vanishes
# identically.  With some delta_i > 1 the term periods become rational and
# the residual only vanishes at the integers.

# %%
import numpy as np

from scalarpart import generate_relation, relation_continuous_profile

configs = [((2, 3, 6, 7), (1, 1, 1, 1)), ((2, 3, 6, 7), (1, 2, 1, 1)), ((2, 2, 5, 7), (1, 3, 1, 1))]
profiles = {}
for d, delta in configs:
    s, w = relation_continuous_profile(generate_relation(d, delta), 0, 16, 0.01)
    at_int = s == np.round(s)
    profiles[(d, delta)] = (s, w)
    print(f"d={d} delta={delta}: max|w| = {np.abs(w).max():.3e}, "
          f"max at integers = {np.abs(w[at_int]).max():.3e}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 3, figsize=(13, 3.5))
    for ax, ((d, delta), (s, w)) in zip(axes, profiles.items()):
        ax.plot(s, w, lw=0.8)
        ints = s == np.round(s)
        ax.plot(s[ints], w[ints], "r.", ms=4)
        ax.set_title(f"d={d}, delta={delta}", fontsize=9)
        ax.set_xlabel("s")
    axes[0].set_ylabel("w(s)")
    fig.tight_layout()
    fig.savefig("relation_profiles.png", dpi=120)
    print("wrote relation_profiles.png")
except ImportError:
    pass
