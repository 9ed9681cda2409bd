# %% [markdown]
# # Linear relations among scalar partitions
#
# Pick multipliers delta; each admissible choice yields a relation
# W(s, d) = sum_i W(s*delta_i, d_i) with m terms on the right.

# %%
from scalarpart import (
    generate_relation,
    numeric_identities,
    validate_delta,
    verify_bernoulli_relations,
    verify_poly_relation,
    verify_relation_integer,
)

for d, delta in [((2, 3, 6, 7), (1, 1, 1, 1)), ((2, 3, 6, 7), (1, 2, 1, 1)), ((2, 2, 5, 7), (1, 3, 1, 1))]:
    r = generate_relation(d, delta)
    print(f"\nd={d} delta={delta}")
    for t in r.terms:
        print(f"  raw {t.raw_generators}  ->  {t.sign:+d} * W({t.s_multiplier}s{t.shift:+d}, {tuple(t.abs_generators)})")
    print("  integer check on [0, 300]:", verify_relation_integer(r, 0, 300).status)
    ok, residual, parts = verify_poly_relation(r)
    for p in parts:
        print("   ", p)
    print("  polynomial residual is zero:", ok)
    print("  Bernoulli residuals:", [str(v) for v in verify_bernoulli_relations(r)])

# %% [markdown]
# Multipliers that create collinear or non-coprime columns are rejected.

# %%
print(validate_delta((2, 2, 5, 7), (1, 1, 1, 1)))
print(validate_delta((2, 4), (1, 2)))

# %% [markdown]
# The leading coefficients give purely numerical identities, each equal to 1.

# %%
ids = numeric_identities(generate_relation((2, 3, 6, 7), (1, 1, 1, 1)))
for key in ("lead_summands", "lead_term", "second_summands", "second_term",
            "third_prefactor", "third_summands", "third_term", "sigma1_terms", "sigma2_terms"):
    v = ids[key]
    print(f"{key:16s}", [str(x) for x in v] if isinstance(v, list) else str(v))
