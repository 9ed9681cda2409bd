# %% [markdown]
# # Rational generalization of the Bernoulli relations
#
# Replace the integer generators and multipliers by arbitrary rationals x
# and y.  The identity is checked exactly; a nonzero value would be a
# counterexample.

# %%
import random
from fractions import Fraction

from scalarpart.relations import DegenerateInput, check_bell_conjecture, random_conjecture_draw

print(check_bell_conjecture([Fraction(1, 2), 3, Fraction(-5, 7)], [Fraction(2, 3), 1, 4], 1))

rng = random.Random(0)
for m in (2, 3, 4, 5, 6):
    evaluations = nonzero = 0
    for _ in range(50):
        x, y = random_conjecture_draw(rng, m)
        for k in range(m):
            try:
                v = check_bell_conjecture(x, y, k)
            except DegenerateInput:
                continue
            evaluations += 1
            nonzero += v != 0
    print(f"m={m}: {evaluations} exact evaluations, {nonzero} nonzero")
