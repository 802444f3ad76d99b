# %% [markdown]
# Central binomial coefficients as sums of figurate numbers.
#
# C(2n, n) splits as a weighted sum of r-dimensional figurate numbers for any
# 1 <= r <= n-1. We print the tables and then count the underlying
# non-decreasing sequences directly.

# %%
from nleib.bounds import binom
from nleib.combinatorics import decomposition_table, pascal_identity_classes, rhombus_sum

for r, name in [(2, "T"), (3, "H"), (4, "P4")]:
    rows = decomposition_table(5, r)
    terms = " + ".join(f"{c}*{name}_{i + 1}" for i, (c, _, _) in enumerate(rows))
    print(f"252 = {terms}")

# %%
# each class of sequences has exactly the predicted size
for c in pascal_identity_classes(6, 3):
    print(c.i, c.predicted, c.enumerated)

# %%
# the rhombus sums 5, 19, 69, 251, ... sit one below the central binomials
for n in range(2, 8):
    print(n, rhombus_sum(n), binom(2 * n, n) - 1)
