# %% [markdown]
# Two small Leibniz algebras, worked end to end.
#
# The 2-dimensional algebra with only [x, x] = y and a 4-dimensional
# Lie-filiform one. We build each, check the identity, look at the series and
# read off the multiplier bounds.

# %%
from nleib import analyze, builtin, builtin_algebra, lie_center, lower_lie_series, render_report

q = builtin_algebra("ex3_18")
print(builtin("ex3_18"))

# %%
# q^2_Lie and the Lie-center coincide here: both are <y>.
terms = lower_lie_series(q)
print([S.dim for S in terms])
print(terms[1] == lie_center(q))

# %%
rep = analyze(q)
print(rep.bounds.best_value, rep.bounds.best_id)

# %% [markdown]
# The 4-dimensional example: q^2_Lie = <x3, x4>, q^3_Lie = <x4>, so the
# dimensions drop 4, 2, 1, 0 and the algebra is Lie-filiform.

# %%
q = builtin_algebra("ex3_20")
print(render_report(analyze(q)))

# %%
# the last nonzero term is the whole Lie-center
terms = lower_lie_series(q)
print(lie_center(q) == terms[2], lie_center(q))
