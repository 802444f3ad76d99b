# %% [markdown]
# How the multiplier bounds compare across parameters.
#
# Every bound depends only on (n, m, d) plus a few structural flags, so the
# whole catalog can be tabulated without building any algebra.

# %%
from nleib import AlgebraParams, best_bounds, bound_value

ids = ["THM_GENERAL", "COR_NILP", "COR_NILP_N2", "COR_HALF_N2"]
print("m  d  " + "  ".join(f"{i:>12}" for i in ids))
for m in range(3, 9):
    for d in (1, 2, 3):
        if d >= m:
            continue
        p = AlgebraParams(n=2, m=m, d=d, lie_class=m)
        vals = [bound_value(i, p).value for i in ids]
        print(f"{m}  {d}  " + "  ".join(f"{v:>12}" for v in vals))

# %% [markdown]
# With d = 1 the half bound wins, with d = 2 the two agree, and past that the
# nilpotent bound is never larger (flooring can make them tie, as at m=4, d=3).

# %%
# n = 3 is where the half bound can lose even to the general one
p = AlgebraParams(n=3, m=10, d=1, lie_class=2)
print(bound_value("COR_HALF", p).value, bound_value("THM_GENERAL", p).value)

# %%
# Lie-filiform algebras: the bound stops growing at m = 6
for m in range(3, 10):
    r = best_bounds(AlgebraParams(n=2, m=m, d=m - 2, lie_filiform=True))
    print(m, r.best_value, r.best_id)
