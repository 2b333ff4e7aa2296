# %% [markdown]
# # The ternary identity and the conjectured one
#
# For A_3(C) both sides of the ternary nu identity agree to rounding. The
# conjectured identity holds for A_2(C) but not for kZ with k >= 3.

# %%
import random

from zkmacwilliams import CodeZk, LatticeAk, counterexample_table, random_code, sole_sides, theorem4_sides

rng = random.Random(0)
for _ in range(5):
    code = random_code(3, 3, rng)
    rep = theorem4_sides(code, 1.0)
    print(f"|C|={code.size():3d}  lhs={rep.lhs:.12f}  rhs={rep.rhs:.12f}  rel={rep.relative_diff:.1e}")

# %% Binary codes: the conjecture holds
code = CodeZk(2, 3, ((1, 1, 0), (0, 1, 1)))
print(sole_sides(LatticeAk.from_code(code), 1.0))

# %% kZ for k = 3..10 at beta = 1: it does not
print(f"{'k':>3} {'lhs':>9} {'rhs':>9}")
for k, rep in counterexample_table(3, 10, 1.0):
    print(f"{k:>3} {rep.lhs:9.4f} {rep.rhs:9.4f}")
