# %% [markdown]
# # Complete weight enumerators over Z_k[xi]
#
# Take R = Z_3[x]/(x^2 + 1), a ring with 9 elements. The transform substitutes
# each variable z_j by a character sum with coefficients in Z[zeta_3]; the
# arithmetic is exact, and every coefficient of the result collapses back to
# a rational integer.

# %%
from zkmacwilliams import CodeR, RingR, char_dual_r, complete_we, mw_transform_complete, zeta_pow
from zkmacwilliams.ring import complete_we_of_words

R = RingR(3, (1, 0, 1))
print("elements by index u:", R.elements())
print("zeta_3^2 =", zeta_pow(3, 2), "(coefficients", zeta_pow(3, 2).coeffs, ")")

# %%
code = CodeR(R, 2, (((1, 0), (2, 1)),))
W = complete_we(code)
print(code.size(), "codewords")
print("W_C =", W)

# %%
transformed = mw_transform_complete(W, code.size(), R)
direct = complete_we_of_words(R, char_dual_r(code))
print("transform =", transformed)
print("direct    =", direct)
assert transformed == direct
