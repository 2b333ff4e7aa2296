# %% [markdown]
# # MacWilliams identities over Z_k
#
# A code over Z_k is any additive subgroup of Z_k^n. Its dual is found by
# scanning Z_k^n, and the weight enumerator of the dual can be predicted from
# the code's own enumerator alone.

# %%
from zkmacwilliams import CodeZk, dual_code, hamming_weight, hamming_we, mw_transform_hamming

code = CodeZk(4, 3, ((2, 1, 3), (0, 2, 2)))  # Z_4 is not a field; this code is not free
words = code.codewords()
print(len(words), "codewords:", words)
print("weights:", [hamming_weight(w) for w in words])

# %% The enumerator of C and the one predicted for its dual
W = hamming_we(code)
predicted = mw_transform_hamming(W, len(words), code.n, code.k)
actual = hamming_we(dual_code(code))
print("W_C      =", W)
print("predicted=", predicted)
print("actual   =", actual)
assert predicted == actual

# %% [markdown]
# ## m codes at once
#
# Stack one codeword from each of m codes into an m x n matrix and count its
# nonzero columns. The same transform works with k replaced by k^m.

# %%
from zkmacwilliams import effective_length_we, mw_transform_mtuple

codes = [CodeZk(3, 3, ((1, 2, 0),)), CodeZk(3, 3, ((0, 1, 1), (1, 0, 0)))]
size = codes[0].size() * codes[1].size()
W2 = effective_length_we(codes)
print("W^(2)            =", W2)
print("transform        =", mw_transform_mtuple(W2, size, 3, 3, 2))
print("duals, directly  =", effective_length_we([dual_code(c) for c in codes]))
