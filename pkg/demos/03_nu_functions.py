# %% [markdown]
# # nu-functions of Construction A_k lattices
#
# A_k(C) collects the integer vectors that reduce mod k into C. Its nu-function
# counts lattice points by L1 norm. Three routes give it: an exact series, a
# brute-force scan, and the rational closed form.

# %%
import numpy as np

from zkmacwilliams import CodeZk, LatticeAk, brute_force_nu, dual_nu_eval, lattice_det, nu_eval_closed, nu_series

lat = LatticeAk.from_code(CodeZk(3, 2, ((1, 1),)))
series = nu_series(lat, 12)
print("series     :", series.to_list())
print("brute force:", brute_force_nu(lat, 12).to_list())
print("det        :", lattice_det(lat))

# %% The closed form against the truncated series, for small z
zs = np.linspace(0.0, 0.4, 5)
long = nu_series(lat, 200)
for z in zs:
    print(f"z={z:.2f}  closed={nu_eval_closed(lat, z):.12f}  series={long(z):.12f}")

# %% The dual lattice is (1/k) A_k(C-dual); evaluating it means z -> z^(1/k)
for z in (0.1, 0.3, 0.5):
    print(f"nu_dual({z}) = {dual_nu_eval(lat, z):.10f}")
