# %% [markdown]
# # A finite model of the section space
#
# Sections of the tautological bundle are weight functions f with
# s(l) = f(u) u.  Bidegree (4, 5) polynomials in (u, conj u) give a
# 30-dimensional space splitting into summands of dimension 2, 4, 6, 8, 10.

# %%
import numpy as np

from taudesign import sections
from taudesign.group import binary_icosahedral_group, random_su2
from taudesign.invariants import char_sym_power

bases = sections.summand_bases()
print("summand dims:", [b.dim for b in bases])
B = sections.adapted_basis(bases)
print("condition number of the adapted basis: %.2f" % np.linalg.cond(B))

# %% [markdown]
# In the adapted basis every representation matrix is block diagonal.

# %%
g = random_su2(np.random.default_rng(0))
blocks = np.linalg.solve(B, sections.rep_matrix(g) @ B)
pattern = (np.abs(blocks) > 1e-10).astype(int)
for row in pattern:
    print("".join("#" if x else "." for x in row))

# %% [markdown]
# Block traces are the characters of S^1, S^3, ..., S^9.

# %%
G = binary_icosahedral_group()
h = G[17]
print(np.round(sections.summand_traces(h, bases), 6))
print(np.round([char_sym_power(h, 2 * k - 1) for k in range(1, 6)], 6))

# %% [markdown]
# Torus weights: all odd, as expected for S^(odd).

# %%
theta = 0.1
w = np.angle(sections.u1_weight_spectrum(theta)) / theta
print(sorted(np.round(w).astype(int).tolist()))
