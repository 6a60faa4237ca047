# %% [markdown]
# # Invariant polynomials and the Molien series
#
# Two routes to the dimension of degree-d invariants: the Molien average of
# 1/det(I - tA) and the average of symmetric power characters.

# %%
from taudesign.group import binary_icosahedral_group
from taudesign.invariants import (
    closed_form_icosahedral,
    hom_dimension,
    invariant_dimension,
    molien_series,
)

G = binary_icosahedral_group()
N = 60
molien = molien_series(G, N)
closed = closed_form_icosahedral(N)
chars = [invariant_dimension(G, d) for d in range(N + 1)]

print(" d  molien  closed  chars")
for d in range(N + 1):
    if molien[d] or closed[d] or chars[d]:
        print(f"{d:2d}  {molien[d]:6d}  {closed[d]:6d}  {chars[d]:5d}")
assert molien == closed == chars

# %% [markdown]
# Equivariant maps from S^(2k-1) to S^1.  They vanish for k = 2..5 because
# there are no invariants in degrees 2..10; at k = 6 the degree-12 invariant
# appears, which is why the section model stops at five summands.

# %%
for k in range(1, 8):
    print(k, hom_dimension(G, 2 * k - 1, 1))
