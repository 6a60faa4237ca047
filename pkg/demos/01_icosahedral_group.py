# %% [markdown]
# # The binary icosahedral group
#
# Three 2x2 matrices built from a fifth root of unity generate a finite
# subgroup of SU(2) with 120 elements.

# %%
import numpy as np

from taudesign.group import (
    X0,
    binary_icosahedral_group,
    coset_representatives,
    icosahedral_generators,
    orbit,
    stabilizer,
)

np.set_printoptions(precision=4, suppress=True)

S, T, U = icosahedral_generators(eps_index=1)
print("S =\n", S.matrix)
print("T =\n", T.matrix)
print("U =\n", U.matrix)

# %%
G = binary_icosahedral_group(1)
print("order:", G.order)

# element orders: 1, 2, 3, 4, 5, 6, 10
orders = {}
for g in G:
    m, n = g.matrix, 1
    while not np.allclose(m, np.eye(2)):
        m, n = m @ g.matrix, n + 1
    orders[n] = orders.get(n, 0) + 1
print("element orders:", dict(sorted(orders.items())))

# %% [markdown]
# The line x0 = span(1, 0) is fixed by the diagonal elements, a cyclic group
# of order 10.  Its orbit is 12 points, the vertices of an icosahedron on the
# Riemann sphere.

# %%
stab = stabilizer(G, X0)
reps = coset_representatives(G, stab)
print("stabilizer order:", stab.order, " cosets:", len(reps))

pts = orbit(G, X0)
for p in pts:
    u = p.unit_rep
    # stereographic image z = u2 / u1, infinity for the south pole
    z = u[1] / u[0] if abs(u[0]) > 1e-12 else np.inf
    print(np.round(z, 4))
