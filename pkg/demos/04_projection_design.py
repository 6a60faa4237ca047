# %% [markdown]
# # A 12-point design for the projection onto the lowest summand
#
# One local operator at x0 = span(1, 0): evaluate the fiber coordinate,
# then insert the section l -> 2 pr_l(z, 0).  Its trace is 2.  Averaging over
# the binary icosahedral group turns it into the projection onto the
# 2-dimensional summand.

# %%
import numpy as np

from taudesign.design import (
    LocalDesignPair,
    coset_reduced_operator,
    local_operator,
    max_commutator,
    orbit_average,
    verify_tau_design,
)
from taudesign.group import X0, act_on_point, binary_icosahedral_group, coset_representatives, stabilizer

G = binary_icosahedral_group()
pair = LocalDesignPair.single(X0, 1.0)
L = local_operator(pair)
print("trace of the local operator:", np.round(np.trace(L), 12))
print("commutator norm before averaging: %.3f" % max_commutator(L, G))

# %%
tau = orbit_average(G, pair)
report = verify_tau_design(tau)
for line in report.lines():
    print(line)
print("||tau^2 - tau|| = %.2e" % report.idempotence)

# %% [markdown]
# The stabilizer of x0 fixes the local operator, so 12 coset
# representatives suffice: tau = (1/12) sum_i lambda_i o e_{x_i}.

# %%
stab = stabilizer(G, X0)
reps = coset_representatives(G, stab)
tau12 = coset_reduced_operator(G, stab, reps, pair)
print("12-point vs 120-term: %.2e" % np.linalg.norm(tau12 - tau))
for g in reps:
    print(np.round(act_on_point(g, X0).unit_rep, 4))

# %% [markdown]
# Without the trace normalization the average is c * id on the lowest summand.

# %%
print(verify_tau_design(orbit_average(G, LocalDesignPair.single(X0, 0.5))).deviations)
