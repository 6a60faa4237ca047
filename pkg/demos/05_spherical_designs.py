# %% [markdown]
# # Spherical t-designs in the same framework
#
# Point evaluation and equal weights 1/|X| against the normalized sphere
# integral.  The icosahedron is a 5-design but not a 6-design.

# %%
import numpy as np

from taudesign.spherical import (
    SpherePointSet,
    as_tau_design,
    design_deviations,
    icosahedron_vertices,
    strength,
)

X = icosahedron_vertices()
print("icosahedron strength:", strength(X))
for t in (5, 6):
    ok, res = as_tau_design(X, t)
    print(f"t={t}: design={ok}, worst residual {res:.2e}")

worst = sorted(design_deviations(X, 6).items(), key=lambda kv: -kv[1])[:3]
print("largest degree-6 defects:", worst)

# %%
for name, pts in {
    "octahedron": np.vstack([np.eye(3), -np.eye(3)]),
    "cube": np.array([[a, b, c] for a in (1, -1) for b in (1, -1) for c in (1, -1)]),
    "tetrahedron": np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]),
}.items():
    print(name, strength(SpherePointSet.normalized(pts)))
