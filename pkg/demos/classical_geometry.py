"""
The symmetric subfamily (equal outer and equal inner diagonal entries)
is locally unitarily equivalent to a Bell-diagonal state.  In that frame
the geometric classical correlation and the closest classical states are
explicit: this script performs the transport, builds a one-parameter
family of closest states, and checks the classical correlation against a
direct Bures distance to the product of the marginals.
"""

import numpy as np

from buresdiscord import (
    XStateParams,
    bd_state,
    bd_transport,
    bures_distance_sq,
    classical_correlation_symmetric,
    fidelity,
    local_unitary,
    symmetric_ccs,
    symmetric_fidelity,
    x_state,
)

params = XStateParams(a=0.3, b=0.2, c=0.2, d=0.3, x=0.2, y=0.1)
rho = x_state(params)

# --- transport into the Bell-diagonal frame ----------------------------
t = bd_transport(params)
rho_bd = local_unitary(rho, t.u_a, t.u_b)
print("Bell-diagonal frame correlation triple c' =", np.round(t.c, 12))
print("spectrum in that frame p' =", np.round(t.probs, 12))
print("frame reached exactly:",
      np.abs(rho_bd - bd_state(t.c)).max() < 1e-12)
print("optimal Pauli index m =", t.m_opt, "| branch:", t.branch,
      "| mixing weight q =", f"{t.q[t.m_opt - 1]:.12f}")

# --- a one-parameter family of closest classical states ----------------
# On the rank-deficient branches the closest state is not unique: every
# r in [-1, 1] gives a distinct classical state at the same fidelity.
closed, _ = symmetric_fidelity(params)
print()
print(f"closed-form fidelity {closed.fidelity:.12f},"
      f" discord {closed.discord:.12f}")
for r in (-1.0, -0.3, 0.4, 1.0):
    chi = symmetric_ccs(params, r=r)
    print(f"  r = {r:+.1f}: fidelity(rho, chi) ="
          f" {fidelity(rho, chi.state):.12f}")

chi_a = symmetric_ccs(params, r=-1.0).state
chi_b = symmetric_ccs(params, r=1.0).state
print("family members differ:", np.abs(chi_a - chi_b).max() > 1e-3)

# --- classical correlation as a distance to the uncorrelated hull ------
# For this family the nearest uncorrelated state is the maximally mixed
# one, so the correlation equals the Bures distance (squared) between the
# transported state and I/4.
c_bu, product = classical_correlation_symmetric(params)
direct = bures_distance_sq(rho_bd, np.eye(4) / 4.0)
print()
print(f"classical correlation C = {c_bu:.12f}")
print(f"d_B^2(transported, I/4) = {direct:.12f}")
print("product state returned:", np.allclose(product, np.eye(4) / 4.0))

# --- landmarks ----------------------------------------------------------
bell = XStateParams(a=0.5, b=0.0, c=0.0, d=0.5, x=0.0, y=0.5)
c_bell, _ = classical_correlation_symmetric(bell)
print()
print(f"Bell state: C = {c_bell:.12f} (maximal)")
mixed = XStateParams(a=0.25, b=0.25, c=0.25, d=0.25, x=0.0, y=0.0)
c_mixed, _ = classical_correlation_symmetric(mixed)
print(f"maximally mixed: C = {c_mixed:.12f}")
