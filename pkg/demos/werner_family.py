"""
Walk the Werner family w |Phi+><Phi+| + (1-w) I/4 from the maximally
mixed state to the Bell state, comparing the closed-form fidelity with
the brute-force sphere optimizer, and watching the geometric quantities
grow with w.
"""

import numpy as np

from buresdiscord import (
    classical_correlation_symmetric,
    max_fidelity_bruteforce,
    symmetric_ccs,
    symmetric_fidelity,
    werner_params,
    x_state,
)

print("    w     F(closed)    F(brute)      |diff|    discord     C_Bu")
for w in np.linspace(0.0, 1.0, 11):
    params = werner_params(w)
    closed, branch = symmetric_fidelity(params)
    brute = max_fidelity_bruteforce(x_state(params))
    c_bu, _ = classical_correlation_symmetric(params)
    print(f"  {w:4.2f}   {closed.fidelity:.8f}  {brute.fidelity:.8f}"
          f"   {abs(closed.fidelity - brute.fidelity):.1e}"
          f"  {closed.discord:.8f}  {c_bu:.8f}")

# Every Werner state sits exactly on the case boundary |a-b| = |x|+|y|
# with xy = 0, so every measurement axis is equally good: the brute-force
# pass tags the whole sphere as optimal.
params = werner_params(0.7)
closed, branch = symmetric_fidelity(params)
brute = max_fidelity_bruteforce(x_state(params))
print()
print("w = 0.7 case analysis:", branch.case, "/", branch.optimal_family)
print("brute-force family tag:", brute.degenerate_family)

# The Bell-diagonal frame of a Werner state has full-support spectrum,
# outside the two printed closest-state families, so the CCS falls back
# to the measurement-projector construction (flagged when r was given).
chi = symmetric_ccs(params, r=0.5)
print("CCS branch:", chi.branch, "| r ignored:", chi.branch_not_printed,
      "| fidelity check:", f"{chi.fidelity_check:.10f}")
