"""Centralized numerical tolerances.

Double precision on problems no larger than 8x8 leaves at least four digits
of headroom over these thresholds.
"""

# Normalization / unitarity checks.
EPS_NORM = 1e-12

# Eigenvalue positivity slack for reduced density matrices.
EPS_EIG = 1e-10

# Matrix / state reconstruction agreement.
EPS_MATCH = 1e-10

# Below this modulus an amplitude or singular value counts as zero.
EPS_ZERO = 1e-12

# Singular-value gap under which a two-qubit state is treated as maximally
# entangled and the canonical gauge fix is applied automatically.
EPS_DEGENERATE = 1e-9

# Widened degeneracy window used along trajectories, with a 2x exit
# threshold for hysteresis so the gauge mode does not flap.
EPS_TRAJ_DEGENERATE = 1e-6
EPS_TRAJ_DEGENERATE_EXIT = 2e-6

# ZYZ gimbal handling: below this sine/cosine magnitude the z-rotations
# cannot be split between the two z factors and a convention applies.
# Tight enough that folding all phase into phi keeps reconstruction
# within EPS_MATCH.
EPS_POLE = 1e-12

# Frame latitude under which the three-qubit alpha extraction treats a
# local unitary as z-only and routes its phase into the core alphas.
EPS_ALPHA_POLE = 1e-9
