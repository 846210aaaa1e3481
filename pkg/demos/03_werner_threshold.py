#!/usr/bin/env python3
"""Where weighted recombination starts to pay off for Werner states.

For the one-parameter family rho(a) = a |psi-><psi-| + (1-a) I/4 the
whole-pair gain under a computational measurement with weights
(mu0, mu1) changes sign exactly at mu0 - mu1 = a. The transition is
independent of the energy splittings, sitting below, at, or above the
entanglement threshold a = 1/3 depending only on the chosen bias.
"""

import numpy as np

from qbcap import QubitPairEnergies, capacity_gain, is_entangled, werner

# ---- settings --------------------------------------------------------
ENERGIES = QubitPairEnergies(eps_a=0.5, eps_b=0.3)
A_VALUES = np.linspace(0.05, 0.95, 10)
BIAS = 0.5                      # delta = mu0 - mu1 held fixed for the scan
# ----------------------------------------------------------------------

mu = ((1.0 + BIAS) / 2.0, (1.0 - BIAS) / 2.0)

print(f"fixed weights mu = ({mu[0]:.2f}, {mu[1]:.2f}), bias delta = {BIAS}")
print(f"{'a':>6s} {'big_f':>12s} {'small_f':>12s} {'entangled':>10s} {'gain?':>6s}")
for a in A_VALUES:
    rho = werner(float(a))
    report = capacity_gain(rho, ENERGIES, scheme="weighted", weights=mu)
    tag = "yes" if report.big_f > 1e-12 else "no"
    print(f"{a:6.2f} {report.big_f:12.6f} {report.small_f:12.6f}"
          f" {str(is_entangled(rho)):>10s} {tag:>6s}")

print()
print("sign change sits at a = delta =", BIAS)

# Pin the crossing down for one state by scanning the bias instead.
a = 0.4
print(f"\nfixed state a = {a}, scanning the bias:")
for delta in (0.30, 0.39, 0.40, 0.41, 0.50):
    mu = ((1.0 + delta) / 2.0, (1.0 - delta) / 2.0)
    report = capacity_gain(werner(a), ENERGIES, scheme="weighted", weights=mu)
    print(f"  delta={delta:.2f}  big_f={report.big_f:+.6e}")

# Entanglement is neither necessary nor sufficient for a positive gain:
# a separable state with a small bias threshold still gains, and an
# entangled one with a large threshold does not.
separable = werner(0.2)
entangled = werner(0.9)
mu = (0.65, 0.35)  # delta = 0.3
r_sep = capacity_gain(separable, ENERGIES, scheme="weighted", weights=mu)
r_ent = capacity_gain(entangled, ENERGIES, scheme="weighted", weights=mu)
print(f"\nseparable a=0.2, delta=0.3: big_f={r_sep.big_f:+.6f}"
      f" (entangled={is_entangled(separable)})")
print(f"entangled a=0.9, delta=0.3: big_f={r_ent.big_f:+.6f}"
      f" (entangled={is_entangled(entangled)})")
