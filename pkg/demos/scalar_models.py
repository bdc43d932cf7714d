"""Scalar SI, SIS, and SIR models: closed forms, final size, and peak.

Walks through the three well-mixed models: the logistic SI curve, the SIS
endemic level and its dependence on beta/gamma, and the SIR final-size
equation whose root fixes how much of the population ever gets infected.
"""

import numpy as np

from netepi import si_closed_form, sir_rinf, sir_xmax, sis_closed_form

print("=== SI: logistic growth to full contagion ===")
beta = 1.0
times = np.array([0.0, 2.0, 4.0, 6.0, 8.0, 12.0])
for x0 in (0.01, 0.1, 0.5):
    xs = si_closed_form(x0, beta, times)
    row = "  ".join(f"{x:.4f}" for x in xs)
    print(f"x0 = {x0:4.2f}:  {row}")
print("every positive start converges to 1; larger seeds just get there sooner\n")

print("=== SIS: the endemic level is (beta - gamma) / beta ===")
for beta, gamma in [(1.0, 0.5), (1.0, 0.8), (0.5, 1.0)]:
    x_late = sis_closed_form(0.2, beta, gamma, 200.0)
    endemic = max(0.0, (beta - gamma) / beta)
    print(
        f"beta = {beta:3.1f}, gamma = {gamma:3.1f}: "
        f"x(200) = {x_late:.6f}, predicted endemic level {endemic:.6f}"
    )
print("below threshold (beta < gamma) the infection vanishes instead\n")

print("=== SIR: final size from the conserved-quantity equation ===")
s0, r0 = 0.95, 0.0
for ratio in (0.25, 1.0, 2.0, 4.0):
    r_inf = sir_rinf(s0, r0, ratio, 1.0)
    print(f"beta/gamma = {ratio:4.2f}: r_inf = {r_inf:.6f}")
print("a quarter ratio barely spreads; ratio 4 burns through nearly everyone\n")

print("=== SIR: peak infected fraction above threshold ===")
s0, x0 = 0.95, 0.05
for beta, gamma in [(2.0, 0.25), (1.0, 0.5)]:
    peak = sir_xmax(s0, x0, beta, gamma)
    print(f"beta = {beta:3.1f}, gamma = {gamma:4.2f}: x_max = {peak:.4f}")
