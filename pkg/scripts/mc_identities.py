"""Monte Carlo checks of the circle/Cauchy and Laguerre/Cauchy identities.

usage: python scripts/mc_identities.py [seed] [sweeps]
"""

import math
import sys

from jackmoments.oracles import ChainConfig, circle_cauchy_joint_moment, laguerre_cauchy_charfn

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
sweeps = int(sys.argv[2]) if len(sys.argv) > 2 else 20000
cfg = ChainConfig(n_samples=sweeps, burn_in=sweeps // 10, n_chains=64, seed=seed)

for args in ((2, 1, 2, 0.5), (3, 1, 1, 1)):
    c, y = circle_cauchy_joint_moment(*args, cfg)
    z = abs(c.value - y.value) / math.hypot(c.abs_error_estimate, y.abs_error_estimate)
    print(f"(N,s,beta,h)={args}: circle {c.value:.6g} +- {c.abs_error_estimate:.2g}, "
          f"Cauchy {y.value:.6g} +- {y.abs_error_estimate:.2g}, {z:.2f} SE")

for beta in (1, 2):
    for t in (0.5, 1.5):
        est, exact = laguerre_cauchy_charfn(3, 1, beta, t, cfg)
        z = abs(est.value - exact) / est.abs_error_estimate
        print(f"beta={beta} t={t}: Laguerre {est.value:.6g} +- {est.abs_error_estimate:.2g}, exact {exact:.6g}, {z:.2f} SE")
