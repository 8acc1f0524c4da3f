"""Scaled joint moment at s = 1, h = 1/2 for beta in {1, 2, 4}, three ways."""

import math

from jackmoments import cauchymoments as cm

CLOSED = {
    1: (3 * math.e**4 - 103) / (768 * math.pi),
    2: (math.e**2 - 5) / (4 * math.pi),
    4: (math.e - 2) / math.sqrt(math.pi),
}

print(f"{'beta':>5} {'series (h -> 1/2)':>22} {'2F2 form':>22} {'closed form':>22}")
for beta, closed in CLOSED.items():
    series = cm.joint_moment_limit(1, beta, 0.5).value
    f22 = cm.joint_moment_s1_half(beta)
    print(f"{beta:>5} {series:>22.15g} {f22:>22.15g} {closed:>22.15g}")
