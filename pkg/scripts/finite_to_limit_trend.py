"""Errors of finite-N quantities against their scaled limits, and successive error ratios."""

from jackmoments import cauchymoments as cm
from jackmoments.jacobimoments import JacobiParams, inv_moment_finite, inv_moment_limit

Ns = (10, 20, 40, 80, 160)

lim = cm.charfn_limit(1, 2, 1.0).value
errs = [abs(cm.charfn_finite(N, 1, 2, 1.0 / N).value - lim) for N in Ns]
print("characteristic function, s=1 beta=2 t=1")
for N, e, prev in zip(Ns, errs, [None] + errs[:-1]):
    print(f"  N={N:>4} err={e:.3e}" + (f" ratio={prev / e:.3f}" if prev else ""))

a, b, beta = 3.0, 1.0, 2.0
for p in (1, 2):
    lim = inv_moment_limit(a, beta, p)
    errs = [abs(inv_moment_finite(JacobiParams(N, a, b, beta), p) / N ** (2 * p) - lim) for N in Ns]
    print(f"Jacobi inverse moment p={p}, a={a} b={b} beta={beta}, limit {lim:.12g}")
    for N, e, prev in zip(Ns, errs, [None] + errs[:-1]):
        print(f"  N={N:>4} err={e:.3e}" + (f" ratio={prev / e:.3f}" if prev else ""))
