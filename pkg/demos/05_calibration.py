"""
Fitting discount curves
=======================

Grid search plus Nelder-Mead over (q, rho), and a ranking of exponential,
hyperbolic and free-q models.
"""

# %%
import numpy as np

from tempodisc.calibrate import compare_models, fit, synthetic_factors

n = np.arange(1, 21, dtype=float)
data = synthetic_factors(q=1.6, rho=0.12, n=n, noise=0.01, seed=1)
result = fit(data)
print(f"q={result.q:.4f} rho={result.rho:.5f} sse={result.sse:.3e} converged={result.converged}")

# %%
for r in compare_models(data):
    print(r.rank, r.family, f"{r.sse:.3e}", f"q={r.fit.q:.3f} rho={r.fit.rho:.4f}")

# %%
# Freeing p_m: the factor (1 + (q - 1) rho n)^(-p_m / (q - 1)) only pins down
# (q - 1) rho and p_m / (q - 1), so a whole ridge of triples fits exactly.
free = fit(synthetic_factors(2.5, 0.08, n, p_m=0.6), fit_p_m=True)
print(f"(q-1) rho = {(free.q - 1) * free.rho:.6f}  vs 0.12")
print(f"p_m/(q-1) = {free.p_m / (free.q - 1):.6f}  vs 0.4")
