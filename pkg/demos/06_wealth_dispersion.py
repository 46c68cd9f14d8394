"""
Discount rates across a Pareto-wealth population
================================================

The per-period rate (m - m0) / (W0 + m0) depends on wealth, so a power-law
wealth distribution spreads the same answer over a wide range of rates.
"""

# %%
from tempodisc.experiments import ParetoWealth, population_dispersion

for exponent in (1.2, 1.5, 3.0):
    s = population_dispersion(ParetoWealth(exponent, 1e4, 10**5, seed=0), m0=0, m=100)
    print(
        f"exponent={exponent}: median={s.median:.5f} IQR={s.iqr:.5f} "
        f"rate at mean wealth={s.mean_wealth_rate:.5f}"
    )
