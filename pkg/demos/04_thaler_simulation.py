"""
A simulated discounter in a prize-waiting experiment
====================================================

A discounter with $100k of wealth wins $250 or $3000 and states how much
they would need after 3 months, 1 year and 3 years. With hyperbolic
discounting (q = 2) the recovered per-period rate is the same at every
delay, and it grows with the prize. Each prize is anchored to the observed
one-year answer (one period is one year). The observed medians in
``thaler_experiment.json`` are compared through continuously compounded
rates.
"""

# %%
from pathlib import Path

from tempodisc.cli import load_thaler_config
from tempodisc.experiments import magnitude_effect, prize_rates, simulate_discounter

scenario, amounts = load_thaler_config(Path(__file__).with_name("thaler_experiment.json"))
rows = simulate_discounter(scenario, amounts)

print("prize  horizon    amount      rate     observed  observed rate")
for r in rows:
    obs = f"{r.observed:8.0f}  {r.observed_rate:6.2%}" if r.observed else ""
    print(f"{r.prize:5.0f}  {r.horizon_label:9}  {r.amount:9.2f}  {r.rate:7.4%}  {obs}")

# %%
print(magnitude_effect(prize_rates(rows)))
