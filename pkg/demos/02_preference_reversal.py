"""
Preference reversal from time averages
======================================

M after n periods against 2M after n + 1 periods. With a = M / W0 the time
averages are (1 + a)^(1/n) and (1 + 2a)^(1/(n+1)); the early payment wins
at first and loses once the frequency ratio (n + 1) / n approaches one.
"""

# %%
from tempodisc import ChoiceProblem, ReversalScenario, crossing_point, decide, reversal_curves

for a in (0.2, 0.8, 1.2, 2.0):
    early, late = reversal_curves(ReversalScenario(a, horizon=6))
    winners = ["M" if e > l else "2M" for e, l in zip(early.values, late.values)]
    print(f"a={a:<4}  n*={crossing_point(a):.6f}  preferred at n=1..6: {' '.join(winners)}")

# %%
# The same-day choice and the one-period delay, through the decision rule.
print(decide(ChoiceProblem(wealth=1, m=1, big_m=2, p_m=1, p_big_m=1)).side)
print(decide(ChoiceProblem(wealth=1, m=1, big_m=2, p_m=1, p_big_m=0.5)).side)

# %%
# Generalised pairs: 3M with a two-period lag.
print(crossing_point(0.5, multiple=3, lag=2))
