"""
The q-exponential discount family
=================================

One parameter interpolates between exponential discounting (q -> 1) and
hyperbolic discounting (q = 2); larger q gives fatter tails.
"""

# %%
import numpy as np

from tempodisc import DiscountModel, q_discount_factor, hyperbolic_factor

n = np.arange(0, 51, 5, dtype=float)
rho = 0.1

print(" n    q=1      q=1.5    q=2      q=3")
for k in n:
    row = [q_discount_factor(DiscountModel(q=q, rho=rho), k) for q in (1, 1.5, 2, 3)]
    print(f"{k:3.0f}  " + "  ".join(f"{v:.5f}" for v in row))

# %%
# At q = 2 the factor is exactly the classic hyperbola 1 / (1 + rho n).
model = DiscountModel(q=2, rho=rho)
print(np.max(np.abs(q_discount_factor(model, n) - hyperbolic_factor(model, n))))

# %%
# Optional figure (needs matplotlib).
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    grid = np.linspace(0, 50, 501)
    fig, ax = plt.subplots()
    for q in (1.0, 1.5, 2.0, 3.0):
        ax.plot(grid, q_discount_factor(DiscountModel(q=q, rho=rho), grid), label=f"q={q:g}")
    ax.set_xlabel("delay n (periods)")
    ax.set_ylabel("discount factor")
    ax.legend()
    fig.savefig("q_exponential_family.png", dpi=120)
