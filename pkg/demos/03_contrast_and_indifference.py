"""
Why small payments look indifferent
===================================

If the late amount grows linearly, M = n m, its first-period time average
(1 + n X_m)^(1/n) stays close to 1 + X_m whenever X_m = m / W0 is small.
The contrast in decibels measures how close.
"""

# %%
import numpy as np

from tempodisc import contrast_db, distinguishability_horizon

n = np.arange(1, 101, dtype=float)
for x in (0.01, 0.05, 0.1, 1.0):
    c = contrast_db(x, n)
    print(f"X_m={x:<5} max over 100 periods: {c.max():.4f} dB   at n=10: {c[9]:.4f} dB")

# %%
# How long a discounter with a 0.65 dB resolution stays indifferent.
for x in (0.1, 0.3, 1.0):
    print(x, distinguishability_horizon(x, q=2, p_m=1, threshold_db=0.65))

# %%
# q only rescales time: contrast at (q, n) equals contrast at (2, (q - 1) n).
print(contrast_db(1.0, 20, q=1.5), contrast_db(1.0, 10, q=2))
