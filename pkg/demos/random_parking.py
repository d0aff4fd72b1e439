"""Seeded simulation experiments: the process itself, Monte Carlo
sampling against exact probabilities, and cars-until-full runs.

Everything is reproducible: the generator is a documented SplitMix64
stream, so these printed numbers never change.
"""

import math

from parkfun import (
    cars_until_full,
    park,
    ratio_as_float,
    sample_empirical,
    tail_sum_alternating,
)
from parkfun.rng import sub_seed

print("One run of the process: 8 drivers, 6 spaces, choices spill right.")
choices = (3, 3, 1, 6, 3, 2, 5, 1)
out = park(6, choices)
for i, (c, s) in enumerate(zip(choices, out.assignment), start=1):
    where = f"parks at {s}" if s else "walks home"
    print(f"  driver {i} wants {c} -> {where}")
print(f"  defect = {out.defect}, occupied = {sorted(out.occupied)}\n")

n = m = 100
trials = 10 ** 5
emp = sample_empirical(n, m, trials, seed=1)
print(f"{trials} random assignments of {m} drivers to {n} spaces (seed 1):")
print("  k    empirical   exact")
denom = n ** m
for k in range(0, 16, 3):
    exact_p = ratio_as_float(
        tail_sum_alternating(n, n, k) - tail_sum_alternating(n, n, k + 1), denom)
    print(f"  {k:>2d}   {emp.counts[k] / trials:.5f}     {exact_p:.5f}")
mean_defect = sum(k * c for k, c in enumerate(emp.counts)) / trials
print(f"  mean defect = {mean_defect:.2f}; sqrt(n) scaling predicts "
      f"sqrt(pi n / 8) = {math.sqrt(math.pi * n / 8):.2f}\n")

print("Cars sent into a 50-space lot until it fills (10 seeded runs):")
runs = [cars_until_full(50, sub_seed(2024, i)) for i in range(10)]
print("  " + " ".join(str(r) for r in runs))
frac = sum(1 for i in range(1000)
           if cars_until_full(50, sub_seed(2024, i)) <= 100) / 1000
exact_p = ratio_as_float(
    tail_sum_alternating(50, 100, 50) - tail_sum_alternating(50, 100, 51),
    50 ** 100)
print(f"  fraction of 1000 runs full within 100 cars: {frac:.3f}")
print(f"  exact P(full after 100 cars):               {exact_p:.3f}")
