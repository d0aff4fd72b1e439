"""Walkthrough of the exact counting machinery.

Every quantity here is an exact integer; the same numbers are produced
by three unrelated routes (a recurrence table, Abel-type partial sums,
and brute-force process enumeration), which is the whole point.
"""

from parkfun import (
    abel_identity_check,
    defect_count_explicit,
    defect_count_recurrence,
    defect_distribution,
    enumerate_exhaustive,
    parking_function_count,
    tail_sum,
    tail_sum_alternating,
)

print("Defect counts cp(n, n, k): sequences of n drivers on n spaces")
print("that leave exactly k drivers unparked.\n")

print("n \\ k " + " ".join(f"{k:>10d}" for k in range(6)))
for n in range(1, 7):
    row = [defect_count_explicit(n, n, k) for k in range(n)]
    print(f"n={n:<3d} " + " ".join(f"{v:>10d}" for v in row))

print("\nThe first column is Pollak's closed form (n+1)^(n-1):")
for n in (3, 6, 9):
    print(f"  n={n}: cp={defect_count_explicit(n, n, 0)}, "
          f"formula={parking_function_count(n, n)}")

print("\nThree routes to cp(5, 7, 3):")
rec = defect_count_recurrence(5, 7, 3)
exp = defect_count_explicit(5, 7, 3)
enum = enumerate_exhaustive(5, 7).counts[3]
print(f"  recurrence table   {rec}")
print(f"  Abel partial sums  {exp}")
print(f"  brute enumeration  {enum}  (over 5**7 = {5**7} sequences)")
assert rec == exp == enum

print("\nTail counts S(n, m, k) = #sequences with at least k walkers,")
print("in the nonnegative-term form and the short alternating form:")
for k in range(4):
    s = tail_sum(6, 6, k)
    assert s == tail_sum_alternating(6, 6, k)
    print(f"  S(6, 6, {k}) = {s}")

print("\nThe tail sums are partial Abel sums; the full identity")
print("sum C(m,i) a (a+i)^(i-1) (b-i)^(m-i) = (a+b)^m holds exactly:")
print("  checked on a small grid:",
      all(abel_identity_check(a, b, m)
          for a in range(5) for b in range(5) for m in range(5)))

print("\nA full distribution, with exact probabilities:")
dist = defect_distribution(8, 8)
for k, (c, p) in enumerate(zip(dist.counts, dist.probabilities())):
    if c:
        print(f"  k={k}: count={c:>9d}  probability={p:.6f}")
print(f"  total = {sum(dist.counts)} = 8^8")
