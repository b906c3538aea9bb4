"""
Counting structured MDS matrices
================================

Orthogonal MDS matrices of order 3 and 4 are enumerated directly from their
parametrization.  The semi-involutory and semi-orthogonal classes are counted
through their representatives and scaled up.
"""

import time

from mdslab import enumerate as E
from mdslab.field import GF

for m in range(3, 9):
    t = time.perf_counter()
    n = E.count_orthogonal_mds_3(GF(m))
    q = 2**m
    print(f"3x3 orthogonal MDS over GF(2^{m}): {n:>9}  formula {(q - 2) * (q - 3) * (q - 4):>9}  ({time.perf_counter() - t:.2f}s)")

F = GF(3)
print("4x4 orthogonal MDS over GF(8):", E.count_orthogonal_mds_4(F))

c = E.count_representatives(F, 4)
print("4x4 representatives over GF(8):", c)
for cls in ("involutory_mds", "semi_involutory_mds", "semi_orthogonal_mds"):
    rep = E.count_report(F, cls, 4, representative_count=c["semi_orthogonal" if "orth" in cls else "semi_involutory"])
    print(f"  {cls:22s} {rep.enumerated}  ({rep.method.value})")

# larger searches are refused unless asked for explicitly
try:
    E.count_representatives(GF(4), 4)
except E.BudgetExceededError as exc:
    print("refused:", exc)
