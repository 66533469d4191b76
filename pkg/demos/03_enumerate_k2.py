"""
Enumerating the ambiguous numbers (a + 2*sqrt3)/c
=================================================

Candidates need a^2 < 12 and c | a^2 - 12. Candidates that are really
numbers with b = 1 written with b = 2 (e.g. 2*sqrt3/6 = sqrt3/3) are dropped.
"""

from collections import defaultdict

from picard import enumerate_ambiguous, render

res = enumerate_ambiguous(2)
print("members:", len(res.members))

by_a = defaultdict(list)
for q in res.members:
    by_a[q.a].append(q.c)
for a in sorted(by_a):
    print(f"a = {a:>2}: c in {sorted(by_a[a])}")

print()
print("excluded:")
for e in res.excluded:
    print(f"  {render(e.candidate):>14}  -> {render(e.reduced):<10} {e.reason}")
