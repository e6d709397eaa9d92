"""Every pair of small prefix sets, checked against the bounds.

Runs the exhaustive stream used by the test suite on a reduced size
(pass --full for words up to length 3, about half a minute).
"""

import sys
from collections import Counter

from semiflower import analyze
from semiflower.oracles import InstanceSpec, generate_instances

length = 3 if "--full" in sys.argv else 2
spec = InstanceSpec(alphabet_size=2, max_words=3, max_length=length, mode="exhaustive")
reports = [analyze(xh, xk) for xh, xk in generate_instances(spec)]
kinds = Counter(str(r.classification) for r in reports)
applicable = [r for r in reports if r.classification.applicable]

print(f"{len(reports)} pairs, words of length <= {length}")
for kind, n in sorted(kinds.items()):
    print(f"  {kind:<22} {n}")
print("plain inequality fails:", sum(r.hnp_holds is False for r in applicable))
print("bound exceeded:", sum(r.reduced_intersection > r.ghn_bound for r in applicable))
print("bound attained:", sum(r.reduced_intersection == r.ghn_bound for r in applicable))


def excess(r):
    return r.reduced_intersection - r.reduced_h * r.reduced_k


worst = max(applicable, key=excess)
if excess(worst) > 0:
    print(f"largest excess over rk~(H) rk~(K): H={sorted(worst.generators_h.words)} "
          f"K={sorted(worst.generators_k.words)} reduced rank {worst.reduced_intersection}, "
          f"bound {worst.ghn_bound}")
