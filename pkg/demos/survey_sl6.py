"""
Which nilpotent orbits of sl_6 are strange?

Each orbit is sent through the classifier.  Named constructions handle powers
of the regular nilpotent and the two flag families; a dimension argument
rules out (5,1); the rest are settled by conjugating a Frobenius parabolic
until it misses the centraliser.  Every verdict is then re-checked from its
stored witness alone.
"""

import sys

from strangeorbits.strange import summary, survey, verify_verdict

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
verdicts = survey(n, seed=1)
for v in verdicts:
    tag = v.witness["kind"] if v.witness else "-"
    print(f"{str(v.partition):>12}  {v.status:<10}  {tag:<20}  {v.reason}")
print(summary(verdicts))
print("all verdicts re-verified:", all(verify_verdict(v) for v in verdicts))
