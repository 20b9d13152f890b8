"""
Which singularity does each length give?
========================================

Run the case analysis for every length and print the rule chain that
removes each candidate.  Axiom steps carry their source wording.
"""

from flopcycles import classify
from flopcycles.classifier import verify_all

for length in range(1, 7):
    report = classify(length, max_rank=12)
    print(f"length {length}: {len(report.candidates)} candidates -> {report.survivor}"
          f" (expected {report.expected}, unique top coefficient: {report.uniqueness_check})")

# Look closely at length 3.
report = classify(3)
for e in report.eliminations:
    print(e.candidate)
    for use in e.rules:
        print(f"   {use.rule.kind:<15} {use.rule.name}  {use.detail}")
    for p in e.premises:
        print(f"   premise: {p.name} = {p.computed} ({'ok' if p.passed else 'FAILED'})")

facts = verify_all(12)
print(f"{sum(f.passed for f in facts)} / {len(facts)} facts pass")
