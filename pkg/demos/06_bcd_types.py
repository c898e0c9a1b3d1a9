"""Manin matrices of orthogonal and symplectic type.

The idempotents B_n = A_n + Q_n/n and B~_n = A_n - Q~_n/n encode the
quadric and symplectic-form relations; their quadratic algebras, relation
shapes and inclusion lattices are summarized in scenario reports.
"""

import json

from maninalg.scenarios import bcd_report

for family, n in (("D", 2), ("B", 3), ("C", 2), ("C", 4), ("D", 4)):
    report = bcd_report(family, n)
    print(f"== type {family}, n = {n}")
    print(json.dumps(report.to_json(), indent=2, sort_keys=True, default=str))
    print()
