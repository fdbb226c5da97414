"""
The verdict suite
=================

Every claim in the built-in catalog is a finite statement checked by
exhaustive computation: subgroup lattices are enumerated outright, corpus
pairs are classified, and the arithmetic identities are tested at every
vertex. Run time for the whole suite is a few seconds.
"""

import time

from symclass import CLAIM_DESCRIPTIONS, verify_all_claims

started = time.perf_counter()
for verdict in verify_all_claims():
    print(f"{verdict.claim:6} {verdict.status:9} {CLAIM_DESCRIPTIONS[verdict.claim]}")
print(f"\nsuite finished in {time.perf_counter() - started:.1f}s")
