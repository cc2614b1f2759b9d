"""On finite sets every ultrafilter is principal, and most of the theory collapses.

This script shows the collapse directly: ultrafilters found by brute force,
pairings that reduce to evaluation, and associativity holding with equality.
"""

import itertools

from ultraposets import CanonicalUltraposet, ModSpectrum, check_axioms, enumerate_ultrafilters, is_left_ultrafunctor, is_ultrafunctor
from ultraposets.order import boolean, chain, monotone_maps

for m in range(1, 5):
    found = enumerate_ultrafilters(m)
    print(f"{m} points: {len(found)} ultrafilters, principal at {[u.witness for u in found]}")

U = CanonicalUltraposet(chain(3))
print("\npairing on the 3-chain, family (1, 2):")
for u in enumerate_ultrafilters(2):
    print(f"  against {u!r}: {U.pair((1, 2), u)}")

rep = check_axioms(U)
print(f"\naxioms pass: {rep.passed}; associativity with equality: {rep.associative_with_equality}; probes: {rep.probes}")

# left ultrafunctors and plain ones coincide once every ultrafilter is principal
V = ModSpectrum(boolean(2))
gap = [
    phi.values
    for phi in monotone_maps(U.carrier, V.carrier)
    if bool(is_left_ultrafunctor(phi, U, V)) != bool(is_ultrafunctor(phi, U, V))
]
print(f"maps that are left but not plain ultrafunctors: {gap}")

families = list(itertools.product(range(U.n), repeat=2))
print(f"ultrapowers fixed: {all(U.ultrapower(p, u) == p for p in range(U.n) for u in enumerate_ultrafilters(3))}")
print(f"families of length 2 probed: {len(families)}")
