"""Pairing against an ultrafilter is a lattice homomorphism; against a weaker filter it is not.

For each set size the script prints the first homomorphism law that breaks
when the join-of-meets formula is run on a proper filter that is not ultra.
"""

from ultraposets import los_hom_check
from ultraposets.order import bits

for m in range(1, 5):
    rep = los_hom_check(m)
    print(f"|S| = {m}: {rep.ultrafilters} ultrafilters, all homomorphisms: {rep.ultra_ok.ok}")
    for gen, w in rep.non_ultra[:2]:
        print(f"  filter generated by {list(bits(gen))}: breaks {w['law']} at x={w['x']}, y={w['y']}")
