"""Walk a small distributive lattice through its prime spectrum and back.

Run with ``python demos/spectrum_walkthrough.py``.
"""

from ultraposets import boolean, chain, counit, mod_spectrum, reconstruct_idl
from ultraposets.dot import to_dot
from ultraposets.order import bits


def show(name, D):
    res = mod_spectrum(D)
    M = res.spectrum
    print(f"{name}: {D.n} elements, {M.n} prime ideals")
    for k, x in enumerate(M.primes):
        print(f"  model {k}: prime ideal {sorted(x.elements)}")
    print(f"  spectrum order (x <= y iff x contains y): {list(M.carrier.covers())}")

    # each element p becomes the pair of model sets (B_p, O_p)
    c = counit(D, M)
    for p in range(D.n):
        pair = c.omega.pairs[c.hom(p)]
        print(f"  element {p} -> B = {list(bits(pair.down))}, O = {list(bits(pair.up))}")
    w = reconstruct_idl(D, M)
    print(f"  ideals recovered from closed downsets: {w.dom_size} of {w.cod_size}")
    print()


show("3-chain", chain(3))
show("square 2x2", boolean(2))

print("Hasse diagram of the 3-chain spectrum, as DOT:")
res = mod_spectrum(chain(3))
print(to_dot(res.spectrum.carrier, "spectrum", [str(sorted(x.elements)) for x in res.prime_table]))
