"""Verification suites over the generated corpus, collected into a deterministic report."""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from .axioms import check_axioms, hom_poset, is_left_ultrafunctor, is_right_ultrafunctor, is_ultrafunctor
from .beta import (
    UltraFamily,
    beta,
    delta_family,
    enumerate_ultrafilters,
    extend_fip,
    gamma,
    has_fip,
    kleisli_pair,
    pushforward,
)
from .corpus import DEFAULT_MAX_SIZE, lattice_corpus, ultraposet_corpus
from .duality import (
    counit,
    duality_on_homs,
    eta,
    frame_hom_bijection,
    is_zero_dimensional,
    los_hom_check,
    mod_spectrum,
    priestley_check,
    pt_bijection,
    pt_on_frame_hom,
    reconstruct_idl,
    stone_check,
    strict_assoc_check,
    triangle_identities,
    verify_iso,
)
from .errors import TheoremViolation
from .order import (
    bits,
    boolean,
    chain,
    ideal_lattice,
    ideals,
    ideal_is_meet_of_primes,
    lattice_homs,
    monotone_maps,
    prime_separation,
    two,
)
from .report import to_jsonable
from .structures import DiscreteUltraposet, ModSpectrum, canonical_two
from .topology import clc, clcd, cld, closed_sets, primitive_pairs

#: largest lattices paired in the hom-set comparison
DUALITY_LATTICE_CAP = 8
#: the adjunction's hom-bijection is run on carriers and lattices up to these sizes
ADJUNCTION_CARRIER_CAP = 3
ADJUNCTION_LATTICE_CAP = 6
#: the closed-set collapse is checked on carriers up to this size
POWERSET_CHECK_CAP = 10

SUITES = ("axioms", "monad", "los", "galois", "duality", "zero-dim", "appendix")


@dataclass
class Entry:
    name: str
    ok: bool
    witness: object = None
    probes: int = 0
    millis: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "witness": to_jsonable(self.witness),
            "probes": self.probes,
        }
        if timings:
            out["millis"] = round(self.millis, 1)
        return out


@dataclass
class DualityReport:
    config: dict
    entries: list[Entry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def first_failure(self) -> Entry | None:
        return next((e for e in self.entries if not e.ok), None)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "config": self.config,
            "status": "pass" if self.ok else "fail",
            "entries": [e.to_dict(timings) for e in self.entries],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True)


class _Tally:
    """Accumulates one entry: first failure witness, probe count, elapsed time."""

    def __init__(self, name: str):
        self.name = name
        self.ok = True
        self.witness = None
        self.probes = 0
        self.start = time.perf_counter()

    def fail(self, witness):
        if self.ok:
            self.ok = False
            self.witness = witness

    def check(self, cond: bool, witness, probes: int = 1):
        self.probes += probes
        if not cond:
            self.fail(witness)

    def entry(self, witness=None) -> Entry:
        w = self.witness if not self.ok else witness
        return Entry(self.name, self.ok, w, self.probes, 1000 * (time.perf_counter() - self.start))


def _guard(tally: _Tally, label, fn):
    """Run ``fn``; a theorem violation becomes a failure of ``tally``."""
    try:
        return fn()
    except TheoremViolation as e:
        tally.fail({"item": label, "error": str(e), "witness": to_jsonable(e.witness)})
        return None


# ---------------------------------------------------------------------------


def suite_axioms(max_size: int, max_s: int = 3, max_t: int = 2, max_w: int = 3) -> list[Entry]:
    names = ("unity", "lax_associativity", "strict_associativity", "locality", "monotonicity", "trivial_ultrapowers")
    tallies = {n: _Tally(f"axioms.{n}") for n in names}
    items = ultraposet_corpus(max_size)
    total = 0
    for it in items:
        rep = check_axioms(it.ultraposet, max_s, max_t, max_w)
        total += rep.probes
        for n in names:
            c = getattr(rep, n)
            tallies[n].check(c.ok, {"item": it.name, "witness": c.witness})
    # check_axioms counts probes across all laws at once
    out = [tallies[n].entry({"items": len(items), "probes_all_laws": total}) for n in names]

    t = _Tally("collapse.closed_sets_are_powerset")
    small = [it for it in items if it.ultraposet.n <= POWERSET_CHECK_CAP]
    for it in small:
        U = it.ultraposet
        t.check(closed_sets(U) == list(range(1 << U.n)), it.name)
    out.append(t.entry({"items": len(small)}))

    t = _Tally("collapse.ultrafunctor_predicates_agree")
    tiny = [it for it in items if it.ultraposet.n <= 4]
    for a, b in itertools.product(tiny[:12], repeat=2):
        U, V = a.ultraposet, b.ultraposet
        for phi in monotone_maps(U.carrier, V.carrier):
            res = (is_left_ultrafunctor(phi, U, V).ok, is_right_ultrafunctor(phi, U, V).ok, is_ultrafunctor(phi, U, V).ok)
            t.check(res == (True, True, True), {"dom": a.name, "cod": b.name, "map": list(phi.values)})
    out.append(t.entry())

    t = _Tally("collapse.homs_to_two_match_closed_sets")
    two_ = canonical_two()
    for it in tiny:
        U = it.ultraposet
        left = hom_poset("left", U, two_)
        right = hom_poset("right", U, two_)
        zeros = sorted(m.preimage(1) for m in left.elements)
        ones = sorted(m.preimage(2) for m in right.elements)
        t.check(zeros == sorted(clc(U)) and ones == sorted(cld(U)), it.name)
    out.append(t.entry())
    return out


def suite_monad(max_carrier: int = 3) -> list[Entry]:
    t_id = _Tally("monad.kleisli_identity")
    t_assoc = _Tally("monad.kleisli_associativity")
    t_push = _Tally("monad.pushforward_is_kleisli")
    t_gamma = _Tally("monad.multiplication")
    sizes = range(1, max_carrier + 1)
    for m in sizes:
        for nu in beta(m):
            t_id.check(kleisli_pair(delta_family(m), nu) == nu, {"m": m, "nu": nu.witness})
            t_gamma.check(gamma(nu, m) == kleisli_pair(UltraFamily(m, beta(m)), nu), {"m": m})
        for k in sizes:
            for choice in itertools.product(beta(m), repeat=k):
                fam = UltraFamily(m, choice)
                for t in range(k):
                    t_id.check(kleisli_pair(fam, beta(k)[t]) == fam[t], {"family": [u.witness for u in choice], "t": t})
    for s, u, r in itertools.product(sizes, repeat=3):
        for lam in itertools.product(beta(s), repeat=u):
            L = UltraFamily(s, lam)
            for mu in itertools.product(beta(u), repeat=r):
                Mu = UltraFamily(u, mu)
                inner = kleisli_pair(L, Mu)
                for nu in beta(r):
                    t_assoc.check(
                        kleisli_pair(inner, nu) == kleisli_pair(L, kleisli_pair(Mu, nu)),
                        {"lambda": [x.witness for x in lam], "mu": [x.witness for x in mu], "nu": nu.witness},
                    )
    for s, n in itertools.product(sizes, repeat=2):
        for i in itertools.product(range(n), repeat=s):
            delta_i = UltraFamily(n, tuple(beta(n)[x] for x in i))
            for nu in beta(s):
                t_push.check(pushforward(i, nu, n) == kleisli_pair(delta_i, nu), {"i": list(i), "nu": nu.witness})
    t_card = _Tally("monad.beta_cardinality")
    for m in range(0, 5):
        found = enumerate_ultrafilters(m)
        t_card.check(len(found) == m, {"m": m, "found": len(found)})
    return [t_id.entry(), t_assoc.entry(), t_push.entry(), t_gamma.entry(), t_card.entry()]


def suite_los(max_size: int) -> list[Entry]:
    t_hom = _Tally("los.ultra_pairing_is_hom")
    t_bad = _Tally("los.non_ultra_filters_fail")
    examples = {}
    for m in range(1, 5):
        r = los_hom_check(m)
        t_hom.check(r.ultra_ok.ok, {"size": m, "witness": r.ultra_ok.witness}, r.ultra_ok.probes)
        for gen, w in r.non_ultra:
            t_bad.check(w is not None, {"size": m, "generator": list(bits(gen))})
        if r.non_ultra:
            examples[m] = r.to_dict()["non_ultra_filters"][0]
    t_mod = _Tally("los.spectrum_closed_in_presheaf")
    for i, D in enumerate(lattice_corpus(max_size)):
        res = _guard(t_mod, i, lambda: mod_spectrum(D))
        if res is not None:
            t_mod.probes += res.probes
    return [t_hom.entry(), t_bad.entry({"first_violation_per_size": examples}), t_mod.entry()]


def suite_galois(max_size: int) -> list[Entry]:
    t_cnt = _Tally("reconstruction.counit_iso")
    t_idl = _Tally("reconstruction.ideals_iso_clc_op")
    t_card = _Tally("reconstruction.cardinalities")
    t_prim = _Tally("reconstruction.primitive_pairs")
    t_sep = _Tally("reconstruction.clc_separation")
    counits, idls = [], []
    for i, D in enumerate(lattice_corpus(max_size)):
        M = ModSpectrum(D)
        c = _guard(t_cnt, i, lambda: counit(D, M))
        if c is not None:
            # re-check the recorded bijection independently of how it was found
            _guard(t_cnt, i, lambda: verify_iso("recheck", "covariant", D, c.omega.lattice, c.witness.bijection))
            counits.append({"lattice": i, "bijection": list(c.witness.bijection)})
            t_cnt.probes += D.n
        w = _guard(t_idl, i, lambda: reconstruct_idl(D, M))
        if w is not None:
            idls.append({"lattice": i, "bijection": list(w.bijection)})
            t_idl.probes += w.dom_size
        n_clcd, n_clc, n_idl = len(clcd(M)), len(clc(M)), len(ideals(D))
        t_card.check(n_clcd == D.n and n_clc == n_idl, {"lattice": i, "clcd": n_clcd, "D": D.n, "clc": n_clc, "idl": n_idl})
        _guard(t_prim, i, lambda: primitive_pairs(D, M))
        t_prim.probes += D.n * D.n
        for K in clc(M):
            for x in range(M.n):
                if K >> x & 1:
                    continue
                ok = any(K & ~M.B(p) == 0 and M.O(p) >> x & 1 for p in range(D.n))
                t_sep.check(ok, {"lattice": i, "K": list(bits(K)), "x": x})
            meet = M.carrier.full
            for p in range(D.n):
                if K & ~M.B(p) == 0:
                    meet &= M.B(p)
            t_sep.check(meet == K, {"lattice": i, "K": list(bits(K))})
    return [
        t_cnt.entry(counits),
        t_idl.entry(idls),
        t_card.entry(),
        t_prim.entry(),
        t_sep.entry(),
    ]


def suite_duality(max_size: int) -> list[Entry]:
    lattices = lattice_corpus(max_size)
    spectra = [ModSpectrum(D) for D in lattices]
    small = [i for i, D in enumerate(lattices) if D.n <= DUALITY_LATTICE_CAP]

    t_hom = _Tally("duality.lattice_homs_vs_ultrafunctors")
    counts = []
    for i, j in itertools.product(small, repeat=2):
        c = _guard(t_hom, (i, j), lambda: duality_on_homs(lattices[i], lattices[j], spectra[i], spectra[j]))
        if c is not None:
            t_hom.check(c.ok, {"C": i, "D": j, "witness": c.witness}, c.probes)
            counts.append(c.witness.get("count", -1) if c.ok else -1)
    out = [t_hom.entry({"pairs": len(counts), "total_homs": sum(counts)})]

    t_pt = _Tally("duality.points_are_primes")
    for i, D in enumerate(lattices):
        c = pt_bijection(D, spectra[i])
        t_pt.check(c.ok, {"lattice": i, "witness": c.witness}, c.probes)
    out.append(t_pt.entry())

    t_ptm = _Tally("duality.pt_on_frame_homs")
    tiny = [i for i in small if lattices[i].n <= 5]
    for i, j in itertools.product(tiny, repeat=2):
        D, C = lattices[i], lattices[j]
        for g in lattice_homs(ideal_lattice(D), ideal_lattice(C)):
            t_ptm.probes += 1
            _guard(t_ptm, (i, j), lambda: pt_on_frame_hom(g, spectra[j], spectra[i]))
    out.append(t_ptm.entry())

    t_tri = _Tally("duality.triangle_identities")
    for i in small:
        c = _guard(t_tri, i, lambda: triangle_identities(D=lattices[i]))
        if c is not None:
            t_tri.check(c.ok, {"lattice": i, "witness": c.witness})
    for it in ultraposet_corpus(max_size):
        if it.ultraposet.n <= ADJUNCTION_CARRIER_CAP + 1:
            c = _guard(t_tri, it.name, lambda: triangle_identities(U=it.ultraposet))
            if c is not None:
                t_tri.check(c.ok, {"item": it.name, "witness": c.witness})
    out.append(t_tri.entry())

    t_fr = _Tally("duality.left_maps_vs_frame_homs")
    carriers = [it for it in ultraposet_corpus(max_size) if 1 <= it.ultraposet.n <= ADJUNCTION_CARRIER_CAP]
    for it in carriers:
        for i, D in enumerate(lattices):
            if D.n > ADJUNCTION_LATTICE_CAP:
                continue
            c = _guard(t_fr, (it.name, i), lambda: frame_hom_bijection(it.ultraposet, D))
            if c is not None:
                t_fr.check(c.ok, {"item": it.name, "lattice": i, "witness": c.witness}, c.probes)
    out.append(t_fr.entry())
    return out


def suite_zero_dim(max_size: int) -> list[Entry]:
    from .duality import omega_u

    t_zd = _Tally("zero_dim.every_item_zero_dimensional")
    t_eta = _Tally("zero_dim.eta_iso")
    t_sa = _Tally("zero_dim.strict_associativity")
    t_pr = _Tally("zero_dim.priestley_agrees")
    for it in ultraposet_corpus(max_size):
        U = it.ultraposet
        zd = is_zero_dimensional(U)
        t_zd.check(zd.ok, {"item": it.name, "pair": zd.witness}, zd.probes)
        sa = _guard(t_sa, it.name, lambda: strict_assoc_check(U))
        if sa is not None:
            t_sa.check(sa.ok, {"item": it.name, "witness": sa.witness}, sa.probes)
        pr = _guard(t_pr, it.name, lambda: priestley_check(U))
        if pr is not None:
            t_pr.check(pr.ok, {"item": it.name, "pair": pr.witness})
        e = _guard(t_eta, it.name, lambda: eta(U))
        if e is not None:
            t_eta.check(e.iso, {"item": it.name, "values": list(e.map.values)})
    out = [t_zd.entry(), t_eta.entry(), t_sa.entry(), t_pr.entry()]

    t_st = _Tally("zero_dim.stone_agreement")
    named = [("2", two()), ("2^2", boolean(2)), ("2^3", boolean(3))] + [(f"chain{n}", chain(n)) for n in range(3, 7)]
    expected = {"2": True, "2^2": True, "2^3": True}
    verdicts = {}
    for name, D in named:
        res = _guard(t_st, name, lambda: stone_check(D))
        if res is not None:
            verdicts[name] = res[0]
            t_st.check(res[0] == expected.get(name, False), {"lattice": name, "result": list(res)})
    booleans = 0
    for i, D in enumerate(lattice_corpus(max_size)):
        res = _guard(t_st, i, lambda: stone_check(D))
        if res is not None:
            booleans += res[0]
    out.append(t_st.entry({"named": verdicts, "boolean_in_corpus": booleans}))

    t_om = _Tally("zero_dim.omega_u_of_discrete")
    for n in range(0, 4):
        O = omega_u(DiscreteUltraposet(n))
        t_om.check(O.lattice.n == 1 << n and O.lattice.is_boolean, {"n": n, "size": O.lattice.n})
    out.append(t_om.entry())
    return out


def suite_appendix(max_size: int, fip_size: int = 4) -> list[Entry]:
    t_sep = _Tally("appendix.prime_separation")
    t_meet = _Tally("appendix.ideal_is_meet_of_primes")
    for i, D in enumerate(lattice_corpus(max_size)):
        for p in range(D.n):
            for q in range(D.n):
                if D.le(p, q):
                    continue
                x = prime_separation(D, p, q)
                t_sep.check(q in x and p not in x, {"lattice": i, "p": p, "q": q})
        for I in ideals(D):
            ok, _ = ideal_is_meet_of_primes(D, I)
            t_meet.check(ok, {"lattice": i, "ideal": list(I.elements)})
    t_fip = _Tally("appendix.fip_extends_to_ultrafilter")
    for m in range(1, fip_size + 1):
        for fam_mask in range(1 << (1 << m)):
            fam = list(bits(fam_mask))
            if has_fip(fam, m):
                uf = extend_fip(fam, m)
                t_fip.check(all(A in uf for A in fam), {"m": m, "family": fam})
    return [t_sep.entry(), t_meet.entry(), t_fip.entry()]


def run_suite(
    name: str,
    max_size: int = DEFAULT_MAX_SIZE,
    max_s: int = 3,
    max_t: int = 2,
    max_w: int = 3,
) -> DualityReport:
    """Run one suite (or ``all``) and collect its entries in a fixed order."""
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    names = SUITES if name == "all" else (name,)
    report = DualityReport({"suite": name, "max_size": max_size, "maxS": max_s, "maxT": max_t, "maxW": max_w})
    runners = {
        "axioms": lambda: suite_axioms(max_size, max_s, max_t, max_w),
        "monad": lambda: suite_monad(),
        "los": lambda: suite_los(max_size),
        "galois": lambda: suite_galois(max_size),
        "duality": lambda: suite_duality(max_size),
        "zero-dim": lambda: suite_zero_dim(max_size),
        "appendix": lambda: suite_appendix(max_size),
    }
    for n in names:
        report.entries.extend(runners[n]())
    return report
