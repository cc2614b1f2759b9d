"""Command-line front end.

Exit status: 0 success, 1 validation or theorem failure, 2 unreadable or
malformed input, 3 an enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import io
from .corpus import DEFAULT_MAX_SIZE
from .dot import to_dot
from .duality import counit, mod_spectrum, omega, reconstruct_idl
from .errors import BudgetExceeded, FormatError, UltraposetError
from .order import bits, validate_dist_lattice
from .report import to_jsonable
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3
MAX_CORPUS_SIZE = 6


@dataclass(frozen=True)
class CommandConfig:
    command: str
    paths: tuple[str, ...]
    max_s: int
    max_t: int
    max_w: int
    fmt: str
    max_size: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CommandConfig:
        path = getattr(args, "path", None)
        return cls(args.command, (path,) if path else (), args.max_s, args.max_t, args.max_w, args.fmt, args.max_size)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _corpus_bound(text: str) -> int:
    v = int(text)
    if not 0 <= v <= MAX_CORPUS_SIZE:
        raise argparse.ArgumentTypeError(f"must be between 0 and {MAX_CORPUS_SIZE}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-size", type=_corpus_bound, default=DEFAULT_MAX_SIZE, help="largest corpus poset")
    common.add_argument("--maxS", dest="max_s", type=_positive, default=3, help="largest probe index set")
    common.add_argument("--maxT", dest="max_t", type=_positive, default=2, help="largest ultrafilter-family index set")
    common.add_argument("--maxW", dest="max_w", type=_positive, default=3, help="largest locality injection domain")
    common.add_argument("--format", dest="fmt", choices=("json", "dot"), default="json")
    common.add_argument("--seed", type=int, default=None, help="accepted for compatibility; every algorithm is deterministic")

    parser = argparse.ArgumentParser(prog="ultraposets", description="Finite ultraposets and the spectra of distributive lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a poset, lattice, hom, ultrafilter or ultraposet file")
    p.add_argument("path")
    p.add_argument("--as-lattice", action="store_true", help="also require a distributive lattice")

    p = sub.add_parser("spectrum", parents=[common], help="prime spectrum Mod(D) of a lattice file")
    p.add_argument("path")

    p = sub.add_parser("reconstruct", parents=[common], help="counit and ideal-lattice isomorphisms for a lattice file")
    p.add_argument("path")

    p = sub.add_parser("verify", parents=[common], help="run verification suites over the generated corpus")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--timings", action="store_true", help="include per-entry milliseconds (not byte-stable)")

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram of a lattice, its spectrum, or its closed downsets")
    p.add_argument("path")
    p.add_argument("--what", choices=("lattice", "spectrum", "clc"), default="lattice")
    return parser


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(to_jsonable(obj)) + "\n")


def _failure(exc: Exception) -> dict:
    return {"ok": False, "error": type(exc).__name__, "message": str(exc), "witness": to_jsonable(getattr(exc, "witness", None))}


def _set_label(mask: int) -> str:
    return "{" + ",".join(map(str, bits(mask))) + "}"


def cmd_validate(cfg: CommandConfig, args) -> int:
    data = io.read_json(args.path)
    try:
        if isinstance(data, dict) and "construction" in data:
            from .axioms import check_axioms

            U = io.ultraposet_from_json(data)
            rep = check_axioms(U, cfg.max_s, cfg.max_t, cfg.max_w)
            _emit({"ok": rep.passed, "kind": "ultraposet", "report": rep})
            return EXIT_OK if rep.passed else EXIT_FAIL
        if isinstance(data, dict) and "values" in data:
            h = io.hom_from_json(data, Path(args.path).parent)
            _emit({"ok": True, "kind": "hom", "values": list(h.values)})
            return EXIT_OK
        if isinstance(data, dict) and "m" in data:
            u = io.ultrafilter_from_json(data)
            _emit({"ok": True, "kind": "ultrafilter", "m": u.m, "principal": u.witness})
            return EXIT_OK
        P = io.poset_from_json(data)
        out = {"ok": True, "kind": "poset", "n": P.n, "covers": [list(c) for c in P.covers()]}
        if args.as_lattice:
            D = validate_dist_lattice(P)
            out.update(kind="distributive lattice", bottom=D.bot, top=D.top, boolean=D.is_boolean)
        _emit(out)
        return EXIT_OK
    except (FormatError, BudgetExceeded):
        raise
    except (UltraposetError, ValueError) as e:
        _emit(_failure(e))
        return EXIT_FAIL


def cmd_spectrum(cfg: CommandConfig, args) -> int:
    D = io.load_lattice(args.path)
    res = mod_spectrum(D)
    if cfg.fmt == "dot":
        labels = [_set_label(x.mask) for x in res.prime_table]
        sys.stdout.write(to_dot(res.spectrum.carrier, "spectrum", labels))
        return EXIT_OK
    _emit({"ok": True, "spectrum": res, "closure_probes": res.probes})
    return EXIT_OK


def cmd_reconstruct(cfg: CommandConfig, args) -> int:
    D = io.load_lattice(args.path)
    c = counit(D)
    idl = reconstruct_idl(D, c.omega.U)
    pairs = [{"element": p, **c.omega.pairs[c.hom(p)].to_dict()} for p in range(D.n)]
    _emit({"ok": True, "counit": {"iso": c.witness, "pairs": pairs}, "ideals": idl})
    return EXIT_OK


def cmd_verify(cfg: CommandConfig, args) -> int:
    report = run_suite(args.suite, cfg.max_size, cfg.max_s, cfg.max_t, cfg.max_w)
    sys.stdout.write(report.to_json(args.timings) + "\n")
    bad = report.first_failure()
    if bad is not None:
        sys.stderr.write(f"FAILED {bad.name}: {io.dumps(to_jsonable(bad.witness))}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_export_dot(cfg: CommandConfig, args) -> int:
    D = io.load_lattice(args.path)
    if args.what == "lattice":
        sys.stdout.write(to_dot(D.poset, "lattice"))
    elif args.what == "spectrum":
        res = mod_spectrum(D)
        labels = [_set_label(x.mask) for x in res.prime_table]
        sys.stdout.write(to_dot(res.spectrum.carrier, "spectrum", labels))
    else:
        from .structures import ModSpectrum

        Om = omega(ModSpectrum(D))
        # drawn under inclusion of the closed downsets, not the reversed frame order
        labels = [_set_label(K) for K in Om.labels]
        sys.stdout.write(to_dot(Om.poset.dual(), "clc", labels))
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "spectrum": cmd_spectrum,
    "reconstruct": cmd_reconstruct,
    "verify": cmd_verify,
    "export-dot": cmd_export_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](CommandConfig.from_args(args), args)
    except (OSError, FormatError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_IO
    except BudgetExceeded as e:
        sys.stderr.write(f"budget exceeded: {e}\n")
        return EXIT_BUDGET
    except (UltraposetError, ValueError) as e:
        _emit(_failure(e))
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
