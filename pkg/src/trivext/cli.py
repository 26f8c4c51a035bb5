"""Command line front end: ``trivext classify|list|verify``.

Every command prints one JSON document. Exit codes: 0 success (or a passing
verification), 1 failing verification, 2 usage, parse or scope errors.
"""

import argparse
import json
import sys
import time
from math import gcd

from . import serialize
from .dsl import elaborate, elements_from_text, parse_ring_expr
from .errors import Unsupported
from .finite_module import enumerate_submodules
from .finite_ring import FiniteRing, Integers
from .ideal_theory import (
    SPrimalityCertificate,
    enumerate_ideals,
    ideal_generated,
    is_maximal,
    is_prime,
    is_S_maximal_residual,
    is_S_prime_residual,
    max_S,
    max_spec,
    mult_set_generated,
    spec,
    spec_S,
)
from .packed import is_compactly_S_packed, is_coprimely_S_packed, is_S_pm
from .trivial_extension import TrivialExtension, components
from .verifier import SEARCH_TARGETS, SUITES, CatalogSpec, reproduce_examples, run_suite, search_counterexamples
from .z_layer import (
    ZIdeal,
    ZMultSet,
    ZTrivialExtension,
    z_is_S_maximal,
    z_is_S_prime,
    zte_ideal,
    zte_is_S_maximal,
    zte_is_S_prime,
)

SCHEMA_VERSION = "1"
CHECKS = ("prime", "maximal", "s-prime", "s-maximal", "homogeneous",
          "compactly-packed", "coprimely-packed", "s-pm")
LISTINGS = ("ideals", "spec", "max", "spec-s", "max-s", "submodules")
PACKED_CHECKS = {"compactly-packed": is_compactly_S_packed,
                 "coprimely-packed": is_coprimely_S_packed, "s-pm": is_S_pm}


# classify ----------------------------------------------------------------------------

def _plain(verdict: bool, reason: str, **extra) -> tuple[bool, dict]:
    cert = {"witness": None, "residual": None, "reason": reason}
    cert.update(extra)
    return verdict, cert


def _from_certificate(c: SPrimalityCertificate) -> tuple[bool, dict]:
    return c.verdict, serialize.certificate(c)


def _classify_integers(ideal_gens, S_gens, check):
    d = 0
    for a in ideal_gens:
        d = gcd(d, int(a))
    I = ZIdeal(d)
    S0 = ZMultSet(tuple(int(s) for s in S_gens))
    if check == "prime":
        return _plain(I.is_prime, "definition", ideal=str(I))
    if check == "maximal":
        return _plain(I.d != 0 and I.is_prime, "definition", ideal=str(I))
    if check == "s-prime":
        return _from_certificate(z_is_S_prime(I, S0))
    if check == "s-maximal":
        return _from_certificate(z_is_S_maximal(I, S0))
    raise Unsupported(f"--check {check} is not available for Z")


def _classify_zte(ring: ZTrivialExtension, ideal_gens, S_gens, check):
    J = zte_ideal(ring.module, ideal_gens)
    S_pairs = list(S_gens) or [(1, ring.module.zero)]
    if check == "homogeneous":
        return _plain(J.is_homogeneous, "generator-criterion", ideal=serialize.zte_ideal(J))
    if check in ("prime", "maximal"):
        # S = {1} turns the S-variants into the classical notions
        S_pairs = [(1, ring.module.zero)]
    maximal = check in ("maximal", "s-maximal")
    if check in ("prime", "maximal", "s-prime", "s-maximal"):
        fn = zte_is_S_maximal if maximal else zte_is_S_prime
        return _from_certificate(fn(J, S_pairs))
    raise Unsupported(f"--check {check} needs a finite ring; {ring} is infinite")


def _classify_finite(ring: FiniteRing, ideal_gens, S_gens, check):
    S = mult_set_generated(ring, S_gens)
    if check in PACKED_CHECKS:
        res = PACKED_CHECKS[check](ring, S)
        extra = {"ideal": serialize.jsonable(res.ideal), "diagnostic": res.diagnostic or None}
        if res.family is not None:
            extra["family"] = [serialize.ideal(P, with_elements=False) for P in res.family.members]
        return _plain(res.holds, "worst-family" if check != "s-pm" else "containment-count", **extra)
    I = ideal_generated(ring, ideal_gens)
    if check == "prime":
        return _plain(is_prime(I), "definition", ideal=serialize.ideal(I))
    if check == "maximal":
        return _plain(is_maximal(I), "definition", ideal=serialize.ideal(I))
    if check == "s-prime":
        return _from_certificate(is_S_prime_residual(I, S))
    if check == "s-maximal":
        return _from_certificate(is_S_maximal_residual(I, S))
    if not isinstance(ring, TrivialExtension):
        raise Unsupported(f"--check homogeneous needs a trivial extension, got {ring}")
    dec = components(I)
    return _plain(dec.is_homogeneous, "components",
                  J0=serialize.ideal(dec.J0), J1=serialize.submodule(dec.J1))


def classify(ring_text: str, ideal_text: str, mult_text: str, check: str) -> dict:
    ast = parse_ring_expr(ring_text)
    ring = elaborate(ast)
    ideal_gens = elements_from_text(ring, ideal_text)
    S_gens = elements_from_text(ring, mult_text)
    if isinstance(ring, Integers):
        verdict, cert = _classify_integers(ideal_gens, S_gens, check)
    elif isinstance(ring, ZTrivialExtension):
        verdict, cert = _classify_zte(ring, ideal_gens, S_gens, check)
    else:
        verdict, cert = _classify_finite(ring, ideal_gens, S_gens, check)
    inputs = {"ring": str(ast), "ideal": serialize.jsonable(ideal_gens),
              "multSet": serialize.jsonable(S_gens), "check": check}
    return {"command": "classify", "inputs": inputs, "verdict": verdict, "certificate": cert}


# list ----------------------------------------------------------------------------------

def list_items(ring_text: str, what: str, mult_text: str = "") -> dict:
    ast = parse_ring_expr(ring_text)
    ring = elaborate(ast)
    if not isinstance(ring, FiniteRing):
        raise Unsupported(f"listing needs a finite ring; {ring} is infinite")
    S_gens = elements_from_text(ring, mult_text)
    if what == "submodules":
        if not isinstance(ring, TrivialExtension):
            raise Unsupported(f"--what submodules needs a trivial extension, got {ring}")
        items = [serialize.submodule(N) for N in enumerate_submodules(ring.module)]
    else:
        S = mult_set_generated(ring, S_gens)
        found = {
            "ideals": lambda: enumerate_ideals(ring),
            "spec": lambda: spec(ring),
            "max": lambda: max_spec(ring),
            "spec-s": lambda: spec_S(ring, S),
            "max-s": lambda: max_S(ring, S),
        }[what]()
        items = [serialize.ideal(I) for I in found]
    inputs = {"ring": str(ast), "what": what, "multSet": serialize.jsonable(S_gens)}
    return {"command": "list", "inputs": inputs, "items": items}


# verify --------------------------------------------------------------------------------

def verify(suite=None, examples=False, search=None, catalog_path=None) -> tuple[dict, bool]:
    catalog = CatalogSpec.from_json(catalog_path) if catalog_path else CatalogSpec()
    if examples:
        report = reproduce_examples()
    elif suite:
        report = run_suite(suite, catalog)
    else:
        report = search_counterexamples(search, catalog)
    inputs = {"suite": suite, "examples": examples, "search": search,
              "catalog": catalog.to_dict() if catalog_path else None}
    doc = {"command": "verify", "inputs": inputs, "report": report.to_dict(timing=False)}
    return doc, report.passed


# entry point -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trivext", description="S-prime and S-maximal ideals of trivial ring extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide a property of one ideal")
    p.add_argument("ring", help='ring expression, e.g. "TE(Z, Z/4)"')
    p.add_argument("--ideal", default="", help='ideal generators, e.g. "(6,1)"')
    p.add_argument("--mult-set", default="", help="multiplicative set generators; empty means S = {1}")
    p.add_argument("--check", required=True, choices=CHECKS)
    p.add_argument("--json", metavar="PATH", help="also write the JSON document here")

    p = sub.add_parser("list", help="list ideals of a finite ring")
    p.add_argument("ring")
    p.add_argument("--what", required=True, choices=LISTINGS)
    p.add_argument("--mult-set", default="")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("verify", help="reproduce examples, run a suite or search for counterexamples")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--suite", choices=SUITES)
    mode.add_argument("--examples", action="store_true")
    mode.add_argument("--search", choices=SEARCH_TARGETS)
    p.add_argument("--catalog", metavar="FILE", help="JSON file with CatalogSpec fields")
    p.add_argument("--json", metavar="PATH")
    return parser


def _emit(doc: dict, started: float, path: str | None) -> None:
    out = {"schemaVersion": SCHEMA_VERSION}
    out.update(doc)
    out["elapsedMs"] = round((time.perf_counter() - started) * 1000, 3)
    text = json.dumps(out, indent=2)
    print(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    ok = True
    try:
        if args.command == "classify":
            doc = classify(args.ring, args.ideal, args.mult_set, args.check)
        elif args.command == "list":
            doc = list_items(args.ring, args.what, args.mult_set)
        else:
            doc, ok = verify(args.suite, args.examples, args.search, args.catalog)
    except (ValueError, TypeError, OSError) as exc:  # AlgebraError is a ValueError
        print(f"trivext {args.command}: {exc}", file=sys.stderr)
        return 2
    _emit(doc, started, args.json)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
