"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 hypotheses not met (including
"nothing found"), 4 resource cap hit, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from . import iepoly as ie
from ._io import atomic_write, digest, dumps, int_str, parse_fraction, parse_int
from .modmath import NotAUnitError
from .primesearch import find_triples, to_json_lines
from .theorems import (
    HypothesisError,
    flat_family_check,
    lemma4_search,
    prop4_check,
    prop5_certify,
    thm1_construct,
    thm3_construct,
)
from .verify import verify_certificate, verify_thm3

EXIT_OK, EXIT_INVALID, EXIT_HYPOTHESIS, EXIT_RESOURCE, EXIT_CONSISTENCY = 0, 2, 3, 4, 5

CACHE_ENV = "UNITCYCLO_CACHE_DIR"
NO_CACHE_COMMANDS = {"verify", "selftest", "replay"}


class Outcome(Exception):
    """Carry a non-zero exit code together with the output already produced."""

    def __init__(self, code: int, output: str) -> None:
        super().__init__(code)
        self.code = code
        self.output = output


def _triple_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=parse_int, required=True)
    sp.add_argument("--q", type=parse_int, required=True)
    sp.add_argument("--r", type=parse_int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unitcyclo", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--max-cells", type=parse_int, default=ie.DEFAULT_MAX_CELLS, help="dense vector size cap")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the result cache")
    parser.add_argument("--cache-dir", type=Path, default=None, help=f"cache location (env {CACHE_ENV})")
    parser.add_argument("--manifest", type=Path, default=None, help="write a run manifest JSON here")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coeffs", help="dense coefficient vector")
    _triple_args(sp)
    sp.add_argument("--engine", choices=("oracle", "truncated", "both"), default="truncated")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("coeff-at", help="single coefficient a_m")
    _triple_args(sp)
    sp.add_argument("--m", type=parse_int, required=True)

    sp = sub.add_parser("set", help="coefficient set summary")
    _triple_args(sp)
    sp.add_argument("--method", choices=("auto", "dense", "blocks"), default="auto")

    sp = sub.add_parser("prop4", help="check the Prop. 4 congruences and compare sets")
    _triple_args(sp)

    sp = sub.add_parser("thm3", help="construct exponents for the Theorem 3 family")
    _triple_args(sp)
    sp.add_argument("--a", type=parse_int, required=True)
    sp.add_argument("--lift", type=parse_int, default=0)
    sp.add_argument("--full-verify", action="store_true")

    sp = sub.add_parser("prop5", help="Prop. 5 certificate for a triple")
    _triple_args(sp)

    sp = sub.add_parser("lemma4", help="exponent pair search")
    _triple_args(sp)
    sp.add_argument("--a", type=parse_int, required=True)
    sp.add_argument("--epsilon", type=parse_fraction, required=True)

    sp = sub.add_parser("thm1", help="Theorem 1 pipeline")
    _triple_args(sp)
    sp.add_argument("--a", type=parse_int, required=True)
    sp.add_argument("--epsilon", type=parse_fraction, required=True)
    sp.add_argument("--slack", type=parse_int, default=6)
    sp.add_argument("--lift", type=parse_int, default=0)
    sp.add_argument("--max-t", type=parse_int, default=None)
    sp.add_argument("--no-witnesses", action="store_true")

    sp = sub.add_parser("flat", help="the {3^a, 11^b, 2^c} family")
    sp.add_argument("--a", type=parse_int, required=True)
    sp.add_argument("--b", type=parse_int, required=True)

    sp = sub.add_parser("search-triples", help="prime triples meeting the Theorem 3 hypotheses")
    sp.add_argument("--pmax", type=parse_int, required=True)
    sp.add_argument("--qmax", type=parse_int, required=True)
    sp.add_argument("--rmax", type=parse_int, required=True)

    sp = sub.add_parser("verify", help="re-check a stored certificate")
    sp.add_argument("certificate", help="path to certificate JSON, or - for stdin")
    sp.add_argument("--full", action="store_true", help="also compute the coefficient set when feasible")

    sp = sub.add_parser("replay", help="re-run a manifest without the cache and compare output hashes")
    sp.add_argument("manifest_path", type=Path)

    sp = sub.add_parser("selftest", help="run invariant checks at a bounded scale")
    sp.add_argument("--scale", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    return parser


# ---------------------------------------------------------------------------
# command bodies: each returns the text to print or raises Outcome


def _cmd_coeffs(ns) -> str:
    t = ie.make_triple(ns.p, ns.q, ns.r)
    engines = ("oracle", "truncated") if ns.engine == "both" else (ns.engine,)
    results = [ie.coeff_vector(t, e, ns.max_cells) for e in engines]
    if len(results) == 2 and not (results[0].coefficients == results[1].coefficients).all():
        raise ie.ConsistencyError("oracle and truncated engines disagree")
    vec = results[0].coefficients
    if ns.format == "csv":
        return ie.coefficients_to_csv(vec)
    out = results[0].summary(t)
    out["coefficients"] = vec.tolist()
    return dumps(out)


def _cmd_coeff_at(ns) -> str:
    t = ie.make_triple(ns.p, ns.q, ns.r)
    return f"{ie.coeff_at(t, ns.m)}\n"


def _cmd_set(ns) -> str:
    t = ie.make_triple(ns.p, ns.q, ns.r)
    return dumps(ie.coeff_set(t, max_cells=ns.max_cells, method=ns.method).summary(t))


def _cmd_prop4(ns) -> str:
    rep = prop4_check(ie.make_triple(ns.p, ns.q, ns.r), ns.max_cells)
    text = dumps(rep.to_dict())
    if not rep.hypotheses_ok:
        raise Outcome(EXIT_HYPOTHESIS, text)
    return text


def _cmd_thm3(ns) -> str:
    cert = thm3_construct(ns.p, ns.q, ns.r, ns.a, lift=ns.lift)
    out = {"certificate": cert.to_dict()}
    if ns.full_verify:
        rep = verify_thm3(cert.to_dict(), full=True, max_cells=ns.max_cells)
        out["verification"] = rep.to_dict()
        if not rep.ok:
            raise Outcome(EXIT_CONSISTENCY, dumps(out))
    return dumps(out)


def _cmd_prop5(ns) -> str:
    cert = prop5_certify(ie.make_triple(ns.p, ns.q, ns.r))
    text = dumps(cert.to_dict())
    if not cert.hypotheses_ok:
        raise Outcome(EXIT_HYPOTHESIS, text)
    if not cert.witnesses_ok:
        raise Outcome(EXIT_CONSISTENCY, text)
    return text


def _cmd_lemma4(ns) -> str:
    wit = lemma4_search(ns.p, ns.q, ns.r, ns.a, ns.epsilon)
    if wit is None:
        raise Outcome(EXIT_HYPOTHESIS, dumps({"found": False}))
    return dumps(
        {
            "found": True,
            "i": int_str(wit.i),
            "j": int_str(wit.j),
            "P": int_str(wit.P),
            "q_power_residue": int_str(wit.x_q),
            "r_power_residue": int_str(wit.x_r),
            "spread": int_str(wit.spread),
        }
    )


def _cmd_thm1(ns) -> str:
    cert = thm1_construct(
        ns.p,
        ns.q,
        ns.r,
        ns.a,
        ns.epsilon,
        ns.slack,
        lift=ns.lift,
        max_t=ns.max_t,
        evaluate_witnesses=not ns.no_witnesses,
    )
    return dumps(cert.to_dict())


def _cmd_flat(ns) -> str:
    return dumps(flat_family_check(ns.a, ns.b, ns.max_cells).to_dict())


def _cmd_search(ns) -> str:
    return to_json_lines(find_triples(ns.pmax, ns.qmax, ns.rmax))


def _cmd_verify(ns) -> str:
    raw = sys.stdin.read() if ns.certificate == "-" else Path(ns.certificate).read_text()
    data = json.loads(raw)
    if "certificate" in data and "kind" not in data:
        data = data["certificate"]
    rep = verify_certificate(data, full=ns.full, max_cells=ns.max_cells)
    text = dumps(rep.to_dict())
    if not rep.ok:
        raise Outcome(EXIT_CONSISTENCY, text)
    return text


def _cmd_selftest(ns) -> str:
    from .selftest import run_selftest

    results = run_selftest(ns.scale, ns.seed)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
    text = "\n".join(lines) + "\n"
    if not all(ok for _, ok, _ in results):
        raise Outcome(EXIT_CONSISTENCY, text)
    return text


def _strip_manifest(argv: list[str]) -> list[str]:
    out, skip = [], False
    for arg in argv:
        if skip:
            skip = False
        elif arg == "--manifest":
            skip = True
        elif not arg.startswith("--manifest="):
            out.append(arg)
    return out


def _cmd_replay(ns) -> str:
    recorded = json.loads(ns.manifest_path.read_text())
    inner = build_parser().parse_args(_strip_manifest(recorded["argv"]))
    code, output = _execute(inner)
    report = {
        "command": recorded["command"],
        "recorded_sha256": recorded["output_sha256"],
        "replayed_sha256": digest(output),
        "recorded_exit_code": recorded["exit_code"],
        "replayed_exit_code": code,
    }
    report["identical"] = report["recorded_sha256"] == report["replayed_sha256"] and code == recorded["exit_code"]
    text = dumps(report)
    if not report["identical"]:
        raise Outcome(EXIT_CONSISTENCY, text)
    return text


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "coeff-at": _cmd_coeff_at,
    "set": _cmd_set,
    "prop4": _cmd_prop4,
    "thm3": _cmd_thm3,
    "prop5": _cmd_prop5,
    "lemma4": _cmd_lemma4,
    "thm1": _cmd_thm1,
    "flat": _cmd_flat,
    "search-triples": _cmd_search,
    "verify": _cmd_verify,
    "replay": _cmd_replay,
    "selftest": _cmd_selftest,
}

_GLOBAL_KEYS = {"no_cache", "cache_dir", "manifest", "command"}


def _params(ns) -> dict:
    out = {}
    for key, value in sorted(vars(ns).items()):
        if key in _GLOBAL_KEYS:
            continue
        out[key] = int_str(value) if isinstance(value, int) and not isinstance(value, bool) else str(value)
    return out


def _cache_path(ns, params: dict) -> Path:
    root = ns.cache_dir or Path(os.environ.get(CACHE_ENV, Path.home() / ".cache" / "unitcyclo"))
    key = digest(json.dumps({"command": ns.command, "params": params, "version": __version__}, sort_keys=True))
    return Path(root) / f"{ns.command}-{key[:32]}.json"


def _execute(ns) -> tuple[int, str]:
    try:
        return EXIT_OK, COMMANDS[ns.command](ns)
    except Outcome as out:
        return out.code, out.output
    except HypothesisError as exc:
        return EXIT_HYPOTHESIS, f"hypothesis not met: {exc}\n"
    except ie.ResourceCapError as exc:
        return EXIT_RESOURCE, f"resource cap: {exc}\n"
    except ie.ConsistencyError as exc:
        return EXIT_CONSISTENCY, f"consistency failure: {exc}\n"
    except (ValueError, IndexError, NotAUnitError) as exc:
        return EXIT_INVALID, f"invalid input: {exc}\n"


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    params = _params(ns)
    use_cache = not ns.no_cache and ns.command not in NO_CACHE_COMMANDS
    start = time.perf_counter()
    cached = False
    code, output = None, None
    if use_cache:
        path = _cache_path(ns, params)
        if path.exists():
            entry = json.loads(path.read_text())
            code, output, cached = entry["exit_code"], entry["output"], True
    if code is None:
        code, output = _execute(ns)
        if use_cache and code in (EXIT_OK, EXIT_HYPOTHESIS):
            atomic_write(_cache_path(ns, params), json.dumps({"exit_code": code, "output": output}))
    stream = sys.stdout if code in (EXIT_OK, EXIT_HYPOTHESIS, EXIT_CONSISTENCY) else sys.stderr
    stream.write(output)
    stream.flush()

    if ns.manifest is not None:
        manifest = {
            "command": ns.command,
            "argv": argv,
            "params": params,
            "version": __version__,
            "wall_time_s": round(time.perf_counter() - start, 6),
            "max_cells": int_str(ns.max_cells),
            "exit_code": code,
            "cached": cached,
            "output_sha256": digest(output),
        }
        atomic_write(ns.manifest, dumps(manifest))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
