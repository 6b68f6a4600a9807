"""Command-line interface: ``chirotrop <command> ...``.

Exit codes: 0 success, 2 bad input format or usage, 3 failed ingestion
validation, 4 failed verification, 5 purity violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .chirotope import (
    Chirotope,
    InvalidChirotopeError,
    expand_orbit,
    parse_negative_triple_notation,
    read_chirotope_file,
    validate,
    violated_relations,
    write_chirotope_file,
)
from .charts import verify_charts
from .dressian import IngestionError, PurityError, compute_chirotropical_dressian
from .fan import check_two_determined
from .io import FormatError, bundled_classes, bundled_rays, dump_json, fan_document, ingest_rays
from .realizability import covering_check, fano_incompatibility_check, verify_48_counterexample
from .relations import format_relations, generate_three_term
from .reports import Report

EXIT_OK = 0
EXIT_FORMAT = 2
EXIT_INGESTION = 3
EXIT_VERIFICATION = 4
EXIT_PURITY = 5


class UsageError(ValueError):
    pass


def thread_cap() -> int:
    """Worker count: ``CHIROTROP_THREADS`` if set, else the CPU count."""
    env = os.environ.get("CHIROTROP_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"CHIROTROP_THREADS must be an integer, got {env!r}") from None
        return max(1, value)
    return os.cpu_count() or 1


# --- per-chirotope jobs ---------------------------------------------------------

_WORKER_RAYS = None


def _init_worker(rays):
    global _WORKER_RAYS
    _WORKER_RAYS = rays


def _dressian_job(chi: Chirotope):
    try:
        result = compute_chirotropical_dressian(_WORKER_RAYS, chi)
    except PurityError as exc:
        return ("purity", str(exc))
    doc = fan_document(result)
    doc["two_determined_recheck"] = check_two_determined(result.fan)
    return ("ok", doc)


def run_dressians(rays, chirotopes, threads: int | None = None) -> list:
    """Run the pipeline for every chirotope; results come back in input order."""
    threads = thread_cap() if threads is None else threads
    workers = min(threads, len(chirotopes))
    if workers <= 1:
        _init_worker(rays)
        return [_dressian_job(c) for c in chirotopes]
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(rays,)) as pool:
        return list(pool.map(_dressian_job, chirotopes))


# --- input helpers ---------------------------------------------------------------

def _load_rays(args):
    if args.rays:
        return ingest_rays(args.rays, args.k, args.n)
    if args.k is None:
        raise UsageError("give --rays PATH or --k/--n for a bundled ray file")
    try:
        return bundled_rays(args.k, args.n)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None


def _load_classes(path, k, n):
    if path:
        try:
            classes = read_chirotope_file(path, k)
        except OSError as exc:
            raise FormatError(f"cannot read {path}: {exc}") from None
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if classes and classes[0].n != n:
            raise FormatError(f"{path}: chirotopes are on {classes[0].n} elements, expected {n}")
        return classes
    try:
        return bundled_classes(k, n)
    except FileNotFoundError as exc:
        raise UsageError(f"{exc} (use --classes PATH)") from None


def _chirotopes_from_args(args, k, n) -> list[Chirotope]:
    out = []
    try:
        if args.chirotope:
            out.append(Chirotope.from_string(args.chirotope, k, n))
        if args.chirotope_file:
            out.extend(_load_classes(args.chirotope_file, k, n))
        if args.negative_triples is not None:
            out.append(parse_negative_triple_notation(args.negative_triples, k, n))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if args.all_classes:
        out.extend(_load_classes(args.classes, k, n))
    if not out:
        raise UsageError("no chirotope given (--chirotope, --chirotope-file, --negative-triples or --all-classes)")
    for c in out:
        if (c.k, c.n) != (k, n):
            raise FormatError(f"chirotope {c.to_string()} is not on C({n},{k}) subsets")
        if not validate(c):
            bad = violated_relations(c)
            raise InvalidChirotopeError(f"chirotope {c.to_string()} is invalid; first violated relation {bad[0]}")
    return out


def _prepare_out(path):
    if path is None:
        return None
    out = Path(path)
    probe = out / ".write-test"
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise UsageError(f"output directory {out} is not writable: {exc}") from None
    return out


def _emit(report: Report, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), indent=1))
    else:
        print(report)
    return EXIT_OK if report.ok else EXIT_VERIFICATION


# --- commands --------------------------------------------------------------------

def cmd_relations(args) -> int:
    rel = generate_three_term(args.k, args.n)
    if args.count:
        print(len(rel))
    else:
        print(format_relations(rel))
    return EXIT_OK


def cmd_chirotope(args) -> int:
    if args.action == "validate":
        if args.signs is None and args.negative_triples is None:
            raise UsageError("give a sign string or --negative-triples")
        try:
            if args.signs is not None:
                chi = Chirotope.from_string(args.signs, args.k, args.n)
            else:
                if args.n is None:
                    raise UsageError("--negative-triples needs --n")
                chi = parse_negative_triple_notation(args.negative_triples, args.k, args.n)
        except UsageError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        rep = Report("chirotope validate", summary=f"({chi.k},{chi.n}) negatives {chi.negative_notation()}")
        rep.details["signs"] = chi.to_string()
        for r in violated_relations(chi):
            rep.fail(f"all three signed monomials agree in {r}")
        return _emit(rep, args.json)

    classes = _load_classes(args.classes, args.k, args.n)
    orbit = expand_orbit(classes, modulo_reorientation=not args.all_signs)
    if args.out:
        write_chirotope_file(
            args.out, orbit,
            header=f"{len(orbit)} chirotopes: orbit of {len(classes)} classes"
            + ("" if args.all_signs else ", one per reorientation class"),
        )
    rep = Report("chirotope orbit", summary=f"{len(orbit)} members from {len(classes)} classes")
    rep.details["k"], rep.details["n"] = args.k, args.n
    rep.details["modulo_reorientation"] = not args.all_signs
    rep.details["size"] = len(orbit)
    return _emit(rep, args.json)


def cmd_dressian(args) -> int:
    out = _prepare_out(args.out)
    rays = _load_rays(args)
    k, n = rays[0].k, rays[0].n
    if args.k is not None and (args.k, args.n) != (k, n):
        raise FormatError(f"--k/--n ({args.k},{args.n}) disagree with the ray file ({k},{n})")
    chis = _chirotopes_from_args(args, k, n)
    results = run_dressians(rays, chis)
    purity = [msg for status, msg in results if status == "purity"]
    if purity:
        for msg in purity:
            print(f"purity violation: {msg}", file=sys.stderr)
        return EXIT_PURITY
    docs = [doc for _, doc in results]
    rows = []
    for i, doc in enumerate(docs, start=1):
        rows.append({
            "index": i,
            "chirotope": doc["chirotope"],
            "negatives": doc["negatives"],
            "rays": len(doc["rays"]),
            "f_vector": doc["f_vector"],
            "pure": doc["pure"],
            "two_determined": doc["two_determined"] and doc.pop("two_determined_recheck"),
        })
        if out is not None:
            dump_json(doc, out / f"{doc['chirotope']}.json")
    if out is not None:
        (out / "summary.tsv").write_text(_summary_tsv(rows))
        dump_json({"k": k, "n": n, "fans": rows}, out / "summary.json")
    if args.json:
        print(json.dumps({"k": k, "n": n, "fans": rows}, indent=1))
    else:
        print(_summary_tsv(rows), end="")
    return EXIT_OK


def _summary_tsv(rows) -> str:
    lines = ["#\tnegatives\trays\tf_vector\tpure\ttwo_determined"]
    for r in rows:
        f = "(" + ",".join(str(v) for v in r["f_vector"]) + ")"
        lines.append(f"{r['index']}\t{r['negatives']}\t{r['rays']}\t{f}\t{r['pure']}\t{r['two_determined']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.check == "fano":
        classes = _load_classes(args.classes, 3, args.n)
        return _emit(fano_incompatibility_check(args.n, classes), args.json)
    if args.check == "covering":
        if args.n == 7 and not args.extended:
            raise UsageError("covering for n = 7 is extended-tier; pass --extended")
        rays = ingest_rays(args.rays, 3, args.n) if args.rays else bundled_rays(3, args.n)
        classes = _load_classes(args.classes, 3, args.n)
        return _emit(covering_check(rays, expand_orbit(classes)), args.json)
    if args.check == "counterexample-48":
        return _emit(verify_48_counterexample(), args.json)
    if args.check == "two-determined":
        rep = Report("two-determined")
        total = 0
        for n in args.n_values:
            rays = bundled_rays(3, n)
            classes = bundled_classes(3, n)
            for i, (status, doc) in enumerate(run_dressians(rays, classes), start=1):
                total += 1
                if status != "ok":
                    rep.fail(f"(3,{n}) class {i}: {doc}")
                    continue
                ok = doc["two_determined"] and doc["two_determined_recheck"]
                rep.details[f"(3,{n}) #{i}"] = f"f={tuple(doc['f_vector'])} two_determined={ok}"
                if not ok:
                    rep.fail(f"(3,{n}) class {i} {doc['negatives']} is not 2-determined")
        rep.summary = f"{total - len(rep.failures)}/{total} fans are 2-determined"
        return _emit(rep, args.json)
    raise UsageError(f"unknown check {args.check}")


def cmd_charts(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    return _emit(verify_charts(args.samples, args.seed), args.json)


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="chirotrop", description="Chirotropical Dressians from rays of the Dressian.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("relations", help="list the three-term Pluecker relations")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--count", action="store_true", help="print only the number of relations")
    r.set_defaults(func=cmd_relations)

    c = sub.add_parser("chirotope", help="validate a chirotope or expand an orbit")
    c.add_argument("action", choices=["validate", "orbit"])
    c.add_argument("signs", nargs="?", help="sign string over the k-subsets in lex order (validate)")
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--negative-triples", default=None, help='e.g. "356,456"')
    c.add_argument("--classes", default=None, help="class representatives (orbit; default: bundled)")
    c.add_argument("--all-signs", action="store_true", help="orbit: list every reorientation, not one per class")
    c.add_argument("--out", default=None, help="orbit: write the members to this file")
    c.add_argument("--json", action="store_true", help="machine-readable output")
    c.set_defaults(func=cmd_chirotope)

    d = sub.add_parser("dressian", parents=[common], help="compute chirotropical Dressians")
    d.add_argument("--rays", default=None, help="ray file (header 'k n m'); default: bundled for --k/--n")
    d.add_argument("--k", type=int, default=None)
    d.add_argument("--n", type=int, default=None)
    d.add_argument("--chirotope", default=None, help="sign string")
    d.add_argument("--chirotope-file", default=None, help="file with one sign string per line")
    d.add_argument("--negative-triples", default=None, help='e.g. "356,456,457,467"')
    d.add_argument("--all-classes", action="store_true", help="every class of the catalog")
    d.add_argument("--classes", default=None, help="catalog for --all-classes (default: bundled)")
    d.add_argument("--out", default=None, help="directory for fan files and the summary")
    d.set_defaults(func=cmd_dressian)

    v = sub.add_parser("verify", help="realizability and structure checks")
    vs = v.add_subparsers(dest="check", required=True)
    f = vs.add_parser("fano", parents=[common], help="Fano cones are incompatible with every class")
    f.add_argument("--n", type=int, choices=[7, 8], default=7)
    f.add_argument("--classes", default=None, help="class catalog for n (default: bundled)")
    cv = vs.add_parser("covering", parents=[common], help="compatible ray pairs share a chirotropical fan")
    cv.add_argument("--n", type=int, choices=[6, 7], default=6)
    cv.add_argument("--extended", action="store_true", help="allow the n = 7 run")
    cv.add_argument("--rays", default=None)
    cv.add_argument("--classes", default=None)
    vs.add_parser("counterexample-48", parents=[common], help="the non-realizable cone in Dr^chi(4,8)")
    td = vs.add_parser("two-determined", parents=[common], help="every bundled fan is 2-determined")
    td.add_argument("--n", dest="n_values", type=int, choices=[6, 7], action="append", default=None)
    v.set_defaults(func=cmd_verify)

    ch = sub.add_parser("charts", help="positive parameterizations of the (3,6) configuration spaces")
    chs = ch.add_subparsers(dest="action", required=True)
    cvf = chs.add_parser("verify", parents=[common])
    cvf.add_argument("--samples", type=int, default=100)
    cvf.add_argument("--seed", type=int, default=0)
    ch.set_defaults(func=cmd_charts)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "check", None) == "two-determined" and not args.n_values:
        args.n_values = [6, 7]
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chirotrop: error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except FormatError as exc:
        print(f"chirotrop: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (IngestionError, InvalidChirotopeError) as exc:
        print(f"chirotrop: validation error: {exc}", file=sys.stderr)
        return EXIT_INGESTION
    except PurityError as exc:
        print(f"chirotrop: purity violation: {exc}", file=sys.stderr)
        return EXIT_PURITY


if __name__ == "__main__":
    sys.exit(main())
