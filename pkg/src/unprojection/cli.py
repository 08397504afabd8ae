"""Command-line interface.

Commands: unproject | verify | resolve | hilbert | project.  The file
argument is a ``.km`` path or ``corpus:<name>`` for an embedded instance.
Exit codes: 0 when all non-skipped certificates pass, 2 on a hypothesis or
input failure, 1 on an internal error.
"""

import argparse
import json
import sys
import time

from .corpus import load as load_corpus
from .unproject import (CERTIFICATE_NAMES, HypothesisError, validate_problem,
                        unproject as run_unproject,
                        verify_certificates, project as project_ideal)
from .fields import QQ, PrimeField
from .hilbert import hilbert_series, brute_dims
from .kmfile import parse_problem, ParseError
from .resolution import minimal_free_resolution, codim

DEFAULT_ORACLE_DEPTH = 6


def build_arg_parser():
    ap = argparse.ArgumentParser(
        prog="unprojection",
        description="Construct and certify Gorenstein unprojections.")
    ap.add_argument("command",
                    choices=["unproject", "verify", "resolve", "hilbert",
                             "project"])
    ap.add_argument("file", help=".km problem file, or corpus:<name>")
    ap.add_argument("--field", default="q", metavar="q|fp:<p>",
                    help="coefficient field (default: q, the rationals)")
    ap.add_argument("--json", action="store_true", dest="as_json",
                    help="emit the JSON report instead of text")
    ap.add_argument("--oracle-depth", type=int, default=DEFAULT_ORACLE_DEPTH,
                    metavar="D",
                    help="degree bound for the brute-force dimension oracle")
    ap.add_argument("--seedless", action="store_true",
                    help="forbid nondeterminism (the pipeline is "
                         "deterministic; this asserts it)")
    ap.add_argument("--skip", action="append", default=[], metavar="CERT",
                    help="skip a named certificate (repeatable)")
    return ap


def parse_field(spec):
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        p = int(spec[3:])
        return PrimeField(p)
    raise ValueError("unknown field %r; expected q or fp:<p>" % spec)


def load_file(arg):
    if arg.startswith("corpus:"):
        name = arg.split(":", 1)[1]
        return load_corpus(name)
    with open(arg) as fh:
        return parse_problem(fh.read())


def run(argv=None):
    ap = build_arg_parser()
    args = ap.parse_args(argv)
    try:
        field = parse_field(args.field)
        pf = load_file(args.file)
        for skip in args.skip:
            if skip not in CERTIFICATE_NAMES:
                raise ValueError("unknown certificate %r (have: %s)"
                                 % (skip, ", ".join(CERTIFICATE_NAMES)))
        report, code = dispatch(args.command, pf, field, args)
    except (ParseError, HypothesisError, ValueError, OSError,
            KeyError) as exc:
        report = {"command": args.command, "input": args.file,
                  "error": _error_text(exc)}
        code = 2
    except Exception as exc:
        report = {"command": args.command, "input": args.file,
                  "error": "internal error: %r" % exc}
        code = 1
    emit(report, args.as_json)
    return code


def _error_text(exc):
    if isinstance(exc, HypothesisError):
        return {"hypothesis-failures": exc.failures}
    return str(exc)


def dispatch(command, pf, field, args):
    t_start = time.time()
    report = {"command": command, "name": pf.options.get("name")}
    ring = pf.build_ring(field)
    report["ring"] = {"variables": list(ring.names),
                      "weights": list(ring.weights),
                      "field": repr(ring.field)}

    if command in ("resolve", "hilbert"):
        ideal = pf.build_ideal(ring, "IX")
        if command == "resolve":
            res = minimal_free_resolution(ideal)
            report["betti"] = _betti_dict(res.betti())
            report["codim"] = codim(ideal)
            code = 0
        else:
            series = hilbert_series(ideal)
            depth = args.oracle_depth
            expanded = series.expand(depth)
            oracle = brute_dims(ideal, depth)
            report["hilbert"] = {"series": repr(series),
                                 "coefficients": expanded,
                                 "oracle": oracle,
                                 "oracle-depth": depth}
            code = 0 if expanded == oracle else 1
            if code:
                report["error"] = "series disagrees with the dimension oracle"
        report["seconds"] = round(time.time() - t_start, 3)
        return report, code

    problem = pf.to_problem(field)
    validate_problem(problem)
    report["mode"] = problem.mode
    report["k"] = problem.k
    result = run_unproject(problem)
    report["s"] = {"q": str(result.hom.q), "w": str(result.hom.w),
                   "deg-q": result.hom.q.homogeneous_degree(),
                   "deg-w": result.hom.w.homogeneous_degree(),
                   "wiggles": result.hom.wiggles}
    report["S"] = result.s_name
    report["numerators"] = [str(h) for h in result.numerators]
    report["I_Y"] = [str(g) for g in result.minimal_y_generators()]
    report["J"] = [str(g) for g in result.ideal_j.minimal_generators()]

    if command == "project":
        back = project_ideal(result.ideal_y, result.s_name)
        report["projected"] = [str(g) for g in back.minimal_generators()]
        ix = pf.build_ideal(back.ring, "IX")
        report["round-trip-equal"] = back.equals(ix)
        report["seconds"] = round(time.time() - t_start, 3)
        return report, 0 if report["round-trip-equal"] else 1

    cert_report = verify_certificates(result, skip=tuple(args.skip))
    report["certificates"] = cert_report.as_list()
    if problem.mode == "graded":
        gor = cert_report.by_name("gorenstein-of-Y")
        if gor is not None and gor.witness:
            report["betti-Y"] = gor.witness.get("betti")
        hil = cert_report.by_name("hilbert-identity")
        if hil is not None and hil.witness:
            report["hilbert-Y"] = hil.witness.get("P_Y")
    report["seconds"] = round(time.time() - t_start, 3)
    return report, 0 if cert_report.passed() else 2


def _betti_dict(betti):
    return {"totals": betti.totals(), "grid": betti.to_grid()}


def emit(report, as_json):
    if as_json:
        shown = dict(report)
        print(json.dumps(shown, indent=2, sort_keys=True))
        return
    width = 18
    for key, value in report.items():
        if key == "certificates":
            print("certificates".ljust(width))
            for c in value:
                line = "  %s %s" % (c["name"].ljust(width - 2), c["status"])
                if c.get("reason"):
                    line += " (%s)" % c["reason"]
                print(line)
            continue
        if isinstance(value, dict):
            print(key.ljust(width))
            for k2, v2 in value.items():
                print("  %s %s" % (str(k2).ljust(width - 2), v2))
            continue
        if isinstance(value, list):
            print(key.ljust(width))
            for item in value:
                print("  %s" % item)
            continue
        print("%s %s" % (key.ljust(width), value))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
