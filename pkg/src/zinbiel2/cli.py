"""Command-line interface: load JSON inputs, run checks and constructions,
emit deterministic reports.

Exit codes: 0 all checks clean / construction succeeded; 1 violations found
(report still emitted); 2 input or schema error; 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .classify import census as run_census
from .classify import check_rs_conditions, check_rs_direct
from .core import check_crossed_module, check_zinbiel
from .errors import (BudgetExceeded, InfeasibleSearch, PreconditionError,
                     SchemaError, Zinbiel2Error)
from .fields import field_from_name
from .io import (datum_to_json, load_document, matched_pair_to_json,
                 pretty_dumps, report_to_json, two_algebra_to_json)
from .linalg import LinMap
from .special import check_crossed_system, check_ideal_extension, check_matched_pair, factorize
from .unified import (build_unified_product, check_datum_conditions,
                      check_datum_direct, check_trivial_z1_conditions,
                      extract_datum, verify_psi)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _field_override(args):
    if args.field is None:
        return None
    return field_from_name(args.field, allow_small_char=args.allow_small_char)


def _render_report(rep, fmt, out):
    if fmt == "json":
        out.write(pretty_dumps(report_to_json(rep)))
        return
    status = "ok" if rep.ok else f"{len(rep.violations)} violation(s)"
    out.write(f"result: {status}\n")
    if not rep.conforming_field:
        out.write("note: non-conforming characteristic (GF(2)/GF(3) override)\n")
    for v in rep.violations:
        witness = ",".join(str(i + 1) for i in v.witness)
        lhs = "(" + ", ".join(map(str, v.lhs)) + ")"
        rhs = "(" + ", ".join(map(str, v.rhs)) + ")"
        out.write(f"  ({v.cond}) at ({witness}): lhs {lhs} != rhs {rhs}\n")
    if rep.truncated:
        out.write("  ... report truncated at the violation cap\n")
    for fl in rep.flags:
        marker = " [disagrees here]" if fl.as_printed_disagrees else ""
        out.write(f"  flag ({fl.cond}): {fl.note}{marker}\n")


def _finish_report(rep, args, out):
    _render_report(rep, args.format, out)
    if not rep.ok:
        return EXIT_VIOLATIONS
    if args.typo_strict and any(fl.as_printed_disagrees for fl in rep.flags):
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_check_zinbiel(args, out):
    _, val, _ = load_document(args.input, expect_kind="zinbiel_algebra",
                              field_override=_field_override(args),
                              allow_small_char=args.allow_small_char)
    return _finish_report(check_zinbiel(val, cap=args.cap), args, out)


def cmd_check_2alg(args, out):
    _, val, _ = load_document(args.input, expect_kind="zinbiel_2_algebra",
                              field_override=_field_override(args),
                              allow_small_char=args.allow_small_char)
    return _finish_report(check_crossed_module(val, cap=args.cap), args, out)


def cmd_check_datum(args, out):
    _, datum, _ = load_document(args.input, expect_kind="extending_datum",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    direct = check_datum_direct(datum, cap=args.cap)
    conds = check_datum_conditions(datum, cap=args.cap, check_z=False,
                                   strict_printed=args.typo_strict)
    if args.format == "json":
        out.write(pretty_dumps({"direct": report_to_json(direct),
                                "conditions": report_to_json(conds),
                                "agreement": direct.ok == conds.ok}))
    else:
        out.write("== direct (build then verify axioms) ==\n")
        _render_report(direct, args.format, out)
        out.write("== condition list Z1..Z120 ==\n")
        _render_report(conds, args.format, out)
        out.write(f"agreement: {direct.ok == conds.ok}\n")
    if not direct.ok or not conds.ok:
        return EXIT_VIOLATIONS
    if args.typo_strict and any(fl.as_printed_disagrees for fl in conds.flags):
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_build_product(args, out):
    _, datum, _ = load_document(args.input, expect_kind="extending_datum",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    product = build_unified_product(datum)
    out.write(pretty_dumps(two_algebra_to_json(product)))
    return EXIT_OK


def cmd_extract_datum(args, out):
    _, split, _ = load_document(args.input, expect_kind="complement_split",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    datum = extract_datum(split, cap=args.cap)
    psi_rep = verify_psi(split, datum, cap=args.cap)
    if args.format == "json":
        out.write(pretty_dumps({"datum": datum_to_json(datum),
                                "psi": report_to_json(psi_rep)}))
    else:
        out.write(pretty_dumps(datum_to_json(datum)))
        _render_report(psi_rep, args.format, out)
    return EXIT_OK if psi_rep.ok else EXIT_VIOLATIONS


def cmd_check_crossed(args, out):
    _, cs, _ = load_document(args.input, expect_kind="crossed_system",
                             field_override=_field_override(args),
                             allow_small_char=args.allow_small_char)
    rep = check_crossed_system(cs, cap=args.cap, strict_printed=args.typo_strict)
    return _finish_report(rep, args, out)


def cmd_check_matched(args, out):
    _, mp, _ = load_document(args.input, expect_kind="matched_pair",
                             field_override=_field_override(args),
                             allow_small_char=args.allow_small_char)
    rep = check_matched_pair(mp, cap=args.cap, strict_printed=args.typo_strict)
    return _finish_report(rep, args, out)


def cmd_check_trivial(args, out):
    _, datum, _ = load_document(args.input, expect_kind="extending_datum",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    rep = check_trivial_z1_conditions(datum, cap=args.cap,
                                      strict_printed=args.typo_strict)
    return _finish_report(rep, args, out)


def cmd_factorize(args, out):
    _, split, _ = load_document(args.input, expect_kind="complement_split",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    iota_v1 = LinMap.from_columns(split.field, list(split.vbasis1), split.e.z1.dim) \
        if split.vbasis1 else LinMap.zero(split.field, split.e.z1.dim, 0)
    iota_v0 = LinMap.from_columns(split.field, list(split.vbasis0), split.e.z0.dim) \
        if split.vbasis0 else LinMap.zero(split.field, split.e.z0.dim, 0)
    mp = factorize(split.e, (split.iota1, split.iota0), (iota_v1, iota_v0))
    out.write(pretty_dumps(matched_pair_to_json(mp)))
    return EXIT_OK


def cmd_check_ideal(args, out):
    _, split, _ = load_document(args.input, expect_kind="complement_split",
                                field_override=_field_override(args),
                                allow_small_char=args.allow_small_char)
    from .io import crossed_system_to_json
    cs = check_ideal_extension(split, cap=args.cap)
    out.write(pretty_dumps(crossed_system_to_json(cs)))
    return EXIT_OK


def cmd_check_morphism(args, out):
    _, triple, _ = load_document(args.input, expect_kind="rs_morphism",
                                 field_override=_field_override(args),
                                 allow_small_char=args.allow_small_char)
    datum, datum_p, rs = triple
    hrep = check_rs_conditions(rs, datum, datum_p, cap=args.cap,
                               strict_printed=args.typo_strict)
    drep = check_rs_direct(rs, datum, datum_p, cap=args.cap)
    iso = rs.is_isomorphism_shape() and drep.ok
    if args.format == "json":
        out.write(pretty_dumps({"criterion": report_to_json(hrep),
                                "direct": report_to_json(drep),
                                "agreement": hrep.ok == drep.ok,
                                "is_isomorphism": iso}))
    else:
        out.write("== criterion H1..H20 ==\n")
        _render_report(hrep, args.format, out)
        out.write("== direct morphism check ==\n")
        _render_report(drep, args.format, out)
        out.write(f"agreement: {hrep.ok == drep.ok}\n")
        out.write(f"is_isomorphism: {iso}\n")
    if not hrep.ok or not drep.ok:
        return EXIT_VIOLATIONS
    if args.typo_strict and any(fl.as_printed_disagrees for fl in hrep.flags):
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_classify(args, out):
    field = field_from_name(args.field_req, allow_small_char=args.allow_small_char)
    _, z, _ = load_document(args.z, expect_kind="zinbiel_2_algebra",
                            field_override=field,
                            allow_small_char=args.allow_small_char)
    try:
        n1, n0 = (int(x) for x in args.vdims.split(","))
    except ValueError:
        raise SchemaError("expected --vdims n1,n0", "$", None) from None
    if args.d is not None:
        _, dmap, _ = load_document(args.d, expect_kind="linmap", field_override=field)
    else:
        dmap = LinMap.zero(field, n0, n1)
    out.write(pretty_dumps(run_census(field, z, (n1, n0), dmap,
                                      budget=args.budget, jobs=args.jobs)))
    return EXIT_OK


_COMMANDS = {
    "check-zinbiel": (cmd_check_zinbiel, "verify the defining identity of an algebra"),
    "check-2alg": (cmd_check_2alg, "verify all 2-algebra axioms"),
    "check-datum": (cmd_check_datum, "run the condition list and the direct oracle on a datum"),
    "check-trivial-z1": (cmd_check_trivial, "run the reduced ZZ list (dim Z1 = 0)"),
    "build-product": (cmd_build_product, "assemble the product 2-algebra of a datum"),
    "extract-datum": (cmd_extract_datum, "read a datum off an ambient algebra along a split"),
    "check-crossed": (cmd_check_crossed, "run the CZ list on a crossed system"),
    "check-matched": (cmd_check_matched, "run the BZ list on a matched pair"),
    "check-ideal": (cmd_check_ideal, "verify the ideal condition and extract a crossed system"),
    "factorize": (cmd_factorize, "factor an algebra through two embedded subalgebras"),
    "check-morphism": (cmd_check_morphism, "run the H list and direct check on a block map"),
    "classify": (cmd_classify, "enumerate valid data over GF(p) and compute both quotients"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zinbiel2",
        description="Exact checks, products, and classification for Zinbiel 2-algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        if name == "classify":
            p.add_argument("--field", dest="field_req", required=True,
                           help="q or gf<p> (classification requires gf<p>)")
            p.add_argument("--z", required=True, help="zinbiel_2_algebra JSON file")
            p.add_argument("--vdims", required=True, help="complement dims n1,n0")
            p.add_argument("--d", default=None, help="optional linmap JSON for d")
            p.add_argument("--jobs", type=int, default=1)
        else:
            p.add_argument("input", help="input JSON file")
            p.add_argument("--field", default=None, help="override field: q or gf<p>")
        p.add_argument("--allow-small-char", action="store_true",
                       help="permit GF(2)/GF(3); reports are marked non-conforming")
        p.add_argument("--budget", type=int, default=5 ** 8,
                       help="candidate budget for enumerations")
        p.add_argument("--cap", type=int, default=100,
                       help="violation cap per report")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--typo-strict", action="store_true",
                       help="escalate typo-suspect disagreements to exit 1")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, InfeasibleSearch) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        if exc.report is not None:
            _render_report(exc.report, args.format, out)
        return EXIT_VIOLATIONS
    except Zinbiel2Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VIOLATIONS


if __name__ == "__main__":
    sys.exit(main())
