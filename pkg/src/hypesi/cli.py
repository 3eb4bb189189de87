"""Command line front end."""

import argparse
import sys

from .const import TOL, InvariantError, load_tolerance_from_env, set_base_tolerance
from . import connectors as con
from . import esi as esimod
from . import frames
from . import groups
from . import records
from . import svg
from .farey import RationalLabel, labels_up_to, primitive_word, continued_fraction


def _frame_for(args):
    gen_a, gen_b = groups.load_group(args.group)
    return frames.build_frame(gen_a, gen_b)


def _write_out(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args):
    for label in labels_up_to(args.max_sum):
        word = primitive_word(label)
        kind = "palindrome" if word.is_palindrome() else "product"
        print("%s\t%s\t%s" % (label, word.letters, kind))
    return 0


def cmd_word(args):
    label = RationalLabel.parse(args.label)
    print(primitive_word(label).letters)
    return 0


def cmd_esi(args):
    frame = _frame_for(args)
    label = RationalLabel.parse(args.label)
    esiset = esimod.esi_points(frame, label)
    _write_out(args, records.esi_table(esiset))
    expected, _ = esiset.expected_counts
    return 0 if esiset.essential_count == expected else 1


def cmd_connectors(args):
    frame = _frame_for(args)
    label = RationalLabel.parse(args.label)
    cset = con.connectors(frame, label)
    _write_out(args, records.connector_table(cset))
    expected, _ = cset.expected_counts
    ok = (cset.mark_count == expected
          and all(r.orthogonal for r in cset.records)
          and cset.loop_count == max(label.length, 1)
          and (label.p == 0 or label.q == 0
               or cset.loops.totals() == {"A": label.q, "B": label.p}))
    return 0 if ok else 1


def cmd_check_model(args):
    frame = _frame_for(args)
    report = frames.validate_model_group(frame)
    for name, value in report.rows():
        print("%s\t%s" % (name, str(value).lower()))
    return 0 if report.verdict else 1


def cmd_check_winding(args):
    frame = _frame_for(args)
    report = frames.winding_group_check(frame, args.word_len, args.sample_cap)
    for name, value in report.rows():
        print("%s\t%s" % (name, str(value).lower()))
    return 0 if report.verdict else 1


def cmd_plot(args):
    frame = _frame_for(args)
    label = RationalLabel.parse(args.label)
    esiset = esimod.esi_points(frame, label)
    scene = svg.esi_scene(frame, esiset)
    data = svg.render_svg(scene)
    with open(args.out, "wb") as fh:
        fh.write(data)
    return 0


def cmd_verify(args):
    frame = _frame_for(args)
    failures = 0
    for label in labels_up_to(args.max_sum):
        if label.p == 0 or label.q == 0:
            continue
        esiset = esimod.esi_points(frame, label)
        expected, expected_quotient = esiset.expected_counts
        loops = esimod.loop_decomposition(frame, esiset)
        ok = (esiset.essential_count == expected
              and esiset.quotient_count == expected_quotient
              and loops.count == label.length
              and loops.totals() == {"A": label.q, "B": label.p}
              and esimod.runs_match_continued_fraction(label, loops))
        if not ok:
            failures += 1
        print("%s\tword=%s\tessential=%d/%d\tloops=%d\truns=%s\tcf=%s\t%s"
              % (label, esiset.word.letters, esiset.essential_count,
                 expected, loops.count,
                 ",".join(str(n) for n in loops.run_lengths),
                 ",".join(str(a) for a in continued_fraction(label)),
                 "ok" if ok else "FAIL"))
    return 0 if failures == 0 else 1


def cmd_deform(args):
    label = RationalLabel.parse(args.label)
    steps = args.steps
    worst_sep = 0.0
    worst_res = 0.0
    code = 0
    for i in range(steps + 1):
        t = 1.0 - i / float(steps)
        gen_a, gen_b = groups.bend_reference(args.bend_a * t, args.bend_b * t)
        frame = frames.build_frame(gen_a, gen_b)
        cset = con.connectors(frame, label)
        sep = max((r.foot_separation for r in cset.records), default=0.0)
        res = max((max(r.residual_line, r.residual_axis, r.residual_turn)
                   for r in cset.records), default=0.0)
        print("step=%d bend_a=%.6f bend_b=%.6f marks=%d loops=%d "
              "max_separation=%.3e max_residual=%.3e"
              % (i, args.bend_a * t, args.bend_b * t, cset.mark_count,
                 cset.loop_count, sep, res))
        expected, _ = cset.expected_counts
        if cset.mark_count != expected or cset.loop_count != label.length:
            code = 1
        if i == steps:
            worst_sep = sep
            worst_res = res
    if worst_sep > 1e-7 or worst_res > 1e-7:
        code = 1
    print("flat_separation=%.3e flat_residual=%.3e" % (worst_sep, worst_res))
    return code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypesi",
        description="Crossing and connector data of primitive curves "
                    "on two-generator hyperbolic groups.")
    parser.add_argument("--tol", type=float, default=None,
                        help="override the base numeric tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list labels and their words")
    p.add_argument("max_sum", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("word", help="print the word of one label")
    p.add_argument("label")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("esi", help="planar crossing records of a label")
    p.add_argument("label")
    p.add_argument("--group", default="reference")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_esi)

    p = sub.add_parser("connectors", help="connector records of a label")
    p.add_argument("label")
    p.add_argument("--group", default="reference")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_connectors)

    p = sub.add_parser("check-model", help="certify the planar model shape")
    p.add_argument("--group", default="reference")
    p.set_defaults(func=cmd_check_model)

    p = sub.add_parser("check-winding",
                       help="sampled support-plane test on the core axes")
    p.add_argument("--group", default="reference")
    p.add_argument("--word-len", type=int, default=8)
    p.add_argument("--sample-cap", type=int, default=40000)
    p.set_defaults(func=cmd_check_winding)

    p = sub.add_parser("plot", help="SVG picture of the planar records")
    p.add_argument("label")
    p.add_argument("--group", default="reference")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify",
                       help="sweep labels and check counts, loops, runs")
    p.add_argument("--max-sum", type=int, default=8)
    p.add_argument("--group", default="reference")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("deform",
                       help="bend the reference group back to flat in steps")
    p.add_argument("label")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--bend-a", type=float, default=0.0)
    p.add_argument("--bend-b", type=float, default=0.2)
    p.set_defaults(func=cmd_deform)

    return parser


def main(argv=None):
    load_tolerance_from_env()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is not None:
        set_base_tolerance(args.tol)
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InvariantError as exc:
        print("invariant violation: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
