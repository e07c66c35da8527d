"""Command-line interface with exact rational I/O.

Exit codes: 0 success, 1 self-test failure, 2 parse or usage error,
3 domain error. Output formats: plain text (default) or JSON; the graph
command always emits CSV. Decimal renderings honor --precision and carry
a trailing ellipsis when inexact.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from .distribution import parse_distribution
from .errors import DomainError, ParseError
from .expansion import (
    NotDetected,
    decode,
    decode_periodic,
    encode,
    parse_digit_seq,
)
from .fmt import parse_rational, render_decimal
from .integral import integral_closed, integral_mc, integral_quadrature, integral_report
from .minkowski import (
    cylinder_increment,
    eval_minkowski,
    eval_minkowski_enclosure,
    eval_question_mark,
    graph_points,
    singularity_ratio_step,
)
from .selftest import run_all


def _check_precision(args) -> int:
    if args.precision < 1:
        raise ParseError(f"precision must be >= 1, got {args.precision}")
    return args.precision


def _parse_unit_rational(text: str) -> Fraction:
    return parse_rational(text)


def _emit(args, payload: dict, plain_lines: list) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in plain_lines:
            print(line)


def _rational_payload(value: Fraction, precision: int) -> dict:
    return {"rational": str(value), "decimal": render_decimal(value, precision)}


def cmd_eval(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    if args.digits is not None:
        value = eval_minkowski(dist, parse_digit_seq(args.digits))
        _emit(args, {"value": _rational_payload(value, precision)},
              [str(value), render_decimal(value, precision)])
        return 0
    x = _parse_unit_rational(args.x)
    if args.enclose is not None:
        enclosure = eval_minkowski_enclosure(dist, x, args.enclose)
        payload = {
            "lower": _rational_payload(enclosure.lower, precision),
            "upper": _rational_payload(enclosure.upper, precision),
            "exact": enclosure.exact,
        }
        _emit(args, payload, [
            f"lower {enclosure.lower}",
            f"upper {enclosure.upper}",
            f"lower_decimal {render_decimal(enclosure.lower, precision)}",
            f"upper_decimal {render_decimal(enclosure.upper, precision)}",
        ])
        return 0
    value = eval_minkowski(dist, x, max_steps=args.max_steps)
    _emit(args, {"value": _rational_payload(value, precision)},
          [str(value), render_decimal(value, precision)])
    return 0


def cmd_encode(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    value = encode(dist, parse_digit_seq(args.digits))
    _emit(args, {"value": _rational_payload(value, precision)},
          [str(value), render_decimal(value, precision)])
    return 0


def cmd_decode(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    x = _parse_unit_rational(args.x)
    if args.periodic:
        seq = decode_periodic(dist, x, max_steps=args.max_steps)
        if isinstance(seq, NotDetected):
            raise DomainError(
                f"no digit period detected for {x} within {args.max_steps} steps"
            )
        _emit(args, {"digits": str(seq)}, [str(seq)])
        return 0
    digits, remainder = decode(dist, x, args.depth)
    payload = {
        "digits": list(digits),
        "remainder": _rational_payload(remainder, precision),
    }
    _emit(args, payload, [
        "digits " + ",".join(str(d) for d in digits),
        f"remainder {remainder}",
    ])
    return 0


def cmd_qmark(args) -> int:
    precision = _check_precision(args)
    value = eval_question_mark(_parse_unit_rational(args.x))
    _emit(args, {"value": _rational_payload(value, precision)},
          [str(value), render_decimal(value, precision)])
    return 0


def cmd_integral(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    if args.method == "closed":
        forms = integral_closed(dist)
        payload = {
            "closed_form_alpha": _rational_payload(forms.alpha_form, precision),
            "closed_form_gamma": _rational_payload(forms.gamma_form, precision),
        }
        _emit(args, payload, [
            f"closed_form_alpha {forms.alpha_form}",
            f"closed_form_gamma {forms.gamma_form}",
        ])
        return 0
    if args.method == "quad":
        quad = integral_quadrature(dist, args.depth, args.cap)
        payload = {
            "lower": _rational_payload(quad.lower, precision),
            "upper": _rational_payload(quad.upper, precision),
            "width": _rational_payload(quad.width, precision),
        }
        _emit(args, payload, [
            f"lower {quad.lower}",
            f"upper {quad.upper}",
            f"width_decimal {render_decimal(quad.width, precision)}",
        ])
        return 0
    if args.method == "mc":
        mc = integral_mc(dist, args.samples, args.seed)
        payload = {
            "mean": _rational_payload(mc.mean, precision),
            "stderr": f"{mc.stderr:.3e}",
            "samples": mc.samples,
            "seed": mc.seed,
        }
        _emit(args, payload, [
            f"mean {mc.mean}",
            f"mean_decimal {render_decimal(mc.mean, precision)}",
            f"stderr {mc.stderr:.3e}",
        ])
        return 0
    report = integral_report(
        dist, depth=args.depth, cap=args.cap, samples=args.samples, seed=args.seed
    )
    payload = report.to_json_dict(precision)
    plain = [
        f"alpha {report.alpha}",
        f"gamma {report.gamma}",
        f"closed_form_alpha {report.closed_form_alpha}",
        f"closed_form_gamma {report.closed_form_gamma}",
        f"quadrature_lower {report.quadrature.lower}",
        f"quadrature_upper {report.quadrature.upper}",
        f"quadrature_width_decimal {render_decimal(report.quadrature.width, precision)}",
        f"mc_mean_decimal {render_decimal(report.mc.mean, precision)}",
        f"mc_stderr {report.mc.stderr:.3e}",
        f"verdict {report.verdict}",
    ]
    _emit(args, payload, plain)
    return 0


def cmd_graph(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    result = graph_points(dist, args.depth, args.cap)
    rows = sorted(result.points)
    if args.out:
        with open(args.out, "w", newline="") as handle:
            _write_graph_csv(handle, rows, precision)
        print(f"points {len(rows)}")
        print(f"uncovered_mass {result.uncovered_mass}")
    else:
        _write_graph_csv(sys.stdout, rows, precision)
    return 0


def _write_graph_csv(handle, rows, precision: int) -> None:
    writer = csv.writer(handle)
    writer.writerow(["x_rational", "y_rational", "x_decimal", "y_decimal"])
    for x, y in rows:
        writer.writerow(
            [str(x), str(y), render_decimal(x, precision), render_decimal(y, precision)]
        )


def _parse_digit_word(text: str) -> tuple:
    """A finite digit word as a plain comma list; trailing ones are kept."""
    parts = [p.strip() for p in text.split(",")]
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"expected a finite digit word like '2,1,3', got {text!r}")
    word = tuple(int(p) for p in parts)
    if any(d < 1 for d in word):
        raise ParseError(f"digits must be positive integers: {text!r}")
    return word


def cmd_diagnose(args) -> int:
    precision = _check_precision(args)
    dist = parse_distribution(args.dist)
    word = _parse_digit_word(args.digits)
    reports = [cylinder_increment(dist, word[:n]) for n in range(1, len(word) + 1)]
    payload = {"prefixes": []}
    plain = []
    for n, rep in enumerate(reports, start=1):
        entry = {
            "digits": list(rep.digits),
            "digit_sum": rep.digit_sum,
            "delta": _rational_payload(rep.delta, precision),
            "measure": _rational_payload(rep.measure, precision),
            "quotient": _rational_payload(rep.quotient, precision),
        }
        plain.append(
            f"depth {n} digits {','.join(str(d) for d in rep.digits)} "
            f"delta {rep.delta} measure {rep.measure} quotient {rep.quotient}"
        )
        if n > 1:
            step = singularity_ratio_step(dist, rep.digits[-1])
            ratio = rep.quotient / reports[n - 2].quotient
            entry["quotient_step"] = _rational_payload(ratio, precision)
            entry["quotient_step_matches_formula"] = ratio == step
            plain.append(f"  quotient step {ratio} formula {step} match {ratio == step}")
        payload["prefixes"].append(entry)
    _emit(args, payload, plain)
    return 0


def cmd_selftest(args) -> int:
    results = run_all(quick=args.quick)
    failed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
        failed += 0 if result.passed else 1
    if failed:
        print(f"{failed} of {len(results)} criteria failed")
        return 1
    print(f"all {len(results)} criteria passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probmink",
        description=(
            "Exact digit expansions driven by distributions on the positive "
            "integers, the Minkowski-type functions they induce, and the "
            "classical question-mark function."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json"), default="plain")
        p.add_argument("--precision", type=int, default=30,
                       help="decimal digits for renderings (default 30)")

    p = sub.add_parser("eval", help="evaluate the induced function")
    p.add_argument("--dist", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--digits", help="digit sequence, e.g. '1,2(1)' or '(2)'")
    group.add_argument("--x", help="rational point in [0,1)")
    p.add_argument("--enclose", type=int, default=None, metavar="DEPTH",
                   help="bracket the value from DEPTH digits instead of decoding a period")
    p.add_argument("--max-steps", type=int, default=4096)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("encode", help="digit sequence to exact point")
    p.add_argument("--dist", required=True)
    p.add_argument("--digits", required=True)
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="exact point to digits")
    p.add_argument("--dist", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--periodic", action="store_true",
                   help="recover the full eventually periodic sequence")
    p.add_argument("--max-steps", type=int, default=4096)
    common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("qmark", help="classical question-mark function")
    p.add_argument("--x", required=True, help="rational in [0,1]")
    common(p)
    p.set_defaults(func=cmd_qmark)

    p = sub.add_parser("integral", help="integral of the induced function")
    p.add_argument("--dist", required=True)
    p.add_argument("--method", choices=("all", "closed", "quad", "mc"), default="all")
    p.add_argument("--depth", type=int, default=14)
    p.add_argument("--cap", type=int, default=40)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    common(p)
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("graph", help="exact graph sample as CSV")
    p.add_argument("--dist", required=True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("diagnose", help="cylinder increments along a digit word")
    p.add_argument("--dist", required=True)
    p.add_argument("--digits", required=True, help="finite digit word, e.g. '2,1,3'")
    common(p)
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--quick", action="store_true", help="reduced sample counts")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
