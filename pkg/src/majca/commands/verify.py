import sys
from argparse import Namespace

from majca.commands.common import emit, json_document, request_from, text_document
from majca.models.requests import VerifyRequest
from majca.verification.suite import VerificationReport, run_suite


def add_parser(subparsers):
    parser = subparsers.add_parser("verify", help="Check every law over exhaustive and seeded random rings")
    parser.add_argument("-r", "--radius", type=int, required=True)
    parser.add_argument("--n-max", type=int, required=True)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trajectory-n", type=int, help="ring size of the random trajectory checks")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=handle)
    return parser


def report_lines(report: VerificationReport) -> list[str]:
    lines = [
        f"radius: {report.radius}",
        f"n_max: {report.n_max}",
        f"samples: {report.samples}",
        f"seed: {report.seed}",
        f"trajectory_n: {report.trajectory_n}",
    ]
    for check in report.checks:
        status = "ok" if check.passed else "FAIL"
        lines.append(f"{check.name}: {status} ({check.instances} instances, {check.violations} violations)")
        lines.extend(f"  {example}" for example in check.counterexamples)
    stats = report.convergence
    lines.append(
        f"convergence: max preperiod {stats.max_preperiod}, "
        f"max preperiod/n {stats.max_preperiod_ratio} ({stats.worst or '-'})"
    )
    lines.append(
        f"unstable plateaus: {stats.unstable_plateaus} ({stats.plateau_example or '-'}), "
        f"unconverged: {stats.failures}"
    )
    lines.append("PASS" if report.passed else "FAIL")
    return lines


def handle(args: Namespace, out=None) -> int:
    out = out or sys.stdout.buffer
    request = request_from(args, VerifyRequest)
    report = run_suite(
        request.radius, request.n_max, request.samples, request.seed, request.trajectory_n
    )

    if request.format == "json":
        message = "Success" if report.passed else "Verification failed"
        emit(json_document("verify", report, message), out)
    else:
        emit(text_document(report_lines(report)), out)
    return 0 if report.passed else 1
