import sys
from argparse import Namespace

from loguru import logger

from majca.commands.common import emit, json_document, request_from, text_document
from majca.core.automaton import Configuration, Rule
from majca.enumeration.bruteforce import enumerate_bruteforce
from majca.enumeration.canonical import canonicalize
from majca.enumeration.patterns import enumerate_from_patterns
from majca.models.requests import EnumerateRequest
from majca.models.responses import EnumerateResult


def add_parser(subparsers):
    parser = subparsers.add_parser("enumerate", help="List every temporally periodic ring of one size")
    parser.add_argument("-r", "--radius", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.add_argument("--method", choices=["brute", "pattern", "both"], default="brute")
    parser.add_argument("--canonical", action="store_true", help="One representative per symmetry class")
    parser.add_argument("--rule", choices=["maj", "min"], default="maj")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=handle)
    return parser


def _listing(found: list[Configuration], canonical: bool) -> list[str]:
    if canonical:
        representatives = {canonicalize(cfg).representative for cfg in found}
        found = sorted(representatives, key=lambda cfg: cfg.bits)
    return [cfg.to_text() for cfg in found]


def enumerate_periodic(request: EnumerateRequest) -> EnumerateResult:
    # both rules have the same periodic set, the pattern method is rule-free
    rule = Rule(kind=request.rule, radius=request.radius)
    brute = pattern = None
    if request.method in ("brute", "both"):
        brute = _listing(enumerate_bruteforce(request.n, request.radius, rule), request.canonical)
    if request.method in ("pattern", "both"):
        pattern = _listing(enumerate_from_patterns(request.n, request.radius), request.canonical)

    match = None
    if brute is not None and pattern is not None:
        match = brute == pattern
        if not match:
            logger.warning(f"Enumerators disagree at n={request.n}, r={request.radius}")
    return EnumerateResult(
        n=request.n,
        radius=request.radius,
        rule=request.rule.value,
        method=request.method,
        canonical=request.canonical,
        brute=brute,
        pattern=pattern,
        match=match,
    )


def handle(args: Namespace, out=None) -> int:
    out = out or sys.stdout.buffer
    request = request_from(args, EnumerateRequest)
    result = enumerate_periodic(request)

    if request.format == "json":
        emit(json_document("enumerate", result), out)
        return 0

    if result.match is None:
        lines = result.brute if result.brute is not None else result.pattern
    else:
        lines = [f"# brute ({len(result.brute)})", *result.brute]
        lines += [f"# pattern ({len(result.pattern)})", *result.pattern]
        lines.append("MATCH" if result.match else "MISMATCH")
    emit(text_document(lines) if lines else b"", out)
    return 0
