import sys
from argparse import Namespace

from loguru import logger

from majca.analysis.periodicity import classify_theorem, temporal_class
from majca.analysis.stability import classify_stability
from majca.commands.common import emit, json_document, request_from, text_document
from majca.core.automaton import Rule, parse_configuration
from majca.models.requests import ClassifyRequest
from majca.models.responses import ClassifyResult


def add_parser(subparsers):
    parser = subparsers.add_parser("classify", help="Temporal class and structure case of one configuration")
    parser.add_argument("--rule", choices=["maj", "min"], default="maj")
    parser.add_argument("-r", "--radius", type=int, required=True)
    parser.add_argument("--init", required=True)
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=handle)
    return parser


def classify(request: ClassifyRequest) -> ClassifyResult:
    cfg = parse_configuration(request.init)
    rule = Rule(kind=request.rule, radius=request.radius)
    cls = temporal_class(cfg, rule)
    # the case split depends on the labels only, which both rules share
    theorem = classify_theorem(cfg, request.radius)
    return ClassifyResult(
        config=cfg.to_text(),
        rule=request.rule.value,
        radius=request.radius,
        temporal_class=cls.tag.value,
        partner=cls.partner.to_text() if cls.partner else None,
        case=theorem.case.value,
        spatial_period=theorem.spatial_period,
        max_unstable_run=theorem.max_unstable_run,
        labels=classify_stability(cfg, rule).letters(),
    )


def handle(args: Namespace, out=None) -> int:
    out = out or sys.stdout.buffer
    request = request_from(args, ClassifyRequest)
    result = classify(request)
    logger.info(f"{result.config}: {result.temporal_class}, {result.case}")

    if request.format == "json":
        emit(json_document("classify", result), out)
    else:
        lines = [f"{key}: {'-' if value is None else value}" for key, value in result.model_dump().items()]
        emit(text_document(lines), out)
    return 0
