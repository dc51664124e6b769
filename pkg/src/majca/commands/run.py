import sys
from argparse import Namespace

from loguru import logger

from majca.analysis.stability import stability_grid
from majca.commands.common import emit, json_document, request_from
from majca.core.automaton import Rule, parse_configuration, simulate
from majca.models.requests import RunRequest
from majca.models.responses import RunResult
from majca.rendering.spacetime import RenderSpec, render_spacetime


def add_parser(subparsers):
    parser = subparsers.add_parser("run", help="Evolve a configuration and draw its space-time diagram")
    parser.add_argument("--rule", choices=["maj", "min"], default="maj")
    parser.add_argument("-r", "--radius", type=int, required=True)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--init", help="Initial configuration as a 0/1 string")
    source.add_argument("--pattern", help="Pattern repeated --copies times")
    parser.add_argument("--copies", type=int)
    parser.add_argument("--steps", type=int, required=True)
    parser.add_argument("--format", choices=["text", "svg", "pgm", "json"], default="text")
    parser.add_argument("--overlay", action="store_true", help="Label every cell S, W or U")
    parser.add_argument("--cell-size", type=int, help="Pixels per cell for svg and pgm")
    parser.add_argument("--output", help="Write the document to this file instead of stdout")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: Namespace, out=None) -> int:
    out = out or sys.stdout.buffer
    request = request_from(args, RunRequest)
    rule = Rule(kind=request.rule, radius=request.radius)
    cfg = parse_configuration(request.text, request.copies)

    logger.info(f"Running {rule} on n={cfg.n} for {request.steps} steps")
    trajectory = simulate(cfg, rule, request.steps)
    maps = stability_grid(trajectory) if request.overlay else None

    if request.format == "json":
        result = RunResult(
            rule=request.rule.value,
            radius=request.radius,
            n=cfg.n,
            steps=trajectory.steps,
            states=[state.to_text() for state in trajectory.states],
            labels=[m.letters() for m in maps] if maps else None,
            preperiod=trajectory.preperiod,
            period=trajectory.period,
        )
        document = json_document("run", result)
    else:
        spec = RenderSpec(format=request.format, overlay=request.overlay, cell_size=request.cell_size)
        document = render_spacetime(trajectory, maps, spec)

    emit(document, out, request.output)
    return 0
