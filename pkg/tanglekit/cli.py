"""
Command-line front end.

    python -m tanglekit [--json] [--verbose] <command> ...

Tangle arguments are paths to `.tgl` files. Exit status is 0 on success,
1 when the library rejects the input and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, Tuple

from pydantic import BaseModel

from .braidcore import parse_braid
from .config import get_settings
from .errors import TanglekitError
from .gtcore import parse_gt, serialize_gt, verify
from .isotopy import connected_sum, simplify_traced
from .knotaction import TwoBridgeForm, act_knot, act_tangle, lambda_power, mirror_tangle
from .render import render
from .schemas import (
    ErrorModel,
    FractionModel,
    GTReportModel,
    InvariantsModel,
    MoveModel,
    PolyModel,
    RenderModel,
    SimplifyModel,
    TangleModel,
    TwoBridgeModel,
    VerdictModel,
)
from .search import equivalent
from .tanglecalc import Tangle, alpha, is_knot, parse, serialize

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], Tuple[BaseModel, str]]


def load_tangle(path: str) -> Tangle:
    return parse(Path(path).read_text(encoding="utf-8"))


def _poly_line(name: str, poly: Optional[PolyModel]) -> str:
    if poly is None:
        return f"{name}: skipped (crossing cap)"
    line = f"{name}: {poly.text}"
    if poly.in_t is not None:
        line += f"\n{name} (t): {poly.in_t}"
    return line


# ---------------------------------------------------------------------------
# commands


def cmd_parse(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    t = load_tangle(args.tangle)
    model = TangleModel.of(t)
    return model, (
        f"{model.text}\n"
        f"boundary: {model.source or '∅'} -> {model.target or '∅'}, "
        f"{len(t.items)} elements, {model.components} components, {model.crossings} crossings"
    )


def cmd_simplify(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    t = load_tangle(args.tangle)
    reduced, trace = simplify_traced(t, args.framed)
    logger.info("simplify: %d -> %d elements in %d moves", len(t.items), len(reduced.items), len(trace))
    return SimplifyModel(tangle=TangleModel.of(reduced), trace=[MoveModel.of(m) for m in trace]), serialize(reduced)


def cmd_invariants(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    model = InvariantsModel.of(load_tangle(args.tangle), args.t_variable)
    lines = [
        f"components: {model.components}",
        f"crossings: {model.crossings}",
        f"writhe: {model.writhe}",
        _poly_line("bracket", model.bracket),
        _poly_line("jones", model.jones),
    ]
    return model, "\n".join(lines)


def cmd_sum(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    result = connected_sum(load_tangle(args.first), load_tangle(args.second), args.framed)
    return TangleModel.of(result), serialize(result)


def cmd_mirror(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    result = mirror_tangle(load_tangle(args.tangle))
    return TangleModel.of(result), serialize(result)


def cmd_act(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    p = parse_gt(args.gt)
    t = load_tangle(args.tangle)
    if is_knot(t):
        fraction = act_knot(p, t, args.framed)
        num, den = fraction.num, fraction.den
    else:
        num, den = act_tangle(p, t), lambda_power(p.f, alpha(t), args.framed)
    gt = serialize_gt(p)
    if args.out:
        header = f"# act {gt} alpha(num)={alpha(num)} alpha(den)={alpha(den)}\n"
        for path, part in zip(args.out, (num, den)):
            Path(path).write_text(header + serialize(part) + "\n", encoding="utf-8")
            logger.info("wrote %s", path)
    return FractionModel.of(gt, num, den), f"numerator: {serialize(num)}\ndenominator: {serialize(den)}"


def cmd_verify_gt(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    p = parse_gt(args.gt)
    model = GTReportModel.of(serialize_gt(p), verify(p))
    lines = [
        model.gt,
        f"two-cycle: {model.two_cycle} ({model.two_cycle_witness})",
        f"hexagon: {model.hexagon} ({model.hexagon_witness})",
        f"pentagon: {model.pentagon} ({model.pentagon_witness[0]} | {model.pentagon_witness[1]})",
        f"GT: {model.is_gt}",
    ]
    return model, "\n".join(lines)


def cmd_equiv(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    verdict = equivalent(load_tangle(args.first), load_tangle(args.second), args.framed, args.budget)
    model = VerdictModel.of(verdict)
    if model.verdict == "equal":
        text = "equal\n" + "\n".join(f"  {m.move}@{m.position} {m.params}" for m in model.trace or [])
    elif model.verdict == "distinct":
        text = f"distinct by {model.invariant}: {model.left} vs {model.right}"
    else:
        text = f"unknown after {model.explored} of {model.budget} nodes"
    return model, text.rstrip()


def cmd_two_bridge(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    word = parse_braid(args.b4, 4)
    form = TwoBridgeForm.from_plat(word) if args.plat else TwoBridgeForm.from_braid(word)
    model = TwoBridgeModel.of(form)
    return model, f"{model.tangle.text}\ncomponents: {model.tangle.components}"


def cmd_render(args: argparse.Namespace) -> Tuple[BaseModel, str]:
    text = render(load_tangle(args.tangle))
    return RenderModel(text=text), text.rstrip("\n")


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tanglekit", description="Oriented tangles, isotopy moves and GT actions.")
    parser.add_argument("--json", action="store_true", help="print pydantic JSON instead of text")
    parser.add_argument("--verbose", action="store_true", help="log at debug level")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("parse", cmd_parse, "validate a tangle and echo it")
    p.add_argument("tangle")

    p = command("simplify", cmd_simplify, "apply reducing moves until none applies")
    p.add_argument("tangle")
    p.add_argument("--framed", action="store_true")

    p = command("invariants", cmd_invariants, "components, writhe, bracket and Jones of a link")
    p.add_argument("tangle")
    p.add_argument("--t-variable", action="store_true", help="also print polynomials in t = A^-4")

    p = command("sum", cmd_sum, "connected sum of two knots")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--framed", action="store_true")

    p = command("mirror", cmd_mirror, "invert every crossing")
    p.add_argument("tangle")

    p = command("act", cmd_act, "apply a GT pair and print the resulting fraction")
    p.add_argument("tangle")
    p.add_argument("--gt", required=True, help="e.g. 'gt(lambda=-1; f=1)'")
    p.add_argument("--framed", action="store_true")
    p.add_argument("--out", nargs=2, metavar=("NUM", "DEN"), help="write numerator and denominator files")

    p = command("verify-gt", cmd_verify_gt, "check the 2-cycle, hexagon and pentagon relations")
    p.add_argument("gt")

    p = command("equiv", cmd_equiv, "decide equivalence within a search budget")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--budget", type=int, default=None, help="node budget (default TANGLEKIT_BUDGET)")
    p.add_argument("--framed", action="store_true")

    p = command("two-bridge", cmd_two_bridge, "close a 4-strand braid into a two-bridge link")
    p.add_argument("--b4", required=True, help="braid word, e.g. 's2^2 s3^-1'")
    p.add_argument("--plat", action="store_true", help="read the word as a classical 4-plat")

    p = command("render", cmd_render, "draw a tangle in ASCII")
    p.add_argument("tangle")

    return parser


def _report_error(exc: Exception, as_json: bool) -> None:
    if as_json:
        error = ErrorModel(
            error=str(exc),
            kind=type(exc).__name__,
            line=getattr(exc, "line", None),
            column=getattr(exc, "column", None),
        )
        print(error.model_dump_json(), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    if getattr(args, "budget", None) is not None and args.budget < 0:
        parser.error("--budget must be non-negative")

    try:
        model, text = args.handler(args)
    except (TanglekitError, OSError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        _report_error(exc, args.json)
        return 1

    print(model.model_dump_json(indent=2) if args.json else text)
    return 0
