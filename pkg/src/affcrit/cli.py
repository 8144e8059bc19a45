"""Command-line interface.

Exit status: 0 success, 2 precondition violated, 64 unknown subcommand,
65 unparsable arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from . import blocks, characters, linkage, series, weights, weyl
from .errors import PreconditionError
from .rootsys import AffineWeight, CartanType, RootSystem, build_root_system

EX_PRECONDITION = 2
EX_USAGE = 64
EX_DATAERR = 65

COMMANDS = ("rootsys", "pairing", "critical", "integral-roots", "orbit", "class", "classify",
            "refine-check", "qcoeff", "pcoeff", "char", "blocks", "flag", "bggh", "simples")


class _ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise _ParseError(f"{self.prog}: {message}")


def _dumps(obj) -> str:
    return json.dumps(obj)


def _wj(w: AffineWeight) -> str:
    return _dumps(w.to_json())


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_root(text: str, rank: int) -> tuple[int, ...]:
    vals = tuple(int(x) for x in text.split(","))
    if len(vals) != rank:
        raise ValueError(f"root {text!r} needs {rank} coordinates")
    return vals


class _Ctx:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.rs: Optional[RootSystem] = None
        if getattr(args, "type", None):
            self.rs = build_root_system(CartanType.parse(args.type))

    def weight(self, text: Optional[str] = None) -> AffineWeight:
        text = text if text is not None else self.args.weight
        if text is None:
            raise ValueError("--weight is required")
        return AffineWeight.parse(text, self.rs.rank)

    def window(self) -> weights.Window:
        ceilings = self.args.ceiling or [self.args.weight]
        return weights.Window(tuple(self.weight(c) for c in ceilings), self.args.depth)


def _cmd_rootsys(ctx: _Ctx, fmt: str) -> list[str]:
    data = ctx.rs.to_json()
    if fmt == "json":
        return [_dumps(data)]
    return [f"{k}\t{_dumps(v)}" for k, v in data.items()]


def _cmd_pairing(ctx: _Ctx, fmt: str) -> list[str]:
    if ctx.args.other is None:
        raise ValueError("--other is required")
    val = ctx.rs.pairing(ctx.weight(), ctx.weight(ctx.args.other))
    return [_dumps(str(val)) if fmt == "json" else str(val)]


def _cmd_critical(ctx: _Ctx, fmt: str) -> list[str]:
    return [_bool(weights.is_critical(ctx.rs, ctx.weight()))]


def _parse_deform(text: str, rank: int) -> linkage.DeformationSpec:
    if text == "closed":
        return linkage.Closed()
    if text == "generic":
        return linkage.Generic()
    if text.startswith("subgeneric:"):
        return linkage.Subgeneric(_parse_root(text.split(":", 1)[1], rank))
    raise ValueError(f"unknown deformation {text!r}")


def _cmd_integral_roots(ctx: _Ctx, fmt: str) -> list[str]:
    d = _parse_deform(ctx.args.deform, ctx.rs.rank)
    desc = linkage.deformed_integral_roots(ctx.rs, ctx.weight(), d)
    if fmt == "json":
        return [_dumps(desc.to_json())]
    out = [f"critical\t{_bool(desc.critical)}", f"imaginary_integral\t{_bool(desc.imaginary_integral)}"]
    for alpha, c in desc.entries:
        cons = "all" if isinstance(c, weyl.AllIntegers) else f"{c.r} mod {c.m}"
        out.append(f"root\t{_dumps(list(alpha))}\t{cons}")
    return out


def _orbit_lines(res: weyl.OrbitResult, w: weights.Window, fmt: str) -> list[str]:
    if fmt == "json":
        data = res.to_json()
        data["window"] = w.to_json()
        return [_dumps(data)]
    return ([f"window_depth\t{w.depth}", f"truncated\t{_bool(res.truncated)}"]
            + [f"member\t{_wj(m)}" for m in res.members])


def _cmd_orbit(ctx: _Ctx, fmt: str) -> list[str]:
    rs, w = ctx.rs, ctx.window()
    roots = ([_parse_root(r, rs.rank) for r in ctx.args.root] if ctx.args.root
             else list(rs.positive_roots))
    shift = ctx.args.shift if ctx.args.shift is not None else w.delta_span()
    gens = weyl.shifted_generators(roots, shift)
    return _orbit_lines(weyl.orbit_dot(rs, ctx.weight(), gens, w), w, fmt)


def _cmd_class(ctx: _Ctx, fmt: str) -> list[str]:
    fn = linkage.restricted_class if ctx.args.mode == "restricted" else linkage.classical_class
    w = ctx.window()
    return _orbit_lines(fn(ctx.rs, ctx.weight(), w), w, fmt)


def _cmd_classify(ctx: _Ctx, fmt: str) -> list[str]:
    rep = linkage.classify_class(ctx.rs, ctx.weight())
    data = rep.to_json()
    if fmt == "json":
        return [_dumps(data)]
    return [f"{k}\t{_dumps(v)}" for k, v in data.items()]


def _cmd_refine_check(ctx: _Ctx, fmt: str) -> list[str]:
    return [_bool(linkage.refinement_check(ctx.rs, ctx.weight(), ctx.window()))]


def _series_cmd(fn: Callable[[int, int], series.CoeffSeries]):
    def run(ctx: _Ctx, fmt: str) -> list[str]:
        s = fn(ctx.args.rank, ctx.args.n)
        if fmt == "json":
            return [_dumps({"rank": ctx.args.rank, "n": ctx.args.n, "values": list(s.values)})]
        return [f"{i}\t{v}" for i, v in enumerate(s.values)]
    return run


def _char_lines(rs: RootSystem, ch: characters.FormalCharacter, fmt: str, extra=None) -> list[str]:
    if fmt == "json":
        data = ch.to_json(rs)
        if extra:
            data = {**extra, **data}
        return [_dumps(data)]
    return [f"{_wj(mu)}\t{h}\t{c}" for mu, h, c in ch.rows(rs)]


def _cmd_char(ctx: _Ctx, fmt: str) -> list[str]:
    fn = (characters.verma_character if ctx.args.kind == "verma"
          else characters.restricted_verma_character)
    ch = fn(ctx.rs, ctx.weight(), ctx.args.depth)
    return _char_lines(ctx.rs, ch, fmt, {"kind": ctx.args.kind})


def _cmd_blocks(ctx: _Ctx, fmt: str) -> list[str]:
    bp = blocks.block_partition(ctx.rs, ctx.window())
    if fmt == "json":
        return [_dumps(bp.to_json())]
    out = [f"window_depth\t{bp.window.depth}"]
    for i, (_, members) in enumerate(bp.classes):
        out.extend(f"{i}\t{_wj(m)}" for m in members)
    return out


def _cmd_flag(ctx: _Ctx, fmt: str) -> list[str]:
    fd = blocks.projective_flag(ctx.rs, ctx.weight())
    if fmt == "json":
        return [_dumps(fd.to_json())]
    return [f"{_wj(w)}\t{m}" for w, m in fd.flag]


def _cmd_bggh(ctx: _Ctx, fmt: str) -> list[str]:
    m = blocks.bggh_matrix(ctx.rs, ctx.weight(), ctx.window())
    if fmt == "json":
        return [_dumps(m.to_json())]
    out = ["\t".join(["", *(_wj(x) for x in m.members), "complete"])]
    for mu, row, ok in zip(m.members, m.entries, m.complete):
        out.append("\t".join([_wj(mu), *(str(v) for v in row), _bool(ok)]))
    return out


def _cmd_simples(ctx: _Ctx, fmt: str) -> list[str]:
    depth = ctx.args.char_depth if ctx.args.char_depth is not None else ctx.args.depth
    chars = blocks.derived_simple_characters(ctx.rs, ctx.weight(), ctx.window(), depth)
    if fmt == "json":
        return [_dumps({"window": ctx.window().to_json(),
                        "simples": [ch.to_json(ctx.rs) for ch in chars.values()]})]
    out = []
    for mu, ch in chars.items():
        out.extend(f"{_wj(mu)}\t{ch.depth}\t{_wj(nu)}\t{h}\t{c}" for nu, h, c in ch.rows(ctx.rs))
    return out


_HANDLERS = {
    "rootsys": _cmd_rootsys,
    "pairing": _cmd_pairing,
    "critical": _cmd_critical,
    "integral-roots": _cmd_integral_roots,
    "orbit": _cmd_orbit,
    "class": _cmd_class,
    "classify": _cmd_classify,
    "refine-check": _cmd_refine_check,
    "qcoeff": _series_cmd(series.q_series),
    "pcoeff": _series_cmd(series.p_series),
    "char": _cmd_char,
    "blocks": _cmd_blocks,
    "flag": _cmd_flag,
    "bggh": _cmd_bggh,
    "simples": _cmd_simples,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="affcrit",
                description="Exact critical-level combinatorics for untwisted affine Kac-Moody algebras.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def common(sp: argparse.ArgumentParser, weight=True, window=False, type_=True) -> None:
        if type_:
            sp.add_argument("--type", required=True, help="Cartan type, e.g. A2")
        if weight:
            sp.add_argument("--weight", help="f1,...,fr,level,delta (fundamental-weight coordinates)")
        if window:
            sp.add_argument("--depth", type=int, default=4, help="window depth (default 4)")
            sp.add_argument("--ceiling", action="append",
                            help="window ceiling weight, repeatable (default: --weight)")
        sp.add_argument("--unsafe-depth", action="store_true", help="lift the depth safety cap")
        sp.add_argument("--format", choices=("json", "tsv"), default="json")

    sp = sub.add_parser("rootsys", help="root data of a finite type")
    sp.add_argument("type")
    common(sp, weight=False, type_=False)

    sp = sub.add_parser("pairing", help="invariant form of two weights")
    common(sp)
    sp.add_argument("--other", help="second weight")

    common(sub.add_parser("critical", help="is the weight at the critical level"))

    sp = sub.add_parser("integral-roots", help="integral roots of a weight")
    common(sp)
    sp.add_argument("--deform", default="closed",
                    help="closed | generic | subgeneric:<root in simple coordinates>")

    sp = sub.add_parser("orbit", help="dot orbit inside a window")
    common(sp, window=True)
    sp.add_argument("--root", action="append", help="finite root generating W_alpha, repeatable")
    sp.add_argument("--shift", type=int, help="largest |n| in alpha + n*delta")

    sp = sub.add_parser("class", help="linkage class inside a window")
    common(sp, window=True)
    sp.add_argument("--mode", choices=("restricted", "classical"), default="restricted")

    common(sub.add_parser("classify", help="generic / subgeneric / higher"))
    common(sub.add_parser("refine-check", help="common-refinement check inside a window"),
           window=True)

    for name, what in (("qcoeff", "q(n)"), ("pcoeff", "p(n)")):
        sp = sub.add_parser(name, help=f"coefficients {what}")
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        common(sp, weight=False, type_=False)

    sp = sub.add_parser("char", help="Verma or restricted Verma character")
    sp.add_argument("kind", choices=("verma", "rverma"))
    common(sp)
    sp.add_argument("--depth", type=int, default=4)

    common(sub.add_parser("blocks", help="restricted classes of a window"), window=True)
    common(sub.add_parser("flag", help="restricted Verma flag of a projective"))
    common(sub.add_parser("bggh", help="reciprocity matrix of a class"), window=True)

    sp = sub.add_parser("simples", help="simple characters of a class by back-substitution")
    common(sp, window=True)
    sp.add_argument("--char-depth", type=int, help="character depth (default: --depth)")
    return p


_VALUE_OPTS = ("--weight", "--other", "--ceiling")


def _glue_values(argv: Sequence[str]) -> list[str]:
    # weights such as -2,0,0 would otherwise be read as option flags
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def _first_positional(argv: Sequence[str]) -> Optional[str]:
    for a in argv:
        if not a.startswith("-"):
            return a
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _glue_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    cmd = _first_positional(argv)
    if cmd is None and not any(a in ("-h", "--help") for a in argv):
        parser.print_usage(sys.stderr)
        print("affcrit: no subcommand given", file=sys.stderr)
        return EX_USAGE
    if cmd is not None and cmd not in COMMANDS:
        print(f"affcrit: unknown subcommand {cmd!r}", file=sys.stderr)
        return EX_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    except _ParseError as e:
        print(str(e), file=sys.stderr)
        return EX_DATAERR

    try:
        cap = weights.depth_cap()
    except ValueError:
        print("affcrit: cannot parse AFFCRIT_DEPTH_CAP", file=sys.stderr)
        return EX_DATAERR
    depth = max(getattr(args, "depth", 0) or 0, getattr(args, "char_depth", 0) or 0)
    if depth > cap and not args.unsafe_depth:
        print(f"affcrit: precondition violated: depth {depth} exceeds safety cap {cap} "
              "(pass --unsafe-depth or set AFFCRIT_DEPTH_CAP)", file=sys.stderr)
        return EX_PRECONDITION

    saved = os.environ.get("AFFCRIT_DEPTH_CAP")
    if args.unsafe_depth:
        # the library reads the cap from the environment; lift it for this call only
        os.environ["AFFCRIT_DEPTH_CAP"] = str(max(cap, depth))
    try:
        ctx = _Ctx(args)
        lines = _HANDLERS[args.command](ctx, args.format)
    except PreconditionError as e:
        print(f"affcrit: precondition violated: {e}", file=sys.stderr)
        return EX_PRECONDITION
    except (ValueError, ZeroDivisionError) as e:
        print(f"affcrit: cannot parse arguments: {e}", file=sys.stderr)
        return EX_DATAERR
    finally:
        if saved is None:
            os.environ.pop("AFFCRIT_DEPTH_CAP", None)
        else:
            os.environ["AFFCRIT_DEPTH_CAP"] = saved
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
