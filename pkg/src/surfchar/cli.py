"""Command line front end.

Exit codes: 0 success, 1 verification or guard failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import mapping_class as mc
from . import nilpotent as nil
from . import quotients as qt
from . import verifier
from .words import SurfaceContext, Word, WordParseError, free_reduce, parse_word, render, substitute

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Quotient:
    kind: str  # nil2 | modK | powK
    e: int | None = None


@dataclass
class CliConfig:
    genus: int
    quotient: Quotient
    fmt: str
    seed: int = 0
    depth: int = 4
    samples: int = 2000
    guard: int = qt.DEFAULT_GUARD

    @property
    def ctx(self) -> SurfaceContext:
        return SurfaceContext(self.genus)

    @property
    def spec(self) -> qt.QuotientSpec:
        return qt.QuotientSpec(self.genus, self.quotient.e)


def parse_quotient(text: str, genus: int, any_exponent: bool = False) -> Quotient:
    if text in ("nil2", "modK"):
        return Quotient(text)
    if text.startswith("powK"):
        _, _, exp = text.partition(":")
        try:
            e = int(exp) if exp else genus
        except ValueError:
            raise UsageError(f"bad exponent in {text!r}") from None
        if e < 2:
            raise UsageError("exponent must be at least 2")
        if not any_exponent and e not in (genus, 2 * genus):
            raise UsageError(f"exponent must be g or 2g (got {e}); pass --any-exponent to override")
        return Quotient("powK", e)
    raise UsageError(f"unknown quotient {text!r}; use nil2, modK or powK:E")


def _word(text: str, ctx: SurfaceContext) -> Word:
    return parse_word(text, ctx, keywords={"relator": ctx.relator})


def _normal_form_text(a: nil.Nil2Element) -> str:
    parts = [f"x{i}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(a.n, 1) if k]
    parts += [f"[x{i},x{j}]" + (f"^{k}" if k != 1 else "") for (i, j), k in zip(a.pairs, a.m) if k]
    return " ".join(parts) or "1"


def _modK_json(a: qt.ModKElement) -> dict:
    return {"genus": a.genus, "n": list(a.n), "mK": a.mK}


def _present(a: nil.Nil2Element, cfg: CliConfig):
    """(structured, human) rendering of a class in the selected quotient."""
    if cfg.quotient.kind == "nil2":
        return a.to_json(), _normal_form_text(a)
    if cfg.quotient.kind == "modK":
        b = qt.project_to_modK(a)
        n = " ".join(f"x{i}^{k}" for i, k in enumerate(b.n, 1) if k)
        return _modK_json(b), f"{n or '1'} ; [x1,x2]^{b.mK} (mod {b.genus})"
    q = qt.project_to_quotient(a, cfg.spec)
    human = f"n = {list(q.n)} (mod {cfg.spec.e}), mK = {q.mK} (mod {cfg.spec.d})"
    if q.is_identity():
        human += "  [identity]"
    return q.to_json(), human


def _emit(cfg: CliConfig, structured, human: str) -> None:
    if cfg.fmt == "json":
        print(json.dumps(structured, sort_keys=True))
    else:
        print(human)


def cmd_eval(args, cfg: CliConfig) -> int:
    a = nil.evaluate(_word(args.word, cfg.ctx), cfg.genus)
    _emit(cfg, *_present(a, cfg))
    return EXIT_OK


def cmd_mul(args, cfg: CliConfig) -> int:
    a = nil.identity(cfg.genus)
    for text in args.words:
        a = nil.multiply(a, nil.evaluate(_word(text, cfg.ctx), cfg.genus))
    _emit(cfg, *_present(a, cfg))
    return EXIT_OK


def cmd_inv(args, cfg: CliConfig) -> int:
    a = nil.inverse(nil.evaluate(_word(args.word, cfg.ctx), cfg.genus))
    _emit(cfg, *_present(a, cfg))
    return EXIT_OK


def cmd_pow(args, cfg: CliConfig) -> int:
    a = nil.power(nil.evaluate(_word(args.word, cfg.ctx), cfg.genus), args.exponent)
    _emit(cfg, *_present(a, cfg))
    return EXIT_OK


def cmd_twist(args, cfg: CliConfig) -> int:
    try:
        name = mc.TwistName.parse(args.name, cfg.ctx)
    except mc.TwistNameError as exc:
        raise UsageError(str(exc)) from None
    table = mc.twist_table(name, cfg.ctx)
    image = free_reduce(substitute(_word(args.word, cfg.ctx), table))
    structured, human = _present(nil.evaluate(image, cfg.genus), cfg)
    _emit(cfg, {"twist": str(name), "word": render(image), "class": structured},
          f"{render(image) or '1'}\n{human}")
    return EXIT_OK


def cmd_order(args, cfg: CliConfig) -> int:
    if cfg.quotient.kind != "powK":
        _emit(cfg, {"order": None, "finite": False}, "infinite")
        return EXIT_OK
    spec = cfg.spec
    out = {"g": spec.genus, "e": spec.e, "d": spec.d, "order": spec.order}
    human = str(spec.order)
    if args.bfs:
        try:
            count = len(qt.enumerate_quotient(spec, cfg.guard))
        except qt.EnumerationGuardError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        out["bfs"] = count
        human += f" (bfs {count})"
        if count != spec.order:
            _emit(cfg, out, human + "  MISMATCH")
            return EXIT_FAIL
    _emit(cfg, out, human)
    return EXIT_OK


def _print_report(report: verifier.VerificationReport, cfg: CliConfig) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(report.to_jsonl())
        return
    for c in report.checks:
        params = ", ".join(f"{k}={v}" for k, v in c.params.items())
        print(f"{c.status:>13}  {c.id} ({params})")
    counts = ", ".join(f"{k}: {v}" for k, v in sorted(report.counts().items()))
    print(f"overall: {report.status} ({counts})")


def cmd_probe(args, cfg: CliConfig) -> int:
    if cfg.quotient.kind != "powK":
        raise UsageError("probe needs a finite quotient: -q powK:E")
    report = verifier.VerificationReport()
    report.extend(verifier.probe_nongeometric(cfg.genus, cfg.spec, cfg.depth, cfg.samples, cfg.seed))
    _print_report(report, cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args, cfg: CliConfig) -> int:
    genera = args.genera
    report = verifier.run_all(genera, seed=cfg.seed, depth=cfg.depth, samples=cfg.samples, guard=cfg.guard)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_jsonl())
    if args.figures:
        from .plotting import write_figures

        for path in write_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    _print_report(report, cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--genus", default=None, help="genus (verify: comma separated list)")
    common.add_argument("-q", "--quotient", default="nil2", help="nil2 | modK | powK:E")
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--depth", type=int, default=4)
    common.add_argument("--samples", type=int, default=2000)
    common.add_argument("--guard", type=int, default=qt.DEFAULT_GUARD)
    common.add_argument("--any-exponent", action="store_true", help="allow powK:E with E not in {g, 2g}")

    parser = argparse.ArgumentParser(prog="surfchar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mul", parents=[common], help="product of words")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", parents=[common], help="inverse of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("pow", parents=[common], help="power of a word")
    p.add_argument("word")
    p.add_argument("exponent", type=int)
    p.set_defaults(func=cmd_pow)

    p = sub.add_parser("twist", parents=[common], help="apply t1..t{2g+1} or s1..s{g}")
    p.add_argument("name")
    p.add_argument("word")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("order", parents=[common], help="order of the selected quotient")
    p.add_argument("--bfs", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("probe", parents=[common], help="orbit probe for simple loops")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("verify", parents=[common], help="run the full check suite")
    p.add_argument("genera", nargs="?", default=None, help="comma separated genera (default 2,3)")
    p.add_argument("-o", "--output", help="also write the JSON-lines report here")
    p.add_argument("--figures", metavar="DIR", help="render summary figures into DIR")
    p.set_defaults(func=cmd_verify)
    return parser


def _genus_list(text: str) -> list[int]:
    try:
        genera = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad genus {text!r}") from None
    if not genera or any(g < 2 for g in genera):
        raise UsageError("genus must be at least 2")
    return genera


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            args.genera = _genus_list(args.genera or args.genus or "2,3")
            genus = args.genera[0]
        else:
            genera = _genus_list(args.genus or "2")
            if len(genera) != 1:
                raise UsageError("this command takes a single genus")
            genus = genera[0]
        cfg = CliConfig(
            genus=genus,
            quotient=parse_quotient(args.quotient, genus, args.any_exponent),
            fmt=args.format,
            seed=args.seed,
            depth=args.depth,
            samples=args.samples,
            guard=args.guard,
        )
        return args.func(args, cfg)
    except (UsageError, WordParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except nil.ContextMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
