"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 unsupported parameter,
3 semantic failure (a cocycle that does not verify).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cocycle import (
    CocycleAssignment,
    adapt_to_S,
    adapt_to_Sprime,
    compute_h1,
    evaluate,
    theorem1_cocycle,
    verify_cocycle,
)
from .errors import InvalidGenus, TwistCohomError, UnsupportedGenus
from .presentation import parse_presentation, parse_word
from .symplectic import Representation, format_vector, humphries_representation
from .wajnryb import wajnryb_presentation

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _mcg(genus: int):
    pres = wajnryb_presentation(genus)
    _, rep = humphries_representation(genus)
    return pres, rep


def _load_cocycle(path: str | None, genus: int, rep: Representation) -> CocycleAssignment:
    if path is None:
        return theorem1_cocycle(genus)
    u = CocycleAssignment.from_json(json.loads(Path(path).read_text(encoding="utf-8")))
    if u.genus is not None and u.genus != genus:
        raise ValueError(f"cocycle file is for genus {u.genus}, not {genus}")
    if set(u.generators) != set(rep.generators):
        raise ValueError(f"cocycle generators {sorted(u.generators)} do not match {sorted(rep.generators)}")
    if u.dim != rep.dim:
        raise ValueError(f"cocycle vectors have length {u.dim}, expected {rep.dim}")
    return CocycleAssignment({g: u[g] for g in rep.generators}, genus)


def _format_cocycle(u: CocycleAssignment, indent: str = "  ") -> str:
    show = format_vector if u.genus is not None else (lambda v: str(list(v)))
    return "".join(f"{indent}{g}: {show(v)}\n" for g, v in u.values.items())


def cmd_present(args) -> int:
    pres = wajnryb_presentation(args.genus)
    _emit(pres.to_json(), args.format, pres.to_text())
    return EXIT_OK


def cmd_h1(args) -> int:
    if args.genus is not None:
        if args.presentation or args.rep:
            raise ValueError("give either --genus or --presentation with --rep, not both")
        pres, rep = _mcg(args.genus)
        pres = pres.presentation
    else:
        if not (args.presentation and args.rep):
            raise ValueError("h1 needs --genus, or both --presentation and --rep")
        pres = parse_presentation(Path(args.presentation).read_text(encoding="utf-8"))
        rep = Representation.from_json(json.loads(Path(args.rep).read_text(encoding="utf-8")))
    res = compute_h1(pres, rep)
    text = f"H^1 = {res.h1}\nrank: {res.h1.rank}\ntorsion: {list(res.h1.torsion)}\n"
    for k, u in enumerate(res.generator_cocycles):
        text += f"generator cocycle {k}:\n" + _format_cocycle(u)
    _emit(res.to_json(), args.format, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    pres, rep = _mcg(args.genus)
    u = _load_cocycle(args.cocycle, args.genus, rep)
    report = verify_cocycle(u, pres.presentation, rep)
    lines = []
    for c in report.checks:
        mark = "ok  " if c.ok else "FAIL"
        extra = "" if c.ok else f"  residue {format_vector(c.residue)}"
        lines.append(f"[{mark}] {c.relator_index:3d} {c.tag}{extra}")
    passed = len(report.checks) - len(report.failures)
    lines.append(f"{passed}/{len(report.checks)} relators pass")
    _emit(report.to_json(), args.format, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_eval(args) -> int:
    pres, rep = _mcg(args.genus)
    u = _load_cocycle(args.cocycle, args.genus, rep)
    w = parse_word(args.word, rep.generators)
    v = evaluate(u, rep, w)
    _emit({"word": args.word, "value": list(v)}, args.format, f"{list(v)}  # {format_vector(v)}")
    return EXIT_OK


def cmd_adapt(args) -> int:
    pres, rep = _mcg(args.genus)
    u = _load_cocycle(args.cocycle, args.genus, rep)
    if not verify_cocycle(u, pres.presentation, rep):
        print("input is not a cocycle for the Wajnryb presentation", file=sys.stderr)
        return EXIT_FAILED
    adapted, shift = adapt_to_S(u, rep)
    if args.target == "Sprime":
        adapted, extra = adapt_to_Sprime(adapted, rep)
        shift = tuple(a + b for a, b in zip(shift, extra))
    out = {"target": args.target, "shift": list(shift), "cocycle": adapted.to_json()}
    text = f"shift: {format_vector(shift)}\nadapted cocycle:\n" + _format_cocycle(adapted)
    _emit(out, args.format, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="twistcohom", description="First cohomology of mapping class groups with coefficients in H_1.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, genus_required=True):
        p.add_argument("--genus", "-g", type=int, required=genus_required)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("present", help="print the Wajnryb presentation")
    common(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("h1", help="compute H^1(G, M)")
    common(p, genus_required=False)
    p.add_argument("--presentation", help="presentation text file")
    p.add_argument("--rep", help="representation JSON file")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("verify", help="check a cocycle against every relator")
    common(p)
    p.add_argument("--cocycle", help="cocycle JSON (default: the explicit generator cocycle)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate a cocycle on a word")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--cocycle")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("adapt", help="normalize a cocycle within its class")
    common(p)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--target", choices=("S", "Sprime"), default="Sprime")
    p.set_defaults(func=cmd_adapt)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors and --help; report the code instead of exiting
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (UnsupportedGenus, InvalidGenus) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (TwistCohomError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
