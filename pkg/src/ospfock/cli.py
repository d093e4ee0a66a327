"""Command-line front end: ``ospfock <command> [options]``.

Exit codes: 0 success, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import characters as ch
from . import fock, tensor, verify
from .errors import OspFockError
from .weights import DominantWeight, FTuple, bruhat_less, l_chain, l_step

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3

# options whose values may start with '-' (weights such as "-1|-2,-1")
_WEIGHT_OPTIONS = ("--f", "--g", "--lambda")


class Output:
    def __init__(self, text: str, data: Any, ok: bool = True):
        self.text = text
        self.data = data
        self.ok = ok


def _ftuple(text: str, n: int | None) -> FTuple:
    return FTuple.parse(text, n)


def _render_character(c: ch.Character) -> str:
    if not c:
        return "0"
    return "\n".join(f"{list(w)} {v}" for w, v in c.items())


def cmd_lstep(args) -> Output:
    f = _ftuple(args.f, args.n)
    g = l_step(f)
    return Output(str(g), g.to_json())


def cmd_chain(args) -> Output:
    chain = l_chain(_ftuple(args.f, args.n), args.depth)
    return Output("\n".join(map(str, chain)), [g.to_json() for g in chain])


def cmd_bruhat(args) -> Output:
    less = bruhat_less(_ftuple(args.g, args.n), _ftuple(args.f, args.n))
    return Output(str(less).lower(), less)


def _fock_output(v: fock.FockVector) -> Output:
    text = "\n".join(f"{c}\t{f}" for f, c in v.items()) or "0"
    return Output(text, v.to_json())


def cmd_canonical(args) -> Output:
    return _fock_output(fock.canonical(_ftuple(args.f, args.n)))


def cmd_dual_canonical(args) -> Output:
    return _fock_output(fock.dual_canonical(_ftuple(args.f, args.n), args.depth))


def cmd_bar(args) -> Output:
    return _fock_output(fock.bar(fock.FockVector.basis(_ftuple(args.f, args.n)), args.depth))


def cmd_kl(args) -> Output:
    p = fock.kl_poly(_ftuple(args.g, args.n), _ftuple(args.f, args.n))
    return Output(str(p), p.to_json())


_CHAR_KINDS = {"kac": ch.kac_char, "irr": ch.irr_char, "tilting": ch.tilting_char}


def _character(args) -> ch.Character:
    return _CHAR_KINDS[args.kind](DominantWeight.parse(args.lam, args.n))


def cmd_char(args) -> Output:
    c = _character(args)
    return Output(_render_character(c), c.to_json())


def cmd_dim(args) -> Output:
    d = ch.dim_char(_character(args))
    return Output(str(d), d)


def cmd_symtensor(args) -> Output:
    if args.k < 0 or args.n < 1:
        raise OspFockError("need k >= 0 and n >= 1")
    sub = tensor.kernel_laplacian(args.k, args.n)
    data: dict[str, Any] = {"kernel": sub.to_json()}
    lines = [f"dim ker = {sub.dim}"]
    if args.decompose:
        dec = tensor.decompose_kernel(args.k, args.n)
        data["decomposition"] = tensor.decomposition_to_json(dec)
        lines += [f"L({w}) x{m}" for w, m in dec]
    return Output("\n".join(lines), data)


def cmd_verify(args) -> Output:
    cfg = verify.Config(n=args.n, depth=args.depth, bound=args.bound,
                        format=args.format, seed=args.seed)
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    reports = verify.run_suites(names, cfg)
    ok = all(r.ok for r in reports)
    return Output("\n".join(r.render() for r in reports),
                  {"ok": ok, "suites": [r.to_json() for r in reports]}, ok)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="ospfock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    for name, func, help_ in [
        ("lstep", cmd_lstep, "apply the L-operator to an f-tuple"),
        ("canonical", cmd_canonical, "canonical basis element U_f"),
    ]:
        p = add(name, func, help_)
        p.add_argument("--n", type=int)
        p.add_argument("--f", required=True)

    for name, func, help_ in [
        ("chain", cmd_chain, "first DEPTH iterates of the L-operator"),
        ("dual-canonical", cmd_dual_canonical, "truncated dual canonical basis element L_f"),
        ("bar", cmd_bar, "truncated bar involution of K_f"),
    ]:
        p = add(name, func, help_)
        p.add_argument("--n", type=int)
        p.add_argument("--f", required=True)
        p.add_argument("--depth", type=int, default=6)

    for name, func, help_ in [
        ("bruhat", cmd_bruhat, "is g strictly below f in the Bruhat order"),
        ("kl", cmd_kl, "coefficient of K_g in L_f"),
    ]:
        p = add(name, func, help_)
        p.add_argument("--n", type=int)
        p.add_argument("--g", required=True)
        p.add_argument("--f", required=True)

    for name, func, help_ in [("char", cmd_char, "character as weight multiplicities"),
                              ("dim", cmd_dim, "dimension of a module")]:
        p = add(name, func, help_)
        p.add_argument("--kind", choices=sorted(_CHAR_KINDS), default="irr")
        p.add_argument("--n", type=int)
        p.add_argument("--lambda", dest="lam", required=True)

    p = add("symtensor", cmd_symtensor, "harmonic part of the k-th symmetric power")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--decompose", action="store_true")

    p = add("verify", cmd_verify, "run property suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _join_weight_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--f -1|-2`` into ``--f=-1|-2`` so argparse does not read a flag."""
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _WEIGHT_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_join_weight_values(argv))
    try:
        result = args.func(args)
    except (OspFockError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = json.dumps(result.data, indent=2) if args.format == "json" else result.text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if result.ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
