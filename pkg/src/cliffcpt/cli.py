"""Command-line front end: algebra, group, rep, cpt, verify.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .automorphisms import EXT_KEYS, derive_ext_group, distinct_keys, full_cpt_group
from .blades import (
    AlgebraSignature,
    center_type,
    division_ring,
    volume_square,
)
from .claims import run_all_checks
from .fixtures import FIXTURE_NAMES, fixture_basis
from .groups import (
    GroupError,
    center,
    classify_salingaros,
    generate_group,
    label_str,
    order_structure,
)
from .matrices import brauer_weyl_basis

TEXT_TABLE_LIMIT = 64
MAX_CLI_GENERATORS = 10


class UsageError(Exception):
    pass


def _signature(p: int, q: int) -> AlgebraSignature:
    if p < 0 or q < 0 or not 1 <= p + q <= MAX_CLI_GENERATORS:
        raise UsageError(f"need p, q >= 0 and 1 <= p+q <= {MAX_CLI_GENERATORS}, got ({p}, {q})")
    return AlgebraSignature(p, q)


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _grid(labels: Sequence[str], cells: Sequence[Sequence[str]]) -> str:
    width = max(len(c) for c in list(labels) + [c for row in cells for c in row])
    head = " " * width + " | " + " ".join(s.rjust(width) for s in labels)
    lines = [head, "-" * len(head)]
    for lab, row in zip(labels, cells):
        lines.append(lab.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


# ------------------------------------------------------------ commands


def cmd_algebra(args) -> int:
    sig = _signature(args.p, args.q)
    data = {
        "p": sig.p,
        "q": sig.q,
        "n": sig.n,
        "dimension": 1 << sig.n,
        "center": center_type(sig),
        "omega_squared": volume_square(sig),
        "ring": division_ring(sig),
    }
    center_text = "{1, omega}" if data["center"] == "two-element" else "{1}"
    text = "\n".join([
        f"{sig}: n = {sig.n}, dimension {data['dimension']}",
        f"center: {center_text}",
        f"omega^2 = {data['omega_squared']:+d}",
        f"ring: {data['ring']}",
    ])
    _emit(args, data, text)
    return 0


def cmd_group(args) -> int:
    sig = _signature(args.p, args.q)
    g = generate_group(sig)
    os_ = order_structure(g)
    _, zlabel = center(g)
    data = g.to_json()
    data.update({"p": sig.p, "q": sig.q, "order_structure": list(os_.as_tuple()), "center": zlabel})
    lines = [f"G({sig.p},{sig.q}): order {g.order}, order structure {os_}, center {zlabel}"]
    if args.classify:
        label = str(classify_salingaros(g))
        data["salingaros"] = label
        lines.append(f"Salingaros: {label}")
    if args.format == "text":
        if g.order <= TEXT_TABLE_LIMIT:
            labels = [label_str(e) for e in g.elements]
            lines.append(_grid(labels, [[labels[j] for j in row] for row in g.table]))
        else:
            lines.append(f"(table omitted: order {g.order} > {TEXT_TABLE_LIMIT}; use --format json)")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_rep(args) -> int:
    if args.fixture:
        if args.p is not None or args.q is not None:
            raise UsageError("give either p q or --fixture, not both")
        basis = fixture_basis(args.fixture)
    else:
        if args.p is None or args.q is None:
            raise UsageError("rep needs p q or --fixture NAME")
        sig = _signature(args.p, args.q)
        if sig.n < 2:
            raise UsageError("the Brauer-Weyl construction needs p+q >= 2")
        basis = brauer_weyl_basis(sig)
    lines = [f"{basis.name}: {basis.sig}, {basis.dim}x{basis.dim}"]
    for label, g in zip(basis.labels, basis.gammas):
        lines.append(f"g{label} =")
        lines.append(str(g))
    _emit(args, basis.to_json(), "\n".join(lines))
    return 0


def cmd_cpt(args) -> int:
    basis = fixture_basis(args.basis)
    ext = derive_ext_group(basis)
    keys = distinct_keys(ext.table)
    table = ext.table.sub(keys)
    full = full_cpt_group(table) if table.is_real() else None
    data = ext.to_json()
    data.update({
        "inner_star": ext.inner_star,
        "pi_exact": ext.pi_exact,
        "degenerate": ext.degenerate,
        "distinct": [EXT_KEYS[k] for k in keys],
    })
    lines = [f"Ext of {basis.sig} in the {basis.name} basis"]
    for k in EXT_KEYS:
        lines.append(f"  {k:>2} = {basis.blade_name(ext.blade_labels[k])}")
    lines.append(f"signature: {ext.signature_string()}")
    if not ext.inner_star:
        lines.append("note: W is a scalar matrix, so it does not act by conjugation")
    if not ext.pi_exact:
        lines.append("note: Pi satisfies the conjugation relations on all but one generator")
    if ext.degenerate:
        lines.append(f"note: degenerate, distinct elements {', '.join(data['distinct'])}")
    lines.append(ext.table.render())
    if full is not None:
        fos = order_structure(full)
        _, fz = center(full)
        data["full_cpt"] = {"order": full.order, "order_structure": list(fos.as_tuple()),
                            "center": fz, "abelian": full.is_abelian()}
        kind = "abelian" if full.is_abelian() else "non-abelian"
        lines.append(f"full CPT group: order {full.order}, order structure {fos}, center {fz}, {kind}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    report = run_all_checks(args.filter)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    if args.format == "json":
        sys.stdout.write(report.dumps())
    else:
        print(report.render())
    return report.exit_code


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffcpt", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("algebra", parents=[fmt], help="center, omega^2 and ring of Cl(p,q)")
    a.add_argument("p", type=int)
    a.add_argument("q", type=int)
    a.set_defaults(func=cmd_algebra)

    g = sub.add_parser("group", parents=[fmt], help="the finite group G(p,q)")
    g.add_argument("p", type=int)
    g.add_argument("q", type=int)
    g.add_argument("--classify", action="store_true", help="add the Salingaros label")
    g.set_defaults(func=cmd_group)

    r = sub.add_parser("rep", parents=[fmt], help="Brauer-Weyl gamma matrices or a fixture basis")
    r.add_argument("p", type=int, nargs="?")
    r.add_argument("q", type=int, nargs="?")
    r.add_argument("--fixture", choices=FIXTURE_NAMES)
    r.set_defaults(func=cmd_rep)

    c = sub.add_parser("cpt", parents=[fmt], help="extended automorphism group of a fixture basis")
    c.add_argument("--basis", choices=FIXTURE_NAMES, default="canonical")
    c.set_defaults(func=cmd_cpt)

    v = sub.add_parser("verify", parents=[fmt], help="check the registered claims")
    v.add_argument("--filter", default=None, help="claim id prefix")
    v.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError, GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
