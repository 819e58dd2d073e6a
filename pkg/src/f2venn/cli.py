"""Command-line front end.

Exit codes: 0 affirmative, 1 negative verdict, 2 usage, parse or guard error.
"""

from __future__ import annotations

import argparse
import sys

from .caps import (
    REFERENCE_WITNESSES,
    builtin_templates,
    diff3_classes,
    find_quad,
    get_template,
    instantiate_template,
)
from .equivalence import (
    brute_force_map,
    equivalence_verdict,
    find_witness,
    oracle_sweep,
    validate_witness_matrix,
    venn_equivalent,
    zero_sum_diagram,
)
from .gf2 import PointSet, affine_decompose, dimension, format_bitstring, iter_bits
from .matrix import Gf2Matrix, int_to_label
from .setfile import SetFileError, read_sets
from .venn import render_cardinality_table
from .zerosum import build_zero_sum_space, enumerate_even_zero_sums

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

REASONS = {
    "size": "sizes differ",
    "dimension": "dimensions differ",
    "multiset": "Venn cardinality multisets differ",
    "isolated": "isolated point counts differ",
    "search": "no cardinality-preserving linear bijection",
}


class CliError(Exception):
    pass


def _load(path: str, allow_empty: bool = False) -> list[PointSet]:
    sets = read_sets(path)
    if not sets and not allow_empty:
        raise CliError(f"{path}: no point sets found")
    return sets


def _load_pair(paths: list[str]) -> tuple[PointSet, PointSet]:
    if len(paths) == 1:
        sets = _load(paths[0])
        if len(sets) != 2:
            raise CliError(f"{paths[0]}: expected exactly two sets, found {len(sets)}")
        return sets[0], sets[1]
    if len(paths) != 2:
        raise CliError("expected one file with two sets or two files")
    return _load(paths[0])[0], _load(paths[1])[0]


def _matrix_text(M: Gf2Matrix) -> str:
    return M.format() if M.nrows else "(empty 0x0 matrix)"


def _matrix_machine(M: Gf2Matrix) -> str:
    return ";".join("".join(map(str, row)) for row in M.to_lists())


def _set_header(i: int, total: int, machine: bool) -> list[str]:
    if total == 1:
        return []
    return [f"set={i + 1}"] if machine else [f"# set {i + 1}"]


def cmd_span(args) -> int:
    sets = _load(args.file)
    machine = args.format == "machine"
    blocks = []
    for i, S in enumerate(sets):
        dec = affine_decompose(S)
        lines = _set_header(i, len(sets), machine)
        if machine:
            lines += [f"k={len(S)}", f"dim={dec.dimension}",
                      "basis=" + ",".join(map(str, dec.basis_indices))]
            for w in dec.dependent_indices:
                lines.append(f"expr.{w}=" + ",".join(map(str, dec.expressions[w])))
            lines += [f"point.{j}={b}" for j, b in enumerate(S.bitstrings())]
        else:
            lines.append(f"# k={len(S)} dim={dec.dimension}")
            for j in dec.basis_indices:
                lines.append(f"# basis p{j} {format_bitstring(S[j], S.n)}")
            for w in dec.dependent_indices:
                expr = " + ".join(f"p{j}" for j in dec.expressions[w])
                lines.append(f"# dependent p{w} {format_bitstring(S[w], S.n)} = {expr}")
            lines += S.bitstrings()
        blocks.append("\n".join(lines))
    print("\n\n".join(blocks))
    return EXIT_YES


def cmd_zerosum(args) -> int:
    sets = _load(args.file)
    machine = args.format == "machine"
    for i, S in enumerate(sets):
        space = build_zero_sum_space(S)
        lines = _set_header(i, len(sets), machine)
        elements = enumerate_even_zero_sums(space)
        r = space.rank
        if machine:
            lines.append(f"rank={r}")
            for j, g in enumerate(space.generators, 1):
                lines.append(f"gen.{j}=" + ",".join(map(str, iter_bits(g))))
            for c, m in enumerate(elements):
                lines.append(f"{int_to_label(c, r)} " + ",".join(map(str, iter_bits(m))))
        else:
            lines.append(f"dim E(S) = {r}")
            for j, g in enumerate(space.generators, 1):
                lines.append(f"X{j} = {{" + ", ".join(f"p{x}" for x in iter_bits(g)) + "}")
            for c, m in enumerate(elements):
                lines.append(f"{int_to_label(c, r)}  {{" + ", ".join(f"p{x}" for x in iter_bits(m)) + "}")
        print("\n".join(lines))
    return EXIT_YES


def cmd_venn(args) -> int:
    sets = _load(args.file)
    machine = args.format == "machine"
    out = []
    for i, S in enumerate(sets):
        lines = _set_header(i, len(sets), machine)
        lines.append(render_cardinality_table(zero_sum_diagram(S), machine=machine))
        out.append("\n".join(lines))
    print("\n\n".join(out))
    return EXIT_YES


def cmd_equiv(args) -> int:
    S, T = _load_pair(args.files)
    machine = args.format == "machine"
    if args.witness and S.n != T.n:
        raise CliError(f"witness needs one ambient space, got n={S.n} and n={T.n}")
    verdict = equivalence_verdict(S, T)
    if verdict.matrix is None:
        if machine:
            print(f"equivalent=0\nreason={verdict.reason}")
        else:
            print(f"not equivalent: {REASONS[verdict.reason]}")
        return EXIT_NO
    N = verdict.matrix
    if machine:
        print(f"equivalent=1\nrank={N.nrows}\nmatrix={_matrix_machine(N)}")
    else:
        print(f"equivalent (rank {N.nrows})")
        print("N =")
        print(_matrix_text(N))
    if args.witness:
        w = find_witness(S, T)
        f = w.affine_map
        rows = ["".join(map(str, row)) for row in f.rows()]
        if machine:
            print("linear=" + ";".join(rows))
            print(f"translation={format_bitstring(f.translation, f.n)}")
            print("bijection=" + ",".join(f"{i}:{j}" for i, j in enumerate(w.element_bijection)))
        else:
            print("f(x) = L x + t")
            print("L =")
            print("\n".join(rows))
            print(f"t = {format_bitstring(f.translation, f.n)}")
            print("bijection " + " ".join(f"{i}->{j}" for i, j in enumerate(w.element_bijection)))
    return EXIT_YES


def cmd_oracle(args) -> int:
    machine = args.format == "machine"
    if args.random is not None:
        report = oracle_sweep(args.dim, args.random, args.max_size or (1 << args.dim), seed=args.seed)
        if machine:
            print(f"pairs={report.pairs}\nequivalent={report.equivalent}\n"
                  f"discrepancies={len(report.discrepancies)}\nunsound={len(report.unsound)}")
        else:
            print(f"{report.pairs} pairs in F_2^{args.dim} (seed {args.seed}): "
                  f"{report.equivalent} equivalent, {len(report.discrepancies)} discrepancies, "
                  f"{len(report.unsound)} unsound witnesses")
        return EXIT_YES if report.ok else EXIT_NO
    if not args.files:
        raise CliError("oracle needs set files or --random N")
    S, T = _load_pair(args.files)
    f = brute_force_map(S, T)
    venn = venn_equivalent(S, T) is not None
    if machine:
        print(f"equivalent={int(f is not None)}\nvenn_agrees={int(venn == (f is not None))}")
    else:
        print("equivalent" if f is not None else "not equivalent")
        if f is not None:
            print("L =\n" + "\n".join("".join(map(str, r)) for r in f.rows()))
            print(f"t = {format_bitstring(f.translation, f.n)}")
        print("Venn method agrees" if venn == (f is not None) else "Venn method DISAGREES")
    return EXIT_YES if f is not None else EXIT_NO


def cmd_iscap(args) -> int:
    sets = _load(args.file, allow_empty=True)
    if not sets:
        print("cap")
        return EXIT_YES
    status = EXIT_YES
    for i, S in enumerate(sets):
        prefix = f"set {i + 1}: " if len(sets) > 1 else ""
        quad = find_quad(S)
        if quad is None:
            print(prefix + "cap")
        else:
            print(prefix + "quad found: " + " ".join(format_bitstring(S[j], S.n) for j in quad))
            status = EXIT_NO
    return status


def _class_count(n: int) -> str:
    return f"{n} class" if n == 1 else f"{n} classes"


def cmd_classify(args) -> int:
    machine = args.format == "machine"
    if args.k is not None:
        classes = diff3_classes(args.k)
        if machine:
            print(f"k={args.k} count={len(classes)} classes=" + ";".join(map(str, classes)))
        else:
            line = f"k={args.k}: {_class_count(len(classes))}"
            if classes:
                line += ": " + ", ".join(map(str, classes))
            print(line)
        return EXIT_YES
    lo, hi = args.range
    if lo < 1 or hi < lo:
        raise CliError("--range needs 1 <= A <= B")
    if not machine:
        print("k   classes")
    for k in range(lo, hi + 1):
        n = len(diff3_classes(k))
        print(f"k={k} count={n}" if machine else f"{k:<3} {n}")
    return EXIT_YES


def _verify_templates(machine: bool) -> int:
    ok = True
    templates = builtin_templates()
    by_size: dict[int, list] = {}
    for t in templates:
        by_size.setdefault(t.size, []).append(t)
    for size, group in by_size.items():
        sets = {}
        print(f"size={size}" if machine else f"size {size}")
        for t in group:
            S = instantiate_template(t)
            sets[t.name] = S
            cap = find_quad(S) is None
            dim = dimension(S)
            ok &= cap and dim == 7
            d = zero_sum_diagram(S)
            counts = [f"{lab}:{c}" for lab, c in zip(d.labels(), d.cardinalities)]
            if machine:
                print(f"template={t.name} cap={int(cap)} dim={dim} counts=" + ",".join(counts))
            else:
                print(f"  {t.name}: {'cap' if cap else 'NOT A CAP'}, dim {dim}, counts " + " ".join(counts))
        classes: list[list[str]] = []
        links = []
        for t in group:
            for cls in classes:
                N = venn_equivalent(sets[cls[0]], sets[t.name])
                if N is not None:
                    cls.append(t.name)
                    links.append((cls[0], t.name, N))
                    break
            else:
                classes.append([t.name])
        if machine:
            print(f"classes={len(classes)}")
            for cls in classes:
                print("class=" + ",".join(cls))
            for a, b, N in links:
                print(f"witness={a}->{b} matrix={_matrix_machine(N)}")
        else:
            print(f"  {_class_count(len(classes))}: " + "; ".join(
                " ≡ ".join(cls) if len(cls) > 1 else f"{cls[0]} separate" for cls in classes))
            for a, b, N in links:
                print(f"  {a} -> {b} via N = {N}")
    if not machine:
        print("reference witnesses")
    for (a, b), M in REFERENCE_WITNESSES.items():
        valid = validate_witness_matrix(instantiate_template(get_template(a)),
                                        instantiate_template(get_template(b)), M)
        ok &= valid
        if machine:
            print(f"reference={a}->{b} matrix={_matrix_machine(M)} valid={int(valid)}")
        else:
            print(f"  {a} -> {b} {M}: {'valid' if valid else 'INVALID'}")
    return EXIT_YES if ok else EXIT_NO


def cmd_templates(args) -> int:
    machine = args.format == "machine"
    if args.verify:
        return _verify_templates(machine)
    for t in builtin_templates():
        if machine:
            print(f"template={t.name} size={t.size} exprs=" + ";".join(
                ",".join(map(str, e)) for e in t.dependent_expressions))
        else:
            print(f"{t.name}  ({t.size} points)")
            for line in t.describe():
                print(f"    {line}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(
        prog="f2venn", description="Affine equivalence of subsets of F_2^n via Venn regions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("span", parents=[common], help="affine basis and dependent expressions")
    p.add_argument("file")
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("zerosum", parents=[common], help="basis and elements of E(S)")
    p.add_argument("file")
    p.set_defaults(func=cmd_zerosum)

    p = sub.add_parser("venn", parents=[common], help="Venn cardinality table")
    p.add_argument("file")
    p.set_defaults(func=cmd_venn)

    p = sub.add_parser("equiv", parents=[common], help="decide affine equivalence")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--witness", action="store_true", help="also print the affine map")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive check for n <= 4")
    p.add_argument("files", nargs="*", metavar="FILE")
    p.add_argument("--random", type=int, metavar="PAIRS", help="compare methods on random pairs")
    p.add_argument("--dim", type=int, default=3, choices=(1, 2, 3, 4))
    p.add_argument("--max-size", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("iscap", parents=[common], help="test for quads")
    p.add_argument("file")
    p.set_defaults(func=cmd_iscap)

    p = sub.add_parser("classify", parents=[common], help="classes of k-caps of dimension k-3")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("templates", parents=[common], help="dimension-7 cap templates")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_templates)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args)
    except (SetFileError, CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
