"""Command-line interface.

Exit codes: 0 = YES/VALID, 1 = NO/INVALID, 2 = usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations

from . import io, oracle
from .acyclic import kernelize_forest, solve_forest, solve_linear_forest, solve_path, solve_star, solve_tree
from .classes import GraphClass, class_from_name, recognize
from .dense import (
    kernel_dual_clique,
    kernel_dual_cluster,
    kernel_dual_hereditary,
    solve_clique_k,
    solve_cluster_k,
    solve_dual_generic,
    solve_split_k,
    solve_xp_k,
)
from .errors import BudgetExceeded, IdentikitError
from .graph import Graph, components, verify_witness
from .reductions import (
    gen_chordal_target_from_clique,
    gen_clique_from_set_cover,
    gen_linear_forest_from_bin_packing,
    gen_split_from_clique,
    gen_tree_from_independent_set,
)
from .result import BinPackingInstance, Instance, KernelVerdict, SetCoverInstance, SolveResult
from .target import identify_to_forest, identify_to_tree, root_tree

_K_SOLVERS = {
    GraphClass.PATH: solve_path,
    GraphClass.LINEAR_FOREST: solve_linear_forest,
    GraphClass.STAR: solve_star,
    GraphClass.TREE: solve_tree,
    GraphClass.FOREST: solve_forest,
    GraphClass.CLIQUE: solve_clique_k,
    GraphClass.CLUSTER: solve_cluster_k,
    GraphClass.SPLIT: solve_split_k,
}


def _emit_certificate(result: SolveResult) -> None:
    """Print the target graph block and bag lines with compacted target ids."""
    target, bags = result.target, result.witness
    keys = sorted(bags)
    relabel = {x: i for i, x in enumerate(sorted(target.vertices()))}
    sys.stdout.write(io.format_graph(target))
    out_bags = {relabel[x]: bags[x] for x in keys}
    sys.stdout.write(io.format_witness(out_bags))


def _cmd_solve(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    cls = class_from_name(args.cls)
    if args.oracle:
        budget = oracle.OracleBudget()
        if g.n > budget.max_vertices:
            raise BudgetExceeded(f"{g.n} vertices exceeds the oracle cap {budget.max_vertices}")
        k = args.k if args.k is not None else g.n - args.dual_p
        result = solve_xp_k(g, k, cls)
    elif args.k is not None:
        solver = _K_SOLVERS.get(cls)
        result = solver(g, args.k) if solver else solve_xp_k(g, args.k, cls)
    else:
        result = solve_dual_generic(g, args.dual_p, cls)
    print("YES" if result.yes else "NO")
    if result.yes and args.witness and result.witness is not None:
        _emit_certificate(result)
    return 0 if result.yes else 1


def _cmd_identify(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    h = io.read_graph(args.target)
    witness = None
    if recognize(h, GraphClass.FOREST):
        if len(components(g)) == 1 and len(components(h)) == 1 and h.n >= 1:
            witness = identify_to_tree(g, root_tree(h))
            yes = witness is not None
        else:
            yes = identify_to_forest(g, h)
            if yes and args.witness:
                witness = _oracle_witness_or_none(g, h)
    else:
        budget = oracle.OracleBudget()
        if g.n > budget.max_vertices:
            raise BudgetExceeded(
                f"general targets use the oracle, capped at {budget.max_vertices} vertices ({g.n} given)"
            )
        witness = oracle.identify_to(g, h)
        yes = witness is not None
    print("YES" if yes else "NO")
    if yes and args.witness and witness is not None:
        _emit_certificate(SolveResult.of(h, witness))
    return 0 if yes else 1


def _oracle_witness_or_none(g, h):
    try:
        return oracle.identify_to(g, h)
    except BudgetExceeded:
        return None


def _cmd_kernelize(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    cls = class_from_name(args.cls)
    if args.k is not None:
        if cls is not GraphClass.FOREST:
            raise IdentikitError("kernelization by k is available for --class forest")
        trace = kernelize_forest(g, args.k)
        print(f"# verdict: {trace.verdict.value}")
        print(f"# budget: {trace.final_budget}")
        print(f"# forced-identifications: {trace.forced_identifications}")
        print(f"# removed-bridges: {len(trace.removed_bridges)} removed-isolated: {len(trace.removed_isolated)}")
        if trace.verdict is KernelVerdict.REDUCED:
            sys.stdout.write(io.format_graph(trace.reduced.graph))
        return 0
    if cls is GraphClass.CLIQUE:
        inst = kernel_dual_clique(g, args.dual_p)
    elif cls is GraphClass.CLUSTER:
        inst = kernel_dual_cluster(g, args.dual_p)
    elif cls in (GraphClass.SPLIT, GraphClass.INTERVAL, GraphClass.CHORDAL):
        inst = kernel_dual_hereditary(g, args.dual_p, cls)
    else:
        raise IdentikitError(f"no dual kernel for class {cls.name.lower()}")
    print(f"# budget: {inst.budget}")
    sys.stdout.write(io.format_graph(inst.graph))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    bags = io.parse_witness_file(args.witness)
    if args.target is not None:
        h = io.read_graph(args.target)
    else:
        with open(args.witness, "r", encoding="utf-8") as fh:
            h = io.parse_embedded_graph(fh.read())
        if h is None:
            raise IdentikitError("witness file carries no target graph block; pass one explicitly")
    ok = verify_witness(g, h, {x: frozenset(v) for x, v in bags.items()})
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def _brute_independent_set(g: Graph, p: int) -> bool:
    verts = g.vertices()
    return any(
        all(not g.has_edge(a, b) for a, b in combinations(pick, 2)) for pick in combinations(verts, p)
    )


def _brute_set_cover(n: int, sets, k: int) -> bool:
    if n == 0:
        return True
    for r in range(1, k + 1):
        for combo in combinations(range(len(sets)), r):
            if set().union(*(sets[j] for j in combo)) == set(range(n)):
                return True
    return False


def _brute_bin_packing(sizes, bins: int, cap: int) -> bool:
    def rec(i: int, loads: tuple[int, ...]) -> bool:
        if i == len(sizes):
            return all(l == cap for l in loads)
        seen = set()
        for j in range(bins):
            if loads[j] in seen or loads[j] + sizes[i] > cap:
                continue
            seen.add(loads[j])
            if rec(i + 1, loads[:j] + (loads[j] + sizes[i],) + loads[j + 1 :]):
                return True
        return False

    return rec(0, (0,) * bins)


def _cmd_generate(args: argparse.Namespace) -> int:
    expected = "unknown"
    target = None
    if args.generator == "tree-from-independent-set":
        g = io.read_graph(args.graph)
        inst = gen_tree_from_independent_set(g, args.p)
        if g.n <= 16:
            expected = "yes" if _brute_independent_set(g, args.p) else "no"
        out, budget = inst.graph, inst.budget
    elif args.generator == "linear-forest-from-bin-packing":
        sizes = tuple(int(tok) for tok in args.sizes.split(","))
        bp = BinPackingInstance(sizes, args.bins, args.capacity)
        out, target = gen_linear_forest_from_bin_packing(bp)
        budget = out.n - target.n
        if len(sizes) <= 12:
            expected = "yes" if _brute_bin_packing(sizes, args.bins, args.capacity) else "no"
    elif args.generator == "clique-from-set-cover":
        sets = [frozenset(int(tok) for tok in chunk.split(",") if tok) for chunk in args.sets.split(";")]
        sc = SetCoverInstance(args.universe, sets, args.budget)
        inst = gen_clique_from_set_cover(sc)
        out, budget = inst.graph, inst.budget
        if len(sets) <= 15:
            expected = "yes" if _brute_set_cover(args.universe, sets, args.budget) else "no"
    elif args.generator == "split-from-clique":
        g = io.read_graph(args.graph)
        inst = gen_split_from_clique(Instance(g, args.k))
        out, budget = inst.graph, inst.budget
        expected = "yes" if solve_clique_k(g, args.k) else "no"
    else:  # chordal-target-from-clique
        g = io.read_graph(args.graph)
        out, target = gen_chordal_target_from_clique(Instance(g, args.k))
        budget = None
        expected = "yes" if solve_clique_k(g, args.k) else "no"
    sys.stdout.write(io.format_graph(out))
    if budget is not None:
        print(f"# budget: {budget}")
    print(f"# expected: {expected}")
    if target is not None:
        if args.target_out is None:
            raise IdentikitError("this generator emits a target graph; pass --target-out PATH")
        with open(args.target_out, "w", encoding="utf-8") as fh:
            fh.write(io.format_graph(target))
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    if args.target is not None:
        h = io.read_graph(args.target)
        bags = oracle.identify_to(g, h)
        print("YES" if bags is not None else "NO")
        if bags is not None and args.witness:
            _emit_certificate(SolveResult.of(h, bags))
        return 0 if bags is not None else 1
    if args.cls is None:
        raise IdentikitError("oracle needs --class or a target graph file")
    value = oracle.min_identifications(g, class_from_name(args.cls))
    print("unreachable" if value is None else str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="identikit", description="Vertex-identification solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=None, help="accepted for interface stability; ignored")
        p.add_argument("--jobs", type=int, default=1, help="reserved; solvers run sequentially")

    p_solve = sub.add_parser("solve", help="decide class membership within a budget")
    p_solve.add_argument("--class", dest="cls", required=True)
    group = p_solve.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="identification budget")
    group.add_argument("--dual-p", type=int, help="target size parameter p = n - k")
    p_solve.add_argument("--witness", action="store_true")
    p_solve.add_argument("--oracle", action="store_true", help="force the exhaustive oracle (cap-guarded)")
    add_common(p_solve)
    p_solve.add_argument("graph")
    p_solve.set_defaults(fn=_cmd_solve)

    p_id = sub.add_parser("identify", help="decide identification to an explicit target")
    p_id.add_argument("--witness", action="store_true")
    add_common(p_id)
    p_id.add_argument("graph")
    p_id.add_argument("target")
    p_id.set_defaults(fn=_cmd_identify)

    p_kern = sub.add_parser("kernelize", help="run a kernelization and print the reduced instance")
    p_kern.add_argument("--class", dest="cls", required=True)
    kgroup = p_kern.add_mutually_exclusive_group(required=True)
    kgroup.add_argument("--k", type=int)
    kgroup.add_argument("--dual-p", type=int)
    add_common(p_kern)
    p_kern.add_argument("graph")
    p_kern.set_defaults(fn=_cmd_kernelize)

    p_ver = sub.add_parser("verify", help="check a witness structure")
    p_ver.add_argument("graph")
    p_ver.add_argument("rest", nargs="+", help="[target-graph] witness-file")
    p_ver.set_defaults(fn=None)

    p_gen = sub.add_parser("generate", help="emit hardness-construction instances")
    p_gen.add_argument(
        "generator",
        choices=[
            "tree-from-independent-set",
            "linear-forest-from-bin-packing",
            "clique-from-set-cover",
            "split-from-clique",
            "chordal-target-from-clique",
        ],
    )
    p_gen.add_argument("graph", nargs="?", help="source graph file (graph-based generators)")
    p_gen.add_argument("--p", type=int, help="independent-set size")
    p_gen.add_argument("--k", type=int, help="source clique budget")
    p_gen.add_argument("--sizes", help="bin-packing item sizes, comma-separated")
    p_gen.add_argument("--bins", type=int)
    p_gen.add_argument("--capacity", type=int)
    p_gen.add_argument("--universe", type=int, help="set-cover universe size")
    p_gen.add_argument("--sets", help="set-cover sets: comma-separated ids, sets joined by ';'")
    p_gen.add_argument("--budget", type=int, help="set-cover budget")
    p_gen.add_argument("--target-out", help="where to write the target graph, when one is produced")
    add_common(p_gen)
    p_gen.set_defaults(fn=_cmd_generate)

    p_or = sub.add_parser("oracle", help="exhaustive ground truth (cap-guarded)")
    p_or.add_argument("--class", dest="cls")
    p_or.add_argument("--witness", action="store_true")
    add_common(p_or)
    p_or.add_argument("graph")
    p_or.add_argument("target", nargs="?")
    p_or.set_defaults(fn=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if len(args.rest) == 1:
                args.target, args.witness = None, args.rest[0]
            elif len(args.rest) == 2:
                args.target, args.witness = args.rest
            else:
                parser.error("verify takes GRAPH [TARGET] WITNESS")
            return _cmd_verify(args)
        return args.fn(args)
    except (IdentikitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
