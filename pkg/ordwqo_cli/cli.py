import argparse
import sys
from typing import Callable, Dict, List, Optional

from ordwqo import Config, workbench
from ordwqo.ordinal.cnf import add, compare_cnf, mul, nat_prod, nat_sum, omega_tower
from ordwqo.ordinal.text import parse_cnf, print_cnf
from ordwqo.ordinal.wop import approx_index, gamma_plus, gamma_times, pow_n
from ordwqo.qo.badseq import BadSeqTree, good_pair, kb_linearize, longest_bad
from ordwqo.qo.combinators import disjoint_union, n_fold, ordered_sum, product
from ordwqo.qo.finite import FiniteQO
from ordwqo.ramsey.colouring import (
    colour_bad_product_seq,
    homogeneous_subset,
    parse_colouring,
    parse_tuples,
    print_colouring,
)
from ordwqo.ramsey.pigeonhole import pigeonhole_extract, pigeonhole_order
from ordwqo.suite import run_suites
from ordwqo.suite.manager import SUITE_NAMES
from ordwqo.theta.compare import compare_g
from ordwqo.theta.enumerate import enumerate_terms
from ordwqo.theta.term import BaseOrder, well_formed
from ordwqo.theta.text import parse_g, print_g
from ordwqo.tree.embedding import EmbeddingChecker
from ordwqo.tree.labelled import enumerate_trees
from ordwqo.tree.text import parse_tree, parse_trees, print_tree
from ordwqo.tree.whistle import Whistle
from ordwqo.utils.budget import Budget
from ordwqo.utils.error import BudgetExceededError, NotFoundError, OrdWqoError, ParamError, ParseError
from ordwqo.utils.log import ordwqo_log, set_log_level

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _int(text: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError) as e:
        raise ParseError("expected an integer", text) from e


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as e:
        raise ParseError(f"expected comma-separated integers: {e}", text) from e


def _qo(path: Optional[str], labels: Optional[List[str]] = None) -> FiniteQO:
    """Load a QO file, or the discrete order on ``labels`` when no file is given."""
    if path is None:
        if labels is None:
            raise ParamError("a quasi-order file is required, pass --qo")
        return FiniteQO.discrete(sorted(set(labels)))
    from ordwqo.qo.io import load_qo  # pylint: disable=C0415

    try:
        return load_qo(path)
    except OSError as e:
        raise NotFoundError("file", path) from e


def _dumps(Q: FiniteQO) -> str:
    from ordwqo.qo.io import dumps_qo  # pylint: disable=C0415

    return dumps_qo(Q)


def _budget(args, what: str, default: str = "enum_budget") -> Budget:
    """The --budget flag, or the configured ``default`` budget."""
    return Budget(args.budget if args.budget is not None else getattr(workbench.config, default), what)


def _bool(value) -> str:
    return "true" if value else "false"


def cmd_ord(args) -> str:
    if args.op == "tower":
        return print_cnf(omega_tower(_int(args.a)))
    a = parse_cnf(args.a)
    if args.op == "pow":
        return print_cnf(pow_n(a, _int(args.b)))
    if args.b is None:
        raise ParamError(f"ord {args.op} takes two ordinals")
    b = parse_cnf(args.b)
    if args.op == "cmp":
        return str(compare_cnf(a, b))
    ops: Dict[str, Callable] = {"add": add, "mul": mul, "nsum": nat_sum, "nprod": nat_prod}
    return print_cnf(ops[args.op](a, b))


def cmd_g(args) -> str:
    X = BaseOrder(args.carrier.split(","))
    if args.op == "enum":
        max_degree = args.max_degree if args.max_degree is not None else workbench.config.max_degree
        terms = enumerate_terms(X, args.max_size, max_degree, _budget(args, "enumerate_terms"))
        return "\n".join(print_g(t) for t in terms)
    if not args.terms:
        raise ParamError(f"g {args.op} needs a term")
    a = parse_g(args.terms[0])
    if args.op == "wf":
        res = well_formed(a, X)
        return "true" if res else f"false {res.path}: {res.reason}"
    if len(args.terms) != 2:
        raise ParamError("g cmp takes two terms")
    return str(compare_g(a, parse_g(args.terms[1]), X, check=True))


def cmd_tree(args) -> str:
    if args.op == "enum":
        Q = _qo(args.qo, args.labels.split(",") if args.labels else None)
        trees = enumerate_trees(Q, args.max_nodes, args.max_degree, _budget(args, "enumerate_trees"))
        return "\n".join(print_tree(t) for t in trees)
    if not args.trees:
        raise ParamError(f"tree {args.op} needs a tree")
    if args.op == "whistle":
        stream = parse_trees(";".join(args.trees))
        Q = _qo(args.qo, [label for t in stream for label in t.labels()])
        whistle = Whistle(Q, EmbeddingChecker(Q, workbench.config.embed_cache_size))
        for t in stream:
            pair = whistle.feed(t)
            if pair is not None:
                return f"({pair[0]},{pair[1]})"
        return "exhausted"
    t = parse_tree(args.trees[0])
    if args.op == "deg":
        return str(t.degree)
    if len(args.trees) != 2:
        raise ParamError("tree embed takes two trees")
    s = parse_tree(args.trees[1])
    Q = _qo(args.qo, list(t.labels()) + list(s.labels()))
    return _bool(EmbeddingChecker(Q, workbench.config.embed_cache_size).embeds(t, s))


def cmd_qo(args) -> str:
    if args.op in ("product", "sum", "dunion"):
        if len(args.args) != 1:
            raise ParamError(f"qo {args.op} takes two files")
        combine = {"product": product, "sum": ordered_sum, "dunion": disjoint_union}[args.op]
        return _dumps(combine(_qo(args.file), _qo(args.args[0])))
    Q = _qo(args.file)
    if args.op == "nfold":
        if len(args.args) != 2:
            raise ParamError("qo nfold takes a file, a count and a mode")
        return _dumps(n_fold(Q, _int(args.args[0]), args.args[1]))
    if args.op == "goodpair":
        seq = args.args[0].replace(",", " ").split() if args.args else []
        pair = good_pair(seq, Q)
        return "none" if pair is None else f"({pair[0]},{pair[1]})"
    if args.op == "badmax":
        length, witness = longest_bad(Q, _budget(args, "longest_bad", "search_budget"))
        return f"{length} {','.join(witness)}".rstrip()
    T = BadSeqTree(Q, _budget(args, "bad-sequence tree", "search_budget"))
    return "\n".join(f"[{','.join(T.names(node))}]" for node in kb_linearize(T))


def cmd_ramsey(args) -> str:
    if args.op == "colour":
        seq = parse_tuples(args.data)
        n = len(seq[0]) if seq else 1
        Q = _qo(args.qo, [x for entry in seq for x in entry])
        return print_colouring(colour_bad_product_seq(seq, Q, n))
    if args.param is None:
        raise ParamError(f"ramsey {args.op} needs a bound")
    if args.op == "homog":
        res = homogeneous_subset(parse_colouring(args.data), args.param)
        return "none" if res is None else ",".join(str(i) for i in res)
    if args.op == "pigeon":
        colour, indices = pigeonhole_extract(_ints(args.data), args.param)
        return f"{colour} {','.join(str(i) for i in indices)}".rstrip()
    res = pigeonhole_order(_ints(args.data), args.param)
    return "\n".join([
        "alpha: " + " < ".join(str(i) for i in res.ranking),
        "seq: " + ",".join(f"({a},{i})" for a, i in res.sequence),
    ])


def cmd_wop(args) -> str:
    a = parse_cnf(args.a)
    if args.op == "gplus":
        return print_cnf(gamma_plus(a))
    if args.op == "gtimes":
        return print_cnf(gamma_times(a))
    if args.b is None:
        raise ParamError("wop approx takes two ordinals")
    return str(approx_index(a, parse_cnf(args.b), _budget(args, "approx_index", "search_budget")))


def cmd_suite(args) -> str:
    if args.op == "list":
        return "\n".join(SUITE_NAMES + ["all"])
    if args.config:
        workbench.init_from_config(args.config)
    else:
        workbench.init(workbench.config)
    config = workbench.config
    if args.budget is not None:
        config = Config(**{**vars(config), "enum_budget": args.budget, "search_budget": args.budget})
        workbench.init(config)
    reports = run_suites(args.suite, config)
    args.failed = any(not r.passed for r in reports)
    return workbench.report.to_json(timing=args.timing)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordwqo", description="ordinal notations and well quasi-orders")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log suite progress, twice for details")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ord", help="CNF ordinal arithmetic")
    p.add_argument("op", choices=["cmp", "add", "mul", "nsum", "nprod", "pow", "tower"])
    p.add_argument("a", help="an ordinal, or the height for tower")
    p.add_argument("b", nargs="?", default=None, help="the second ordinal, or the exponent for pow")
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("g", help="terms of the theta notation over a base order")
    p.add_argument("op", choices=["cmp", "wf", "enum"])
    p.add_argument("terms", nargs="*")
    p.add_argument("--carrier", default="0,1,2", help="the base order, least element first")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_g)

    p = sub.add_parser("tree", help="labelled trees and their embedding")
    p.add_argument("op", choices=["deg", "embed", "enum", "whistle"])
    p.add_argument("trees", nargs="*")
    p.add_argument("--qo", default=None, help="the label order file, the discrete order by default")
    p.add_argument("--labels", default=None, help="comma-separated labels for enum without --qo")
    p.add_argument("--max-nodes", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("qo", help="finite quasi-orders and bad sequences")
    p.add_argument("op", choices=["product", "sum", "dunion", "nfold", "goodpair", "badmax", "kb"])
    p.add_argument("file", help="a QO file")
    p.add_argument("args", nargs="*")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_qo)

    p = sub.add_parser("ramsey", help="colourings and pigeonhole constructions")
    p.add_argument("op", choices=["colour", "homog", "pigeon", "order"])
    p.add_argument("data", help="tuples, a colouring or comma-separated integers")
    p.add_argument("param", nargs="?", type=int, default=None, help="size, colour bound k or bound m")
    p.add_argument("--qo", default=None)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("wop", help="ordinal function evaluators")
    p.add_argument("op", choices=["gplus", "gtimes", "approx"])
    p.add_argument("a")
    p.add_argument("b", nargs="?", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_wop)

    p = sub.add_parser("suite", help="property suites")
    p.add_argument("op", choices=["run", "list"])
    p.add_argument("--suite", default="all")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--config", default=None, help="a YAML config file")
    p.add_argument("--timing", action="store_true", help="add wall times to the report")
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; the result goes to stdout, diagnostics to stderr.

    :return: 0 on success, 1 on a domain error or a failing suite, 2 on a parse error,
     3 when a budget is exhausted.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_PARSE
    set_log_level(args.verbose)
    args.failed = False
    try:
        print(args.func(args))
    except ParseError as e:
        ordwqo_log.error("parse error: %s", e)
        return EXIT_PARSE
    except BudgetExceededError as e:
        ordwqo_log.error("%s", e)
        return EXIT_BUDGET
    except OrdWqoError as e:
        ordwqo_log.error("%s", e)
        return EXIT_DOMAIN
    except RecursionError:
        # the recursive-descent parsers and term walks still use the interpreter stack
        ordwqo_log.error("input is nested deeper than the interpreter stack allows")
        return EXIT_BUDGET
    return EXIT_DOMAIN if args.failed else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
