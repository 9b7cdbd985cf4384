import argparse
import random
import sys
from typing import List
import logging

from config import config
from cli.formatting import (
    bijection_lines,
    dump_json,
    pair_table_json,
    pair_table_lines,
    report_lines,
    series_check_lines,
)
from database.json_db import ReportDatabase
from errors import PartitionError
from involutions.b_pair import b_to_pair, bijection_table
from involutions.franklin import FranklinInvolution
from involutions.models import PairState
from involutions.phi import PhiInvolution
from involutions.psi_q import PsiQInvolution
from partitions.diagram import build_diagram, leg_hooks
from partitions.families import FamilySpec, enumerate_family, family_from_name
from partitions.partition import Partition, parse_partition, triangular
from qseries.checker import IdentityChecker
from qseries.identities import IDENTITY_BUILDERS, build_identity_side
from weights.verifier import THEOREM_IDS, TheoremVerifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MAPS = ("phi", "psi_do", "psi_q", "b_pair")


def emit(lines: List[str]):
    sys.stdout.write("\n".join(lines) + "\n")


def _sample(family: FamilySpec, n: int, seed: int) -> Partition:
    members = enumerate_family(family, n)
    if not members:
        raise PartitionError(f"В семействе {family} нет разбиений веса {n}")
    return random.Random(seed).choice(members)


def cmd_enumerate(args) -> int:
    family = family_from_name(args.family, args.m)
    members = enumerate_family(family, args.n)
    if args.format == "json":
        emit([dump_json({
            "family": family.name,
            "n": args.n,
            "count": len(members),
            "partitions": [p.to_list() for p in members],
        })])
    else:
        emit([str(p) for p in members])
    return EXIT_OK


def _involute_phi(args):
    if args.partition is not None:
        state = PairState(parse_partition(args.partition), parse_partition(args.sigma or ""), args.m)
    else:
        states = PhiInvolution(args.m).members(args.n)
        state = random.Random(args.seed).choice(states)
    outcome = PhiInvolution(args.m).apply(state)
    trace = {"input": state.to_dict(), "phi_case": outcome.case}
    trace["image"] = outcome.value.to_dict()
    text = f"{state} -> {outcome.value} [{outcome.case}]" if not outcome.is_fixed else f"{state}: fixed"
    return trace, text


def _involute_partition(args, involution):
    if args.partition is not None:
        partition = parse_partition(args.partition)
    else:
        partition = _sample(involution.domain(), args.n, args.seed)
    outcome = involution.apply(partition)
    text = f"{partition}: fixed" if outcome.is_fixed else f"{partition} -> {outcome.value} [{outcome.case}]"
    return outcome.trace, text


def _involute_b_pair(args):
    if args.partition is not None:
        mu = parse_partition(args.partition)
    else:
        mu = _sample(FamilySpec.b(args.m), args.n, args.seed)
    k, rows = b_to_pair(mu, args.m)
    trace = {"input": mu.to_list(), "k": k, "triangular": triangular(k).to_list(), "image": rows.to_list()}
    return trace, f"{mu} <-> T_{k}, {rows}"


def cmd_involute(args) -> int:
    if args.partition is None and args.n is None:
        raise PartitionError("Нужен --partition или --n для случайной выборки")
    if args.sigma is not None and args.map != "phi":
        raise PartitionError("--sigma допустим только с --map phi")
    if args.map == "phi":
        trace, text = _involute_phi(args)
    elif args.map == "psi_do":
        trace, text = _involute_partition(args, FranklinInvolution(args.m))
    elif args.map == "psi_q":
        trace, text = _involute_partition(args, PsiQInvolution(args.m))
    else:
        trace, text = _involute_b_pair(args)
    emit([dump_json(trace)] if args.format == "json" else [text])
    return EXIT_OK


def cmd_pair_table(args) -> int:
    if args.family == "b":
        table = bijection_table(args.n, args.m)
        if args.format == "json":
            emit([dump_json({
                "family": "b",
                "n": args.n,
                "m": args.m,
                "bijection": [
                    {"mu": row["mu"].to_list(), "k": row["k"], "rows": row["rows"].to_list()} for row in table
                ],
            })])
        else:
            emit(bijection_lines(table))
        return EXIT_OK

    if args.family == "pdo":
        involution = FranklinInvolution(args.m)
    elif args.family == "q":
        involution = PsiQInvolution(1)
    else:
        involution = PsiQInvolution(args.m)
    pairs, fixed = involution.orbits(args.n)
    if args.format == "json":
        emit([dump_json(pair_table_json(pairs, fixed, args.family, args.n, args.m))])
    else:
        emit(pair_table_lines(pairs, fixed, args.family))
    return EXIT_OK


def cmd_verify(args) -> int:
    db = ReportDatabase(config.DB_PATH) if args.save else None
    verifier = TheoremVerifier(db)
    report = verifier.verify_and_save(args.theorem, args.nmax, args.m)
    emit([dump_json(report.to_dict())] if args.format == "json" else report_lines(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_series(args) -> int:
    uses_m = IDENTITY_BUILDERS.get(args.identity, {}).get("uses_m", True)
    if args.side == "both":
        checker = IdentityChecker(ReportDatabase(config.DB_PATH) if args.save else None)
        check = checker.check_identity(args.identity, args.N, args.m, save=args.save)
        emit([dump_json(check.to_dict())] if args.format == "json" else series_check_lines(check))
        return EXIT_OK if check.equal else EXIT_FAILED

    series = build_identity_side(args.identity, args.side, args.m, args.N)
    if args.format == "json":
        data = {"identity": args.identity, "side": args.side, "N": args.N}
        if uses_m:
            data["m"] = args.m
        data["coefficients"] = series.to_dict()
        emit([dump_json(data)])
    else:
        emit([series.to_text()])
    return EXIT_OK


def cmd_render(args) -> int:
    partition = parse_partition(args.partition)
    diagram = build_diagram(partition, args.m)
    hooks = []
    if args.hooks:
        k = args.k if args.k is not None else len(partition)
        hooks = leg_hooks(partition, k, args.m)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as f:
            f.write(diagram.to_svg())
        logger.info(f"SVG сохранён: {args.svg}")
    if args.format == "json":
        data = {"partition": partition.to_list(), "m": args.m, "rows": diagram.rows}
        if args.hooks:
            data["hooks"] = [hook.to_dict() for hook in hooks]
        emit([dump_json(data)])
    else:
        lines = [diagram.to_text()] if diagram.rows else []
        for hook in hooks:
            lines.append(
                f"hook row={hook.row} length={hook.length} height={hook.height} "
                f"valid={'yes' if hook.deletion_valid else 'no'}"
            )
        emit(lines)
    return EXIT_OK


def _catalogue(statements) -> str:
    return "\n".join(f"{key}: {text}" for key, text in statements.items())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="franklin-squares",
        description="Инволюция типа Франклина для квадратов: перечисление, инволюции, проверка теорем и тождеств",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if m:
            p.add_argument("--m", type=int, default=1)

    p = sub.add_parser("enumerate", help="Перечислить разбиения семейства")
    p.add_argument("--family", choices=("distinct", "pdo", "q", "a", "b"), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("involute", help="Один шаг инволюции с трассой")
    p.add_argument("--map", choices=MAPS, required=True)
    p.add_argument("--partition")
    p.add_argument("--sigma")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    common(p)
    p.set_defaults(handler=cmd_involute)

    p = sub.add_parser("pair-table", help="Таблица пар инволюции для веса n")
    p.add_argument("--family", choices=("pdo", "q", "a", "b"), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=cmd_pair_table)

    p = sub.add_parser(
        "verify",
        help="Проверить теорему перебором",
        epilog=_catalogue(config.THEOREMS),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--nmax", type=int, default=config.DEFAULT_NMAX)
    p.add_argument("--save", action="store_true")
    common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser(
        "series",
        help="Построить или сравнить стороны тождества",
        epilog=_catalogue(config.IDENTITIES),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--identity", choices=tuple(IDENTITY_BUILDERS), required=True)
    p.add_argument("--N", type=int, default=config.DEFAULT_N)
    p.add_argument("--side", choices=("lhs", "rhs", "both"), default="both")
    p.add_argument("--save", action="store_true")
    common(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("render", help="Нарисовать 2m-модулярную диаграмму")
    p.add_argument("--partition", required=True)
    p.add_argument("--hooks", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--svg")
    common(p)
    p.set_defaults(handler=cmd_render)

    return parser


def run(argv: List[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if getattr(args, "m", 1) < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("error: --m должно быть >= 1\n")
        return EXIT_USAGE
    try:
        return args.handler(args)
    except (PartitionError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
