import json
from typing import Dict, List, Tuple

from database.models import SeriesCheck, TheoremReport
from partitions.partition import Partition


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def positive_first(left: Partition, right: Partition, family: str) -> Tuple[Partition, Partition]:
    """Член пары с положительным знаком веса ставится слева"""
    def positive(p: Partition) -> bool:
        if family == "pdo":
            return len(p) % 2 == 0
        return len(p) % 2 == 1
    return (left, right) if positive(left) else (right, left)


def pair_table_lines(pairs: List[Tuple[Partition, Partition]], fixed: List[Partition], family: str) -> List[str]:
    ordered = sorted(
        (positive_first(left, right, family) for left, right in pairs),
        key=lambda pair: pair[0].parts,
        reverse=True,
    )
    lines = [f"{left} <-> {right}" for left, right in ordered]
    lines.extend(f"fixed: {p}" for p in fixed)
    return lines


def pair_table_json(pairs, fixed, family: str, n: int, m: int) -> Dict:
    ordered = sorted(
        (positive_first(left, right, family) for left, right in pairs),
        key=lambda pair: pair[0].parts,
        reverse=True,
    )
    return {
        "family": family,
        "n": n,
        "m": m,
        "pairs": [[left.to_list(), right.to_list()] for left, right in ordered],
        "fixed": [p.to_list() for p in fixed],
    }


def bijection_lines(table: List[Dict]) -> List[str]:
    return [f"{row['mu']} <-> T_{row['k']}, {row['rows']}" for row in table]


def report_lines(report: TheoremReport) -> List[str]:
    header = f"{report.theorem} n=1..{report.n_max}" + (f" m={report.m}" if report.m is not None else "")
    lines = [header]
    for entry in report.entries:
        extra = "".join(f" {key}={value}" for key, value in entry.extra.items())
        lines.append(f"{entry.n}: {entry.lhs} | {entry.rhs} {'ok' if entry.ok else 'FAIL'}{extra}")
    lines.append("PASS" if report.passed else "FAIL")
    return lines


def series_check_lines(check: SeriesCheck) -> List[str]:
    head = f"{check.identity} N={check.N}" + (f" m={check.m}" if check.m is not None else "")
    if check.equal:
        return [f"{head}: equal"]
    d = check.first_discrepancy
    return [f"{head}: differ at q^{d['degree']}: {d['left']} | {d['right']}"]
