#!/usr/bin/env python3
"""
Прогон приёмочных проверок.

Что делает:
- читает eval/testcases.jsonl
- для каждого кейса запускает нужную проверку:
  theorem       : TheoremVerifier (перебор по n = 1..n_max)
  identity      : IdentityChecker.check_identity (обе стороны тождества до q^N)
  specialization: подстановки a=-1 и m=1
  bridge        : перебор против произведений
  involution    : аудит инволюции для n = 0..n_max
  bijection     : b_to_pair / pair_to_b взаимно обратны для |mu| <= n_max
- сохраняет результат каждого кейса (result.json) и метаданные (meta.json: latency, статус)

Метрики считаются отдельным скриптом compute_metrics.py
"""
import sys
import os

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, PROJECT_ROOT)

import json, time, argparse, pathlib, traceback, logging

logger = logging.getLogger("eval")


def ensure_dir(p: str):
    pathlib.Path(p).mkdir(parents=True, exist_ok=True)


def now_ms():
    return int(time.time()*1000)


def safe_write(path, obj):
    with open(path, "w", encoding="utf-8") as f:
        if isinstance(obj, (dict, list)):
            json.dump(obj, f, ensure_ascii=False, indent=2)
        else:
            f.write(str(obj))


def run_theorem(case, tools):
    report = tools["verifier"].verify_and_save(case["theorem"], case["n_max"], case.get("m", 1))
    return report.passed, report.to_dict()


def run_identity(case, tools):
    check = tools["checker"].check_identity(case["identity"], case["N"], case.get("m", 1), save=tools["save"])
    return check.equal, check.to_dict()


def run_specialization(case, tools):
    checks = tools["checker"].check_specializations(case["N"], case.get("m", 1))
    return all(c.equal for c in checks), [c.to_dict() for c in checks]


def run_bridge(case, tools):
    checks = tools["checker"].check_bridges(case["N"], case.get("m_values"))
    return all(c.equal for c in checks), [c.to_dict() for c in checks]


def run_involution(case, tools):
    from involutions.franklin import FranklinInvolution
    from involutions.phi import PhiInvolution
    from involutions.psi_q import PsiQInvolution

    maps = {"phi": PhiInvolution, "psi_do": FranklinInvolution, "psi_q": PsiQInvolution}
    involution = maps[case["map"]](case.get("m", 1))
    audits = [involution.audit(n) for n in range(0, case["n_max"] + 1)]
    return all(a["ok"] for a in audits), audits


def run_bijection(case, tools):
    from involutions.b_pair import b_to_pair, pair_to_b
    from partitions.families import FamilySpec, enumerate_family

    m = case.get("m", 1)
    problems = []
    checked = 0
    for n in range(0, case["n_max"] + 1):
        for mu in enumerate_family(FamilySpec.b(m), n):
            k, rows = b_to_pair(mu, m)
            checked += 1
            if pair_to_b(k, rows, m) != mu or k * k + rows.size != mu.size:
                problems.append(mu.to_list())
    return not problems, {"m": m, "checked": checked, "problems": problems}


RUNNERS = {
    "theorem": run_theorem,
    "identity": run_identity,
    "specialization": run_specialization,
    "bridge": run_bridge,
    "involution": run_involution,
    "bijection": run_bijection,
}


def run_single_case(case, tools, out_dir):
    """Запуск одного кейса"""
    run_path = os.path.join(out_dir, case["id"])
    ensure_dir(run_path)

    meta = {"id": case["id"], "category": case["category"], "t_start_ms": now_ms()}
    status = {"ok": True, "passed": False, "errors": []}

    t0 = time.time()
    try:
        passed, result = RUNNERS[case["category"]](case, tools)
        status["passed"] = passed
        safe_write(os.path.join(run_path, "result.json"), result)
    except Exception as e:
        status["ok"] = False
        status["errors"].append({"type": type(e).__name__, "msg": str(e), "trace": traceback.format_exc()})
    finally:
        t1 = time.time()
        meta["latency_sec"] = round(t1-t0, 3)
        meta["status"] = status
        safe_write(os.path.join(run_path, "meta.json"), meta)
    logger.info(f"{case['id']}: {'PASS' if status['passed'] else 'FAIL'} за {meta['latency_sec']} с")
    return meta


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--project_root", default=".", help="Корень проекта (где main.py)")
    ap.add_argument("--cases", default="eval/testcases.jsonl", help="Путь к тест-кейсам")
    ap.add_argument("--out", default="eval_outputs/raw", help="Папка для результатов")
    ap.add_argument("--only", help="Выполнить только кейсы этой категории")
    ap.add_argument("--save", action="store_true", help="Сохранять отчёты в хранилище")
    args = ap.parse_args()

    os.chdir(args.project_root)
    ensure_dir(args.out)

    from config import config
    from database.json_db import ReportDatabase
    from qseries.checker import IdentityChecker
    from weights.verifier import TheoremVerifier

    logging.basicConfig(
        level=config.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler()]
    )

    db = ReportDatabase(config.DB_PATH) if args.save else None
    tools = {"verifier": TheoremVerifier(db), "checker": IdentityChecker(db), "save": args.save}

    all_runs = []
    with open(args.cases, "r", encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            case = json.loads(line)
            if args.only and case["category"] != args.only:
                continue
            all_runs.append(run_single_case(case, tools, args.out))

    ensure_dir("eval_outputs")
    with open("eval_outputs/runs_index.jsonl", "w", encoding="utf-8") as f:
        for r in all_runs:
            f.write(json.dumps(r, ensure_ascii=False)+"\n")

    print(f"Done. Runs: {len(all_runs)}. Raw results in {args.out}. Index: eval_outputs/runs_index.jsonl")


if __name__ == "__main__":
    main()
