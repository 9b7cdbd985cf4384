#!/usr/bin/env python3
"""
Подсчёт метрик из eval_outputs/runs_index.jsonl.

Метрики:
- pass_rate (кейс прошёл проверку), всего и по категориям
- error_rate (кейс упал с исключением)
- latency p50/p90/p95
- список непрошедших кейсов

Опционально валидирует result.json отчётов о теоремах и тождествах по eval/output_schema.json.
"""
import os, json, argparse, statistics, math
from collections import defaultdict
from pathlib import Path

import jsonschema

SCHEMA_PARTS = {"theorem": "theorem_report", "identity": "series_check"}


def percentile(xs, p):
    xs=sorted(xs)
    if not xs: return None
    k=(len(xs)-1)*p
    f=math.floor(k); c=math.ceil(k)
    if f==c: return xs[int(k)]
    return xs[f]*(c-k)+xs[c]*(k-f)


def schema_valid(result, schema, part) -> bool:
    sub = {**schema["definitions"][part], "definitions": schema["definitions"]}
    try:
        jsonschema.validate(result, sub)
        return True
    except jsonschema.ValidationError:
        return False


def main():
    ap=argparse.ArgumentParser()
    ap.add_argument("--index", default="eval_outputs/runs_index.jsonl")
    ap.add_argument("--raw_dir", default="eval_outputs/raw")
    ap.add_argument("--schema", default="eval/output_schema.json")
    ap.add_argument("--out", default="eval_outputs/metrics.json")
    args=ap.parse_args()

    runs=[]
    with open(args.index,"r",encoding="utf-8") as f:
        for line in f:
            if line.strip():
                runs.append(json.loads(line))

    schema=None
    if os.path.exists(args.schema):
        with open(args.schema,"r",encoding="utf-8") as f:
            schema=json.load(f)

    lat=[r.get("latency_sec") for r in runs if isinstance(r.get("latency_sec"), (int,float))]
    passed=[r for r in runs if r.get("status",{}).get("passed")]
    errored=[r for r in runs if not r.get("status",{}).get("ok")]

    by_category=defaultdict(lambda: {"n": 0, "passed": 0})
    for r in runs:
        by_category[r["category"]]["n"]+=1
        if r.get("status",{}).get("passed"):
            by_category[r["category"]]["passed"]+=1

    schema_hits=[]
    if schema:
        for r in runs:
            part=SCHEMA_PARTS.get(r["category"])
            path=os.path.join(args.raw_dir, r["id"], "result.json")
            if part and os.path.exists(path):
                with open(path,"r",encoding="utf-8") as f:
                    schema_hits.append(schema_valid(json.load(f), schema, part))

    metrics = {
        "n_runs": len(runs),
        "pass_rate": round(len(passed)/len(runs), 3) if runs else None,
        "error_rate": round(len(errored)/len(runs), 3) if runs else None,
        "pass_rate_by_category": {
            cat: round(v["passed"]/v["n"], 3) for cat, v in sorted(by_category.items())
        },
        "latency_sec": {
            "mean": round(statistics.mean(lat),3) if lat else None,
            "p50": round(percentile(lat,0.50),3) if lat else None,
            "p90": round(percentile(lat,0.90),3) if lat else None,
            "p95": round(percentile(lat,0.95),3) if lat else None,
            "total": round(sum(lat),3) if lat else None,
        },
        "schema_valid_rate": round(sum(schema_hits)/len(schema_hits),3) if schema_hits else None,
        "failed_cases": [r["id"] for r in runs if not r.get("status",{}).get("passed")],
    }

    Path(os.path.dirname(args.out)).mkdir(parents=True, exist_ok=True)
    with open(args.out,"w",encoding="utf-8") as f:
        json.dump(metrics,f,ensure_ascii=False,indent=2)

    print("Saved:", args.out)
    print(json.dumps(metrics,ensure_ascii=False,indent=2))


if __name__=="__main__":
    main()
