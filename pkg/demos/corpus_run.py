# Corpus mode: one report per app plus per-app mean rates
#
# Point this at a directory whose subdirectories are Android projects (for
# instance a checkout of the Androtest apps) and give it a compile hook, and
# optionally a launch hook:
#
#     python demos/corpus_run.py APPS_DIR \
#         --compile "hooks/gradle_compile.sh {mutant_dir}" \
#         --launch "hooks/monkey_launch.sh {mutant_dir}" --out corpus-out
#
# Each app gets <out>/<app>/report.json; <out>/summary.json holds the mean
# of the per-app SM and TM percentages, the same averaging used for the
# published per-app figures. Apps without a manifest are skipped.

import argparse
import json
import shutil
import sys
from pathlib import Path

import droidmut
from droidmut import engine
from droidmut.errors import DroidmutError


def run_app(app_dir, out_dir, hooks, seed):
    model = droidmut.scan_project(app_dir)
    mutants = droidmut.plan_mutants(droidmut.extract_pfp(model), model, seed)
    clones = out_dir / "mutants"
    dirs = {m.mutant_id: droidmut.materialize(m, model, clones) for m in mutants}
    outcomes = droidmut.verify(dirs, hooks)
    shutil.rmtree(clones, ignore_errors=True)
    report = droidmut.build_report(outcomes, mutants)
    (out_dir / "report.json").write_bytes(droidmut.render(report, "json"))
    return report


def main(argv=None):
    ap = argparse.ArgumentParser(description="run the whole pipeline over a directory of apps")
    ap.add_argument("apps_dir")
    ap.add_argument("--compile", required=True)
    ap.add_argument("--launch")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="corpus-out")
    args = ap.parse_args(argv)

    hooks = droidmut.HookConfig(args.compile, args.launch)
    out = Path(args.out)
    reports = {}
    for app in sorted(p for p in Path(args.apps_dir).iterdir() if p.is_dir()):
        app_out = out / app.name
        app_out.mkdir(parents=True, exist_ok=True)
        try:
            reports[app.name] = run_app(app, app_out, hooks, args.seed)
        except DroidmutError as exc:
            print(f"{app.name}: skipped ({exc})")
            continue
        t = reports[app.name].totals
        print(f"{app.name:24} TNGM={t['TNGM']:5} SM={t['SM']:4} TM={t['TM']:4}")

    summary = droidmut.corpus_summary(reports)
    (out / "summary.json").write_bytes(engine.dump_document(summary))
    print(json.dumps(summary, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
