"""``droidmut`` command line: profile, mutate, verify, report, catalog."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import engine
from .errors import DroidmutError
from .operators import export_catalog
from .pfp import PfpConfig, extract_pfp, profile_document
from .project import scan_project
from .report import FORMATS, build_report, render
from .verify import HookConfig, classify_with_tests, outcomes_document, outcomes_from_document, verify

log = logging.getLogger("droidmut")

MANIFEST_NAME = "mutants_manifest.json"
DEFAULTS = {
    "seed": 0,
    "operators": None,
    "disable": [],
    "excludes": [],
    "exclude_main_activity": False,
    "mode": "clone",
    "out_dir": "droidmut-out",
    "hooks": {},
}


def load_config(path):
    config = dict(DEFAULTS)
    if path:
        with open(path) as fh:
            user = json.load(fh)
        unknown = set(user) - set(DEFAULTS)
        if unknown:
            raise DroidmutError(f"unknown config keys: {', '.join(sorted(unknown))}")
        config.update(user)
    return config


def _merge(config, args, names):
    for name in names:
        value = getattr(args, name, None)
        if value is not None and value is not False and value != []:
            config[name] = value
    return config


def _model_and_pfp(args, config):
    model = scan_project(args.root, excludes=config["excludes"])
    pfp_config = PfpConfig(exclude_main_activity=bool(config["exclude_main_activity"]),
                           disabled=frozenset(config["disable"]))
    entries = extract_pfp(model, config["operators"], pfp_config)
    for diag in model.diagnostics:
        log.warning("%s", diag)
    return model, entries


def _write(path, data: bytes):
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
    else:
        Path(path).write_bytes(data)


def cmd_profile(args, config):
    model, entries = _model_and_pfp(args, config)
    _write(args.output, engine.dump_document(profile_document(model, entries)))
    log.info("%d profile entries", len(entries))
    return 2 if model.diagnostics else 0


def cmd_mutate(args, config):
    model, entries = _model_and_pfp(args, config)
    diagnostics = list(model.diagnostics)
    mutants = engine.plan_mutants(entries, model, int(config["seed"]), diagnostics)
    out_dir = Path(config["out_dir"])
    mutants_dir = out_dir / "mutants"
    mode = engine.PATCH_FILE if config["mode"] == "patch" else engine.CLONE
    artifacts = {}
    for m in mutants:
        path = engine.materialize(m, model, mutants_dir, mode)
        artifacts[m.mutant_id] = path.relative_to(out_dir).as_posix()
    doc = engine.manifest_document(mutants, model, int(config["seed"]), mode, artifacts, diagnostics)
    engine.write_manifest(out_dir / MANIFEST_NAME, doc)
    for diag in diagnostics[len(model.diagnostics):]:
        log.warning("%s", diag)
    log.info("%d mutants written to %s", len(mutants), out_dir)
    return 2 if diagnostics else 0


def _manifest_path(target):
    p = Path(target)
    return p / MANIFEST_NAME if p.is_dir() else p


def cmd_verify(args, config):
    hooks_cfg = dict(config["hooks"])
    for flag, key in (("compile", "compile_command"), ("launch", "launch_command"),
                      ("compile_timeout", "compile_timeout_s"), ("launch_timeout", "launch_timeout_s"),
                      ("max_parallel", "max_parallel")):
        value = getattr(args, flag)
        if value is not None:
            hooks_cfg[key] = value
    if "compile_command" not in hooks_cfg:
        raise DroidmutError("a compile hook is required (--compile or hooks.compile_command)")
    hooks = HookConfig(**hooks_cfg)
    manifest_path = _manifest_path(args.manifest)
    doc = json.loads(manifest_path.read_bytes())
    if doc.get("mode") != engine.CLONE:
        raise DroidmutError("verify needs mutants materialized in Clone mode")
    base = manifest_path.parent
    dirs = {m["mutant_id"]: base / m.get("artifact", f"mutants/{m['mutant_id']}") for m in doc["mutants"]}
    outcomes = verify(dirs, hooks)
    if args.tests:
        outcomes = classify_with_tests(outcomes, json.loads(Path(args.tests).read_bytes()))
    out = args.output or str(base / "outcomes.json")
    _write(out, engine.dump_document(outcomes_document(outcomes)))
    skipped = [o for o in outcomes if o.status.value == "Skipped"]
    return 2 if skipped else 0


def cmd_report(args, config):
    manifest_path = _manifest_path(args.manifest)
    manifest = json.loads(manifest_path.read_bytes())
    outcomes_path = Path(args.outcomes) if args.outcomes else manifest_path.parent / "outcomes.json"
    outcomes = outcomes_from_document(json.loads(outcomes_path.read_bytes()))
    report = build_report(outcomes, manifest)
    _write(args.output, render(report, args.format))
    return 0


def cmd_catalog(args, config):
    _write(args.output, (export_catalog() + "\n").encode())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="droidmut", description="Android mutation analysis toolkit")
    parser.add_argument("--config", help="JSON config file; flags override its values")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def selection(p):
        p.add_argument("root", help="Android project directory")
        p.add_argument("--operators", nargs="+", help="operator ids to apply (default: all)")
        p.add_argument("--disable", nargs="+", help="operator ids to leave out")
        p.add_argument("--exclude", dest="excludes", nargs="+", help="path patterns to skip")
        p.add_argument("--exclude-main-activity", action="store_true",
                       help="do not mutate A/I and GUI locations inside the launcher activity")

    p = sub.add_parser("profile", help="print the Potential Failure Profile")
    selection(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("mutate", help="generate and materialize mutants")
    selection(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--mode", choices=("clone", "patch"))
    p.add_argument("--out-dir", dest="out_dir")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("verify", help="classify mutants with compile/launch hooks")
    p.add_argument("manifest", help="mutants manifest or the mutate output directory")
    p.add_argument("--compile", help="compile hook command, with {mutant_dir}")
    p.add_argument("--launch", help="launch hook command, with {mutant_dir}")
    p.add_argument("--compile-timeout", type=float)
    p.add_argument("--launch-timeout", type=float)
    p.add_argument("--max-parallel", type=int)
    p.add_argument("--tests", help="JSON map mutant_id -> {any_test_failed: bool}")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="aggregate outcomes per operator")
    p.add_argument("manifest")
    p.add_argument("--outcomes")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("catalog", help="export the operator catalog")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="droidmut: %(message)s")
    try:
        config = _merge(load_config(args.config), args,
                        ("seed", "operators", "disable", "excludes", "exclude_main_activity", "mode", "out_dir"))
        return args.func(args, config)
    except (DroidmutError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
