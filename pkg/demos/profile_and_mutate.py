# Profiling an app and generating mutants
#
# This walks through the first half of the pipeline on the small "omni" test
# app, which was written so that every operator in the catalog fires exactly
# once. Run it from the repository root:
#
#     python demos/profile_and_mutate.py

import tempfile
from collections import Counter
from pathlib import Path

import droidmut
from droidmut import engine

APP = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "omni"

# Scanning the project gives a read-only model: every file with its bytes,
# its kind (manifest, layout, Java source ...), and parsed views.

model = droidmut.scan_project(APP)
for f in model.files:
    print(f"{f.kind.value:18} {f.relative_path}")
print("activities:", model.activity_registry, "launcher:", model.main_activity)

# The catalog holds 35 operators in ten fault categories.

print(Counter(op.category.value for op in droidmut.catalog()))

# The Potential Failure Profile lists every place an operator can apply.

pfp = droidmut.extract_pfp(model)
print(len(pfp), "locations")
for entry in pfp[:8]:
    line, col = model.file(entry.file).line_col(entry.target.start)
    print(f"  {entry.operator_id:34} {entry.file}:{line}:{col}")

# Each location becomes one first-order mutant. The seed only matters for the
# few operators that pick something at random (typo position, SDK value ...).

mutants = droidmut.plan_mutants(pfp, model, seed=42)
for m in mutants[:8]:
    print(" ", m.mutant_id, "|", m.summary)

# A patch is a list of byte edits; reverting it gives back the original file.

m = next(m for m in mutants if m.operator_id == "NullIntent")
path = m.patch.files[0]
before = model.file(path).content
after = m.patch.apply_to(path, before)
assert m.patch.revert(path, after) == before

# Mutants can be written either as full project clones or as unified diffs.

with tempfile.TemporaryDirectory() as tmp:
    diff = droidmut.materialize(m, model, tmp, droidmut.PATCH_FILE)
    print(diff.read_text())
    clone = droidmut.materialize(m, model, tmp, droidmut.CLONE)
    print("clone at", clone.name, "with", sum(1 for p in clone.rglob("*") if p.is_file()), "files")

# The run manifest ties mutant ids to patches and artifacts.

doc = engine.manifest_document(mutants, model, 42, droidmut.CLONE)
print(engine.dump_document(doc)[:400].decode(), "...")
