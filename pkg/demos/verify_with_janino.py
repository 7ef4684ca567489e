# Classifying mutants with a real compiler
#
# The verification harness only runs commands: a compile hook and an optional
# launch hook, each given the mutant's clone directory. The repository ships
# hooks/janino_compile.py, which checks the resource files, generates R.java
# and compiles the Java sources against small Android API stubs. It needs a
# Java runtime (`pip install jdk4py` is enough).
#
#     python demos/verify_with_janino.py [APP_DIR]
#
# Expect roughly one second per mutant.

import sys
import tempfile
from pathlib import Path

import droidmut

ROOT = Path(__file__).resolve().parent.parent
app = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "tests" / "fixtures" / "single_activity"

model = droidmut.scan_project(app)
mutants = droidmut.plan_mutants(droidmut.extract_pfp(model), model, seed=0)
print(len(mutants), "mutants")

hooks = droidmut.HookConfig(
    compile_command=f"{sys.executable} {ROOT / 'hooks' / 'janino_compile.py'} {{mutant_dir}}",
    compile_timeout_s=120,
)

with tempfile.TemporaryDirectory() as tmp:
    dirs = {m.mutant_id: droidmut.materialize(m, model, tmp) for m in mutants}
    outcomes = droidmut.verify(dirs, hooks)

# Without a launch hook a mutant that builds is Live. A Stillborn mutant keeps
# the first lines of compiler output as evidence.

for o in outcomes:
    print(f"{o.mutant_id:36} {o.status.value:10} {o.wall_time_s:5.1f}s")
    if o.status == droidmut.Status.STILLBORN:
        print("    " + o.evidence.splitlines()[0])

report = droidmut.build_report(outcomes, mutants)
print(droidmut.render(report, "table").decode())

# For devices or emulators, see hooks/gradle_compile.sh and
# hooks/monkey_launch.sh. A launch hook reports a crash by printing
# CRASH:<exception> as its first line; the mutant is then Trivial.
