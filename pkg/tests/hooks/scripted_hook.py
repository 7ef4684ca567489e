#!/usr/bin/env python3
"""Stub hook whose behaviour per mutant comes from a JSON script.

    scripted_hook.py compile|launch SCRIPT.json MUTANT_DIR

The script maps mutant ids (the clone directory name) to one of
"stillborn", "crash", "live", "hang" or "launch_error".
"""
import json
import sys
import time
from pathlib import Path

stage, script, mutant_dir = sys.argv[1:4]
behaviour = json.loads(Path(script).read_text()).get(Path(mutant_dir).name, "live")

if stage == "compile":
    if behaviour == "stillborn":
        print("error: unreachable code")
        sys.exit(1)
    print("BUILD OK")
    sys.exit(0)

if behaviour == "crash":
    print("CRASH:java.lang.NullPointerException")
    print("    at com.example.Main.onCreate(Main.java:12)")
    sys.exit(0)
if behaviour == "hang":
    time.sleep(30)
if behaviour == "launch_error":
    print("adb: device offline")
    sys.exit(3)
print("launched")
