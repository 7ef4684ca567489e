"""Mutation analysis for Android app source trees.

Pipeline: ``scan_project`` -> ``extract_pfp`` -> ``plan_mutants`` ->
``materialize`` -> ``verify`` -> ``build_report``.
"""

from .engine import CLONE, PATCH_FILE, Edit, Mutant, Patch, materialize, plan_mutants
from .errors import DroidmutError
from .operators import Category, Detection, OperatorSpec, catalog, export_catalog, operator_by_id
from .pfp import PfpConfig, PfpEntry, extract_pfp
from .project import FileKind, SourceFile, SourceModel, scan_project
from .report import MutationReport, build_report, corpus_summary, parse, render
from .verify import HookConfig, MutantOutcome, Status, classify_with_tests, verify

__version__ = "0.1.0"
