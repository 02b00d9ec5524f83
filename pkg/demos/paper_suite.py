"""
The SL_3 classification table
=============================

Runs the six built-in cases and compares each label with the expected one,
as the ``pglcent paper`` command does.
"""

from pglcent.report import emit_suite, run_paper_suite

result = run_paper_suite(seed=0)
print(emit_suite(result), end="")

# a deliberately wrong expectation shows up as a mismatch
bad = run_paper_suite(seed=0, expected={"steinberg3": "Z/3Z"})
print("with a wrong expectation, all match:", bad.all_match)
