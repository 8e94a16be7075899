import os
import re
import sys
from collections import OrderedDict

sys.path.insert(0, os.path.dirname(__file__))

_CRITERION = re.compile(r"test_acceptance\.py::test_c(\d+)_")


def criterion_outcomes(reports):
    """criterion number -> (passed, [failing test names])."""
    out = OrderedDict()
    for rep in reports:
        m = _CRITERION.search(rep.nodeid)
        if not m or rep.when != "call" and not rep.failed:
            continue
        n = int(m.group(1))
        ok, bad = out.get(n, (True, []))
        if rep.failed:
            ok = False
            bad.append(rep.nodeid.split("::", 1)[1])
        out[n] = (ok, bad)
    return OrderedDict(sorted(out.items()))


def pytest_terminal_summary(terminalreporter):
    reports = [r for key in ("passed", "failed", "error")
               for r in terminalreporter.stats.get(key, []) if hasattr(r, "nodeid")]
    outcomes = criterion_outcomes(reports)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, bad) in outcomes.items():
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
        if bad:
            line += " (" + ", ".join(bad) + ")"
        terminalreporter.write_line(line)
