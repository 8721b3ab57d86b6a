import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("exact", max_examples=100, derandomize=True, deadline=None)
settings.load_profile("exact")

CRITERIA = {
    "test_ac1_brenke_base_equation": "AC1 Brenke base equation",
    "test_ac2_brenke_moment_closed_form": "AC2 Brenke moment closed form",
    "test_ac3_class_computations": "AC3 class computations",
    "test_ac4_riccati_equivalence": "AC4 Riccati equivalence",
    "test_ac5_corecursive_end_to_end": "AC5 co-recursive end-to-end",
    "test_ac6_associated_end_to_end": "AC6 associated end-to-end",
    "test_ac7_inverse_end_to_end": "AC7 inverse end-to-end",
    "test_ac8_structure_relation": "AC8 structure relation",
    "test_ac9_operator_algebra": "AC9 operator-algebra suite",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            name = getattr(rep, "nodeid", "").rsplit("::", 1)[-1]
            if name in CRITERIA and getattr(rep, "when", "call") in ("call", "setup"):
                if outcomes.get(name) != "FAIL":
                    outcomes[name] = "PASS" if key == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in outcomes:
            terminalreporter.write_line(f"{outcomes[name]}  {label}")
