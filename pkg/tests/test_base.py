import pytest

from brauer_kit.base import Verification, VerificationError
from brauer_kit.columns import NAME_CLAIM, NAME_PASS


class ArithmeticCheck(Verification):
    name = "arithmetik"

    def __init__(self, wrong: bool = False):
        super().__init__()
        self.wrong = wrong

    def run(self) -> None:
        self.check("1 + 1 = 2", 1 + 1, 2)
        self.check("2 * 3 = 6", 2 * 3, 7 if self.wrong else 6)
        self.check("explizit", "links", "rechts", passed=True)
        self.finish()


def test_report_before_run():
    with pytest.raises(ValueError):
        ArithmeticCheck().report


def test_passing_verification():
    check = ArithmeticCheck()
    check.run()
    assert len(check.report) == 3
    assert check.passed
    assert check.failed.empty
    check.assert_passed()
    assert check.records()[2] == {NAME_CLAIM: "explizit", "lhs": "links", "rhs": "rechts", NAME_PASS: True}


def test_failing_verification():
    check = ArithmeticCheck(wrong=True)
    check.run()
    assert not check.passed
    assert list(check.failed[NAME_CLAIM]) == ["2 * 3 = 6"]
    with pytest.raises(VerificationError, match="2 \\* 3 = 6"):
        check.assert_passed()


def test_diagram_summary():
    check = ArithmeticCheck(wrong=True)
    check.run()
    lines = check.diagram().splitlines()
    assert lines[0] == "== arithmetik =="
    assert lines[2].startswith("[ERR]")
    assert lines[-1] == "-- 2/3 bestanden"


def test_long_values_are_shortened():
    check = ArithmeticCheck()
    check.check("lang", "x" * 500, "x" * 500)
    assert len(check.records()[0]["lhs"]) == 120


def test_report_table_is_built_on_demand():
    check = ArithmeticCheck()
    for i in range(50):
        check.check(f"{i} = {i}", i, i)
    assert check._frame is None
    report = check.report
    assert len(report) == 50
    assert check.report is report
    check.check("noch eine", 1, 1)
    assert len(check.report) == 51
