from abc import ABC, abstractmethod
from typing import Any

import loguru
import pandas as pd

from brauer_kit.columns import NAME_CLAIM, NAME_LHS, NAME_PASS, NAME_RHS

logger = loguru.logger


class BudgetError(ValueError):
    """Die Matrix überschreitet das konfigurierte Eintragsbudget."""


class RewriteStall(RuntimeError):
    """Die Umschreibestrategie ist steckengeblieben (ein Fehler, kein Nutzerproblem)."""


class VerificationError(AssertionError):
    """Mindestens eine geprüfte Identität ist verletzt."""


class Verification(ABC):
    """
    Verification: Basisklasse aller Prüfsuiten

    Eine Suite sammelt exakte Identitäten als Zeilen eines DataFrames.
    Jede Zeile enthält die Behauptung, die beiden ausgewerteten Seiten
    und das Ergebnis des Vergleichs.

    Methoden
    -------
    - run()
        Führt alle Prüfungen aus und füllt `data`.
    - check(claim, lhs, rhs)
        Vergleicht zwei Werte exakt und protokolliert das Ergebnis.
    - diagram()
        Liefert eine ASCII-Zusammenfassung der Ergebnisse.
    """

    name = "verification"

    def __init__(self):
        self._rows: list[dict[str, Any]] = []
        self._frame: pd.DataFrame | None = None
        self._started = False

    @abstractmethod
    def run(self) -> None: ...

    @property
    def data(self) -> pd.DataFrame:
        """Ergebnistabelle; wird nur nach neuen Zeilen neu aufgebaut."""
        if self._frame is None or len(self._frame) != len(self._rows):
            self._frame = pd.DataFrame(self._rows, columns=[NAME_CLAIM, NAME_LHS, NAME_RHS, NAME_PASS])
        return self._frame

    def check(self, claim: str, lhs: Any, rhs: Any, passed: bool | None = None) -> bool:
        if passed is None:
            passed = lhs == rhs
        passed = bool(passed)
        self._started = True
        self._rows.append(
            {NAME_CLAIM: claim, NAME_LHS: _short(lhs), NAME_RHS: _short(rhs), NAME_PASS: passed}
        )
        if not passed:
            logger.warning(f"Identität verletzt: {claim}")
        return passed

    def finish(self) -> None:
        self._started = True
        total = len(self.data)
        ok = int(self.data[NAME_PASS].sum()) if total else 0
        logger.success(f"{self.name} bestanden: {ok}/{total}")

    @property
    def report(self) -> pd.DataFrame:
        if not self._started:
            raise ValueError("Die Verifikation wurde noch nicht gestartet!")
        return self.data

    @property
    def failed(self) -> pd.DataFrame:
        report = self.report
        return report[~report[NAME_PASS].astype(bool)]

    @property
    def passed(self) -> bool:
        return len(self.failed) == 0

    def assert_passed(self) -> None:
        if not self.passed:
            claims = ", ".join(self.failed[NAME_CLAIM])
            raise VerificationError(f"Verletzte Identitäten in {self.name}: {claims}")

    def records(self) -> list[dict[str, Any]]:
        return [
            {
                NAME_CLAIM: row[NAME_CLAIM],
                NAME_LHS: row[NAME_LHS],
                NAME_RHS: row[NAME_RHS],
                NAME_PASS: bool(row[NAME_PASS]),
            }
            for row in self.report.to_dict(orient="records")
        ]

    def diagram(self) -> str:
        report = self.report
        lines = [f"== {self.name} =="]
        for row in report.to_dict(orient="records"):
            mark = "ok " if row[NAME_PASS] else "ERR"
            lines.append(f"[{mark}] {row[NAME_CLAIM]}")
        lines.append(f"-- {int(report[NAME_PASS].sum())}/{len(report)} bestanden")
        return "\n".join(lines)


def _short(value: Any, limit: int = 120) -> str:
    text = str(value)
    if len(text) > limit:
        return text[: limit - 3] + "..."
    return text
