"""
# Prüfsuiten

Jede Suite ist eine `Verification` und deckt einen Teil der Abnahmekriterien ab:

| Name                | Inhalt                                                        |
|---------------------|---------------------------------------------------------------|
| `presentation`      | Relationen der Brauer-Kategorie/-Algebra und ihre */♯-Bilder  |
| `words`             | Umschreibefolgen zwischen Wörtern desselben Diagramms         |
| `sigma-lemmas`      | Identitäten der Symmetrisierer Σ_ε(r)                          |
| `functor-relations` | Relationen der Erzeugerbilder unter F (OSp und GL)            |
| `enhanced`          | Δ_m, erzwungene Parameter, Vollständigkeit für SO(m)          |
| `phi`               | Φ(n): Summe aller Diagramme, Φ², Kern von F, Spursummen       |
| `ep`                | E_p: Formel, Annullierung, Verflechtung                       |
| `fft`               | Rang von F gegen das Orakel                                   |
| `sft`               | Kern von F gegen Algebra- und Tensorideale                    |
| `oriented`          | Orientierte Präsentation, Walled-Brauer, Transport            |
| `young`             | Quasi-Idempotenz von e(m, l)                                  |
| `all`               | alle obigen nacheinander                                      |
"""

import loguru

from brauer_kit.base import Verification
from brauer_kit.columns import NAME_CLAIM, NAME_LHS, NAME_PASS, NAME_RHS
from brauer_kit.suites.enhanced import EnhancedSuite
from brauer_kit.suites.ep import EpSuite
from brauer_kit.suites.functor_relations import FunctorRelationsSuite
from brauer_kit.suites.fundamental import FftSuite, SftSuite
from brauer_kit.suites.oriented import OrientedSuite
from brauer_kit.suites.phi import PhiSuite
from brauer_kit.suites.presentation import PresentationSuite
from brauer_kit.suites.sigma import SigmaSuite
from brauer_kit.suites.words import WordsSuite
from brauer_kit.suites.young import YoungSuite

logger = loguru.logger

SUITES: dict[str, type[Verification]] = {
    suite.name: suite
    for suite in (
        PresentationSuite,
        WordsSuite,
        SigmaSuite,
        FunctorRelationsSuite,
        EnhancedSuite,
        PhiSuite,
        EpSuite,
        FftSuite,
        SftSuite,
        OrientedSuite,
        YoungSuite,
    )
}


class AllSuites(Verification):
    """Führt alle registrierten Suiten aus; jede Zeile trägt den Namen ihrer Suite."""

    name = "all"

    def run(self) -> None:
        for name, suite_class in SUITES.items():
            suite = suite_class()
            suite.run()
            for row in suite.records():
                self.check(f"{name}: {row[NAME_CLAIM]}", row[NAME_LHS], row[NAME_RHS], passed=row[NAME_PASS])
        self.finish()


def build_suite(name: str) -> Verification:
    if name == AllSuites.name:
        return AllSuites()
    if name not in SUITES:
        raise ValueError(f"Unbekannte Suite {name!r}. Verfügbar: {', '.join(suite_names())}")
    return SUITES[name]()


def suite_names() -> list[str]:
    return list(SUITES) + [AllSuites.name]


def run_suite(name: str) -> Verification:
    suite = build_suite(name)
    logger.info(f"Starte Suite {name}")
    suite.run()
    return suite
