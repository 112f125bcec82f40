"""
# Erster und zweiter Hauptsatz an Instanzen

FFT: Rang von F auf der Diagrammbasis gleich der Dimension des Raums der
invarianten Abbildungen (Orakel).
SFT: Kern von F gleich dem Ideal des benannten Erzeugers.
"""

import loguru

from brauer_kit.base import Verification
from brauer_kit.functor.space import GroupSpec, general_linear, orthogonal, orthosymplectic, symplectic
from brauer_kit.invariants.fundamental import brauer_dimension, functor_rank, verify_fft, verify_sft, verify_tensor_sft
from brauer_kit.utils import override, settings

logger = loguru.logger

FFT_CASES: tuple[tuple[GroupSpec, int], ...] = ((orthogonal(2), 6), (orthogonal(3), 6), (symplectic(2), 4))
SFT_CASES: tuple[tuple[GroupSpec, int], ...] = ((orthogonal(1), 2), (symplectic(2), 2), (general_linear(1, 0), 2))
TENSOR_CASES: tuple[tuple[GroupSpec, int, int], ...] = (
    (orthogonal(1), 2, 2),
    (symplectic(2), 2, 2),
)
# 𝒥 = 0 unterhalb von k + l = (m+1)(n+1)
ZERO_IDEAL_GROUPS: tuple[GroupSpec, ...] = (orthosymplectic(1, 2),)


class FftSuite(Verification):
    """
    FftSuite: Rang von F gegen das Orakel

    Parameter
    ---------
    - cases : tuple[(GroupSpec, int), ...], optional
        Gruppen mit der größten Knotenzahl k + l.
    - gl_rank : int, optional
        Größtes r für die Endomorphismen von GL(2|1) (Standard: 2).
    """

    name = "fft"

    def __init__(self, cases=FFT_CASES, gl_rank: int = 2):
        super().__init__()
        self.cases = tuple(cases)
        self.gl_rank = gl_rank

    def run(self) -> None:
        logger.info("Prüfe FFT-Instanzen")
        for group, max_nodes in self.cases:
            for total in range(0, max_nodes + 1, 2):
                for k in range(total + 1):
                    result = verify_fft(group, k, total - k)
                    claim = f"{group}: rang F auf B_{k}^{total - k}"
                    self.check(claim, result.rank, result.oracle)
        gl = general_linear(2, 1)
        for r in range(1, self.gl_rank + 1):
            result = verify_fft(gl, r, r)
            self.check(f"{gl}: rang F auf QSym_{r}", result.rank, result.oracle)
        o3 = orthogonal(3)
        for r in (2, 3):
            self.check(f"dim End_O(3)(V^⊗{r}) = ({2 * r - 1})!!", functor_rank(o3, r, r), brauer_dimension(r))
        self.finish()


class SftSuite(Verification):
    """
    SftSuite: Kern von F gegen Algebra- und Tensorideale

    Parameter
    ---------
    - cases : tuple[(GroupSpec, int), ...], optional
        Algebraideal-Fälle (Gruppe, r).
    - tensor_cases : tuple[(GroupSpec, int, int), ...], optional
        Tensorideal-Fälle (Gruppe, k, l).
    - zero_groups : tuple[GroupSpec, ...], optional
        Gruppen, deren Tensorideal für k + l < (m+1)(n+1) verschwinden muss.
    - budget : int, optional
        Mindestbudget für die Verdrahtungen des Tensorideals (Standard: 200000).
    """

    name = "sft"

    def __init__(
        self, cases=SFT_CASES, tensor_cases=TENSOR_CASES, zero_groups=ZERO_IDEAL_GROUPS, budget: int = 200000
    ):
        super().__init__()
        self.cases = tuple(cases)
        self.tensor_cases = tuple(tensor_cases)
        self.zero_groups = tuple(zero_groups)
        self.budget = budget

    def run(self) -> None:
        logger.info("Prüfe SFT-Instanzen")
        for group, r in self.cases:
            result = verify_sft(group, r)
            claim = f"{group}: Ker F = ⟨{result.generator}⟩ bei r={r}"
            self.check(claim, result.kernel_dim, result.ideal_dim, passed=result.passed)
        with override(max_entries=max(settings().max_entries, self.budget)):
            for group, k, ell in self.tensor_cases:
                result = verify_tensor_sft(group, k, ell)
                claim = f"{group}: Ker F = 𝒥({result.generator}) in B_{k}^{ell}"
                self.check(claim, result.kernel_dim, result.ideal_dim, passed=result.passed)
            for group in self.zero_groups:
                self._below_bound(group)
        self.finish()

    def _below_bound(self, group: GroupSpec) -> None:
        bound = (group.space.even + 1) * (group.space.odd // 2 + 1)
        for total in range(2, bound, 2):
            for k in range(total + 1):
                result = verify_tensor_sft(group, k, total - k)
                self.check(f"{group}: 𝒥({result.generator}) = 0 in B_{k}^{total - k}", result.ideal_dim, 0)
                self.check(f"{group}: Ker F = 0 in B_{k}^{total - k}", result.kernel_dim, 0)

