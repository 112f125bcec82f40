import pytest

from brauer_kit.columns import NAME_CLAIM
from brauer_kit.functor.space import SuperSpace, orthogonal
from brauer_kit.suites import AllSuites, SUITES, build_suite, suite_names
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


def test_suite_registry():
    names = suite_names()
    assert names[-1] == "all"
    assert len(names) == len(SUITES) + 1
    assert isinstance(build_suite("all"), AllSuites)
    assert isinstance(build_suite("ep"), EpSuite)
    with pytest.raises(ValueError):
        build_suite("unbekannt")


@pytest.mark.parametrize(
    "suite",
    [
        PresentationSuite(max_rank=3),
        WordsSuite(max_nodes=4),
        SigmaSuite(max_rank=3, max_cups=1),
        EpSuite(max_m=1),
        PhiSuite(max_n=1, functor_n=1, trace_n=2, ideal_n=1),
        YoungSuite(shapes=((1, 0), (1, 1)), gl_shapes=((1, 0),), osp_shapes=((1, 0),)),
        OrientedSuite(samples=10, max_walled=2, spaces=((1, 0),)),
        FunctorRelationsSuite(osp_spaces=(SuperSpace(1, 0), SuperSpace(2, 2)), gl_spaces=(SuperSpace(1, 1),)),
        EnhancedSuite(ranks=(2,), max_nodes=2),
        FftSuite(cases=((orthogonal(2), 2),), gl_rank=1),
        SftSuite(cases=((orthogonal(1), 2),), tensor_cases=((orthogonal(1), 2, 2),)),
    ],
    ids=lambda suite: suite.name,
)
def test_small_suites_pass(suite):
    suite.run()
    assert len(suite.report) > 0
    suite.assert_passed()


def test_words_suite_covers_eight_nodes_by_default():
    assert WordsSuite().max_nodes == 8


def test_sft_suite_checks_vanishing_ideal_below_bound():
    suite = SftSuite(cases=(), tensor_cases=())
    suite.run()
    suite.assert_passed()
    claims = list(suite.report[NAME_CLAIM])
    for k, ell in ((0, 2), (1, 1), (2, 0)):
        assert f"OSp(1|2): 𝒥(e(1,2)) = 0 in B_{k}^{ell}" in claims
    assert not any("B_2^2" in claim for claim in claims)
