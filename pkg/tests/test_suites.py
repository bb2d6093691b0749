"""Wrapper-level checks for the named verification suites at reduced scale."""
import pytest

from torsion_lab.errors import InputError
from torsion_lab.suites import SUITES, run_suite


def test_all_suites_registered():
    assert sorted(SUITES) == [
        "ass-singleton", "finite-length", "gabriel-split", "injective-criterion",
        "localisation-invariance", "mccoy", "morphisms", "pruning", "type-closure",
    ]


def test_unknown_suite_rejected():
    with pytest.raises(InputError):
        run_suite("no-such-suite", {})


@pytest.mark.parametrize("name,options", [
    ("finite-length", {"max_dim": 2}),
    ("ass-singleton", {"max_order": 36}),
    ("gabriel-split", {"max_order": 24}),
    ("mccoy", {"seed": 1, "mccoy_instances": 40}),
    ("morphisms", {}),
    ("injective-criterion", {}),
    ("pruning", {"max_order": 32}),
    ("type-closure", {}),
    ("localisation-invariance", {"max_order": 16}),
])
def test_suite_passes_at_reduced_scale(name, options):
    result = run_suite(name, options)
    assert result.passed, result.failures[:3]
    assert result.instances > 0
    payload = result.as_dict()
    assert payload["suite"] == name and payload["passed"] is True


def test_suites_parallel_matches_serial():
    serial = run_suite("ass-singleton", {"max_order": 24, "threads": 1}).as_dict()
    threaded = run_suite("ass-singleton", {"max_order": 24, "threads": 3}).as_dict()
    assert serial == threaded
