from fractions import Fraction

from analysis.family_report import ENTRIES, FamilyHints, family_report
from analysis.geometry import PointCloud, generate_udg
from constants import VERDICT_HOLDS, VERDICT_HYPOTHESIS_UNMET, VERDICT_NA, VERDICT_VIOLATED


def _by_id(report):
    return {entry.theorem_id: entry for entry in report.entries}


def test_five_cycle_without_hints(c5):
    report = family_report(c5)
    entries = _by_id(report)
    assert len(entries) == len(ENTRIES)
    assert entries["chromatic-ind"].verdict == VERDICT_HOLDS
    assert entries["chromatic-ind"].bound.value == "3/2"
    assert entries["chromatic-ind"].measured.value == "5/4"
    assert entries["chromatic-cap"].bound.value == "4/3"
    assert entries["chromatic-cap"].measured.value == "6/5"
    assert entries["sparse-ind"].bound.value == "2"
    assert entries["packing-chromatic-ind"].bound.value == "3/2"
    assert entries["packing-ind"].bound.value == "3/2"
    assert entries["degree-ind"].bound.value == "3/2"
    assert entries["capacity-sandwich"].verdict == VERDICT_HOLDS
    for name in ("udg-chromatic", "udg-ind", "udg-cap", "lambda-clique", "lambda-ind", "clique-ind",
                 "packing-sparse-ind", "planar-ind", "outerplanar-ind"):
        assert entries[name].verdict == VERDICT_HYPOTHESIS_UNMET, name


def test_quantities(c5):
    quantities = {name: value.value for name, value in family_report(c5).quantities.items()}
    assert quantities == {"alpha": "2", "omega": "2", "chi": "3", "fcc": "5/2", "fcp": "5/2",
                          "t": "0", "l": "3", "k_rest": "3"}


def test_asserted_memberships(c5):
    entries = _by_id(family_report(c5, FamilyHints(planar=True, outerplanar=True)))
    assert entries["planar-ind"].verdict == VERDICT_HOLDS
    assert entries["outerplanar-ind"].verdict == VERDICT_HOLDS


def test_wrong_chromatic_hint_is_reported(c5):
    entry = _by_id(family_report(c5, FamilyHints(chromatic=2)))["chromatic-ind"]
    assert entry.verdict == VERDICT_HYPOTHESIS_UNMET
    assert "chi = 3" in entry.note


def test_unit_disk_entries():
    cloud = PointCloud.of([(0, 0), (1, 0), (2, 0), (3, 0), (0, 5)])
    g = generate_udg(cloud, Fraction(1, 2))
    entries = _by_id(family_report(g, FamilyHints(is_udg=True, lam_squared=Fraction(1))))
    for name in ("udg-chromatic", "udg-ind", "udg-cap", "lambda-clique", "lambda-ind", "clique-ind"):
        assert entries[name].verdict == VERDICT_HOLDS, name
    assert entries["lambda-clique"].bound.value == "64"


def test_violated_entry(k4):
    entries = _by_id(family_report(k4, FamilyHints(lam_squared=Fraction(64))))
    assert entries["lambda-clique"].verdict == VERDICT_VIOLATED
    assert entries["lambda-ind"].verdict == VERDICT_HOLDS


def test_directed_graphs_are_not_applicable(directed_c3):
    report = family_report(directed_c3)
    assert len(report.entries) == len(ENTRIES)
    assert all(entry.verdict == VERDICT_NA for entry in report.entries)
    assert report.quantities == {}


def test_budget_turns_entries_into_not_applicable(c5):
    report = family_report(c5, oracle_limit=3)
    entries = _by_id(report)
    assert entries["degree-ind"].verdict == VERDICT_NA
    assert entries["capacity-sandwich"].verdict == VERDICT_NA
    assert "alpha" not in report.quantities
    assert report.quantities["fcc"].value == "5/2"
    assert any("greedy" in entry.note for entry in report.entries)
