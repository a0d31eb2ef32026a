from __future__ import annotations

import json
from fractions import Fraction
from math import comb

from actiongraphs.axioms import GateReport
from actiongraphs.builders import PathRules, build_by_rules
from actiongraphs.inference import certify_infeasible, infer_rules
from actiongraphs.sequences import SequenceSpec, sequence_values


def test_internal_triangles_contradiction() -> None:
    report = infer_rules(SequenceSpec("internal_triangles"), 3)
    assert report.sequence == [1, 2, 14, 72]
    assert report.rules.values == (2, 5)
    assert report.outcome == "contradiction"
    assert (report.step, report.forced, report.available) == (3, 98, 72)
    last = report.trace[-1]
    assert [c.added for c in last.contributions] == [28, 20, 50]
    # trivial paths at the 14 label-2 vertices, then length-1 paths from
    # label 1 and from the root
    assert [(c.length, c.source_label, c.paths) for c in last.contributions] == [
        (0, 2, 14),
        (1, 1, 4),
        (1, 0, 10),
    ]
    assert report.describe() == "contradiction at step 3: forced=98 available=72"


def test_explicit_list_gives_same_verdict() -> None:
    report = infer_rules([1, 2, 14, 72, 330], 4)
    assert report.outcome == "contradiction"
    assert report.step == 3


def test_catalan_rules_are_all_one() -> None:
    report = infer_rules(SequenceSpec("catalan"), 10, integral_rules=True)
    assert report.consistent
    assert report.rules.values == (1,) * 10


def test_fuss2_rules() -> None:
    report = infer_rules(SequenceSpec("fuss", 2), 8, integral_rules=True)
    assert report.consistent
    assert list(report.rules.values) == [comb(length + 1, length) for length in range(8)]
    report3 = infer_rules(SequenceSpec("fuss", 3), 7)
    assert list(report3.rules.values) == [comb(length + 2, length) for length in range(7)]


def test_super_rules_fractional_but_growth_integral() -> None:
    report = infer_rules(SequenceSpec("super_catalan_row", 0), 11)
    assert report.consistent
    assert list(report.rules.values) == [Fraction(2, 2**length) for length in range(11)]
    assert report.rules == PathRules.super_catalan(10)
    strict = infer_rules(SequenceSpec("super_catalan_row", 0), 5, integral_rules=True)
    assert strict.outcome == "non-integral"
    assert strict.value == Fraction(1, 2)


def test_soundness_rebuild_reproduces_prefix() -> None:
    for spec, n in [
        (SequenceSpec("catalan"), 9),
        (SequenceSpec("fuss", 2), 7),
        (SequenceSpec("super_catalan_row", 0), 9),
        (SequenceSpec("triangle_diagonal", 1), 8),
    ]:
        report = infer_rules(spec, n)
        assert report.consistent
        fam = build_by_rules(report.rules, n)
        assert fam.new_counts() == sequence_values(spec, n + 1)
        assert fam.graphs == report.graphs


def test_second_diagonal_rational_only() -> None:
    spec = SequenceSpec("triangle_diagonal", 2)
    assert infer_rules(spec, 8).consistent
    strict = infer_rules(spec, 8, integral_rules=True)
    assert strict.outcome == "non-integral"
    assert strict.step == 3
    assert strict.value == Fraction(1, 9)


def test_gate_outcome_for_bad_start() -> None:
    report = infer_rules([2, 5, 9], 2)
    assert report.outcome == "gate"
    assert report.gate.violated == "lemma_s0"
    assert not report.consistent


def test_negative_and_zero_open_paths() -> None:
    report = infer_rules([1, 1, 0], 2)
    assert report.outcome == "contradiction"
    assert report.step == 2
    # r(0) = 0 leaves no vertex with label 1, so s_2 cannot be absorbed
    report = infer_rules([1, 0, 3], 2)
    assert report.outcome == "contradiction"
    assert report.trace[-1].open_paths == 0
    assert infer_rules([1, 0, 0, 0], 3).consistent


def test_certify() -> None:
    cert = certify_infeasible(SequenceSpec("triangle_row", 4), 4)
    assert isinstance(cert, GateReport)
    assert cert.violated == "lemma_square"
    assert (cert.witness["s1_squared"], cert.witness["s2"]) == (16, 9)
    cert = certify_infeasible(SequenceSpec("internal_triangles"), 5)
    assert cert.outcome == "contradiction"
    assert cert.forced == 98
    cert = certify_infeasible(SequenceSpec("super_catalan_row", 0), 8)
    assert cert.consistent
    assert cert.rules == PathRules.super_catalan(7)


def test_determinism_and_json() -> None:
    a = json.dumps(infer_rules(SequenceSpec("internal_triangles"), 5).to_json(), sort_keys=True)
    b = json.dumps(infer_rules(SequenceSpec("internal_triangles"), 5).to_json(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert data["outcome"] == "contradiction"
    assert data["forced"] == "98"
    assert [c["added"] for c in data["trace"][-1]["contributions"]] == ["28", "20", "50"]
