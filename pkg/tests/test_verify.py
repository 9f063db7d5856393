"""Tests for the verification suites and the Nakayama scan."""

import json
import os
from collections import Counter

import pytest

from ardom.corpus import load_corpus
from ardom.homology import CappedNat
from ardom.verify import (
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    SUITES,
    Verdict,
    _cyclic_series,
    _eq_capped,
    _ge_capped,
    _kleene_and,
    _min_capped,
    run_suite,
    scan_nakayama_question,
    verify_cor47,
    verify_gendo_cor,
    verify_gorenstein,
    verify_grade_formulas,
    verify_main_theorem,
)

CORPUS_ROOT = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


@pytest.fixture(scope="module")
def corpus():
    return load_corpus(CORPUS_ROOT)


@pytest.fixture(scope="module")
def by_id(corpus):
    return {e.entry_id: e for e in corpus}


# --- three-valued helpers ---------------------------------------------------


def test_kleene_and_truth_table():
    assert _kleene_and(True, True) is True
    assert _kleene_and(True, False) is False
    assert _kleene_and(False, None) is False  # False dominates the unknown
    assert _kleene_and(True, None) is None
    assert _kleene_and() is True


def test_ge_capped_branches():
    exact = CappedNat.exact
    at_least = CappedNat.at_least
    inf = CappedNat.infinite("test")
    assert _ge_capped(exact(3), exact(2)) is True
    assert _ge_capped(exact(1), exact(2)) is False
    assert _ge_capped(inf, exact(5)) is True
    assert _ge_capped(exact(4), inf) is False
    assert _ge_capped(at_least(9), inf) is None
    assert _ge_capped(inf, inf) is True
    assert _ge_capped(inf, at_least(7)) is True
    assert _ge_capped(exact(2), at_least(7)) is False
    assert _ge_capped(exact(8), at_least(7)) is None  # bound may exceed 8
    assert _ge_capped(at_least(3), at_least(7)) is None


def test_eq_capped_branches():
    exact = CappedNat.exact
    at_least = CappedNat.at_least
    inf = CappedNat.infinite("test")
    assert _eq_capped(exact(2), exact(2)) is True
    assert _eq_capped(exact(2), exact(3)) is False
    assert _eq_capped(inf, inf) is True
    assert _eq_capped(inf, exact(4)) is False
    assert _eq_capped(inf, at_least(4)) is None
    assert _eq_capped(exact(2), at_least(5)) is False  # bound already above
    assert _eq_capped(exact(7), at_least(5)) is None
    assert _eq_capped(at_least(1), at_least(9)) is None


def test_min_capped():
    exact = CappedNat.exact
    at_least = CappedNat.at_least
    inf = CappedNat.infinite("test")
    got = _min_capped([exact(3), exact(1), inf])
    assert got.is_exact and got.value == 1
    # an exact value only wins when every lower bound already exceeds it
    got = _min_capped([exact(3), at_least(5)])
    assert got.is_exact and got.value == 3
    got = _min_capped([exact(3), at_least(2)])
    assert got.kind == "at_least" and got.value == 2
    got = _min_capped([inf, inf])
    assert got.is_infinite
    assert "infinite" in got.certificate


def test_cyclic_series_enumeration():
    series = _cyclic_series(2, 4)
    assert series == [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]
    # (2, 4) drops a length-2 step and is not admissible; (3, 2) is the
    # rotation of (2, 3) and must not reappear
    assert (2, 4) not in series and (3, 2) not in series
    assert _cyclic_series(1, 3) == [(2,), (3,)]


# --- individual checks on corpus entries ------------------------------------


def test_main_theorem_negative_instance(by_id):
    v = verify_main_theorem(by_id["ka2"].load_table(), 1)
    assert v.status == "pass"
    assert v.detail["ar_side"] is False
    assert v.detail["gc_side"] is False
    assert v.detail["domdim"] == "1"
    assert v.detail["mueller"] == "2"
    assert v.detail["witness"] == {"vertex": "v2", "term": "V", "degree": 1}


def test_main_theorem_positive_instance(by_id):
    tbl = by_id["nak-344"].load_table()
    v2 = verify_main_theorem(tbl, 2)
    assert v2.status == "pass"
    assert v2.detail["ar_side"] is True and v2.detail["gc_side"] is True
    assert "witness" not in v2.detail
    v3 = verify_main_theorem(tbl, 3)
    assert v3.status == "pass"
    assert v3.detail["ar_side"] is False and v3.detail["gc_side"] is False
    assert v3.detail["witness"]["degree"] == 3


def test_main_theorem_across_corpus(corpus):
    verdicts, code = run_suite(corpus, suites=("main",), ns=(1, 2, 3))
    assert code == EXIT_PASS
    assert len(verdicts) == 3 * len(corpus)
    assert all(v.status == "pass" for v in verdicts)


def test_gendo_corollary(corpus, by_id):
    verdicts, code = run_suite(corpus, suites=("gendo",), ns=(1, 2, 3))
    assert code == EXIT_PASS
    # only the two algebras carrying the flag are checked
    assert sorted({v.algebra for v in verdicts}) == ["auslander-x2", "auslander-x3"]
    assert len(verdicts) == 6
    for v in verdicts:
        assert v.status == "pass"
        assert v.detail["fang_koenig"] is True
    vac = verify_gendo_cor(by_id["ka2"].load_table(), 1)
    assert vac.status == "pass"
    assert vac.detail["note"] == "vacuous: algebra not flagged gendo_symmetric"


def test_gorenstein_check_statuses(by_id):
    v = verify_gorenstein(by_id["ka2"].load_table())
    assert v.status == "pass"
    assert v.detail["gorenstein"] == "1"
    assert v.detail["ext_g_dim"] == 1
    assert v.detail["ar_side"] is False
    assert v.detail["failing_term"] == {"vertex": "v2", "term": "V", "degree": 1}

    vac = verify_gorenstein(by_id["nak-22"].load_table())
    assert vac.status == "pass"
    assert vac.detail["note"] == "vacuous: selfinjective"

    und = verify_gorenstein(by_id["nak-233"].load_table())
    assert und.status == "inconclusive"
    assert und.detail["gorenstein"] == ">=31"


def test_gorenstein_across_corpus(corpus):
    verdicts, code = run_suite(corpus, suites=("gorenstein",))
    assert code == EXIT_INCONCLUSIVE
    off = [v for v in verdicts if v.status != "pass"]
    assert [v.algebra for v in off] == ["nak-233"]
    assert off[0].status == "inconclusive"


def test_grade_formulas_details(by_id):
    kron = verify_grade_formulas(
        by_id["kronecker"].load_table(), sample_size=8, hereditary_nonlinear=True
    )
    assert kron.status == "pass"
    assert kron.detail["zero_domdim_branch"] == "minimum grade is 1 as required"

    ka2 = verify_grade_formulas(by_id["ka2"].load_table(), sample_size=8)
    assert ka2.status == "pass"
    assert ka2.detail["min_simple_grade"] == "1"
    assert "zero_domdim_branch" not in ka2.detail

    selfinj = verify_grade_formulas(by_id["nak-22"].load_table(), sample_size=8)
    assert selfinj.status == "pass"
    assert selfinj.detail["domdim"].startswith("inf")
    assert selfinj.detail["min_simple_grade"].startswith("inf")


def test_grade_formulas_across_corpus(corpus):
    verdicts, code = run_suite(corpus, suites=("grade",), sample_size=16)
    assert code == EXIT_PASS
    assert len(verdicts) == len(corpus)
    for v in verdicts:
        assert v.status == "pass"
        assert v.detail["bounds_checked"] == 5 * v.detail["sample_size"]


def test_cor47_on_auslander_entries(by_id):
    for eid, expected_witnesses in (("auslander-x2", 6), ("auslander-x3", 9)):
        v = verify_cor47(by_id[eid].load_table(), sample_size=32)
        assert v.status == "pass"
        assert v.detail["nonzero_torsion_witnesses"] == expected_witnesses
        assert v.detail["gldim"] == "2" and v.detail["domdim"] == "2"


def test_cor47_precondition_failure(by_id):
    v = verify_cor47(by_id["kronecker"].load_table())
    assert v.status == "fail"
    assert v.detail["witness"] == "precondition 2 <= gldim <= domdim does not hold"


# --- the Nakayama scan ------------------------------------------------------


def test_scan_nakayama_two_simples():
    verdict, rows = scan_nakayama_question(2, 6)
    assert verdict.status == "pass"
    assert verdict.detail["bound"] == 4
    assert verdict.detail["scanned"] == 9 == len(rows)
    assert verdict.detail["note"] == "no counterexample; the bound held on every entry"
    by_series = {tuple(r["series"]): r for r in rows}
    assert by_series[(2, 2)]["selfinjective"] is True
    assert "tf_ar_at_2m" not in by_series[(2, 2)]
    r23 = by_series[(2, 3)]
    assert r23["selfinjective"] is False
    assert r23["domdim"] == "2"
    assert r23["tf_ar_at_2m"] is False
    assert r23["first_failure"]["degree"] >= 1


def test_scan_nakayama_three_simples():
    verdict, rows = scan_nakayama_question(3, 5)
    assert verdict.status == "pass"
    assert verdict.detail["scanned"] == 12
    assert all(r["tf_ar_at_2m"] is False for r in rows if not r["selfinjective"])


def test_scan_nakayama_bound_only_mode():
    verdict, rows = scan_nakayama_question(2, 4, question=False)
    assert verdict.status == "pass"
    assert verdict.detail["scanned"] == 5
    assert all("tf_ar_at_2m" not in r for r in rows)


def test_scan_nakayama_single_simple():
    # one-vertex cyclic Nakayama algebras are truncated polynomial rings,
    # all selfinjective, so the question never even comes up
    verdict, rows = scan_nakayama_question(1, 3)
    assert verdict.status == "pass"
    assert [r["selfinjective"] for r in rows] == [True, True]


def test_scan_nakayama_validation():
    with pytest.raises(ValueError, match="at least one simple"):
        scan_nakayama_question(0, 4)
    with pytest.raises(ValueError, match="at least 2"):
        scan_nakayama_question(2, 1)


# --- suite runner -----------------------------------------------------------


def test_run_suite_validation(corpus):
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite(corpus, suites=("nope",))
    with pytest.raises(ValueError, match="empty corpus"):
        run_suite([])


def test_run_suite_all_suites_deterministic(corpus):
    kwargs = dict(suites=SUITES, ns=(1, 2, 3), sample_size=16)
    verdicts, code = run_suite(corpus, **kwargs)
    assert code == EXIT_INCONCLUSIVE  # nak-233's Gorenstein dimension is open
    assert len(verdicts) == 78
    assert Counter(v.status for v in verdicts) == {"pass": 77, "inconclusive": 1}
    again, code2 = run_suite(corpus, **kwargs)
    assert code2 == code
    assert [v.to_json() for v in verdicts] == [v.to_json() for v in again]


def test_run_suite_parallel_matches_serial(corpus):
    subset = corpus[:6]
    serial, code1 = run_suite(subset, suites=("main", "gorenstein"), ns=(1,))
    parallel, code2 = run_suite(subset, suites=("main", "gorenstein"), ns=(1,), jobs=2)
    assert code1 == code2
    assert [v.to_json() for v in serial] == [v.to_json() for v in parallel]


def test_run_suite_fail_dominates_exit_code(corpus, monkeypatch):
    import ardom.verify as verify_mod

    monkeypatch.setattr(
        verify_mod,
        "verify_gorenstein",
        lambda tbl, cap=30: Verdict("gorenstein", tbl.label, "fail", {"forced": True}),
    )
    _, code = run_suite(corpus[:2], suites=("gorenstein",))
    assert code == EXIT_FAIL


def test_verdict_serialization():
    v = Verdict("main-theorem", "ka2", "pass", {"n": 1, "zeta": "z", "alpha": "a"})
    parsed = json.loads(v.to_json())
    assert parsed == {
        "check": "main-theorem",
        "algebra": "ka2",
        "status": "pass",
        "detail": {"n": 1, "zeta": "z", "alpha": "a"},
    }
    assert v.to_json() == v.to_json()
    line = v.to_text()
    assert line.startswith("PASS") and "ka2" in line and "alpha=a" in line
    assert Verdict("x", "y", "inconclusive").to_text().startswith("????")
    assert Verdict("x", "y", "fail").to_text().startswith("FAIL")
