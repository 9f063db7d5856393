"""Verification checks over a corpus of algebras.

Each check computes two independently defined sides of a statement and
reports a Verdict: pass when the sides agree, fail with a re-checkable
witness when they provably disagree, inconclusive when a capped search ran
out before deciding.  Checks never guess: a None from a capped comparison is
reported as such rather than coerced to a boolean.
"""

from __future__ import annotations

import json
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .algebra import AlgebraTable, nakayama_from_kupisch
from .arseq import first_failure, has_n_tf_ar_sequences
from .corpus import CorpusEntry, load_corpus
from .homology import (
    DEFAULT_CAP,
    CappedNat,
    domdim_algebra,
    domdim_R_via_mueller,
    ext_dim,
    ext_module,
    gldim,
    gorenstein_dim,
    grade,
    pdim,
    torsion,
)
from .modules import dual_regular, regular, sample_modules, simple

__all__ = [
    "Verdict",
    "verify_main_theorem",
    "verify_gendo_cor",
    "verify_gorenstein",
    "verify_grade_formulas",
    "verify_cor47",
    "scan_nakayama_question",
    "run_suite",
    "SUITES",
    "EXIT_PASS",
    "EXIT_FAIL",
    "EXIT_INPUT_ERROR",
    "EXIT_INCONCLUSIVE",
]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONCLUSIVE = 3


@dataclass
class Verdict:
    check: str
    algebra: str
    status: str  # "pass" | "fail" | "inconclusive"
    detail: dict = field(default_factory=dict)

    def to_json(self) -> str:
        record = OrderedDict()
        record["check"] = self.check
        record["algebra"] = self.algebra
        record["status"] = self.status
        record["detail"] = self.detail
        return json.dumps(record, sort_keys=True)

    def to_text(self) -> str:
        mark = {"pass": "PASS", "fail": "FAIL", "inconclusive": "????"}[self.status]
        bits = []
        for k, v in sorted(self.detail.items()):
            bits.append(f"{k}={v}")
        return f"{mark}  {self.check:16s} {self.algebra:14s} " + " ".join(bits)


def _kleene_and(*values):
    """Three-valued conjunction: False dominates, then None, then True."""
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _status_from_equiv(lhs, rhs) -> str:
    if lhs is None or rhs is None:
        return "inconclusive"
    return "pass" if lhs == rhs else "fail"


def _ge_capped(x: CappedNat, bound: CappedNat):
    """x >= bound as a three-valued answer."""
    if bound.is_infinite:
        if x.is_infinite:
            return True
        return False if x.is_exact else None
    if bound.is_exact:
        return x.ge(bound.value)
    # bound is only known to be >= value
    if x.is_infinite:
        return True
    if x.is_exact and x.value < bound.value:
        return False
    return None


def _eq_capped(x: CappedNat, y: CappedNat):
    if x.is_infinite or y.is_infinite:
        if x.is_infinite and y.is_infinite:
            return True
        other = y if x.is_infinite else x
        return False if other.is_exact else None
    if x.is_exact and y.is_exact:
        return x.value == y.value
    exact, bounded = (x, y) if x.is_exact else (y, x) if y.is_exact else (None, None)
    if exact is not None and bounded.value > exact.value:
        return False
    return None


def _min_capped(values) -> CappedNat:
    exacts = [v.value for v in values if v.is_exact]
    bounds = [v.value for v in values if v.kind == "at_least"]
    if not exacts and not bounds:
        return CappedNat.infinite("all components certified infinite")
    if exacts and (not bounds or min(bounds) > min(exacts)):
        return CappedNat.exact(min(exacts))
    return CappedNat.at_least(min(bounds + exacts))


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def verify_main_theorem(tbl: AlgebraTable, n: int, cap: int = DEFAULT_CAP) -> Verdict:
    """Torsion-free AR sequences against the two dominant dimensions.

    LHS: every almost split sequence starting at an indecomposable projective
    has all three terms n-torsion-free.  RHS: the algebra's dominant
    dimension is at least n and the endomorphism-ring dominant dimension
    (by the classical formula) is at least n + 2.
    """
    lhs, report = has_n_tf_ar_sequences(tbl, n)
    dd = domdim_algebra(tbl, cap=cap)
    mu = domdim_R_via_mueller(tbl, cap=cap)
    rhs = _kleene_and(dd.ge(n), mu.ge(n + 2))
    detail = {
        "n": n,
        "cap": cap,
        "ar_side": lhs,
        "domdim": str(dd),
        "mueller": str(mu),
        "gc_side": rhs if rhs is not None else "undecided",
    }
    status = _status_from_equiv(lhs, rhs)
    if status == "inconclusive":
        detail["why"] = f"a capped search was exhausted at cap {cap}"
    if not lhs:
        witness = first_failure(report)
        if witness is not None:
            detail["witness"] = {
                "vertex": witness[0],
                "term": witness[1],
                "degree": witness[2],
            }
    return Verdict("main-theorem", tbl.label, status, detail)


def verify_gendo_cor(tbl: AlgebraTable, n: int, cap: int = DEFAULT_CAP) -> Verdict:
    """The corollary for algebras flagged gendo-symmetric.

    domdim >= n + 2 must be equivalent to n-torsion-free AR sequences, and
    the dominant dimension must agree with the endomorphism-ring formula.
    """
    detail = {"n": n, "cap": cap}
    if "gendo_symmetric" not in tbl.flags:
        detail["note"] = "vacuous: algebra not flagged gendo_symmetric"
        return Verdict("gendo-corollary", tbl.label, "pass", detail)
    dd = domdim_algebra(tbl, cap=cap)
    mu = domdim_R_via_mueller(tbl, cap=cap)
    ar_side, report = has_n_tf_ar_sequences(tbl, n)
    lhs = dd.ge(n + 2)
    fk = _eq_capped(dd, mu)
    detail.update(
        {"domdim": str(dd), "mueller": str(mu), "ar_side": ar_side, "fang_koenig": fk}
    )
    if fk is False:
        detail["witness"] = "dominant dimension disagrees with the Mueller formula"
        return Verdict("gendo-corollary", tbl.label, "fail", detail)
    status = _status_from_equiv(lhs, ar_side)
    if status == "fail":
        witness = first_failure(report)
        detail["witness"] = (
            {"vertex": witness[0], "term": witness[1], "degree": witness[2]}
            if witness
            else "AR sequences n-torsion-free although domdim < n + 2"
        )
    elif status == "inconclusive" or fk is None:
        status = "inconclusive"
        detail["why"] = f"a capped search was exhausted at cap {cap}"
    return Verdict("gendo-corollary", tbl.label, status, detail)


def verify_gorenstein(tbl: AlgebraTable, cap: int = DEFAULT_CAP) -> Verdict:
    """Finite positive Gorenstein dimension forces both failure witnesses.

    For a non-selfinjective algebra of exact Gorenstein dimension g >= 1,
    Ext^g of the dual regular module against the regular one must be nonzero
    and the g-torsion-free AR property must fail.
    """
    detail = {"cap": cap}
    if "selfinjective" in tbl.flags:
        detail["note"] = "vacuous: selfinjective"
        return Verdict("gorenstein", tbl.label, "pass", detail)
    g = gorenstein_dim(tbl, cap=cap)
    detail["gorenstein"] = str(g)
    if g.is_infinite or not g.is_exact:
        detail["why"] = "Gorenstein dimension not pinned down at this cap"
        return Verdict("gorenstein", tbl.label, "inconclusive", detail)
    if g.value == 0:
        detail["note"] = "vacuous: Gorenstein dimension 0"
        return Verdict("gorenstein", tbl.label, "pass", detail)
    ext_g = ext_dim(dual_regular(tbl), regular(tbl), g.value)
    ar_fails, report = has_n_tf_ar_sequences(tbl, g.value)
    detail["ext_g_dim"] = ext_g
    detail["ar_side"] = ar_fails
    ok = ext_g != 0 and ar_fails is False
    if not ok:
        detail["witness"] = {
            "g": g.value,
            "ext_nonzero": ext_g != 0,
            "ar_property_fails": not ar_fails,
        }
    else:
        witness = first_failure(report)
        if witness is not None:
            detail["failing_term"] = {
                "vertex": witness[0],
                "term": witness[1],
                "degree": witness[2],
            }
    return Verdict("gorenstein", tbl.label, "pass" if ok else "fail", detail)


def verify_grade_formulas(
    tbl: AlgebraTable,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    sample_size: int = 64,
    hereditary_nonlinear: bool = False,
) -> Verdict:
    """Dominant dimension against grades of torsion and Ext modules.

    (a) When domdim is positive (or certified infinite), it must equal the
        minimum over simples of the grade of their torsion submodule.
    (b) grade(t(M)) >= domdim for every sampled module.
    (c) grade(Ext^i(M, A)) >= domdim for i = 1..4 on the same sample.
    (d) When domdim = 0 and the algebra is hereditary but not a linear
        A_n path algebra, the minimum in (a) must be exactly 1.
    """
    dd = domdim_algebra(tbl, cap=cap)
    detail = {"cap": cap, "seed": seed, "domdim": str(dd)}
    grades = [
        grade(torsion(simple(tbl, v)), cap=cap)
        for v in range(len(tbl.quiver.vertices))
    ]
    min_grade = _min_capped(grades)
    detail["min_simple_grade"] = str(min_grade)
    inconclusive = False

    if dd.is_infinite or (dd.is_exact and dd.value >= 1):
        agree = _eq_capped(dd, min_grade)
        if agree is False:
            detail["witness"] = {
                "formula": "domdim == min grade of simple torsion",
                "domdim": str(dd),
                "min_simple_grade": str(min_grade),
            }
            return Verdict("grade-formulas", tbl.label, "fail", detail)
        if agree is None:
            inconclusive = True
    elif dd.is_exact and dd.value == 0 and hereditary_nonlinear:
        if not (min_grade.is_exact and min_grade.value == 1):
            detail["witness"] = {
                "formula": "hereditary non-linear entries have minimum grade 1",
                "min_simple_grade": str(min_grade),
            }
            return Verdict("grade-formulas", tbl.label, "fail", detail)
        detail["zero_domdim_branch"] = "minimum grade is 1 as required"
    elif not dd.is_exact:
        inconclusive = True

    sample = sample_modules(tbl, seed=seed, size=sample_size)
    detail["sample_size"] = len(sample)
    checked = 0
    for idx, m in enumerate(sample):
        bounds = [("torsion", grade(torsion(m), cap=cap))]
        for i in range(1, 5):
            bounds.append((f"ext{i}", grade(ext_module(m, i), cap=cap)))
        for tag, g in bounds:
            ok = _ge_capped(g, dd)
            if ok is False:
                detail["witness"] = {
                    "formula": "grade lower bound",
                    "sample_index": idx,
                    "module_dims": list(m.dims),
                    "which": tag,
                    "grade": str(g),
                    "domdim": str(dd),
                }
                return Verdict("grade-formulas", tbl.label, "fail", detail)
            if ok is None:
                inconclusive = True
            checked += 1
    detail["bounds_checked"] = checked
    if inconclusive:
        detail["why"] = f"a capped search was exhausted at cap {cap}"
        return Verdict("grade-formulas", tbl.label, "inconclusive", detail)
    return Verdict("grade-formulas", tbl.label, "pass", detail)


def verify_cor47(
    tbl: AlgebraTable,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    sample_size: int = 64,
) -> Verdict:
    """On an algebra with 2 <= gldim <= domdim, nonzero torsion has pdim gldim.

    The precondition is part of the check: an entry marked for this
    corollary whose dimensions do not satisfy it fails outright.
    """
    gl = gldim(tbl, cap=cap)
    dd = domdim_algebra(tbl, cap=cap)
    detail = {"cap": cap, "seed": seed, "gldim": str(gl), "domdim": str(dd)}
    if not (gl.is_exact and dd.is_exact):
        detail["why"] = "global or dominant dimension not exact at this cap"
        return Verdict("torsion-pdim", tbl.label, "inconclusive", detail)
    if gl.value < 2 or gl.value > dd.value:
        detail["witness"] = "precondition 2 <= gldim <= domdim does not hold"
        return Verdict("torsion-pdim", tbl.label, "fail", detail)
    sample = sample_modules(tbl, seed=seed, size=sample_size)
    nonzero = 0
    for idx, m in enumerate(sample):
        t = torsion(m)
        if t.is_zero:
            continue
        nonzero += 1
        pd = pdim(t, cap=cap)
        if not (pd.is_exact and pd.value == gl.value):
            detail["witness"] = {
                "sample_index": idx,
                "module_dims": list(m.dims),
                "torsion_dims": list(t.dims),
                "pdim": str(pd),
                "expected": gl.value,
            }
            return Verdict("torsion-pdim", tbl.label, "fail", detail)
    detail["nonzero_torsion_witnesses"] = nonzero
    if nonzero == 0:
        detail["note"] = "no nonzero torsion found in sample"
    return Verdict("torsion-pdim", tbl.label, "pass", detail)


# ---------------------------------------------------------------------------
# the Nakayama scan
# ---------------------------------------------------------------------------


def _cyclic_series(m: int, max_len: int):
    """Admissible cyclic Kupisch series with m entries, up to rotation."""
    seen = set()
    out = []
    for c in product(range(2, max_len + 1), repeat=m):
        if any(c[(i + 1) % m] < c[i] - 1 for i in range(m)):
            continue
        canon = min(tuple(c[i:] + c[:i]) for i in range(m))
        if canon in seen:
            continue
        seen.add(canon)
        out.append(canon)
    out.sort()
    return out


def scan_nakayama_question(
    m: int, max_len: int, cap: int = DEFAULT_CAP, question: bool = True
):
    """Scan cyclic Nakayama algebras with m simples for a counterexample.

    A counterexample would be a non-selfinjective entry whose AR sequences
    are all 2m-torsion-free.  Alongside, every enumerated algebra must obey
    the bound: dominant dimension >= 2m forces selfinjectivity.  Returns
    (verdict, rows) with one row per algebra in deterministic order.
    """
    if m < 1:
        raise ValueError("need at least one simple")
    if max_len < 2:
        raise ValueError("max length must be at least 2")
    rows = []
    status = "pass"
    detail = {"simples": m, "max_len": max_len, "cap": cap, "bound": 2 * m}
    for series in _cyclic_series(m, max_len):
        tbl = nakayama_from_kupisch(list(series), cyclic=True)
        selfinj = "selfinjective" in tbl.flags
        dd = domdim_algebra(tbl, cap=cap)
        row = {
            "series": list(series),
            "selfinjective": selfinj,
            "domdim": str(dd),
        }
        big = dd.ge(2 * m)
        if big is None:
            status = "inconclusive"
            row["note"] = "dominant dimension undecided at this cap"
        elif big and not selfinj:
            status = "fail"
            row["violates"] = "domdim >= 2m on a non-selfinjective algebra"
            detail["witness"] = row
        if question and not selfinj:
            tf, report = has_n_tf_ar_sequences(tbl, 2 * m)
            row["tf_ar_at_2m"] = tf
            if tf:
                status = "fail"
                row["violates"] = "2m-torsion-free AR sequences without selfinjectivity"
                detail["witness"] = row
            else:
                witness = first_failure(report)
                if witness is not None:
                    row["first_failure"] = {
                        "vertex": witness[0],
                        "term": witness[1],
                        "degree": witness[2],
                    }
        rows.append(row)
    detail["scanned"] = len(rows)
    if status == "pass":
        detail["note"] = "no counterexample; the bound held on every entry"
    return Verdict("nakayama-scan", f"cyclic-nakayama-m{m}", status, detail), rows


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

SUITES = ("main", "gendo", "gorenstein", "grade", "cor47")


def _entry_verdicts(entry: CorpusEntry, suites, ns, cap, seed, sample_size):
    tbl = entry.load_table()
    out = []
    for suite in suites:
        if suite == "main":
            for n in ns:
                out.append(verify_main_theorem(tbl, n, cap=cap))
        elif suite == "gendo":
            if "gendo_symmetric" in tbl.flags:
                for n in ns:
                    out.append(verify_gendo_cor(tbl, n, cap=cap))
        elif suite == "gorenstein":
            out.append(verify_gorenstein(tbl, cap=cap))
        elif suite == "grade":
            out.append(
                verify_grade_formulas(
                    tbl,
                    cap=cap,
                    seed=seed,
                    sample_size=sample_size,
                    hereditary_nonlinear=entry.is_classified("hereditary")
                    and not entry.is_classified("linear-an"),
                )
            )
        elif suite == "cor47":
            if entry.is_classified("auslander"):
                out.append(verify_cor47(tbl, cap=cap, seed=seed, sample_size=sample_size))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return out


def _entry_worker(args):
    root, entry_id, suites, ns, cap, seed, sample_size = args
    entries = {e.entry_id: e for e in load_corpus(root)}
    verdicts = _entry_verdicts(entries[entry_id], suites, ns, cap, seed, sample_size)
    return [(v.check, v.algebra, v.status, v.detail) for v in verdicts]


def run_suite(
    entries,
    suites=("main",),
    ns=(1,),
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    sample_size: int = 64,
    jobs: int = 1,
):
    """Run the selected suites over corpus entries, in manifest order.

    Returns (verdicts, exit_code).  Workers only parallelize independent
    entries; the merged report order never depends on the job count.
    """
    for suite in suites:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
    entries = list(entries)
    if not entries:
        raise ValueError("empty corpus")
    verdicts = []
    if jobs > 1:
        payload = [
            (e.root, e.entry_id, tuple(suites), tuple(ns), cap, seed, sample_size)
            for e in entries
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_entry_worker, payload):
                verdicts.extend(Verdict(*row) for row in chunk)
    else:
        for entry in entries:
            verdicts.extend(
                _entry_verdicts(entry, suites, ns, cap, seed, sample_size)
            )
    if any(v.status == "fail" for v in verdicts):
        code = EXIT_FAIL
    elif any(v.status == "inconclusive" for v in verdicts):
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_PASS
    return verdicts, code
