"""The ``ardom`` command line tool.

Subcommands either query a single invariant of one algebra (``info``,
``domdim``, ``grade``, ``torsion``, ``gldim``, ``ar-check``) or drive the
corpus-level machinery (``verify``, ``scan``).  Output is one JSON record
per line by default; ``--format text`` switches to a readable rendering.

Exit codes follow the suite runner: 0 all good, 1 a check failed, 2 bad
input, 3 a capped computation could not decide.  For plain invariant
queries "could not decide" means the reported value is only a lower bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import DEFAULT_MAX_PATH_LENGTH, PresentationError, table_from_file
from .arseq import first_failure, has_n_tf_ar_sequences
from .corpus import CorpusError, load_corpus
from .homology import (
    DEFAULT_CAP,
    domdim_algebra,
    domdim_module,
    ext_module,
    gldim,
    grade,
    pdim,
    torsion,
)
from .modules import (
    ModuleFileError,
    parse_module,
    sample_modules,
    serialize_module,
    simple,
)
from .verify import (
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_INPUT_ERROR,
    EXIT_PASS,
    SUITES,
    _min_capped,
    run_suite,
    scan_nakayama_question,
)

__all__ = ["main"]


def _parse_n_range(text: str):
    """--n accepts a single value ("2") or an inclusive range ("1..3")."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo < 1 or hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        n = int(text)
        if n < 1:
            raise ValueError
        return (n,)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a positive value or A..B range, got {text!r}"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cap",
        type=int,
        default=None,
        metavar="N",
        help="search cap for unbounded invariants "
        f"(default: $ARDOM_CAP or {DEFAULT_CAP})",
    )
    common.add_argument("--seed", type=int, default=0, help="sampling seed")
    common.add_argument(
        "--sample-size", type=int, default=64, metavar="K", help="modules per sample"
    )
    common.add_argument(
        "--format", choices=("text", "json"), default="json", help="output format"
    )
    common.add_argument(
        "--jobs", type=int, default=1, metavar="J", help="parallel corpus workers"
    )
    common.add_argument(
        "--max-path-length",
        type=int,
        default=DEFAULT_MAX_PATH_LENGTH,
        metavar="L",
        help="rewriting completion cap when reading presentations",
    )

    parser = argparse.ArgumentParser(
        prog="ardom",
        description="Exact homological invariants of bound quiver algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="describe an algebra file")
    p.add_argument("algebra", help="presentation file")
    p.set_defaults(func=_cmd_info)

    for name, blurb in (
        ("domdim", "dominant dimension (of the algebra, or of --module)"),
        ("grade", "grades of torsion submodules (or of --module)"),
        ("torsion", "torsion submodules of the simples (or of --module)"),
        ("gldim", "global dimension (with --module: its projective dimension)"),
    ):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("algebra", help="presentation file")
        target = p.add_mutually_exclusive_group()
        target.add_argument(
            "--module", metavar="FILE", help="module file over the algebra"
        )
        target.add_argument(
            "--sample-index",
            type=int,
            metavar="I",
            help="regenerate module I of the deterministic sample "
            "(honors --seed and --sample-size) and compute on it",
        )
        if name == "grade":
            p.add_argument(
                "--ext-degree",
                type=int,
                default=None,
                metavar="D",
                help="grade the degree-D Ext module of the target "
                "against the algebra instead of the target itself",
            )
        p.set_defaults(func=_cmd_invariant, invariant=name)

    p = sub.add_parser(
        "ar-check",
        parents=[common],
        help="test whether all almost split sequences from projectives are n-torsion-free",
    )
    p.add_argument("algebra", help="presentation file")
    p.add_argument("--n", type=int, required=True, help="torsion-free degree")
    p.set_defaults(func=_cmd_ar_check)

    p = sub.add_parser("verify", parents=[common], help="run check suites over a corpus")
    p.add_argument("corpus", help="corpus directory with manifest.json")
    p.add_argument(
        "--suite",
        action="append",
        choices=SUITES,
        help="suite to run (repeatable; default: all)",
    )
    p.add_argument(
        "--n",
        type=_parse_n_range,
        default=(1,),
        metavar="A..B",
        help="torsion-free degrees for the main/gendo suites",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "scan", parents=[common], help="enumerate an algebra family hunting counterexamples"
    )
    p.add_argument("family", choices=("nakayama",))
    p.add_argument("--simples", type=int, required=True, metavar="M")
    p.add_argument("--max-len", type=int, required=True, metavar="L")
    p.add_argument(
        "--question",
        action="store_true",
        help="also test the 2m-torsion-free AR property on every entry",
    )
    p.set_defaults(func=_cmd_scan)

    return parser


def _resolve_cap(args) -> int:
    if args.cap is not None:
        cap = args.cap
    else:
        env = os.environ.get("ARDOM_CAP", "")
        if env:
            try:
                cap = int(env)
            except ValueError:
                raise ValueError(f"ARDOM_CAP must be an integer, got {env!r}") from None
        else:
            cap = DEFAULT_CAP
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    return cap


def _emit(args, records, to_text):
    for r in records:
        if args.format == "json":
            print(json.dumps(r, sort_keys=True))
        else:
            print(to_text(r))


def _load(args):
    return table_from_file(args.algebra, max_path_length=args.max_path_length)


def _load_module(tbl, path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    label = os.path.splitext(os.path.basename(path))[0]
    return parse_module(text, tbl, label=label)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_info(args, cap):
    tbl = _load(args)
    q = tbl.quiver
    record = {
        "kind": "info",
        "algebra": tbl.label,
        "field": tbl.field.p,
        "dimension": tbl.dimension,
        "vertices": list(q.vertices),
        "arrows": [
            {"name": name, "source": s, "target": t} for name, s, t in q.arrows
        ],
        "flags": sorted(tbl.flags),
    }

    def text(r):
        lines = [
            f"algebra    {r['algebra']}",
            f"field      GF({r['field']})",
            f"dimension  {r['dimension']}",
            f"vertices   {' '.join(r['vertices'])}",
        ]
        for a in r["arrows"]:
            lines.append(f"arrow      {a['name']}: {a['source']} -> {a['target']}")
        if r["flags"]:
            lines.append(f"flags      {' '.join(r['flags'])}")
        return "\n".join(lines)

    _emit(args, [record], text)
    return EXIT_PASS


def _capped_exit(results) -> int:
    return (
        EXIT_INCONCLUSIVE
        if any(r["kind"] == "at_least" for r in results)
        else EXIT_PASS
    )


def _invariant_text(r):
    head = f"{r['invariant']}({r.get('module') or r['algebra']})"
    res = r["result"]
    if res["kind"] == "exact":
        val = str(res["value"])
    elif res["kind"] == "at_least":
        val = f">={res['value']}"
    else:
        val = "inf (" + res.get("certificate", "") + ")"
    return f"{head} = {val}"


def _cmd_invariant(args, cap):
    tbl = _load(args)
    name = args.invariant
    if args.module:
        mod = _load_module(tbl, args.module)
    elif args.sample_index is not None:
        sample = sample_modules(tbl, seed=args.seed, size=args.sample_size)
        if not 0 <= args.sample_index < len(sample):
            raise ValueError(
                f"--sample-index {args.sample_index} out of range "
                f"(sample has {len(sample)} modules)"
            )
        mod = sample[args.sample_index]
    else:
        mod = None

    if name == "torsion":
        targets = (
            [(mod.label, mod)]
            if mod is not None
            else [(f"S({v})", simple(tbl, i)) for i, v in enumerate(tbl.quiver.vertices)]
        )
        records = []
        for label, m in targets:
            t = torsion(m)
            records.append(
                {
                    "kind": "torsion",
                    "algebra": tbl.label,
                    "module": label,
                    "module_dims": list(m.dims),
                    "torsion_dims": list(t.dims),
                    "is_zero": t.is_zero,
                    "module_text": serialize_module(t),
                }
            )

        def text(r):
            tail = "zero" if r["is_zero"] else f"dims {r['torsion_dims']}"
            return f"t({r['module']}) over {r['algebra']}: {tail}"

        _emit(args, records, text)
        return EXIT_PASS

    if mod is not None:
        if name == "domdim":
            value = domdim_module(mod, cap=cap)
            shown = "domdim"
        elif name == "grade":
            deg = getattr(args, "ext_degree", None)
            if deg is not None:
                if deg < 1:
                    raise ValueError("--ext-degree must be >= 1")
                value = grade(ext_module(mod, deg), cap=cap)
                shown = f"grade-ext{deg}"
            else:
                value = grade(mod, cap=cap)
                shown = "grade"
        else:  # gldim over a module file means its projective dimension
            value = pdim(mod, cap=cap)
            shown = "pdim"
        record = {
            "kind": "invariant",
            "invariant": shown,
            "algebra": tbl.label,
            "module": mod.label,
            "cap": cap,
            "result": value.to_json(),
        }
        if shown == "grade":
            record["torsion_grade"] = grade(torsion(mod), cap=cap).to_json()
        _emit(args, [record], _invariant_text)
        return _capped_exit([record["result"]])

    if getattr(args, "ext_degree", None) is not None:
        raise ValueError("--ext-degree needs --module or --sample-index")

    if name == "domdim":
        value = domdim_algebra(tbl, cap=cap)
    elif name == "gldim":
        value = gldim(tbl, cap=cap)
    else:  # grade without a module: the per-simple torsion grades
        records = []
        grades = []
        for i, v in enumerate(tbl.quiver.vertices):
            g = grade(torsion(simple(tbl, i)), cap=cap)
            grades.append(g)
            records.append(
                {
                    "kind": "invariant",
                    "invariant": "grade",
                    "algebra": tbl.label,
                    "module": f"t(S({v}))",
                    "cap": cap,
                    "result": g.to_json(),
                }
            )
        records.append(
            {
                "kind": "invariant",
                "invariant": "min-grade",
                "algebra": tbl.label,
                "module": None,
                "cap": cap,
                "result": _min_capped(grades).to_json(),
            }
        )
        _emit(args, records, _invariant_text)
        return _capped_exit([r["result"] for r in records])

    record = {
        "kind": "invariant",
        "invariant": name,
        "algebra": tbl.label,
        "module": None,
        "cap": cap,
        "result": value.to_json(),
    }
    _emit(args, [record], _invariant_text)
    return _capped_exit([record["result"]])


def _cmd_ar_check(args, cap):
    tbl = _load(args)
    holds, report = has_n_tf_ar_sequences(tbl, args.n)
    record = {
        "kind": "ar-check",
        "algebra": tbl.label,
        "n": args.n,
        "holds": holds,
        "report": report,
    }
    witness = None if holds else first_failure(report)
    if witness is not None:
        record["first_failure"] = {
            "vertex": witness[0],
            "term": witness[1],
            "degree": witness[2],
        }

    def text(r):
        verdict = "hold" if r["holds"] else "FAIL"
        lines = [f"{r['n']}-torsion-free AR sequences over {r['algebra']}: {verdict}"]
        for row in r["report"]:
            if "note" in row:
                lines.append(f"  {row['note']}")
            elif "skipped" in row:
                lines.append(f"  {row['vertex']}: skipped ({row['skipped']})")
            else:
                terms = ", ".join(
                    f"{k}={'ok' if d is None else f'fails at {d}'}"
                    for k, d in row["terms"].items()
                )
                lines.append(f"  {row['vertex']}: {terms}")
        return "\n".join(lines)

    _emit(args, [record], text)
    return EXIT_PASS if holds else EXIT_FAIL


def _cmd_verify(args, cap):
    entries = load_corpus(args.corpus)
    suites = tuple(args.suite) if args.suite else SUITES
    verdicts, code = run_suite(
        entries,
        suites=suites,
        ns=args.n,
        cap=cap,
        seed=args.seed,
        sample_size=args.sample_size,
        jobs=args.jobs,
    )
    for v in verdicts:
        print(v.to_json() if args.format == "json" else v.to_text())
    return code


def _cmd_scan(args, cap):
    verdict, rows = scan_nakayama_question(
        args.simples, args.max_len, cap=cap, question=args.question
    )
    if args.format == "json":
        for row in rows:
            print(json.dumps({"kind": "scan-row", **row}, sort_keys=True))
        print(verdict.to_json())
    else:
        for row in rows:
            bits = [f"series={row['series']}", f"selfinjective={row['selfinjective']}"]
            bits.append(f"domdim={row['domdim']}")
            if "tf_ar_at_2m" in row:
                bits.append(f"tf_ar_at_2m={row['tf_ar_at_2m']}")
            if "violates" in row:
                bits.append(f"VIOLATES: {row['violates']}")
            print("  ".join(bits))
        print(verdict.to_text())
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[
        verdict.status
    ]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cap = _resolve_cap(args)
        code = args.func(args, cap)
        sys.stdout.flush()
        return code
    except BrokenPipeError:
        # the reader went away (e.g. | head); not our error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_PASS
    except (PresentationError, ModuleFileError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
