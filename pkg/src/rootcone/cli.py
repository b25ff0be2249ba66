"""Command-line front end: ``rootcone <command> ...``.

Exit status: 0 on success, 1 when a check disagrees (verify-paper mismatch,
invalid witness), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import asdict
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from . import __version__
from .cache import JsonProfileStore
from .criterion import (
    CriterionError,
    GroupDatum,
    ak_bound,
    classical_bound,
    classical_dimension_check,
    e8_subgroup_report,
    sl2_lr0_member,
    sl2_property,
)
from .ell import EllError, ell_delta, ell_minus, ell_sd_delta, ell_table, set_profile_store, verify_witness
from .published import DATASET, Record, parse_label, verify_paper
from .rootsystem import RootSystemError, build, parse_types
from .weyl import WeylError, format_word, parse_word

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _system(text: str):
    try:
        return build(text)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc


def _weight(rs, text: str) -> Tuple[int, ...]:
    try:
        return parse_label(rs, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _label_list(text: str) -> List[str]:
    """``w1,w2,rho`` or, when coordinates are needed, ``1,0,1;w2``."""
    sep = ";" if ";" in text else ","
    return [t.strip() for t in text.split(sep) if t.strip()]


def _emit_json(out: TextIO, doc: dict) -> None:
    json.dump({"schemaVersion": SCHEMA_VERSION, **doc}, out, indent=2)
    out.write("\n")


def _emit_tsv(out: TextIO, header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    out.write("\t".join(header) + "\n")
    for r in rows:
        out.write("\t".join(str(x) for x in r) + "\n")


def _vec(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


# -- commands -------------------------------------------------------------------------


def cmd_roots(args, out: TextIO) -> int:
    rs = _system(args.type)
    rows = [(r.height, _vec(r.root_coords), _vec(r.omega_coords), "long" if r.is_long else "short") for r in rs.positive_roots]
    if args.format == "json":
        _emit_json(out, {"type": str(rs), "count": len(rows), "roots": [
            {"height": h, "root": list(map(int, rc.split(","))), "omega": list(map(int, oc.split(","))), "length": k}
            for h, rc, oc, k in rows
        ]})
    elif args.format == "tsv":
        _emit_tsv(out, ["height", "root", "omega", "length"], rows)
    else:
        out.write(f"{rs}: {len(rows)} positive roots\n")
        for h, rc, oc, k in rows:
            out.write(f"  hi={h:<3d} alpha=({rc})  omega=({oc})  {k}\n")
    return 0


def cmd_ell(args, out: TextIO) -> int:
    rs = _system(args.type)
    value, (j, k), res = ell_delta(rs)
    doc = {
        "type": str(rs),
        "ell": value,
        "h": f"w{j}",
        "lambda": f"w{k}",
        "witness": format_word(res.witness, rs.rank),
        "image": list(res.image),
    }
    return _report(args, out, doc, f"ell({rs}) = {value}, attained at ell^-_w{j}(w{k}) by {doc['witness']}")


def cmd_ell_sd(args, out: TextIO) -> int:
    rs = _system(args.type)
    value, h, k, res = ell_sd_delta(rs)
    doc = {
        "type": str(rs),
        "ellSd": value,
        "h": list(h),
        "lambda": f"w{k}",
        "witness": format_word(res.witness, rs.rank),
    }
    return _report(args, out, doc, f"ell_sd({rs}) = {value}, attained at h=({_vec(h)}), lambda=w{k} by {doc['witness']}")


def _report(args, out: TextIO, doc: dict, text: str) -> int:
    if args.format == "json":
        _emit_json(out, doc)
    elif args.format == "tsv":
        _emit_tsv(out, list(doc), [[_vec(v) if isinstance(v, list) else v for v in doc.values()]])
    else:
        out.write(text + "\n")
    return 0


def cmd_ell_table(args, out: TextIO) -> int:
    rs = _system(args.type)
    row_labels = _label_list(args.rows) if args.rows else [f"w{j}" for j in range(1, rs.rank + 1)] + ["rho"]
    col_labels = row_labels if args.cols in (None, "same") else _label_list(args.cols)
    rows = [(l, _weight(rs, l)) for l in row_labels]
    cols = [(l, _weight(rs, l)) for l in col_labels]
    try:
        table = ell_table(rs, rows, cols, args.depth_limit)
    except EllError as exc:
        raise UsageError(str(exc)) from exc
    cells = [[str(e) for e in r] for r in table.entries]
    if args.format == "json":
        _emit_json(out, {
            "type": table.type,
            "limit": table.limit,
            "rows": list(table.row_labels),
            "cols": list(table.col_labels),
            "entries": [[e if isinstance(e, int) else str(e) for e in r] for r in table.entries],
            "witnesses": [[format_word(w, rs.rank) if w is not None else None for w in r] for r in table.witnesses],
        })
    elif args.format == "tsv":
        _emit_tsv(out, ["lambda\\h"] + list(col_labels), [[l] + c for l, c in zip(row_labels, cells)])
    else:
        width = max(len(x) for x in list(col_labels) + list(row_labels) + [c for r in cells for c in r]) + 2
        out.write("lambda\\h".ljust(width) + "".join(c.rjust(width) for c in col_labels) + "\n")
        for l, r in zip(row_labels, cells):
            out.write(l.ljust(width) + "".join(c.rjust(width) for c in r) + "\n")
    return 0


def cmd_witness_verify(args, out: TextIO) -> int:
    rs = _system(args.type)
    h, lam = _weight(rs, args.h), _weight(rs, args.lam)
    try:
        word = parse_word(args.word, rs.rank)
    except (WeylError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    length, sign = verify_witness(rs, h, lam, word, coweight=args.coweight)
    valid = sign < 0 and (args.length is None or length == args.length)
    sign_text = {-1: "negative", 0: "zero", 1: "positive"}[sign]
    minimal = None
    if args.minimal:
        pairing = ell_minus(rs, h, lam) if not args.coweight else None
        minimal = pairing.value if pairing else None
    doc = {"type": str(rs), "word": format_word(word, rs.rank), "length": length, "pairing": sign_text, "valid": valid}
    if minimal is not None:
        doc["minimal"] = minimal
    text = f"{'valid' if valid else 'invalid'}, length {length}, pairing {sign_text}"
    if args.length is not None and length != args.length:
        text += f" (claimed length {args.length})"
    if minimal is not None:
        text += f", minimal length {minimal}"
    _report(args, out, doc, text)
    return 0 if valid else 1


def cmd_check_ak(args, out: TextIO) -> int:
    rs = _system(args.ambient)
    try:
        sub = GroupDatum.parse(args.sub, args.torus)
    except (RootSystemError, CriterionError) as exc:
        raise UsageError(str(exc)) from exc
    rep = ak_bound(rs, sub)
    return _report(args, out, rep.to_json(), f"{rs} > {sub}: bound {rep.best_bound}; {rep.summary()}")


def cmd_check_sl2(args, out: TextIO) -> int:
    try:
        factors = parse_types(args.factors)
        flags = [bool(int(x)) for x in args.flags.split(",")] if args.flags else [True] * len(factors)
        holds_a, holds_m = sl2_property(factors, flags)
        doc = {"factors": [str(f) for f in factors], "projects": flags, "holdsA": holds_a, "holdsM": holds_m}
        text = f"SL2 in {args.factors}: (A) {'holds' if holds_a else 'fails'}, (M) {'holds' if holds_m else 'fails'}"
        if args.values:
            vals = [int(x) for x in args.values.split(",")]
            flagged = [int(x) for x in args.flagged.split(",")] if args.flagged else []
            mem = sl2_lr0_member(vals, flagged)
            doc.update({"values": vals, "flagged": flagged, "member": mem.member, "violated": list(mem.violated)})
            text += f"; lambda in LR0: {'yes' if mem.member else 'no'}"
            if mem.violated:
                text += f" (violated j = {_vec(mem.violated)})"
    except (RootSystemError, CriterionError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return _report(args, out, doc, text)


def cmd_check_classical(args, out: TextIO) -> int:
    try:
        t = parse_types(args.ambient)
        if len(t) != 1:
            raise UsageError("check-classical needs a simple ambient")
        t = t[0]
        sub = GroupDatum.parse(args.sub, args.torus) if args.sub is not None else None
        pos = args.sub_pos if args.sub_pos is not None else (sub.num_pos_roots if sub else None)
        if pos is None:
            raise UsageError("give --sub or --sub-pos")
        k = classical_bound(t, pos, not args.not_self_dual)
        doc: Dict[str, object] = {"ambient": str(t), "posRoots": pos, "k": k, "holdsAk": isinstance(k, int) and k > 0}
        text = f"{t}: k = {k}" + (f", (A-{k}) guaranteed" if isinstance(k, int) and k > 0 else "")
        if sub is not None:
            dc = classical_dimension_check(t, sub)
            doc["dimensionCheck"] = asdict(dc)
            text += f"; {dc.reason}"
            if dc.applicable:
                text += f": (A) {'guaranteed' if dc.holds_a else 'not guaranteed'}, (M) {'guaranteed' if dc.holds_m else 'not guaranteed'}"
        rep = e8_subgroup_report(t) if args.e8 else None
        if rep is not None:
            doc["e8"] = rep.to_json()
            text += f"; E8 subgroup: {rep.rationale}"
    except (RootSystemError, CriterionError) as exc:
        raise UsageError(str(exc)) from exc
    return _report(args, out, doc, text)


def cmd_e8(args, out: TextIO) -> int:
    rs = build("E8")
    t0 = time.perf_counter()
    value, (j, k), res = ell_delta(rs)
    elapsed = time.perf_counter() - t0
    doc = {
        "type": "E8",
        "ell": value,
        "bounds": [7, 29],
        "withinBounds": 7 <= value <= 29,
        "h": f"w{j}",
        "lambda": f"w{k}",
        "witness": format_word(res.witness, rs.rank),
    }
    text = f"ell(E8) = {value} (bounds 7..29 {'satisfied' if doc['withinBounds'] else 'VIOLATED'}), attained at ell^-_w{j}(w{k}) by {doc['witness']}"
    if args.timing:
        sys.stderr.write(f"computed in {elapsed:.2f} s\n")
    _report(args, out, doc, text)
    return 0 if doc["withinBounds"] else 1


def _load_dataset(path: Optional[str]) -> Sequence[Record]:
    if path is None:
        return DATASET
    try:
        raw = json.loads(Path(path).read_text())
        return tuple(Record(**r) for r in raw["records"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read dataset {path}: {exc}") from exc


def cmd_verify_paper(args, out: TextIO) -> int:
    if args.dump_dataset:
        _emit_json(out, {"records": [asdict(r) for r in DATASET]})
        return 0
    dataset = _load_dataset(args.dataset)
    set_profile_store(None)
    try:
        outcomes = verify_paper(dataset, include_e8=args.include_e8)
    except (EllError, RootSystemError, WeylError, ValueError) as exc:
        raise UsageError(f"bad dataset record: {exc}") from exc
    failed = [o for o in outcomes if not o.ok]
    if args.format == "json":
        _emit_json(out, {
            "total": len(outcomes),
            "passed": len(outcomes) - len(failed),
            "results": [{"source": o.record.source, "box": o.record.box, "ok": o.ok, "got": o.got, "note": o.note} for o in outcomes],
        })
    elif args.format == "tsv":
        _emit_tsv(out, ["status", "source", "box", "got", "note"],
                  [("PASS" if o.ok else "FAIL", o.record.source, o.record.box, o.got, o.note) for o in outcomes])
    else:
        for o in outcomes:
            if not o.ok or args.verbose or o.record.kind == "e8_bounds":
                out.write(o.line() + "\n")
        out.write(f"{len(outcomes) - len(failed)}/{len(outcomes)} records passed\n")
    return 1 if failed else 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--cache-dir", help="profile cache directory (default: $ROOTCONE_CACHE_DIR or per-user cache)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the profile cache")

    p = argparse.ArgumentParser(prog="rootcone", description="Weyl-length invariants of root systems and the embedding criteria built on them.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("roots", cmd_roots, "list positive roots")
    sp.add_argument("type")
    sp = add("ell", cmd_ell, "ell_Delta with an attaining pair and witness")
    sp.add_argument("type")
    sp = add("ell-sd", cmd_ell_sd, "ell^sd_Delta with an attaining self-dual h")
    sp.add_argument("type")
    sp = add("ell-table", cmd_ell_table, "table of ell^-_h(lambda); rows lambda, columns h")
    sp.add_argument("type")
    sp.add_argument("--rows", help="labels such as w1,w2,rho (use ';' between coordinate literals)")
    sp.add_argument("--cols", help="labels, or 'same' (default)")
    sp.add_argument("--depth-limit", type=int, default=None, help="search depth; deeper boxes print as >=limit+1")
    sp = add("witness-verify", cmd_witness_verify, "check that a word sends lambda to negative pairing with h")
    sp.add_argument("type")
    sp.add_argument("--h", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--word", required=True, help="digits (rank <= 9) or comma list; leftmost letter acts last")
    sp.add_argument("--length", type=int, help="claimed length to compare against")
    sp.add_argument("--coweight", action="store_true", help="read h as a coweight (natural pairing)")
    sp.add_argument("--minimal", action="store_true", help="also compute ell^-_h(lambda)")
    sp = add("check-ak", cmd_check_ak, "codimension bound k(iota) for a reductive subgroup")
    sp.add_argument("ambient")
    sp.add_argument("--sub", default="", help="semisimple type of the subgroup, e.g. A1xA2 (empty for a torus)")
    sp.add_argument("--torus", type=int, default=0, help="rank of the central torus")
    sp = add("check-sl2", cmd_check_sl2, "exact (A)/(M) criteria and LR0 membership for SL2-subgroups")
    sp.add_argument("factors", help="simple factors of G, e.g. A1xC3")
    sp.add_argument("--flags", help="0/1 per factor: does the SL2 project nontrivially (default all 1)")
    sp.add_argument("--values", help="lambda_j(h) per summand, index 0 the complementary part")
    sp.add_argument("--flagged", help="1-based indices into --values of flagged rank-one factors")
    sp = add("check-classical", cmd_check_classical, "bound for subgroups of classical groups")
    sp.add_argument("ambient")
    sp.add_argument("--sub", help="subgroup type; enables the dimension check")
    sp.add_argument("--torus", type=int, default=0)
    sp.add_argument("--sub-pos", type=int, help="number of positive roots of the subgroup")
    sp.add_argument("--not-self-dual", action="store_true", help="natural module is not self-dual for the subgroup (type A)")
    sp.add_argument("--e8", action="store_true", help="also report on an E8-subgroup")
    sp = add("e8", cmd_e8, "exact ell for E8 (cached after the first run)")
    sp.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sp = add("verify-paper", cmd_verify_paper, "recompute every embedded published value")
    sp.add_argument("--include-e8", action="store_true", help="add the E8 bounds record (exhaustive search)")
    sp.add_argument("--dataset", help="JSON file of records instead of the embedded set")
    sp.add_argument("--dump-dataset", action="store_true", help="print the embedded records as JSON")
    sp.add_argument("--verbose", "-v", action="store_true", help="print passing records too")
    return p


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify-paper":
        set_profile_store(None if args.no_cache else JsonProfileStore(args.cache_dir))
    try:
        with warnings.catch_warnings():
            warnings.showwarning = _show_warning
            return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"rootcone {args.command}: error: {exc}\n")
        return 2
    finally:
        set_profile_store(None)


def _show_warning(message, category, filename, lineno, file=None, line=None) -> None:
    sys.stderr.write(f"rootcone: warning: {message}\n")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
