"""Command-line front end.

Every command writes JSON lines to stdout and a short human summary to stderr.
The exit status is 0 when every verification the command ran passed, 1 when
one failed and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional

from . import bs as _bs
from .cayley import BallBudgetExceeded, F_GROUP, ball, dump_ball, export_dot
from .cells import cell_geometry, cell_map, verify_boundary, CollapseError
from .combing import comb_edge, tame_record, trace
from .edges import EdgeId, bad_case, edge_stats, element_literal, goodness_certificate, is_good
from .nested_traversal import check_prefix_monotone, eta
from .tree_pair import (
    InvalidNormalFormError,
    eval_word,
    to_inf_normal_form,
    to_text,
    word_length,
)
from .words import WordSyntaxError, format_word, parse_word

# rough resident size of one stored ball element (key, element, parent, distance)
BYTES_PER_ELEMENT = {"F": 1200, "BS": 400}


class UsageError(Exception):
    pass


def _emit(records: Iterable[dict], out) -> None:
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text + "\n")


def _element(text: str):
    try:
        return eval_word(parse_word(text))
    except WordSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _max_elements(group: str, budget_mb: Optional[float]) -> Optional[int]:
    if budget_mb is None:
        return None
    if budget_mb <= 0:
        raise UsageError("--budget-mb must be positive")
    return int(budget_mb * 2**20 / BYTES_PER_ELEMENT[group])


def _f_ball(radius: int, budget_mb):
    if radius < 0:
        raise UsageError("--radius must be nonnegative")
    return ball(F_GROUP, radius, _max_elements("F", budget_mb))


# ---------------------------------------------------------------------------
# F commands


def cmd_f_eval(args, out) -> int:
    w = _element(args.word)
    _emit(
        [
            {
                "element": element_literal(w),
                "normal_form": str(to_inf_normal_form(w)),
                "neg": to_text(w.neg),
                "pos": to_text(w.pos),
                "N": w.n,
            }
        ],
        out,
    )
    return 0


def cmd_f_nf(args, out) -> int:
    w = _element(args.word)
    _emit([{"input": args.word, "normal_form": str(to_inf_normal_form(w))}], out)
    return 0


def cmd_f_len(args, out) -> int:
    w = _element(args.word)
    _emit([{"element": element_literal(w), "length": word_length(w)}], out)
    return 0


def cmd_f_eta(args, out) -> int:
    w = _element(args.word)
    y = eta(w)
    ok = eval_word(y) == w and check_prefix_monotone(y) is None
    _emit([{"element": element_literal(w), "eta": format_word(y), "length": len(y), "pass": ok}], out)
    return 0 if ok else 1


def cmd_f_classify(args, out) -> int:
    e = EdgeId(_element(args.word), args.gen)
    good = is_good(e)
    cert = goodness_certificate(e)
    case = bad_case(e)
    rec = {"edge": str(e), "good": good, "certificate": cert, "bad_case": case}
    rec.update(edge_stats(e.base).as_record())
    ok = (cert is None or good) and (good or case is not None)
    rec["pass"] = ok
    _emit([rec], out)
    return 0 if ok else 1


def cmd_f_cell(args, out) -> int:
    e = EdgeId(_element(args.word), 1)
    if is_good(e):
        _emit([{"edge": str(e), "good": True, "cell": None, "pass": True}], out)
        _note(f"{e} is good; no cell is attached")
        return 0
    try:
        c = cell_map(e)
    except CollapseError as exc:
        _emit([{"edge": str(e), "good": False, "cell": None, "pass": False, "error": str(exc)}], out)
        return 1
    geom = cell_geometry(c)
    rep = verify_boundary(e)
    _emit(
        [
            {
                "edge": str(e),
                "good": False,
                "cell": str(c),
                "label": c.label,
                "boundary_word": format_word(geom.boundary_word),
                "z_l": element_literal(geom.z_l),
                "z_b": element_literal(geom.z_b),
                "z_r": element_literal(geom.z_r),
                "pass": rep.ok,
                "failures": list(rep.failures),
            }
        ],
        out,
    )
    for line in rep.lines():
        _note(line)
    return 0 if rep.ok else 1


def cmd_f_comb(args, out) -> int:
    e = EdgeId(_element(args.word), args.gen)
    d = comb_edge(e)
    tr = trace(e)
    rec = {
        "edge": str(e),
        "good": d.good,
        "direction": d.direction,
        "cell": None if d.good else str(d.cell),
        "depth": d.depth(),
        "cells_used": len(d.cells()),
        "trace": [str(p) for p, _ in tr],
        "nmax": [n for _, n in tr],
    }
    ok = all(a <= b for a, b in zip(rec["nmax"], rec["nmax"][1:]))
    rec["pass"] = ok
    _emit([rec], out)
    return 0 if ok else 1


def cmd_f_tame_scan(args, out) -> int:
    b = _f_ball(args.radius, args.budget_mb)
    recs = []
    for w in b.iter_elements():
        for gen in (0, 1):
            recs.append(tame_record(EdgeId(w, gen), args.slope, args.intercept))
    _emit(recs, out)
    bad = sum(not r["pass"] for r in recs)
    _note(f"{len(recs)} edges, {sum(not r['good'] for r in recs)} bad, {bad} failing")
    return 0 if bad == 0 else 1


# ---------------------------------------------------------------------------
# BS(1,p) commands


def _bs_element(text: str, p: int):
    try:
        return _bs.bs_eval_word(_bs.parse_bs_word(text), p)
    except _bs.BsSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _check_bs_p(p: int) -> None:
    if p < 3:
        raise UsageError("-p must be at least 3")


def cmd_bs_geo(args, out) -> int:
    _check_bs_p(args.p)
    g = _bs_element(args.word, args.p)
    gf = _bs.geodesic_word(g, args.p)
    path = _bs.dhu_path(g)
    ok = _bs.bs_eval_word(gf.word, args.p) == g and gf.meets_digit_bounds()
    _emit(
        [
            {
                "p": args.p,
                "triple": [g.m, g.j, g.s],
                "normal_form": str(g),
                "geodesic": _bs.format_bs_word(gf.word),
                "form": gf.form,
                "digits": list(gf.digits),
                "length": gf.length,
                "dhu": {"down": path.down, "horizontal": path.horizontal, "up": path.up},
                "nadir": list(_bs.nadir(g)),
                "pass": ok,
            }
        ],
        out,
    )
    return 0 if ok else 1


def cmd_bs_tame_scan(args, out) -> int:
    _check_bs_p(args.p)
    if args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    b = ball(_bs.bs_group(args.p), args.radius, _max_elements("BS", args.budget_mb))
    recs = _bs.check_tame_bs(
        args.p,
        list(b.iter_elements()),
        slope=args.slope,
        intercept=args.intercept,
        seed=args.seed,
        n_random=args.samples,
    )
    _emit(recs, out)
    bad = sum(not r["pass"] for r in recs)
    _note(f"{len(recs)} edges, {sum(r['samples'] for r in recs)} sampled traces, {bad} failing")
    return 0 if bad == 0 else 1


def cmd_bs_coeff1(args, out) -> int:
    try:
        rec = _bs.coeff1_witness(args.p, args.C)
    except _bs.BsDomainError as exc:
        raise UsageError(str(exc)) from None
    ok = (
        rec["loop_is_closed"]
        and rec["v_evaluates_to_g"]
        and rec["len_v"] == rec["formula_len"] == rec["geodesic_length"]
        and (rec["exceeds_bound"] or args.C <= 4)
    )
    rec["pass"] = ok
    _emit([rec], out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# balls


def _group_ball(args):
    if args.radius < 0:
        raise UsageError("--radius must be nonnegative")
    if args.group == "F":
        return _f_ball(args.radius, args.budget_mb)
    _check_bs_p(args.p)
    return ball(_bs.bs_group(args.p), args.radius, _max_elements("BS", args.budget_mb))


def cmd_ball(args, out) -> int:
    b = _group_ball(args)
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(dump_ball(b))
    _emit([{"group": b.group.name, "radius": b.radius, "size": len(b), "sphere_sizes": b.sphere_sizes()}], out)
    return 0


def cmd_dot(args, out) -> int:
    out.write(export_dot(_group_ball(args)))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tamecomb", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled censuses")
    common.add_argument("--budget-mb", type=float, default=None, help="memory budget for balls")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def word_cmd(name, func, help_text, gen=False):
        sp = add(name, help=help_text)
        sp.add_argument("word")
        if gen:
            sp.add_argument("--gen", type=int, choices=(0, 1), default=1)
        sp.set_defaults(func=func)
        return sp

    word_cmd("f-eval", cmd_f_eval, "evaluate a word in F to its tree pair")
    word_cmd("f-nf", cmd_f_nf, "infinite normal form")
    word_cmd("f-len", cmd_f_len, "word length over {x0, x1}")
    word_cmd("f-eta", cmd_f_eta, "nested traversal normal form")
    word_cmd("f-classify", cmd_f_classify, "good/bad classification of an edge", gen=True)
    word_cmd("f-cell", cmd_f_cell, "2-cell attached to a bad e1 edge")
    word_cmd("f-comb", cmd_f_comb, "combing diagram and trace of an edge", gen=True)

    sp = add("f-tame-scan", help="tameness of every edge based in a ball")
    sp.add_argument("-r", "--radius", type=int, default=4)
    sp.add_argument("--slope", default="4")
    sp.add_argument("--intercept", default="45")
    sp.set_defaults(func=cmd_f_tame_scan)

    sp = add("bs-geo", help="geodesic form in BS(1,p)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("word")
    sp.set_defaults(func=cmd_bs_geo)

    sp = add("bs-tame-scan", help="tameness of sampled DHU traces")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-r", "--radius", type=int, default=4)
    sp.add_argument("--slope", default=None)
    sp.add_argument("--intercept", default=None)
    sp.add_argument("--samples", type=int, default=8, help="random a-edge samples per edge")
    sp.set_defaults(func=cmd_bs_tame_scan)

    sp = add("bs-coeff1", help="witness against slope-one tameness")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-C", type=int, required=True)
    sp.set_defaults(func=cmd_bs_coeff1)

    for name, func in (("ball", cmd_ball), ("dot", cmd_dot)):
        sp = add(name, help=f"{name} of a Cayley graph")
        sp.add_argument("--group", choices=("F", "BS"), default="F")
        sp.add_argument("-p", type=int, default=3)
        sp.add_argument("-r", "--radius", type=int, default=2)
        if name == "ball":
            sp.add_argument("--dump", default=None, help="write key/distance lines here")
        sp.set_defaults(func=func)
    return parser


def run(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        _note(f"usage error: {exc}")
        return 2
    except (InvalidNormalFormError, ValueError) as exc:
        _note(f"error: {exc}")
        return 2
    except BallBudgetExceeded as exc:
        _note(f"budget exceeded: {exc}")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
