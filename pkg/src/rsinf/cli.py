"""Command line front end.

Sequence literals are comma-separated field elements: integers ("3"),
reduced fractions ("1/2"), or symbols with an optional integer part
("a", "a-3", "-a+1").  Results are printed as compact JSON, except the
level-set commands which print one weight vector per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classifier, cls
from .core import FieldElem, Tableau, TableauFamily, parse_elem
from .rs_finite import connected, j, joseph_equal, rs, seq_of
from .rs_infinite import (
    Axis,
    block_ideal,
    eventually_constant,
    plus_rho,
    rs_infinite,
)


def _parse_seq(text: str):
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_elem(part) for part in text.split(","))


def _family_json(family) -> list:
    return [
        {
            "class": str(FieldElem(t.anchor, 0)),
            "rows": [[str(v) for v in row] for row in t.rows],
        }
        for t in family
    ]


def _emit(obj) -> int:
    print(json.dumps(obj, separators=(",", ":")))
    return 0


def _cmd_classify(args) -> int:
    with open(args.spec) as fh:
        spec = classifier.parse_spec(json.load(fh))
    return _emit(classifier.ideal_to_json(classifier.classify(spec)))


def _cmd_rs(args) -> int:
    vals = _parse_seq(args.sequence)
    family = j(vals) if args.shifted else rs(vals)
    return _emit({"tableaux": _family_json(family)})


def _cmd_seq_of(args) -> int:
    with open(args.tableaux) as fh:
        data = json.load(fh)
    tabs = []
    for item in data["tableaux"]:
        rows = tuple(
            tuple(parse_elem(str(v)) for v in row) for row in item["rows"]
        )
        if not rows or not rows[0]:
            raise ValueError("tableaux must have at least one nonempty row")
        tabs.append(Tableau(rows[0][0].anchor, rows))
    return _emit({"seq": [str(v) for v in seq_of(TableauFamily(tuple(tabs)))]})


def _cmd_interchange(args) -> int:
    f = _parse_seq(args.first)
    g = _parse_seq(args.second)
    path = connected(f, g, shifted=args.shifted)
    if path is None:
        out = {"connected": False}
    else:
        out = {"connected": True, "path": list(path.positions)}
    if args.k is not None:
        out["joseph_equal"] = joseph_equal(f, g, k=args.k)
    return _emit(out)


_AXES = {"neg": Axis.NEG, "pos": Axis.POS, "all": Axis.ALL}


def _cmd_rs_inf(args) -> int:
    with open(args.block) as fh:
        data = json.load(fh)
    axis = _AXES.get(data.get("axis"))
    if axis is None:
        raise ValueError(f"unknown axis {data.get('axis')!r}; use neg, pos or all")
    window = [parse_elem(str(v)) for v in data.get("exceptions", ())]
    lt = data.get("left_tail")
    rt = data.get("right_tail")
    block = eventually_constant(
        axis,
        window,
        left_tail=parse_elem(str(lt)) if lt is not None else None,
        right_tail=parse_elem(str(rt)) if rt is not None else None,
    )
    res = rs_infinite(plus_rho(block))
    r, g, x, y = block_ideal(block)
    row = res.first_row
    row_json = {"window": [str(v) for v in row.window]}
    if row.left_law is not None:
        row_json["left_law"] = str(row.left_law)
    if row.right_law is not None:
        row_json["right_law"] = str(row.right_law)
    return _emit(
        {
            "axis": data["axis"],
            "r": res.r,
            "first_row": row_json,
            "underline": [str(v) for v in res.underline],
            "lower_rows": [[str(v) for v in r_] for r_ in res.lower_rows],
            "finite_tableaux": _family_json(res.finite_tableaux),
            "ideal": {"r": r, "g": g, "X": list(x), "Y": list(y)},
        }
    )


def _parse_params(text: str) -> cls.ClsParams:
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError(
            "parameters are \"r',r'',g;X;Y\", e.g. \"1,0,2;2,1;\""
        )
    nums = parts[0].split(",")
    if len(nums) != 3:
        raise ValueError("the first group must be r',r'',g")
    r1, r2, g = (int(x) for x in nums)
    x = tuple(int(v) for v in parts[1].split(",") if v.strip())
    y = tuple(int(v) for v in parts[2].split(",") if v.strip())
    return cls.cls_params(r1, r2, g, x, y)


def _print_vectors(vecs) -> int:
    for v in sorted(vecs, reverse=True):
        print(",".join(str(x) for x in v))
    return 0


def _cmd_cls_level(args) -> int:
    p = _parse_params(args.params)
    return _print_vectors(cls.cls_level(p, args.level, args.bound))


def _cmd_cls_gamma(args) -> int:
    p = _parse_params(args.params)
    print(",".join(str(x) for x in cls.gamma(p, args.level)))
    return 0


def _cmd_cls_member(args) -> int:
    p = _parse_params(args.params)
    vec = tuple(int(x) for x in args.vector.split(","))
    return _emit({"member": cls.member(p, vec)})


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rsinf",
        description="Insertion on infinite sequences and annihilator parameters.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="annihilator parameters of a weight spec")
    p.add_argument("spec", help="path to a JSON spec document")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("rs", help="insert a finite sequence")
    p.add_argument("sequence", help="comma-separated entries, e.g. \"3,4,a,5\"")
    p.add_argument("--shifted", action="store_true", help="subtract positions first")
    p.set_defaults(func=_cmd_rs)

    p = sub.add_parser("seq-of", help="read a tableau family back into a sequence")
    p.add_argument("tableaux", help="path to a JSON tableau document")
    p.set_defaults(func=_cmd_seq_of)

    p = sub.add_parser("interchange", help="search for an interchange path")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--shifted", action="store_true")
    p.add_argument(
        "--k", type=int, default=None,
        help="also report whether the shifted insertions agree after adding k",
    )
    p.set_defaults(func=_cmd_interchange)

    p = sub.add_parser("rs-inf", help="insert an infinite block")
    p.add_argument("block", help="path to a JSON block document")
    p.set_defaults(func=_cmd_rs_inf)

    p = sub.add_parser("cls-level", help="level set of annihilator parameters")
    p.add_argument("params", help="\"r',r'',g;X;Y\"")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_cls_level)

    p = sub.add_parser("cls-gamma", help="distinguished weight at doubled level")
    p.add_argument("params")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=_cmd_cls_gamma)

    p = sub.add_parser("cls-member", help="test level-set membership")
    p.add_argument("params")
    p.add_argument("vector", help="comma-separated weight, e.g. \"2,1,0\"")
    p.set_defaults(func=_cmd_cls_member)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc)}, separators=(",", ":")))
        return 1


if __name__ == "__main__":
    sys.exit(main())
