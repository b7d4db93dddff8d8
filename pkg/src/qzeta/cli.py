"""Command-line surface.

Exit codes: 0 pass, 1 mathematical failure (nonzero residual), 2 usage or
parse error, 3 mining re-verification failure, 4 cache IO failure.
"""

import argparse
import json
import os
import sys

from qzeta import genfun, ranklab, relations
from qzeta._version import __version__
from qzeta.cache import DiskCache
from qzeta.errors import (
    CacheIOError,
    MiningVerificationError,
    NotAdmissible,
    QZetaError,
)
from qzeta.expand import Expander
from qzeta.indices import format_index, parse_index
from qzeta.ranklab import CONJECTURED_MZV_DIMS


def _build_parser():
    p = argparse.ArgumentParser(
        prog="qzeta",
        description="Exact q-series engine for q-multiple zeta values.",
    )
    p.add_argument("--version", action="version", version=f"qzeta {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="print expansion coefficients of an index")
    pe.add_argument("--index", required=True, help='index such as "(3,1)"')
    pe.add_argument("--order", type=int, default=13, help="truncation order (default 13)")
    pe.add_argument("--raw", action="store_true", help="plain normalization instead of modified")
    pe.add_argument("--format", choices=("table", "json"), default="table")
    pe.add_argument("--cache-dir", default=None)

    pv = sub.add_parser("verify", help="verify one of the proved relations")
    pv.add_argument(
        "kind",
        choices=("cyclic", "lemma", "ohno", "duality", "ohno-zagier", "qdiff"),
    )
    pv.add_argument("--index", default=None)
    pv.add_argument("--l", type=int, default=0, help="composition shift for ohno")
    pv.add_argument("--order", type=int, default=40, help="q-truncation order (default 40)")
    pv.add_argument("--weight", type=int, default=4, help="weight bound for ohno-zagier")
    pv.add_argument("--t-order", type=int, default=10, help="t-truncation for qdiff")
    pv.add_argument("--modified", action="store_true", help="modified form for ohno-zagier")
    pv.add_argument("--cache-dir", default=None)

    pt = sub.add_parser("table", help="print the rank/upper-bound table")
    pt.add_argument("statistic", choices=("rank",))
    pt.add_argument("--max-weight", type=int, default=8)
    pt.add_argument("--extended", action="store_true", help="allow weights 9-10")
    pt.add_argument("--cache-dir", default=None)

    pm = sub.add_parser("mine", help="mine and certify linear relations")
    pm.add_argument("--weight", type=int, required=True)
    pm.add_argument("--mixed", action="store_true", help="columns of every weight 2..k")
    pm.add_argument("--rows", type=int, default=None, help="number of matrix rows")
    pm.add_argument("--verify-order", type=int, default=None)
    pm.add_argument("--out", default=None, help="write JSONL certificates here")
    pm.add_argument("--cache-dir", default=None)
    return p


def _expander_for(args):
    cache_dir = getattr(args, "cache_dir", None) or os.environ.get("QZETA_CACHE")
    if cache_dir:
        return Expander(disk=DiskCache(cache_dir))
    return Expander()


def _cmd_expand(args):
    idx = parse_index(args.index)
    ex = _expander_for(args)
    kind = "raw" if args.raw else "modified"
    series = ex.raw(idx, args.order) if args.raw else ex.modified(idx, args.order)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "index": list(idx),
                    "kind": kind,
                    "trunc": args.order,
                    "coeffs": [str(series.coeff(n)) for n in range(args.order + 1)],
                }
            )
        )
    else:
        print(" ".join(str(series.coeff(n)) for n in range(1, args.order + 1)))
    return 0


def _cmd_verify(args):
    ex = _expander_for(args)
    if args.kind in ("cyclic", "lemma", "ohno", "duality", "qdiff"):
        if args.index is None:
            print("error: --index is required for this verification", file=sys.stderr)
            return 2
        idx = parse_index(args.index)
    if args.kind == "cyclic":
        report = relations.verify_cyclic(idx, args.order, ex)
    elif args.kind == "lemma":
        report = relations.verify_cyclic_lemma(idx, args.order, ex)
    elif args.kind == "ohno":
        report = relations.verify_ohno(idx, args.l, args.order, ex)
    elif args.kind == "duality":
        report = relations.verify_duality(idx, args.order, ex)
    elif args.kind == "ohno-zagier":
        ok = genfun.verify_ohno_zagier(
            args.weight, args.order, modified=args.modified, expander=ex
        )
        if ok:
            print(f"ohno-zagier weight<={args.weight} order={args.order}: pass")
            return 0
        print(f"ohno-zagier weight<={args.weight} order={args.order}: FAIL")
        return 1
    else:  # qdiff
        ok = genfun.verify_qdiff_recurrences(idx, args.t_order, args.order)
        if ok:
            print(
                f"qdiff index={format_index(idx)} t-order={args.t_order} "
                f"order={args.order}: pass"
            )
            return 0
        print(f"qdiff index={format_index(idx)}: FAIL")
        return 1
    print(report.describe())
    return 0 if report.passed else 1


def _cmd_table(args):
    if args.max_weight < 2:
        print("error: --max-weight must be >= 2", file=sys.stderr)
        return 2
    cap = 10 if args.extended else 8
    if args.max_weight > cap:
        print(
            f"error: --max-weight above {cap} needs --extended" if not args.extended
            else "error: --max-weight above 10 is not tabulated",
            file=sys.stderr,
        )
        return 2
    ex = _expander_for(args)
    ws = list(range(2, args.max_weight + 1))
    rank_k = [ranklab.rank_exact(ranklab.build_Ak(k, expander=ex)) for k in ws]
    rank_le = [ranklab.rank_exact(ranklab.build_A_le_k(k, expander=ex)) for k in ws]
    bounds = [ranklab.upper_bound_from_relations(k) for k in ws]
    dks = [CONJECTURED_MZV_DIMS[k] for k in ws]
    rows = [
        ("weight", ws),
        ("d_k", dks),
        ("rank_A_k", rank_k),
        ("by_cyclic_and_ohno", bounds),
        ("sum_d_j", _prefix_sums(dks)),
        ("rank_A_le_k", rank_le),
        ("sum_rank_A_j", _prefix_sums(rank_k)),
    ]
    for label, vals in rows:
        print("\t".join([label] + [str(v) for v in vals]))
    return 0


def _prefix_sums(vals):
    out = []
    acc = 0
    for v in vals:
        acc += v
        out.append(acc)
    return out


def _cmd_mine(args):
    if args.weight < 2:
        print("error: --weight must be >= 2", file=sys.stderr)
        return 2
    ex = _expander_for(args)
    if args.mixed:
        rels = ranklab.mine_mixed_weight(
            args.weight, n_rows=args.rows, n_verify=args.verify_order, expander=ex
        )
    else:
        rels = ranklab.mine_relations(
            args.weight, n_rows=args.rows, n_verify=args.verify_order, expander=ex
        )
    print(f"kernel dimension {len(rels)}")
    for rel in rels:
        weights = ",".join(str(w) for w in rel.weights())
        terms = ",".join(f"({format_index(i)},{c})" for i, c in rel.terms)
        print(f"{weights} | [{terms}] | verified_to={rel.verified_to}")
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                for rel in rels:
                    fh.write(
                        json.dumps(
                            {
                                "terms": [
                                    {"index": list(i), "coeff": c} for i, c in rel.terms
                                ],
                                "verified_to": rel.verified_to,
                            }
                        )
                        + "\n"
                    )
        except OSError as exc:
            raise CacheIOError(f"cannot write certificates to {args.out}: {exc}") from exc
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            return _cmd_expand(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "mine":
            return _cmd_mine(args)
    except NotAdmissible:
        print("error: index not admissible", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MiningVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CacheIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except QZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
