"""Command line front end: ``python -m hookblock <command> ...``."""

import argparse
import json
import sys

from . import abacus as ab
from . import blockmap as bm
from . import closed_forms as cf
from . import complexes as cx
from . import verify
from .lr import theta_multiplicities
from .partitions import Partition, PartitionError, hook_index, is_prime, to_text


def _prime(text):
    p = int(text)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is not a prime")
    return p


def _object(text):
    try:
        return cx.parse_object(text)
    except cx.ComplexError as err:
        raise argparse.ArgumentTypeError(str(err))


def _partition(text):
    try:
        return Partition(text)
    except PartitionError as err:
        raise argparse.ArgumentTypeError(str(err))


def _emit(args, payload, table=None):
    if args.format == "table" and table is not None:
        print(table)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False, default=str))


def cmd_ext(args):
    if args.oracle:
        t = cx.ext_oracle(args.source, args.target, args.p, args.n)
        src = "oracle"
    else:
        t = cf.ext_table(args.source, args.target, args.p)
        src = "closed-form"
    dims = {str(q): d for q, d in sorted(t.items())}
    payload = {"from": "%s:%d" % args.source, "to": "%s:%d" % args.target, "p": args.p,
               "dims": dims, "source": src}
    table = "\n".join(f"Ext^{q} = {d}" for q, d in dims.items()) or "Ext = 0"
    _emit(args, payload, table)
    return 0


def cmd_decomp(args):
    D = cf.decomposition_by_characters(args.p, args.n) if args.oracle else cf.decomposition_matrix(args.p)
    payload = {"p": args.p, "rows": "S_l", "cols": "F_m", "matrix": D.tolist()}
    _emit(args, payload, "\n".join(" ".join(map(str, row)) for row in D.tolist()))
    return 0


def cmd_yoneda(args):
    model = cf.model_schur_yoneda(args.p) if args.family == "schur" else cf.model_simple_yoneda(args.p)
    payload = {"p": args.p, "family": args.family, "dim": model.dim,
               "graded_dims": {str(k): v for k, v in model.graded_dims().items()},
               "basis": ["%s%s" % (x[0], x[1:]) for x in model.labels]}
    status = 0
    if args.check:
        rep = cf.compare_model_oracle(args.family, args.p, args.n)
        payload["check"] = rep
        status = 0 if rep["status"] == "pass" else 1
    _emit(args, payload, f"dim {model.dim}; graded {model.graded_dims()}")
    return status


def cmd_kl(args):
    rep = cf.kl_check(args.p)
    _emit(args, rep, f"kl check: {rep['status']}")
    return 0 if rep["status"] == "pass" else 1


def cmd_block(args):
    if args.e is not None:
        payload = {"e": args.e, "p": args.p,
                   "blocks": [{"core": to_text(b.core), "weight": b.weight,
                               "members": [to_text(m) for m in ms]} for b, ms in bm.blocks(args.e, args.p)]}
        table = "\n".join(f"{b}: " + " ".join(to_text(m) for m in ms) for b, ms in bm.blocks(args.e, args.p))
    else:
        payload = bm.weight1_block_tables(args.core, args.p)
        payload["ext"] = {"%s[%s]->%s[%s]" % k: {str(q): d for q, d in v.items()}
                          for k, v in payload["ext"].items()}
        payload["schur_model_graded_dims"] = {str(k): v for k, v in payload["schur_model_graded_dims"].items()}
        payload["simple_model_graded_dims"] = {str(k): v for k, v in payload["simple_model_graded_dims"].items()}
        table = "labels: " + "  ".join(payload["labels"])
    _emit(args, payload, table)
    return 0


def cmd_theta(args):
    kind, _, shape = args.object.partition(":")
    if kind != "S":
        print(json.dumps({"error": "theta acts on Schur objects S:<partition>"}))
        return 2
    nu = Partition(shape)
    out = theta_multiplicities(args.core, nu, args.p)
    payload = {"p": args.p, "core": to_text(args.core), "object": args.object,
               "factors": {f"S:{to_text(m)}": c for m, c in out.items()}}
    _emit(args, payload, " ⊕ ".join(f"{c}·S_({to_text(m)})" for m, c in out.items()) or "0")
    return 0


def cmd_abacus(args):
    lam = args.partition
    core, w = ab.p_core_and_weight(lam, args.p)
    payload = {"partition": to_text(lam), "p": args.p,
               "beta": list(ab.beta_sequence(lam, len(lam))), "core": to_text(core), "weight": w,
               "rim_hooks": [{"row": d.row, "leg": d.leg, "hook": d.hook,
                              "removes_to": to_text(ab.remove_rim_hook(lam, d))}
                             for d in ab.removable_rim_hooks(lam, args.p)]}
    try:
        payload["hook_index"] = hook_index(lam, args.p)
    except PartitionError:
        payload["hook_index"] = None
    if w == 0:
        payload["mu"] = [to_text(ab.mu_index(core, args.p, i)) for i in range(args.p)]
    _emit(args, payload, f"core {to_text(core)}, weight {w}")
    return 0


def cmd_verify(args):
    try:
        reports = verify.run(args.p, args.n, args.suite, seed=args.seed, tier_override=args.tier_override)
    except verify.TierError as err:
        print(json.dumps({"error": str(err)}), file=sys.stderr)
        return 2
    failed = [r for r in reports if r["status"] == "fail"]
    if args.format == "table":
        for r in reports:
            print(f"{r['suite']:<14}{r['check']:<32}{r['status']}")
    else:
        print(json.dumps(reports, indent=2, default=str))
    return 1 if failed else 0


def build_parser():
    ap = argparse.ArgumentParser(prog="hookblock", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, n=True):
        sp.add_argument("--p", type=_prime, required=True)
        if n:
            sp.add_argument("--n", type=int, default=None, help="evaluation dimension (default p)")
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("ext", help="dimensions of Ext^q between two objects")
    common(sp)
    sp.add_argument("--from", dest="source", type=_object, required=True)
    sp.add_argument("--to", dest="target", type=_object, required=True)
    sp.add_argument("--oracle", action="store_true", help="recompute from resolutions")
    sp.set_defaults(func=cmd_ext)

    sp = sub.add_parser("decomp", help="decomposition matrix")
    common(sp)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_decomp)

    sp = sub.add_parser("yoneda", help="Yoneda algebra models")
    common(sp)
    sp.add_argument("--family", choices=("schur", "simple"), default="schur")
    sp.add_argument("--check", action="store_true", help="compare with chain maps")
    sp.set_defaults(func=cmd_yoneda)

    sp = sub.add_parser("kl", help="Kazhdan-Lusztig parity and convolution checks")
    common(sp, n=False)
    sp.set_defaults(func=cmd_kl)

    sp = sub.add_parser("block", help="weight-one block tables, or the blocks of degree e")
    common(sp, n=False)
    sp.add_argument("--core", type=_partition, default=Partition())
    sp.add_argument("--e", type=int, default=None)
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("theta", help="Schur factors of theta on a Schur object")
    common(sp, n=False)
    sp.add_argument("--core", type=_partition, required=True)
    sp.add_argument("--object", required=True, help="S:<partition>, e.g. S:2,2")
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("abacus", help="beta numbers, core, weight and rim hooks")
    common(sp, n=False)
    sp.add_argument("--partition", type=_partition, required=True)
    sp.set_defaults(func=cmd_abacus)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=0, help="seed for the random cores")
    sp.add_argument("--tier-override", action="store_true", help="run the oracle above its default tier")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as err:
        print(json.dumps({"error": str(err)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
