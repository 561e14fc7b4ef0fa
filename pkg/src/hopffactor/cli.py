"""Batch command-line pipeline with reproducible JSON artifacts.

Subcommands expose the pipeline stages: `catalog verify` (build or replay
the base algebras and run the axiom battery), `actions enumerate` (left or
right module-coalgebra enumeration), `matched-pairs find`, `product build`
(the four bicrossed products plus relation checks), and `theorem check`
(the whole chain with a summary table).

Exit codes depend on mathematical outcomes only: 0 success, 1 failed
check or count mismatch, 2 I/O error, 3 irreducible constraint system.
The HOPF_BUDGET environment variable overrides --budget.
"""

import argparse
import os
import sys
from dataclasses import dataclass

from hopffactor import jsonio
from hopffactor.actions import (
    classify_left_table,
    enumerate_left_actions,
    enumerate_right_actions,
    check_matched_pair,
    check_module_coalgebras,
    matched_pair_search,
)
from hopffactor.bicrossed import (
    build_bicrossed,
    check_embeddings,
    invariant_report,
    presentation_for,
    verify_presentation,
    zx_signature,
)
from hopffactor.hopf import tensor_product, verify_axioms
from hopffactor.presentations import build_H4, build_H8
from hopffactor.scalar import Scalar
from hopffactor.solver import IrreducibleSystemError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_IO = 2
EXIT_IRREDUCIBLE = 3

_DEFAULT_BUDGET = 100_000


@dataclass
class RunConfig:
    out_dir: str
    budget: int
    fmt: str

    def path(self, name):
        return os.path.join(self.out_dir, name)


def _config(args):
    budget = args.budget
    env = os.environ.get("HOPF_BUDGET")
    if env:
        budget = int(env)
    if budget <= 0:
        raise ValueError("budget must be positive")
    return RunConfig(out_dir=args.out, budget=budget, fmt=args.format)


def _structural_checks(name, H):
    """Presentation spot checks reported beside the axiom battery."""
    checks = []
    if name == "h8":
        z = H.basis_element("z")
        z2 = z * z
        expected = H.element(
            [Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(-1, 2), 0, 0, 0, 0]
        )
        checks.append(("z^2 = (1+g+h-gh)/2", z2 == expected))
        checks.append(("z^4 = 1", z ** 4 == H.one()))
        checks.append(("gz = zh", H.basis_element("g") * z == z * H.basis_element("h")))
    if name == "h4":
        X, G = H.basis_element("X"), H.basis_element("G")
        checks.append(("S(X) = GX", H.antipode_of(X) == H.basis_element("GX")))
        checks.append(("XG = -GX", X * G == -(G * X)))
    return checks


def cmd_catalog_verify(args):
    config = _config(args)
    targets = []
    if args.load:
        try:
            import json

            with open(args.load, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            print(f"error: cannot read {args.load}: {exc}", file=sys.stderr)
            return EXIT_IO
        H = jsonio.algebra_from_json(data)
        targets.append((H.name or "loaded", H))
    else:
        wanted = args.algebra
        if wanted in ("h4", "all"):
            targets.append(("h4", build_H4()))
        if wanted in ("h8", "all"):
            targets.append(("h8", build_H8()))
        if wanted == "all":
            targets.append(("h8xh4", tensor_product(build_H8(), build_H4())))
    all_ok = True
    try:
        for name, H in targets:
            report = verify_axioms(H)
            extra = _structural_checks(name, H)
            ok = report.all_passed and all(p for _, p in extra)
            all_ok = all_ok and ok
            jsonio.write_json(config.path(f"{name}.hopf.json"), jsonio.algebra_to_json(H))
            payload = jsonio.axiom_report_to_json(report, extra)
            if config.fmt == "markdown":
                jsonio.write_text(
                    config.path(f"{name}.axiom-report.md"),
                    jsonio.axiom_report_to_markdown(report, extra),
                )
            else:
                jsonio.write_json(config.path(f"{name}.axiom-report.json"), payload)
            verdict = "ok" if ok else "FAILED"
            print(f"{name}: dim {H.dim}, axiom checks {verdict}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def cmd_actions_enumerate(args):
    config = _config(args)
    side = args.side
    try:
        if side == "left":
            sol = enumerate_left_actions(split_budget=config.budget)
        else:
            sol = enumerate_right_actions(split_budget=config.budget)
    except IrreducibleSystemError as exc:
        payload = {
            "schema": "solutions/v1",
            "side": side,
            "error": "irreducible-system",
            "reason": exc.reason,
            "residual": [p.render() for p in exc.residual[:40]],
            "residual_count": len(exc.residual),
        }
        try:
            jsonio.write_json(config.path(f"actions-{side}.solutions.json"), payload)
        except OSError as io_exc:
            print(f"error: {io_exc}", file=sys.stderr)
            return EXIT_IO
        print(f"{side} enumeration: irreducible system ({exc.reason}); "
              f"residual of {len(exc.residual)} constraints written")
        return EXIT_IRREDUCIBLE
    payload = sol.to_json()
    payload["side"] = side
    payload["branch_count"] = len(sol.branches)
    try:
        jsonio.write_json(config.path(f"actions-{side}.solutions.json"), payload)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{side} enumeration: {len(sol.branches)} canonical families")
    return EXIT_OK


def _pair_rows(pairs):
    """Pairs decorated with products, ordered by presentation name."""
    rows = []
    for pair in pairs:
        product = build_bicrossed(pair)
        sig = zx_signature(product)
        rows.append((pair, product, sig, presentation_for(product)))
    order = {"tensor": 0, "H32_1": 1, "H32_2": 2, "H32_3": 3}
    rows.sort(key=lambda r: order.get(r[3], 99))
    return rows


def cmd_matched_pairs_find(args):
    config = _config(args)
    if args.load:
        return _replay_matched_pair(args.load, config)
    try:
        pairs, _sol = matched_pair_search(split_budget=config.budget)
    except IrreducibleSystemError as exc:
        print(f"matched-pair search hit an irreducible system: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBLE
    try:
        rows = _pair_rows(pairs)
        for n, (pair, product, sig, pres) in enumerate(rows, start=1):
            digest = {
                "zx_relation": sig,
                "presentation": pres,
                "left_family": _family_label(pair),
                "pair_checks_pass": not check_matched_pair(pair),
            }
            jsonio.write_json(
                config.path(f"matched-pair-{n}.json"),
                jsonio.matched_pair_to_json(pair, digest),
            )
        print(f"matched pairs: {len(pairs)}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if len(pairs) == 4 else EXIT_CHECK_FAILED


def _family_label(pair):
    cls = classify_left_table(pair.left)
    if cls is None:
        return "unrecognized"
    xf, gf, alpha, beta = cls
    return f"x-family {xf} (alpha={alpha}), gx-family {gf} (beta={beta})"


def _replay_matched_pair(path, config):
    """Re-verify a stored matched-pair/v1 file and refresh its digest."""
    try:
        import json

        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    pair = jsonio.matched_pair_from_json(data)
    failures = check_module_coalgebras(pair) + check_matched_pair(pair)
    digest = {
        "left_family": _family_label(pair),
        "pair_checks_pass": not failures,
        "failures": [str(f) for f in failures[:10]],
    }
    try:
        jsonio.write_json(
            config.path("matched-pair-replay.json"),
            jsonio.matched_pair_to_json(pair, digest),
        )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if failures:
        print(f"stored pair FAILS {len(failures)} checks; first: {failures[0]}")
        return EXIT_CHECK_FAILED
    print("stored pair verifies: all module and pairing checks pass")
    return EXIT_OK


def cmd_product_build(args):
    config = _config(args)
    try:
        pairs, _sol = matched_pair_search(split_budget=config.budget)
        rows = _pair_rows(pairs)
    except IrreducibleSystemError as exc:
        print(f"matched-pair search hit an irreducible system: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBLE
    ok = len(pairs) == 4
    try:
        for n, (pair, product, sig, pres) in enumerate(rows, start=1):
            checks = verify_presentation(product, pres)
            ok = ok and all(c.holds for c in checks)
            jsonio.write_json(
                config.path(f"product-{n}.hopf.json"),
                jsonio.algebra_to_json(product.algebra),
            )
            print(f"product {n}: {pres}, {sig}, relations "
                  f"{'pass' if all(c.holds for c in checks) else 'FAIL'}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_theorem_check(args):
    config = _config(args)
    try:
        pairs, _sol = matched_pair_search(split_budget=config.budget)
        rows = _pair_rows(pairs)
    except IrreducibleSystemError as exc:
        print(f"matched-pair search hit an irreducible system: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBLE

    count_ok = len(pairs) == 4
    all_relations_ok = True
    tensor_identified = None
    report_rows = []
    signatures = []
    try:
        for n, (pair, product, sig, pres) in enumerate(rows, start=1):
            signatures.append(sig)
            axiom_rep = verify_axioms(product.algebra)
            checks = verify_presentation(product, pres)
            relations_ok = all(c.holds for c in checks)
            all_relations_ok = all_relations_ok and relations_ok and axiom_rep.all_passed
            reverified = not (check_module_coalgebras(pair) or check_matched_pair(pair))
            embed_fail = check_embeddings(product)
            inv = invariant_report(product, split_budget=config.budget)
            if pres == "tensor":
                T = tensor_product(build_H4(), build_H8())
                tensor_identified = (
                    product.algebra.structure_key() == T.structure_key()
                )
            jsonio.write_json(
                config.path(f"matched-pair-{n}.json"),
                jsonio.matched_pair_to_json(
                    pair,
                    {"zx_relation": sig, "presentation": pres,
                     "left_family": _family_label(pair)},
                ),
            )
            jsonio.write_json(
                config.path(f"product-{n}.hopf.json"),
                jsonio.algebra_to_json(product.algebra),
            )
            jsonio.write_json(config.path(f"invariants-{n}.json"), inv.to_json())
            report_rows.append(
                {
                    "id": n,
                    "left_family": _family_label(pair),
                    "zx_relation": sig,
                    "presentation": pres,
                    "axioms_pass": axiom_rep.all_passed,
                    "relations_pass": relations_ok,
                    "pair_reverified": reverified,
                    "embeddings_pass": not embed_fail,
                    "relations": [
                        {"relation": c.relation, "holds": c.holds, "witness": c.witness}
                        for c in checks
                    ],
                }
            )
            all_relations_ok = all_relations_ok and reverified and not embed_fail
        report = {
            "schema": "theorem-report/v1",
            "matched_pair_count": len(pairs),
            "expected_count": 4,
            "zx_signatures": signatures,
            "signatures_pairwise_distinct": len(set(signatures)) == len(signatures),
            "tensor_identification": tensor_identified,
            "rows": report_rows,
        }
        jsonio.write_json(config.path("theorem-report.json"), report)
        if config.fmt == "markdown":
            jsonio.write_text(
                config.path("theorem-report.md"),
                jsonio.theorem_report_to_markdown(report),
            )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    ok = (
        count_ok
        and all_relations_ok
        and tensor_identified is True
        and len(set(signatures)) == 4
    )
    print(f"matched pairs: {len(pairs)} (expected 4)")
    for row in report_rows:
        print(
            f"  pair {row['id']}: {row['presentation']:7s} {row['zx_relation']:10s} "
            f"axioms={'pass' if row['axioms_pass'] else 'FAIL'} "
            f"relations={'pass' if row['relations_pass'] else 'FAIL'} "
            f"re-check={'pass' if row['pair_reverified'] else 'FAIL'}"
        )
    print(f"verdict: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _add_common(parser):
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument(
        "--budget", type=int, default=_DEFAULT_BUDGET,
        help="solver split budget (HOPF_BUDGET overrides)",
    )
    parser.add_argument(
        "--format", choices=("json", "markdown"), default="json",
        help="human-readable report format",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopffactor",
        description="Exact verification pipeline for the bicrossed products of H8 and H4",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    catalog = sub.add_parser("catalog", help="base algebra catalog")
    catalog_sub = catalog.add_subparsers(dest="subcommand", required=True)
    verify = catalog_sub.add_parser("verify", help="build and axiom-check the algebras")
    verify.add_argument("--algebra", choices=("h4", "h8", "all"), default="all")
    verify.add_argument("--load", help="verify a stored hopf-algebra/v1 file instead")
    _add_common(verify)
    verify.set_defaults(func=cmd_catalog_verify)

    actions = sub.add_parser("actions", help="module-coalgebra actions")
    actions_sub = actions.add_subparsers(dest="subcommand", required=True)
    enum = actions_sub.add_parser("enumerate", help="enumerate the action families")
    enum.add_argument("--side", choices=("left", "right"), required=True)
    _add_common(enum)
    enum.set_defaults(func=cmd_actions_enumerate)

    mp = sub.add_parser("matched-pairs", help="matched pairs of actions")
    mp_sub = mp.add_subparsers(dest="subcommand", required=True)
    find = mp_sub.add_parser("find", help="solve for all matched pairs")
    find.add_argument("--load", help="re-verify a stored matched-pair/v1 file instead")
    _add_common(find)
    find.set_defaults(func=cmd_matched_pairs_find)

    product = sub.add_parser("product", help="bicrossed products")
    product_sub = product.add_subparsers(dest="subcommand", required=True)
    build = product_sub.add_parser("build", help="build and check the four products")
    _add_common(build)
    build.set_defaults(func=cmd_product_build)

    theorem = sub.add_parser("theorem", help="the full factorization statement")
    theorem_sub = theorem.add_subparsers(dest="subcommand", required=True)
    check = theorem_sub.add_parser("check", help="run the whole pipeline")
    _add_common(check)
    check.set_defaults(func=cmd_theorem_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
