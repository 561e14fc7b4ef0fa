"""Versioned JSON formats and byte-reproducible file output.

Schemas: "hopf-algebra/v1" (structure constants with sparse, lexicographic
entries), "solutions/v1" (solver branches plus split provenance),
"action/v1" (concrete action tables), "matched-pair/v1" (an action pair
with its verification digest), "invariant-report/v1".  Scalars travel as
the 4-integer tuple [re_num, re_den, im_num, im_den]; everything is sorted
canonically so identical inputs serialize to identical bytes.
"""

import json
import os

from hopffactor.hopf import HopfAlgebraData
from hopffactor.scalar import Scalar


def dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def write_text(path, text):
    """Atomic write: temp file in the target directory, then rename."""
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_json(path, payload):
    write_text(path, dumps(payload))


# -- hopf-algebra/v1 -----------------------------------------------------------


def algebra_to_json(H):
    mul = []
    for i in range(H.dim):
        for j in range(H.dim):
            for k, c in enumerate(H.mul[i][j]):
                if not c.is_zero():
                    mul.append([i, j, k, c.to_json()])
    comul = []
    for i in range(H.dim):
        for c, j, k in H.comul[i]:
            comul.append([i, j, k, c.to_json()])
    antipode = []
    for i in range(H.dim):
        for j, c in enumerate(H.antipode[i]):
            if not c.is_zero():
                antipode.append([i, j, c.to_json()])
    return {
        "schema": "hopf-algebra/v1",
        "name": H.name,
        "dim": H.dim,
        "basis": list(H.basis),
        "unit": [c.to_json() for c in H.unit],
        "counit": [c.to_json() for c in H.counit],
        "mul": mul,
        "comul": comul,
        "antipode": antipode,
    }


def algebra_from_json(data):
    if data.get("schema") != "hopf-algebra/v1":
        raise ValueError("not a hopf-algebra/v1 payload")
    dim = int(data["dim"])
    basis = list(data["basis"])
    zero = Scalar(0)
    mul = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in data["mul"]:
        mul[int(i)][int(j)][int(k)] = Scalar.from_json(c)
    comul = [[] for _ in range(dim)]
    for i, j, k, c in data["comul"]:
        comul[int(i)].append((Scalar.from_json(c), int(j), int(k)))
    antipode = [[zero] * dim for _ in range(dim)]
    for i, j, c in data["antipode"]:
        antipode[int(i)][int(j)] = Scalar.from_json(c)
    return HopfAlgebraData(
        data.get("name", ""),
        basis,
        mul,
        [Scalar.from_json(c) for c in data["unit"]],
        comul,
        [Scalar.from_json(c) for c in data["counit"]],
        antipode,
    )


# -- reports ---------------------------------------------------------------------


def axiom_report_to_json(report, extra_checks=()):
    return {
        "schema": "axiom-report/v1",
        "algebra": report.algebra_name,
        "dim": report.dim,
        "all_passed": report.all_passed,
        "axioms": [
            {
                "name": c.name,
                "passed": c.passed,
                "witnesses": list(c.witnesses[:10]),
                "witness_count": len(c.witnesses),
            }
            for c in report.checks
        ],
        "structural_checks": [
            {"name": name, "passed": passed} for name, passed in extra_checks
        ],
    }


def axiom_report_to_markdown(report, extra_checks=()):
    lines = [f"# Axiom report: {report.algebra_name} (dim {report.dim})", ""]
    lines.append("| check | result |")
    lines.append("|---|---|")
    for c in report.checks:
        lines.append(f"| {c.name} | {'pass' if c.passed else 'FAIL'} |")
    for name, passed in extra_checks:
        lines.append(f"| {name} | {'pass' if passed else 'FAIL'} |")
    lines.append("")
    verdict = "all checks pass" if (
        report.all_passed and all(p for _, p in extra_checks)
    ) else "FAILURES PRESENT"
    lines.append(f"Verdict: {verdict}")
    failing = [c for c in report.checks if not c.passed]
    if failing:
        lines.append("")
        lines.append("## Witnesses")
        for c in failing:
            for w in c.witnesses[:5]:
                lines.append(f"- {c.name}: {w}")
    lines.append("")
    return "\n".join(lines)


def matched_pair_to_json(cand, digest=None):
    return {
        "schema": "matched-pair/v1",
        "status": cand.status,
        "left": cand.left.to_json(),
        "right": cand.right.to_json(),
        "digest": digest or {},
    }


def matched_pair_from_json(data):
    from hopffactor.actions import LeftActionTable, MatchedPairCandidate, RightActionTable

    if data.get("schema") != "matched-pair/v1":
        raise ValueError("not a matched-pair/v1 payload")
    return MatchedPairCandidate(
        LeftActionTable.from_json(data["left"]),
        RightActionTable.from_json(data["right"]),
        status=data.get("status", "unchecked"),
    )


def theorem_report_to_markdown(report):
    lines = ["# Factorization check: bicrossed products of H8 and H4", ""]
    lines.append(f"Matched pairs found: {report['matched_pair_count']} (expected 4)")
    lines.append("")
    lines.append("| pair | left action | zX relation | presentation | axioms | relations | matched-pair re-check |")
    lines.append("|---|---|---|---|---|---|---|")
    for row in report["rows"]:
        lines.append(
            "| {id} | {left} | {zx} | {presentation} | {ax} | {rel} | {re} |".format(
                id=row["id"],
                left=row["left_family"],
                zx=row["zx_relation"],
                presentation=row["presentation"],
                ax="pass" if row["axioms_pass"] else "FAIL",
                rel="pass" if row["relations_pass"] else "FAIL",
                re="pass" if row["pair_reverified"] else "FAIL",
            )
        )
    lines.append("")
    if report.get("tensor_identification") is not None:
        flag = "yes" if report["tensor_identification"] else "NO"
        lines.append(f"Trivial pair product coincides with the tensor product: {flag}")
    lines.append(f"Distinct zX signatures: {', '.join(report['zx_signatures'])}")
    lines.append("")
    lines.append("## Relation details")
    for row in report["rows"]:
        lines.append("")
        lines.append(f"### {row['presentation']} (pair {row['id']})")
        for rel in row["relations"]:
            mark = "pass" if rel["holds"] else f"FAIL ({rel['witness']})"
            lines.append(f"- {rel['relation']}: {mark}")
    lines.append("")
    return "\n".join(lines)
