"""Action tables, compiled systems, enumeration, and the matched-pair search."""

import pytest

from hopffactor.actions import (
    LeftActionTable,
    MatchedPairCandidate,
    RightActionTable,
    antidiagonal_right_table,
    check_left_module_coalgebra,
    check_matched_pair,
    check_module_coalgebras,
    check_right_module_coalgebra,
    classify_left_table,
    enumerate_left_actions,
    enumerate_right_actions,
    g_action_circulant_system,
    left_family_instance,
    left_module_coalgebra_system,
    matched_pair_search,
    matched_pair_system,
    right_module_coalgebra_system,
    trivial_right_table,
    x_action_circulant_system,
)
from hopffactor.poly import Poly
from hopffactor.scalar import HALF, I, ONE, ZERO, Scalar
from hopffactor.solver import Branch, IrreducibleSystemError, solve


@pytest.fixture(scope="module")
def left_solutions():
    return enumerate_left_actions()


@pytest.fixture(scope="module")
def search_result():
    return matched_pair_search()


def concrete_table_from_branch(branch):
    L = LeftActionTable.symbolic()
    sample = branch.sample()
    return L.substitute(Branch({v: Poly.const(c) for v, c in sample.items()}, []))


# -- the sixteen published left families ------------------------------------------


def test_all_sixteen_instances_pass_at_parameter_one():
    for xf in (1, 2, 3, 4):
        for gf in "abcd":
            table = left_family_instance(xf, gf, ONE, ONE)
            assert check_left_module_coalgebra(table) == []
            residual = [
                p for p in left_module_coalgebra_system(table) if not p.is_zero()
            ]
            assert residual == []


def test_family_three_value_at_parameter_one():
    # z acts on X by (1-i)/2 (G-1) + iX in the third family at parameter 1
    table = left_family_instance(3, "a", ONE, ONE)
    h4 = table.h4
    val = table.scalar_entries()[(4, h4.index["X"])]
    assert val == (Scalar(-1, 2, 1, 2), Scalar(1, 2, -1, 2), I, ZERO)


def test_enumeration_finds_sixteen_families(left_solutions):
    assert len(left_solutions.branches) == 16


def test_enumeration_matches_published_families(left_solutions):
    seen = set()
    for br in left_solutions.branches:
        cls = classify_left_table(concrete_table_from_branch(br))
        assert cls is not None, f"unrecognized family: {br!r}"
        seen.add((cls[0], cls[1]))
    assert seen == {(xf, gf) for xf in (1, 2, 3, 4) for gf in "abcd"}


def test_trivial_action_is_a_branch(left_solutions):
    trivial = left_family_instance(1, "a")
    point = {}
    for (xi, ai), coords in trivial.scalar_entries().items():
        if xi == 0 or ai == 0:
            continue
        h8b, h4b = trivial.h8.basis, trivial.h4.basis
        for k, c in enumerate(coords):
            point[f"l_{h8b[xi]}_{h4b[ai]}_{h4b[k]}"] = c
    assert any(br.contains_point(point) for br in left_solutions.branches)


def test_gamma_squared_branch_point_in_provenance(left_solutions):
    quad_splits = [
        e
        for e in left_solutions.provenance
        if e["rule"] == "quadratic"
        and sorted(c.split(" = ")[1] for c in e["cases"]) == ["-i", "i"]
    ]
    assert any(e["variable"] == "l_z_X_X" for e in quad_splits)
    assert any(e["variable"] == "l_z_GX_GX" for e in quad_splits)


def test_normalizations_emerge_not_assumed(left_solutions):
    # g |> G = h |> G = z |> G = G in every family, and the sign/parameter
    # relations (1+beta)alpha = 0 and beta^2 = 1 hold for the g-action on X
    for br in left_solutions.branches:
        table = concrete_table_from_branch(br)
        scalars = table.scalar_entries()
        h4 = table.h4
        G_vec = tuple(ONE if k == h4.index["G"] else ZERO for k in range(4))
        for xi in (1, 2, 4):
            assert scalars[(xi, h4.index["G"])] == G_vec
        gX = scalars[(1, h4.index["X"])]
        alpha, beta = gX[1], gX[2]
        assert (ONE + beta) * alpha == ZERO
        assert beta * beta == ONE


def test_free_parameter_counts_match_tables(left_solutions):
    # one free parameter per nontrivial family on each column, none for the
    # trivial one
    for br in left_solutions.branches:
        cls = classify_left_table(concrete_table_from_branch(br))
        expected = (0 if cls[0] == 1 else 1) + (0 if cls[1] == "a" else 1)
        assert len(br.free) == expected, (cls, br.free)


def test_mixed_case_parameters_agree(left_solutions):
    # whenever both g and h act nontrivially on X, their parameters coincide
    for br in left_solutions.branches:
        scalars = concrete_table_from_branch(br).scalar_entries()
        xi = 2  # X column
        g_row, h_row = scalars[(1, xi)], scalars[(2, xi)]
        if g_row[2] == -ONE and h_row[2] == -ONE:
            assert g_row[1] == h_row[1]


# -- right module-coalgebra structures ----------------------------------------------


def test_published_right_examples_are_valid():
    assert check_right_module_coalgebra(trivial_right_table()) == []
    table = antidiagonal_right_table()
    assert check_right_module_coalgebra(table) == []
    residual = [p for p in right_module_coalgebra_system(table) if not p.is_zero()]
    assert residual == []


def test_antidiagonal_matrix_shape():
    A = antidiagonal_right_table().matrix_G()
    assert A == tuple(
        tuple(ONE if i + j == 3 else ZERO for j in range(4)) for i in range(4)
    )
    assert all(c.is_zero() for row in antidiagonal_right_table().matrix_X() for c in row)


def test_grouplike_action_case_constraints():
    # g<|G = h forces h<|G = g and gh<|G = gh; breaking that fails the axioms
    valid = RightActionTable.from_components(
        {"g": "h", "h": "g", "gh": "gh"},
        {"g": (ZERO,) * 8, "h": (ZERO,) * 8, "gh": (ZERO,) * 8},
        tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)),
        tuple((ZERO,) * 4 for _ in range(4)),
    )
    module_failures = [
        f for f in check_right_module_coalgebra(valid)
        if f.condition == "right-module-associativity"
    ]
    assert module_failures == []

    invalid = RightActionTable.from_components(
        {"g": "h", "h": "h", "gh": "gh"},
        {"g": (ZERO,) * 8, "h": (ZERO,) * 8, "gh": (ZERO,) * 8},
        tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)),
        tuple((ZERO,) * 4 for _ in range(4)),
    )
    assert check_right_module_coalgebra(invalid) != []


def test_right_enumeration_reports_irreducible():
    # the z-block of the G-action ranges over a two-dimensional quadric of
    # involutive coalgebra maps, which no finite union of polynomial graphs
    # covers: the honest outcome of the standalone enumeration is the
    # irreducible-system error, carrying the residual
    with pytest.raises(IrreducibleSystemError) as err:
        enumerate_right_actions(split_budget=100_000)
    assert err.value.residual
    assert err.value.reason in ("no-applicable-rule", "budget-exhausted")


# -- the published small systems -----------------------------------------------------


def test_g_action_circulant_system_solutions():
    solset = solve(g_action_circulant_system())
    points = sorted(
        tuple(str(br.point()[v]) for v in ("a", "b", "c", "d")) for br in solset
    )
    assert points == [
        ("-1/2", "1/2", "1/2", "1/2"),
        ("0", "0", "0", "1"),
        ("1", "0", "0", "0"),
        ("1/2", "1/2", "1/2", "-1/2"),
    ]


@pytest.mark.parametrize(
    "a_values",
    [
        (HALF, HALF, HALF, -HALF),
        (-HALF, HALF, HALF, HALF),
        (ONE, ZERO, ZERO, ZERO),
        (ZERO, ZERO, ZERO, ONE),
    ],
    ids=("half-matrix-1", "half-matrix-2", "identity", "antidiagonal"),
)
def test_x_action_circulant_system_forces_zero(a_values):
    solset = solve(x_action_circulant_system(a_values))
    assert len(solset) == 1
    point = solset.branches[0].point()
    assert all(point[v] == ZERO for v in ("p", "q", "r", "s"))


# -- matched pairs ---------------------------------------------------------------


def test_exactly_four_matched_pairs(search_result):
    pairs, _ = search_result
    assert len(pairs) == 4
    assert all(p.status == "matched" for p in pairs)


def test_matched_pairs_recheck_directly(search_result):
    pairs, _ = search_result
    for pair in pairs:
        assert check_module_coalgebras(pair) == []
        assert check_matched_pair(pair) == []


def test_matched_pair_families(search_result):
    pairs, _ = search_result
    classified = set()
    for pair in pairs:
        xf, gf, alpha, beta = classify_left_table(pair.left)
        assert alpha == ZERO and beta == ZERO
        A = pair.right.matrix_G()
        B = pair.right.matrix_X()
        assert all(c.is_zero() for row in B for c in row)
        identity = tuple(
            tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)
        )
        antidiag = tuple(
            tuple(ONE if i + j == 3 else ZERO for j in range(4)) for i in range(4)
        )
        a_kind = "E" if A == identity else ("antidiag" if A == antidiag else "other")
        classified.add((xf, gf, a_kind))
    assert classified == {
        (1, "a", "E"),
        (2, "b", "E"),
        (3, "c", "antidiag"),
        (4, "d", "antidiag"),
    }


def test_matched_pair_emergent_facts(search_result):
    # row sums of A equal one and the group-likes stay fixed, as consequences
    pairs, _ = search_result
    for pair in pairs:
        A = pair.right.matrix_G()
        colsum = A[0][0] + A[1][0] + A[2][0] + A[3][0]
        assert colsum == ONE
        scalars = pair.right.scalar_entries()
        h4 = pair.right.h4
        for xi in (1, 2, 3):
            expected = tuple(ONE if k == xi else ZERO for k in range(8))
            assert scalars[(xi, h4.index["G"])] == expected


def test_matched_branch_points_are_concrete(search_result):
    _, sol = search_result
    assert len(sol.branches) == 4
    for br in sol.branches:
        assert br.is_point()


def test_matched_pair_system_trivial_candidate_is_satisfied():
    cand = MatchedPairCandidate(left_family_instance(1, "a"), trivial_right_table())
    residual = [p for p in matched_pair_system(cand) if not p.is_zero()]
    assert residual == []


# -- negative controls ---------------------------------------------------------------


def test_trivial_left_with_antidiagonal_right_fails_exchange():
    cand = MatchedPairCandidate(left_family_instance(1, "a"), antidiagonal_right_table())
    assert check_module_coalgebras(cand) == []
    failures = check_matched_pair(cand)
    zx = [
        f for f in failures
        if f.condition == "exchange-compatibility" and f.at == ("z", "X")
    ]
    assert zx, f"expected an exchange failure at (z, X); got {failures[:3]}"
    assert "z⊗X" in zx[0].witness and "ghz⊗X" in zx[0].witness


def test_family_two_at_nonzero_parameter_fails_x_squared():
    cand = MatchedPairCandidate(
        left_family_instance(2, "b", ONE, ONE), trivial_right_table()
    )
    assert check_module_coalgebras(cand) == []
    failures = check_matched_pair(cand)
    xsq = [
        f for f in failures
        if f.condition == "left-product-compatibility" and f.at == ("z", "X", "X")
    ]
    assert xsq, f"expected the X^2 = 0 instance to fail; got {failures[:3]}"


# -- serialization round trips --------------------------------------------------------


def test_action_table_json_roundtrip():
    table = left_family_instance(3, "c", ONE, ONE)
    payload = table.to_json()
    assert payload["schema"] == "action/v1" and payload["side"] == "left"
    back = LeftActionTable.from_json(payload)
    assert back.scalar_entries() == table.scalar_entries()

    right = antidiagonal_right_table()
    back_r = RightActionTable.from_json(right.to_json())
    assert back_r.scalar_entries() == right.scalar_entries()
