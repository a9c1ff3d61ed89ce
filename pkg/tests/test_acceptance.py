"""Acceptance gate.

One test per numbered criterion; ``pytest tests/test_acceptance.py -v``
prints one pass or fail line for each. The three strict-xfail tests at
the end take the built-in example tables literally where they are
internally inconsistent (two mislabelled grid columns in example 1, six
impossible entries in example 5 and the one audit claim resting on
them). Those stay expected failures by design; the engine reproduces
the consistent remainder exactly.
"""

import random
from fractions import Fraction

import pytest
from conftest import problem_pool, random_round_robin, random_same_matches

from pairrank import (
    Axiom,
    ChangedPairWitness,
    Method,
    PairWitness,
    Permutation,
    RankingProblem,
    REASONABLE,
    SearchConfig,
    cli,
    copeland_fair_bets,
    derive,
    dual_fair_bets,
    fair_bets,
    format_decimal4,
    generalized_row_sum,
    is_connected,
    is_irreducible,
    least_squares,
    negate,
    parse_rational,
    permute,
    reasonable_epsilon,
    render_matrix,
    reproduce_example,
    run_check,
    score,
    search,
    sum_problems,
)
from pairrank.errors import (
    DisconnectedProblem,
    ReducibleProblem,
    UndefinedForSmallN,
)
from pairrank.fixtures import (
    EXAMPLE_1,
    EXAMPLE_1_LIMIT_COLUMN,
    EXAMPLE_1_SCORE,
    EXAMPLE_1_TABLE,
    EXAMPLE_2,
    EXAMPLE_2_EPSILONS,
    EXAMPLE_2_LS,
    EXAMPLE_3,
    EXAMPLE_4,
    EXAMPLE_4_DOUBLED_DECIMALS,
    EXAMPLE_4_DOUBLED_ROW_SUM,
    EXAMPLE_4_ROW_SUM,
    EXAMPLE_5,
    EXAMPLE_6,
    EXAMPLE_7,
    EXAMPLE_7_CHANGED_PAIR,
    EXAMPLE_8,
    EXAMPLE_8_CHANGED_PAIR,
    example_2_row_sum_first,
    example_2_row_sum_sum_gap,
)

F = Fraction


def mat_vec(matrix, vector):
    return tuple(sum(a * b for a, b in zip(row, vector)) for row in matrix)


def violated_at(report, pair):
    return not report.satisfied and pair in [v.objects for v in report.violations]


def test_criterion_1_row_sum_grid_on_example_1():
    assert cli.main(["reproduce", "--example", "1"]) == 0
    report = reproduce_example(1)
    assert report.ok
    assert score(EXAMPLE_1).values == EXAMPLE_1_SCORE
    mn = derive(EXAMPLE_1).max_matches * EXAMPLE_1.size
    q = least_squares(EXAMPLE_1).values
    assert tuple(mn * v for v in q) == EXAMPLE_1_LIMIT_COLUMN
    for _, generator, cells in EXAMPLE_1_TABLE:
        x = generalized_row_sum(EXAMPLE_1, generator).values
        assert tuple(format_decimal4(v) for v in x) == cells
    # Three headers name the parameter generating their cells; the other
    # two columns hold the solutions for 1/3 and 4/5 (the reproduction
    # notes both).
    mismatched = {
        header: generator
        for header, generator, _ in EXAMPLE_1_TABLE
        if parse_rational(header) != generator
    }
    assert mismatched == {"1/4": F(1, 3), "1/3": F(4, 5)}


def test_criterion_2_closed_forms_on_example_2():
    assert cli.main(["reproduce", "--example", "2"]) == 0
    first, second = EXAMPLE_2
    total = sum_problems(first, second)
    for eps in EXAMPLE_2_EPSILONS:
        x = generalized_row_sum(first, eps).values
        assert x[0] == x[1] == example_2_row_sum_first(eps)
        flipped = generalized_row_sum(second, eps).values
        assert flipped[0] == flipped[1] == F(-1)
        xs = generalized_row_sum(total, eps).values
        assert xs[0] - xs[1] == example_2_row_sum_sum_gap(eps)
    assert least_squares(first).values == EXAMPLE_2_LS["first"]
    assert least_squares(second).values == EXAMPLE_2_LS["second"]
    qs = least_squares(total).values
    assert qs[0] - qs[1] == EXAMPLE_2_LS["sum_gap"]


def test_criterion_3_example_tables_reproduce_exactly():
    for number in (3, 6, 7, 8):
        assert reproduce_example(number).ok
        assert cli.main(["reproduce", "--example", str(number)]) == 0
    assert reasonable_epsilon(EXAMPLE_4) == F(1, 3)
    assert generalized_row_sum(EXAMPLE_4, F(1, 3)).values == EXAMPLE_4_ROW_SUM
    doubled = RankingProblem(
        EXAMPLE_4.labels,
        tuple(tuple(2 * v for v in row) for row in EXAMPLE_4.tournament),
    )
    xs = generalized_row_sum(doubled, F(1, 3)).values
    assert xs == EXAMPLE_4_DOUBLED_ROW_SUM
    for value, printed in zip(xs, EXAMPLE_4_DOUBLED_DECIMALS):
        assert abs(value - parse_rational(printed)) <= F(1, 10_000)
        assert format_decimal4(value) == printed
    # Example 5: the 21 mutually consistent entries hold exactly. The six
    # that cannot all be right are pinned by the literal xfail below, and
    # the reproduction reports them as failures.
    report = reproduce_example(5)
    assert report.passed == 21 and report.failed == 6
    assert cli.main(["reproduce", "--example", "5"]) == 1


def test_criterion_4_audit_regressions(tmp_path):
    assert violated_at(run_check(Axiom.CS, Method("ls"), PairWitness(*EXAMPLE_2)), (0, 1))
    for key in ("fb", "dfb", "cfb"):
        assert violated_at(run_check(Axiom.EP, Method(key), PairWitness(*EXAMPLE_3)), (0, 3))
    assert violated_at(run_check(Axiom.RCS, Method("cfb"), PairWitness(*EXAMPLE_6)), (0, 2))
    # On example 5 the recomputed dual column turns the stated premise
    # false at (X1, X2), so the Copeland claim there moves to the literal
    # xfail below; the plain fair-bets violation at the same pair stands.
    assert violated_at(run_check(Axiom.RCS, Method("fb"), PairWitness(*EXAMPLE_5)), (0, 1))
    witness_7 = ChangedPairWitness(*EXAMPLE_7, EXAMPLE_7_CHANGED_PAIR)
    for method in (
        Method("grs", F(1, 4)),
        Method("ls"),
        Method("fb"),
        Method("dfb"),
        Method("cfb"),
    ):
        assert violated_at(run_check(Axiom.IIR, method, witness_7), (0, 1))
    witness_8 = ChangedPairWitness(*EXAMPLE_8, EXAMPLE_8_CHANGED_PAIR)
    for key in ("fb", "dfb", "cfb"):
        assert violated_at(run_check(Axiom.IIR, Method(key), witness_8), (0, 1))
    assert run_check(Axiom.IIM, Method("score"), witness_7).satisfied

    # Exit statuses: 1 violated, 0 satisfied, 2 usage, 3 precondition.
    paths = {}
    for name, problem in (
        ("2a", EXAMPLE_2[0]), ("2b", EXAMPLE_2[1]),
        ("7a", EXAMPLE_7[0]), ("7b", EXAMPLE_7[1]),
        ("1", EXAMPLE_1),
    ):
        target = tmp_path / f"ex{name}.txt"
        target.write_text(render_matrix(problem), encoding="utf-8")
        paths[name] = str(target)
    assert cli.main(["audit", "--axiom", "CS", "--method", "ls", paths["2a"], paths["2b"]]) == 1
    assert cli.main(["audit", "--axiom", "IIM", "--method", "score", paths["7a"], paths["7b"]]) == 0
    assert cli.main(["audit", "--axiom", "CS", "--method", "ls", paths["2a"]]) == 2
    assert cli.main(["audit", "--axiom", "INV", "--method", "fb", paths["1"]]) == 3


def test_criterion_5_exact_identity_suite():
    rng = random.Random(21)
    pool = problem_pool(20260813, 200)
    assert len(pool) == 200
    eps = F(1, 2)
    connected = irreducible = 0
    for p in pool:
        d = derive(p)
        n = p.size
        mn = d.max_matches * n
        s = score(p).values
        assert sum(s) == 0
        assert score(negate(p)).values == tuple(-v for v in s)

        x = generalized_row_sum(p, eps).values
        lx = mat_vec(d.laplacian, x)
        assert tuple(xi + eps * li for xi, li in zip(x, lx)) == tuple(
            (1 + eps * mn) * si for si in s
        )
        assert sum(x) == 0
        assert generalized_row_sum(negate(p), eps).values == tuple(-v for v in x)

        partner = random_same_matches(rng, p)
        assert score(sum_problems(p, partner)).values == tuple(
            a + b for a, b in zip(s, score(partner).values)
        )
        total = sum_problems(p, partner)
        x_partner = generalized_row_sum(partner, eps).values
        assert generalized_row_sum(total, eps / 2).values == tuple(
            a + b for a, b in zip(x, x_partner)
        )

        if is_connected(p):
            connected += 1
            q = least_squares(p).values
            assert mat_vec(d.laplacian, q) == s
            assert sum(q) == 0
            assert least_squares(negate(p)).values == tuple(-v for v in q)
            q_partner = least_squares(partner).values
            assert least_squares(total).values == tuple(
                (a + b) / 2 for a, b in zip(q, q_partner)
            )

        if is_irreducible(p):
            irreducible += 1
            fb = fair_bets(p).values
            losses = tuple(sum(p.tournament[j][i] for j in range(n)) for i in range(n))
            assert all(v > 0 for v in fb)
            assert tuple(
                sum(p.tournament[i][j] * fb[j] for j in range(n)) - losses[i] * fb[i]
                for i in range(n)
            ) == (F(0),) * n
            assert sum(fb) == 1
            dfb = dual_fair_bets(p).values
            assert sum(dfb) == -1
            assert dfb == tuple(-v for v in fair_bets(negate(p)).values)
            cfb = copeland_fair_bets(p).values
            assert cfb == tuple(a + b for a, b in zip(fb, dfb))
            assert sum(cfb) == 0
            assert copeland_fair_bets(negate(p)).values == tuple(-v for v in cfb)

        images = list(range(n))
        rng.shuffle(images)
        sigma = Permutation(tuple(images))
        moved = permute(p, sigma)
        handles = [Method("score"), Method("grs", eps)]
        if is_connected(p):
            handles.append(Method("ls"))
        if is_irreducible(p):
            handles.extend([Method("fb"), Method("dfb"), Method("cfb")])
        for method in handles:
            before = method.rate(p).values
            after = method.rate(moved).values
            assert all(after[sigma(i)] == before[i] for i in range(n))

    # the guards above must not have skipped the bulk of the pool
    assert connected >= 150
    assert irreducible >= 100


def test_criterion_6_limit_behaviour_on_example_1():
    s = score(EXAMPLE_1).values
    x_small = generalized_row_sum(EXAMPLE_1, F(1, 100)).values
    assert max(abs(a - b) for a, b in zip(x_small, s)) <= F(4, 100)
    mn = derive(EXAMPLE_1).max_matches * EXAMPLE_1.size
    q = least_squares(EXAMPLE_1).values
    x_large = generalized_row_sum(EXAMPLE_1, F(10**6)).values
    assert max(abs(a / mn - b) for a, b in zip(x_large, q)) <= F(1, 10_000)


def test_criterion_7_round_robin_collapse():
    rng = random.Random(77)
    pool = [random_round_robin(rng, rng.choice((3, 4, 5))) for _ in range(100)]
    for p in pool:
        mn = derive(p).max_matches * p.size
        s = score(p).values
        for eps in (F(1, 7), F(1), F(3)):
            assert generalized_row_sum(p, eps).values == s
        assert least_squares(p).values == tuple(v / mn for v in s)

    methods = (Method("grs", F(1, 4)), Method("grs", REASONABLE), Method("ls"))
    by_size = {}
    for p in pool:
        by_size.setdefault(p.size, []).append(p)
    for group in by_size.values():
        for a, b in zip(group, group[1:]):
            witness = PairWitness(a, b)
            for method in methods:
                assert run_check(Axiom.CS, method, witness).satisfied
                assert run_check(Axiom.EP, method, witness).satisfied
    for p in pool[:40]:
        witness = PairWitness(p, random_same_matches(rng, p))
        for method in methods:
            assert run_check(Axiom.RCS, method, witness).satisfied
    edited_checked = 0
    for p in pool:
        if p.size < 4 or edited_checked >= 25:
            continue
        m = derive(p).matches[0][1]
        splits = [F(k, 2) for k in range(2 * m + 1) if F(k, 2) != p.tournament[0][1]]
        new_win = rng.choice(splits)
        rows = [list(row) for row in p.tournament]
        rows[0][1], rows[1][0] = new_win, m - new_win
        edited = RankingProblem(p.labels, tuple(tuple(row) for row in rows))
        witness = ChangedPairWitness(p, edited, (0, 1))
        for method in methods:
            assert run_check(Axiom.IIM, method, witness).satisfied
            assert run_check(Axiom.IIR, method, witness).satisfied
        edited_checked += 1
    assert edited_checked == 25


def test_criterion_8_search_soundness_and_rediscovery():
    rr4 = SearchConfig(object_counts=(4,), max_matches=1, domain="roundrobin")
    ep = search(Method("fb"), Axiom.EP, rr4)
    assert ep.found
    for hit in ep.hits:
        assert not run_check(Axiom.EP, Method("fb"), hit.witness).satisfied
    cs = search(Method("score"), Axiom.CS, rr4)
    assert not cs.found
    assert cs.exhausted

    examined = 0
    probes = (
        (Axiom.EP, Method("fb")),
        (Axiom.INV, Method("fb")),
        (Axiom.CS, Method("ls")),
        (Axiom.RCS, Method("cfb")),
        (Axiom.IIM, Method("grs", F(1, 4))),
    )
    for axiom, method in probes:
        config = SearchConfig(
            object_counts=(3, 4),
            max_matches=2,
            mode="random",
            seed=8,
            budget=2_100,
            limit=10_000,
        )
        result = search(method, axiom, config)
        assert result.examined == 2_100
        examined += result.examined
        for hit in result.hits:
            assert not run_check(axiom, method, hit.witness).satisfied
    assert examined >= 10_000


def test_criterion_9_precondition_errors():
    disconnected = RankingProblem(
        ("a", "b", "c", "d"),
        ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)),
    )
    with pytest.raises(DisconnectedProblem):
        least_squares(disconnected)
    with pytest.raises(ReducibleProblem):
        fair_bets(EXAMPLE_1)
    two = RankingProblem(("a", "b"), ((0, 1), (0, 0)))
    with pytest.raises(UndefinedForSmallN):
        reasonable_epsilon(two)


@pytest.mark.xfail(
    strict=True,
    reason="two grid headers in the example 1 table do not name the parameter"
    " generating their cells (the 1/4 column holds the 1/3 solution and the"
    " 1/3 column the 4/5 solution)",
)
def test_criterion_1_grid_headers_taken_literally():
    for header, _, cells in EXAMPLE_1_TABLE:
        x = generalized_row_sum(EXAMPLE_1, parse_rational(header)).values
        assert tuple(format_decimal4(v) for v in x) == cells


@pytest.mark.xfail(
    strict=True,
    reason="six stated example 5 entries are mutually inconsistent (a uniform"
    " dual column beside a non-uniform primal one); recomputing from the"
    " definitions gives different values",
)
def test_criterion_3_example_5_table_taken_literally():
    assert reproduce_example(5).ok


@pytest.mark.xfail(
    strict=True,
    reason="with the example 5 dual column recomputed, the premise fails at"
    " (X1, X2); the genuine Copeland violation is the example 6 one and the"
    " plain fair-bets violation on example 5 stands",
)
def test_criterion_4_rcs_cfb_on_example_5_taken_literally():
    report = run_check(Axiom.RCS, Method("cfb"), PairWitness(*EXAMPLE_5))
    assert not report.satisfied
