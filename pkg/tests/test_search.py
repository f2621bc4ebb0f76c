import itertools

import pytest

from rtlab.graphs import GraphBuilder
from rtlab.search import SearchObjective, SearchProblem, solve, verify_witness
from rtlab.triangles import TrianglePattern, find_rainbow

D, T = TrianglePattern.DIRECTED, TrianglePattern.TRANSITIVE
TOTAL, MINC = SearchObjective.TOTAL, SearchObjective.MIN_COLOR

# frozen outputs of the exhaustive pair-state enumeration below (n=3, c=3)
GOLDEN_N3 = {
    (False, D): (12, 4),
    (False, T): (12, 4),
    (True, D): (9, 3),
    (True, T): (9, 3),
}
# frozen solver outputs at n=4, c=3, spot-checked against hand witnesses
GOLDEN_N4_TOTAL = {(False, D): 24, (False, T): 24, (True, D): 18, (True, T): 15}


def _oracle_sdr(m1, m2, m3):
    for c1 in range(3):
        if not m1 >> c1 & 1:
            continue
        for c2 in range(3):
            if c2 == c1 or not m2 >> c2 & 1:
                continue
            for c3 in range(3):
                if c3 not in (c1, c2) and m3 >> c3 & 1:
                    return True
    return False


def _oracle_optima(oriented, pattern):
    """Max total and max min-color over ALL rainbow-free states at n=3, c=3."""
    states = [(f, b) for f in range(8) for b in range(8) if not (oriented and f & b)]
    best_total, best_min = -1, -1
    for s01, s02, s12 in itertools.product(states, repeat=3):
        m = {}
        m[0, 1], m[1, 0] = s01
        m[0, 2], m[2, 0] = s02
        m[1, 2], m[2, 1] = s12
        if pattern is D:
            bad = _oracle_sdr(m[0, 1], m[1, 2], m[2, 0]) or _oracle_sdr(
                m[0, 2], m[2, 1], m[1, 0]
            )
        else:
            bad = any(
                _oracle_sdr(m[u, v], m[v, w], m[u, w])
                for u, v, w in itertools.permutations(range(3))
            )
        if bad:
            continue
        counts = [sum(m[p] >> i & 1 for p in m) for i in range(3)]
        best_total = max(best_total, sum(counts))
        best_min = max(best_min, min(counts))
    return best_total, best_min


def test_oracle_agrees_with_frozen_golden_values():
    for (oriented, pattern), expected in GOLDEN_N3.items():
        assert _oracle_optima(oriented, pattern) == expected, (oriented, pattern)


def test_solver_matches_golden_values_n3():
    for (oriented, pattern), (want_total, want_min) in GOLDEN_N3.items():
        rt = solve(SearchProblem(3, 3, pattern, oriented=oriented))
        rm = solve(SearchProblem(3, 3, pattern, oriented=oriented, objective=MINC))
        assert (rt.value, rm.value) == (want_total, want_min), (oriented, pattern)
        assert rt.exhaustive and rm.exhaustive


def test_witnesses_certify_their_values():
    for oriented, pattern in GOLDEN_N3:
        for objective in (TOTAL, MINC):
            problem = SearchProblem(3, 3, pattern, oriented=oriented, objective=objective)
            result = solve(problem)
            assert result.witness is not None
            assert verify_witness(problem, result.witness, result.value)
            assert find_rainbow(result.witness, pattern) is None


def test_no_rainbow_possible_below_three_colors():
    for c in (1, 2):
        for pattern in (D, T):
            r = solve(SearchProblem(3, c, pattern))
            assert r.value == 6 * c  # every slot fillable
            r = solve(SearchProblem(3, c, pattern, oriented=True))
            assert r.value == 3 * c


def test_two_vertices_leave_no_triangles():
    for pattern in (D, T):
        assert solve(SearchProblem(2, 3, pattern)).value == 6
        assert solve(SearchProblem(2, 3, pattern, oriented=True)).value == 3
    assert solve(SearchProblem(1, 3, D)).value == 0
    assert solve(SearchProblem(0, 3, D)).value == 0


def test_n4_totals_frozen():
    for (oriented, pattern), want in GOLDEN_N4_TOTAL.items():
        problem = SearchProblem(4, 3, pattern, oriented=oriented)
        result = solve(problem)
        assert result.value == want, (oriented, pattern)
        assert result.exhaustive
        assert verify_witness(problem, result.witness, result.value)


def test_n4_min_color_directed():
    problem = SearchProblem(4, 3, D, objective=MINC)
    result = solve(problem)
    assert result.value == 8
    assert verify_witness(problem, result.witness, result.value)


def test_min_color_never_beats_average():
    for (oriented, pattern), (want_total, want_min) in GOLDEN_N3.items():
        assert want_min <= want_total // 3


def test_oriented_never_beats_unrestricted():
    for pattern in (D, T):
        free = solve(SearchProblem(3, 3, pattern)).value
        restricted = solve(SearchProblem(3, 3, pattern, oriented=True)).value
        assert restricted <= free


def test_budget_reports_non_exhaustive():
    problem = SearchProblem(4, 3, D)
    capped = solve(problem, budget=2000)
    assert not capped.exhaustive
    assert capped.nodes <= 2001
    assert capped.value <= 24
    if capped.witness is not None:
        assert verify_witness(problem, capped.witness, capped.value)


def test_symmetry_flags_do_not_change_values():
    for flags in ((False, False), (True, False), (True, True), (False, True)):
        color_sym, vertex_sym = flags
        r = solve(SearchProblem(3, 3, D), color_symmetry=color_sym, vertex_symmetry=vertex_sym)
        assert r.value == 12, flags
        r = solve(
            SearchProblem(3, 3, T, objective=MINC),
            color_symmetry=color_sym,
            vertex_symmetry=vertex_sym,
        )
        assert r.value == 4, flags


def test_symmetry_pruning_reduces_nodes():
    plain = solve(SearchProblem(3, 3, D), color_symmetry=False)
    pruned = solve(SearchProblem(3, 3, D), color_symmetry=True)
    assert pruned.nodes < plain.nodes
    assert pruned.value == plain.value


def test_verify_witness_rejects_bad_certificates():
    problem = SearchProblem(3, 3, D)
    result = solve(problem)
    good = result.witness
    assert not verify_witness(problem, good, result.value + 1)
    assert not verify_witness(SearchProblem(4, 3, D), good, result.value)
    assert not verify_witness(SearchProblem(3, 3, D, oriented=True), good, 1)
    bad = GraphBuilder(3, 3)
    bad.add(1, 0, 1).add(2, 1, 2).add(3, 2, 0)  # a rainbow directed triangle
    assert not verify_witness(problem, bad.build(), 0)


def test_problem_validation():
    with pytest.raises(ValueError):
        SearchProblem(-1, 3, D)
    with pytest.raises(ValueError):
        SearchProblem(3, 0, D)
    with pytest.raises(ValueError):
        SearchProblem(3, 9, D)
