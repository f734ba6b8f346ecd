"""Unit tests for the stability solver pipelines.

The A2 case with highest weight three times the first fundamental weight is
small enough to solve by hand, and the expected rays, cells, states, and
destabilizing witnesses below were derived that way before being frozen here.
"""

import pytest
from hypothesis import given, settings, strategies as st

from gitloci.errors import ParseError, RankMismatchError
from gitloci.exactgeom import dot
from gitloci.gitsolver import (
    GITProblem,
    classify_torus,
    hm_mu,
    new_problem,
    pairing_vector,
    problem_from_weights,
    solve_all,
    solve_non_stable,
    solve_strictly_polystable,
    solve_unstable,
    state_of,
)
from gitloci.repsupport import parse_highest_weight, weight_support
from gitloci.rootdata import (
    OneParameterSubgroup,
    make_group,
    one_param_subgroup,
    pairing,
    weight,
    weyl_elements,
)

A2 = make_group("A2")
B2 = make_group("B2")
G2 = make_group("G2")

NS7 = frozenset({(-3, 3), (-2, 1), (-1, 2), (0, 0), (1, 1), (2, -1), (3, 0)})
NS6 = frozenset({(-1, 2), (0, 0), (1, -2), (1, 1), (2, -1), (3, 0)})
US5 = frozenset({(-3, 3), (-1, 2), (1, 1), (2, -1), (3, 0)})
PS1 = frozenset({(0, 0)})
PS3 = frozenset({(-2, 1), (0, 0), (2, -1)})

relaxed = settings(max_examples=50, deadline=None, derandomize=True)


def a2_cubic_problem(**kwargs):
    return new_problem(A2, parse_highest_weight(A2, "3,0,0"), **kwargs)


def test_pairing_vector_golden_values():
    assert pairing_vector(A2, (-3, 3)) == (-3, 3)
    assert pairing_vector(A2, (1, 1)) == (3, 3)
    assert pairing_vector(A2, (0, 0)) == (0, 0)
    assert pairing_vector(B2, (1, 0)) == (2, 2)


@relaxed
@given(
    st.sampled_from(["A2", "B2", "G2"]),
    st.lists(st.integers(-4, 4), min_size=2, max_size=2).map(tuple),
    st.lists(st.integers(-4, 4), min_size=2, max_size=2).map(tuple),
)
def test_pairing_vector_computes_det_scaled_pairing(name, coeffs, m):
    group = make_group(name)
    if all(v == 0 for v in m):
        return
    u = pairing_vector(group, coeffs)
    lam = OneParameterSubgroup(group, m)
    assert dot(u, m) == group.cartan_det * pairing(weight(group, coeffs), lam)


def test_a2_cubic_rays_and_cells():
    problem = a2_cubic_problem()
    assert [r.point for r in problem.rays()] == [(0, 1), (1, 0), (1, 1)]
    assert [c.point for c in problem.cells()] == [(1, 2), (2, 1)]


def test_a2_cubic_maximal_nonstable_states():
    states = solve_non_stable(a2_cubic_problem())
    assert [s.kind for s in states] == ["nonstable", "nonstable"]
    assert [s.size for s in states] == [7, 6]
    assert states[0].coeff_set() == NS7
    assert states[0].witness.coeffs == (0, 1)
    assert states[1].coeff_set() == NS6
    assert states[1].witness.coeffs == (1, 0)


def test_a2_cubic_maximal_unstable_states():
    states = solve_unstable(a2_cubic_problem())
    assert len(states) == 1
    assert states[0].kind == "unstable"
    assert states[0].coeff_set() == US5
    assert states[0].witness.coeffs == (1, 2)


def test_a2_cubic_strictly_polystable_states():
    states = solve_strictly_polystable(a2_cubic_problem())
    assert [s.kind for s in states] == ["strictly_polystable", "strictly_polystable"]
    assert [s.size for s in states] == [1, 3]
    assert states[0].coeff_set() == PS1
    assert states[1].coeff_set() == PS3
    assert states[1].witness.coeffs == (0, 1)


def test_every_emitted_state_is_realized_by_its_own_witness():
    problem = a2_cubic_problem()
    solution = solve_all(problem)
    for state, mode in (
        [(s, ">=0") for s in solution.nonstable]
        + [(s, ">0") for s in solution.unstable]
        + [(s, "=0") for s in solution.strictly_polystable]
    ):
        realized = state_of(problem, state.witness, mode)
        assert frozenset(w.coeffs for w in realized) == state.coeff_set()


def test_state_of_golden_slices():
    problem = a2_cubic_problem()
    lam = OneParameterSubgroup(A2, (0, 1))
    at_least = frozenset(w.coeffs for w in state_of(problem, lam, ">=0"))
    strictly = frozenset(w.coeffs for w in state_of(problem, lam, ">0"))
    vanishing = frozenset(w.coeffs for w in state_of(problem, lam, "=0"))
    assert at_least == NS7
    assert vanishing == PS3
    assert strictly == NS7 - PS3
    with pytest.raises(ValueError):
        state_of(problem, lam, ">=1")
    with pytest.raises(RankMismatchError):
        state_of(problem, OneParameterSubgroup(B2, (1, 0)), ">=0")


def test_hilbert_mumford_values_against_hand_computation():
    problem = a2_cubic_problem()
    lam = one_param_subgroup(A2, (0, 1), "fundamental-coweight")
    assert hm_mu(problem, list(problem.support), lam) == -2
    assert hm_mu(problem, list(problem.support), one_param_subgroup(A2, (1, 1), "fundamental-coweight")) == -3
    seven = [w for w in problem.support if w.coeffs in NS7]
    assert hm_mu(problem, seven, lam) == 0
    with pytest.raises(ValueError):
        hm_mu(problem, [], lam)
    with pytest.raises(ValueError):
        hm_mu(problem, [weight(A2, (9, 9))], lam)


def test_unstable_states_nest_inside_nonstable_states():
    for group, spec in ((A2, "3,0"), (B2, "2,0"), (B2, "3,0"), (G2, "1,0")):
        problem = new_problem(group, parse_highest_weight(group, spec))
        solution = solve_all(problem)
        for unstable in solution.unstable:
            assert any(
                unstable.coeff_set() <= nonstable.coeff_set()
                for nonstable in solution.nonstable
            )


def test_nonstable_listing_is_sorted_largest_first():
    for group, spec in ((B2, "3,0"), (B2, "4,0")):
        states = solve_non_stable(new_problem(group, parse_highest_weight(group, spec)))
        sizes = [s.size for s in states]
        assert sizes == sorted(sizes, reverse=True)
        assert len({s.coeff_set() for s in states}) == len(states)


def test_no_emitted_state_contains_another_of_its_kind():
    for solver in (solve_non_stable, solve_unstable):
        states = solver(new_problem(B2, parse_highest_weight(B2, "3,0")))
        for a in states:
            for b in states:
                if a is not b:
                    assert not a.coeff_set() <= b.coeff_set()


def _weyl_set_images(group, coeff_set):
    return {
        frozenset(element.apply_to_weight_coeffs(c) for c in coeff_set)
        for element in weyl_elements(group)
    }


def test_weyl_optimisation_keeps_one_state_per_orbit():
    for group, spec in ((A2, "3,0"), (B2, "3,0"), (G2, "1,0")):
        plain = new_problem(group, parse_highest_weight(group, spec))
        reduced = new_problem(group, parse_highest_weight(group, spec), weyl_optimisation=True)
        for solve in (solve_non_stable, solve_unstable):
            full_list = solve(plain)
            kept = []
            for state in full_list:
                images = _weyl_set_images(group, state.coeff_set())
                if not any(prior.coeff_set() in images for prior in kept):
                    kept.append(state)
            assert [s.coeff_set() for s in solve(reduced)] == [s.coeff_set() for s in kept]


def test_strictly_polystable_states_are_pairwise_weyl_inequivalent():
    for group, spec in ((A2, "3,0"), (B2, "3,0")):
        states = solve_strictly_polystable(new_problem(group, parse_highest_weight(group, spec)))
        for i, a in enumerate(states):
            images = _weyl_set_images(group, a.coeff_set())
            for b in states[i + 1:]:
                assert b.coeff_set() not in images


def test_trivial_representation_degenerates():
    problem = new_problem(A2, parse_highest_weight(A2, "0,0"))
    solution = solve_all(problem)
    assert [s.coeff_set() for s in solution.nonstable] == [frozenset({(0, 0)})]
    assert solution.unstable == ()
    assert [s.coeff_set() for s in solution.strictly_polystable] == [frozenset({(0, 0)})]


def test_problem_from_weights_runs_the_same_pipelines():
    rows = [(1, 0), (-1, 1), (0, -1), (0, 0)]
    problem = problem_from_weights(A2, rows)
    solution = solve_all(problem)
    assert solution.nonstable
    for state in solution.nonstable:
        assert state.coeff_set() <= set(rows)


def test_problem_rejects_mismatched_group_and_support():
    support = weight_support(B2, weight(B2, (1, 0)))
    with pytest.raises(RankMismatchError):
        GITProblem(A2, support)


def test_solve_all_locus_selection():
    problem = a2_cubic_problem()
    solution = solve_all(problem, loci="unstable")
    assert solution.nonstable is None
    assert solution.strictly_polystable is None
    assert len(solution.unstable) == 1
    assert set(solution.timings) == {"unstable"}
    both = solve_all(problem, loci="nonstable, polystable")
    assert both.unstable is None
    assert both.nonstable is not None and both.strictly_polystable is not None
    with pytest.raises(ParseError):
        solve_all(problem, loci="nonstable,bogus")
    with pytest.raises(ParseError):
        solve_all(problem, loci="")


def test_classification_of_the_generic_point_is_stable():
    problem = a2_cubic_problem()
    result = classify_torus(problem, list(problem.support))
    assert result.verdict == "T-stable"
    assert result.certificate is None


def test_classification_of_an_unstable_support():
    problem = a2_cubic_problem()
    points = [w for w in problem.support if w.coeffs in US5]
    result = classify_torus(problem, points)
    assert result.verdict == "T-unstable"
    assert hm_mu(problem, points, result.certificate) > 0


def test_classification_of_a_weyl_translate_is_unchanged():
    problem = a2_cubic_problem()
    element = weyl_elements(A2)[3]
    moved_coeffs = {element.apply_to_weight_coeffs(c) for c in US5}
    points = [w for w in problem.support if w.coeffs in moved_coeffs]
    assert len(points) == 5
    result = classify_torus(problem, points)
    assert result.verdict == "T-unstable"
    assert hm_mu(problem, points, result.certificate) > 0


def test_classification_of_the_origin_is_semistable_but_not_stable():
    problem = a2_cubic_problem()
    points = [w for w in problem.support if w.is_zero]
    result = classify_torus(problem, points)
    assert result.verdict == "T-non-stable-semistable"
    assert hm_mu(problem, points, result.certificate) == 0


def test_classification_of_a_regular_orbit_is_stable():
    problem = a2_cubic_problem()
    points = [w for w in problem.support if w.coeffs in {(1, 1), (-1, 2), (2, -1), (-2, 1), (1, -2), (-1, -1)}]
    assert len(points) == 6
    assert classify_torus(problem, points).verdict == "T-stable"


def test_classification_certificates_are_primitive():
    problem = a2_cubic_problem()
    points = [w for w in problem.support if w.coeffs in US5]
    certificate = classify_torus(problem, points).certificate
    assert certificate.coeffs == certificate.primitive().coeffs
