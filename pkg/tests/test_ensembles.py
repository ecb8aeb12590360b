import pytest
from hypothesis import given, settings, strategies as st

from dycktri import (MatchingEnsemble, check_axioms, dyck, dyck_ensemble, dyck_matching,
                     ensemble_from_triangulation, extended_dyck, extended_dyck_ensemble,
                     extended_dyck_matching, restrict_ensemble, staircase,
                     triangulation_from_ensemble)
from dycktri.core import Simplex, restrict_to_face
from dycktri.ensembles import all_supports, matchings_in, perfect_matchings, support_of
from dycktri.errors import AxiomError, DomainError, NotATriangulationError
from dycktri.extension import collect_ensemble, flipped_extended_boundary

from oracles import all_tables, matchings_on, supports


def fs(*e):
    return frozenset(e)


def nc_wi_orbit_oracle(n):
    """Matchings that are non-crossing and weakly increasing, plus all cyclic shifts."""
    base = set()
    for rows, cols in supports(n, n):
        for M in matchings_on(rows, cols):
            pairs = sorted(M)
            nc = all(a[1] < b[1] for a, b in zip(pairs, pairs[1:]))
            wi = all(i <= j for i, j in pairs)
            if nc and wi:
                base.add(M)
    out = set()
    for M in base:
        for shift in range(n):
            out.add(frozenset(((i - 1 + shift) % n + 1, (j - 1 + shift) % n + 1) for i, j in M))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dyck_ensemble_matches_the_nc_wi_orbits(n):
    E = dyck_ensemble(n)
    assert set(E.table.values()) == nc_wi_orbit_oracle(n)
    assert len(E) == sum(1 for _ in all_supports(n, n))


def test_dyck_matching_examples():
    assert dyck_matching([1, 2, 5], [2, 4, 5]) == {(1, 2), (2, 4), (5, 5)}
    assert dyck_matching([3], [1]) == {(3, 1)}
    # the rotation picks the unique orbit member on the support
    M = dyck_matching([4, 5, 8], [2, 5, 7])
    assert M == {(4, 5), (5, 7), (8, 2)}
    assert M in nc_wi_orbit_oracle(8)


def face_matching(T, rows, cols):
    """The full-support matching inside the restriction of T to rows x cols."""
    face = restrict_to_face(T, rows, cols)
    found = {M for s in face.simplices for M in matchings_in(s.edges)
             if support_of(M) == (tuple(rows), tuple(cols))}
    assert len(found) == 1
    return found.pop()


def test_rotation_rule_agrees_with_faces_of_large_triangulations():
    assert face_matching(dyck(8), [4, 5, 8], [2, 5, 7]) == dyck_matching([4, 5, 8], [2, 5, 7])
    assert face_matching(dyck(5), [1, 2, 5], [2, 4, 5]) == {(1, 2), (2, 4), (5, 5)}
    M = extended_dyck_matching(7, [1, 5, 6, 8], [3, 4, 5, 7])
    assert M == {(1, 3), (5, 5), (6, 7), (8, 4)}
    assert face_matching(extended_dyck(7), [1, 5, 6, 8], [3, 4, 5, 7]) == M


def test_extended_dyck_matching_examples():
    for j in range(1, 4):
        assert extended_dyck_matching(3, [4], [j]) == {(4, j)}
    with pytest.raises(DomainError):
        extended_dyck_matching(3, [1, 2], [1])


def test_extended_matching_agrees_with_triangulation():
    for n in range(1, 5):
        assert extended_dyck_ensemble(n) == ensemble_from_triangulation(extended_dyck(n))


def test_staircase_ensemble_is_all_non_crossing_matchings():
    for m, n in [(3, 3), (4, 2), (3, 4)]:
        E = ensemble_from_triangulation(staircase(m, n))
        for key, M in E.items():
            pairs = sorted(M)
            assert all(a[1] < b[1] for a, b in zip(pairs, pairs[1:]))
        assert len(E) == sum(1 for _ in all_supports(m, n))


def test_single_tree_ensemble():
    tree = Simplex(2, 2, [(1, 1), (1, 2), (2, 2)])
    found = set(matchings_in(tree.edges))
    assert found == {fs((1, 1)), fs((1, 2)), fs((2, 2)), fs((1, 1), (2, 2))}


def test_from_matchings_rejects_conflicts():
    with pytest.raises(NotATriangulationError) as info:
        MatchingEnsemble.from_matchings(2, 2, [fs((1, 1), (2, 2)), fs((1, 2), (2, 1))])
    assert len(info.value.witnesses) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_axioms_pass_for_dyck_family(n):
    assert check_axioms(dyck_ensemble(n)).ok
    assert check_axioms(extended_dyck_ensemble(n)).ok


def test_trivial_ensemble():
    E = MatchingEnsemble(1, 1, {((1,), (1,)): fs((1, 1))})
    assert check_axioms(E)
    assert triangulation_from_ensemble(E) == staircase(1, 1)


def test_flipped_boundary_fails_linkage_on_the_cycle():
    report = check_axioms(collect_ensemble(flipped_extended_boundary(3)))
    assert report.sa and report.ca and not report.la
    M, v = report.first_la_failure()
    assert M == {(1, 2), (2, 3), (3, 1)}
    assert v == ("row", 4)


def test_axiom_report_catches_missing_and_wrong_entries():
    E = dyck_ensemble(3)
    table = dict(E.table)
    del table[(1, 2), (1, 2)]
    report = check_axioms(MatchingEnsemble(3, 3, table))
    assert not report.sa and report.sa_missing
    table = dict(E.table)
    table[(1,), (1,)] = fs((1, 2))
    assert check_axioms(MatchingEnsemble(3, 3, table)).sa_mismatched
    with pytest.raises(AxiomError):
        triangulation_from_ensemble(MatchingEnsemble(3, 3, table))


def test_exhaustive_tables_on_the_prism():
    # 2^3 full-support choices on the 3x2 prism; the valid ones are its 6 triangulations
    valid = []
    for table in all_tables(3, 2):
        E = MatchingEnsemble(3, 2, table)
        if check_axioms(E):
            valid.append(E)
    assert len(valid) == 6
    for E in valid:
        T = triangulation_from_ensemble(E)
        assert ensemble_from_triangulation(T) == E


@pytest.mark.parametrize("T", [staircase(m, n) for m in range(1, 5) for n in range(1, 5)]
                         + [dyck(n) for n in range(1, 5)] + [extended_dyck(n) for n in range(1, 4)],
                         ids=lambda T: f"{T.m}x{T.n}-{len(T)}")
def test_round_trip(T):
    E = ensemble_from_triangulation(T)
    assert check_axioms(E)
    assert triangulation_from_ensemble(E) == T


def test_reconstruction_from_formula_ensembles():
    assert triangulation_from_ensemble(dyck_ensemble(3)) == dyck(3)
    assert triangulation_from_ensemble(extended_dyck_ensemble(3)) == extended_dyck(3)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(0, 4), st.integers(1, 5))
def test_rotation_invariance(n, shift, size):
    # shifting a support shifts the chosen matching
    size = min(size, n)
    rows = list(range(1, size + 1))
    cols = list(range(n - size + 1, n + 1))
    M = dyck_matching(rows, cols)

    def rot(k):
        return (k - 1 + shift) % n + 1

    assert dyck_matching(map(rot, rows), map(rot, cols)) == {(rot(i), rot(j)) for i, j in M}


def test_restrict_ensemble_keeps_inner_supports():
    E = restrict_ensemble(dyck_ensemble(4), [1, 2], [1, 2, 3])
    assert all(set(k[0]) <= {1, 2} and set(k[1]) <= {1, 2, 3} for k in E.table)
    assert len(E) == 2 * 3 + 3


def test_perfect_matchings_count():
    assert sum(1 for _ in perfect_matchings(((1, 2, 3), (1, 2, 3)))) == 6
