from itertools import combinations

import networkx as nx
import pandas as pd
import pytest

from BoundVerifier import (
    SWEEP_COLUMNS,
    ChemGraphEnumerator,
    EnumerationLimitError,
    check_identities,
    enumerate_connected_chemical,
    m_values,
    parse_n_range,
    sweep,
    verify_bound,
    verify_lemma1,
)
from ChemGraph import canonical_code, degree_vector
from DegreeFunctions import SLI_THRESHOLD, DegreeFunction, Family, xi_pair
from ExtremalGraphs import construct_extremal
from graphfiles import reader as graphreader
from graphfiles import writer as graphwriter
from TheoremBounds import Direction, InfeasibleParametersError, TheoremNotApplicableError, feasible_m_range

SOUNDNESS_FUNCTIONS = [
    DegreeFunction.power(2),
    DegreeFunction.power(3),
    DegreeFunction.power(0.5),
    DegreeFunction.sum_exdeg(2),
    DegreeFunction.sum_lodeg(1),
    DegreeFunction.ln_mult_zagreb1(-1),
    DegreeFunction.ln_mult_zagreb2(1),
]


def _oracle_class_count(n, m):
    """Isomorphism classes of connected labelled graphs with max degree 4, via networkx isomorphism tests."""
    representatives = []
    for edges in combinations(combinations(range(n), 2), m):
        g = nx.Graph(edges)
        g.add_nodes_from(range(n))
        if max(d for _, d in g.degree) > 4 or not nx.is_connected(g):
            continue
        if not any(nx.is_isomorphic(g, h) for h in representatives):
            representatives.append(g)
    return len(representatives)


@pytest.mark.parametrize("n, m, expected", [(5, 4, 3), (5, 10, 1), (2, 1, 1), (1, 0, 1), (4, 3, 2)])
def test_enumeration_counts(enumerator, n, m, expected):
    assert enumerator.count(n, m) == expected
    assert len(list(enumerate_connected_chemical(n, m, enumerator))) == expected


def test_all_connected_graphs_on_five_vertices(enumerator):
    assert sum(enumerator.count(5, m) for m in feasible_m_range(5)) == 21


@pytest.mark.parametrize("n, m", [(5, m) for m in feasible_m_range(5)] + [(6, 5), (6, 6), (6, 7), (6, 12)])
def test_enumeration_matches_brute_force(enumerator, n, m):
    assert enumerator.count(n, m) == _oracle_class_count(n, m)


@pytest.mark.slow
def test_enumerated_codes_are_canonical_and_round_trip(enumerator):
    for n in range(2, 9):
        for m in feasible_m_range(n):
            codes = enumerator.codes(n, m)
            assert codes == sorted(set(codes))
            for code in codes:
                G = graphreader.parse_graph6(code.decode("ascii"))
                assert (G.n, G.m) == (n, m)
                assert max(G.degrees) <= 4
                assert graphwriter.to_graph6(G) == code
                assert canonical_code(G) == code


@pytest.mark.slow
def test_worker_count_does_not_change_output(enumerator):
    parallel = ChemGraphEnumerator(workers=4)
    for n, m in [(7, 8), (8, 9)]:
        assert parallel.codes(n, m) == enumerator.codes(n, m)


def test_enumeration_limits(enumerator):
    with pytest.raises(EnumerationLimitError):
        enumerator.count(11, 12)
    with pytest.raises(InfeasibleParametersError):
        enumerator.count(5, 11)


def test_cache_hit_skips_generation(tmp_path, enumerator, monkeypatch):
    first = ChemGraphEnumerator(cache_dir=str(tmp_path))
    codes = first.codes(6, 7)
    assert (tmp_path / "vdfi-n6-m7.g6").is_file()
    assert codes == enumerator.codes(6, 7)

    def no_growing(*args):
        raise AssertionError("cache was not used")

    monkeypatch.setattr(ChemGraphEnumerator, "_grow", no_growing)
    assert ChemGraphEnumerator(cache_dir=str(tmp_path)).codes(6, 7) == codes


def test_non_canonical_cache_is_regenerated(tmp_path, enumerator):
    graphwriter.write_cache(str(tmp_path), 5, 4, [b"DYC", b"DhC", b"Ds_"])  # two labellings of P5
    with pytest.warns(UserWarning):
        assert ChemGraphEnumerator(cache_dir=str(tmp_path)).codes(5, 4) == enumerator.codes(5, 4)


def test_disconnected_cache_record_is_regenerated(tmp_path, enumerator):
    graphwriter.write_cache(str(tmp_path), 5, 4, [b"D??", b"DhC", b"Ds_"])  # D?? is the empty graph
    with pytest.warns(UserWarning, match="invalid"):
        assert ChemGraphEnumerator(cache_dir=str(tmp_path)).codes(5, 4) == enumerator.codes(5, 4)


def test_verify_star_bound(enumerator):
    report = verify_bound(5, 4, DegreeFunction.power(2), enumerator=enumerator)
    assert (report.extremal_value, report.bound_total, report.attained) == (20, 20, True)
    assert report.graph_count == 3
    assert report.attaining_degree_sets == ["{1,4}"]
    assert report.violations == []


def test_verify_bound_not_attained(enumerator):
    report = verify_bound(5, 5, DegreeFunction.power(2), enumerator=enumerator)
    assert (report.extremal_value, report.bound_total, report.attained) == (26, 28, False)
    assert report.attaining_codes == []
    assert report.violations == []
    extremal = [G for G in enumerator.graphs(5, 5) if sum(d * d for d in G.degrees) == 26]
    assert [sorted(G.degrees, reverse=True) for G in extremal] == [[4, 2, 2, 1, 1]]


def test_verify_lower_bound(enumerator):
    report = verify_bound(5, 4, DegreeFunction.power(0.5), enumerator=enumerator)
    assert report.direction == Direction.LOWER_BOUND
    assert report.extremal_value == pytest.approx(6)
    assert report.attained
    assert report.attaining_degree_sets == ["{1,4}"]


@pytest.mark.parametrize("n, m, degree_set", [(6, 5, "{1,2,4}"), (7, 6, "{1,3,4}")])
def test_attaining_degree_sets(enumerator, n, m, degree_set):
    report = verify_bound(n, m, DegreeFunction.power(2), enumerator=enumerator)
    assert report.attained
    assert report.attaining_degree_sets == [degree_set]
    for code in report.attaining_codes:
        counts = degree_vector(graphreader.parse_graph6(code.decode("ascii")))
        assert counts.n2 + counts.n3 == 1


def test_verify_theorem3(enumerator):
    report = verify_bound(5, 4, DegreeFunction.power(2), theorem3=True, enumerator=enumerator)
    assert (report.theorem, report.bound_total, report.extremal_value, report.attained) == (3, 80, 80, True)
    assert report.violations == []


def test_verify_bound_refuses_boundary_functions(enumerator):
    with pytest.raises(TheoremNotApplicableError):
        verify_bound(5, 4, DegreeFunction.power(1), enumerator=enumerator)


@pytest.mark.slow
@pytest.mark.parametrize("f", SOUNDNESS_FUNCTIONS, ids=str)
def test_exhaustive_soundness(enumerator, f):
    for n in range(5, 9):
        for m in feasible_m_range(n):
            report = verify_bound(n, m, f, enumerator=enumerator, identities=True)
            assert report.violations == [], (n, m)
            assert report.identity_violations == [], (n, m)
            solution = construct_extremal(n, m)
            if solution.feasible:
                assert report.attained, (n, m)
                assert canonical_code(solution.witness) in report.attaining_codes
            else:
                assert not report.attained, (n, m)


def test_check_identities(star, path5, cycle5):
    for G in (star, path5, cycle5):
        for f in SOUNDNESS_FUNCTIONS + [DegreeFunction.forgotten_coindex(5)]:
            assert check_identities(G, f) == []


def test_identities_on_small_orders(enumerator):
    for n in range(2, 5):
        for m in feasible_m_range(n):
            for G in enumerator.graphs(n, m):
                for f in SOUNDNESS_FUNCTIONS + [DegreeFunction.forgotten_coindex(n)]:
                    assert check_identities(G, f) == [], (n, m, str(f))


@pytest.mark.parametrize("f", SOUNDNESS_FUNCTIONS, ids=str)
def test_lemma1_for_classified_functions(f):
    assert verify_lemma1(*xi_pair(f), max_total=100)


def test_lemma1_examples():
    assert verify_lemma1(-2, -2, 100)
    assert verify_lemma1(0.08088, 0.06538, 100)
    with pytest.raises(TheoremNotApplicableError):
        verify_lemma1(-1, -10, 100)
    with pytest.raises(ValueError):
        verify_lemma1(-2, -2, 1)


def test_m_rules():
    assert m_values(6, "all") == list(range(5, 13))
    assert m_values(6, "tree") == [5]
    assert m_values(6, "max") == [12]
    assert m_values(6, "offset:2") == [7]
    with pytest.raises(ValueError):
        m_values(6, "offset:x")
    assert list(parse_n_range("5..7")) == [5, 6, 7]
    assert list(parse_n_range("9")) == [9]
    with pytest.raises(ValueError):
        parse_n_range("5-7")


def test_sweep_power(enumerator):
    table = sweep(Family.POWER, [2], range(5, 8), "all", enumerator)
    assert list(table.columns) == SWEEP_COLUMNS
    assert len(table) == sum(len(feasible_m_range(n)) for n in range(5, 8))
    assert (table["violations"] == 0).all()
    assert (table["error"] == "").all()
    assert table["verdict"].unique().tolist() == ["CaseI"]
    row = table[(table["n"] == 5) & (table["m"] == 5)].iloc[0]
    assert (row["bound"], row["extremal"], row["attained"]) == (28, 26, False)


def test_sweep_sum_lodeg_threshold(enumerator):
    table = sweep(Family.SUM_LODEG, [SLI_THRESHOLD + 0.01, SLI_THRESHOLD - 0.01], [5], "tree", enumerator)
    assert table["verdict"].tolist()[0] == "CaseI"
    assert table["verdict"].tolist()[1] != "CaseI"


def test_sweep_boundary_rows_have_no_bound(enumerator):
    table = sweep(Family.POWER, [1], [5, 6], "tree", enumerator)
    assert (table["verdict"] == "Boundary").all()
    assert table["bound"].isna().all()


def test_sweep_records_errors_in_rows(enumerator):
    table = sweep(Family.POWER, [2], [5, 9], "offset:20", enumerator)
    assert len(table) == 2
    assert table["bound"].isna().all()
    assert all("m must lie in" in e for e in table["error"])
    table = sweep(Family.FORGOTTEN_COINDEX, [0], [10, 11], "tree", enumerator, max_enumeration_n=0)
    assert table["verdict"].tolist() == ["Boundary", "CaseI"]
    assert table["bound"].iloc[1] == 360
    assert pd.isna(table["extremal"].iloc[1])
