from fractions import Fraction

import pytest

import jdvkit


def test_half_graph_jdv():
    h6 = jdvkit.half_graph(6)
    assert h6.n == 6
    assert len(h6) == 9
    j = jdvkit.jdv_of(h6)
    assert j.entries == {(1, 5): 1, (2, 4): 1, (2, 5): 1, (3, 3): 1, (3, 4): 2, (3, 5): 2, (4, 5): 1}
    assert len(jdvkit.support(j)) == 7
    assert jdvkit.weighted_degree_sum(j) == Fraction(6)
    assert jdvkit.Jdv.from_json(j.to_json()) == j


def test_graphicality():
    verdict = jdvkit.check_graphical(jdvkit.Jdv(3, {(1, 1): 1, (1, 2): 1}))
    assert not verdict["graphical"]
    assert verdict["violation"] == "NonIntegerClass(2)"

    j = jdvkit.Jdv(3, {(1, 2): 4})
    assert jdvkit.check_graphical(j)["graphical"]
    assert jdvkit.check_graphical(j, strict_vertex_budget=True)["violation"] == "VertexBudget"


def test_graph_and_input_errors():
    g = jdvkit.Graph(3, [(1, 2), (2, 3)])
    assert jdvkit.degree_profile(g)["class_sizes"] == {1: 2, 2: 1}
    with pytest.raises(ValueError):
        jdvkit.Graph(3, [(1, 1)])
    with pytest.raises(jdvkit.InputError):
        jdvkit.augmented_half_graph(5)
    with pytest.raises(ValueError):
        jdvkit.Jdv(3, {(2, 1): 1})


def test_relaxations():
    s4 = jdvkit.solve_discrete_relaxation(4)
    assert s4["cardinality"] == 4
    assert s4["weight_sum"] == Fraction(23, 6)
    assert s4["alpha"] == Fraction(2, 3)

    beta0 = jdvkit.solve_beta0(1e-10)
    assert abs(beta0 - 5.68050) < 5e-5
    b = jdvkit.alpha_prime(10)
    assert abs(b["alpha_prime"] - 0.68179) < 1e-4
    assert jdvkit.continuous_feasibility(10, 0.99 * beta0 / 10)


def test_second_bound_and_oracle():
    opt = jdvkit.maximize_f()
    assert abs(opt["optimum"]["f_value"] - 13 / 24) < 1e-9
    assert abs(opt["low_branch"]["f_value"] - 3 / 8) < 1e-9
    assert jdvkit.verify_chain(jdvkit.half_graph(30))["all_pass"]
    assert jdvkit.degree_sum_bound(4, 3) == Fraction(6)

    r = jdvkit.max_support_exhaustive(4)
    assert r["max_support"] == 3
    assert r["graphs_scanned"] == 64


def test_bounds_csv():
    text = jdvkit.bounds_csv(2, 10)
    lines = text.strip().splitlines()
    assert lines[0] == "n,alpha_n,alpha_prime_n,lemma_bound,limit_constant,half_graph_ratio"
    assert len(lines) == 10
    rows = jdvkit.bound_reports(2, 4)
    assert rows[1]["alpha_n"] == Fraction(2, 3)
