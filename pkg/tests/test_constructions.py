import pytest

from trdprod.classify import is_eod_graph
from trdprod.construct import (product_eod_set, product_trdf_from_factors,
                               product_trdf_from_total_dom_sets,
                               small_value_construction)
from trdprod.errors import PreconditionError
from trdprod.families import complete, complete_bipartite, cycle, path, star
from trdprod.graph import direct_product
from trdprod.labeling import (LabelFunction, VertexSet,
                              is_efficient_open_dominating,
                              is_total_roman_dominating)
from trdprod.solve import (gamma_t_exact, gamma_tr_bruteforce, gamma_tr_exact,
                           trdf_pareto_frontier, trdf_with_weight_max_v2)


def test_factor_combination_examples():
    p3 = LabelFunction(path(3), (0, 2, 1))
    out = product_trdf_from_factors(p3, p3)
    assert out.weight == 3 * 3 - 2 * 1 * 1 == 7

    all1 = LabelFunction(complete(2), (1, 1))
    out = product_trdf_from_factors(all1, all1)
    assert out.weight == 4 and len(out.v2) == 0

    p4 = LabelFunction(path(4), (0, 2, 2, 0))
    out = product_trdf_from_factors(p4, p4)
    assert out.weight == 16 - 2 * 4 == 8
    assert gamma_tr_exact(out.graph, budget=60).value == 8


def test_factor_combination_rejects_invalid_input():
    bad = LabelFunction(path(3), (0, 1, 2))
    good = LabelFunction(path(3), (0, 2, 1))
    with pytest.raises(PreconditionError):
        product_trdf_from_factors(bad, good)


def test_factor_combination_weight_formula_over_frontiers():
    graphs = [complete(2), path(3), complete(3), path(4), cycle(4), star(3)]
    for g in graphs:
        for h in graphs:
            for pg_pt in trdf_pareto_frontier(g):
                fg = trdf_with_weight_max_v2(g, pg_pt.weight)
                for ph_pt in trdf_pareto_frontier(h):
                    fh = trdf_with_weight_max_v2(h, ph_pt.weight)
                    out = product_trdf_from_factors(fg, fh)
                    expect = (fg.weight * fh.weight
                              - 2 * len(fg.v2) * len(fh.v2))
                    assert out.weight == expect
                    assert is_total_roman_dominating(out)


def test_total_dom_set_products():
    d_c4 = gamma_t_exact(cycle(4)).witness
    out = product_trdf_from_total_dom_sets(d_c4, d_c4)
    assert out.weight == 8

    d_k2 = gamma_t_exact(complete(2)).witness
    d_p3 = gamma_t_exact(path(3)).witness
    out = product_trdf_from_total_dom_sets(d_k2, d_p3)
    assert out.weight == 8  # upper bound only; the true optimum there is 6
    assert gamma_tr_exact(direct_product(complete(2), path(3)).base).value == 6

    d_k22 = gamma_t_exact(complete_bipartite(2, 2)).witness
    assert product_trdf_from_total_dom_sets(d_k22, d_k22).weight == 8


def test_total_dom_set_product_rejects_non_dominating():
    with pytest.raises(PreconditionError):
        product_trdf_from_total_dom_sets(VertexSet.from_vertices(path(4), [0]),
                                         gamma_t_exact(path(4)).witness)


def test_eod_products():
    c4 = is_eod_graph(cycle(4))
    out = product_eod_set(c4, c4)
    assert out.size == 4 and is_efficient_open_dominating(out)

    c8 = is_eod_graph(cycle(8))
    out = product_eod_set(c4, c8)
    assert out.size == 8 and is_efficient_open_dominating(out)

    k2 = is_eod_graph(complete(2))
    out = product_eod_set(k2, k2)
    assert out.size == 4  # the whole of the double edge pair


def test_eod_product_rejects_non_eod():
    with pytest.raises(PreconditionError):
        product_eod_set(VertexSet.from_vertices(cycle(4), [0, 2]),
                        is_eod_graph(cycle(4)))


def test_small_value_cases():
    out = small_value_construction("iii_triangle", complete(3), complete(3))
    assert out.weight == 6
    assert gamma_tr_bruteforce(out.graph).value == 6

    out = small_value_construction("iv", star(2), star(3))
    assert out.weight == 7

    out = small_value_construction("ii", complete(2), complete(2))
    assert out.weight == 4

    out = small_value_construction("iii_universal", complete(3), complete(4))
    assert out.weight == 6

    out = small_value_construction("iii_k2", complete(2), path(3))
    assert out.weight == 6
    assert gamma_tr_bruteforce(out.graph).value == 6


def test_small_value_hypothesis_errors_name_the_clause():
    with pytest.raises(PreconditionError, match="K2"):
        small_value_construction("ii", complete(3), complete(2))
    with pytest.raises(PreconditionError, match="universal"):
        small_value_construction("iii_universal", path(4), complete(3))
    with pytest.raises(PreconditionError, match="triangle"):
        small_value_construction("iii_triangle", path(3), complete(3))
    with pytest.raises(PreconditionError, match="iv"):
        small_value_construction("iv", complete_bipartite(2, 2), path(3))


def test_explicit_witnesses_validated():
    with pytest.raises(PreconditionError):
        small_value_construction("iii_triangle", complete(4), complete(4),
                                 {"g_triangle": (0, 1, 2), "h_triangle": (0, 1, 5)})
    with pytest.raises(PreconditionError):
        small_value_construction("iv", star(2), star(3),
                                 {"g_universal": 0, "g_neighbor": 1,
                                  "h_universal": 1, "h_neighbor": 0})


def test_construction_weights_never_beat_the_optimum():
    pairs = [(complete(3), complete(3)), (path(3), path(3)), (cycle(4), cycle(4))]
    for g, h in pairs:
        product = direct_product(g, h)
        exact = gamma_tr_exact(product.base, budget=60).value
        d = product_trdf_from_total_dom_sets(gamma_t_exact(g).witness,
                                             gamma_t_exact(h).witness, product)
        assert d.weight >= exact
