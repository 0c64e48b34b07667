import numpy as np
import pytest

from trdprod import _kernels
from trdprod.catalog import enumerate_catalog
from trdprod.errors import SizeLimitError, SolverTimeout
from trdprod.families import (complete, complete_bipartite, cycle, path, prism,
                              star, wheel)
from trdprod.graph import direct_product, from_edge_list
from trdprod.labeling import (is_open_packing, is_packing,
                              is_total_dominating, is_total_roman_dominating)
from trdprod.solve import (_SearchArrays, _brute_scan, gamma_t_exact,
                           gamma_tr_bruteforce, gamma_tr_exact, gamma_tr_max_v2,
                           greedy_total_dominating_set, maximum_open_packings,
                           rho_exact, rho_o_exact,
                           rho_o_set_inducing_perfect_matching,
                           trdf_pareto_frontier, trdf_with_weight_max_v2)

TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)], "2K2")


# values frozen from the exhaustive 3^n scan
BRUTE_VALUES = [
    (path(3), 3),
    (path(4), 4),
    (TWO_K2, 4),
    (complete(3), 3),
    (star(3), 3),
    (cycle(4), 4),
    (cycle(5), 5),
    (complete(4), 3),
]


@pytest.mark.parametrize("g,value", BRUTE_VALUES, ids=lambda x: getattr(x, "name", x))
def test_bruteforce_known_values(g, value):
    res = gamma_tr_bruteforce(g)
    assert res.value == value
    assert res.method == "brute_force"
    assert is_total_roman_dominating(res.witness) and res.witness.weight == value


def test_bruteforce_size_limit():
    with pytest.raises(SizeLimitError):
        gamma_tr_bruteforce(direct_product(cycle(4), cycle(4)).base)


EXACT_PRODUCTS = [
    (cycle(4), cycle(4), 8),
    (star(2), star(2), 7),
    (path(4), path(4), 8),
]


@pytest.mark.parametrize("g,h,value", EXACT_PRODUCTS,
                         ids=lambda x: getattr(x, "name", x))
def test_exact_known_products(g, h, value):
    res = gamma_tr_exact(direct_product(g, h).base, budget=120)
    assert res.value == value
    assert res.method == "branch_and_bound"
    assert is_total_roman_dominating(res.witness) and res.witness.weight == value


def test_exact_matches_bruteforce_with_identical_witness():
    for g in [path(2), path(3), complete(3), path(4), cycle(4), star(3),
              complete(4), TWO_K2, cycle(5), wheel(5), complete_bipartite(2, 3)]:
        bf = gamma_tr_bruteforce(g)
        ex = gamma_tr_exact(g, budget=60)
        assert bf.value == ex.value
        assert bf.witness.labels == ex.witness.labels  # shared lexicographic tie-break


def test_max_v2_known_values():
    res = gamma_tr_max_v2(direct_product(complete(3), complete(3)).base, budget=60)
    assert res.value == 6 and res.max_v2 == 3
    assert len(res.witness.v1) == 0

    res = gamma_tr_max_v2(complete(2))
    assert res.value == 2 and res.max_v2 == 0 and res.witness.labels == (1, 1)

    res = gamma_tr_max_v2(cycle(4))
    assert res.value == 4 and res.max_v2 == 2


def test_max_v2_agrees_with_scan_table():
    for g in [path(3), path(4), cycle(4), cycle(5), star(3), complete(4),
              complete_bipartite(2, 3), wheel(5), TWO_K2]:
        best, _, table = _brute_scan(g, 12)
        res = gamma_tr_max_v2(g, budget=60)
        assert res.value == best and res.max_v2 == table[best]


def test_upper_bound_hint_does_not_change_result():
    g = direct_product(cycle(4), cycle(4)).base
    plain = gamma_tr_exact(g, budget=60)
    hinted = gamma_tr_exact(g, budget=60, upper_bound_hint=8)
    assert plain.value == hinted.value == 8
    assert plain.witness.labels == hinted.witness.labels


def test_gamma_t_rho_examples():
    assert gamma_t_exact(cycle(4)).value == 2
    assert rho_exact(cycle(4)).value == 1
    assert rho_o_exact(cycle(4)).value == 2
    assert rho_exact(path(4)).value == 2
    assert rho_o_exact(path(4)).value == 2
    assert gamma_t_exact(prism(cycle(3))).value == 2
    assert gamma_t_exact(prism(cycle(6))).value == 4
    assert gamma_t_exact(complete(2)).value == 2


def test_solver_witnesses_satisfy_their_predicates():
    for g in [path(4), cycle(5), star(3), complete(4), prism(cycle(3))]:
        t = gamma_t_exact(g)
        assert is_total_dominating(t.witness) and t.witness.size == t.value
        p = rho_exact(g)
        assert is_packing(p.witness) and p.witness.size == p.value
        o = rho_o_exact(g)
        assert is_open_packing(o.witness) and o.witness.size == o.value


def test_sandwich_gamma_t_vs_gamma_tr_on_catalog():
    from trdprod.labeling import VertexSet
    for g in enumerate_catalog(4).graphs:
        gt = gamma_t_exact(g).value
        res = gamma_tr_exact(g, budget=60)
        assert gt <= res.value <= 2 * gt
        # the positive support of a valid labeling totally dominates
        support = res.witness.positive_mask
        assert is_total_dominating(VertexSet(g, support))
        assert support.bit_count() >= gt


def test_pareto_frontier_examples():
    assert [(p.weight, p.max_v2) for p in trdf_pareto_frontier(complete(2))] == \
        [(2, 0), (3, 1), (4, 2)]
    assert [(p.weight, p.max_v2) for p in trdf_pareto_frontier(path(3))] == \
        [(3, 1), (4, 2)]
    assert [(p.weight, p.max_v2) for p in trdf_pareto_frontier(cycle(4))] == [(4, 2)]


def test_pareto_frontier_matches_weight_constrained_search():
    for g in [path(4), cycle(5), star(3)]:
        for point in trdf_pareto_frontier(g):
            f = trdf_with_weight_max_v2(g, point.weight)
            assert f is not None
            assert f.weight == point.weight and len(f.v2) == point.max_v2


def test_greedy_total_dominating_set_is_valid():
    for g in [path(5), cycle(7), wheel(6), prism(cycle(4)), TWO_K2]:
        d = greedy_total_dominating_set(g)
        assert is_total_dominating(d)


def test_maximum_open_packings_and_matching_flag():
    packs = maximum_open_packings(cycle(4))
    assert all(p.size == 2 for p in packs)
    s = rho_o_set_inducing_perfect_matching(path(4))
    assert s is not None
    assert all((path(4).adj[v] & s.members).bit_count() == 1 for v in s.vertices())
    # star: the unique maximum open packing {center, leaf} induces one edge
    assert rho_o_set_inducing_perfect_matching(star(3)) is not None
    # 2K2: rho_o-set is everything, inducing two disjoint edges
    assert rho_o_set_inducing_perfect_matching(TWO_K2) is not None


def test_timeout_carries_bounds():
    big = direct_product(cycle(5), cycle(7)).base
    with pytest.raises(SolverTimeout) as err:
        gamma_tr_exact(big, budget=0.05)
    assert err.value.upper_bound is not None
    assert err.value.lower_bound is not None
    assert err.value.lower_bound <= err.value.upper_bound
    assert err.value.nodes > 0


def test_eod_product_certificate_case():
    # the 2K2 product of two single edges: optimum is all-1, never uses a 2
    best, labels, table = _brute_scan(TWO_K2, 12)
    assert best == 4 and table[4] == 0
    assert labels == (1, 1, 1, 1)


def _run_pair(kernel_min, kernel_brute, g):
    arrs = _SearchArrays(g, {})
    st = arrs.state(best=2 * g.n + 1)
    kernel_min(arrs.nbr_ptr, arrs.nbr_idx, arrs.adj_mask, arrs.bit, arrs.labels,
               arrs.order, arrs.trial, arrs.cnt2, arrs.cntpos, arrs.cntun,
               arrs.best_labels, st, 10 ** 9)
    brute_arrs = _SearchArrays(g, {})
    digits = np.zeros(g.n, dtype=np.int8)
    table = np.full(2 * g.n + 1, -1, dtype=np.int64)
    bst = np.zeros(6, dtype=np.int64)
    bst[0] = 2 * g.n + 1
    kernel_brute(brute_arrs.adj_mask, brute_arrs.bit, digits,
                 brute_arrs.best_labels, table, bst, 10 ** 9)
    return int(st[3]), int(bst[0]), [int(x) for x in table]


def test_kernel_fallback_parity():
    # the plain-python kernel source must compute exactly what the jitted one does
    for g in [path(4), cycle(5), star(3), complete(4), TWO_K2]:
        jit_min, jit_bf, jit_table = _run_pair(
            _kernels.bnb_min_weight, _kernels.brute_force_scan, g)
        py_min, py_bf, py_table = _run_pair(
            _kernels.bnb_min_weight_py, _kernels.brute_force_scan_py, g)
        assert jit_min == py_min == jit_bf == py_bf
        assert jit_table == py_table
