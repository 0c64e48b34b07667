import json

import pytest

from trdprod import cli
from trdprod.catalog import connected_count, enumerate_catalog
from trdprod.errors import SizeLimitError
from trdprod.families import cycle
from trdprod.graph import direct_product, is_connected
from trdprod.graph6 import emit_graph6, parse_graph6


def test_enumerate_small_orders():
    cat = enumerate_catalog(3)
    assert len(cat.graphs) == 3  # single edge, path, triangle
    assert sorted(g.n for g in cat.graphs) == [2, 3, 3]


def test_enumerate_four_includes_disconnected():
    cat = enumerate_catalog(4)
    assert len(cat.graphs) == 10
    disconnected = [g for g in cat.graphs if not is_connected(g)]
    assert len(disconnected) == 1 and disconnected[0].num_edges() == 2  # two edges


def test_enumerate_five_connected_count():
    cat = enumerate_catalog(5)
    assert connected_count(cat, 5) == 21
    assert all(all(g.degree(v) >= 1 for v in range(g.n)) for g in cat.graphs)


def test_enumerate_rejects_large_order():
    with pytest.raises(SizeLimitError):
        enumerate_catalog(6)


def test_catalog_names_round_trip():
    for g in enumerate_catalog(4).graphs:
        assert parse_graph6(g.name).adj == g.adj


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "K3", "K3")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 6


def test_cli_gammatr_from_file(capsys, tmp_path):
    prod = direct_product(cycle(4), cycle(4)).base
    path = tmp_path / "C4xC4.g6"
    path.write_text(emit_graph6(prod) + "\n")
    code, out, _ = run_cli(capsys, "gammatr", "--max-v2", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 8
    assert doc["max_v2"] == 4


def test_cli_product_and_family(capsys):
    code, out, _ = run_cli(capsys, "product", "C4", "K2")
    assert code == 0
    assert parse_graph6(out.strip()).n == 8

    code, out, _ = run_cli(capsys, "family", "wheel", "5")
    assert code == 0
    assert parse_graph6(out.strip()).num_edges() == 8

    code, out, _ = run_cli(capsys, "family", "prism", "C3", "--emit", "json")
    assert code == 0
    assert json.loads(out)["n"] == 6


def test_cli_bounds_exact(capsys):
    code, out, _ = run_cli(capsys, "bounds", "P4", "P4", "--exact")
    assert code == 0
    doc = json.loads(out)
    assert doc["exact"] == 8
    by_name = {b["name"]: b for b in doc["bounds"]}
    assert by_name["LB_pack"]["value"] == 8
    assert by_name["UB_2gt"]["value"] == 8


def test_cli_construct(capsys):
    code, out, _ = run_cli(capsys, "construct", "iii_triangle", "K3", "K3")
    assert code == 0
    assert json.loads(out)["weight"] == 6

    code, out, _ = run_cli(capsys, "construct", "eod", "C4", "C8")
    assert code == 0
    assert json.loads(out)["size"] == 8


def test_cli_verify(capsys, tmp_path):
    out_json = tmp_path / "report.json"
    out_csv = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "verify", "--max-n", "3",
                           "--out", str(out_json), "--csv", str(out_csv))
    assert code == 0
    assert "violations: 0" in out
    doc = json.loads(out_json.read_text())
    assert doc["num_pairs"] == 6 and doc["violations"] == []
    assert out_csv.read_text().startswith("g,")


def test_cli_domain_error_exit_code(capsys):
    # three isolated vertices: solver hypothesis fails
    code, _, err = run_cli(capsys, "gammatr", "B?")
    assert code == 1
    assert "error" in json.loads(err)


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        cli.main(["no-such-command"])
    assert err.value.code == 2


def test_cli_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "bounds", "K3", "C4", "--exact")
    _, second, _ = run_cli(capsys, "bounds", "K3", "C4", "--exact")
    assert first == second
