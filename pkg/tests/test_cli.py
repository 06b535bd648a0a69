import json

import pytest

from kfactor import cli
from kfactor.factoring import has_k_factor
from kfactor.formats import parse_graph6, strip_timing
from kfactor.graph import complete
from kfactor.verify import TheoremVerdict



@pytest.fixture
def g1_file(tmp_path):
    path = tmp_path / "g.g6"
    assert cli.main(["construct", "--family", "g1", "-n", "12", "-k", "2", "--out", str(path)]) == 0
    return path


def test_construct_graph6(g1_file):
    assert g1_file.read_text() == "K}reMNFp}Nw~\n"
    assert parse_graph6(g1_file.read_text()).edge_count == 43


def test_construct_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert cli.main(["construct", "--family", "g2", "-n", "12", "-k", "3", "--format", "dot",
                     "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count('role="S"') == 3 and text.count('role="T"') == 4


def test_factor_report(g1_file, tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["factor", "--in", str(g1_file), "-k", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    v = doc["results"]["verdict"]
    assert doc["schema_version"] == "1.0"
    assert v["exists"] is False and v["witness"]["delta"] == -2
    assert v["witness"]["S"] == [0, 1] and v["witness"]["T"] == [2, 3, 4]
    assert set(doc["timing"]) == {"parse", "compute"}


def test_deterministic_apart_from_timing(g1_file, tmp_path):
    docs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        cli.main(["factor", "--in", str(g1_file), "-k", "2", "--method", "deficiency",
                  "--out", str(out)])
        docs.append(strip_timing(json.loads(out.read_text())))
    assert docs[0] == docs[1]


def test_methods_agree(g1_file, tmp_path):
    verdicts = []
    for method in ("gadget", "deficiency"):
        out = tmp_path / f"{method}.json"
        cli.main(["factor", "--in", str(g1_file), "-k", "2", "--method", method, "--out", str(out)])
        verdicts.append(json.loads(out.read_text())["results"]["verdict"]["exists"])
    assert verdicts == [False, False]


def test_multi_graph_input(tmp_path):
    path = tmp_path / "many.g6"
    path.write_text("D?{\nEr[w\n")
    out = tmp_path / "r.json"
    assert cli.main(["spectral", "--in", str(path), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["results"]["graphs"]) == 2
    assert abs(doc["results"]["graphs"][0]["spectral"]["rho"] - 2.0) < 1e-9


def test_params(g1_file, tmp_path):
    out = tmp_path / "p.json"
    assert cli.main(["params", "--in", str(g1_file), "--out", str(out)]) == 0
    res = json.loads(out.read_text())["results"]
    assert res["binding"]["value"] == "1/1" and res["toughness"]["value"] == "2/3"


def test_verify_ok(g1_file, tmp_path):
    out = tmp_path / "v.json"
    assert cli.main(["verify", "--in", str(g1_file), "--theorem", "spectral", "-k", "2",
                     "--out", str(out)]) == 0
    v = json.loads(out.read_text())["results"]["verdict"]
    assert v["extremal_hit"] is True and v["contradiction"] is False


def test_verify_contradiction_exit_1(g1_file, monkeypatch, tmp_path):
    def fake(g, k, factor=None):
        return TheoremVerdict("T1_4", k, g.n, {"x": True}, False, False, has_k_factor(g, k))

    monkeypatch.setattr(cli, "check_edge_theorem", fake)
    code = cli.main(["verify", "--in", str(g1_file), "--theorem", "edge", "-k", "2",
                     "--out", str(tmp_path / "v.json")])
    assert code == 1


def test_sweep(tmp_path):
    out = tmp_path / "s.json"
    assert cli.main(["sweep", "-k", "1", "-n", "12", "--samples", "10", "--seed", "5",
                     "--out", str(out)]) == 0
    assert json.loads(out.read_text())["results"]["sweep"]["contradictions"] == 0


@pytest.mark.parametrize(
    "args",
    [
        ["sweep", "-k", "1", "-n", "11"],
        ["construct", "--family", "g1", "-n", "3", "-k", "2"],
        ["factor", "--in", "/nonexistent/file.g6", "-k", "1"],
    ],
)
def test_errors_exit_2(args):
    assert cli.main(args) == 2


def test_bad_graph6_exit_2(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("D?\n")
    assert cli.main(["factor", "--in", str(path), "-k", "1"]) == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["factor"])
    assert exc.value.code == 2


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    assert cli.main(["factor", "--in", "-", "-k", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["verdict"]["exists"] is True
    assert doc["graph_summary"]["e"] == complete(4).edge_count
