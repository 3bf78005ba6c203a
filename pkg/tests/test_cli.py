import orjson
import pytest

from constants import EXIT_BUDGET_ERROR, EXIT_CONSTRUCTION_ERROR, EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK
from graph.generators import cycle
from graph.sig_format import parse_sig, write_sig
from main import main


def _error(capsys) -> dict:
    """The JSON error document is the last line on stderr."""
    lines = [line for line in capsys.readouterr().err.splitlines() if line.strip()]
    return orjson.loads(lines[-1])


def _run_json(capsys, args):
    assert main(args) == EXIT_OK
    return orjson.loads(capsys.readouterr().out)


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("icx ")


def test_default_bounds(capsys, sig_file, c5):
    path = sig_file(c5)
    report = _run_json(capsys, ["bounds", "-i", str(path), "--no-timings"])
    values = {name: entry["value"]["value"] for name, entry in report["bounds"].items()}
    assert values["alpha"] == "2"
    assert values["mais"] == "2"
    assert values["fcc"] == "5/2"
    assert values["lp"] == "5/2"
    assert report["graph"] == {"n": 5, "edge_count": 5, "undirected": True, "source": "graph.sig"}
    assert "timings_ms" not in report


def test_bounds_written_to_file(capsys, sig_file, c5, tmp_path):
    out = tmp_path / "bounds.json"
    assert main(["bounds", "-i", str(sig_file(c5)), "--enable", "fvc,fmm", "-o", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    report = orjson.loads(out.read_bytes())
    assert list(report["bounds"]) == ["fmm", "fvc"]
    assert report["timings_ms"].keys() == {"fvc", "fmm"}


def test_directed_graph_skips_undirected_bounds(capsys, sig_file, directed_c3):
    report = _run_json(capsys, ["bounds", "-i", str(sig_file(directed_c3)), "--enable", "fvc,fcc"])
    assert report["bounds"]["fcc"]["value"]["value"] == "3"
    assert report["skipped"] == {"fvc": "requires an undirected graph"}


def test_unknown_bound_name(capsys, sig_file, c5):
    assert main(["bounds", "-i", str(sig_file(c5)), "--enable", "fcc,theta"]) == EXIT_INPUT_ERROR
    error = _error(capsys)
    assert error["exit_code"] == EXIT_INPUT_ERROR
    assert "theta" in error["detail"]


def test_parse_error_names_the_line(capsys, tmp_path):
    path = tmp_path / "bad.sig"
    path.write_text("n 3\ne 1 2\ne 1 9\n")
    assert main(["bounds", "-i", str(path)]) == EXIT_INPUT_ERROR
    error = _error(capsys)
    assert error["error_code"] == "PARSE_ERROR"
    assert "bad.sig:3" in error["detail"]


@pytest.mark.parametrize("args", [["bounds"], ["code", "-i", "x.sig", "--scheme", "magic"], ["frobnicate"]])
def test_usage_errors(capsys, args):
    assert main(args) == EXIT_INPUT_ERROR
    assert _error(capsys)["error_code"] == "USAGE_ERROR"


def test_oracle_budget(capsys, sig_file, c5):
    assert main(["bounds", "-i", str(sig_file(c5)), "--enable", "alpha", "--oracle-limit", "1"]) == EXIT_BUDGET_ERROR
    assert _error(capsys)["error_code"] == "BUDGET_EXCEEDED"


def test_oracle_limit_leaves_the_mais_limit_alone(capsys, monkeypatch, sig_file, c5):
    report = _run_json(capsys, ["bounds", "-i", str(sig_file(c5)), "--enable", "mais", "--oracle-limit", "1"])
    assert report["bounds"]["mais"]["value"]["value"] == "2"

    monkeypatch.setenv("ICX_MAIS_LIMIT", "4")
    assert main(["bounds", "-i", str(sig_file(c5)), "--enable", "mais"]) == EXIT_BUDGET_ERROR


def test_minrank_budget_from_environment(capsys, monkeypatch, sig_file, c5):
    monkeypatch.setenv("ICX_MINRANK_BUDGET", "0")
    assert main(["bounds", "-i", str(sig_file(c5)), "--enable", "minrank2"]) == EXIT_BUDGET_ERROR


def test_code_and_verify_round_trip(capsys, sig_file, c5, tmp_path):
    graph = sig_file(c5)
    cert = tmp_path / "cert.json"
    assert main(["code", "-i", str(graph), "--out", str(cert)]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "rate 5/2 over GF(" in captured.err

    result = _run_json(capsys, ["verify", "-i", str(graph), "-c", str(cert)])
    assert result["passed"] is True
    assert result["rate"] == "5/2"
    assert result["modulus"] == orjson.loads(cert.read_bytes())["modulus"]


def test_verify_rejects_a_broken_certificate(capsys, sig_file, c5, tmp_path):
    graph = sig_file(c5)
    cert = tmp_path / "cert.json"
    assert main(["code", "-i", str(graph), "--scheme", "clique-cover", "--out", str(cert)]) == EXIT_OK
    document = orjson.loads(cert.read_bytes())
    document["vectors"][0] = [[0] * len(column) for column in document["vectors"][0]]
    cert.write_bytes(orjson.dumps(document))
    capsys.readouterr()

    assert main(["verify", "-i", str(graph), "-c", str(cert)]) == EXIT_FAILURE
    assert _error(capsys)["error_code"] == "VERIFICATION_FAILED"


def test_verify_rejects_a_malformed_certificate(capsys, sig_file, c5, tmp_path):
    cert = tmp_path / "cert.json"
    cert.write_text('{"scheme": "clique-cover"}')
    assert main(["verify", "-i", str(sig_file(c5)), "-c", str(cert)]) == EXIT_INPUT_ERROR


def test_denominator_cap_is_a_construction_failure(capsys, monkeypatch, sig_file, c5):
    monkeypatch.setenv("ICX_DENOMINATOR_CAP", "1")
    assert main(["code", "-i", str(sig_file(c5))]) == EXIT_CONSTRUCTION_ERROR
    error = _error(capsys)
    assert error["error_code"] == "CONSTRUCTION_FAILED"
    assert error["diagnostics"]["cap"] == 1


def test_gic_command(capsys, sig_file, k4):
    result = _run_json(capsys, ["gic", "-i", str(sig_file(k4))])
    assert result["rate"] == 1
    assert result["structure"]["inner"] == [1, 2, 3, 4]
    assert result["certificate"]["rate"]["value"] == "1"

    result = _run_json(capsys, ["gic", "-i", str(sig_file(k4)), "--no-code"])
    assert "certificate" not in result


def test_report_is_deterministic_without_timings(capsys, sig_file, c5):
    args = ["report", "-i", str(sig_file(c5)), "--scheme", "local-partial", "--no-timings", "--seed", "7"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == first

    report = orjson.loads(first)
    assert report["seed"] == 7
    assert len(report["certificates"]) == 1
    assert len(report["family_report"]["entries"]) > 0


def test_report_skips_over_budget_bounds(capsys, sig_file, c5):
    report = _run_json(capsys, ["report", "-i", str(sig_file(c5)), "--enable", "alpha,fcc", "--oracle-limit", "1"])
    assert "alpha" in report["skipped"]
    assert report["bounds"]["fcc"]["value"]["value"] == "5/2"


def test_report_points_need_a_radius(capsys, sig_file, c5, tmp_path):
    points = tmp_path / "points.txt"
    points.write_text("p 0 0\np 1 0\n")
    assert main(["report", "-i", str(sig_file(c5)), "--points", str(points)]) == EXIT_INPUT_ERROR


def test_gen_cycle(capsys):
    assert main(["gen", "cycle", "--n", "5"]) == EXIT_OK
    assert capsys.readouterr().out == write_sig(cycle(5))


def test_gen_random_is_seeded(capsys):
    args = ["gen", "random", "--n", "8", "--p", "0.4", "--seed", "3", "--directed"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == first
    g = parse_sig(first)
    assert g.n == 8 and not g.is_undirected


def test_gen_udg(capsys, tmp_path):
    points = tmp_path / "points.txt"
    points.write_text("p 0 0\np 2 0\np 5 0\n")
    assert main(["gen", "udg", "--points", str(points), "--radius", "1"]) == EXIT_OK
    g = parse_sig(capsys.readouterr().out)
    assert g.n == 3 and g.is_undirected
    assert g.edges() == [(0, 1)]
