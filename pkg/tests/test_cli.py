import json

import pytest

from unprojection import cli
from unprojection.kmfile import parse_problem, format_problem, ParseError
from unprojection.corpus import INSTANCES, load


NODAL_TEXT = "ring x(1), y(1); ideal IX = x^2 - y^2; ideal ID = x, y;"


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_basic_file():
    pf = parse_problem(NODAL_TEXT)
    assert pf.names == ["x", "y"]
    assert pf.weights == [1, 1]
    assert set(pf.ideals) == {"IX", "ID"}
    p = pf.to_problem()
    assert len(p.ideal_d.gens) == 2


def test_parse_format_round_trip():
    for text in INSTANCES.values():
        pf = parse_problem(text)
        assert parse_problem(format_problem(pf)) == pf


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_problem("ring x(1);\nideal IX = x +;")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_problem("ring x(1); ideal IX = q;")
    assert "unknown variable" in str(err.value)
    with pytest.raises(ParseError):
        parse_problem("ideal IX = x;")


def test_parse_rejects_nonhomogeneous_later():
    pf = parse_problem("ring x(1), y(2); ideal IX = x + y;")
    with pytest.raises(ValueError) as err:
        pf.build_ideal(pf.build_ring(), "IX")
    assert "degree" in str(err.value) or "homogeneous" in str(err.value)


def test_corpus_instances_load():
    assert set(INSTANCES) >= {"nodal", "cubic", "z6", "cramer"}
    for name in INSTANCES:
        pf = load(name)
        assert pf.options.get("name") == name
    with pytest.raises(KeyError):
        load("missing")


def test_cli_verify_nodal(capsys):
    code, out = run_cli(capsys, "verify", "corpus:nodal")
    assert code == 0
    assert "nzd-of-S" in out and "pass" in out
    assert "skipped" in out


def test_cli_unproject_cubic_json(capsys):
    code, out = run_cli(capsys, "unproject", "corpus:cubic", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["k"] == 1
    assert doc["mode"] == "graded"
    assert len(doc["I_Y"]) == 2
    assert all(c["status"] == "pass" for c in doc["certificates"])
    assert doc["betti-Y"] == [1, 2, 1]


def test_cli_json_deterministic(capsys):
    code1, out1 = run_cli(capsys, "verify", "corpus:cubic", "--json",
                          "--seedless")
    code2, out2 = run_cli(capsys, "verify", "corpus:cubic", "--json",
                          "--seedless")
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    d1.pop("seconds"), d2.pop("seconds")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_cli_hilbert_with_oracle(capsys):
    code, out = run_cli(capsys, "hilbert", "corpus:cubic", "--json",
                        "--oracle-depth", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["hilbert"]["coefficients"] == doc["hilbert"]["oracle"]


def test_cli_resolve(capsys):
    code, out = run_cli(capsys, "resolve", "corpus:z6", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["betti"]["totals"] == [1, 1]
    assert doc["codim"] == 1


def test_cli_project(capsys):
    code, out = run_cli(capsys, "project", "corpus:cubic", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["round-trip-equal"] is True


def test_cli_skip_certificate(capsys):
    code, out = run_cli(capsys, "verify", "corpus:cubic", "--json",
                        "--skip", "cross-check")
    assert code == 0
    doc = json.loads(out)
    by_name = {c["name"]: c for c in doc["certificates"]}
    assert by_name["cross-check"]["status"] == "skipped"


def test_cli_prime_field(capsys):
    code, out = run_cli(capsys, "verify", "corpus:cubic", "--json",
                        "--field", "fp:101")
    assert code == 0
    doc = json.loads(out)
    assert "F101" in doc["ring"]["field"]


def test_cli_exit_two_on_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.km"
    bad.write_text("ring x(1);\nideal IX = x +;")
    code, out = run_cli(capsys, "verify", str(bad))
    assert code == 2
    assert "line 2" in out


def test_cli_exit_two_on_hypothesis_failure(tmp_path, capsys):
    f = tmp_path / "principal.km"
    f.write_text("ring x(1), y(1); ideal IX = x*y; ideal ID = x;")
    code, out = run_cli(capsys, "verify", str(f))
    assert code == 2
    assert "principal" in out or "codim" in out


def test_cli_unknown_certificate(capsys):
    code, out = run_cli(capsys, "verify", "corpus:nodal", "--skip", "bogus")
    assert code == 2
    assert "unknown certificate" in out


def test_cli_missing_file(capsys):
    code, out = run_cli(capsys, "verify", "/nonexistent/file.km")
    assert code == 2
