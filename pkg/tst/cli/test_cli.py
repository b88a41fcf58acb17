import json

from click.testing import CliRunner

from ramcc import __version__
from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument
from ramcc.cli import main, run, runFiles


BAD_CONJUGATES = "[field]\np = 3\nprecision = 40\n[extension]\nn = 1\na0 = -x\na1 = -t^2\nconjugates = h; h + t; h + t^2\n"
NOT_A_PRIME = "[field]\np = 4\n[extension]\nn = 1\na0 = -x\na1 = -t\n"


def document(name: str) -> str:
    return str(PathManagement.corpusDocument(name))


def test_compare_succeeds_on_the_anchor():
    result = CliRunner().invoke(main, ["compare", document("anchor-p3")])
    assert result.exit_code == 0, result.output
    assert "compare" in result.output


def test_json_output_of_nearby():
    result = CliRunner().invoke(main, ["nearby", "--json", document("punctured-disc")])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["results"]["psi1"] == 0
    assert payload["version"] == __version__
    assert payload["diagnostics"] == []


def test_bad_conjugates_are_an_input_error(tmp_path):
    path = tmp_path / "bad.ramcc"
    path.write_text(BAD_CONJUGATES, encoding="utf-8")
    result = CliRunner().invoke(main, ["validate", "--json", str(path)])
    assert result.exit_code == 2
    error = json.loads(result.output)["error"]
    assert error["type"] == "NotARoot"


def test_parse_errors_carry_their_position(tmp_path):
    path = tmp_path / "broken.ramcc"
    path.write_text("[field]\np = 3\n[extension]\nn = 1\na0 = -x +\n", encoding="utf-8")
    result = CliRunner().invoke(main, ["invariants", "--json", str(path)])
    assert result.exit_code == 2
    error = json.loads(result.output)["error"]
    assert (error["type"], error["line"], error["col"]) == ("ParseError", 5, 10)


def test_exit_code_is_the_worst_of_all_documents(tmp_path):
    path = tmp_path / "not-a-prime.ramcc"
    path.write_text(NOT_A_PRIME, encoding="utf-8")
    result = CliRunner().invoke(main, ["invariants", "--json", document("anchor-p2"), str(path)])
    assert result.exit_code == 2
    payload = json.loads(result.output)
    assert [report["source"] for report in payload] == ["anchor-p2.ramcc", "not-a-prime.ramcc"]
    assert "error" not in payload[0]
    assert payload[1]["error"]["type"] == "UnsupportedPrime"


def test_trivial_additive_character_is_rejected():
    result = CliRunner().invoke(main, ["swan", "--json", "--psi", "3", document("anchor-p3")])
    assert result.exit_code == 2


def test_output_is_deterministic():
    runner = CliRunner()
    first  = runner.invoke(main, ["compare", "--json", "--seed", "7", document("two-jump-p2-regular")])
    second = runner.invoke(main, ["compare", "--json", "--seed", "7", document("two-jump-p2-regular")])
    assert first.exit_code == 0, first.output
    assert first.output == second.output


def test_results_survive_doubling_the_precision():
    anchor = readDocument(PathManagement.corpusDocument("anchor-p3"))
    summary = lambda report: [(r["cc"], r["kcc"], r["equal"]) for r in report.results["representations"]]
    assert summary(run(anchor, "compare", precision=40)) == summary(run(anchor, "compare", precision=80))


def test_parallel_runs_keep_the_order():
    paths = [PathManagement.corpusDocument(name) for name in ["anchor-p2", "constant-sheaf", "punctured-disc"]]
    reports = runFiles(paths, "nearby", jobs=2, progress=False)
    assert [report.source for report in reports] == [path.name for path in paths]
    assert reports[0].exit_code == 2  # No [triple] section.
    assert [report.results["psi1"] for report in reports[1:]] == [0, 0]


def test_every_command_runs_on_the_corpus():
    for path in PathManagement.corpusDocuments():
        document = readDocument(path)
        for command in ["validate", "invariants", "swan", "cc", "compare"]:
            if document.extension is None and document.abstract is None:
                continue
            report = run(document, command)
            assert report.exit_code == 0, report.toJson()
