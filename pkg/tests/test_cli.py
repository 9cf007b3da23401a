import json

import pytest

from idealspace.cli import run
from idealspace.continuity import SpaceMap
from idealspace.documents import (
    loads,
    parse_ideal,
    parse_map,
    parse_space,
    serialize_ideal,
    serialize_map,
    serialize_space,
)
from idealspace.errors import (
    DocumentSyntaxError,
    FormatVersionMismatch,
    InvalidMap,
    NotClosedUnderUnion,
    SchemaError,
    UnknownField,
    UnknownLabel,
)
from idealspace.setspace import Ideal

X2 = {"format_version": 1, "kind": "space", "points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}
Y3 = {
    "format_version": 1,
    "kind": "space",
    "points": ["a", "b", "c"],
    "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"]],
}
F = {"format_version": 1, "kind": "map", "assignment": {"0": "a", "1": "b"}}
IA = {"format_version": 1, "kind": "ideal", "points": ["a", "b", "c"], "generator": ["a"]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, doc in [("x2", X2), ("y3", Y3), ("f", F), ("ia", IA)]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        out[name] = str(p)
    return out


def cli(capsys, *argv):
    code = run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestDocuments:
    def test_round_trip(self):
        S = parse_space(json.dumps(Y3))
        assert parse_space(serialize_space(S)) == S
        assert parse_space(serialize_space(S)).labels == ("a", "b", "c")
        I = parse_ideal(IA, S)
        assert I == Ideal(3, 1)
        assert parse_ideal(serialize_ideal(I, S), S) == I
        f = parse_map(F, parse_space(X2), S)
        assert parse_map(serialize_map(f), f.domain, S) == f

    def test_members_form(self):
        doc = {"format_version": 1, "kind": "ideal", "points": ["a", "b", "c"], "members": [[], ["b"]]}
        assert parse_ideal(doc) == Ideal(3, 0b010)

    def test_syntax_error_position(self):
        with pytest.raises(DocumentSyntaxError) as ei:
            loads('{\n  "kind": ,\n}')
        assert ei.value.line == 2
        assert ei.value.code == "SyntaxError"

    def test_schema_errors(self):
        with pytest.raises(UnknownField):
            parse_space({**X2, "colour": "red"})
        with pytest.raises(FormatVersionMismatch):
            parse_space({**X2, "format_version": 2})
        with pytest.raises(SchemaError):
            parse_space({**X2, "kind": "map"})
        with pytest.raises(UnknownLabel):
            parse_space({**X2, "opens": [[], ["z"], ["0", "1"]]})
        with pytest.raises(NotClosedUnderUnion):
            parse_space({**Y3, "opens": [[], ["a"], ["b"], ["a", "b", "c"]]})

    def test_map_errors(self):
        X, Y = parse_space(X2), parse_space(Y3)
        with pytest.raises(InvalidMap):
            parse_map({**F, "assignment": {"0": "a"}}, X, Y)
        with pytest.raises(UnknownLabel):
            parse_map({**F, "assignment": {"0": "a", "1": "q"}}, X, Y)
        assert isinstance(parse_map(F, X, Y), SpaceMap)


class TestOperatorCommand:
    def test_cl_theta(self, capsys, files):
        code, out, _ = cli(capsys, "operator", "cl-theta", "--space", files["y3"], "--set", "a")
        assert code == 0
        assert json.loads(out)["result"] == ["a", "c"]

    def test_space_operator(self, capsys, files):
        code, out, _ = cli(capsys, "operator", "tau-star", "--space", files["y3"], "--ideal", files["ia"])
        doc = json.loads(out)
        assert doc["result"]["opens"] == [[], ["a"], ["b"], ["a", "b"], ["b", "c"], ["a", "b", "c"]]

    def test_cl_sequence(self, capsys, files):
        _, out, _ = cli(capsys, "operator", "cl-sequence", "--space", files["y3"], "--set", "a")
        doc = json.loads(out)
        assert doc["stages"] == [["a"], ["a", "c"], ["a", "b", "c"], ["a", "b", "c"]]
        assert doc["stabilized_at"] == 2

    def test_min_nbhd(self, capsys, files):
        _, out, _ = cli(capsys, "operator", "min-nbhd", "--space", files["x2"], "--point", "0")
        assert json.loads(out)["result"] == ["0", "1"]

    def test_missing_set_is_usage_error(self, capsys, files):
        code, _, err = cli(capsys, "operator", "gamma", "--space", files["y3"])
        assert code == 2
        assert json.loads(err)["error"]["code"] == "UsageError"


def test_classify(capsys, files):
    code, out, _ = cli(capsys, "classify", "--x", files["x2"], "--y", files["y3"], "--map", files["f"])
    doc = json.loads(out)
    assert code == 0
    assert doc["flags"] == [False, False, False, True, True]
    assert doc["kind"] == "report" and doc["format_version"] == 1


def test_classify_with_ideal(capsys, files):
    _, out, _ = cli(capsys, "classify", "--x", files["x2"], "--y", files["y3"], "--map", files["f"], "--ideal-y", files["ia"])
    assert json.loads(out)["ideal_results"]["ideal_compatible"] is False


def test_enumerate(capsys):
    _, out, _ = cli(capsys, "enumerate", "--n", "3")
    assert json.loads(out)["count"] == 29
    _, out, _ = cli(capsys, "enumerate", "ideals", "--n", "3")
    assert json.loads(out)["count"] == 8
    _, out, _ = cli(capsys, "enumerate", "maps", "--n", "2", "--ny", "3")
    assert json.loads(out)["count"] == 9


def test_bound_too_large(capsys):
    code, _, err = cli(capsys, "enumerate", "--n", "7")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "BoundTooLarge"


def test_verify_and_mine(capsys, tmp_path):
    fig = tmp_path / "v.png"
    code, out, _ = cli(capsys, "verify", "--theorem", "TC1A", "--max-n", "2", "--figure", str(fig))
    assert code == 0
    assert json.loads(out)["outcome"]["status"] == "NoViolation"
    assert fig.stat().st_size > 0
    code, out, _ = cli(capsys, "mine", "--claim", "TC1A", "--drop", "compatible", "--max-x", "2", "--max-y", "2")
    doc = json.loads(out)
    assert code == 0 and doc["found"] and doc["witness"]["certified"]


def test_verify_violation_exit_code(capsys, monkeypatch):
    from idealspace import cli as cli_mod
    from idealspace.verify import Outcome, VerificationReport, check_claim, Claim
    from idealspace.enumeration import UniverseBounds

    broken = check_claim(Claim.of_theorem("TC1A", ["compatible"]), UniverseBounds.square(2))
    monkeypatch.setattr(cli_mod, "check_theorem", lambda tid, b, jobs=1: broken)
    code, out, _ = cli(capsys, "verify", "--theorem", "TC1A", "--max-n", "2")
    assert code == 1
    assert json.loads(out)["outcome"]["status"] == "Violated"


def test_unknown_theorem(capsys):
    code, _, err = cli(capsys, "verify", "--theorem", "TZZ", "--max-n", "2")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "UnknownTheorem"


def test_missing_file(capsys):
    code, _, err = cli(capsys, "operator", "closure", "--space", "/nonexistent.json", "--set", "a")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "InputError"


def test_matrix_figure(capsys, tmp_path):
    fig = tmp_path / "m.png"
    code, out, _ = cli(capsys, "matrix", "--max-n", "2", "--figure", str(fig))
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) == 25
    first = fig.read_bytes()
    cli(capsys, "matrix", "--max-n", "2", "--figure", str(fig))
    assert fig.read_bytes() == first


def test_mine_sample_is_deterministic(capsys):
    args = ("mine", "--claim", "TW1A", "--drop", "compatible", "--max-x", "4", "--max-y", "4", "--sample", "300")
    _, a, _ = cli(capsys, *args)
    _, b, _ = cli(capsys, *args)
    assert a == b
