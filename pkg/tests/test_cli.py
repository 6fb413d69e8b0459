import json

import pytest
from hypothesis import given, settings, strategies as st

from coradical.cli import main
from coradical.corpus import GENERATORS
from coradical.exactla import GF, QQ
from coradical.fileformat import ParseError, dumps, loads


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def gen_file(tmp_path):
    def make(*args):
        path = tmp_path / ("-".join(args) + ".json")
        assert main(["gen", *args, "-o", str(path)]) == 0
        return str(path)
    return make


@pytest.mark.parametrize("args", [("divided-power", "3"), ("path", "a2", "2"), ("matrix-dual", "2"),
                                  ("super-dual",), ("zmod3-orbit", "2")])
def test_round_trip_is_byte_identical(gen_file, args):
    path = gen_file(*args)
    text = open(path).read()
    c, meta = loads(text)
    assert dumps(c, meta) == text
    assert meta["generator"] == args[0]


def test_round_trip_over_prime_field():
    c = GENERATORS["path"]("kronecker", "1", field=GF(5)).coalgebra
    text = dumps(c)
    assert '"fp:5"' in text
    assert dumps(loads(text)[0]) == text


@settings(max_examples=20)
@given(st.integers(0, 6))
def test_divided_power_round_trip(n):
    text = dumps(GENERATORS["divided-power"](str(n)).coalgebra)
    assert dumps(loads(text)[0]) == text


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"field": "q"}',
    '{"field": "r", "group": {}, "basis": {}, "comult": [], "counit": []}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        loads(text)


def test_parse_errors_on_bad_entries():
    good = json.loads(dumps(GENERATORS["divided-power"]("1").coalgebra))
    for mutate in (
        lambda d: d["comult"].append([0, 0, 9, "1"]),
        lambda d: d["comult"].append([0, 0, 0, 1]),
        lambda d: d["comult"].append(d["comult"][0]),
        lambda d: d["basis"]["degrees"].__setitem__(0, "nowhere"),
        lambda d: d["counit"].append([0, "1/0"]),
    ):
        d = json.loads(json.dumps(good))
        mutate(d)
        with pytest.raises(ParseError):
            loads(json.dumps(d))


def test_field_override_reinterprets_scalars():
    text = dumps(GENERATORS["nonsplit"]().coalgebra)
    c, _ = loads(text, GF(7))
    assert c.field == GF(7)
    assert loads(text)[0].field == QQ


def test_gen_unknown_and_bad_params(capsys):
    code, _, err = run(capsys, "gen", "no-such")
    assert code == 1 and "unknown example" in err
    code, _, err = run(capsys, "gen", "divided-power", "x")
    assert code == 1


def test_check_exit_codes(capsys, gen_file):
    assert run(capsys, "check", gen_file("divided-power", "3"))[0] == 0
    code, out, _ = run(capsys, "check", gen_file("nonsplit"))
    assert code == 2 and json.loads(out)["verdict"] == "NOT-A-THEOREM-INSTANCE"
    assert run(capsys, "check", gen_file("graded-group-dual"))[0] == 2
    code, out, _ = run(capsys, "check", gen_file("perturbed"))
    rep = json.loads(out)
    assert code == 1 and rep["checks"]["axioms"]["failures"]


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 3 and "parse error" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 3


def test_analyze_divided_power(capsys, gen_file):
    code, out, _ = run(capsys, "analyze", gen_file("divided-power", "2"))
    rep = json.loads(out)
    assert code == 0
    assert rep["verdict"] == "PASS"
    text = json.dumps(rep)
    assert "[0, 1, 2, 3]" in text


def test_analyze_text_format_and_max_layer(capsys, gen_file):
    code, out, _ = run(capsys, "analyze", gen_file("super-dual"), "--format", "text", "--max-layer", "1")
    assert code == 0 and "verdict: PASS" in out


def test_analyze_is_deterministic(capsys, gen_file):
    path = gen_file("path", "a3", "2")
    first = run(capsys, "analyze", path)[1]
    assert run(capsys, "analyze", path)[1] == first


def test_verify_single_files(capsys, gen_file):
    code, out, _ = run(capsys, "verify", gen_file("path", "kronecker", "1"))
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "PASS"
    assert rep["checks"]["taft_wilson"]["matching_order"] == ["ext1(L',L)"]
    code, out, _ = run(capsys, "verify", gen_file("perturbed"))
    assert code == 1 and json.loads(out)["witnesses"]
    assert run(capsys, "verify", gen_file("nonsplit"))[0] == 2


def test_verify_needs_a_target(capsys):
    assert run(capsys, "verify")[0] == 1


def test_prime_field_analysis(capsys, gen_file):
    path = gen_file("path", "a3", "2")
    code, out, _ = run(capsys, "check", path, "--field", "fp:7")
    assert code == 0
