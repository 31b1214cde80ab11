import json

from spetscat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalan_spot_value(capsys):
    code, out, _ = run(capsys, "catalan", "--group", "A2", "--p", "5")
    assert code == 0
    assert out.strip() == "7"


def test_verify_main_range_json(capsys):
    code, out, _ = run(
        capsys, "verify", "main", "--group", "G(2,1,2)", "--p", "1..7", "--json"
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 4  # coprime residues 1, 3, 5, 7
    assert all(r["equal"] for r in reports)
    assert [r["p"] for r in reports] == [1, 3, 5, 7]


def test_invalid_group_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "main", "--group", "G(2,2,2)")
    assert code == 2
    assert "irreducible" in err


def test_non_coprime_single_p_is_usage_error(capsys):
    code, _, err = run(capsys, "catalan", "--group", "G(2,1,2)", "--p", "2")
    assert code == 2
    assert "coprime" in err


def test_unparsable_group(capsys):
    code, _, err = run(capsys, "chars", "--group", "E8")
    assert code == 2
    assert "parse" in err


def test_type_a_rejected_outside_catalan(capsys):
    code, _, err = run(capsys, "chars", "--group", "A2")
    assert code == 2
    assert "catalan" in err


def test_chars_json_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "chars", "--group", "G(3,1,2)", "--json")
    code2, out2, _ = run(capsys, "chars", "--group", "G(3,1,2)", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    rows = json.loads(out1)
    assert len(rows) == 9
    assert all(set(r) >= {"label", "feg", "deg", "schur", "a", "A", "b", "B", "h", "c"}
               for r in rows)


def test_symbols_text_and_json_agree(capsys):
    code, out_json, _ = run(capsys, "symbols", "--group", "G(2,1,2)", "--json")
    assert code == 0
    rows = json.loads(out_json)
    code, out_text, _ = run(capsys, "symbols", "--group", "G(2,1,2)")
    assert code == 0
    for row in rows:
        assert row["symbol"] in out_text
        assert row["label"] in out_text


def test_families_output(capsys):
    code, out, _ = run(capsys, "families", "--group", "G(2,1,2)", "--json")
    assert code == 0
    fams = json.loads(out)
    assert sorted(len(f["members"]) for f in fams) == [1, 1, 3]


def test_fourier_subcommand(capsys):
    code, out, _ = run(capsys, "fourier", "--group", "G(2,1,2)", "--json")
    assert code == 0
    data = json.loads(out)
    assert all(rep["equal"] for rep in data["reports"])
    code, _, err = run(capsys, "fourier", "--group", "G(3,3,3)")
    assert code == 2


def test_trace_subcommand(capsys):
    code, out, _ = run(capsys, "trace", "--group", "G(2,1,2)", "--p", "1")
    assert code == 0
    assert "q^-2" in out.replace(" ", "")
    code, out, _ = run(capsys, "trace", "--group", "G(2,1,2)", "--p", "1", "--json")
    data = json.loads(out)
    assert data[0]["trace"]["root_order"] == 1


def test_verify_all_default_range(capsys):
    code, out, _ = run(capsys, "verify", "all", "--group", "G(3,3,2)")
    assert code == 0
    assert "failed" in out.splitlines()[-1]
    assert " 0 failed" in out.splitlines()[-1]


def test_swap_restricted_to_gm1n(capsys):
    code, _, err = run(capsys, "verify", "swap", "--group", "G(3,3,2)")
    assert code == 2


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 2
