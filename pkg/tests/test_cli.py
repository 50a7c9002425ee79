"""End-to-end command-line behavior: verbs, formats, exit codes."""

import json


from finring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def json_lines(text):
    return [json.loads(line) for line in text.strip().splitlines()]


def test_axioms_text(capsys):
    code, out, _ = run(capsys, "axioms", "--ring", "Zi(4)")
    assert code == 0
    assert "all ring axioms hold" in out and "16 elements" in out


def test_axioms_json(capsys):
    code, out, _ = run(capsys, "axioms", "--ring", "Z(6)", "--format", "json")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec == {"type": "axioms", "ring": "Z(6)", "ok": True, "violations": []}


def test_describe_json(capsys):
    code, out, _ = run(capsys, "describe", "--ring", "T(2,Z(2))", "--format", "json")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["size"] == 8
    assert rec["units"]["count"] == 2
    assert rec["jacobson_radical"]["members"] == ["[0,0,0,0]", "[0,1,0,0]"]
    assert rec["ideal_count"] == 5
    assert rec["commutative"] is False


def test_classify_single_element(capsys):
    code, out, _ = run(
        capsys, "classify", "--ring", "M(2,Z(2))", "--element", "[0,1,0,0]", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["regular"] and rec["unit_regular"] and not rec["strongly_regular"]
    assert rec["unit_regular_witness"] == "[0,1,1,0]"
    assert rec["nilpotency_index"] == 2


def test_classify_whole_ring(capsys):
    code, out, _ = run(capsys, "classify", "--ring", "Z(6)")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_ideals_listing(capsys):
    code, out, _ = run(capsys, "ideals", "--ring", "Z(6)")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0] == "#0 size=1 {0}"
    assert lines[-1].startswith("#3 size=6")


def test_check_false_without_strict_is_zero(capsys):
    code, out, _ = run(capsys, "check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all")
    assert code == 0
    assert "holds      false" in out
    assert "a=[0,1,0,0] r=[0,0,1,0]" in out


def test_check_strict_exit_one(capsys):
    code, _, _ = run(
        capsys, "check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all", "--strict"
    )
    assert code == 1


def test_check_json_fields(capsys):
    code, out, _ = run(
        capsys, "check", "square-stable", "--ring", "M(2,Z(2))", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["predicate"] == "square-stable"
    assert rec["holds"] is False
    assert rec["counterexample"]["a"] == {"index": 2, "name": "[0,1,0,0]"}
    assert rec["counterexample"]["r"] == {"index": 4, "name": "[0,0,1,0]"}
    assert set(rec) == {
        "type", "ring", "ideal", "predicate", "holds", "witness",
        "counterexample", "checked", "elapsed_ms", "fault",
    }


def test_check_ring_level_predicate(capsys):
    code, out, _ = run(capsys, "check", "abelian", "--ring", "M(2,Z(2))", "--format", "json")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["holds"] is False and rec["ideal"] is None


def test_check_gen_ideal(capsys):
    code, out, _ = run(
        capsys, "check", "regular", "--ring", "Z(6)", "--ideal", "gen(2)", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["ideal"]["members"] == ["0", "2", "4"]
    assert rec["holds"] is True


def test_verify_single_instance(capsys):
    code, out, _ = run(
        capsys, "verify", "T33", "--ring", "Z(4)", "--ideal", "jacobson", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["theorem"] == "T33"
    assert rec["clauses"] == [True, True]
    assert rec["consistent"] is True
    assert set(rec) == {
        "type", "ring", "ideal", "theorem", "hypotheses", "hypotheses_hold",
        "clauses", "consistent", "detail", "witness",
    }


def test_verify_all_ideals_of_one_ring(capsys):
    code, out, _ = run(capsys, "verify", "T33,C43", "--ring", "Z(6)", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert len(recs) == 8  # 4 ideals x 2 claims
    assert all(r["consistent"] in (True, None) for r in recs)


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "T99", "--ring", "Z(4)")
    assert code == 2
    assert "unknown theorem id" in err


def test_verify_corpus_file(capsys, tmp_path):
    corpus = tmp_path / "small.toml"
    corpus.write_text(
        'rings = ["Z(4)", "T(2,Z(2))"]\ntheorems = ["L31", "T33"]\n'
    )
    code, out, _ = run(capsys, "verify", "all", "--corpus", str(corpus), "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert recs[-1]["type"] == "summary"
    assert recs[-1]["inconsistencies"] == 0
    assert {r["theorem"] for r in recs[:-1]} == {"L31", "T33"}
    assert {r["ring"] for r in recs[:-1]} == {"Z(4)", "T(2,Z(2))"}


def test_verify_default_corpus_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "L31", "--threads", "2")
    assert code == 0
    assert "inconsistencies: 0" in out


def test_example41_found(capsys):
    code, out, _ = run(capsys, "example41", "--n", "3")
    assert code == 0
    assert "found a nonzero square stable regular ideal" in out


def test_example41_not_qualifying(capsys):
    code, out, _ = run(capsys, "example41", "--n", "4")
    assert code == 0
    assert "does not qualify" in out


def test_example41_json(capsys):
    code, out, _ = run(capsys, "example41", "--n", "6", "--format", "json")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["consistent"] is True
    assert rec["witness"]["ideal-size"] == 9


def test_search_text(capsys):
    code, out, _ = run(
        capsys, "search", "--family", "M(2,Z(n))", "--range", "2..3",
        "--holds", "regular", "--fails", "reduced",
    )
    assert code == 0
    assert "hits: 2" in out


def test_search_strict_exit(capsys):
    code, _, _ = run(
        capsys, "search", "--family", "M(2,Z(n))", "--range", "2,3",
        "--holds", "regular", "--fails", "reduced", "--strict",
    )
    assert code == 1


def test_search_empty(capsys):
    code, out, _ = run(
        capsys, "search", "--family", "Z(n)", "--range", "2..8",
        "--holds", "exchange", "--fails", "square-stable", "--format", "json",
    )
    assert code == 0
    recs = json_lines(out)
    assert recs[-1]["hits"] == 0


def test_syntax_error_exit_two(capsys):
    code, _, err = run(capsys, "check", "square-stable", "--ring", "Zi(3")
    assert code == 2
    assert "offset 4" in err


def test_size_error_exit_two(capsys):
    code, _, err = run(capsys, "describe", "--ring", "M(2,Z(9))")
    assert code == 2
    assert "SizeExceeded" in err


def test_bad_element_literal_exit_two(capsys):
    code, _, err = run(capsys, "check", "regular", "--ring", "Z(6)", "--ideal", "gen(1+1i)")
    assert code == 2
