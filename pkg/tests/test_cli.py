from __future__ import annotations

import json

import pytest

from ctrwqo.antichains import make, FamilySpec
from ctrwqo.cli import main
from ctrwqo.contraction import is_contraction
from ctrwqo.dichotomy import dichotomy_verdict
from ctrwqo.errors import DisconnectedInput, TooLarge
from ctrwqo.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    d_graph,
    diamond,
    empty_graph,
    path_graph,
    star_graph,
    write_graph6,
)


def run(capsys, *argv):
    code = main(list(argv))
    return json.loads(capsys.readouterr().out), code


def test_dichotomy_wqo_side():
    for h in [complete_graph(1), complete_graph(2), complete_graph(3), star_graph(2), diamond()]:
        assert dichotomy_verdict(h).verdict == "WQO"


def test_dichotomy_witnesses():
    v = dichotomy_verdict(d_graph(3))
    assert v.verdict == "NOT_WQO" and v.family == "ANTIHOLE"
    assert [m["spec"] for m in v.members] == ["ANTIHOLE:6", "ANTIHOLE:7", "ANTIHOLE:8"]
    v = dichotomy_verdict(path_graph(4))
    assert v.family == "K2R"
    assert [m["spec"] for m in v.members] == ["K2R:2", "K2R:3", "K2R:4", "K2R:5"]
    # h itself is skipped as a witness
    v = dichotomy_verdict(cycle_graph(4))
    assert "K2R:2" not in [m["spec"] for m in v.members]


def test_dichotomy_witnesses_are_sound():
    for h in [complete_graph(4), cycle_graph(5), complete_bipartite(2, 3), d_graph(3), path_graph(5)]:
        v = dichotomy_verdict(h)
        assert v.verdict == "NOT_WQO" and v.members
        for m in v.members:
            assert not is_contraction(h, make(FamilySpec.parse(m["spec"])))


def test_dichotomy_errors():
    with pytest.raises(DisconnectedInput):
        dichotomy_verdict(empty_graph(2))
    with pytest.raises(TooLarge):
        dichotomy_verdict(path_graph(15))


def test_check(capsys):
    doc, code = run(capsys, "check", "@", "D~{")
    assert code == 0 and doc["contraction"] is True and doc["model"] == [[0, 1, 2, 3, 4]]
    doc, code = run(capsys, "check", "DR:2", write_graph6(cycle_graph(5)))
    assert code == 1 and doc["contraction"] is False and doc["model"] is None


def test_check_input_errors(capsys):
    doc, code = run(capsys, "check", "zz", "D~{")
    assert code == 2 and doc["kind"] == "MalformedGraph6"
    doc, code = run(capsys, "check", "A?", "D~{")
    assert code == 2 and doc["kind"] == "DisconnectedInput"
    doc, code = run(capsys, "check", "W:1,1", "D~{")
    assert code == 2


def test_check_budget_exhausted(capsys):
    doc, code = run(capsys, "check", "K2R:4", "K2R:7", "--budget", "5")
    assert code == 3 and doc["error"] == "budget exhausted"


def test_check_rooted(capsys):
    doc, code = run(capsys, "check-rooted", "A_@0", "Bg@1")
    assert code == 0 and doc["rooted_contraction"]
    doc, code = run(capsys, "check-rooted", "Bg@1", "Bg@0")
    assert code == 1
    doc, code = run(capsys, "check-rooted", "Bg", "Bg@0")
    assert code == 2


def test_recognize(capsys):
    doc, code = run(capsys, "recognize", "K2R:3")
    assert code == 1
    assert doc["clique_cactus"] is False and doc["excludes_diamond"] is False
    assert doc["offending_blocks"] == [[0, 1, 2, 3, 4]]
    doc, code = run(capsys, "recognize", write_graph6(cycle_graph(6)))
    assert code == 0 and doc["blocks"] == [{"kind": "cycle", "vertices": [0, 1, 2, 3, 4, 5]}]


def test_dichotomy_command(capsys):
    doc, code = run(capsys, "dichotomy", "DR:3")
    assert code == 0 and doc["verdict"] == "NOT_WQO" and doc["witness_family"] == "ANTIHOLE"


def test_antichain_verify(capsys, tmp_path):
    out = tmp_path / "a.json"
    doc, code = run(capsys, "antichain", "verify", "ANTIHOLE", "6..8", "--json", str(out))
    assert code == 0 and doc["antichain"] is True
    assert json.loads(out.read_text()) == doc
    doc, code = run(capsys, "antichain", "verify", "DR", "1..3")
    assert code == 1 and doc["comparable_pairs"]
    assert doc["prediction_mismatches"] == []


def test_output_is_stable_across_workers(capsys):
    main(["antichain", "verify", "K2R", "2..5", "--workers", "1"])
    one = capsys.readouterr().out
    main(["antichain", "verify", "K2R", "2..5", "--workers", "2"])
    two = capsys.readouterr().out
    assert one == two


def test_enumerate(capsys):
    doc, code = run(capsys, "enumerate", "--n", "5")
    assert code == 0 and doc["count"] == 21
    doc, code = run(capsys, "enumerate", "--n", "4", "--filter", "clique-cactus")
    assert doc["count"] == 5
    doc, code = run(capsys, "enumerate", "--n", "9")
    assert code == 2


def test_matrix(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("\n".join(write_graph6(g) for g in [complete_graph(1), complete_graph(2), path_graph(3)]) + "\n")
    doc, code = run(capsys, "matrix", str(f))
    assert code == 0
    assert doc["matrix"][0] == ["equal", "below", "below"]
    assert doc["matrix"][2] == ["above", "above", "equal"]
    doc, code = run(capsys, "matrix", str(tmp_path / "missing.g6"))
    assert code == 2


def test_ding_premises_command(capsys):
    doc, code = run(capsys, "ding-premises", "--i", "3", "--q", "3..4")
    assert code == 0 and doc["ok"] is True
    assert sorted(doc["premise_iii"]["comparable"]) == [["K2R:4", "W:3,3"], ["K2R:4", "W:3,4"]]


@pytest.mark.parametrize("lemma,max_n", [
    ("dec", 6), ("cycles", 6), ("2c", 6), ("kpp1", 4), ("comp", 4), ("ctr", 5),
    ("dpgraph", 5), ("cycleclique", 4), ("recons", 6), ("imctr", 5),
])
def test_verify_lemma(capsys, lemma, max_n):
    doc, code = run(capsys, "verify-lemma", lemma, "--max-n", str(max_n), "--trials", "20")
    assert code == 0 and doc["pass"] is True and doc["checked"] > 0


def test_verify_lemma_dec_counts(capsys):
    doc, _ = run(capsys, "verify-lemma", "dec", "--max-n", "6")
    assert doc["checked"] == 1 + 1 + 2 + 6 + 21 + 112


def test_bad_arguments_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["verify-lemma", "nope"])
    assert info.value.code == 2
