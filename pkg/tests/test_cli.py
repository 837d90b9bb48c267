"""End-to-end command behavior: exit codes, payloads, files, determinism."""

import json

import pytest

from closureops import complexity_profile, kreps_representation
from closureops.cli import main
from closureops.jsonio import (
    kreps_doc,
    labeling_doc,
    profile_doc,
    topology_doc,
)
from closureops.labeling import canonical_labeling, minimal_labeling
from conftest import (
    alice_preference,
    animals_labeling,
    animals_topology,
    bob_preference,
    crown_topology,
    fork_topology,
    ground,
    topo,
)


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _table_doc(f):
    return {
        "elements": list(f.ground.elements),
        "map": [
            {"from": list(k.members()), "to": list(v.members())}
            for k, v in f.table().items()
        ],
    }


def _pref_doc(pref):
    g = pref.ground
    return {
        "elements": list(g.elements),
        "utilities": [
            {"menu": list(g.mask(bits).members()), "value": str(pref.values[bits])}
            for bits in range(1, g.full_bits + 1)
        ],
    }


BROKEN_TABLE = {
    "elements": ["a", "b"],
    "map": [
        {"from": [], "to": []},
        {"from": ["a"], "to": ["a"]},
        {"from": ["b"], "to": ["b"]},
        {"from": ["a", "b"], "to": ["a"]},  # drops b: not extensive
    ],
}


# ------------------------------------------------------------------ validate


def test_validate_accepts_a_closure_table(tmp_path, capsys):
    doc = _table_doc(fork_topology().operator())
    code, out, err = _run(capsys, "validate", "--table", _write(tmp_path, "t.json", doc))
    assert code == 0
    assert err == ""
    report = json.loads(out)
    assert report["ok"] is True
    assert report["summary"] == ["all closure axioms hold"]


def test_validate_rejects_a_broken_table_with_witnesses(tmp_path, capsys):
    path = _write(tmp_path, "t.json", BROKEN_TABLE)
    code, out, err = _run(capsys, "validate", "--table", path)
    assert code == 1
    assert "validation failed" in err
    report = json.loads(out)
    assert report["ok"] is False
    assert report["violations"]["extensivity"] == [["a", "b"]]


def test_validate_incomplete_table_is_malformed(tmp_path, capsys):
    doc = {"elements": ["a", "b"], "map": [{"from": [], "to": []}]}
    code, out, err = _run(capsys, "validate", "--table", _write(tmp_path, "t.json", doc))
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_unreadable_or_invalid_input_is_malformed(tmp_path, capsys):
    code, _, err = _run(capsys, "validate", "--table", str(tmp_path / "absent.json"))
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = _run(capsys, "validate", "--table", str(bad))
    assert code == 2 and "invalid JSON" in err


def test_usage_errors_exit_with_code_two(capsys):
    for argv in ([], ["no-such-command"], ["validate"]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2
        capsys.readouterr()


def test_help_exits_cleanly(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--help"])
    assert err.value.code == 0
    assert "closureops" in capsys.readouterr().out


# ------------------------------------------------------------------ topology


def test_topology_from_table(tmp_path, capsys):
    doc = _table_doc(fork_topology().operator())
    code, out, _ = _run(
        capsys, "topology", "--from-table", _write(tmp_path, "t.json", doc)
    )
    assert code == 0
    assert json.loads(out) == topology_doc(fork_topology())


def test_topology_from_labels(tmp_path, capsys):
    path = _write(tmp_path, "lab.json", labeling_doc(animals_labeling()))
    code, out, _ = _run(capsys, "topology", "--from-labels", path)
    assert code == 0
    assert json.loads(out) == topology_doc(animals_topology())


def test_topology_from_generators(tmp_path, capsys):
    doc = {
        "elements": ["a", "b", "c", "d"],
        "binary": [{"cutoff": ["a", "b"]}, {"cutoff": ["a", "c"]}],
    }
    path = _write(tmp_path, "gen.json", doc)
    code, out, _ = _run(capsys, "topology", "--from-generators", path)
    assert code == 0
    assert json.loads(out) == topology_doc(fork_topology())


def test_topology_sources_are_mutually_exclusive(tmp_path, capsys):
    path = _write(tmp_path, "t.json", {})
    with pytest.raises(SystemExit) as err:
        main(["topology", "--from-table", path, "--from-labels", path])
    assert err.value.code == 2
    capsys.readouterr()


def test_topology_from_broken_table_fails_mathematically(tmp_path, capsys):
    path = _write(tmp_path, "t.json", BROKEN_TABLE)
    code, out, err = _run(capsys, "topology", "--from-table", path)
    assert code == 1
    assert "error" in err
    assert json.loads(out)["ok"] is False  # the validation report is emitted


# -------------------------------------------------- complexity and decompose


def test_complexity_profile_payload(tmp_path, capsys):
    path = _write(tmp_path, "t.json", topology_doc(fork_topology()))
    code, out, _ = _run(capsys, "complexity", "--topology", path)
    assert code == 0
    expected = profile_doc(complexity_profile(fork_topology().operator()))
    assert json.loads(out) == expected


def test_complexity_rejects_a_non_intersection_closed_family(tmp_path, capsys):
    doc = {
        "elements": ["a", "b", "c"],
        "closed_sets": [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]],
    }
    path = _write(tmp_path, "t.json", doc)
    code, out, err = _run(capsys, "complexity", "--topology", path)
    assert code == 1
    assert "error" in err
    assert "error" in json.loads(out)


def test_decompose_into_weak_orders(tmp_path, capsys):
    path = _write(tmp_path, "t.json", topology_doc(crown_topology()))
    code, out, _ = _run(capsys, "decompose", "--topology", path, "--kind", "weak-orders")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "weak-orders"
    assert payload["count"] == 3
    assert payload["generators"] == [
        {"classes_worst_first": [["a"], ["b"], ["c"]]},
        {"classes_worst_first": [["b"], ["a", "c"]]},
        {"classes_worst_first": [["c"], ["a", "b"]]},
    ]
    assert payload["verification"]["generates"] is True
    assert payload["verification"]["pointwise_equal"] is True


def test_decompose_into_binary_classifiers(tmp_path, capsys):
    path = _write(tmp_path, "t.json", topology_doc(fork_topology()))
    code, out, _ = _run(capsys, "decompose", "--topology", path, "--kind", "binary")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert payload["generators"] == [{"cutoff": ["a", "b"]}, {"cutoff": ["a", "c"]}]
    assert payload["verification"]["generates"] is True


# -------------------------------------------------------------------- labels


def test_labels_canonical_and_minimal(tmp_path, capsys):
    path = _write(tmp_path, "t.json", topology_doc(fork_topology()))
    f = fork_topology().operator()
    code, out, _ = _run(capsys, "labels", "--topology", path, "--canonical")
    assert code == 0
    assert json.loads(out) == labeling_doc(canonical_labeling(f))
    code, out, _ = _run(capsys, "labels", "--topology", path, "--minimal")
    assert code == 0
    assert json.loads(out) == labeling_doc(minimal_labeling(f))
    with pytest.raises(SystemExit):
        main(["labels", "--topology", path, "--canonical", "--minimal"])
    capsys.readouterr()


# ------------------------------------------------------------------ menu-rep


def test_menu_rep_kreps_for_bob(tmp_path, capsys):
    path = _write(tmp_path, "p.json", _pref_doc(bob_preference()))
    code, out, _ = _run(capsys, "menu-rep", "--preference", path, "--style", "kreps")
    assert code == 0
    payload = json.loads(out)
    expected = kreps_doc(kreps_representation(bob_preference()))
    expected["verification"] = {
        "axioms_ok": True,
        "signature_sound": True,
        "represents_preference": True,
        "menus_checked": 7,
    }
    assert payload == expected


def test_menu_rep_kreps_rejects_an_operator_argument(tmp_path, capsys):
    pref = _write(tmp_path, "p.json", _pref_doc(bob_preference()))
    top = _write(tmp_path, "t.json", topology_doc(fork_topology()))
    code, out, err = _run(
        capsys,
        "menu-rep", "--preference", pref, "--style", "kreps", "--operator", top,
    )
    assert code == 2
    assert out == "" and "error" in err


def test_menu_rep_additive_defaults_to_the_kreps_operator(tmp_path, capsys):
    path = _write(tmp_path, "p.json", _pref_doc(alice_preference()))
    code, out, _ = _run(capsys, "menu-rep", "--preference", path, "--style", "additive")
    assert code == 0
    payload = json.loads(out)
    assert payload["style"] == "additive"
    assert payload["state_count"] == 6
    assert payload["verification"]["exact_reproduction"] is True


def test_menu_rep_additive_with_an_explicit_operator(tmp_path, capsys):
    g = ground("xyz")
    pref = _write(tmp_path, "p.json", _pref_doc(alice_preference()))
    # The identity operator is respected by every preference.
    identity = topo(g, "", "x", "y", "z", "xy", "xz", "yz", "xyz")
    top = _write(tmp_path, "t.json", topology_doc(identity))
    code, out, _ = _run(
        capsys,
        "menu-rep", "--preference", pref, "--style", "additive", "--operator", top,
    )
    assert code == 0
    assert json.loads(out)["state_count"] == 14


def test_menu_rep_additive_reports_disrespected_operators(tmp_path, capsys):
    g = ground("xyz")
    pref = _write(tmp_path, "p.json", _pref_doc(alice_preference()))
    top = _write(tmp_path, "t.json", topology_doc(topo(g, "", "xyz")))
    code, out, err = _run(
        capsys,
        "menu-rep", "--preference", pref, "--style", "additive", "--operator", top,
    )
    assert code == 1
    assert "error" in err
    payload = json.loads(out)
    assert payload["witness"] == ["y"]


def test_menu_rep_rejects_axiom_violations_with_a_report(tmp_path, capsys):
    doc = {
        "elements": ["a", "b"],
        "utilities": [
            {"menu": ["a"], "value": 1},
            {"menu": ["b"], "value": 0},
            {"menu": ["a", "b"], "value": 0},
        ],
    }
    path = _write(tmp_path, "p.json", doc)
    code, out, err = _run(capsys, "menu-rep", "--preference", path, "--style", "kreps")
    assert code == 1
    assert "error" in err
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["flexibility_witnesses"] == [
        {"menu": ["a", "b"], "submenu": ["a"]}
    ]


# ----------------------------------------------------------- mobius and hasse


def test_mobius_payload(tmp_path, capsys):
    t = topo(ground("ab"), "", "a", "ab")
    path = _write(tmp_path, "t.json", topology_doc(t))
    code, out, _ = _run(capsys, "mobius", "--topology", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"][1] == {"from": [], "to": ["a"], "mu": -1}
    assert len(payload["entries"]) == 6


def test_hasse_json_payload(tmp_path, capsys):
    path = _write(tmp_path, "t.json", topology_doc(animals_topology()))
    code, out, _ = _run(capsys, "hasse", "--topology", path)
    assert code == 0
    payload = json.loads(out)
    assert len(payload["edges"]) == 12
    assert payload["edges"][0] == {"lower": [], "upper": ["a"]}


def test_hasse_dot_output_is_exact(tmp_path, capsys):
    t = topo(ground("ab"), "", "a", "ab")
    path = _write(tmp_path, "t.json", topology_doc(t))
    code, out, _ = _run(capsys, "hasse", "--topology", path, "--dot")
    assert code == 0
    assert out == (
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        '  n0 [label="∅"];\n'
        '  n1 [label="{a}"];\n'
        '  n2 [label="{a,b}"];\n'
        "  n0 -> n1;\n"
        "  n1 -> n2;\n"
        "}\n"
    )


# ------------------------------------------------------- output file handling


def test_out_flag_writes_the_same_bytes_as_stdout(tmp_path, capsys):
    src = _write(tmp_path, "t.json", topology_doc(fork_topology()))
    code, out, _ = _run(capsys, "complexity", "--topology", src)
    assert code == 0
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    for target in (first, second):
        code, piped, _ = _run(
            capsys, "--out", str(target), "complexity", "--topology", src
        )
        assert code == 0
        assert piped == ""  # --out diverts the report
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text(encoding="utf-8") == out


def test_out_flag_also_captures_failure_reports(tmp_path, capsys):
    table = _write(tmp_path, "t.json", BROKEN_TABLE)
    target = tmp_path / "report.json"
    code, out, _ = _run(
        capsys, "--out", str(target), "validate", "--table", table
    )
    assert code == 1
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["ok"] is False
