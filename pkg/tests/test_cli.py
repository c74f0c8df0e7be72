import json

import pytest

from spinduct.cli import main, parse_problem
from spinduct.errors import SchemaViolation


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_info(capsys):
    code, out = run_cli(capsys, "info", "--group", "G2", "--subgroup", "a2long")
    assert code == 0
    doc = json.loads(out)
    d = doc["diagnostics"]
    assert d["weyl_order"] == 12
    assert d["weyl_order_h"] == 6
    assert d["coset_count"] == 2
    assert d["rho_g"] == {"num": [1, 1], "den": 1}


def test_whset(capsys):
    code, out = run_cli(capsys, "whset", "--group", "F4", "--subgroup", "b4")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["representatives"]) == 3
    dets = [r["det"] for r in doc["representatives"]]
    assert sorted(dets) == [-1, 1, 1]


def test_induce_unit(capsys):
    code, out = run_cli(
        capsys, "induce", "--group", "B3:spin", "--subgroup", "so3xso4",
        "--input", "spinor",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 1
    assert doc["result"]["terms"] == [
        {"coeff": 1, "weight": {"num": [0, 0, 0], "den": 1}}
    ]


def test_induce_euler_characteristic(capsys):
    code, out = run_cli(
        capsys, "induce", "--group", "A2", "--subgroup", "t",
        "--input", "dual-euler",
    )
    doc = json.loads(out)
    assert doc["result"]["terms"][0]["coeff"] == 6


def test_multiplet_f4(capsys):
    code, out = run_cli(
        capsys, "multiplet", "--group", "F4", "--subgroup", "b4",
        "--input", "e^rhoG",
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["members"]) == 3
    assert doc["alternating_dimension_sum"] == 0
    assert sorted(doc["dimensions"]) == [44, 84, 128]


def test_spinc_refusal(capsys):
    code, out = run_cli(
        capsys, "spinc", "--group", "B3:spin", "--subgroup", "so3xso4"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["is_c_spinorial"] is False


def test_bwb(capsys):
    code, out = run_cli(
        capsys, "bwb", "--group", "A2", "--subgroup", "t", "--mu", "1,1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["terms"] == [
        {"coeff": 1, "weight": {"num": [0, 0], "den": 1}}
    ]


def test_pairing(capsys):
    code, out = run_cli(
        capsys, "pairing", "--group", "A1", "--subgroup", "t", "--tau", "rhoM"
    )
    doc = json.loads(out)
    assert doc["is_unit"] is True


def test_branch(capsys):
    code, out = run_cli(
        capsys, "branch", "--group", "A2", "--subgroup", "levi1",
        "--input", json.dumps({"scope": "G", "terms": [{"coeff": 1, "weight": [1, 1]}]}),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 8
    assert len(doc["result"]["terms"]) == 4


def test_lefschetz(capsys):
    code, out = run_cli(
        capsys, "lefschetz", "--group", "G2", "--subgroup", "a2long",
        "--input", "spinor", "--trials", "5", "--seed", "3",
    )
    doc = json.loads(out)
    assert doc["passed"] is True


def test_verify_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "spinc", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_domain_error_exit_code(capsys):
    code, out = run_cli(capsys, "info", "--group", "Z9")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["code"] == "unknown-series"
    code, out = run_cli(capsys, "bwb", "--group", "A2")
    assert code == 1
    assert json.loads(out)["error"]["code"] == "schema-violation"


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_determinism(capsys):
    argv = ["induce", "--group", "A2", "--subgroup", "levi1", "--input", "spinor"]
    _, out1 = run_cli(capsys, *argv)
    _, out2 = run_cli(capsys, *argv)
    assert out1 == out2


def test_subgroup_by_indices(capsys):
    # positive-root indices: A2 positives are alpha1, alpha2, alpha1+alpha2
    code, out = run_cli(
        capsys, "info", "--group", "A2", "--subgroup", "[0]"
    )
    assert code == 0
    assert json.loads(out)["diagnostics"]["weyl_order_h"] == 2


def test_parse_problem():
    doc = parse_problem(json.dumps({"group": "A2", "subgroup": "t", "seed": 5}))
    assert doc["seed"] == 5 and doc["trials"] == 20
    with pytest.raises(SchemaViolation) as exc:
        parse_problem("{bad json")
    with pytest.raises(SchemaViolation) as exc:
        parse_problem(json.dumps({"unknown_field": 1}))
    assert exc.value.pointer == "/unknown_field"
    with pytest.raises(SchemaViolation):
        parse_problem(json.dumps({"seed": "x"}))
    with pytest.raises(SchemaViolation):
        parse_problem(json.dumps({"command": "explode"}))


def test_problem_document_roundtrip(tmp_path, capsys):
    doc = {
        "command": "induce",
        "group": "G2",
        "subgroup": "a2long",
        "input": "spinor",
        "seed": 2,
    }
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(doc))
    code, out = run_cli(capsys, "induce", "--problem", str(path))
    assert code == 0
    result = json.loads(out)
    assert result["dimension"] == 1


def test_root_index_out_of_range(capsys):
    code, out = run_cli(capsys, "info", "--group", "A2", "--subgroup", "[9]")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["code"] == "schema-violation"
    assert "/subgroup/roots/0" in doc["error"]["pointer"]


def test_problem_document_roundtrips_identically():
    text = json.dumps(
        {"command": "induce", "group": "A2", "subgroup": "t", "input": "e^rhoG"}
    )
    doc1 = parse_problem(text)
    doc2 = parse_problem(json.dumps(doc1))
    assert doc1 == doc2


def test_result_payload_deserializes_to_computed_value(capsys):
    from spinduct.charring import irreducible_restriction
    from spinduct.cli import _group_from_doc
    from spinduct.induction import induce_twisted_spinc
    from spinduct.zoo import zoo_problem

    code, out = run_cli(
        capsys, "induce", "--group", "G2", "--subgroup", "a2long",
        "--input", "dual-euler",
    )
    assert code == 0
    payload = json.loads(out)["result"]
    p = zoo_problem("G2", "a2long")
    from spinduct.charring import dualize

    expect = induce_twisted_spinc(p, dualize(p.euler))
    assert _group_from_doc(p, payload) == expect


def test_weyl_order_cap_flag(capsys):
    import spinduct.rootdata as rd

    saved = rd.WEYL_ORDER_CAP
    try:
        code, out = run_cli(
            capsys, "info", "--group", "C2", "--subgroup", "t",
            "--max-weyl-order", "4",
        )
        assert code == 1
        assert json.loads(out)["error"]["code"] == "order-cap-exceeded"
    finally:
        rd.WEYL_ORDER_CAP = saved
