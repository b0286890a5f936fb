import json

from click.testing import CliRunner

from gkcodes.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_points_counts():
    res = run("points", "--n", "2")
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["schema"] == 1
    assert data["total"] == 225
    assert data["counts"] == {"p_inf": 1, "p_list": 2, "q_list": 6, "others": 216}
    assert len(data["orbit1"]) == 9


def test_dim():
    res = run("dim", "--n", "2", "--divisor", '{"inf": 19}')
    assert res.exit_code == 0
    assert json.loads(res.stdout)["dim"] == 10


def test_dim_bad_divisor():
    res = run("dim", "--n", "2", "--divisor", "not json")
    assert res.exit_code == 2
    res = run("dim", "--n", "2", "--divisor", '{"inf": 0, "pj": [1, 1, 1]}')
    assert res.exit_code == 2


def test_gamma_match_exit_zero():
    res = run("gamma", "--n", "2", "--m", "1", "--verify", "both")
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["verification"] == {"mode": "both", "match": True}
    assert [1, 19] in data["gamma"] and len(data["gamma"]) == 10


def test_gamma_m_out_of_range():
    assert run("gamma", "--n", "2", "--m", "3").exit_code == 2
    assert run("gamma", "--n", "2", "--m", "0").exit_code == 2


def test_gamma_closed_only_n3():
    res = run("gamma", "--n", "3", "--m", "2")
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["verification"]["mode"] == "closed"
    assert len(data["gamma"]) == 195


def test_determinism():
    a = run("semigroup", "--n", "2", "--m", "1", "--T", "12")
    b = run("semigroup", "--n", "2", "--m", "1", "--T", "12")
    assert a.exit_code == b.exit_code == 0
    assert a.stdout == b.stdout


def test_gaps_csv():
    res = run("gaps", "--n", "2", "--m", "1", "--T", "5", "--format", "csv")
    assert res.exit_code == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "p_inf,p_1"
    assert "1,1" in lines[1:]


def test_puregaps_checks():
    res = run(
        "puregaps", "--n", "2", "--m", "1", "--T", "12",
        "--check", "11,1", "--check", "3,3",
    )
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    verdicts = {tuple(c["tuple"]): c["is_pure_gap"] for c in data["checks"]}
    assert verdicts == {(11, 1): True, (3, 3): False}
    assert [3, 2] in data["box_pure_gaps"]
    ks = {e["k"]: tuple(e["tuple"]) for e in data["corollary_family"]}
    assert ks == {2: (11, 1), 3: (3, 2)}
    assert all(e["verified"] for e in data["corollary_family"])


def test_code_with_pure_gap_pair():
    res = run(
        "code", "--n", "2", "--G", '{"inf": 21, "pj": [1]}',
        "--pure-gap-pair", "11,1", "11,1",
    )
    assert res.exit_code == 0
    data = json.loads(res.stdout)
    assert data["length"] == 223
    assert data["k"] == 13
    assert data["puregap_d_omega"] == 6
    assert data["goppa_d_omega"] == 4


def test_code_bad_pair_exit_4():
    res = run(
        "code", "--n", "2", "--G", '{"inf": 21, "pj": [5]}',
        "--pure-gap-pair", "3,3", "11,1",
    )
    assert res.exit_code == 4


def test_code_pair_mismatch_exit_2():
    res = run(
        "code", "--n", "2", "--G", '{"inf": 21, "pj": [5]}',
        "--pure-gap-pair", "11,1", "11,1",
    )
    assert res.exit_code == 2


def test_code_matrix_out(tmp_path):
    out = tmp_path / "gen.csv"
    res = run("code", "--n", "2", "--G", '{"inf": 11}', "--matrix-out", str(out))
    assert res.exit_code == 0
    rows = out.read_text().strip().splitlines()
    assert len(rows) == json.loads(res.stdout)["k"] == 4
    assert all(len(r.split(",")) == 224 for r in rows)


def test_unsupported_n_exit_2():
    assert run("points", "--n", "6").exit_code == 2
