"""The command-line interface: exit codes, schemas, determinism."""

import csv
import json

from fdensity import cli


def run(argv, tmp_path, name="out"):
    path = tmp_path / name
    rc = cli.main(list(argv) + ["--out", str(path)])
    return rc, path.read_text() if path.exists() else ""


def test_group_verify_passes(tmp_path):
    rc, text = run(["group-verify", "--format", "csv"], tmp_path)
    assert rc == 0
    rows = list(csv.DictReader(text.splitlines()))
    assert all(r["status"] == "pass" for r in rows)
    assert any("beta^(alpha^3)" in r["relation"] for r in rows)


def test_group_verify_negative_control(tmp_path):
    rc, text = run(
        ["group-verify", "--inject-bad-relator", "--format", "csv"], tmp_path
    )
    assert rc == 2
    assert "FAIL" in text


def test_xi_csv_schema_and_values(tmp_path):
    rc, text = run(["xi", "--kmax", "2"], tmp_path)
    assert rc == 0
    header = text.splitlines()[0].split(",")
    assert header == [
        "k", "xi_lo", "xi_hi", "density_standard", "density_symmetric",
        "isolated_limit", "bprime_density", "doubling_ratio", "provenance",
    ]
    rows = list(csv.DictReader(text.splitlines()))
    assert [r["k"] for r in rows] == ["0", "1", "2"]
    assert rows[0]["xi_lo"] == "1.000000000000"
    assert rows[1]["xi_lo"].startswith("0.6180339887")
    assert rows[1]["density_standard"].startswith("2.7639320225")
    assert rows[0]["bprime_density"] == "NA"
    for r in rows:
        assert r["xi_lo"] <= r["xi_hi"]


def test_trunc_flag(tmp_path):
    base = ["isolated", "--n", "6", "--k", "2", "--mode", "dp"]
    _, plain = run(base, tmp_path, "p")
    rc, wide = run(base + ["--trunc", "40"], tmp_path, "w")
    assert rc == 0
    # A wider series order reads the same coefficients.
    assert plain == wide
    assert cli.main(base + ["--trunc", "3"]) == 3


def test_density_csv_golden_row(tmp_path):
    rc, text = run(
        ["density", "--n", "2", "--k", "1", "--genset", "symmetric"], tmp_path
    )
    assert rc == 0
    (row,) = list(csv.DictReader(text.splitlines()))
    assert row["vertices"] == "3"
    assert row["density_num"] == "4" and row["density_den"] == "3"
    assert row["cheeger"] == "8"
    assert row["outer_boundary"] == "8"
    assert row["provenance"] == "[exact-enumeration]"


def test_density_mode_dp_skips_boundary(tmp_path):
    rc, text = run(
        ["density", "--n", "40", "--k", "2", "--mode", "dp", "--genset", "standard"],
        tmp_path,
    )
    assert rc == 0
    (row,) = list(csv.DictReader(text.splitlines()))
    assert row["outer_boundary"] == "NA"
    assert row["provenance"] == "[exact-dp]"


def test_density_custom_genset(tmp_path):
    rc, text = run(
        ["density", "--n", "4", "--k", "1", "--genset", "custom:x0,x1,x2"], tmp_path
    )
    assert rc == 0
    (row,) = list(csv.DictReader(text.splitlines()))
    assert row["density_num"] == "12" and row["density_den"] == "5"


def test_isolated_table(tmp_path):
    rc, text = run(["isolated", "--nmax", "5", "--k", "1", "--mode", "both"], tmp_path)
    assert rc == 0
    rows = list(csv.DictReader(text.splitlines()))
    assert [r["beta"] for r in rows] == ["1", "3", "7", "15", "30"]
    assert [r["isolated"] for r in rows] == ["1", "0", "2", "2", "5"]
    assert rows[0]["provenance"] == "[exact-enumeration] [exact-dp]"


def test_enumerate_listing(tmp_path):
    rc, text = run(["enumerate", "--n", "3", "--k", "1"], tmp_path)
    assert rc == 0
    rows = list(csv.DictReader(text.splitlines()))
    assert len(rows) == 7
    assert rows[0]["forest"] == "(..) *."
    assert sum(r["isolated"] == "yes" for r in rows) == 2


def test_theorem1_meta(tmp_path):
    rc, text = run(["theorem1", "--kmax", "48"], tmp_path)
    assert rc == 0
    payload = json.loads(text)
    assert payload["meta"]["first_k_bprime_above_3"] == 48
    assert payload["meta"]["swap_bound_certified_all_k"] is True
    assert "threads" not in payload["meta"]["config"]


def test_theorem1_no_witness_exit(tmp_path):
    rc, _ = run(["theorem1", "--kmax", "10"], tmp_path)
    assert rc == 2


def test_theorem2_meta(tmp_path):
    rc, text = run(["theorem2", "--kmax", "8", "--n-small", "5"], tmp_path)
    assert rc == 0
    payload = json.loads(text)
    assert payload["meta"]["first_k_three_xi_below_1"] == 6
    assert payload["meta"]["boundary_checks_pass"] is True


def test_embed_verify_and_controls(tmp_path):
    rc, text = run(["embed-verify", "--nmax", "4", "--kmax", "2"], tmp_path)
    assert rc == 0
    payload = json.loads(text)
    assert all(r["status"] == "consistent+injective" for r in payload["rows"])
    rc, text = run(["embed-verify", "--perturb"], tmp_path, "pert.json")
    assert rc == 0
    assert "broken as expected" in text


def test_embed_verify_list_requires_single_case(tmp_path):
    rc, _ = run(["embed-verify", "--list"], tmp_path)
    assert rc == 3
    rc, text = run(
        ["embed-verify", "--n", "2", "--k", "1", "--list", "--format", "csv"], tmp_path
    )
    assert rc == 0
    assert "*(..)" in text and "X1" in text


def test_exit_codes():
    assert cli.main(["density", "--k", "1"]) == 3  # missing --n/--nmax
    assert cli.main(["density", "--n", "2", "--nmax", "3", "--k", "1"]) == 3
    assert cli.main(["enumerate", "--n", "20", "--k", "6", "--cap", "10"]) == 2
    assert cli.main(["nonsense"]) == 3
    assert cli.main(["density", "--n", "2", "--k", "1", "--genset", "custom:"]) == 3


def test_thread_count_does_not_change_bytes(tmp_path):
    invocations = [
        ["xi", "--kmax", "6"],
        ["isolated", "--nmax", "6", "--kmax", "2", "--format", "json"],
        ["density", "--nmax", "5", "--kmax", "1", "--genset", "extended"],
    ]
    for i, argv in enumerate(invocations):
        _, a = run(argv + ["--threads", "1"], tmp_path, f"a{i}")
        _, b = run(argv + ["--threads", "2"], tmp_path, f"b{i}")
        assert a == b and a


def test_json_meta_shape(tmp_path):
    rc, text = run(["xi", "--kmax", "1", "--format", "json"], tmp_path)
    assert rc == 0
    payload = json.loads(text)
    assert set(payload) == {"meta", "rows"}
    meta = payload["meta"]
    assert meta["command"] == "xi"
    assert meta["version"]
    assert meta["config"]["kmax"] == 1
    assert "out" not in meta["config"] and "threads" not in meta["config"]
