"""Front-end behavior: exit codes, JSON determinism, flag plumbing."""

import json

from omega.cli import main
from omega.spectra import e6_semisimple_spectrum


def run(capsys, argv):
    rc = main(argv)
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_spectrum_example(capsys):
    rc, out, err = run(capsys, ["spectrum", "--group", "E6(2)u", "--eps", "+", "--json"])
    assert rc == 0 and err == ""
    payload = json.loads(out)
    want = [int(g) for g in e6_semisimple_spectrum(2, "+").generators]
    assert payload["generators"] == want
    assert payload["scope"] == "p_prime_only"


def test_json_is_byte_identical(capsys):
    argv = ["prime-graph", "--group", "3D4(2)s", "--json"]
    rc1, out1, _ = run(capsys, argv)
    rc2, out2, _ = run(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_zsigmondy_gap_and_hit(capsys):
    rc, out, _ = run(capsys, ["zsigmondy", "--q", "2", "--n", "6", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["r"] is None and payload["note"]
    rc, out, _ = run(capsys, ["zsigmondy", "--q", "2", "--n", "4", "--json"])
    assert json.loads(out)["r"] == 5


def test_usage_errors_exit_2(capsys):
    # argparse rejections and our own ValueErrors share the exit code
    assert run(capsys, ["enumerate", "--group", "A(1,4)u", "--frobnicate"])[0] == 2
    rc, _, err = run(capsys, ["spectrum", "--group", "bogus"])
    assert rc == 2 and "group grammar" in err
    assert run(capsys, ["spectrum", "--group", "2E6(2)s", "--eps", "+"])[0] == 2
    assert run(capsys, ["zsigmondy", "--q", "2"])[0] == 2


def test_version_guard(capsys):
    # E6(2): gcd(3, q-1) = 1 so both versions carry the same descriptor
    assert run(capsys, ["spectrum", "--group", "E6(2)u"])[0] == 0
    rc, _, err = run(capsys, ["spectrum", "--group", "E6(4)u"])
    assert rc == 2 and "center of order 3" in err
    rc, _, err = run(capsys, ["spectrum", "--group", "C(2,3)s"])
    assert rc == 2 and "universal version" in err
    assert run(capsys, ["spectrum", "--group", "E7(2)s"])[0] == 0


def test_help_exits_zero(capsys):
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["spectrum", "--help"])[0] == 0


def test_enumerate_small(capsys):
    rc, out, _ = run(capsys, ["enumerate", "--group", "A(1,4)u", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["size"] == 60
    assert payload["order_histogram"] == [[1, 1], [2, 15], [3, 20], [5, 24]]


def test_enumerate_cap_abort(capsys):
    rc, out, err = run(capsys, ["enumerate", "--group", "C(3,3)u", "--cap", "1000"])
    assert rc == 1 and out == ""
    assert "at least" in err and "cap 1000" in err


def test_enumerate_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("OMEGA_CACHE", str(tmp_path))
    rc, out, _ = run(capsys, ["enumerate", "--group", "A(1,4)u", "--json"])
    assert rc == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["A_1_4_u.cap16777216.json", "A_1_4_u.cap16777216.tbl"]
    # warm read hands back the same payload
    rc, out2, _ = run(capsys, ["enumerate", "--group", "A(1,4)u", "--json"])
    assert out2 == out


def test_semidirect(capsys):
    rc, out, _ = run(capsys, ["semidirect", "--group", "A(1,2)u", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["size"] == 24
    assert payload["added_orders"] == [4]


def test_frobenius_roundtrip(capsys):
    rc, out, _ = run(capsys, ["frobenius", "--group", "A(2,2)u", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["verified"]
    assert (payload["kernel_order"], payload["complement_order"]) == (4, 3)
    # the (n, q) = (2, 5) complement degenerates; that is a failure, not a crash
    rc, _, err = run(capsys, ["frobenius", "--group", "A(1,5)u"])
    assert rc == 1 and "degenerates" in err


def test_verify_by_id(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "C1", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert [r["verdict"] for r in payload["results"]] == ["pass"] * 4
    assert run(capsys, ["verify", "--suite", ","])[0] == 2


def test_verify_skipped_is_not_failure(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "skipped", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert {r["verdict"] for r in payload["results"]} == {"skipped"}


def test_order_subcommand(capsys):
    rc, out, _ = run(capsys, ["order", "--group", "C(2,2)u", "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["order"] == 720
    assert "2^" in payload["factorization"]
