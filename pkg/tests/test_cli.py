"""Command-line entry point."""

import json

import pytest

from wresbd.cli import main


def test_verify_text_output(capsys):
    rc = main(["verify", "--family", "dirac", "--seeds", "5",
               "--case", "aII"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "(3.18)" in out
    assert "all_match_oracle: True" in out


def test_verify_json_output(capsys):
    rc = main(["verify", "--family", "signature", "--seeds", "5,9",
               "--format", "json", "--case", "aIII"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["family"] == "signature"
    assert data["seeds"] == [5, 9]
    assert data["all_match_oracle"] is True
    ids = [e["id"] for e in data["entries"]]
    assert "(5.15)" in ids


def test_case_restriction_limits_entries(capsys):
    main(["verify", "--family", "dirac", "--seeds", "5", "--format",
          "json", "--case", "aI"])
    data = json.loads(capsys.readouterr().out)
    assert all(e["case"] == "aI" for e in data["entries"])


def test_seeds_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("WRESBD_SEEDS", "8")
    rc = main(["verify", "--family", "dirac", "--case", "aII",
               "--format", "json"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["seeds"] == [8]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    rc = main(["verify", "--family", "dirac", "--seeds", "5", "--case",
               "aII", "--format", "json", "--out", str(path)])
    assert rc == 0
    data = json.loads(path.read_text())
    assert data["all_match_oracle"] is True


def test_output_is_deterministic(capsys):
    args = ["verify", "--family", "dirac", "--seeds", "5", "--case", "aIII"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second


def test_unknown_family_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "--family", "laplace", "--seeds", "1"])
