"""Verification-ledger structure and rendering."""

import json

from wresbd.ledger import build_ledger, render_json, render_text


def test_entry_ids_unique_and_complete():
    led = build_ledger("dirac", [1])
    ids = [e["id"] for e in led["entries"]]
    assert len(ids) == len(set(ids))
    for required in ("(3.18)", "(3.23)", "(3.33)", "(3.38)", "(3.43)",
                     "(3.48)", "(3.59)", "(3.63)", "(3.65)", "(3.67)"):
        assert required in ids


def test_empty_seed_list_gives_exact_only_ledger():
    led = build_ledger("signature", [])
    assert led["seeds"] == []
    assert all(e["seeds"] == [] for e in led["entries"])
    assert led["all_match_oracle"] is True
    assert "symbolic check only" in render_text(led)


def test_json_entries_sorted_by_id():
    led = build_ledger("dirac", [1], case_ids=["aI", "aII", "aIII"])
    data = json.loads(render_json(led))
    ids = [e["id"] for e in data["entries"]]
    assert ids == sorted(ids, key=lambda s: float(s.strip("()")))


def test_text_report_shows_both_values_per_entry():
    led = build_ledger("dirac", [2], case_ids=["b"])
    text = render_text(led)
    assert "(3.33)" in text
    assert "exact:" in text and "paper:" in text
    assert "match_paper=" in text and "match_oracle=" in text


def test_interior_term_rendered_as_annotation():
    for fam in ("dirac", "signature"):
        led = build_ledger(fam, [])
        assert led["interior_term"]
        assert "reported, not verified" in render_text(led)
