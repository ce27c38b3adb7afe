"""Catalog integrity: record invariants, cross-references, and export."""

import json

import pytest

from delpezzo.catalog import (
    CONTRACTIONS,
    MAP_TYPES,
    FamilyRecord,
    builtin_catalog,
    construction_models,
    export,
    lookup,
    rank2_sources,
)


def test_catalog_size_and_unique_ids():
    records = builtin_catalog()
    assert len(records) == 55
    ids = [r.id for r in records]
    assert len(set(ids)) == 55


def test_smooth_list_composition():
    smooth = [r for r in builtin_catalog() if r.id.startswith("thm2.1-")]
    assert len(smooth) == 9  # eight numbered items, one of them split in two
    assert {r.id: r.degree for r in smooth} == {
        "thm2.1-1": 1,
        "thm2.1-2": 2,
        "thm2.1-3": 3,
        "thm2.1-4": 4,
        "thm2.1-5": 5,
        "thm2.1-6a": 6,
        "thm2.1-6b": 6,
        "thm2.1-7": 7,
        "thm2.1-8": 8,
    }
    assert all(r.anticanonical_map == "Ample" for r in smooth)
    assert [r.id for r in smooth if r.picard == 1] == [
        "thm2.1-1",
        "thm2.1-2",
        "thm2.1-3",
        "thm2.1-4",
        "thm2.1-5",
        "thm2.1-8",
    ]


def test_record_invariants():
    for r in builtin_catalog():
        assert r.index == r.dim - 1
        assert r.degree >= 1
        assert r.contraction in CONTRACTIONS
        assert r.anticanonical_map in MAP_TYPES
        assert r.citation


def test_cross_references_resolve():
    records = builtin_catalog()
    by_id = {r.id: r for r in records}
    for r in records:
        if r.flop_partner is not None:
            partner = by_id[r.flop_partner]
            assert partner.flop_partner == r.id
            assert partner.degree == r.degree
        if r.smoothing is not None:
            target = by_id[r.smoothing]
            assert target.id.startswith("thm2.1-")
            assert target.degree == r.degree
            assert target.picard == r.picard - 1


def test_flop_partner_examples_pinned():
    assert lookup("thm3.4-4").flop_partner == "thm3.5-1"
    assert lookup("thm3.5-1").flop_partner == "thm3.4-4"
    assert lookup("thm3.4-2").flop_partner == "thm3.6-3"
    assert lookup("thm3.6-4").flop_partner == "thm3.5-2"
    # degree <= 2 families flop to themselves
    for rid in ("thm3.4-1", "thm3.4-5", "thm3.4-6", "thm3.6-1", "thm3.6-2"):
        assert lookup(rid).flop_partner == rid


def test_smoothings_pair_up_by_degree():
    smoothed = [r for r in builtin_catalog() if r.smoothing is not None]
    assert len(smoothed) == 14
    assert all(r.dim == 3 and r.picard == 2 for r in smoothed)
    assert lookup("thm3.4-6").smoothing == "thm2.1-1"
    assert lookup("thm3.5-1").smoothing == "thm2.1-5"


def test_lookup_aliases_and_misses():
    assert lookup("V2.3") is lookup("thm2.1-3")
    assert lookup("V2.5").degree == 5
    assert lookup("thm4.1-f2-c5") is not None
    assert lookup("nosuch") is None
    assert lookup("") is None


def test_rho3_records_have_divisorial_split_case():
    for tag in ("p1p1", "f2"):
        rec = lookup(f"thm4.1-{tag}-c0")
        assert rec.anticanonical_map == "Divisorial"
        assert rec.degree == 8
        rest = [
            lookup(f"thm4.1-{tag}-c{c2}") for c2 in (2, 3, 4, 5, 6, 7)
        ]
        assert [r.degree for r in rest] == [6, 5, 4, 3, 2, 1]
        assert all(r.anticanonical_map == "Small" for r in rest)


# ---------------------------------------------------------------------------
# record validation
# ---------------------------------------------------------------------------


def _record(**overrides):
    base = dict(
        id="test-1",
        dim=3,
        degree=2,
        picard=1,
        index=2,
        contraction="Fano",
        anticanonical_map="Ample",
        flop_partner=None,
        smoothing=None,
        citation="Theorem 0.0",
        notes="a record used only by the tests",
    )
    base.update(overrides)
    return FamilyRecord(**base)


def test_record_accepts_valid_data():
    assert _record().degree == 2


def test_record_rejects_nonpositive_degree():
    with pytest.raises(ValueError, match="degree"):
        _record(degree=0)


def test_record_rejects_wrong_index():
    with pytest.raises(ValueError, match="index"):
        _record(index=3)


def test_record_rejects_unknown_enums():
    with pytest.raises(ValueError, match="contraction"):
        _record(contraction="Flip")
    with pytest.raises(ValueError, match="map type"):
        _record(anticanonical_map="Tiny")


def test_record_rejects_commas_in_text():
    with pytest.raises(ValueError, match="may not contain commas"):
        _record(notes="one, two")
    with pytest.raises(ValueError, match="may not contain commas"):
        _record(citation="Theorem 0.0, part 2")


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------


def test_construction_models_known_and_unknown():
    (grass,) = construction_models("thm2.1-5")
    assert grass.kind == "grass" and grass.data == (2, 5)
    assert construction_models("thm3.1-1a") == ()
    assert construction_models("nosuch") == ()


def test_rank2_sources_frozen():
    sources = rank2_sources()
    assert len(sources) == 24
    assert sources == sorted(sources)
    assert ("thm2.1-6a", "P2", 3) in sources
    assert ("thm4.1-f2-c7", "F2", 7) in sources
    kinds = {kind for _, kind, _ in sources}
    assert kinds == {"P2", "P1xP1", "F2"}


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def test_json_export_round_trip():
    payload = json.loads(export("json").decode("utf-8"))
    assert len(payload) == 55
    ids = [row["id"] for row in payload]
    assert ids == sorted(ids)
    assert ids[0] == "prop5.1-1"
    by_id = {row["id"]: row for row in payload}
    # absent optional fields are omitted rather than null
    assert "flop_partner" not in by_id["thm2.1-1"]
    assert by_id["thm3.4-4"]["flop_partner"] == "thm3.5-1"
    # the export carries exactly the catalog's data
    for r in builtin_catalog():
        row = by_id[r.id]
        assert row["degree"] == r.degree
        assert row["citation"] == r.citation


def test_csv_export_shape():
    data = export("csv").decode("utf-8")
    lines = data.strip().split("\n")
    assert len(lines) == 56
    header = lines[0].split(",")
    assert header[0] == "id" and header[-1] == "notes"
    assert '"' not in data  # no field ever needs quoting
    for line in lines[1:]:
        assert len(line.split(",")) == len(header)


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError, match="format"):
        export("xml")


def test_exports_are_deterministic():
    assert export("json") == export("json")
    assert export("csv") == export("csv")
