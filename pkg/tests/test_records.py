import json
import math

import pytest

from youngdim import (
    YoungDiagram,
    dim_exact,
    emit_records,
    format_partition,
    load_records,
    parse_partition,
    partitions,
    ratios_csv,
    record_for,
)
from youngdim.dimension import log_dim
from youngdim.errors import (
    EmptyDiagramError,
    KeyMismatch,
    NonMonotoneRows,
    PartitionParseError,
    RecordSchemaError,
)
from youngdim.records import record_to_json


def test_partition_text_roundtrip():
    assert format_partition(YoungDiagram([4, 2, 2])) == "4,2,2"
    assert format_partition(YoungDiagram([])) == ""
    assert parse_partition("4,2,2").rows == (4, 2, 2)
    assert parse_partition(" 3 , 1 ").rows == (3, 1)
    assert parse_partition("").rows == ()
    with pytest.raises(NonMonotoneRows):
        parse_partition("1,2")
    with pytest.raises(PartitionParseError):
        parse_partition("a")
    with pytest.raises(PartitionParseError):
        parse_partition("3,,1")


def test_record_for_known_values():
    rec = record_for(YoungDiagram([4, 2, 1]), "greedy")
    assert rec.n == 7
    assert rec.rows == "4,2,1"
    assert rec.dim == "35"
    assert rec.log_dim == pytest.approx(math.log(35))
    assert rec.c == pytest.approx(
        (-1 / math.sqrt(7)) * (math.log(35) - 0.5 * math.lgamma(8))
    )
    assert rec.source == "greedy"


def test_record_for_guards():
    with pytest.raises(ValueError):
        record_for(YoungDiagram([2, 1]), "psychic")
    with pytest.raises(EmptyDiagramError):
        record_for(YoungDiagram([]), "oracle")
    rec = record_for(YoungDiagram([2, 1]), "oracle", max_exact_n=0)
    assert rec.dim is None
    assert rec.log_dim == pytest.approx(math.log(2))


def test_record_json_shape():
    rec = record_for(YoungDiagram([2, 1]), "astar")
    obj = json.loads(record_to_json(rec))
    assert list(obj) == ["n", "rows", "log_dim", "dim", "c", "source"]
    assert obj["dim"] == "2"


def test_emit_and_load_roundtrip(tmp_path):
    sources = ("greedy", "shake", "branches", "astar", "improve", "oracle")
    recs = []
    for i, d in enumerate(x for n in range(1, 9) for x in partitions(n)):
        recs.append(record_for(d, sources[i % len(sources)]))
    assert len(recs) > 50
    path = tmp_path / "runs.jsonl"
    emit_records(recs, path)
    assert load_records(path) == recs


def test_huge_dimension_survives_the_roundtrip(tmp_path):
    stairs = YoungDiagram(range(20, 0, -1))
    rec = record_for(stairs, "oracle")
    assert len(rec.dim) > 100
    assert int(rec.dim) == dim_exact(stairs)
    path = tmp_path / "big.jsonl"
    emit_records([rec], path)
    assert load_records(path) == [rec]


def test_load_reports_the_offending_line(tmp_path):
    good = record_to_json(record_for(YoungDiagram([2, 1]), "greedy"))
    lines = [good] * 6 + ['{"n": 3}']
    path = tmp_path / "bad.jsonl"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(RecordSchemaError) as err:
        load_records(path)
    assert err.value.line_number == 7


def test_load_rejects_tampered_log_dim(tmp_path):
    rec = record_for(YoungDiagram([3, 2]), "oracle")
    obj = json.loads(record_to_json(rec))
    obj["log_dim"] = obj["log_dim"] + 0.5
    path = tmp_path / "skew.jsonl"
    path.write_text(json.dumps(obj) + "\n")
    with pytest.raises(RecordSchemaError):
        load_records(path)


def test_ratios_csv_exact_and_fallback(tmp_path):
    old = [record_for(YoungDiagram([4, 2, 2]), "greedy")]
    new = [record_for(YoungDiagram([4, 3, 1]), "astar")]
    path = tmp_path / "ratios.csv"
    ratios_csv(old, new, path)
    header, row = path.read_text().strip().splitlines()
    assert header == "n,ratio,log_ratio,improved"
    n, ratio, log_ratio, improved = row.split(",")
    assert (n, improved) == ("8", "true")
    assert float(ratio) == 1.25
    assert float(log_ratio) == pytest.approx(math.log(70) - math.log(56))

    same = [record_for(YoungDiagram([3, 2]), "greedy")]
    ratios_csv(same, same, path)
    row = path.read_text().strip().splitlines()[1]
    assert row == "5,1.0,0.0,false"

    # above the exact-dimension cutoff the ratio falls back to the log gap
    old_log = [record_for(YoungDiagram([4, 2, 2]), "greedy", max_exact_n=0)]
    new_log = [record_for(YoungDiagram([4, 3, 1]), "astar", max_exact_n=0)]
    ratios_csv(old_log, new_log, path)
    row = path.read_text().strip().splitlines()[1]
    ratio = float(row.split(",")[1])
    assert ratio == pytest.approx(70 / 56)


def test_ratios_csv_key_mismatch(tmp_path):
    a = [record_for(YoungDiagram([2, 1]), "greedy")]
    b = [record_for(YoungDiagram([3, 1]), "greedy")]
    path = tmp_path / "no.csv"
    with pytest.raises(KeyMismatch):
        ratios_csv(a, b + [record_for(YoungDiagram([2, 2]), "astar")], path)
    dup = a + [record_for(YoungDiagram([1, 1, 1]), "oracle")]
    with pytest.raises(KeyMismatch):
        ratios_csv(dup, dup, path)
