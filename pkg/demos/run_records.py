"""
Recording runs and comparing them
=================================

Every experiment boils down to: at each size, which diagram did the
method pick and how big was it?  Records capture that as one JSON
object per line (dimension kept as a decimal string, since the numbers
outgrow every float long before size 100), and two record files over
the same sizes reduce to a CSV of per-size ratios.

The same surface is scriptable without Python:

    youngdim seq --n 16 --out greedy.jsonl
    youngdim improve --in greedy.jsonl --depth 3 --out better.jsonl --ratios-out ratios.csv
"""

import tempfile
from pathlib import Path

from youngdim import (
    emit_records,
    greedy_sequence,
    load_records,
    ratios_csv,
    record_for,
    sequence_improve,
)
from youngdim.records import record_to_json

work = Path(tempfile.mkdtemp(prefix="youngdim-demo-"))

# Records for the greedy sequence up to 16 boxes.
seq = greedy_sequence(16)
greedy_records = [record_for(d, "greedy") for d in seq]
print(record_to_json(greedy_records[14]))

greedy_path = work / "greedy.jsonl"
emit_records(greedy_records, greedy_path)
back = load_records(greedy_path)
print("roundtrip intact:", back == greedy_records)

# Improve the sequence by re-searching each size three levels below,
# then compare the two runs size by size.
out = sequence_improve(seq, 3)
improved_records = [
    record_for(d, "improve" if d.size in out.improved_sizes else "greedy")
    for d in out.sequence
]
csv_path = work / "ratios.csv"
ratios_csv(greedy_records, improved_records, csv_path)
print(csv_path.read_text(), end="")
