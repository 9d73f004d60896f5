"""
Parsing a bibliographic export into a clean corpus
==================================================

"""

# The bundled sample export mimics a literature-database CSV download:
# Title, Abstract, Author Keywords, Year, Source title.
from importlib import resources

from foresight import corpus_stats, filter_records, parse_export

data = resources.files("foresight.data").joinpath("sample_corpus.csv").read_bytes()
rs = parse_export(data, "csv")
print(f"parsed {len(rs)} records, {len(rs.warnings)} warnings")

# Each record keeps the fields the rest of the pipeline needs.
first = rs.records[0]
print(first.id, "|", first.title, "|", first.year, "|", first.keywords)

# Corpus-level statistics: record count, publication-year histogram,
# mean abstract length.
stats = corpus_stats(rs)
for year in sorted(stats["year_histogram"]):
    print(year, "#" * stats["year_histogram"][year])
print(f"mean abstract length: {stats['mean_abstract_length']:.0f} chars")

# Filters return a new record set; provenance travels along.
recent = filter_records(rs, min_year=2020, require_abstract=True)
print(f"{len(recent)} records from 2020 on")

# RIS exports work the same way through the format argument.
ris = b"""TY  - JOUR
TI  - A tiny RIS example
AB  - Shows that tagged reference files parse too.
KW  - example
PY  - 2023//
ER  -
"""
print(parse_export(ris, "ris").records[0].title)
