"""Parse exported bibliographic record files (CSV or RIS) into a clean corpus.

Column mapping for CSV follows the de-facto Scopus export vocabulary,
matched case-insensitively: Title, Abstract, Author Keywords (split on ";"),
Year, Source title. RIS entries use the TI/AB/KW/PY tags with TY/ER record
delimiters. Rows missing both title and abstract are skipped with a warning;
out-of-range years are nulled with a warning rather than dropping the row.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field, asdict

from .errors import ParseError, UsageError

YEAR_MIN = 1900
YEAR_MAX = 2100

_CSV_COLUMNS = {
    "title": "title",
    "abstract": "abstract",
    "author keywords": "keywords",
    "year": "year",
    "source title": "source",
}

_RIS_TAG_RE = re.compile(r"^([A-Z][A-Z0-9])\s{2}-\s?(.*)$")


@dataclass(frozen=True)
class BiblioRecord:
    id: str
    title: str
    abstract: str = ""
    keywords: tuple[str, ...] = ()
    year: int | None = None
    source: str = ""

    def text(self) -> str:
        """Title and abstract joined; the unit fed to tokenization."""
        return f"{self.title} {self.abstract}".strip()


@dataclass(frozen=True)
class QueryMeta:
    query_string: str = ""
    retrieved_at: str = ""
    source_label: str = ""


@dataclass
class RecordSet:
    records: list[BiblioRecord]
    provenance: QueryMeta = field(default_factory=QueryMeta)
    warnings: list[tuple[int, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def to_dict(self) -> dict:
        return {
            "provenance": asdict(self.provenance),
            "records": [
                {
                    "id": r.id,
                    "title": r.title,
                    "abstract": r.abstract,
                    "keywords": list(r.keywords),
                    "year": r.year,
                    "source": r.source,
                }
                for r in self.records
            ],
            "warnings": [[i, reason] for i, reason in self.warnings],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RecordSet":
        records = [
            BiblioRecord(
                id=r["id"],
                title=r["title"],
                abstract=r.get("abstract", ""),
                keywords=tuple(r.get("keywords", ())),
                year=r.get("year"),
                source=r.get("source", ""),
            )
            for r in data["records"]
        ]
        prov = data.get("provenance", {})
        return cls(
            records=records,
            provenance=QueryMeta(
                query_string=prov.get("query_string", ""),
                retrieved_at=prov.get("retrieved_at", ""),
                source_label=prov.get("source_label", ""),
            ),
            warnings=[(int(i), reason) for i, reason in data.get("warnings", [])],
        )

    @classmethod
    def from_json(cls, text: str) -> "RecordSet":
        return cls.from_dict(json.loads(text))


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"file is not valid UTF-8: {exc}") from None


def _coerce_year(raw: str | None, row_index: int, warnings: list) -> int | None:
    if raw is None or not str(raw).strip():
        return None
    raw = str(raw).strip()
    try:
        year = int(raw)
    except ValueError:
        warnings.append((row_index, f"unparseable year {raw!r}"))
        return None
    if not (YEAR_MIN <= year <= YEAR_MAX):
        warnings.append((row_index, f"year {year} outside [{YEAR_MIN}, {YEAR_MAX}]"))
        return None
    return year


def _split_keywords(raw: str) -> tuple[str, ...]:
    return tuple(k.strip() for k in raw.split(";") if k.strip())


def parse_export(data: bytes, format: str, provenance: QueryMeta | None = None) -> RecordSet:
    """Parse raw export bytes into a RecordSet.

    Soft failures (missing title+abstract, bad years) are recorded as
    (row index, reason) warnings; structural problems raise ParseError.
    """
    if format == "csv":
        rows, warnings = _parse_csv(_decode(data))
    elif format == "ris":
        rows, warnings = _parse_ris(_decode(data))
    else:
        raise UsageError(f"unknown format {format!r}; expected 'csv' or 'ris'")
    if not rows and not warnings:
        raise ParseError("no records")
    records = [
        BiblioRecord(id=f"rec-{i + 1:04d}", **fields) for i, fields in enumerate(rows)
    ]
    return RecordSet(
        records=records,
        provenance=provenance or QueryMeta(),
        warnings=warnings,
    )


def _parse_csv(text: str) -> tuple[list[dict], list[tuple[int, str]]]:
    reader = csv.reader(io.StringIO(text), strict=True)
    try:
        header = next(reader, None)
    except csv.Error as exc:
        raise ParseError(f"malformed CSV: {exc}", line=1) from None
    if header is None:
        raise ParseError("no records")
    colmap = {}
    for idx, name in enumerate(header):
        key = name.strip().lower()
        if key in _CSV_COLUMNS:
            colmap[_CSV_COLUMNS[key]] = idx
    if "title" not in colmap and "abstract" not in colmap:
        raise ParseError(
            f"header {header!r} has no recognized columns "
            "(expected Title / Abstract / Author Keywords / Year / Source title)"
        )

    rows: list[dict] = []
    warnings: list[tuple[int, str]] = []
    row_index = 0
    while True:
        try:
            row = next(reader, None)
        except csv.Error as exc:
            raise ParseError(f"malformed CSV: {exc}", line=reader.line_num) from None
        if row is None:
            break
        if not any(cell.strip() for cell in row):
            continue  # blank line, not a record

        def cell(field_name: str) -> str:
            idx = colmap.get(field_name)
            if idx is None or idx >= len(row):
                return ""
            return row[idx].strip()

        title, abstract = cell("title"), cell("abstract")
        if not title and not abstract:
            warnings.append((row_index, "missing both title and abstract"))
            row_index += 1
            continue
        rows.append(
            {
                "title": title,
                "abstract": abstract,
                "keywords": _split_keywords(cell("keywords")),
                "year": _coerce_year(cell("year"), row_index, warnings),
                "source": cell("source"),
            }
        )
        row_index += 1
    return rows, warnings


def _parse_ris(text: str) -> tuple[list[dict], list[tuple[int, str]]]:
    rows: list[dict] = []
    warnings: list[tuple[int, str]] = []
    current: dict | None = None
    entry_index = 0

    def flush(entry: dict | None):
        nonlocal entry_index
        if entry is None:
            return
        if not entry["title"] and not entry["abstract"]:
            warnings.append((entry_index, "missing both title and abstract"))
        else:
            rows.append(
                {
                    "title": entry["title"],
                    "abstract": entry["abstract"],
                    "keywords": tuple(entry["keywords"]),
                    "year": _coerce_year(entry["year"], entry_index, warnings),
                    "source": "",
                }
            )
        entry_index += 1

    for lineno, line in enumerate(text.splitlines(), start=1):
        m = _RIS_TAG_RE.match(line)
        if m is None:
            if line.strip() and current is not None:
                # continuation of the previous value (wrapped abstract)
                current["abstract"] = (current["abstract"] + " " + line.strip()).strip()
            continue
        tag, value = m.group(1), m.group(2).strip()
        if tag == "TY":
            flush(current)
            current = {"title": "", "abstract": "", "keywords": [], "year": ""}
        elif current is None:
            raise ParseError(f"tag {tag} before any TY record start", line=lineno)
        elif tag == "ER":
            flush(current)
            current = None
        elif tag == "TI":
            current["title"] = value
        elif tag == "AB":
            current["abstract"] = value
        elif tag == "KW":
            if value:
                current["keywords"].append(value)
        elif tag == "PY":
            # Scopus writes PY  - 2021// ; keep the leading year component
            current["year"] = value.split("/")[0]
    flush(current)
    return rows, warnings


def filter_records(
    rs: RecordSet,
    min_year: int | None = None,
    max_year: int | None = None,
    require_abstract: bool = False,
) -> RecordSet:
    """Subsequence of rs satisfying all supplied predicates; provenance carried through."""
    if min_year is not None and max_year is not None and min_year > max_year:
        raise UsageError(f"min_year {min_year} exceeds max_year {max_year}")
    kept = []
    for rec in rs.records:
        if min_year is not None and (rec.year is None or rec.year < min_year):
            continue
        if max_year is not None and (rec.year is None or rec.year > max_year):
            continue
        if require_abstract and not rec.abstract.strip():
            continue
        kept.append(rec)
    return RecordSet(records=kept, provenance=rs.provenance, warnings=list(rs.warnings))


def corpus_stats(rs: RecordSet) -> dict:
    """Record count, year histogram (unknown years binned separately), mean abstract length."""
    histogram: dict = {}
    for rec in rs.records:
        key = rec.year if rec.year is not None else "unknown"
        histogram[key] = histogram.get(key, 0) + 1
    n = len(rs.records)
    mean_len = sum(len(r.abstract) for r in rs.records) / n if n else 0.0
    return {
        "n_records": n,
        "year_histogram": histogram,
        "mean_abstract_length": mean_len,
    }
