"""Typed table documents with deterministic CSV and JSON codecs.

Every command-line output is one of six document kinds (prime-set,
hmc-set, filtered-set, correlation-profile, verification-report,
hit-report). Both formats carry identical information and round-trip
exactly: parse(serialize(doc)) == doc, and identical inputs always
produce byte-identical output (fixed key and column order, no
timestamps).

CSV framing: lines starting with '#' hold key,value metadata (tool,
version, kind, p, then kind-specific parameters), followed by one header
row and the data rows. All fields are labels or integers, so no quoting
is needed. Documents with two tables (kept rows plus drop reasons, checks
plus summary stats) separate the sections with a single blank line.
Multiple documents concatenate; each starts at its '#tool' line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from ._version import __version__
from .analysis import CheckResult, CorrelationProfile, VerificationReport
from .designer import DesignResult, DesignSpec
from .sequences import hmc_set, prime_sequence
from .simulate import HitReport, PairHits

__all__ = [
    "FilteredSetDocument",
    "HitsDocument",
    "ProfileDocument",
    "ReportDocument",
    "SequenceRow",
    "SetDocument",
    "TableDocument",
    "filtered_set_document",
    "hit_report_document",
    "hmc_set_document",
    "parse",
    "parse_many",
    "prime_set_document",
    "profile_document",
    "report_document",
    "serialize",
    "serialize_many",
]

TOOL = "hmcseq"
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class SequenceRow:
    """One table row: sequence index k, elements, distance d (hmc only)."""

    k: int
    elements: tuple[int, ...]
    d: Optional[int] = None


@dataclass(frozen=True)
class SetDocument:
    """A whole prime-set or hmc-set table."""

    kind: str
    p: int
    rows: tuple[SequenceRow, ...]

    def __post_init__(self):
        if self.kind not in ("prime-set", "hmc-set"):
            raise ValueError("bad set kind %r" % (self.kind,))
        for row in self.rows:
            if len(row.elements) != self.p:
                raise ValueError("row %d has %d elements, want %d" % (row.k, len(row.elements), self.p))
            if (row.d is None) != (self.kind == "prime-set"):
                raise ValueError("d column must be present exactly for hmc rows")

    @property
    def family(self) -> str:
        return "prime" if self.kind == "prime-set" else "hmc"


@dataclass(frozen=True)
class FilteredSetDocument:
    """Kept hmc rows plus the (k, reason) list the filters dropped."""

    p: int
    d_req: int
    bad: tuple[int, ...]
    rows: tuple[SequenceRow, ...]
    dropped: tuple[tuple[int, str], ...]

    kind = "filtered-set"


@dataclass(frozen=True)
class ProfileDocument:
    """Shift-indexed coincidence counts for one sequence pair."""

    p: int
    k: int
    l: int
    values: tuple[int, ...]

    kind = "correlation-profile"


@dataclass(frozen=True)
class ReportDocument:
    """Named check outcomes plus correlation summary stats for one p."""

    p: int
    checks: tuple[CheckResult, ...]
    max_cross_correlation: int
    max_out_of_phase_autocorrelation: int

    kind = "verification-report"

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class HitsDocument:
    """Per-pair collision counts from a simulated period."""

    p: int
    pairs: tuple[PairHits, ...]

    kind = "hit-report"

    @property
    def max_hits(self) -> int:
        return max((h.hits for h in self.pairs), default=0)


TableDocument = Union[
    SetDocument, FilteredSetDocument, ProfileDocument, ReportDocument, HitsDocument
]


# --- builders ---------------------------------------------------------------


def prime_set_document(p: int) -> SetDocument:
    """All rows S_0 ... S_{p-1} (the zero row included for completeness)."""
    rows = tuple(SequenceRow(k, prime_sequence(p, k).elements) for k in range(p))
    return SetDocument("prime-set", p, rows)


def hmc_set_document(p: int) -> SetDocument:
    rows = tuple(SequenceRow(s.k, s.elements, s.min_distance) for s in hmc_set(p))
    return SetDocument("hmc-set", p, rows)


def filtered_set_document(result: DesignResult, spec: DesignSpec) -> FilteredSetDocument:
    rows = tuple(SequenceRow(s.k, s.elements, s.min_distance) for s in result.kept)
    return FilteredSetDocument(
        result.kept.p,
        spec.d_req,
        tuple(sorted(spec.bad_frequencies)),
        rows,
        tuple(result.dropped),
    )


def profile_document(p: int, k: int, l: int, profile: CorrelationProfile) -> ProfileDocument:
    return ProfileDocument(p, k, l, profile.values)


def report_document(report: VerificationReport) -> ReportDocument:
    return ReportDocument(
        report.p,
        report.checks,
        report.max_cross_correlation,
        report.max_out_of_phase_autocorrelation,
    )


def hit_report_document(report: HitReport) -> HitsDocument:
    return HitsDocument(report.p, report.pairs)


# --- CSV rendering ----------------------------------------------------------


def _meta_lines(doc, extra) -> list[str]:
    pairs = [("tool", TOOL), ("version", __version__), ("kind", doc.kind), ("p", str(doc.p))]
    pairs.extend(extra)
    return ["#%s,%s" % kv for kv in pairs]


def _seq_header(family: str, p: int) -> list[str]:
    if family == "prime":
        return ["label"] + ["j%d" % j for j in range(p)]
    return ["label"] + ["a%d" % j for j in range(1, p + 1)] + ["d"]


def _seq_rows(family: str, rows) -> list[str]:
    prefix = "S" if family == "prime" else "H"
    out = []
    for row in rows:
        cells = [prefix + str(row.k)] + [str(e) for e in row.elements]
        if family == "hmc":
            cells.append(str(row.d))
        out.append(",".join(cells))
    return out


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _csv_lines(doc) -> list[str]:
    if isinstance(doc, SetDocument):
        lines = _meta_lines(doc, [("family", doc.family)])
        lines.append(",".join(_seq_header(doc.family, doc.p)))
        lines.extend(_seq_rows(doc.family, doc.rows))
        return lines
    if isinstance(doc, FilteredSetDocument):
        bad = ";".join(str(b) for b in doc.bad)
        lines = _meta_lines(doc, [("family", "hmc"), ("d_req", str(doc.d_req)), ("bad", bad)])
        lines.append(",".join(_seq_header("hmc", doc.p)))
        lines.extend(_seq_rows("hmc", doc.rows))
        lines.append("")
        lines.append("k,reason")
        lines.extend("%d,%s" % kr for kr in doc.dropped)
        return lines
    if isinstance(doc, ProfileDocument):
        lines = _meta_lines(doc, [("k", str(doc.k)), ("l", str(doc.l))])
        lines.append("tau,count")
        lines.extend("%d,%d" % (tau, c) for tau, c in enumerate(doc.values))
        return lines
    if isinstance(doc, ReportDocument):
        lines = _meta_lines(doc, [])
        lines.append("check,passed,detail")
        lines.extend("%s,%s,%s" % (c.name, _bool(c.passed), c.detail) for c in doc.checks)
        lines.append("")
        lines.append("stat,value")
        lines.append("max_cross_correlation,%d" % doc.max_cross_correlation)
        lines.append("max_out_of_phase_autocorrelation,%d" % doc.max_out_of_phase_autocorrelation)
        return lines
    if isinstance(doc, HitsDocument):
        lines = _meta_lines(doc, [])
        lines.append("user_a,user_b,k,l,tau,hits")
        lines.extend(
            "%s,%s,%d,%d,%d,%d" % (h.user_a, h.user_b, h.k, h.l, h.tau, h.hits)
            for h in doc.pairs
        )
        lines.append("")
        lines.append("stat,value")
        lines.append("max_hits,%d" % doc.max_hits)
        return lines
    raise TypeError("not a table document: %r" % (doc,))


# --- JSON rendering ---------------------------------------------------------


def _json_obj(doc) -> dict:
    head = {"tool": TOOL, "version": __version__, "kind": doc.kind, "p": doc.p}
    if isinstance(doc, SetDocument):
        seqs = []
        for row in doc.rows:
            entry = {"k": row.k, "elements": list(row.elements)}
            if doc.family == "hmc":
                entry["d"] = row.d
            seqs.append(entry)
        return head | {"family": doc.family, "sequences": seqs}
    if isinstance(doc, FilteredSetDocument):
        seqs = [{"k": r.k, "elements": list(r.elements), "d": r.d} for r in doc.rows]
        dropped = [{"k": k, "reason": reason} for k, reason in doc.dropped]
        return head | {
            "family": "hmc",
            "d_req": doc.d_req,
            "bad": list(doc.bad),
            "sequences": seqs,
            "dropped": dropped,
        }
    if isinstance(doc, ProfileDocument):
        return head | {"k": doc.k, "l": doc.l, "profile": list(doc.values)}
    if isinstance(doc, ReportDocument):
        checks = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in doc.checks]
        return head | {
            "checks": checks,
            "max_cross_correlation": doc.max_cross_correlation,
            "max_out_of_phase_autocorrelation": doc.max_out_of_phase_autocorrelation,
        }
    if isinstance(doc, HitsDocument):
        pairs = [
            {"user_a": h.user_a, "user_b": h.user_b, "k": h.k, "l": h.l, "tau": h.tau, "hits": h.hits}
            for h in doc.pairs
        ]
        return head | {"pairs": pairs, "max_hits": doc.max_hits}
    raise TypeError("not a table document: %r" % (doc,))


def serialize(doc: TableDocument, fmt: str = "csv") -> str:
    if fmt not in FORMATS:
        raise ValueError("format must be one of %s, got %r" % (list(FORMATS), fmt))
    if fmt == "csv":
        return "\n".join(_csv_lines(doc)) + "\n"
    return json.dumps(_json_obj(doc), indent=2) + "\n"


def serialize_many(docs, fmt: str = "csv") -> str:
    docs = list(docs)
    if fmt == "json":
        return json.dumps([_json_obj(d) for d in docs], indent=2) + "\n"
    return "\n".join(serialize(d, fmt) for d in docs)


# --- parsing ----------------------------------------------------------------


def _fail(msg: str) -> ValueError:
    return ValueError("cannot parse document: %s" % msg)


def _int(cell: str, what: str) -> int:
    try:
        return int(cell)
    except ValueError:
        raise _fail("%s is not an integer: %r" % (what, cell)) from None


def _parse_bool(cell: str) -> bool:
    if cell == "true":
        return True
    if cell == "false":
        return False
    raise _fail("expected true/false, got %r" % (cell,))


def _split_label(label: str, family: str) -> int:
    prefix = "S" if family == "prime" else "H"
    if not label.startswith(prefix):
        raise _fail("label %r does not match family %s" % (label, family))
    return _int(label[len(prefix):], "label index")


def _parse_seq_section(section, family, p):
    if not section or section[0] != ",".join(_seq_header(family, p)):
        raise _fail("bad sequence header for family %s" % family)
    rows = []
    width = p + (2 if family == "hmc" else 1)
    for line in section[1:]:
        cells = line.split(",")
        if len(cells) != width:
            raise _fail("row has %d fields, want %d" % (len(cells), width))
        k = _split_label(cells[0], family)
        elements = tuple(_int(c, "element") for c in cells[1 : p + 1])
        d = _int(cells[p + 1], "d") if family == "hmc" else None
        rows.append(SequenceRow(k, elements, d))
    return tuple(rows)


def _parse_stat_section(section, wanted):
    if not section or section[0] != "stat,value":
        raise _fail("missing stat section")
    stats = {}
    for line in section[1:]:
        name, _, value = line.partition(",")
        stats[name] = _int(value, "stat %s" % name)
    if set(stats) != set(wanted):
        raise _fail("stat names %s, want %s" % (sorted(stats), sorted(wanted)))
    return stats


def _parse_csv(text: str) -> TableDocument:
    lines = text.splitlines()
    meta = {}
    body_at = 0
    for i, line in enumerate(lines):
        if not line.startswith("#"):
            body_at = i
            break
        key, _, value = line[1:].partition(",")
        if key in meta:
            raise _fail("duplicate metadata key %r" % key)
        meta[key] = value
    else:
        body_at = len(lines)

    if meta.get("tool") != TOOL:
        raise _fail("missing or foreign tool marker")
    for key in ("version", "kind", "p"):
        if key not in meta:
            raise _fail("missing metadata key %r" % key)
    kind = meta["kind"]
    p = _int(meta["p"], "p")

    sections = [[]]
    for line in lines[body_at:]:
        if line == "":
            sections.append([])
        else:
            sections[-1].append(line)
    while sections and not sections[-1]:
        sections.pop()

    def expect_sections(n):
        if len(sections) != n:
            raise _fail("%s needs %d sections, found %d" % (kind, n, len(sections)))

    if kind in ("prime-set", "hmc-set"):
        if meta.get("family") != ("prime" if kind == "prime-set" else "hmc"):
            raise _fail("family does not match kind %s" % kind)
        expect_sections(1)
        return SetDocument(kind, p, _parse_seq_section(sections[0], meta["family"], p))

    if kind == "filtered-set":
        if meta.get("family") != "hmc" or "d_req" not in meta or "bad" not in meta:
            raise _fail("filtered-set needs family=hmc, d_req and bad")
        d_req = _int(meta["d_req"], "d_req")
        bad = tuple(_int(c, "bad frequency") for c in meta["bad"].split(";") if c != "")
        expect_sections(2)
        rows = _parse_seq_section(sections[0], "hmc", p)
        drop_sec = sections[1]
        if not drop_sec or drop_sec[0] != "k,reason":
            raise _fail("missing dropped section header")
        dropped = []
        for line in drop_sec[1:]:
            cell_k, _, reason = line.partition(",")
            dropped.append((_int(cell_k, "dropped k"), reason))
        return FilteredSetDocument(p, d_req, bad, rows, tuple(dropped))

    if kind == "correlation-profile":
        if "k" not in meta or "l" not in meta:
            raise _fail("correlation-profile needs k and l")
        expect_sections(1)
        section = sections[0]
        if not section or section[0] != "tau,count":
            raise _fail("missing tau,count header")
        values = []
        for tau, line in enumerate(section[1:]):
            cell_tau, _, cell_count = line.partition(",")
            if _int(cell_tau, "tau") != tau:
                raise _fail("tau column must count up from 0")
            values.append(_int(cell_count, "count"))
        return ProfileDocument(p, _int(meta["k"], "k"), _int(meta["l"], "l"), tuple(values))

    if kind == "verification-report":
        expect_sections(2)
        section = sections[0]
        if not section or section[0] != "check,passed,detail":
            raise _fail("missing check section header")
        checks = []
        for line in section[1:]:
            cells = line.split(",")
            if len(cells) != 3:
                raise _fail("check row has %d fields, want 3" % len(cells))
            checks.append(CheckResult(cells[0], _parse_bool(cells[1]), cells[2]))
        stats = _parse_stat_section(
            sections[1], ("max_cross_correlation", "max_out_of_phase_autocorrelation")
        )
        return ReportDocument(
            p,
            tuple(checks),
            stats["max_cross_correlation"],
            stats["max_out_of_phase_autocorrelation"],
        )

    if kind == "hit-report":
        expect_sections(2)
        section = sections[0]
        if not section or section[0] != "user_a,user_b,k,l,tau,hits":
            raise _fail("missing pair section header")
        pairs = []
        for line in section[1:]:
            cells = line.split(",")
            if len(cells) != 6:
                raise _fail("pair row has %d fields, want 6" % len(cells))
            pairs.append(
                PairHits(
                    cells[0],
                    cells[1],
                    _int(cells[2], "k"),
                    _int(cells[3], "l"),
                    _int(cells[4], "tau"),
                    _int(cells[5], "hits"),
                )
            )
        doc = HitsDocument(p, tuple(pairs))
        stats = _parse_stat_section(sections[1], ("max_hits",))
        if stats["max_hits"] != doc.max_hits:
            raise _fail("max_hits %d disagrees with pair rows" % stats["max_hits"])
        return doc

    raise _fail("unknown kind %r" % kind)


def _need(obj: dict, key: str):
    if key not in obj:
        raise _fail("missing JSON key %r" % key)
    return obj[key]


def _parse_json_doc(obj) -> TableDocument:
    if not isinstance(obj, dict):
        raise _fail("JSON document must be an object")
    if obj.get("tool") != TOOL:
        raise _fail("missing or foreign tool marker")
    kind = _need(obj, "kind")
    p = _need(obj, "p")

    if kind in ("prime-set", "hmc-set"):
        family = "prime" if kind == "prime-set" else "hmc"
        if _need(obj, "family") != family:
            raise _fail("family does not match kind %s" % kind)
        rows = tuple(
            SequenceRow(
                _need(s, "k"),
                tuple(_need(s, "elements")),
                _need(s, "d") if family == "hmc" else None,
            )
            for s in _need(obj, "sequences")
        )
        return SetDocument(kind, p, rows)

    if kind == "filtered-set":
        rows = tuple(
            SequenceRow(_need(s, "k"), tuple(_need(s, "elements")), _need(s, "d"))
            for s in _need(obj, "sequences")
        )
        dropped = tuple((_need(d, "k"), _need(d, "reason")) for d in _need(obj, "dropped"))
        return FilteredSetDocument(
            p, _need(obj, "d_req"), tuple(_need(obj, "bad")), rows, dropped
        )

    if kind == "correlation-profile":
        return ProfileDocument(
            p, _need(obj, "k"), _need(obj, "l"), tuple(_need(obj, "profile"))
        )

    if kind == "verification-report":
        checks = tuple(
            CheckResult(_need(c, "name"), _need(c, "passed"), _need(c, "detail"))
            for c in _need(obj, "checks")
        )
        return ReportDocument(
            p,
            checks,
            _need(obj, "max_cross_correlation"),
            _need(obj, "max_out_of_phase_autocorrelation"),
        )

    if kind == "hit-report":
        pairs = tuple(
            PairHits(
                _need(h, "user_a"),
                _need(h, "user_b"),
                _need(h, "k"),
                _need(h, "l"),
                _need(h, "tau"),
                _need(h, "hits"),
            )
            for h in _need(obj, "pairs")
        )
        doc = HitsDocument(p, pairs)
        if _need(obj, "max_hits") != doc.max_hits:
            raise _fail("max_hits disagrees with pair rows")
        return doc

    raise _fail("unknown kind %r" % kind)


def parse(text: str) -> TableDocument:
    """Decode one document, sniffing the format from the first character."""
    head = text.lstrip()[:1]
    if head == "{":
        return _parse_json_doc(json.loads(text))
    if head == "[":
        raise _fail("top-level array; use parse_many")
    if head == "#":
        return _parse_csv(text)
    raise _fail("unrecognized leading bytes")


def parse_many(text: str) -> list[TableDocument]:
    """Decode a concatenated-CSV or JSON-array stream of documents."""
    head = text.lstrip()[:1]
    if head == "[":
        objs = json.loads(text)
        return [_parse_json_doc(o) for o in objs]
    if head == "{":
        return [_parse_json_doc(json.loads(text))]
    if head != "#":
        raise _fail("unrecognized leading bytes")
    chunks, cur = [], []
    for line in text.splitlines():
        if line.startswith("#tool,") and cur:
            chunks.append(cur)
            cur = []
        cur.append(line)
    chunks.append(cur)
    docs = []
    for chunk in chunks:
        while chunk and chunk[-1] == "":
            chunk.pop()
        if chunk:
            docs.append(_parse_csv("\n".join(chunk) + "\n"))
    return docs
