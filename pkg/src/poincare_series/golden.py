"""Golden corpus of known Poincare series and the checker that replays it.

Corpus lines look like

    d=1,2,3; kind=semiinvariants; num=1,1,6,...; den=(4,2)(1,2)(2,1)(3,2)(5,1); sign_insensitive=false

num holds ascending numerator coefficients, den the (a, e) exponents of a
product of (1 - z^a)^e. Comparison is exact, by cross-multiplication of
the unreduced record against the computed series; sign-insensitive
records also accept the negated value (for published forms whose overall
sign is ambiguous).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .algebra import ONE, Poly, cross_equal, one_minus_z
from .counting import KINDS, DegreeVector
from .springer import poincare_series

_FIELD = re.compile(r"^\s*(\w+)\s*=\s*(.*?)\s*$")
_FACTOR = re.compile(r"\((\-?\d+)\s*,\s*(\-?\d+)\)")


class CorpusError(ValueError):
    """Malformed corpus line; message carries line number and field."""


@dataclass(frozen=True)
class GoldenRecord:
    degrees: tuple
    kind: str
    num: tuple
    den_factors: tuple
    sign_insensitive: bool
    line_no: int

    def num_poly(self) -> Poly:
        return Poly(self.num)

    def den_poly(self) -> Poly:
        out = ONE
        for a, e in self.den_factors:
            out = out * one_minus_z(a) ** e
        return out

    def label(self) -> str:
        return f"d={','.join(map(str, self.degrees))} kind={self.kind}"


def _parse_ints(text: str, line_no: int, field: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CorpusError(f"line {line_no}: field '{field}' is not a comma-separated integer list") from None


def parse_record(line: str, line_no: int) -> GoldenRecord:
    fields = {}
    for chunk in line.split(";"):
        m = _FIELD.match(chunk)
        if not m:
            raise CorpusError(f"line {line_no}: malformed field {chunk.strip()!r}")
        fields[m.group(1)] = m.group(2)
    for required in ("d", "kind", "num", "den"):
        if required not in fields:
            raise CorpusError(f"line {line_no}: missing field '{required}'")
    degrees = _parse_ints(fields["d"], line_no, "d")
    try:
        degrees = DegreeVector(degrees).degrees
    except ValueError as exc:
        raise CorpusError(f"line {line_no}: field 'd': {exc}") from None
    kind = fields["kind"]
    if kind not in KINDS:
        raise CorpusError(f"line {line_no}: field 'kind' must be one of {KINDS}")
    num = _parse_ints(fields["num"], line_no, "num")
    den_text = fields["den"]
    factors = tuple(
        (int(a), int(e)) for a, e in _FACTOR.findall(den_text)
    )
    if not factors or "".join(f"({a},{e})" for a, e in factors) != den_text.replace(" ", ""):
        raise CorpusError(f"line {line_no}: field 'den' must be a list of (a,e) factors")
    if any(a < 1 or e < 1 for a, e in factors):
        raise CorpusError(f"line {line_no}: field 'den' has non-positive factor data")
    flag_text = fields.get("sign_insensitive", "false")
    if flag_text not in ("true", "false"):
        raise CorpusError(f"line {line_no}: field 'sign_insensitive' must be true or false")
    return GoldenRecord(degrees, kind, num, factors, flag_text == "true", line_no)


def parse_corpus(text: str) -> list:
    records = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        records.append(parse_record(line, line_no))
    return records


def shipped_corpus_path() -> str:
    return str(resources.files("poincare_series").joinpath("data/golden_corpus.txt"))


def check_record(record: GoldenRecord):
    """Return (ok, computed) for one record, comparing by cross-multiplication."""
    f = poincare_series(record.degrees, record.kind)
    num, den = record.num_poly(), record.den_poly()
    ok = cross_equal(f.num, f.den, num, den)
    if not ok and record.sign_insensitive:
        ok = cross_equal(f.num, f.den, -num, den)
    return ok, f


def check_corpus(text: str, emit=print) -> int:
    """Replay a corpus; print one PASS/FAIL line per record plus a summary.

    Returns the number of failing records.
    """
    records = parse_corpus(text)
    if not records:
        emit("warning: corpus contains no records")
        emit("golden-check: 0 records, 0 failures")
        return 0
    failures = 0
    for record in records:
        ok, _ = check_record(record)
        if not ok:
            failures += 1
        emit(f"{'PASS' if ok else 'FAIL'}  {record.label()}")
    emit(f"golden-check: {len(records)} records, {failures} failures")
    return failures
