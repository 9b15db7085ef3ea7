"""JSON and CSV forms of the package's data.

Rational values are strings in lowest terms: ``"3"``, ``"-1/2"``.  Output is
deterministic: keys sorted, permutations ordered by their words.
"""
from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .errors import ParseError, SpecError
from .graphs import SparseFunction, Variant
from .perm import Permutation, format_perm, parse_perm
from .pi import PISpec, m1_label, m1_spec, validate
from .reconstruction import ReconstructionMatrix
from .tableaux import Tabloid, TabloidSum


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not re.fullmatch(r"\s*-?\d+(\s*/\s*\d+)?\s*", text):
        raise ParseError(f"expected an integer or p/q string, got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed {what} JSON: {exc}") from None


def _field(data: dict, name: str, what: str):
    if not isinstance(data, dict) or name not in data:
        raise ParseError(f"{what} JSON is missing field {name!r}")
    return data[name]


def sparse_function_to_dict(f: SparseFunction) -> dict:
    out = {
        "n": f.n,
        "entries": {format_perm(p): format_rational(v) for p, v in sorted(f.entries.items())},
    }
    if f.variant is not None:
        out["variant"] = f.variant.value
    return out


def dump_sparse_function(f: SparseFunction) -> str:
    return _dumps(sparse_function_to_dict(f))


def sparse_function_from_dict(data: dict) -> SparseFunction:
    n = _field(data, "n", "SparseFunction")
    entries_raw = _field(data, "entries", "SparseFunction")
    if not isinstance(n, int) or not isinstance(entries_raw, dict):
        raise ParseError("SparseFunction needs an integer 'n' and an object 'entries'")
    variant = data.get("variant")
    try:
        variant = Variant(variant) if variant is not None else None
    except ValueError:
        raise ParseError(f"unknown variant {variant!r} in field 'variant'") from None
    entries = {}
    for key, value in entries_raw.items():
        try:
            pi = parse_perm(key)
        except ParseError as exc:
            raise ParseError(f"bad key in field 'entries': {exc}") from None
        if pi.n != n:
            raise ParseError(f"entries key {key} is not a permutation of size {n}")
        try:
            entries[pi] = parse_rational(value)
        except ParseError as exc:
            raise ParseError(f"bad value for {key} in field 'entries': {exc}") from None
    return SparseFunction(n, entries, variant)


def load_sparse_function(text: str) -> SparseFunction:
    return sparse_function_from_dict(_loads(text, "SparseFunction"))


def pispec_to_dict(spec: PISpec) -> dict:
    return {"n": spec.n, "variant": spec.variant.value, "I": list(spec.I), "P": [list(p) for p in spec.P]}


def dump_pispec(spec: PISpec) -> str:
    return _dumps(pispec_to_dict(spec))


def pispec_from_dict(data: dict) -> PISpec:
    n = _field(data, "n", "PISpec")
    I = _field(data, "I", "PISpec")
    P = _field(data, "P", "PISpec")
    variant = data.get("variant", Variant.STAR.value)
    try:
        variant = Variant(variant)
    except ValueError:
        raise ParseError(f"unknown variant {variant!r} in field 'variant'") from None
    if not isinstance(I, list) or not all(isinstance(x, int) for x in I):
        raise ParseError("PISpec field 'I' must be a list of integers")
    if not isinstance(P, list) or not all(isinstance(p, list) and len(p) == 2 for p in P):
        raise ParseError("PISpec field 'P' must be a list of [j, k] pairs")
    try:
        return validate(PISpec(n, variant, tuple(I), tuple(tuple(p) for p in P)))
    except SpecError as exc:
        raise ParseError(f"invalid PISpec: {exc}") from None


def load_pispec(text: str) -> PISpec:
    return pispec_from_dict(_loads(text, "PISpec"))


def tabloid_sum_to_list(x: TabloidSum) -> list:
    return [{"rows": [list(r) for r in tb.rows], "coeff": format_rational(c)} for tb, c in sorted(x.terms.items())]


def dump_tabloid_sum(x: TabloidSum) -> str:
    return _dumps(tabloid_sum_to_list(x))


def load_tabloid_sum(text: str) -> TabloidSum:
    data = _loads(text, "TabloidSum")
    if not isinstance(data, list):
        raise ParseError("TabloidSum JSON must be a list of terms")
    terms = {}
    for item in data:
        rows = _field(item, "rows", "TabloidSum term")
        coeff = parse_rational(_field(item, "coeff", "TabloidSum term"))
        if coeff.denominator != 1:
            raise ParseError(f"TabloidSum coefficient {coeff} is not an integer")
        tb = Tabloid(tuple(tuple(r) for r in rows))
        terms[tb] = terms.get(tb, 0) + int(coeff)
    return TabloidSum(terms)


_M1_LABEL = re.compile(r"^f_(\d+)\^\{(\d+),(\d+)\}$")


def dump_matrix_csv(mat: ReconstructionMatrix) -> str:
    buf = io.StringIO()
    buf.write("# n=" + str(mat.n) + "\n")
    buf.write("# rows: " + " ".join(m1_label(s) for s in mat.row_labels) + "\n")
    buf.write("# cols: " + " ".join(format_perm(p) for p in mat.col_labels) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in mat.entries:
        writer.writerow(row)
    return buf.getvalue()


def load_matrix_csv(text: str) -> ReconstructionMatrix:
    n = None
    rows_lbl = cols_lbl = None
    data = []
    for line in text.splitlines():
        if line.startswith("# n="):
            n = int(line[4:])
        elif line.startswith("# rows: "):
            rows_lbl = line[8:].split()
        elif line.startswith("# cols: "):
            cols_lbl = line[8:].split()
        elif line.strip():
            try:
                data.append(tuple(int(x) for x in line.split(",")))
            except ValueError:
                raise ParseError(f"non-integer matrix entry in line {line!r}") from None
    if n is None or rows_lbl is None or cols_lbl is None:
        raise ParseError("matrix CSV needs '# n=', '# rows:' and '# cols:' header lines")
    specs = []
    for lbl in rows_lbl:
        m = _M1_LABEL.match(lbl)
        if not m:
            raise ParseError(f"cannot parse row label {lbl!r}")
        i, j, k = map(int, m.groups())
        specs.append(m1_spec(n, i, j, k))
    cols = [parse_perm(c) for c in cols_lbl]
    if len(data) != len(specs) or any(len(r) != len(cols) for r in data):
        raise ParseError("matrix CSV dimensions do not match its labels")
    return ReconstructionMatrix(n, tuple(data), tuple(specs), tuple(cols))


def boundary_from_function(f: SparseFunction, points) -> dict[Permutation, Fraction]:
    """Values of f at ``points`` (absent keys read as 0)."""
    return {p: f.evaluate(p) for p in points}
