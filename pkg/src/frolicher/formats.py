"""Text and JSON documents for complexes, structure equations, decompositions and tables.

Complex document::

    double-complex v1
    bounds 0 1 0 1
    space 0 0 1 x
    space 1 0 1 y
    map 0 0 h
    row 1

``space p q dim labels...`` declares a nonzero space; ``map p q h|v`` is
followed by one ``row`` line per row of the matrix. Zero maps are omitted,
``#`` starts a comment.
"""

import json
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .complex import H, STEP, V, Bidegree, DoubleComplex
from .errors import MalformedComplexError, ParseError
from .invariant_forms import StructureEquations
from .linalg import Mat
from .scalar import format_scalar, parse_scalar

MAGIC = "double-complex v1"


def dump_complex(dc):
    lines = [MAGIC, "bounds " + " ".join(str(x) for x in dc.bounds)]
    for pq in dc.support():
        labels = dc.labels[pq]
        for lab in labels:
            if not lab or any(c.isspace() for c in lab) or lab.startswith("#"):
                raise ValueError(f"label {lab!r} cannot be written as a single token")
        lines.append(f"space {pq.p} {pq.q} {dc.dim(*pq)} " + " ".join(labels))
    for pq in dc.support():
        for direction in (H, V):
            m = dc.map(direction, *pq)
            if m.rows == 0 or m.is_zero():
                continue
            lines.append(f"map {pq.p} {pq.q} {direction}")
            for i in range(m.rows):
                lines.append("row " + " ".join(format_scalar(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text, source):
        self.source = source
        self.items = []
        for n, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            if body.strip():
                self.items.append((n, raw, body))
        self.pos = 0

    def error(self, msg, n, raw=None, token=None):
        col = None
        if raw is not None:
            col = raw.find(token) + 1 if token and token in raw else 1
        return ParseError(msg, n, col, self.source)


def _tokens(raw, body):
    """(token, column) pairs, columns 1-based."""
    out = []
    i = 0
    for tok in body.split():
        i = raw.index(tok, i)
        out.append((tok, i + 1))
        i += len(tok)
    return out


def _int(tok, col, n, source, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", n, col, source) from None


def load_complex(text, source="<input>"):
    """Parse a complex document; raises ParseError with the offending line and column."""
    doc = _Lines(text, source)
    if not doc.items:
        raise ParseError("empty document", 1, 1, source)
    n, raw, body = doc.items[0]
    if body.strip() != MAGIC:
        raise ParseError(f"expected header {MAGIC!r}", n, 1, source)
    bounds = None
    dims, labels = {}, {}
    maps = {H: {}, V: {}}
    current = None  # (direction, Bidegree, rows, line)

    def finish():
        if current is None:
            return
        direction, pq, rows, line, col = current
        dp, dq = STEP[direction]
        nt = dims.get((pq.p + dp, pq.q + dq), 0)
        ns = dims.get(pq, 0)
        if not ns:
            raise ParseError(f"map out of {tuple(pq)}, which has no space", line, col, source)
        if len(rows) != nt:
            raise ParseError(f"map {direction} at {tuple(pq)} has {len(rows)} rows, expected {nt}", line, col, source)
        maps[direction][pq] = Mat.from_rows(rows, ns)

    for n, raw, body in doc.items[1:]:
        toks = _tokens(raw, body)
        key, kcol = toks[0]
        args = toks[1:]
        if key == "row":
            if current is None:
                raise ParseError("row outside of a map block", n, kcol, source)
            direction, pq, rows, _, _ = current
            ns = dims.get(pq, 0)
            if len(args) != ns:
                raise ParseError(f"row has {len(args)} entries, expected {ns}", n, kcol, source)
            row = []
            for tok, col in args:
                try:
                    row.append(parse_scalar(tok))
                except ValueError as e:
                    raise ParseError(str(e), n, col, source) from None
            rows.append(row)
            continue
        finish()
        current = None
        if key == "bounds":
            if bounds is not None:
                raise ParseError("bounds given twice", n, kcol, source)
            if len(args) != 4:
                raise ParseError("bounds needs four integers: p_min p_max q_min q_max", n, kcol, source)
            bounds = tuple(_int(t, c, n, source, "bound") for t, c in args)
        elif key == "space":
            if bounds is None:
                raise ParseError("space before bounds", n, kcol, source)
            if len(args) < 3:
                raise ParseError("space needs p q dim and labels", n, kcol, source)
            p, q, dim = (_int(t, c, n, source, w) for (t, c), w in zip(args[:3], ("p", "q", "dimension")))
            if (p, q) in dims:
                raise ParseError(f"space {(p, q)} declared twice", n, kcol, source)
            if dim <= 0:
                raise ParseError("dimension must be positive", n, args[2][1], source)
            p0, p1, q0, q1 = bounds
            if not (p0 <= p <= p1 and q0 <= q <= q1):
                raise ParseError(f"space {(p, q)} outside bounds", n, args[0][1], source)
            labs = [t for t, _ in args[3:]]
            if len(labs) != dim:
                raise ParseError(f"{len(labs)} labels for dimension {dim}", n, args[2][1], source)
            dims[Bidegree(p, q)] = dim
            labels[Bidegree(p, q)] = tuple(labs)
        elif key == "map":
            if len(args) != 3:
                raise ParseError("map needs p q h|v", n, kcol, source)
            p, q = (_int(t, c, n, source, "bidegree") for t, c in args[:2])
            direction, dcol = args[2]
            if direction not in (H, V):
                raise ParseError(f"direction must be h or v, got {direction!r}", n, dcol, source)
            if Bidegree(p, q) in maps[direction]:
                raise ParseError(f"map {direction} at {(p, q)} given twice", n, kcol, source)
            current = (direction, Bidegree(p, q), [], n, kcol)
        else:
            raise ParseError(f"unknown record {key!r}", n, kcol, source)
    finish()
    if bounds is None:
        raise ParseError("missing bounds", doc.items[-1][0], 1, source)
    try:
        return DoubleComplex(bounds, dims, labels, maps[H], maps[V])
    except MalformedComplexError as e:
        raise ParseError(str(e), None, None, source) from None


def read_complex(path):
    with open(path, encoding="utf-8") as fh:
        return load_complex(fh.read(), str(path))


# -- structure equations --------------------------------------------------------


def load_equations(text, source="<input>"):
    """TOML with ``n`` and lists ``hol``/``mix`` of ``[k, i, j, "scalar"]``."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ParseError(str(e), getattr(e, "lineno", None), getattr(e, "colno", None), source) from None
    if "n" not in data or not isinstance(data["n"], int):
        raise ParseError("missing integer n", None, None, source)
    entries = {}
    for part in ("hol", "mix"):
        entries[part] = {}
        for idx, item in enumerate(data.get(part, [])):
            if not (isinstance(item, list) and len(item) == 4 and all(isinstance(x, int) for x in item[:3])):
                raise ParseError(f"{part}[{idx}] must be [k, i, j, scalar]", None, None, source)
            k, i, j, c = item
            try:
                c = parse_scalar(str(c))
            except ValueError as e:
                raise ParseError(f"{part}[{idx}]: {e}", None, None, source) from None
            entries[part][(k, i, j)] = entries[part].get((k, i, j), 0) + c
    try:
        return StructureEquations(data["n"], entries["hol"], entries["mix"])
    except ValueError as e:
        raise ParseError(str(e), None, None, source) from None


def dump_equations(eqs):
    def fmt(entries):
        return ", ".join(f'[{k}, {i}, {j}, "{format_scalar(c)}"]' for (k, i, j), c in entries.items())

    return f"n = {eqs.n}\nhol = [{fmt(eqs.hol)}]\nmix = [{fmt(eqs.mix)}]\n"


def read_input(path):
    """A complex document or, for ``.toml`` files, structure equations."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".toml"):
        return load_equations(text, str(path))
    return load_complex(text, str(path))


# -- machine-readable documents ---------------------------------------------------


def _key(pq):
    return f"{pq[0]},{pq[1]}"


def census_document(dec):
    from .zigzag import census_summary

    return {
        "summary": census_summary(dec.census_by_length()),
        "census": [{"kind": kind, "anchor": list(anchor), "arrow_word": word, "multiplicity": mult}
                   for kind, anchor, word, mult in dec.census_rows()],
    }


def witness_document(dec):
    return {
        "bounds": list(dec.bounds),
        "summands": [str(s) for s in dec.summands],
        "witness": {_key(pq): [[format_scalar(x) for x in P.row(i)] for i in range(P.rows)]
                    for pq, P in sorted(dec.witness.items())},
    }


def pages_document(tables):
    return {"pages": {str(t.r): {_key(pq): n for pq, n in sorted(t.entries.items())} for t in tables}}


def cohomology_document(table):
    return {"theory": table.theory,
            "dims": {(str(k) if isinstance(k, int) else _key(k)): n for k, n in sorted(table.entries.items())}}


def to_json(doc):
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
