"""Command line front end.

Exit codes: 0 ok, 1 mismatch, 2 bad input, 3 internal invariant failure.
"""

import argparse
import csv
import io
import sys

from . import diagram, formats, spectral
from .catalog import Catalog, default_catalog
from .complex import validate
from .harness import CHECKS, reproduce
from .errors import CatalogError, FrolicherError, ParseError, UnclassifiableError, ValidationError
from .invariant_forms import StructureEquations, build
from .zigzag import census_summary, census_tables, decompose, verification_errors

OK, MISMATCH, BAD_INPUT, INTERNAL = 0, 1, 2, 3
MAX_PAGE = 13
NO_II_B = ("Presets: torus, iwasawa, deform-b (ii.a), deform-c (iii.a), deform-d (iii.b). "
           "There is no class (ii.b) preset: no reference example of that class exists.")


class BadInput(Exception):
    pass


class Internal(Exception):
    pass


def grid_order(dc):
    """All bidegrees by total degree, p descending within a degree."""
    return sorted(dc.bidegrees(), key=lambda pq: (pq.p + pq.q, -pq.p))


def _load(args):
    """(complex, equations or None) from --preset or --input."""
    if args.preset:
        p = default_catalog()[args.preset]
        return p.complex(), p.equations()
    obj = formats.read_input(args.input)
    if isinstance(obj, StructureEquations):
        return build(obj), obj
    return obj, None


def _page_range(text, limit):
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise BadInput(f"page range {text!r} is not N or N-M") from None
    top = max(MAX_PAGE, limit)
    if not 1 <= lo <= hi <= top:
        raise BadInput(f"page range {text!r} must lie within 1-{top}")
    return lo, hi


def _cell(pq):
    return f"{pq[0]},{pq[1]}"


def _text_rows(header, rows, first="", sep="  "):
    """Aligned table: ``rows`` are (name, values)."""
    widths = [max(len(h), *(len(str(r[1][i])) for r in rows)) for i, h in enumerate(header)]
    namew = max([len(first)] + [len(r[0]) for r in rows])
    out = [first.ljust(namew) + sep + sep.join(h.rjust(w) for h, w in zip(header, widths))]
    for name, vals in rows:
        out.append(name.ljust(namew) + sep + sep.join(str(v).rjust(w) for v, w in zip(vals, widths)))
    return "\n".join(out) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- commands --------------------------------------------------------------------


def cmd_validate(args):
    dc, _ = _load(args)
    report = validate(dc)
    if args.format == "json":
        doc = {"valid": report.ok,
               "checks": {_cell(pq): c for pq, c in sorted(report.checks.items())}}
        return formats.to_json(doc), OK if report.ok else MISMATCH
    if args.format == "csv":
        rows = [[pq.p, pq.q, *(int(v) for v in c.values())] for pq, c in sorted(report.checks.items())]
        return _csv(["p", "q", "d1^2", "d2^2", "anticommute"], rows), OK if report.ok else MISMATCH
    return report.summary() + "\n", OK if report.ok else MISMATCH


def cmd_build(args):
    dc, _ = _load(args)
    if args.format == "json":
        doc = {"bounds": list(dc.bounds), "dims": {_cell(pq): n for pq, n in sorted(dc.dims.items())},
               "valid": validate(dc).ok}
        return formats.to_json(doc), OK
    return formats.dump_complex(dc), OK


def cmd_pages(args):
    dc, _ = _load(args)
    seq = spectral.FrolicherSequence(dc)
    deg = seq.degeneration_page()
    if args.pages:
        lo, hi = _page_range(args.pages, seq.scan_limit)
    else:
        lo, hi = 1, max(deg, 1)
    tables = [seq.page(r) for r in range(lo, hi + 1)]
    cols = grid_order(dc)
    if args.format == "json":
        doc = formats.pages_document(tables)
        doc["degeneration_page"] = deg
        return formats.to_json(doc), OK
    if args.format == "csv":
        return _csv(["r"] + [_cell(c) for c in cols], [[t.r] + [t[c] for c in cols] for t in tables]), OK
    body = _text_rows([_cell(c) for c in cols], [(f"E_{t.r}", [t[c] for c in cols]) for t in tables], "p,q")
    return body + f"degenerates at page {deg}\n", OK


def cmd_decompose(args):
    dc, _ = _load(args)
    dec = decompose(dc)
    errors = verification_errors(dc, dec)
    if errors:
        raise Internal("decomposition failed verification: " + "; ".join(errors[:3]))
    if args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            fh.write(formats.to_json(formats.witness_document(dec)))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(diagram.to_dot(dec))
    if args.format == "dot":
        return diagram.to_dot(dec), OK
    if args.format == "json":
        return formats.to_json(formats.census_document(dec)), OK
    rows = dec.census_rows()
    if args.format == "csv":
        return _csv(["kind", "p", "q", "arrow_word", "multiplicity"],
                    [[k, a[0], a[1], w, m] for k, a, w, m in rows]), OK
    out = census_summary(dec.census_by_length()) + "\n"
    if args.verbose:
        out += "\n" + "".join(f"{m:>4} x {k} at ({a[0]},{a[1]}) {w}\n" for k, a, w, m in rows)
    if args.ascii:
        out += "\n" + diagram.to_ascii(dec)
    return out, OK


def cmd_cohomology(args):
    dc, _ = _load(args)
    theories = [spectral.theory_name(args.theory)] if args.theory else list(spectral.THEORIES)
    dec = decompose(dc)
    ct = census_tables(dec)
    agree_all = True
    out, doc, csv_rows = [], {}, []
    for theory in theories:
        direct = spectral.cohomology(dc, theory)
        via = ct.cohomology[theory]
        paths = [("direct", direct.entries), ("census", via.entries)]
        if theory == "Dolbeault":
            paths.append(("counting", ct.dolbeault_by_counting))
        agree = all(p[1] == direct.entries for p in paths)
        agree_all &= agree
        keys = sorted(direct.entries) if theory == "deRham" else grid_order(dc)
        label = (lambda k: str(k)) if theory == "deRham" else _cell
        doc[theory] = {"agree": agree, **{name: {label(k): e.get(k, 0) for k in keys} for name, e in paths}}
        for name, e in paths:
            csv_rows.extend([theory, name, label(k), e.get(k, 0)] for k in keys)
        out.append(f"{theory}\n")
        out.append(_text_rows([label(k) for k in keys], [(name, [e.get(k, 0) for k in keys]) for name, e in paths],
                              "k" if theory == "deRham" else "p,q"))
        out.append(("paths agree" if agree else "paths DISAGREE") + "\n\n")
    status = OK if agree_all else INTERNAL
    if args.format == "json":
        return formats.to_json(doc), status
    if args.format == "csv":
        return _csv(["theory", "path", "degree", "dim"], csv_rows), status
    return "".join(out).rstrip("\n") + "\n", status


def cmd_reproduce(args):
    only = None
    if args.only:
        only = [x.strip() for x in args.only.split(",") if x.strip()]
        unknown = [x for x in only if x not in CHECKS]
        if unknown:
            raise BadInput(f"unknown check(s) {', '.join(unknown)}; available: {', '.join(CHECKS)}")
    catalog = Catalog(args.catalog, args.expected) if (args.catalog or args.expected) else default_catalog()
    report = reproduce(catalog, only)
    if args.format == "json":
        doc = {"ok": report.ok, "results": {f"{n}/{c}": {"status": o.status, "detail": o.detail, "notes": o.notes}
                                            for (n, c), o in sorted(report.results.items())}}
        return formats.to_json(doc), OK if report.ok else MISMATCH
    return report.render(), OK if report.ok else MISMATCH


COMMANDS = {
    "validate": (cmd_validate, "check d1^2 = 0, d2^2 = 0 and anticommutativity"),
    "build": (cmd_build, "write the complex of invariant forms as a complex document"),
    "pages": (cmd_pages, "dimensions of the Frolicher pages E_r"),
    "decompose": (cmd_decompose, "census of squares and zigzags"),
    "cohomology": (cmd_cohomology, "de Rham, Dolbeault, Bott-Chern and Aeppli dimensions, two ways"),
    "reproduce": (cmd_reproduce, "check every preset against its reference values"),
}


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json", "dot"), default="text")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    src = argparse.ArgumentParser(add_help=False)
    group = src.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", metavar="NAME")
    group.add_argument("--input", metavar="PATH", help="complex document, or .toml structure equations")

    parser = argparse.ArgumentParser(prog="frolicher", description="Exact double complex computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        parents = [common] if name == "reproduce" else [common, src]
        epilog = NO_II_B if name == "reproduce" else None
        p = sub.add_parser(name, parents=parents, help=help_, description=help_, epilog=epilog)
        if name == "pages":
            p.add_argument("--pages", metavar="R or R-S", help=f"page range within 1-{MAX_PAGE}")
        elif name == "decompose":
            p.add_argument("--dot", metavar="PATH", help="also write the diagram as DOT")
            p.add_argument("--witness", metavar="PATH", help="write the change of basis as JSON")
            p.add_argument("--ascii", action="store_true", help="append a text diagram")
            p.add_argument("-v", "--verbose", action="store_true", help="list every shape")
        elif name == "cohomology":
            p.add_argument("--theory", help="derham, dolbeault, bott-chern or aeppli (default: all)")
        elif name == "reproduce":
            p.add_argument("--only", metavar="CHECKS", help="comma separated subset of checks")
            p.add_argument("--catalog", metavar="PATH", help="alternative presets file")
            p.add_argument("--expected", metavar="PATH", help="alternative reference values file")
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    if args.format == "dot" and args.command != "decompose":
        print("frolicher: --format dot is only available for decompose", file=sys.stderr)
        return BAD_INPUT
    try:
        text, status = fn(args)
    except (BadInput, ParseError, CatalogError, ValidationError, UnclassifiableError, OSError) as e:
        print(f"frolicher: {e}", file=sys.stderr)
        return BAD_INPUT
    except ValueError as e:
        print(f"frolicher: {e}", file=sys.stderr)
        return BAD_INPUT
    except (Internal, FrolicherError) as e:
        print(f"frolicher: internal invariant failure: {e}", file=sys.stderr)
        return INTERNAL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
