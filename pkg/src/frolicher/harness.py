"""Checks of every preset against its recorded reference values."""

from dataclasses import dataclass, field

from . import spectral
from .catalog import classify, default_catalog
from .complex import validate
from .errors import UnclassifiableError
from .invariant_forms import conjugate_check
from .zigzag import census_tables, decompose, verification_errors

CHECKS = ("class", "validation", "pages", "corners", "degeneration", "census", "verify",
          "serre", "euler", "derham", "tables", "semicontinuity")


@dataclass
class Outcome:
    status: str  # pass | fail | skip
    detail: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _row(table, columns):
    return [table[c] for c in columns]


class PresetRun:
    """Everything computed once per preset, shared by the checks."""

    def __init__(self, preset):
        self.preset = preset
        self.dc = preset.complex()
        self.seq = spectral.FrolicherSequence(self.dc)
        self._dec = None

    @property
    def dec(self):
        if self._dec is None:
            self._dec = decompose(self.dc)
        return self._dec

    def pages(self):
        return self.seq.pages(self.seq.scan_limit)


def _check_class(run, catalog):
    p = run.preset
    if p.label is None:
        return Outcome("skip", notes=["no deformation class recorded"])
    try:
        got = classify(p.sigma, p.d_nonzero)
    except UnclassifiableError as e:
        return Outcome("fail", [str(e)])
    if got != p.label:
        return Outcome("fail", [f"class {got} (rank S {got.rank_s}), recorded {p.label} (rank S {p.label.rank_s})"])
    return Outcome("pass")


def _check_validation(run, catalog):
    report = validate(run.dc)
    detail = [] if report.ok else [report.summary()]
    if not conjugate_check(run.dc):
        detail.append("del-bar is not the conjugate of del")
    return Outcome("fail" if detail else "pass", detail)


def _check_pages(run, catalog):
    rows = run.preset.expected.get("pages")
    if not rows:
        return Outcome("skip")
    cols = catalog.columns
    detail = []
    for r, want in enumerate(rows, 1):
        got = _row(run.seq.page(r), cols)
        if got != list(want):
            detail.append(f"E_{r} expected {list(want)}")
            detail.append(f"E_{r} computed {got}")
            diff = [f"{c}: {w} != {g}" for c, w, g in zip(cols, want, got) if w != g]
            detail.append("  differs at " + ", ".join(diff))
    return Outcome("fail" if detail else "pass", detail)


def _check_corners(run, catalog):
    detail = []
    for r in range(1, len(run.preset.expected.get("pages", [])) + 1):
        for pq, want in catalog.corners.items():
            got = run.seq.page(r)[pq]
            if got != want:
                detail.append(f"E_{r}{pq} = {got}, expected {want}")
    return Outcome("fail" if detail else "pass", detail)


def _check_degeneration(run, catalog):
    want = run.preset.expected.get("degeneration_page")
    if want is None:
        return Outcome("skip")
    got = run.seq.degeneration_page()
    return Outcome("pass" if got == want else "fail", [] if got == want else [f"degenerates at page {got}, expected {want}"])


def _check_census(run, catalog):
    exp = run.preset.expected
    got = run.dec.census_by_length()
    detail, notes = [], []
    frozen = exp.get("census")
    if frozen is not None:
        names = set(frozen) | set(got)
        for name in sorted(names):
            if frozen.get(name, 0) != got.get(name, 0):
                detail.append(f"{name}: computed {got.get(name, 0)}, recorded {frozen.get(name, 0)}")
    known = set(exp.get("census_discrepancies", []))
    for name, want in sorted(exp.get("census_printed", {}).items()):
        if got.get(name, 0) == want:
            continue
        msg = f"{name}: computed {got.get(name, 0)}, printed {want}"
        if name in known:
            notes.append(msg + " (impossible at this total dimension)")
        else:
            detail.append(msg)
    return Outcome("fail" if detail else "pass", detail, notes)


def _check_verify(run, catalog):
    errors = verification_errors(run.dc, run.dec)
    return Outcome("fail" if errors else "pass", errors[:5])


def _check_serre(run, catalog):
    p0, p1, q0, q1 = run.dc.bounds
    detail = []
    for t in run.pages():
        for (p, q), n in t.entries.items():
            m = t[(p0 + p1 - p, q0 + q1 - q)]
            if n != m:
                detail.append(f"E_{t.r}{(p, q)} = {n} but the dual entry is {m}")
    return Outcome("fail" if detail else "pass", detail[:5])


def _check_euler(run, catalog):
    chis = spectral.euler_characteristics(run.pages())
    ok = len(set(chis)) == 1 and chis[0] == 0
    return Outcome("pass" if ok else "fail", [] if ok else [f"Euler characteristics per page {chis}"])


def _check_derham(run, catalog):
    limit = run.seq.limit_page()
    b = spectral.cohomology(run.dc, "deRham")
    detail = []
    for k, n in b.entries.items():
        if limit.total(k) != n:
            detail.append(f"degree {k}: E_inf sums to {limit.total(k)}, de Rham {n}")
    return Outcome("fail" if detail else "pass", detail)


def _check_tables(run, catalog):
    ct = census_tables(run.dec, run.seq.scan_limit)
    detail = []
    for t in ct.pages:
        if t.entries != run.seq.page(t.r).entries:
            detail.append(f"E_{t.r} from the census differs from the direct computation")
    for theory in spectral.THEORIES:
        if ct.cohomology[theory].entries != spectral.cohomology(run.dc, theory).entries:
            detail.append(f"{theory} from the census differs from the direct computation")
    if ct.dolbeault_by_counting != ct.cohomology["Dolbeault"].entries:
        detail.append("counting components without v-arrows disagrees with Dolbeault")
    return Outcome("fail" if detail else "pass", detail)


PER_PRESET = {
    "class": _check_class, "validation": _check_validation, "pages": _check_pages, "corners": _check_corners,
    "degeneration": _check_degeneration, "census": _check_census, "verify": _check_verify,
    "serre": _check_serre, "euler": _check_euler, "derham": _check_derham, "tables": _check_tables,
}


def semicontinuity(runs):
    """E_r jumps both ways between the Iwasawa manifold and the (iii.a) deformation."""
    if "iwasawa" not in runs or "deform-c" not in runs:
        return Outcome("skip", notes=["needs presets iwasawa and deform-c"])
    a, c = runs["iwasawa"].seq, runs["deform-c"].seq
    ra, rc = a.degeneration_page(), c.degeneration_page()
    detail = []
    e2a, e1c = a.page(2), c.page(1)
    if not e2a[(2, 0)] > e1c[(2, 0)]:
        detail.append(f"E_2^(2,0) iwasawa {e2a[(2, 0)]} is not above E_1^(2,0) deform-c {e1c[(2, 0)]}")
    if not e2a[(1, 1)] < e1c[(1, 1)]:
        detail.append(f"E_2^(1,1) iwasawa {e2a[(1, 1)]} is not below E_1^(1,1) deform-c {e1c[(1, 1)]}")
    for seq, r0, name in ((a, ra, "iwasawa"), (c, rc, "deform-c")):
        for r in range(r0 + 1, seq.scan_limit + 1):
            if seq.page(r).entries != seq.page(r0).entries:
                detail.append(f"{name}: E_{r} differs from E_{r0}")
    return Outcome("fail" if detail else "pass", detail)


MARK = {"pass": "ok", "fail": "FAIL", "skip": "-"}


@dataclass
class Report:
    names: list
    checks: list
    results: dict  # (preset or "*", check) -> Outcome

    @property
    def ok(self):
        return all(o.status != "fail" for o in self.results.values())

    def render(self):
        width = max(len(n) for n in self.names + ["preset"])
        cols = [c for c in self.checks if c != "semicontinuity"]
        lines = []
        if cols:
            lines.append(f"{'preset':<{width}}  " + "  ".join(cols))
            for name in self.names:
                cells = []
                for c in cols:
                    o = self.results[(name, c)]
                    cells.append(MARK[o.status].ljust(len(c)))
                lines.append(f"{name:<{width}}  " + "  ".join(cells).rstrip())
        if "semicontinuity" in self.checks:
            o = self.results[("*", "semicontinuity")]
            lines.append(f"semicontinuity (iwasawa vs deform-c): {o.status}")
        for (name, c), o in sorted(self.results.items()):
            for line in o.detail:
                lines.append(f"[{name}] {c}: {line}")
        for (name, c), o in sorted(self.results.items()):
            for line in o.notes:
                lines.append(f"note [{name}] {c}: {line}")
        lines.append("all checks passed" if self.ok else "some checks FAILED")
        return "\n".join(lines) + "\n"


def reproduce(catalog=None, only=None, names=None):
    catalog = catalog or default_catalog()
    checks = [c for c in CHECKS if not only or c in only]
    names = names or catalog.names()
    runs = {n: PresetRun(catalog[n]) for n in names}
    results = {}
    for n in names:
        for c in checks:
            if c == "semicontinuity":
                continue
            results[(n, c)] = PER_PRESET[c](runs[n], catalog)
    if "semicontinuity" in checks:
        results[("*", "semicontinuity")] = semicontinuity(runs)
    return Report(names, checks, results)
