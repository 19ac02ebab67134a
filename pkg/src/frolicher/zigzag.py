"""Decomposition of bounded double complexes into squares and zigzags.

The decomposition runs in two passes.

Squares. For each anchor (p, q) the vectors a_i whose images d1 d2 a_i = e_i
form a basis of im(d1 d2) span squares {a, d1 a, d2 a, e}. With functionals
f_i dual to the e_i, the maps

    (p,q): f_i(d1 d2 w)   (p+1,q): -f_i(d2 y)   (p,q+1): f_i(d1 z)   (p+1,q+1): f_i(x)

form a morphism onto the squares restricting to the identity on them; its
kernel is a complementary subcomplex. Afterwards d1 d2 = 0 everywhere.

Zigzags. With d1 d2 = 0 every bidegree splits as W + R where R is the span of
incoming images and W a complement; all maps go W -> R and kill R. Along
each antidiagonal the spaces

    R(j) <-d2- W(j) -d1-> R(j+1) <-d2- W(j+1) -d1-> ...

(W(j) at (j, k-j), R(j) at (j, k+1-j)) form a zigzag quiver, decomposed into
intervals by a left-to-right sweep. Intervals alive at the sweep front are
only ever modified by x_l += c x_k when a morphism from interval l to
interval k exists, so earlier columns keep their matching form.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import spectral
from .complex import Bidegree, DoubleComplex, H, V, direct_sum_all, require_valid
from .linalg import Coordinates, Mat, Reducer, combine, independent_indices, inverse, kernel, rank, rref, solve
from .scalar import ONE, ZERO

SQUARE, ZIGZAG = "square", "zigzag"


@dataclass(frozen=True)
class Shape:
    kind: str
    anchor: Bidegree
    arrow_word: str = ""

    def __post_init__(self):
        object.__setattr__(self, "anchor", Bidegree(*self.anchor))
        if self.kind == SQUARE:
            object.__setattr__(self, "arrow_word", "")
        elif self.kind == ZIGZAG:
            w = self.arrow_word
            if any(c not in "hv" for c in w) or any(a == b for a, b in zip(w, w[1:])):
                raise ValueError(f"arrow word {w!r} must alternate h and v")
        else:
            raise ValueError(f"unknown shape kind {self.kind!r}")

    @property
    def length(self):
        return 4 if self.kind == SQUARE else len(self.arrow_word) + 1

    @property
    def sort_key(self):
        p, q = self.anchor
        return (self.kind != SQUARE, p + q, p, self.length, self.arrow_word)

    def cells(self):
        """Component bidegrees: square a, b, c, e; zigzag from top-left to bottom-right."""
        p, q = self.anchor
        if self.kind == SQUARE:
            return [Bidegree(p, q), Bidegree(p + 1, q), Bidegree(p, q + 1), Bidegree(p + 1, q + 1)]
        cur = (p, q + 1) if self.arrow_word.startswith("v") else (p, q)
        out = [Bidegree(*cur)]
        for c in self.arrow_word:
            cur = (cur[0], cur[1] - 1) if c == "v" else (cur[0] + 1, cur[1])
            out.append(Bidegree(*cur))
        return out

    def arrows(self):
        """(source index, target index, direction, coefficient) over ``cells()``."""
        if self.kind == SQUARE:
            return [(0, 1, H, ONE), (2, 3, H, ONE), (0, 2, V, ONE), (1, 3, V, -ONE)]
        out = []
        for i, c in enumerate(self.arrow_word):
            if c == "v":
                out.append((i + 1, i, V, ONE))
            else:
                out.append((i, i + 1, H, ONE))
        return out

    def model(self):
        return _model(self)

    def name(self):
        return "square" if self.kind == SQUARE else f"L{self.length}"

    def __str__(self):
        p, q = self.anchor
        if self.kind == SQUARE:
            return f"square@({p},{q})"
        return f"L{self.length}@({p},{q}){':' + self.arrow_word if self.arrow_word else ''}"


@lru_cache(maxsize=None)
def _model(shape):
    cells = shape.cells()
    dims = {c: 1 for c in cells}
    labels = {c: (f"{shape.name()}[{i}]",) for i, c in enumerate(cells)}
    maps = {H: {}, V: {}}
    for s, t, direction, coeff in shape.arrows():
        maps[direction][cells[s]] = Mat(1, 1, (coeff,))
    ps = [c.p for c in cells]
    qs = [c.q for c in cells]
    return DoubleComplex((min(ps), max(ps), min(qs), max(qs)), dims, labels, maps[H], maps[V])


def square(p, q):
    return Shape(SQUARE, Bidegree(p, q))


def zigzag(p, q, word=""):
    return Shape(ZIGZAG, Bidegree(p, q), word)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Summands in witness order and the change of basis.

    ``witness[(p, q)]`` has as columns the new basis of A^{p,q} in the
    original coordinates: the components of the summands lying at (p, q), in
    summand order.
    """

    summands: tuple
    witness: dict = field(default_factory=dict)
    bounds: tuple = None

    @property
    def census(self):
        return Counter(self.summands)

    def census_by_length(self):
        out = Counter()
        for s in self.summands:
            out[s.name()] += 1
        return out

    def census_rows(self):
        """(kind, anchor, arrow_word, multiplicity), canonically sorted."""
        c = self.census
        return [(s.kind, tuple(s.anchor), s.arrow_word, c[s]) for s in sorted(c, key=lambda s: s.sort_key)]

    def model(self, bounds=None):
        return direct_sum_all([s.model() for s in self.summands], bounds=bounds or self.bounds)


def census_summary(counts):
    """Render a length census as ``36 × L1, 12 × L2, 1 × square``."""
    def key(name):
        return (name == "square", int(name[1:]) if name != "square" else 0)

    return ", ".join(f"{counts[name]} × {name}" for name in sorted(counts, key=key) if counts[name])


# -- working complex ----------------------------------------------------------


class _Work:
    """A complex in its own coordinates plus the embedding into the original."""

    def __init__(self, dc):
        self.dc = dc
        self.embed = {pq: Mat.identity(n) for pq, n in dc.dims.items()}

    def to_original(self, pq, v):
        return self.embed[pq].apply(v)

    def restrict(self, bases):
        """Pass to the subcomplex spanned by ``bases[pq]`` (all other bidegrees kept whole)."""
        dc = self.dc
        full = {pq: bases.get(pq) for pq in dc.dims}
        for pq, n in dc.dims.items():
            if full[pq] is None:
                full[pq] = Mat.identity(n).columns()
        coords = {pq: Coordinates(vs, dc.dims[pq]) for pq, vs in full.items()}
        dims = {pq: len(vs) for pq, vs in full.items()}
        maps = {H: {}, V: {}}
        for direction, (dp, dq) in ((H, (1, 0)), (V, (0, 1))):
            for pq, vs in full.items():
                tgt = (pq[0] + dp, pq[1] + dq)
                m = dc.map(direction, *pq)
                if tgt not in coords or not vs:
                    continue
                cols = [coords[tgt].of(m.apply(v)) for v in vs]
                maps[direction][pq] = Mat.from_columns(cols, dims[tgt])
        new = DoubleComplex(dc.bounds, dims, {}, maps[H], maps[V])
        self.embed = {pq: self.embed[pq] @ Mat.from_columns(full[pq], dc.dims[pq])
                      for pq in dc.dims if dims[pq]}
        self.dc = new


def _row(v):
    return Mat(1, len(v), tuple(v))


def _split_squares(work, p, q, found):
    dc = work.dc
    a_pq, b_pq, c_pq, e_pq = (p, q), (p + 1, q), (p, q + 1), (p + 1, q + 1)
    if not all(dc.dim(*x) for x in (a_pq, e_pq)):
        return False
    d2a = dc.map(V, p, q)
    d1a = dc.map(H, p, q)
    hv = dc.map(H, p, q + 1) @ d2a
    cols = hv.columns()
    pick = independent_indices(cols, hv.rows)
    if not pick:
        return False
    ne = dc.dim(*e_pq)
    es = [cols[j] for j in pick]
    red = Reducer(ne)
    basis = []
    for v in es + Mat.identity(ne).columns():
        if red.add(v):
            basis.append(v)
    finv = inverse(Mat.from_columns(basis, ne))
    fs = [finv.row(i) for i in range(len(pick))]
    na = dc.dim(*a_pq)
    for i, j in enumerate(pick):
        a = tuple(ONE if k == j else ZERO for k in range(na))
        comps = {a_pq: a, b_pq: d1a.apply(a), c_pq: d2a.apply(a), e_pq: es[i]}
        found.append((square(p, q), {pq: work.to_original(pq, v) for pq, v in comps.items()}))
    funcs = {a_pq: [], b_pq: [], c_pq: [], e_pq: []}
    for f in fs:
        fr = _row(f)
        funcs[a_pq].append((fr @ hv).row(0))
        funcs[b_pq].append((-(fr @ dc.map(V, p + 1, q))).row(0) if dc.dim(*b_pq) else ())
        funcs[c_pq].append((fr @ dc.map(H, p, q + 1)).row(0) if dc.dim(*c_pq) else ())
        funcs[e_pq].append(tuple(f))
    bases = {}
    for pq, rows in funcs.items():
        n = dc.dim(*pq)
        if not n:
            continue
        bases[pq] = list(kernel(Mat.from_rows(rows, n)).vectors)
    work.restrict(bases)
    return True


# -- zigzag sweep ---------------------------------------------------------------


class _Interval:
    __slots__ = ("birth", "btype", "vecs")

    def __init__(self, birth, btype, i, v):
        self.birth = birth
        self.btype = btype
        self.vecs = {i: tuple(v)}

    @property
    def rank_key(self):
        # x_l += c x_k is allowed iff rank_key(k) <= rank_key(l)
        return (0, -self.birth) if self.btype == "B" else (1, self.birth)

    def absorb(self, other, c):
        """self += c * other on the common support."""
        for j, w in other.vecs.items():
            if j in self.vecs:
                self.vecs[j] = tuple(a + c * b if b else a for a, b in zip(self.vecs[j], w))


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x:
            return i
    return None


def sweep(spaces, arrows):
    """Interval decomposition of a zigzag of subspaces.

    ``spaces[i]`` is a list of independent vectors spanning V_i (in some
    ambient coordinates), ``arrows[i]`` is ``("f", m)`` for m: V_i -> V_{i+1}
    or ``("b", m)`` for m: V_{i+1} -> V_i, with m a Mat on ambient
    coordinates. Returns a list of dicts ``{vertex: vector}``; every map sends
    each interval vector to the next one (coefficient 1) or to zero at the end.
    """
    alive = [_Interval(0, "F", 0, v) for v in spaces[0]]
    done = []
    for i, (kind, m) in enumerate(arrows):
        nxt = spaces[i + 1]
        if kind == "f":
            table = {}
            survivors = []
            for rec in sorted(alive, key=lambda r: r.rank_key):
                v = m.apply(rec.vecs[i])
                piv = _first_nonzero(v)
                while piv is not None and piv in table:
                    other, w = table[piv]
                    c = v[piv] / w[piv]
                    v = tuple(a - c * b if b else a for a, b in zip(v, w))
                    rec.absorb(other, -c)
                    piv = _first_nonzero(v)
                if piv is None:
                    done.append(rec)
                else:
                    table[piv] = (rec, v)
                    survivors.append((rec, v))
            n = m.rows
            red = Reducer(n)
            for rec, v in survivors:
                red.add(v)
                rec.vecs[i + 1] = v
            born = [_Interval(i + 1, "F", i + 1, w) for w in nxt if red.add(w)]
            alive = [rec for rec, _ in survivors] + born
        else:
            n_amb = m.rows
            gcols = [m.apply(w) for w in nxt]
            if alive:
                coords = Coordinates([rec.vecs[i] for rec in alive], n_amb)
                order = sorted(range(len(alive)), key=lambda k: alive[k].rank_key, reverse=True)
                rows = []
                for g in gcols:
                    c = coords.of(g)
                    rows.append([c[k] for k in order])
                pivots = rref(rows, len(order))
            else:
                order, pivots, rows = [], [], []
            pivset = set(pivots)
            survivors = []
            for r, c in enumerate(pivots):
                rec = alive[order[c]]
                for c2 in range(c + 1, len(order)):
                    x = rows[r][c2]
                    if x and c2 not in pivset:
                        rec.absorb(alive[order[c2]], x)
                survivors.append(rec)
            for c in range(len(order)):
                if c not in pivset:
                    done.append(alive[order[c]])
            dim_next = len(nxt)
            gmat = Mat.from_columns(gcols, n_amb) if gcols else Mat.zero(n_amb, 0)
            amb_next = len(nxt[0]) if nxt else 0
            for rec in survivors:
                y = solve(gmat, rec.vecs[i])
                rec.vecs[i + 1] = combine(nxt, y, amb_next)
            born = [_Interval(i + 1, "B", i + 1, combine(nxt, k, amb_next))
                    for k in kernel(gmat).vectors] if dim_next else []
            alive = survivors + born
    done.extend(alive)
    return [rec.vecs for rec in done]


def _split_zigzags(work, found):
    dc = work.dc
    p0, p1, q0, q1 = dc.bounds
    rad, comp = {}, {}
    for pq, n in dc.dims.items():
        p, q = pq
        spanning = dc.map(H, p - 1, q).columns() + dc.map(V, p, q - 1).columns()
        red = Reducer(n)
        rad[pq] = [v for v in spanning if red.add(v)]
        comp[pq] = [v for v in Mat.identity(n).columns() if red.add(v)]
    for k in range(p0 + q0, p1 + q1 + 1):
        verts = []  # (bidegree or None, "R"/"W")
        for j in range(p0, p1 + 1):
            verts.append((Bidegree(j, k + 1 - j), "R"))
            verts.append((Bidegree(j, k - j), "W"))
        spaces, arrows = [], []
        for pq, role in verts:
            n = dc.dim(*pq)
            spaces.append((rad if role == "R" else comp).get(pq, []) if n else [])
        for idx in range(len(verts) - 1):
            pq, role = verts[idx]
            if role == "R":
                w = verts[idx + 1][0]
                arrows.append(("b", dc.map(V, *w)))
            else:
                arrows.append(("f", dc.map(H, *pq)))
        for vecs in sweep(spaces, arrows):
            idxs = sorted(vecs)
            word = "".join("v" if verts[a][1] == "R" else "h" for a in idxs[:-1])
            anchor = next(verts[a][0] for a in idxs if verts[a][1] == "W")
            comps = {verts[a][0]: work.to_original(verts[a][0], vecs[a]) for a in idxs}
            found.append((zigzag(anchor.p, anchor.q, word), comps))


def decompose(dc):
    """Split a valid bounded double complex into squares and zigzags."""
    require_valid(dc)
    work = _Work(dc)
    found = []
    for p, q in sorted(dc.bidegrees(), key=lambda x: (x[0] + x[1], x[0])):
        _split_squares(work, p, q, found)
    _split_zigzags(work, found)
    found.sort(key=lambda item: item[0].sort_key)
    columns = {pq: [] for pq in dc.dims}
    for shape, comps in found:
        for pq in shape.cells():
            columns[pq].append(comps[pq])
    witness = {pq: Mat.from_columns(cols, dc.dims[pq]) for pq, cols in columns.items()}
    return Decomposition(tuple(s for s, _ in found), witness, dc.bounds)


# -- verification ---------------------------------------------------------------


def verification_errors(dc, dec):
    errors = []
    counts = Counter(pq for s in dec.summands for pq in s.cells())
    for pq in sorted(set(counts) | set(dc.dims)):
        if counts[pq] != dc.dim(*pq):
            errors.append(f"dimension at {tuple(pq)}: summands give {counts[pq]}, complex has {dc.dim(*pq)}")
    if errors:
        return errors
    for pq, n in dc.dims.items():
        P = dec.witness.get(pq)
        if P is None or P.shape != (n, n):
            errors.append(f"witness at {tuple(pq)} missing or misshapen")
        elif rank(P) != n:
            errors.append(f"witness at {tuple(pq)} is singular")
    if errors:
        return errors
    model = dec.model(bounds=dc.bounds)
    for pq in dc.dims:
        for direction, (dp, dq) in ((H, (1, 0)), (V, (0, 1))):
            t = (pq[0] + dp, pq[1] + dq)
            if not dc.dim(*t):
                if not model.map(direction, *pq).is_zero():
                    errors.append(f"{direction}-arrow out of {tuple(pq)} leaves the complex")
                continue
            lhs = dc.map(direction, *pq) @ dec.witness[pq]
            rhs = dec.witness[t] @ model.map(direction, *pq)
            if lhs != rhs:
                errors.append(f"{direction}-map out of {tuple(pq)} is not block diagonal as declared")
    return errors


def verify(dc, dec):
    """Witness check: dims add up, witness invertible, conjugated maps equal the summand maps."""
    return not verification_errors(dc, dec)


def identity_decomposition(summands):
    """The direct sum of ``summands`` with the identity witness."""
    model = direct_sum_all([s.model() for s in summands])
    witness = {pq: Mat.identity(n) for pq, n in model.dims.items()}
    return model, Decomposition(tuple(summands), witness, model.bounds)


def change_basis(dc, bases):
    """The complex in the new bases: maps become P_t^{-1} d P_s."""
    inv = {pq: inverse(P) for pq, P in bases.items()}
    d1, d2 = {}, {}
    for pq in dc.dims:
        for direction, out, (dp, dq) in ((H, d1, (1, 0)), (V, d2, (0, 1))):
            t = (pq[0] + dp, pq[1] + dq)
            if dc.dim(*t):
                out[pq] = inv[t] @ dc.map(direction, *pq) @ bases[pq]
    return DoubleComplex(dc.bounds, dc.dims, dc.labels, d1, d2)


# -- tables from the census -------------------------------------------------------


@dataclass(frozen=True)
class CensusTables:
    pages: list  # PageTable for r = 1..len(pages)
    cohomology: dict  # theory -> CohomologyTable
    dolbeault_by_counting: dict  # Bidegree -> number of components without a v-arrow


def _add(acc, entries):
    for key, n in entries.items():
        acc[key] = acc.get(key, 0) + n


def dolbeault_by_counting(summands, bounds):
    """Drop the v-arrows and count the components they do not touch."""
    p0, p1, q0, q1 = bounds
    out = {Bidegree(p, q): 0 for p in range(p0, p1 + 1) for q in range(q0, q1 + 1)}
    for s in summands:
        cells = s.cells()
        touched = {i for a, b, direction, _ in s.arrows() if direction == V for i in (a, b)}
        for i, c in enumerate(cells):
            if i not in touched:
                out[c] += 1
    return out


def census_tables(dec, r_max=None):
    """All page and cohomology tables summed over the summands' own complexes."""
    bounds = dec.bounds or dec.model().bounds
    p0, p1, q0, q1 = bounds
    if r_max is None:
        r_max = (p1 - p0) + (q1 - q0) + 1
    grid = [Bidegree(p, q) for p in range(p0, p1 + 1) for q in range(q0, q1 + 1)]
    entries = [dict.fromkeys(grid, 0) for _ in range(r_max)]
    ranks = [dict.fromkeys(grid, 0) for _ in range(r_max)]
    coh = {t: ({} if t == "deRham" else dict.fromkeys(grid, 0)) for t in spectral.THEORIES}
    for shape, mult in Counter(dec.summands).items():
        model = shape.model()
        seq = spectral.FrolicherSequence(model)
        for r in range(r_max):
            pt = seq.page(r + 1)
            _add(entries[r], {k: mult * n for k, n in pt.entries.items()})
            _add(ranks[r], {k: mult * n for k, n in pt.dr_ranks.items()})
        for t in spectral.THEORIES:
            table = spectral.cohomology(model, t)
            _add(coh[t], {k: mult * n for k, n in table.entries.items()})
    if "deRham" in coh:
        for k in range(p0 + q0, p1 + q1 + 1):
            coh["deRham"].setdefault(k, 0)
        coh["deRham"] = dict(sorted(coh["deRham"].items()))
    pages = [spectral.PageTable(r + 1, entries[r], ranks[r]) for r in range(r_max)]
    tables = {t: spectral.CohomologyTable(t, coh[t]) for t in spectral.THEORIES}
    return CensusTables(pages, tables, dolbeault_by_counting(dec.summands, bounds))
