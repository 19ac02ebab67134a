"""Frölicher spectral sequence pages and cohomology dimension tables.

The filtration is by columns, ``F^p K^m = sum_{i >= p} A^{i, m-i}``, of the
total complex. With

    Z_r^{p,q} = {x in F^p K^{p+q} : dx in F^{p+r} K^{p+q+1}}

the r-th page is

    E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2})

and the rank of d_r out of (p, q) is the dimension of the image of
d Z_r^{p,q} modulo the denominator at (p+r, q-r+1).
"""

from dataclasses import dataclass

from .complex import Bidegree, H, V, require_valid, totalize
from .scalar import ZERO
from .linalg import Mat, Subspace, image, image_of, intersection, kernel, quotient_dim, sum_

THEORIES = ("deRham", "Dolbeault", "BottChern", "Aeppli")
_ALIASES = {
    "derham": "deRham", "de-rham": "deRham", "dr": "deRham",
    "dolbeault": "Dolbeault", "dbar": "Dolbeault",
    "bottchern": "BottChern", "bott-chern": "BottChern", "bc": "BottChern",
    "aeppli": "Aeppli", "a": "Aeppli",
}


def theory_name(name):
    key = name.replace("_", "-").lower()
    if name in THEORIES:
        return name
    if key not in _ALIASES:
        raise ValueError(f"unknown cohomology theory {name!r}; expected one of {', '.join(THEORIES)}")
    return _ALIASES[key]


@dataclass(frozen=True)
class PageTable:
    r: int
    entries: dict  # Bidegree -> dim E_r^{p,q}, full grid inside the bounds
    dr_ranks: dict  # Bidegree -> rank of d_r out of (p, q)

    def __getitem__(self, pq):
        return self.entries.get(tuple(pq), 0)

    def total(self, k):
        return sum(n for (p, q), n in self.entries.items() if p + q == k)

    def differential_vanishes(self):
        return not any(self.dr_ranks.values())


@dataclass(frozen=True)
class CohomologyTable:
    theory: str
    entries: dict  # degree -> dim for deRham, Bidegree -> dim otherwise

    def __getitem__(self, key):
        return self.entries.get(key if isinstance(key, int) else tuple(key), 0)


class FrolicherSequence:
    """Caching page calculator for one valid double complex."""

    def __init__(self, dc):
        self.dc = require_valid(dc)
        self.total = totalize(dc)
        self.p0, self.p1, self.q0, self.q1 = dc.bounds
        self._z = {}
        self._dz = {}
        self._pages = {}

    def _filtration_coords(self, n, p):
        return [off + i for pq, off, dim in self.total.blocks.get(n, []) if pq.p >= p for i in range(dim)]

    def _z_key(self, r, p, n):
        sp = max(p, self.p0)
        tp = min(max(p + r, self.p0), self.p1 + 1)
        return (sp, tp, n)

    def Z(self, r, p, n):
        """Z_r^p in total degree n, as a subspace of K^n."""
        key = self._z_key(r, p, n)
        hit = self._z.get(key)
        if hit is not None:
            return hit
        sp, tp, _ = key
        N = self.total.dim(n)
        src = self._filtration_coords(n, sp)
        if not src:
            z = Subspace.zero(N)
        else:
            d = self.total.differential(n)
            low = [off + i for pq, off, dim in self.total.blocks.get(n + 1, []) if pq.p < tp for i in range(dim)]
            rows = [[d[i, j] for j in src] for i in low]
            k = kernel(Mat.from_rows(rows, len(src))) if rows else Subspace.full(len(src))
            vecs = []
            for v in k.vectors:
                w = [ZERO] * N
                for j, x in zip(src, v):
                    w[j] = x
                vecs.append(tuple(w))
            z = Subspace(N, tuple(vecs))
        self._z[key] = z
        return z

    def dZ(self, r, p, n):
        """d(Z_r^p K^n) inside K^{n+1}."""
        key = self._z_key(r, p, n)
        hit = self._dz.get(key)
        if hit is None:
            hit = image_of(self.total.differential(n), self.Z(r, p, n))
            self._dz[key] = hit
        return hit

    def boundaries(self, r, p, n):
        """Denominator of E_r^p in degree n."""
        return sum_(self.Z(r - 1, p + 1, n), self.dZ(r - 1, p - r + 1, n - 1))

    def entry(self, r, p, q):
        if not self.dc.in_bounds(p, q):
            return 0
        n = p + q
        return quotient_dim(self.Z(r, p, n), self.boundaries(r, p, n))

    def dr_rank(self, r, p, q):
        if not (self.dc.in_bounds(p, q) and self.dc.in_bounds(p + r, q - r + 1)):
            return 0
        n = p + q
        den = self.boundaries(r, p + r, n + 1)
        img = self.dZ(r, p, n)
        if not img.dim:
            return 0
        return sum_(img, den).dim - den.dim

    def page(self, r):
        if r < 1:
            raise ValueError(f"page index must be >= 1, got {r}")
        if r not in self._pages:
            grid = self.dc.bidegrees()
            entries = {pq: self.entry(r, *pq) for pq in grid}
            ranks = {pq: self.dr_rank(r, *pq) for pq in grid}
            self._pages[r] = PageTable(r, entries, ranks)
        return self._pages[r]

    @property
    def scan_limit(self):
        """Pages beyond this index repeat the last one: d_s = 0 once s exceeds the span."""
        return (self.p1 - self.p0) + (self.q1 - self.q0) + 1

    def degeneration_page(self):
        limit = self.scan_limit
        ranks_vanish = [self.page(s).differential_vanishes() for s in range(1, limit + 1)]
        r = limit
        while r > 1 and ranks_vanish[r - 2]:
            r -= 1
        return r

    def pages(self, r_max):
        return [self.page(r) for r in range(1, r_max + 1)]

    def limit_page(self):
        return self.page(self.scan_limit)


def page(dc, r):
    return FrolicherSequence(dc).page(r)


def pages(dc, r_max):
    return FrolicherSequence(dc).pages(r_max)


def degeneration_page(dc):
    return FrolicherSequence(dc).degeneration_page()


def euler_characteristics(tables):
    """Alternating sums sum (-1)^(p+q) dim E_r^{p,q}, one per page."""
    return [sum((-1) ** ((p + q) % 2) * n for (p, q), n in t.entries.items()) for t in tables]


# -- cohomology ---------------------------------------------------------------


def _dolbeault(dc, p, q):
    z = kernel(dc.map(V, p, q))
    b = image(dc.map(V, p, q - 1))
    return quotient_dim(z, b)


def _bott_chern(dc, p, q):
    z = intersection(kernel(dc.map(H, p, q)), kernel(dc.map(V, p, q)))
    b = image(dc.map(H, p - 1, q) @ dc.map(V, p - 1, q - 1))
    return quotient_dim(z, b)


def _aeppli(dc, p, q):
    z = kernel(dc.map(H, p, q + 1) @ dc.map(V, p, q))
    b = sum_(image(dc.map(H, p - 1, q)), image(dc.map(V, p, q - 1)))
    return quotient_dim(z, b)


def _de_rham(total):
    out = {}
    for k in total.degrees():
        z = kernel(total.differential(k))
        b = image(total.differential(k - 1)) if total.dim(k - 1) else Subspace.zero(total.dim(k))
        out[k] = quotient_dim(z, b)
    return out


def cohomology(dc, theory):
    theory = theory_name(theory)
    require_valid(dc)
    if theory == "deRham":
        return CohomologyTable(theory, _de_rham(totalize(dc)))
    fn = {"Dolbeault": _dolbeault, "BottChern": _bott_chern, "Aeppli": _aeppli}[theory]
    return CohomologyTable(theory, {pq: fn(dc, *pq) for pq in dc.bidegrees()})


def all_cohomology(dc):
    return {t: cohomology(dc, t) for t in THEORIES}


__all__ = [
    "Bidegree", "CohomologyTable", "FrolicherSequence", "PageTable", "THEORIES", "all_cohomology",
    "cohomology", "degeneration_page", "euler_characteristics", "page", "pages", "theory_name",
]
