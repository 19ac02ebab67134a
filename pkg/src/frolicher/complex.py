"""Bounded double complexes with exact matrices.

``d1`` has bidegree (1, 0) and ``d2`` bidegree (0, 1); for complexes of
forms these are del and del-bar. Maps are stored for every bidegree with a
nonzero space; an absent entry means the zero map.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import MalformedComplexError, ValidationError
from .linalg import Mat
from .scalar import ZERO


class Bidegree(NamedTuple):
    p: int
    q: int


H, V = "h", "v"
STEP = {H: (1, 0), V: (0, 1)}


def default_label(p, q, k):
    return f"e{p}_{q}_{k}"


@dataclass(frozen=True, eq=False)
class DoubleComplex:
    bounds: tuple  # (p_min, p_max, q_min, q_max)
    dims: dict
    labels: dict = field(default_factory=dict)
    d1: dict = field(default_factory=dict)
    d2: dict = field(default_factory=dict)

    def __post_init__(self):
        p0, p1, q0, q1 = self.bounds
        if p0 > p1 or q0 > q1:
            raise MalformedComplexError(f"empty bounds {self.bounds}")
        dims = {}
        for pq, n in self.dims.items():
            pq = Bidegree(*pq)
            if n < 0:
                raise MalformedComplexError(f"negative dimension at {tuple(pq)}")
            if n and not self.in_bounds(*pq):
                raise MalformedComplexError(f"space at {tuple(pq)} lies outside bounds {self.bounds}")
            if n:
                dims[pq] = int(n)
        labels = {}
        for pq, n in dims.items():
            lab = tuple(self.labels.get(pq, ()) or self.labels.get(tuple(pq), ()))
            if not lab:
                lab = tuple(default_label(pq.p, pq.q, k) for k in range(n))
            if len(lab) != n:
                raise MalformedComplexError(f"{len(lab)} labels for a space of dimension {n} at {tuple(pq)}")
            labels[pq] = lab
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "labels", labels)
        for name, (dp, dq) in (("d1", STEP[H]), ("d2", STEP[V])):
            given = {Bidegree(*k): m for k, m in getattr(self, name).items()}
            maps = {}
            for pq, m in given.items():
                if pq not in dims:
                    if m.rows * m.cols and not m.is_zero():
                        raise MalformedComplexError(f"{name} given on the zero space at {tuple(pq)}")
                    continue
            for pq, n in dims.items():
                tgt = (pq.p + dp, pq.q + dq)
                nt = dims.get(tgt, 0)
                m = given.get(pq)
                if m is None:
                    m = Mat.zero(nt, n)
                if m.shape != (nt, n):
                    raise MalformedComplexError(
                        f"{name} at {tuple(pq)} has shape {m.shape}, expected {(nt, n)}"
                    )
                maps[pq] = m
            object.__setattr__(self, name, maps)

    # -- access ------------------------------------------------------------

    def in_bounds(self, p, q):
        p0, p1, q0, q1 = self.bounds
        return p0 <= p <= p1 and q0 <= q <= q1

    def dim(self, p, q):
        return self.dims.get((p, q), 0)

    def map(self, direction, p, q):
        """The matrix of d1 (``"h"``) or d2 (``"v"``) out of (p, q)."""
        dp, dq = STEP[direction]
        maps = self.d1 if direction == H else self.d2
        m = maps.get((p, q))
        if m is None:
            return Mat.zero(self.dim(p + dp, q + dq), self.dim(p, q))
        return m

    def bidegrees(self):
        """All bidegrees inside the bounds, ordered by p then q."""
        p0, p1, q0, q1 = self.bounds
        return [Bidegree(p, q) for p in range(p0, p1 + 1) for q in range(q0, q1 + 1)]

    def support(self):
        return sorted(self.dims)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def __eq__(self, other):
        if not isinstance(other, DoubleComplex):
            return NotImplemented
        return (self.bounds == other.bounds and self.dims == other.dims
                and self.labels == other.labels and self.d1 == other.d1 and self.d2 == other.d2)

    __hash__ = None

    def same_maps(self, other):
        """Equality ignoring labels."""
        return (self.bounds == other.bounds and self.dims == other.dims
                and self.d1 == other.d1 and self.d2 == other.d2)

    def relabeled(self, labels):
        return DoubleComplex(self.bounds, self.dims, labels, self.d1, self.d2)

    def __repr__(self):
        return f"DoubleComplex(bounds={self.bounds}, total_dim={self.total_dim})"


# -- validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    checks: dict  # (p, q) -> {"d1^2": bool, "d2^2": bool, "anticommute": bool}

    @property
    def ok(self):
        return all(all(c.values()) for c in self.checks.values())

    def failures(self):
        return [(pq, name) for pq, c in sorted(self.checks.items()) for name, good in c.items() if not good]

    def summary(self):
        if self.ok:
            return f"valid: all identities hold on {len(self.checks)} bidegrees"
        bad = ", ".join(f"{name} at {tuple(pq)}" for pq, name in self.failures())
        return f"invalid: {bad}"


def validate(dc):
    """Check d1^2 = 0, d2^2 = 0 and d1 d2 + d2 d1 = 0 on every bidegree."""
    checks = {}
    for pq in dc.support():
        p, q = pq
        for direction, (dp, dq) in STEP.items():
            m = dc.map(direction, p, q)
            if m.shape != (dc.dim(p + dp, q + dq), dc.dim(p, q)):
                raise MalformedComplexError(f"{direction}-map at {tuple(pq)} has shape {m.shape}")
        h, v = dc.map(H, p, q), dc.map(V, p, q)
        hh = dc.map(H, p + 1, q) @ h
        vv = dc.map(V, p, q + 1) @ v
        anti = dc.map(H, p, q + 1) @ v + dc.map(V, p + 1, q) @ h
        checks[pq] = {"d1^2": hh.is_zero(), "d2^2": vv.is_zero(), "anticommute": anti.is_zero()}
    return ValidationReport(checks)


def require_valid(dc):
    report = validate(dc)
    if not report.ok:
        raise ValidationError(report)
    return dc


# -- constructions ------------------------------------------------------------


def direct_sum(a, b):
    """Block-diagonal sum; a's basis comes first at every bidegree."""
    return direct_sum_all([a, b])


def direct_sum_all(complexes, bounds=None):
    """Direct sum of many complexes in one pass."""
    complexes = list(complexes)
    if bounds is None:
        bounds = (min(c.bounds[0] for c in complexes), max(c.bounds[1] for c in complexes),
                  min(c.bounds[2] for c in complexes), max(c.bounds[3] for c in complexes))
    keys = sorted({pq for c in complexes for pq in c.dims})
    dims = {pq: sum(c.dim(*pq) for c in complexes) for pq in keys}
    labels = {pq: sum((c.labels.get(pq, ()) for c in complexes), ()) for pq in keys}
    maps = {H: {}, V: {}}
    for direction, (dp, dq) in STEP.items():
        for pq in keys:
            nt = dims.get((pq[0] + dp, pq[1] + dq), 0)
            ns = dims[pq]
            entries = [ZERO] * (nt * ns)
            ro = co = 0
            for c in complexes:
                m = c.map(direction, *pq)
                for i in range(m.rows):
                    for j in range(m.cols):
                        x = m[i, j]
                        if x:
                            entries[(ro + i) * ns + co + j] = x
                ro += c.dim(pq[0] + dp, pq[1] + dq)
                co += c.dim(*pq)
            maps[direction][pq] = Mat(nt, ns, tuple(entries))
    return DoubleComplex(bounds, dims, labels, maps[H], maps[V])


@dataclass(frozen=True, eq=False)
class TotalComplex:
    dims: dict  # degree -> dimension
    d: dict  # degree -> Mat to degree + 1
    blocks: dict  # degree -> list of (Bidegree, offset, dim), p ascending

    def degrees(self):
        return sorted(self.dims)

    def dim(self, k):
        return self.dims.get(k, 0)

    def differential(self, k):
        m = self.d.get(k)
        if m is None:
            return Mat.zero(self.dim(k + 1), self.dim(k))
        return m

    def squares_to_zero(self):
        return all((self.differential(k + 1) @ self.differential(k)).is_zero() for k in self.dims)


def totalize(dc):
    """Total complex with differential d1 + d2; degree k is the sum over p + q = k."""
    require_valid(dc)
    p0, p1, q0, q1 = dc.bounds
    blocks = {}
    for k in range(p0 + q0, p1 + q1 + 1):
        off = 0
        blk = []
        for p in range(p0, p1 + 1):
            q = k - p
            if q0 <= q <= q1:
                n = dc.dim(p, q)
                blk.append((Bidegree(p, q), off, n))
                off += n
        blocks[k] = blk
    dims = {k: sum(n for _, _, n in blk) for k, blk in blocks.items()}
    d = {}
    for k, blk in blocks.items():
        nt, ns = dims.get(k + 1, 0), dims[k]
        entries = [ZERO] * (nt * ns)
        tgt_off = {pq: off for pq, off, _ in blocks.get(k + 1, [])}
        for pq, so, n in blk:
            if not n:
                continue
            for direction, (dp, dq) in STEP.items():
                t = (pq.p + dp, pq.q + dq)
                if t not in tgt_off:
                    continue
                m = dc.map(direction, *pq)
                to = tgt_off[t]
                for i in range(m.rows):
                    for j in range(m.cols):
                        x = m[i, j]
                        if x:
                            entries[(to + i) * ns + so + j] = entries[(to + i) * ns + so + j] + x
        d[k] = Mat(nt, ns, tuple(entries))
    return TotalComplex(dims, d, blocks)
