"""Double complex of left-invariant forms from complex structure equations.

Generators phi^1..phi^n get ids 1..n, their conjugates ids n+1..2n. A
monomial phi^I ^ phibar^J is stored as the increasing tuple of generator ids,
so the canonical order is unbarred block first, each block increasing. The
differential is extended from generators by the graded Leibniz rule
d(x1 ^ ... ^ xm) = sum_t (-1)^(t-1) x1 ^ ... ^ dx_t ^ ... ^ xm.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .complex import DoubleComplex
from .errors import InconsistentEquationsError
from .linalg import Mat
from .scalar import ZERO, Scalar


@dataclass(frozen=True)
class StructureEquations:
    """Coefficients of d(phi^k) = sum hol[k,i,j] phi^i^phi^j + sum mix[k,i,j] phi^i^phibar^j.

    ``hol`` and ``mix`` map (k, i, j) to a Scalar, indices 1-based, ``i < j``
    for ``hol``. There is no (0,2) part by construction.
    """

    n: int
    hol: dict = field(default_factory=dict)
    mix: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("complex dimension must be positive")
        hol, mix = {}, {}
        for (k, i, j), c in self.hol.items():
            self._check_index(k, i, j)
            if i == j:
                raise ValueError(f"hol entry ({k},{i},{j}): phi^{i}^phi^{j} vanishes")
            c = Scalar.coerce(c)
            if i > j:
                i, j, c = j, i, -c
            if c:
                hol[(k, i, j)] = hol.get((k, i, j), ZERO) + c
        for (k, i, j), c in self.mix.items():
            self._check_index(k, i, j)
            c = Scalar.coerce(c)
            if c:
                mix[(k, i, j)] = mix.get((k, i, j), ZERO) + c
        object.__setattr__(self, "hol", {key: c for key, c in sorted(hol.items()) if c})
        object.__setattr__(self, "mix", {key: c for key, c in sorted(mix.items()) if c})

    def _check_index(self, *idx):
        for x in idx:
            if not 1 <= x <= self.n:
                raise ValueError(f"index {x} outside 1..{self.n}")

    def generator_differential(self, g):
        """d of generator id ``g`` as {(a, b): coeff} with a < b."""
        n = self.n
        out = {}

        def put(a, b, c):
            if a > b:
                a, b, c = b, a, -c
            out[(a, b)] = out.get((a, b), ZERO) + c

        if g <= n:
            for (k, i, j), c in self.hol.items():
                if k == g:
                    put(i, j, c)
            for (k, i, j), c in self.mix.items():
                if k == g:
                    put(i, n + j, c)
        else:
            kk = g - n
            for (k, i, j), c in self.hol.items():
                if k == kk:
                    put(n + i, n + j, c.conjugate())
            # conj(phi^i ^ phibar^j) = phibar^i ^ phi^j
            for (k, i, j), c in self.mix.items():
                if k == kk:
                    put(n + i, j, c.conjugate())
        return {key: c for key, c in out.items() if c}


def generator_name(g, n):
    return f"phi{g}" if g <= n else f"phib{g - n}"


def monomial_label(mono, n):
    if not mono:
        return "1"
    return "^".join(generator_name(g, n) for g in mono)


def monomials(n, p, q):
    """Basis of bidegree (p, q), in the fixed order."""
    return [I + tuple(n + j for j in J)
            for I in combinations(range(1, n + 1), p)
            for J in combinations(range(1, n + 1), q)]


def _sort_sign(seq):
    """Sign of the sorting permutation, or 0 if an index repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def differentiate(form, gen_d):
    """Apply the derivation to a form {monomial: coeff}."""
    out = {}
    for mono, c in form.items():
        for t, g in enumerate(mono):
            dg = gen_d[g]
            if not dg:
                continue
            s0 = -1 if t % 2 else 1
            for pair, a in dg.items():
                sign, key = _sort_sign(mono[:t] + pair + mono[t + 1:])
                if not sign:
                    continue
                coeff = c * a if sign * s0 > 0 else -(c * a)
                out[key] = out.get(key, ZERO) + coeff
    return {k: v for k, v in out.items() if v}


def check_jacobi(eqs):
    """Raise InconsistentEquationsError at the first generator with d(d g) != 0."""
    n = eqs.n
    gen_d = {g: eqs.generator_differential(g) for g in range(1, 2 * n + 1)}
    for g in range(1, 2 * n + 1):
        if differentiate(gen_d[g], gen_d):
            raise InconsistentEquationsError(generator_name(g, n))
    return gen_d


def build(eqs):
    """Double complex of left-invariant forms; d1 = del, d2 = del-bar."""
    n = eqs.n
    gen_d = check_jacobi(eqs)
    index = {}
    dims, labels = {}, {}
    for p in range(n + 1):
        for q in range(n + 1):
            monos = monomials(n, p, q)
            dims[(p, q)] = len(monos)
            labels[(p, q)] = tuple(monomial_label(m, n) for m in monos)
            for k, m in enumerate(monos):
                index[m] = (p, q, k)
    d1, d2 = {}, {}
    for p in range(n + 1):
        for q in range(n + 1):
            src = monomials(n, p, q)
            nh = dims.get((p + 1, q), 0)
            nv = dims.get((p, q + 1), 0)
            h_entries = [ZERO] * (nh * len(src))
            v_entries = [ZERO] * (nv * len(src))
            for j, mono in enumerate(src):
                for key, c in differentiate({mono: Scalar(1)}, gen_d).items():
                    tp, tq, i = index[key]
                    if (tp, tq) == (p + 1, q):
                        h_entries[i * len(src) + j] = c
                    elif (tp, tq) == (p, q + 1):
                        v_entries[i * len(src) + j] = c
                    else:
                        raise InconsistentEquationsError(
                            monomial_label(mono, n), f"d of {monomial_label(mono, n)} leaves bidegrees (1,0)+(0,1)")
            d1[(p, q)] = Mat(nh, len(src), tuple(h_entries))
            d2[(p, q)] = Mat(nv, len(src), tuple(v_entries))
    return DoubleComplex((0, n, 0, n), dims, labels, d1, d2)


def conjugate_check(dc):
    """True iff conj(del) out of (p,q) equals del-bar out of (q,p) under bar-swap.

    Bar-swap sends phi^I ^ phibar^J to its conjugate phibar^I ^ phi^J, i.e.
    (-1)^(|I||J|) phi^J ^ phibar^I.
    """
    n = dc.bounds[1]
    if dc.bounds != (0, n, 0, n):
        return False

    def swap(mono):
        I = tuple(g for g in mono if g <= n)
        J = tuple(g - n for g in mono if g > n)
        sign = -1 if (len(I) * len(J)) % 2 else 1
        return sign, J + tuple(n + i for i in I)

    pos = {}
    for p in range(n + 1):
        for q in range(n + 1):
            for k, m in enumerate(monomials(n, p, q)):
                pos[m] = k
    for p in range(n + 1):
        for q in range(n + 1):
            src = monomials(n, p, q)
            if len(src) != dc.dim(p, q) or dc.dim(q, p) != len(src):
                return False
            h = dc.map("h", p, q)
            v = dc.map("v", q, p)
            tgt = monomials(n, p + 1, q) if p < n else []
            for j, mono in enumerate(src):
                s_src, bar_src = swap(mono)
                # conj(del e) written in the barred basis
                expect = [ZERO] * v.rows
                for i, t in enumerate(tgt):
                    c = h[i, j]
                    if c:
                        s_t, bar_t = swap(t)
                        expect[pos[bar_t]] = expect[pos[bar_t]] + (c.conjugate() if s_t > 0 else -c.conjugate())
                col = v.column(pos[bar_src])
                got = [x if s_src > 0 else -x for x in col]
                if got != expect:
                    return False
    return True

