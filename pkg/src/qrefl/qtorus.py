"""Quantum torus algebra over an exchange seed, monomial maps, dilog series.

Monomials use the symmetric normalization q^<a,b> Y^a Y^b = Y^(a+b) with
<a,b> = -a.Bhat.b, so Y^a Y^b = q^(a.Bhat.b) Y^(a+b) and the generators
satisfy Y_i Y_j = q^(2 bhat_ij) Y_j Y_i.  Coefficients are ScalarQ in
s = q^(1/2) (entries of Bhat can be half-integers).
"""

from __future__ import annotations

from fractions import Fraction

from .cluster import ExchangeSeed, FrozenVertex
from .scalars import ONE, ScalarQ


class SeedMismatch(Exception):
    pass


class NonpositiveGrading(Exception):
    pass


class Infeasible(Exception):
    pass


class QuantumTorus:
    """Ambient torus: ordered labels plus the Bhat pairing."""

    __slots__ = ("labels", "_index", "_bhat")

    def __init__(self, seed: ExchangeSeed):
        self.labels = seed.labels
        self._index = {l: i for i, l in enumerate(self.labels)}
        lab = self.labels
        self._bhat = [[seed.bhat(i, j) for j in lab] for i in lab]

    def n(self):
        return len(self.labels)

    def index(self, label):
        return self._index[label]

    def pairing(self, a, b) -> Fraction:
        """a . Bhat . b for integer exponent vectors."""
        tot = Fraction(0)
        bh = self._bhat
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = bh[i]
            for j, bj in enumerate(b):
                if bj and row[j]:
                    tot += ai * row[j] * bj
        return tot

    def unit(self, label):
        return tuple(1 if l == label else 0 for l in self.labels)

    def element(self, coeff: ScalarQ, alpha) -> "TorusElement":
        return TorusElement(self, coeff, tuple(alpha))

    def gen(self, label, power=1) -> "TorusElement":
        a = tuple(power if l == label else 0 for l in self.labels)
        return TorusElement(self, ONE, a)

    def one(self) -> "TorusElement":
        return TorusElement(self, ONE, (0,) * self.n())

    def monomial(self, s_exp: int, powers) -> "TorusElement":
        """Ordered product q^(s_exp/2-ish) * prod Y_label^power.

        ``powers`` is a sequence of (label, power); the product is taken
        left to right and normalized symmetrically.  ``s_exp`` is the
        exponent of s in the prefactor.
        """
        out = self.element(ScalarQ.s_pow(s_exp), (0,) * self.n())
        for label, p in powers:
            out = out * self.gen(label, p)
        return out


class TorusElement:
    """coeff * Y^alpha in symmetric normalization."""

    __slots__ = ("torus", "coeff", "alpha")

    def __init__(self, torus: QuantumTorus, coeff: ScalarQ, alpha: tuple):
        self.torus = torus
        self.coeff = coeff
        self.alpha = alpha

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        if self.torus is not other.torus:
            raise SeedMismatch("elements from different tori")
        pair = self.torus.pairing(self.alpha, other.alpha)
        c = self.coeff * other.coeff * ScalarQ.q_pow(pair)
        return TorusElement(self.torus, c,
                            tuple(a + b for a, b in zip(self.alpha, other.alpha)))

    def inverse(self) -> "TorusElement":
        return TorusElement(self.torus, self.coeff.inverse(),
                            tuple(-a for a in self.alpha))

    def pow(self, n: int) -> "TorusElement":
        # (c Y^a)^n = c^n Y^(na): the pairing of a with itself vanishes
        if n == 0:
            return self.torus.one()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            c = out.coeff * base.coeff
            out = TorusElement(self.torus, c,
                               tuple(a + b for a, b in zip(out.alpha, base.alpha)))
        return out

    def commutes_with(self, other: "TorusElement") -> bool:
        return self.torus.pairing(self.alpha, other.alpha) == \
            self.torus.pairing(other.alpha, self.alpha)

    def __eq__(self, other):
        return (isinstance(other, TorusElement) and self.alpha == other.alpha
                and self.coeff == other.coeff)

    def __repr__(self):
        terms = "".join(
            f"Y{l}^{p}" if p != 1 else f"Y{l}"
            for l, p in zip(self.torus.labels, self.alpha) if p)
        return f"{self.coeff.as_pair_str()}*{terms or '1'}"


class TorusHom:
    """Monomial homomorphism between quantum tori, given on generators.

    ``source`` is the QuantumTorus of the domain (its pairing is needed
    to push general monomials through), ``images`` maps source labels to
    TorusElements of the target.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: QuantumTorus, target: QuantumTorus, images: dict):
        self.source = source
        self.target = target
        self.images = images

    @classmethod
    def identity(cls, torus: QuantumTorus):
        return cls(torus, torus, {l: torus.gen(l) for l in torus.labels})

    def apply(self, x: TorusElement) -> TorusElement:
        if x.torus is not self.source and x.torus.labels != self.source.labels:
            raise SeedMismatch("element not over the hom's source torus")
        out = self.target.element(x.coeff, (0,) * self.target.n())
        rest = list(x.alpha)
        # symmetric monomial = q^(sum_{i<j} a_i a_j bhat_ij) * ordered product
        lab = self.source.labels
        norm = Fraction(0)
        for i in range(len(lab)):
            if not rest[i]:
                continue
            for j in range(i + 1, len(lab)):
                if rest[j]:
                    norm += rest[i] * self.source.pairing(
                        self.source.unit(lab[i]), self.source.unit(lab[j])) * rest[j]
        out = out * self.target.element(ScalarQ.q_pow(-norm), (0,) * self.target.n())
        for i, l in enumerate(lab):
            if rest[i]:
                out = out * self.images[l].pow(rest[i])
        return out

    def compose(self, inner: "TorusHom") -> "TorusHom":
        """self o inner (inner applied first)."""
        if inner.target is not self.source and \
                inner.target.labels != self.source.labels:
            raise SeedMismatch("homs not composable")
        images = {l: self.apply(img) for l, img in inner.images.items()}
        return TorusHom(inner.source, self.target, images)

    def respects_commutation(self, source_seed: ExchangeSeed) -> bool:
        """Images must q-commute exactly like the source generators."""
        lab = source_seed.labels
        for a in lab:
            for b in lab:
                lhs = self.images[a] * self.images[b]
                rhs = self.images[b] * self.images[a]
                want = ScalarQ.q_pow(2 * source_seed.bhat(a, b))
                if lhs.coeff != rhs.coeff * want or lhs.alpha != rhs.alpha:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, TorusHom):
            return NotImplemented
        if set(self.images) != set(other.images):
            return False
        return all(self.images[l] == other.images[l] for l in self.images)

    def first_difference(self, other: "TorusHom"):
        for l in sorted(self.images):
            if self.images[l] != other.images[l]:
                return l, self.images[l], other.images[l]
        return None


def perm_hom(torus_src: QuantumTorus, torus_tgt: QuantumTorus, sigma) -> TorusHom:
    """Relabeling homomorphism: Y'_i -> Y_{sigma^-1(i)}."""
    inv = sigma.inv()
    images = {l: torus_tgt.gen(inv(l)) for l in torus_src.labels}
    return TorusHom(torus_src, torus_tgt, images)


def tau_step(seed: ExchangeSeed, k, eps: int,
             torus_src: QuantumTorus = None,
             torus_tgt: QuantumTorus = None) -> TorusHom:
    """Monomial part of a single mutation at k with decomposition sign eps.

    Maps the torus of mutate_matrix(seed, k) to the torus of seed:
    Y'_k -> Y_k^-1 and Y'_i -> Y^(e_i + [eps b_ik]_+ e_k).
    """
    if k in seed.frozen:
        raise FrozenVertex(k)
    torus_tgt = torus_tgt or QuantumTorus(seed)
    torus_src = torus_src or QuantumTorus(mutate_matrix_cached(seed, k))
    images = {}
    for i in seed.labels:
        if i == k:
            images[i] = torus_tgt.gen(k, -1)
        else:
            m = eps * seed.entry(i, k)
            mplus = int(m) if m > 0 else 0
            a = [0] * torus_tgt.n()
            a[torus_tgt.index(i)] += 1
            a[torus_tgt.index(k)] += mplus
            images[i] = torus_tgt.element(ONE, tuple(a))
    return TorusHom(torus_src, torus_tgt, images)


def mutate_matrix_cached(seed, k):
    from .cluster import mutate_matrix
    return mutate_matrix(seed, k)


# ---------------------------------------------------------------------------
# graded truncated series


class TorusSeries:
    """Finite sum of torus monomials supported on grading degree <= cutoff."""

    __slots__ = ("torus", "grading", "cutoff", "terms")

    def __init__(self, torus, grading, cutoff, terms=None):
        self.torus = torus
        self.grading = tuple(grading)
        self.cutoff = cutoff
        self.terms = terms or {}

    def gdeg(self, alpha) -> Fraction:
        return sum((g * a for g, a in zip(self.grading, alpha)), Fraction(0))

    @classmethod
    def one(cls, torus, grading, cutoff):
        return cls(torus, grading, cutoff, {(0,) * torus.n(): ONE})

    def add_term(self, alpha, coeff):
        cur = self.terms.get(alpha)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(alpha, None)
        else:
            self.terms[alpha] = new

    def mul_monomial(self, coeff: ScalarQ, beta: tuple) -> "TorusSeries":
        out = TorusSeries(self.torus, self.grading, self.cutoff)
        for alpha, c in self.terms.items():
            new_alpha = tuple(a + b for a, b in zip(alpha, beta))
            if self.gdeg(new_alpha) > self.cutoff:
                continue
            q = ScalarQ.q_pow(self.torus.pairing(alpha, beta))
            out.add_term(new_alpha, c * coeff * q)
        return out

    def __add__(self, other: "TorusSeries") -> "TorusSeries":
        out = TorusSeries(self.torus, self.grading, self.cutoff, dict(self.terms))
        for a, c in other.terms.items():
            out.add_term(a, c)
        return out

    def __eq__(self, other):
        if not isinstance(other, TorusSeries):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[a] == other.terms[a] for a in self.terms)

    def constant_term(self) -> ScalarQ:
        return self.terms.get((0,) * self.torus.n(), ScalarQ.zero())

    def __repr__(self):
        return f"TorusSeries({len(self.terms)} terms, cutoff={self.cutoff})"


def series_mul(a: TorusSeries, b: TorusSeries) -> TorusSeries:
    out = TorusSeries(a.torus, a.grading, a.cutoff)
    for beta, cb in b.terms.items():
        contrib = a.mul_monomial(cb, beta)
        out = out + contrib
    return out


def series_inverse(a: TorusSeries) -> TorusSeries:
    """Inverse of monomial * (1 + higher-grade tail)."""
    lead = min(a.terms, key=lambda t: (a.gdeg(t), t))
    lead_coeff = a.terms[lead]
    inv_lead = TorusSeries(a.torus, a.grading, a.cutoff)
    inv_lead.add_term(tuple(-x for x in lead), lead_coeff.inverse())
    # t := lead^-1 * a - 1 must have positive grade
    t = inv_lead.mul_monomial(ScalarQ.one(), (0,) * a.torus.n())
    t = series_mul(a, inv_lead)
    zero = (0,) * a.torus.n()
    t.add_term(zero, -(t.terms.get(zero, ScalarQ.zero())))
    for alpha in t.terms:
        if t.gdeg(alpha) <= 0:
            raise NonpositiveGrading("series tail not of positive grade")
    out = TorusSeries.one(a.torus, a.grading, a.cutoff)
    power = TorusSeries.one(a.torus, a.grading, a.cutoff)
    n = 0
    while power.terms and n <= a.cutoff * 4:
        n += 1
        power = series_mul(power, t)
        neg = TorusSeries(a.torus, a.grading, a.cutoff)
        for alpha, c in power.terms.items():
            neg.add_term(alpha, c if n % 2 == 0 else -c)
        out = out + neg
    return series_mul(inv_lead, out)


class CutoffTooSmall(Exception):
    pass


def quantum_mutate(seed, yvars: dict, k, grading, cutoff):
    """One quantum mutation of Y-variables given as truncated series."""
    from .cluster import FrozenVertex, mutate_matrix
    if k in seed.frozen:
        raise FrozenVertex(k)
    new_seed = mutate_matrix(seed, k)
    yk = yvars[k]
    qk = seed.d[k]
    out = {}
    for i in seed.labels:
        if i == k:
            try:
                out[i] = series_inverse(yk)
            except NonpositiveGrading as exc:
                raise CutoffTooSmall(str(exc))
            continue
        bik = seed.entry(i, k)
        cur = yvars[i]
        if bik:
            s = 1 if bik > 0 else -1
            try:
                ypow = series_inverse(yk) if s > 0 else yk
            except NonpositiveGrading as exc:
                raise CutoffTooSmall(str(exc))
            for j in range(1, int(abs(bik)) + 1):
                factor = TorusSeries.one(yk.torus, grading, cutoff)
                scaled = TorusSeries(yk.torus, grading, cutoff)
                for alpha, c in ypow.terms.items():
                    scaled.add_term(alpha, c * ScalarQ.q_pow(qk * (2 * j - 1)))
                factor = factor + scaled
                if s > 0:
                    try:
                        factor = series_inverse(factor)
                    except NonpositiveGrading as exc:
                        raise CutoffTooSmall(str(exc))
                cur = series_mul(cur, factor)
        out[i] = cur
    return new_seed, out


def dilog_coefficients(base: int, expo: int, nmax: int):
    """Coefficients c_n of Psi_{q^base}(U)^expo = sum c_n U^n, n <= nmax."""
    out = [ONE]
    for n in range(1, nmax + 1):
        if expo == 1:
            num = {2 * base * n: (-1) ** n}
        else:
            num = {2 * base * n * n: 1}
        out.append(ScalarQ.qpoch_inv(base, n, num))
    return out


def dilog_series(base: int, arg: TorusElement, expo: int,
                 grading, cutoff) -> TorusSeries:
    """Truncated quantum-dilogarithm series in a torus monomial argument."""
    torus = arg.torus
    s = TorusSeries(torus, grading, cutoff)
    g = s.gdeg(arg.alpha)
    if g <= 0:
        raise NonpositiveGrading(f"grading {g} on dilog argument")
    nmax = int(Fraction(cutoff) / g)
    coeffs = dilog_coefficients(base, expo, nmax)
    for n in range(nmax + 1):
        p = arg.pow(n)
        s.add_term(p.alpha, p.coeff * coeffs[n])
    return s


def expand_product(factors, grading, cutoff, torus=None) -> TorusSeries:
    """Exact truncated product of dilogarithm factors, left to right.

    ``factors`` is a list of (base, arg: TorusElement, expo).
    """
    if not factors:
        if torus is None:
            raise ValueError("empty product needs an explicit torus")
        return TorusSeries.one(torus, grading, cutoff)
    torus = factors[0][1].torus
    acc = TorusSeries.one(torus, grading, cutoff)
    for base, arg, expo in factors:
        g = acc.gdeg(arg.alpha)
        if g <= 0:
            raise NonpositiveGrading(f"grading {g} on factor argument")
        nmax = int(Fraction(cutoff) / g)
        coeffs = dilog_coefficients(base, expo, nmax)
        # multiply acc by sum_n coeffs[n] arg^n with pruning
        new = TorusSeries(torus, grading, cutoff)
        pows = [torus.one()]
        for _ in range(nmax):
            pows.append(pows[-1] * arg)
        for n in range(nmax + 1):
            mono = pows[n]
            new = new + acc.mul_monomial(mono.coeff * coeffs[n], mono.alpha)
        acc = new
    return acc


# ---------------------------------------------------------------------------
# finiteness certificates: positive grading / recession cone


def stiemke_grading(args, strict=Fraction(1)):
    """Integer functional g with g(arg) >= 1 for every exponent vector.

    Exact rational phase-1 simplex; raises Infeasible when some
    nonnegative combination of the args vanishes (nontrivial recession
    cone).
    """
    rows = [tuple(a) for a in args]
    if not rows:
        raise ValueError("no arguments")
    rows = sorted(set(rows))
    n = len(rows[0])
    sol = _solve_lp_geq(rows, [strict] * len(rows), n)
    if sol is None:
        raise Infeasible("no positive grading exists")
    den = 1
    for v in sol:
        den = den * v.denominator // gcd_f(den, v.denominator)
    return tuple(int(v * den) for v in sol)


def gcd_f(a, b):
    from math import gcd as _g
    return _g(int(a), int(b)) or 1


def _solve_lp_geq(rows, rhs, nvars):
    """Feasible x (free sign) with rows[i] . x >= rhs[i], or None.

    Phase-1 simplex over exact rationals: write x = xp - xm and
    rows.x - slack = rhs with xp, xm, slack >= 0, then drive artificial
    variables to zero (Bland-style tie break, so it terminates).
    """
    m = len(rows)
    ncols = 2 * nvars + m           # xp, xm, slack
    total = ncols + m               # + artificials
    rows_t = []
    for i, row in enumerate(rows):
        r = [Fraction(x) for x in row] + [Fraction(-x) for x in row]
        r += [Fraction(-1) if j == i else Fraction(0) for j in range(m)]
        b = Fraction(rhs[i])
        if b < 0:
            r = [-x for x in r]
            b = -b
        r += [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        r.append(b)
        rows_t.append(r)
    basis = [ncols + i for i in range(m)]
    z = [Fraction(0)] * (total + 1)
    for r in rows_t:
        for j in range(total + 1):
            z[j] += r[j]
    for j in range(ncols, total):
        z[j] = Fraction(0)
    while True:
        piv_col = next((j for j in range(ncols) if z[j] > 0), None)
        if piv_col is None:
            break
        piv_row, best = None, None
        for i, r in enumerate(rows_t):
            if r[piv_col] > 0:
                ratio = r[total] / r[piv_col]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[piv_row]):
                    best, piv_row = ratio, i
        if piv_row is None:
            return None
        pv = rows_t[piv_row][piv_col]
        rows_t[piv_row] = [x / pv for x in rows_t[piv_row]]
        pr = rows_t[piv_row]
        for i in range(m):
            if i != piv_row and rows_t[i][piv_col]:
                f = rows_t[i][piv_col]
                rows_t[i] = [a - f * b for a, b in zip(rows_t[i], pr)]
        if z[piv_col]:
            f = z[piv_col]
            z = [a - f * b for a, b in zip(z, pr)]
        basis[piv_row] = piv_col
    if z[total] != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, bcol in enumerate(basis):
        if bcol < ncols:
            x[bcol] = rows_t[i][total]
    return [x[j] - x[nvars + j] for j in range(nvars)]


def recession_cone_trivial_fm(args) -> bool:
    """Fourier-Motzkin check that {n >= 0 : sum n_i args_i = 0} = {0}.

    Intended for small systems (few factors); eliminates the n variables
    from [n >= 0, A^T n = 0, sum n >= 1].
    """
    m = len(args)
    n = len(args[0]) if args else 0
    # inequalities as rows (c_0 + sum c_i n_i >= 0)
    ineqs = []
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        row[1 + i] = Fraction(1)
        ineqs.append(row)
    row = [Fraction(-1)] + [Fraction(1)] * m
    ineqs.append(row)
    for j in range(n):
        for sign in (1, -1):
            row = [Fraction(0)] + [Fraction(sign * args[i][j]) for i in range(m)]
            ineqs.append(row)
    for var in range(1, m + 1):
        pos = [r for r in ineqs if r[var] > 0]
        neg = [r for r in ineqs if r[var] < 0]
        zero = [r for r in ineqs if r[var] == 0]
        new = list(zero)
        for p in pos:
            for q in neg:
                comb = [a * (-q[var]) + b * p[var] for a, b in zip(p, q)]
                comb[var] = Fraction(0)
                new.append(comb)
        ineqs = new
    feasible = all(r[0] >= 0 for r in ineqs)
    return not feasible


def staged_certificate(args):
    """Greedy staged-elimination certificate of recession-cone triviality.

    Returns a list of stages [(rows, cols), ...]: at each stage the listed
    coordinate rows are single-signed on the not-yet-bounded columns, so
    fixing their values bounds those columns.  Returns None when the
    greedy process stalls before bounding every column.
    """
    m = len(args)
    if m == 0:
        return []
    n = len(args[0])
    remaining = set(range(m))
    stages = []
    while remaining:
        stage_rows = []
        stage_cols = set()
        for coord in range(n):
            col = {i for i in remaining if args[i][coord]}
            if not col:
                continue
            signs = {1 if args[i][coord] > 0 else -1 for i in col}
            if len(signs) == 1:
                stage_rows.append(coord)
                stage_cols |= col
        if not stage_cols:
            return None
        stages.append((sorted(stage_rows), sorted(stage_cols)))
        remaining -= stage_cols
    return stages


def check_stage_plan(args, plan) -> bool:
    """Validate an explicit staged plan [(rows, cols), ...] as a certificate."""
    m = len(args)
    remaining = set(range(m))
    for rows, cols in plan:
        colset = set(cols)
        if not colset <= remaining:
            return False
        covered = set()
        for coord in rows:
            col = {i for i in remaining if args[i][coord]}
            signs = {1 if args[i][coord] > 0 else -1 for i in col}
            if len(signs) > 1:
                return False
            covered |= col
        if not colset <= covered:
            return False
        remaining -= colset
    return not remaining


def match_stage_plan(args, plan):
    """Validate a reference staged plan whose row indices are a permutation.

    For each stage, the plan's rows must be assignable (injectively) to
    coordinates that are single-signed on the not-yet-bounded columns and
    whose supports cover exactly the stage's column set.  Returns the
    assignment {plan_row: coordinate} or None.
    """
    m = len(args)
    n = len(args[0]) if args else 0
    remaining = set(range(m))
    used = set()
    assign = {}
    for rows, cols in plan:
        colset = set(cols)
        cands = []
        for coord in range(n):
            if coord in used:
                continue
            sup = {i for i in remaining if args[i][coord]}
            if not sup or not sup <= colset:
                continue
            signs = {1 if args[i][coord] > 0 else -1 for i in sup}
            if len(signs) == 1:
                cands.append((coord, frozenset(sup)))
        chosen = _cover_exact(cands, frozenset(colset), len(rows))
        if chosen is None:
            return None
        for r, coord in zip(rows, chosen):
            assign[r] = coord
        used.update(chosen)
        remaining -= colset
    if remaining:
        return None
    return assign


def _cover_exact(cands, target, count):
    """Pick ``count`` candidates whose supports union to ``target``."""
    def rec(idx, left, picked):
        if len(picked) == count:
            return list(picked) if not left else None
        if idx >= len(cands):
            return None
        coord, sup = cands[idx]
        out = rec(idx + 1, left - sup, picked + [coord])
        if out is not None:
            return out
        return rec(idx + 1, left, picked)
    return rec(0, target, [])
