"""Ideal-level operations built on the Groebner engine.

Covers sums, products, powers, intersection, colon, saturation,
elimination, containment/equality, radical membership (Rabinowitsch),
Krull dimension via independent sets modulo the initial ideal, minimal
generator counts, kernels of algebra maps, and the linkage-based
unmixedness test.

Height is defined as n - dim(R/I); this is valid because the ambient is
a polynomial ring over a field (catenary and equidimensional).
"""

from .errors import (ArityMismatch, BadRegularSequence, NotHomogeneous,
                     RingMismatch, ZeroColon)
from .gb import GroebnerBasis, buchberger, is_member, normal_form
from .linalg import rank
from .orders import Block, Grevlex, Lex
from .ring import Polynomial, Ring, embed, restrict


class DimensionReport:
    """dim(R/I), height, and a variable subset witnessing the dimension."""

    def __init__(self, dim, height, max_independent_set):
        self.dim = dim
        self.height = height
        self.max_independent_set = tuple(max_independent_set)

    def __repr__(self):
        return (f"DimensionReport(dim={self.dim}, height={self.height}, "
                f"witness={self.max_independent_set})")


class Ideal:
    """Generator list plus a lazily computed, cached reduced Groebner basis."""

    def __init__(self, ring, generators, _gb=None):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator not in the ideal's ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = _gb
        self._dim_report = None

    # -- basics --

    def groebner(self):
        if self._gb is None:
            if not self.generators:
                self._gb = GroebnerBasis(self.ring, [])
            else:
                self._gb = buchberger(list(self.generators))
        return self._gb

    def normal_form(self, f):
        return normal_form(f, self.groebner().generators)

    def contains_poly(self, f):
        if f.is_zero():
            return True
        basis = self.groebner().generators
        return bool(basis) and normal_form(f, basis).is_zero()

    def contains(self, other):
        if isinstance(other, Ideal):
            self._check(other)
            gens = other.generators
        elif isinstance(other, Polynomial):
            gens = [other]
        else:
            gens = list(other)
        return all(self.contains_poly(g) for g in gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check(other)
        return self.groebner().generators == other.groebner().generators

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        basis = self.groebner().generators
        return len(basis) == 1 and basis[0] == self.ring.one()

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("ideals live in different rings")

    # -- arithmetic --

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        self._check(other)
        # dedup equal products so that iterated multiplication grows like
        # combinations with repetition, not exponentially
        seen = {}
        for f in self.generators:
            for g in other.generators:
                h = f * g
                key = tuple(sorted(h.terms.items()))
                seen.setdefault(key, h)
        return Ideal(self.ring, list(seen.values()))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return Ideal(self.ring, [self.ring.one()])
        result = self
        # products of k-subsets with repetition, built incrementally
        for _ in range(k - 1):
            seen = {}
            for f in result.generators:
                for g in self.generators:
                    h = f * g
                    key = tuple(sorted(h.terms.items()))
                    seen.setdefault(key, h)
            result = Ideal(self.ring, list(seen.values()))
        return result

    # -- elimination machinery --

    def _aux_ring(self, aux_names):
        inner = self.ring.order
        if not isinstance(inner, (Lex, Grevlex, Block)):
            inner = Grevlex()
        return self.ring.extended(
            aux_names, front=True,
            order=Block(len(aux_names), Grevlex(), inner))

    def _embed_into(self, ext, offset):
        var_map = [offset + i for i in range(self.ring.n)]
        return [embed(g, ext, var_map) for g in self.generators]

    @staticmethod
    def _drop_aux(gb, ext, k, target, offset_map):
        """Keep GB elements free of the first k (eliminated) variables,
        mapped into `target` via offset_map."""
        kept = []
        for g in gb:
            if all(all(e == 0 for e in ext.decode(m)[:k]) for m in g.terms):
                kept.append(restrict(g, target, offset_map))
        return kept

    def intersect(self, other):
        """I cap J by component elimination in R^2: the module generated
        by (f_i, f_i) and (g_j, 0) contains (0, h) exactly for h in I cap
        J, and no auxiliary variable is needed (homogeneity survives)."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        from .modules import ModVec, module_buchberger
        ring = self.ring
        zero = ring.zero()
        vecs = [ModVec.from_polys([f, f]) for f in self.generators]
        vecs += [ModVec.from_polys([g, zero]) for g in other.generators]
        basis = module_buchberger(vecs)
        kept = []
        for v in basis:
            if all(pos >= 1 for (pos, _m) in v.terms):
                h = v.to_polys()[1]
                if not h.is_zero():
                    kept.append(h)
        return Ideal(ring, kept)

    def colon_poly(self, f):
        """I : f, read off the syzygies of (f, g_1, ..., g_k): the
        coefficients of f in a syzygy generating set generate I : f."""
        if f.is_zero():
            raise ZeroColon("colon by zero polynomial")
        if self.is_zero():
            return Ideal(self.ring, [])
        from .modules import syzygy_columns
        cols = syzygy_columns([[f]] + [[g] for g in self.generators])
        gens = [col[0] for col in cols if not col[0].is_zero()]
        return Ideal(self.ring, gens)

    def colon(self, other):
        """I : J = intersection over generators f of J of I : f."""
        if isinstance(other, Polynomial):
            return self.colon_poly(other)
        self._check(other)
        if other.is_zero():
            raise ZeroColon("colon by the zero ideal")
        result = None
        for f in other.generators:
            piece = self.colon_poly(f)
            result = piece if result is None else result.intersect(piece)
        return result

    def saturate(self, other):
        """Stable value of I : J^infinity (colon until idempotent)."""
        current = self
        while True:
            nxt = current.colon(other)
            if current.contains(nxt):
                return current
            current = nxt

    def eliminate(self, variables):
        """I cap k[remaining variables], as an ideal of the smaller ring."""
        positions = []
        for v in variables:
            if isinstance(v, str):
                if v not in self.ring._index:
                    raise ArityMismatch(f"unknown variable {v}")
                positions.append(self.ring._index[v])
            else:
                positions.append(int(v))
        drop = set(positions)
        keep = [i for i in range(self.ring.n) if i not in drop]
        if not keep:
            raise ArityMismatch("cannot eliminate every variable")
        base_order = self.ring.order
        if not isinstance(base_order, (Lex, Grevlex)):
            base_order = Grevlex()
        target = Ring(self.ring.field,
                      [self.ring.names[i] for i in keep],
                      base_order,
                      None if self.ring.weights is None
                      else [self.ring.weights[i] for i in keep])
        if self.is_zero():
            return Ideal(target, [])
        # reorder: eliminated variables first, under a block order
        perm = positions + keep  # new position -> old position
        old_to_new = {old: new for new, old in enumerate(perm)}
        ext = Ring(self.ring.field,
                   [self.ring.names[i] for i in perm],
                   Block(len(positions), Grevlex(), base_order)
                   if positions else base_order,
                   None if self.ring.weights is None
                   else [self.ring.weights[i] for i in perm])
        var_map = [old_to_new[i] for i in range(self.ring.n)]
        gens = [embed(g, ext, var_map) for g in self.generators]
        gb = buchberger(gens)
        offset_map = list(range(len(positions), ext.n))
        kept = self._drop_aux(gb, ext, len(positions), target, offset_map)
        return Ideal(target, kept)

    # -- structure --

    def dimension(self):
        """Krull data of R/I via independent sets modulo the initial ideal."""
        if self._dim_report is not None:
            return self._dim_report
        n = self.ring.n
        basis = self.groebner().generators
        if any(b.degree() == 0 for b in basis):
            self._dim_report = DimensionReport(-1, n + 1, ())
            return self._dim_report
        supports = []
        for b in basis:
            exps = self.ring.decode(b.lm())
            mask = 0
            for i, e in enumerate(exps):
                if e:
                    mask |= 1 << i
            supports.append(mask)
        best_mask, best_size = 0, 0
        for mask in range(1 << n):
            size = bin(mask).count("1")
            if size <= best_size and mask != 0:
                continue
            if all(s & ~mask for s in supports):
                best_mask, best_size = mask, size
        witness = [self.ring.names[i] for i in range(n) if best_mask >> i & 1]
        self._dim_report = DimensionReport(best_size, n - best_size, witness)
        return self._dim_report

    @property
    def dim(self):
        return self.dimension().dim

    @property
    def height(self):
        return self.dimension().height

    def min_gens(self):
        """Number of minimal homogeneous generators, via ranks of the
        degree slices of I and m*I."""
        for g in self.generators:
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")
        if self.is_zero():
            return 0
        gens = self.groebner().generators
        ring = self.ring
        field = ring.field
        weights = ring.weights or tuple(1 for _ in range(ring.n))
        degrees = sorted({g.wdegree() for g in gens})
        total = 0
        for d in degrees:
            monos = _weighted_monomials(ring, weights, d)
            index = {m: i for i, m in enumerate(monos)}
            full_rows, proper_rows = [], []
            for g in gens:
                dg = g.wdegree()
                if dg > d:
                    continue
                for mult in _weighted_monomials(ring, weights, d - dg):
                    prod = g.mul_term(mult, field.one)
                    row = [field.zero] * len(monos)
                    for m, c in prod.terms.items():
                        row[index[m]] = c
                    full_rows.append(row)
                    if mult != 0:
                        proper_rows.append(row)
            total += rank(full_rows, field) - rank(proper_rows, field)
        return total

    def minimal_generators(self):
        """A minimal homogeneous generating set, greedily extracted from
        the reduced Groebner basis in increasing degree (each element is
        kept iff it is not in the ideal of those already kept; processing
        by degree makes the greedy choice minimal)."""
        for g in self.generators:
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")
        kept = []
        for g in sorted(self.groebner().generators,
                        key=lambda f: (f.wdegree(), self.ring.key(f.lm()))):
            if not kept or not Ideal(self.ring, kept).contains_poly(g):
                kept.append(g)
        return kept

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"


def _weighted_monomials(ring, weights, d, _memo=None):
    """Packed monomials of weighted degree exactly d."""
    if _memo is None:
        _memo = getattr(ring, "_wmono_memo", None)
        if _memo is None:
            _memo = {}
            ring._wmono_memo = _memo
    key = (tuple(weights), d)
    if key in _memo:
        return _memo[key]

    out = []

    def rec(i, remaining, exps):
        if i == ring.n - 1:
            if remaining % weights[i] == 0:
                out.append(ring.encode(tuple(exps + [remaining // weights[i]])))
            return
        e = 0
        while e * weights[i] <= remaining:
            rec(i + 1, remaining - e * weights[i], exps + [e])
            e += 1

    if d >= 0:
        rec(0, d, [])
    _memo[key] = out
    return out


def exact_div(g, f):
    """Quotient g / f when f divides g exactly."""
    ring = g.ring
    field = ring.field
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_f, lc_f = f.lm(), f.lc()
    inv_lc = field.inv(lc_f)
    work = dict(g.terms)
    quot = {}
    while work:
        m = max(work, key=ring.key)
        c = work[m]
        if not ring.mono_divides(lm_f, m):
            raise ArithmeticError("exact division failed; divisor does not divide")
        qm = m - lm_f
        qc = field.mul(c, inv_lc)
        quot[qm] = qc
        for mf, cf in f.terms.items():
            mm = mf + qm
            val = field.sub(work.get(mm, field.zero), field.mul(qc, cf))
            if val == field.zero:
                work.pop(mm, None)
            else:
                work[mm] = val
    return Polynomial(ring, quot)


def kernel_of_map(source_ring, images):
    """Kernel of the algebra map source_ring -> (ring of the images),
    sending the i-th variable to images[i].

    Computed as eliminate(target variables) of the graph ideal
    (x_i - image_i).  When the source ring carries no weights and every
    image is homogeneous, the returned ideal lives in a weighted copy of
    the source ring (weight of x_i = degree of images[i]), so the kernel
    is weighted-homogeneous and minimal-generator counts make sense.
    """
    if len(images) != source_ring.n:
        raise ArityMismatch(
            f"need {source_ring.n} images, got {len(images)}")
    target = images[0].ring
    for g in images:
        if g.ring != target:
            raise RingMismatch("images must share a common target ring")
        if g.is_zero():
            raise ZeroColon("kernel of a map with a zero image is not supported")
    if set(target.names) & set(source_ring.names):
        raise ArityMismatch("source and target variable names must be disjoint")
    t_weights = target.weights or tuple(1 for _ in range(target.n))
    if source_ring.weights is not None:
        s_weights = source_ring.weights
    elif all(g.is_homogeneous() for g in images):
        s_weights = tuple(max(g.wdegree(), 1) for g in images)
    else:
        s_weights = tuple(1 for _ in range(source_ring.n))
    ext = Ring(source_ring.field,
               target.names + source_ring.names,
               Block(target.n, Grevlex(), Grevlex()),
               t_weights + s_weights)
    gens = []
    for i, g in enumerate(images):
        xi = ext.var(target.n + i)
        gi = embed(g, ext, list(range(target.n)))
        gens.append(xi - gi)
    gb = buchberger(gens)
    result_ring = source_ring
    if source_ring.weights is None and any(w != 1 for w in s_weights):
        result_ring = Ring(source_ring.field, source_ring.names,
                           source_ring.order, s_weights)
    offset_map = list(range(target.n, ext.n))
    kept = Ideal._drop_aux(gb, ext, target.n, result_ring, offset_map)
    full = Ideal(result_ring, kept)
    # present the kernel by a minimal generating set (the elimination
    # Groebner basis is usually redundant as a generating set)
    if all(g.is_homogeneous() for g in kept):
        return Ideal(result_ring, full.minimal_generators())
    return full


def radical_contains(ideal, f):
    """True iff f lies in the radical of the ideal (Rabinowitsch trick)."""
    if ideal.ring != f.ring:
        raise RingMismatch("polynomial not in the ideal's ring")
    if f.is_zero():
        return True
    ring = ideal.ring
    ext = ring.extended(("@z",), front=True,
                        order=Block(1, Grevlex(),
                                    ring.order if isinstance(
                                        ring.order, (Lex, Grevlex))
                                    else Grevlex()))
    z = ext.var(0)
    var_map = list(range(1, ext.n))
    gens = [embed(g, ext, var_map) for g in ideal.generators]
    gens.append(ext.one() - z * embed(f, ext, var_map))
    return is_member(ext.one(), gens)


def is_unmixed(ideal, a):
    """Linkage test for unmixedness in the (Gorenstein) polynomial ring:
    I is unmixed iff a : (a : I) = I for a regular sequence a in I of
    length height(I)."""
    g = ideal.height
    A = Ideal(ideal.ring, list(a))
    if A.height != g or len(A.generators) != g:
        raise BadRegularSequence(
            f"need a regular sequence of length {g} (height criterion)")
    if not ideal.contains(A):
        raise BadRegularSequence("sequence must lie inside the ideal")
    return A.colon(A.colon(ideal)) == ideal
