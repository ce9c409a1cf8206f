"""Rees-algebra presentations, fiber cones, and syzygetic tests.

For I = (a_1..a_m) in R = k[x], the presentation ideal Q of the Rees
algebra R[It] is the kernel of S = R[T_1..T_m] -> R[It], T_i -> a_i t,
computed as the saturation of the symmetric-algebra relations (one
linear form per syzygy of the a_i) by a nonzerodivisor of I.  Q is
homogeneous in the T-grading (deg T_i = 1, deg x_j = 0), so its graded
pieces Q_d can be read off any Groebner basis.  The fiber-cone ideal is
the image of Q in k[T] = S/(x)S; the analytic spread is the dimension
of the fiber cone.
"""

import itertools
import math
from fractions import Fraction

from .errors import (ArityMismatch, BadRegularSequence, NotGraded,
                     ResourceExceeded, ZeroColon)
from .gb import buchberger, normal_form
from .ideals import Ideal, kernel_of_map
from .linalg import echelonize
from .modules import syzygy_columns
from .ring import FIELD_BITS, Polynomial, Ring, apply_map, embed


def t_degree(poly, base_count):
    """T-degree of a T-homogeneous polynomial in R[T]; NotGraded if the
    terms disagree.  base_count is the number of leading x-variables."""
    ring = poly.ring
    degs = {sum(ring.decode(m)[base_count:]) for m in poly.terms}
    if len(degs) > 1:
        raise NotGraded(f"{poly} is not T-homogeneous")
    return degs.pop() if degs else 0


class ReesPresentation:
    """Presentation data of the Rees algebra of an ideal."""

    def __init__(self, base, q_factory, s_ring, base_count, fiber_ideal,
                 analytic_spread):
        self.base = base
        self._q_factory = q_factory
        self._Q = None
        self.s_ring = s_ring
        self.base_count = base_count
        self.fiber_ideal = fiber_ideal
        self.analytic_spread = analytic_spread
        self.analytic_deviation = analytic_spread - base.height

    @property
    def Q(self):
        # computed on demand: the fiber and spread are often all a caller
        # needs, and expanding Q's generators can be much more expensive
        if self._Q is None:
            self._Q = self._q_factory()
        return self._Q

    def graded_piece(self, d):
        return graded_piece(self.Q, d, self.base_count)

    def __repr__(self):
        return (f"ReesPresentation(l={self.analytic_spread}, "
                f"ad={self.analytic_deviation})")


class SyzygeticReport:
    """Whether every degree-2 presentation relation comes from the linear
    ones: Q_2 contained in S_1 Q_1."""

    def __init__(self, q2_generators, offenders):
        self.q2_generators = tuple(q2_generators)
        self.offenders = tuple(offenders)
        self.is_syzygetic = not self.offenders

    def __repr__(self):
        return (f"SyzygeticReport(is_syzygetic={self.is_syzygetic}, "
                f"offenders={len(self.offenders)})")


def rees_presentation(ideal):
    """Presentation ideal Q, fiber-cone ideal, and analytic spread."""
    ring = ideal.ring
    gens = ideal.generators
    if not gens:
        raise ZeroColon("the zero ideal has no Rees presentation")
    m = len(gens)
    t_names = tuple(f"T{i + 1}" for i in range(m))
    if set(t_names) & set(ring.names):
        raise ArityMismatch(
            "base ring variable names collide with T1..Tm")
    # Weight T_i = deg a_i + 1 when every generator is homogeneous, so Q
    # (which is bihomogeneous for the x-grading and the T-count) stays
    # homogeneous and the Groebner computations are degree-bounded.
    weights = None
    if all(a.is_homogeneous() for a in gens):
        base_w = ring.weights or tuple(1 for _ in range(ring.n))
        weights = (tuple(base_w)
                   + tuple(a.wdegree() + 1 for a in gens))
    s_ring = Ring(ring.field, ring.names + t_names, weights=weights)
    var_map = list(range(ring.n))
    # Presentation of the symmetric algebra: one linear form sum c_i T_i
    # per syzygy (c_1..c_m) of the generators.
    linear = []
    for col in _trim_columns(syzygy_columns([[a] for a in gens]), ring):
        f = s_ring.zero()
        for i, c in enumerate(col):
            f = f + embed(c, s_ring, var_map) * s_ring.var(ring.n + i)
        if not f.is_zero():
            linear.append(f)
    # Inverting any nonzerodivisor a in I turns I into the unit ideal, so
    # Sym(I) and the Rees algebra agree there; the presentation ideal Q is
    # therefore the a-torsion of L, i.e. the saturation L : a^infinity.
    pivot = min(gens, key=lambda a: (a.wdegree(), len(a.terms)))
    pivot_s = embed(pivot, s_ring, var_map)
    t_ring = Ring(ring.field, t_names,
                  weights=tuple(a.wdegree() + 1 for a in gens)
                  if weights is not None else None)
    fiber = None
    if weights is not None:
        fiber = _fiber_by_certificates(ideal, t_ring)
    if fiber is not None:
        def q_factory():
            return _saturate_graded(s_ring, linear, pivot_s, ring.n,
                                    t_ring)[0]()
    elif weights is not None:
        q_factory, fiber_gens = _saturate_graded(s_ring, linear, pivot_s,
                                                 ring.n, t_ring)
    else:
        Q = Ideal(s_ring, linear).saturate(Ideal(s_ring, [pivot_s]))
        q_factory = lambda: Q  # noqa: E731
        # The fiber-cone ideal (Q + (x)) cap k[T] is the image of Q under
        # x -> 0, generated by the images of Q's generators.
        fiber_gens = [_kill_base_vars(q, ring.n, t_ring)
                      for q in Q.generators]
    if fiber is None:
        fiber = Ideal(t_ring, [g for g in fiber_gens if not g.is_zero()])
    spread = fiber.dim
    return ReesPresentation(ideal, q_factory, s_ring, ring.n, fiber, spread)


def _saturate_graded(s_ring, linear, pivot, base_count, t_ring):
    """Saturation L : pivot^infinity for homogeneous data, via one basis.

    Adjoin a last variable u of the pivot's weight together with the
    relation u - pivot.  Under (weighted) grevlex a homogeneous basis
    element with leading monomial divisible by u is divisible by u
    throughout, so dividing every basis element of (L, u - pivot) by its
    largest u-power yields a basis of the saturation by u; substituting
    u -> pivot then lands generators of Q = L : pivot^infinity back in
    R[T], and setting x -> 0, u -> 0 gives the fiber-cone generators
    directly.  One Groebner run replaces the iterated-colon saturation.
    """
    sat_ring = Ring(s_ring.field, s_ring.names + ("@u",),
                    weights=s_ring.weights + (pivot.wdegree(),))
    lift = list(range(s_ring.n))
    sat_gens = [embed(f, sat_ring, lift) for f in linear]
    sat_gens.append(sat_ring.var(s_ring.n) - embed(pivot, sat_ring, lift))
    basis = buchberger(sat_gens, reduced=False).generators

    u_mask = (1 << FIELD_BITS) - 1
    stripped = []
    for g in basis:
        e = min(m & u_mask for m in g.terms)
        stripped.append(g if e == 0 else
                        Polynomial(sat_ring, {m - e: c
                                              for m, c in g.terms.items()}))

    fiber_gens = []
    for g in stripped:
        terms = {}
        for m, c in g.terms.items():
            exps = sat_ring.decode(m)
            if m & u_mask or any(exps[:base_count]):
                continue
            terms[t_ring.encode(exps[base_count:-1])] = c
        fiber_gens.append(Polynomial(t_ring, terms))

    def q_factory():
        images = [s_ring.var(i) for i in range(s_ring.n)] + [pivot]
        q_gens = []
        seen = set()
        for g in stripped:
            q = apply_map(images, g)
            if q.is_zero():
                continue
            key = tuple(sorted(q.monic().terms.items()))
            if key not in seen:
                seen.add(key)
                q_gens.append(q)
        return Ideal(s_ring, q_gens)

    return q_factory, fiber_gens


def _fiber_by_certificates(ideal, t_ring):
    """Fiber-cone ideal computed directly, without the Rees presentation,
    when a finite sandwich certificate closes; None when it does not.

    Write F = sum of I^d/mI^d for the fiber cone of I = (a_1..a_m).

    Lower bound: a T-form q of degree d lies in the fiber ideal iff
    q(a_1..a_m) lies in m*I^d -- exact linear algebra over a Groebner
    basis of m*I^d in the base ring.

    Upper bound: for a positive weight vector w on the base variables,
    v_w is a valuation, so sending the class of g in F_d to the w-initial
    part of g when v_w(g) = d * min_i v_w(a_i) (to 0 otherwise) is a
    well-defined graded ring homomorphism out of F: multiplying by the
    maximal ideal strictly raises v_w, and initial parts multiply.  The
    fiber ideal is therefore contained in the kernel K_w of
    T_i -> initial(a_i) (or 0 for non-attaining generators), for every w.

    When the ideal generated by the exact low-degree pieces already
    contains the intersection of several K_w, the sandwich closes and the
    fiber ideal equals that intersection.  Equigenerated ideals skip the
    sandwich: m*I^d lives in degrees above d*deg, so F is isomorphic to
    the subalgebra k[a_1..a_m] and the fiber ideal is the full
    algebraic-relations kernel.
    """
    gens = ideal.generators
    ring = ideal.ring
    try:
        degs = {g.wdegree() for g in gens}
        if len(degs) == 1:
            d = degs.pop()
            src = Ring(ring.field, t_ring.names, weights=(d,) * len(gens))
            K = kernel_of_map(src, list(gens))
            return Ideal(t_ring, [Polynomial(t_ring, dict(g.terms))
                                  for g in K.generators])
        upper = None
        for w in _equalizing_weights(ideal):
            Kw = _valuation_kernel(ideal, w, t_ring)
            upper = Kw if upper is None else upper.intersect(Kw)
        if upper is None:
            return None
        if not upper.generators:
            return Ideal(t_ring, [])
        dmax = max(max(sum(t_ring.decode(mono)) for mono in g.terms)
                   for g in upper.generators)
        lower = Ideal(t_ring, _fiber_pieces(ideal, t_ring, dmax))
        if all(lower.contains_poly(g) for g in upper.generators):
            return upper
    except ResourceExceeded:
        return None
    return None


def _fiber_pieces(ideal, t_ring, max_t_degree):
    """Exact degree-d pieces of the fiber-cone ideal for d <= max_t_degree:
    kernels of the evaluation maps q -> q(a_1..a_m) mod m*I^d."""
    ring = ideal.ring
    field = ring.field
    gens = ideal.generators
    m = len(gens)
    pieces = []
    for d in range(1, max_t_degree + 1):
        alphas = list(itertools.combinations_with_replacement(range(m), d))
        prods = []
        for alpha in alphas:
            p = gens[alpha[0]]
            for i in alpha[1:]:
                p = p * gens[i]
            prods.append(p)
        mid = [ring.var(j) * p for j in range(ring.n) for p in prods]
        basis = buchberger(mid, reduced=False).generators
        # products of distinct weighted degrees cannot combine into a
        # relation, so solve one small system per degree class
        groups = {}
        for alpha, p in zip(alphas, prods):
            groups.setdefault(p.wdegree(), []).append((alpha, p))
        for group in groups.values():
            idx = {}
            nfs = []
            for _alpha, p in group:
                nf = normal_form(p, basis)
                for mono in nf.terms:
                    if mono not in idx:
                        idx[mono] = len(idx)
                nfs.append(nf)
            ncols = len(idx)
            rows = []
            for r, nf in enumerate(nfs):
                row = [field.zero] * (ncols + len(group))
                for mono, c in nf.terms.items():
                    row[idx[mono]] = c
                row[ncols + r] = field.one
                rows.append(row)
            echelonize(rows, field)
            for row in rows:
                if any(x != field.zero for x in row[:ncols]):
                    continue
                terms = {}
                for r, c in enumerate(row[ncols:]):
                    if c != field.zero:
                        exps = [0] * m
                        for i in group[r][0]:
                            exps[i] += 1
                        terms[t_ring.encode(tuple(exps))] = c
                if terms:
                    pieces.append(Polynomial(t_ring, terms))
    return pieces


def _equalizing_weights(ideal, combo_budget=20000):
    """Positive integer weight vectors under which all but one generator
    attains the common minimal weighted value, found by solving the
    equalization system for each choice of candidate minimal monomials."""
    ring = ideal.ring
    gens = ideal.generators
    m = len(gens)
    if m < 2:
        return []
    supports = [[ring.decode(mono) for mono in g.terms] for g in gens]
    found = []
    for subset in itertools.combinations(range(m), m - 1):
        size = 1
        for i in subset:
            size *= len(supports[i])
        if size > combo_budget:
            continue
        hit = None
        for combo in itertools.product(*[supports[i] for i in subset]):
            base = combo[-1]
            rows = [[Fraction(a - b) for a, b in zip(e, base)]
                    for e in combo[:-1]]
            for w in _positive_nullspace(rows, ring.n):
                vals = [min(sum(wi * ei for wi, ei in zip(w, e))
                            for e in sup) for sup in supports]
                tgt = [sum(wi * ei for wi, ei in zip(w, e)) for e in combo]
                low = min(vals)
                if (all(vals[i] == low for i in subset)
                        and all(t == low for t in tgt)):
                    hit = w
                    break
            if hit:
                break
        if hit and hit not in found:
            found.append(hit)
    return found


def _positive_nullspace(rows, n):
    """Some strictly positive integer vectors (coprime entries) in the
    rational nullspace of the given rows; possibly none."""
    M = [r[:] for r in rows]
    piv = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for pr, pc in enumerate(piv):
            v[pc] = -M[pr][fc]
        basis.append(v)
    cands = []
    for v in basis:
        cands.append(v)
        cands.append([-x for x in v])
    if len(basis) >= 2:
        for l1, l2 in ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3),
                       (3, 2), (1, 5), (5, 1), (1, -1), (-1, 1), (2, -1),
                       (-1, 2), (3, -1), (-1, 3)):
            cands.append([l1 * a + l2 * b
                          for a, b in zip(basis[0], basis[1])])
    out = []
    for v in cands:
        if all(x > 0 for x in v):
            den = math.lcm(*[x.denominator for x in v])
            wi = tuple(int(x * den) for x in v)
            g = math.gcd(*wi)
            wi = tuple(x // g for x in wi)
            if wi not in out:
                out.append(wi)
    return out


def _valuation_kernel(ideal, w, t_ring):
    """Kernel of k[T] -> R sending T_i to the w-initial form of a_i when
    a_i attains the minimal w-value among the generators, to 0 otherwise;
    always contains the fiber-cone ideal."""
    ring = ideal.ring
    field = ring.field
    gens = ideal.generators
    wring = Ring(field, ring.names, weights=w)
    vals = []
    forms = []
    for g in gens:
        per = {mono: sum(wi * ei for wi, ei in zip(w, wring.decode(mono)))
               for mono in g.terms}
        low = min(per.values())
        vals.append(low)
        forms.append(Polynomial(wring, {mono: c for mono, c in g.terms.items()
                                        if per[mono] == low}))
    low = min(vals)
    attain = [i for i, v in enumerate(vals) if v == low]
    kernel_gens = [t_ring.var(i) for i, v in enumerate(vals) if v > low]
    if len(attain) >= 2:
        src = Ring(field, tuple(t_ring.names[i] for i in attain),
                   weights=(low,) * len(attain))
        K = kernel_of_map(src, [forms[i] for i in attain])
        kernel_gens += [embed(g, t_ring, attain) for g in K.generators]
    return Ideal(t_ring, kernel_gens)


def _trim_columns(cols, ring):
    """Drop syzygy columns lying in the module of the ones kept so far
    (in increasing degree); Groebner syzygy generators are usually far
    from minimal and redundancy is expensive downstream."""
    from .modules import ModVec, module_buchberger, module_member

    def col_degree(col):
        return max((f.wdegree() for f in col if not f.is_zero()), default=0)

    kept = []
    basis = None
    for col in sorted(cols, key=col_degree):
        vec = ModVec.from_polys(list(col))
        if basis is not None and module_member(vec, basis):
            continue
        kept.append(col)
        basis = module_buchberger(
            [ModVec.from_polys(list(c)) for c in kept])
    return kept


def _kill_base_vars(poly, base_count, t_ring):
    """Image of a polynomial of R[T] under x_j -> 0, landing in k[T]."""
    ring = poly.ring
    terms = {}
    for m, c in poly.terms.items():
        exps = ring.decode(m)
        if any(exps[:base_count]):
            continue
        terms[t_ring.encode(exps[base_count:])] = c
    return Polynomial(t_ring, terms)


def graded_piece(Q, d, base_count=0):
    """Generators of T-degree exactly d drawn from the reduced GB of the
    T-homogeneous ideal Q."""
    if d < 0:
        raise ArityMismatch("graded piece of negative degree")
    return [g for g in Q.groebner().generators
            if t_degree(g, base_count) == d]


def is_syzygetic(ideal):
    """Tests whether the degree-2 presentation relations of the Rees
    algebra lie in the ideal generated by the linear relations."""
    pres = rees_presentation(ideal)
    q1 = pres.graded_piece(1)
    q2 = pres.graded_piece(2)
    linear = Ideal(pres.s_ring, q1)
    offenders = [q for q in q2 if not linear.contains_poly(q)]
    return SyzygeticReport(q2, offenders)


def lemma_prefix_relations_check(ideal, reg_prefix):
    """For a regular-sequence prefix a_1..a_k of the generator list, every
    T-degree-2 element of Q cap (T_1..T_k) lies in the ideal generated by
    the linear relations Q_1."""
    prefix = tuple(reg_prefix)
    k = len(prefix)
    if ideal.generators[:k] != prefix:
        raise BadRegularSequence(
            "the sequence must be a prefix of the ideal's generator list")
    A = Ideal(ideal.ring, list(prefix))
    if A.height != k:
        raise BadRegularSequence(
            f"prefix has height {A.height}, expected {k}")
    pres = rees_presentation(ideal)
    s_ring = pres.s_ring
    base = pres.base_count
    t_block = Ideal(s_ring, [s_ring.var(base + i) for i in range(k)])
    inter = pres.Q.intersect(t_block)
    linear = Ideal(s_ring, pres.graded_piece(1))
    for g in inter.groebner().generators:
        if t_degree(g, base) == 2 and not linear.contains_poly(g):
            return False
    return True
