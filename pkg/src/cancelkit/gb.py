"""The Groebner engine: multivariate division, Buchberger with the
coprimality and chain criteria (Gebauer-Moeller pair updates), reduced
bases, and ideal membership.

Everything here is deterministic: pair selection is by minimal lcm degree
with ties broken by the lcm's exponent key and then the pair indices, and
division always uses the first applicable divisor in list order.
"""

import heapq

from . import cache as _cache
from .errors import ResourceExceeded, RingMismatch
from .ring import Polynomial


class EngineLimits:
    """Resource ceilings; hitting one raises ResourceExceeded, never
    silently truncates."""

    def __init__(self, pair_cap=10**6, degree_cap=60):
        self.pair_cap = pair_cap
        self.degree_cap = degree_cap


default_limits = EngineLimits()


class GroebnerBasis:
    def __init__(self, ring, generators, reduced=True):
        self.ring = ring
        self.generators = list(generators)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.generators]})"


def _common_ring(polys):
    ring = None
    for f in polys:
        if ring is None:
            ring = f.ring
        elif f.ring != ring:
            raise RingMismatch("polynomials live in different rings")
    return ring


def normal_form(f, G):
    """Remainder of f on division by the list G (not necessarily a GB).

    No term of the result is divisible by any leading monomial of G, and
    f - result lies in (G).  Deterministic: the first applicable divisor
    in list order is always used.
    """
    ring = _common_ring([f] + list(G))
    field = ring.field
    divisors = []
    for g in G:
        if g.is_zero():
            continue
        lm = g.lm()
        inv_lc = field.inv(g.lc())
        tail = tuple((m, c) for m, c in g.terms.items() if m != lm)
        divisors.append((lm, ring.dmask(lm), inv_lc, tail))
    if not divisors or f.is_zero():
        return f

    nkey = ring.nkey
    dmask = ring.dmask
    guards = ring._guards
    p = field.p if field.kind == "prime_field" else None
    zero = field.zero
    sub, mul = field.sub, field.mul
    work = dict(f.terms)
    heap = [(nkey(m), m) for m in work]
    heapq.heapify(heap)
    push = heapq.heappush
    result = {}
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.pop(m, None)
        if c is None:
            continue
        bg = m | guards
        nmm = ~dmask(m)
        for lm, dm, inv_lc, tail in divisors:
            if dm & nmm == 0 and (bg - lm) & guards == guards:
                q = m - lm
                if p is not None:
                    factor = c * inv_lc % p
                    for mt, ct in tail:
                        mm = mt + q
                        old = work.get(mm)
                        if old is None:
                            work[mm] = (-factor * ct) % p
                            push(heap, (nkey(mm), mm))
                        else:
                            val = (old - factor * ct) % p
                            if val:
                                work[mm] = val
                            else:
                                del work[mm]
                else:
                    factor = mul(c, inv_lc)
                    for mt, ct in tail:
                        mm = mt + q
                        old = work.get(mm)
                        val = sub(old if old is not None else zero,
                                  mul(factor, ct))
                        if val == zero:
                            work.pop(mm, None)
                        else:
                            work[mm] = val
                            if old is None:
                                push(heap, (nkey(mm), mm))
                break
        else:
            result[m] = c
    return Polynomial(ring, result)


def _top_reduce(f, divisors, ring):
    """Reduce only leading terms (tails stay); enough for basis building
    and zero-testing, and much cheaper than a full normal form.

    divisors: list of (lm, dmask, inv_lc, tail) tuples, tail excluding
    the lead.
    """
    field = ring.field
    nkey = ring.nkey
    dmask = ring.dmask
    guards = ring._guards
    p = field.p if field.kind == "prime_field" else None
    zero = field.zero
    sub, mul = field.sub, field.mul
    work = dict(f.terms)
    heap = [(nkey(m), m) for m in work]
    heapq.heapify(heap)
    push = heapq.heappush
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.get(m)
        if c is None:
            continue
        bg = m | guards
        nmm = ~dmask(m)
        for lm, dm, inv_lc, tail in divisors:
            if dm & nmm == 0 and (bg - lm) & guards == guards:
                break
        else:
            return Polynomial(ring, work)
        del work[m]
        q = m - lm
        if p is not None:
            factor = c * inv_lc % p
            for mt, ct in tail:
                mm = mt + q
                old = work.get(mm)
                if old is None:
                    work[mm] = (-factor * ct) % p
                    push(heap, (nkey(mm), mm))
                else:
                    val = (old - factor * ct) % p
                    if val:
                        work[mm] = val
                    else:
                        del work[mm]
        else:
            factor = mul(c, inv_lc)
            for mt, ct in tail:
                mm = mt + q
                old = work.get(mm)
                val = sub(old if old is not None else zero,
                          mul(factor, ct))
                if val == zero:
                    work.pop(mm, None)
                else:
                    work[mm] = val
                    if old is None:
                        push(heap, (nkey(mm), mm))
    return Polynomial(ring, {})


def _spoly(f, g, ring):
    field = ring.field
    lmf, lmg = f.lm(), g.lm()
    lcm = ring.mono_lcm(lmf, lmg)
    a = f.mul_term(lcm - lmf, field.inv(f.lc()))
    b = g.mul_term(lcm - lmg, field.inv(g.lc()))
    return a - b


def _gm_update(G, lms, pairs, h_index, ring):
    """Gebauer-Moeller pair update when basis element h_index is added.

    Applies the chain criterion (drop pairs whose lcm is properly covered
    by the new leading monomial) and the coprimality criterion.
    """
    t = h_index
    lm_t = lms[t]
    divides = ring.mono_divides
    lcm = ring.mono_lcm

    # chain criterion on existing pairs
    survivors = set()
    for (i, j) in pairs:
        lij = lcm(lms[i], lms[j])
        if (divides(lm_t, lij)
                and lij != lcm(lms[i], lm_t) and lij != lcm(lms[j], lm_t)):
            continue
        survivors.add((i, j))

    # organize candidate new pairs by their lcm
    by_lcm = {}
    for i in range(t):
        if lms[i] is None:
            continue
        by_lcm.setdefault(lcm(lms[i], lm_t), []).append(i)
    # keep only lcm-minimal classes, one representative each
    new_pairs = []
    minimal = []
    for L in sorted(by_lcm, key=ring.key):
        if any(divides(Lm, L) for Lm in minimal):
            continue
        minimal.append(L)
        # coprimality: if any member of the class has coprime leading terms,
        # the whole class can be skipped
        if any(lcm(lms[i], lm_t) == lms[i] + lm_t for i in by_lcm[L]):
            continue
        new_pairs.append((min(by_lcm[L]), t))
    return survivors | set(new_pairs)


def buchberger(gens, limits=None, reduced=True):
    """Groebner basis of the ideal generated by gens; reduced by default.

    With reduced=False the basis is only minimalized (no leading monomial
    divides another), tails are left alone, and the cache is bypassed --
    cheaper, and sufficient when only the leading-term ideal or a
    generating set is needed.

    Zero generators are filtered; pair selection uses the normal strategy
    (minimal lcm degree, ties by lcm key then indices).  Consults the
    active GB cache when one is installed.
    """
    gens = list(gens)
    ring = _common_ring(gens)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, [])
    limits = limits or default_limits

    cache = _cache.active_cache.get() if reduced else None
    if cache is not None:
        hit = cache.get(ring, gens)
        if hit is not None:
            return GroebnerBasis(ring, hit)

    field = ring.field
    G = []
    lms = []
    div = []
    pairs = set()

    def add(g):
        G.append(g)
        lm = g.lm()
        lms.append(lm)
        div.append((lm, ring.dmask(lm), field.inv(g.lc()),
                    tuple((m, c) for m, c in g.terms.items() if m != lm)))

    for g in sorted(gens, key=lambda f: ring.key(f.lm())):
        add(g.monic())
        pairs = _gm_update(G, lms, pairs, len(G) - 1, ring)

    heap = []
    in_heap = set()
    # normal selection strategy: smallest lcm degree first -- weighted
    # degree when the ring is weighted, so homogeneous inputs are
    # processed degree by degree
    pair_deg = ring.mono_wdeg if ring.weights is not None else ring.mono_deg

    def push_pairs():
        for (i, j) in pairs:
            if (i, j) not in in_heap:
                L = ring.mono_lcm(lms[i], lms[j])
                heapq.heappush(heap, (pair_deg(L), ring.key(L), i, j))
                in_heap.add((i, j))

    push_pairs()
    processed = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        in_heap.discard((i, j))
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        processed += 1
        if processed > limits.pair_cap:
            raise ResourceExceeded(f"pair ceiling {limits.pair_cap} exceeded")
        r = _top_reduce(_spoly(G[i], G[j], ring), div, ring)
        if r.is_zero():
            continue
        if r.degree() > limits.degree_cap:
            raise ResourceExceeded(
                f"degree ceiling {limits.degree_cap} exceeded "
                f"(element of degree {r.degree()})")
        add(r.monic())
        pairs = _gm_update(G, lms, pairs, len(G) - 1, ring)
        push_pairs()

    if not reduced:
        return GroebnerBasis(ring, _minimalize(G, ring), reduced=False)
    basis = _interreduce(G, ring)
    result = GroebnerBasis(ring, basis)
    if cache is not None:
        cache.put(ring, gens, basis)
    return result


def _minimalize(G, ring):
    """Drop basis elements whose leading monomial is divisible by
    another's; sorted by leading monomial."""
    divides = ring.mono_divides
    minimal = []
    for g in sorted(G, key=lambda f: ring.key(f.lm())):
        if not any(divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    return minimal


def _interreduce(G, ring):
    """Minimalize, then tail-reduce, yielding the unique reduced basis."""
    minimal = _minimalize(G, ring)
    reduced = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, rest)
        if not r.is_zero():
            reduced.append(r.monic())
    return sorted(reduced, key=lambda f: ring.key(f.lm()))


def is_member(f, gens, limits=None):
    """True iff f lies in the ideal generated by gens."""
    if isinstance(gens, GroebnerBasis):
        basis = gens.generators
    else:
        basis = buchberger(gens, limits).generators
    if f.is_zero():
        return True
    if not basis:
        return False
    return normal_form(f, basis).is_zero()
