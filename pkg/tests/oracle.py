"""Independent test oracles.

Deliberately does NOT reuse the package's Groebner or linear-algebra
code: membership of a polynomial in a homogeneous ideal is decided by
bounded-degree exact linear algebra over the coefficient field, written
from scratch here.
"""

import itertools
from fractions import Fraction


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree exactly d."""
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


class ModP:
    def __init__(self, p):
        self.p = p

    def normalize(self, x):
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    zero = 0


class OverQ:
    @staticmethod
    def normalize(x):
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    zero = Fraction(0)


def rref_rank(rows, F):
    """Row-reduce in place; return the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != F.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F.mul(v, inv) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != F.zero:
                c = rows[i][col]
                rows[i] = [F.sub(a, F.mul(c, b))
                           for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def poly_to_dict(poly):
    """Exponent-tuple dict of a cancelkit polynomial."""
    ring = poly.ring
    return {tuple(ring.decode(m)): c for m, c in poly.terms.items()}


def _field_adapter(poly):
    kind = poly.ring.field.kind
    if kind == "prime_field":
        return ModP(poly.ring.field.p)
    return OverQ()


def homogeneous_member(f, gens):
    """Membership oracle for homogeneous f in a homogeneous ideal
    (standard grading): f is in (gens) iff f's coefficient vector lies
    in the row span of all shifts g * monomial matching f's degree."""
    F = _field_adapter(f)
    nvars = f.ring.n
    fd = poly_to_dict(f)
    if not fd:
        return True
    degs = {sum(e) for e in fd}
    assert len(degs) == 1, "oracle needs a homogeneous test polynomial"
    d = degs.pop()
    basis = monomials_of_degree(nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        gd = poly_to_dict(g)
        if not gd:
            continue
        gdegs = {sum(e) for e in gd}
        assert len(gdegs) == 1, "oracle needs homogeneous generators"
        shift = d - gdegs.pop()
        if shift < 0:
            continue
        for mult in monomials_of_degree(nvars, shift):
            row = [F.zero] * len(basis)
            for e, c in gd.items():
                tot = tuple(a + b for a, b in zip(e, mult))
                row[index[tot]] = F.normalize(c)
            rows.append(row)
    vec = [F.zero] * len(basis)
    for e, c in fd.items():
        vec[index[e]] = F.normalize(c)
    base_rank = rref_rank([r[:] for r in rows], F)
    aug_rank = rref_rank([r[:] for r in rows] + [vec], F)
    return base_rank == aug_rank


def ideals_equal_upto_degree(gens_a, gens_b, max_degree):
    """Equality oracle for homogeneous ideals, compared degree by degree
    through max_degree via span ranks."""
    sample = (gens_a + gens_b)
    if not sample:
        return True
    F = _field_adapter(sample[0])
    nvars = sample[0].ring.n
    for d in range(max_degree + 1):
        basis = monomials_of_degree(nvars, d)
        index = {m: i for i, m in enumerate(basis)}

        def span_rows(gens):
            rows = []
            for g in gens:
                gd = poly_to_dict(g)
                if not gd:
                    continue
                deg = sum(next(iter(gd)))
                shift = d - deg
                if shift < 0:
                    continue
                for mult in monomials_of_degree(nvars, shift):
                    row = [F.zero] * len(basis)
                    for e, c in gd.items():
                        tot = tuple(a + b for a, b in zip(e, mult))
                        row[index[tot]] = F.normalize(c)
                    rows.append(row)
            return rows

        rows_a = span_rows(gens_a)
        rows_b = span_rows(gens_b)
        ra = rref_rank([r[:] for r in rows_a], F)
        rb = rref_rank([r[:] for r in rows_b], F)
        rboth = rref_rank([r[:] for r in rows_a] + [r[:] for r in rows_b], F)
        if not (ra == rb == rboth):
            return False
    return True
