"""Polynomial rings and sparse exact-coefficient multivariate polynomials.

Monomials are packed into a single int, 16 bits per variable with the
first variable in the most significant field.  Multiplication is integer
addition and divisibility is a guard-bit test, which keeps Buchberger's
inner loops fast in pure Python.  Exponents are capped at 2^15 - 1.
"""

from .errors import ArityMismatch, RingMismatch
from .fields import PrimeField
from .orders import Grevlex, Lex, Block  # noqa: F401  (re-exported for callers)

FIELD_BITS = 16
EXP_MAX = (1 << (FIELD_BITS - 1)) - 1


class Ring:
    """A polynomial ring descriptor: field, named variables, order, weights."""

    def __init__(self, field, names, order=None, weights=None):
        names = tuple(names)
        if len(names) < 1:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(names):
                raise ArityMismatch("one weight per variable")
            if any(w < 1 for w in weights):
                raise ValueError("weights must be >= 1")
        self.field = field
        self.names = names
        self.n = len(names)
        self.order = order or Grevlex()
        self.weights = weights
        self._shifts = tuple(FIELD_BITS * (self.n - 1 - i) for i in range(self.n))
        self._guards = 0
        for s in self._shifts:
            self._guards |= 1 << (s + FIELD_BITS - 1)
        self._key_raw = self.order.key_fn(self.n, self.weights)
        self._key_memo = {}
        self._nkey_memo = {}
        self._dmask_memo = {}
        self._index = {name: i for i, name in enumerate(names)}

    # -- monomial helpers (packed ints) --

    def encode(self, exps):
        if len(exps) != self.n:
            raise ArityMismatch(f"expected {self.n} exponents, got {len(exps)}")
        m = 0
        for e, s in zip(exps, self._shifts):
            if not (0 <= e <= EXP_MAX):
                raise ValueError(f"exponent {e} out of range")
            m |= e << s
        return m

    def decode(self, m):
        mask = (1 << FIELD_BITS) - 1
        return tuple((m >> s) & mask for s in self._shifts)

    def mono_mul(self, a, b):
        return a + b

    def mono_divides(self, a, b):
        """True iff monomial a divides monomial b."""
        return ((b | self._guards) - a) & self._guards == self._guards

    def mono_div(self, b, a):
        return b - a

    def mono_lcm(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def mono_deg(self, m):
        return sum(self.decode(m))

    def mono_wdeg(self, m):
        exps = self.decode(m)
        if self.weights is None:
            return sum(exps)
        return sum(e * w for e, w in zip(exps, self.weights))

    def key(self, m):
        k = self._key_memo.get(m)
        if k is None:
            k = tuple(self._key_raw(self.decode(m)))
            self._key_memo[m] = k
        return k

    # nkey packs the negated key components into one int (40 bits per
    # component, offset so each is nonnegative): integer comparison is
    # then order-isomorphic to tuple comparison, and min-heaps pop the
    # largest monomial first.
    _NKEY_OFFSET = 1 << 39
    _NKEY_BITS = 40

    def nkey(self, m):
        """Single-int negated order key (heaps pop largest monomial first)."""
        k = self._nkey_memo.get(m)
        if k is None:
            off = self._NKEY_OFFSET
            k = 0
            for v in self.key(m):
                k = (k << self._NKEY_BITS) | (off - v)
            self._nkey_memo[m] = k
        return k

    def dmask(self, m):
        """Divisibility prefilter mask: 4 bits per variable, set when the
        exponent reaches 1, 2, 4, 8.  a | b requires
        dmask(a) & ~dmask(b) == 0."""
        k = self._dmask_memo.get(m)
        if k is None:
            k = 0
            bit = 1
            mask = (1 << FIELD_BITS) - 1
            for s in self._shifts:
                e = (m >> s) & mask
                for t in (1, 2, 4, 8):
                    if e >= t:
                        k |= bit
                    bit <<= 1
            self._dmask_memo[m] = k
        return k

    def compare(self, e1, e2):
        """Compare exponent tuples under this ring's order."""
        from .orders import compare
        return compare(e1, e2, self.order, self.weights)

    # -- polynomial constructors --

    def zero(self):
        return Polynomial(self, {})

    def constant(self, c):
        c = self.field.normalize(c)
        return Polynomial(self, {} if c == self.field.zero else {0: c})

    def one(self):
        return self.constant(self.field.one)

    def var(self, i):
        if isinstance(i, str):
            i = self._index[i]
        return Polynomial(self, {self.encode(tuple(
            1 if j == i else 0 for j in range(self.n))): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exps, coeff=None):
        c = self.field.normalize(coeff if coeff is not None else self.field.one)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {self.encode(tuple(exps)): c})

    def from_terms(self, pairs):
        """Build a polynomial from (exponent-tuple, coeff) pairs."""
        terms = {}
        zero = self.field.zero
        for exps, c in pairs:
            m = self.encode(tuple(exps))
            c = self.field.add(terms.get(m, zero), self.field.normalize(c))
            if c == zero:
                terms.pop(m, None)
            else:
                terms[m] = c
        return Polynomial(self, terms)

    def poly(self, text):
        """Parse polynomial text syntax (delegates to the script parser)."""
        from .script import parse_polynomial
        return parse_polynomial(self, text)

    # -- ring relations --

    def variant(self, order=None):
        """Same variables/field, different order."""
        return Ring(self.field, self.names, order or self.order, self.weights)

    def extended(self, extra_names, *, front=True, order=None, extra_weights=None):
        """New ring with extra variables added (at the front by default)."""
        if extra_weights is None and self.weights is not None:
            extra_weights = tuple(1 for _ in extra_names)
        if self.weights is None and extra_weights is not None:
            base_weights = tuple(1 for _ in self.names)
        else:
            base_weights = self.weights
        if front:
            names = tuple(extra_names) + self.names
            weights = (None if base_weights is None
                       else tuple(extra_weights) + base_weights)
        else:
            names = self.names + tuple(extra_names)
            weights = (None if base_weights is None
                       else base_weights + tuple(extra_weights))
        return Ring(self.field, names, order or self.order, weights)

    def describe(self):
        parts = [self.field.describe(), ",".join(self.names),
                 self.order.describe()]
        if self.weights is not None:
            parts.append(",".join(str(w) for w in self.weights))
        return "|".join(parts)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.field == other.field
                and self.names == other.names and self.order == other.order
                and self.weights == other.weights)

    def __hash__(self):
        return hash((self.field, self.names, self.order, self.weights))

    def __repr__(self):
        return f"Ring({self.describe()})"


class Polynomial:
    """Immutable sparse polynomial: dict of packed monomial -> coefficient."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._sorted = None

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def is_zero(self):
        return not self.terms

    def sorted_monomials(self):
        """Packed monomials in descending ring order."""
        if self._sorted is None:
            self._sorted = sorted(self.terms, key=self.ring.key, reverse=True)
        return self._sorted

    def lm(self):
        """Leading monomial (packed); poly must be nonzero."""
        return self.sorted_monomials()[0]

    def lc(self):
        return self.terms[self.lm()]

    def degree(self):
        if not self.terms:
            return -1
        return max(self.ring.mono_deg(m) for m in self.terms)

    def wdegree(self):
        if not self.terms:
            return -1
        return max(self.ring.mono_wdeg(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {self.ring.mono_wdeg(m) for m in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        self._check(other)
        field = self.ring.field
        zero = field.zero
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = field.add(terms.get(m, zero), c)
            if s == zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ring, terms)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        field = self.ring.field
        zero = field.zero
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms = {}
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = m1 + m2
                s = field.add(terms.get(m, zero), field.mul(c1, c2))
                if s == zero:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_term(self, m, c):
        """Multiply by the single term c*x^m (m packed, c normalized)."""
        field = self.ring.field
        return Polynomial(self.ring,
                          {mm + m: field.mul(cc, c) for mm, cc in self.terms.items()})

    def scale(self, c):
        field = self.ring.field
        c = field.normalize(c)
        if c == field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(cc, c) for m, cc in self.terms.items()})

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"<{render(self)}>"


def render(f):
    """Canonical text form: terms descending, `^` powers, explicit `*`."""
    if f.is_zero():
        return "0"
    ring = f.ring
    one = ring.field.one
    pieces = []
    for m in f.sorted_monomials():
        c = f.terms[m]
        exps = ring.decode(m)
        factors = []
        for name, e in zip(ring.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        cs = ring.field.to_str(c)
        if not factors:
            body = cs
        elif c == one:
            body = "*".join(factors)
        elif cs == "-1":
            body = "-" + "*".join(factors)
        else:
            body = cs + "*" + "*".join(factors)
        pieces.append(body)
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += "-" + piece[1:]
        else:
            out += "+" + piece
    return out


def apply_map(images, f):
    """Substitute images[i] for variable i of f; images share a target ring.

    Realizes the ring homomorphism k[x_1..x_n] -> T determined by the
    images; the result is fully expanded in the target ring.
    """
    if len(images) != f.ring.n:
        raise ArityMismatch(f"need {f.ring.n} images, got {len(images)}")
    target = images[0].ring
    for g in images:
        if g.ring != target:
            raise RingMismatch("images must share a common target ring")
    power_cache = [dict() for _ in images]

    def image_power(i, e):
        cache = power_cache[i]
        if e not in cache:
            if e == 0:
                cache[e] = target.one()
            else:
                cache[e] = image_power(i, e - 1) * images[i]
        return cache[e]

    result = target.zero()
    for m, c in f.terms.items():
        term = target.constant(c)
        for i, e in enumerate(f.ring.decode(m)):
            if e:
                term = term * image_power(i, e)
        result = result + term
    return result


def embed(f, target, var_map):
    """Re-express f in `target`, sending variable i to variable var_map[i].

    Requires matching fields.  Used for ring extensions and for restricting
    an eliminated polynomial to a subring (the inverse direction checks that
    only mapped variables occur).
    """
    if f.ring.field != target.field:
        raise RingMismatch("fields differ")
    terms = {}
    for m, c in f.terms.items():
        exps = f.ring.decode(m)
        new = [0] * target.n
        for i, e in enumerate(exps):
            if e:
                new[var_map[i]] = e
        terms[target.encode(tuple(new))] = c
    return Polynomial(target, terms)


def restrict(f, target, var_positions):
    """Map f into the subring `target` whose variable j sits at source
    position var_positions[j]; f must only involve those positions."""
    keep = set(var_positions)
    for m in f.terms:
        exps = f.ring.decode(m)
        for i, e in enumerate(exps):
            if e and i not in keep:
                raise ArityMismatch(
                    f"polynomial involves unmapped variable {f.ring.names[i]}")
    inv = {src: j for j, src in enumerate(var_positions)}
    terms = {}
    for m, c in f.terms.items():
        exps = f.ring.decode(m)
        new = [0] * target.n
        for i, e in enumerate(exps):
            if e:
                new[inv[i]] = e
        terms[target.encode(tuple(new))] = c
    return Polynomial(target, terms)
