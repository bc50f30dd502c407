"""Exact arithmetic on ordinal notations below Gamma_0.

A notation is a finite sum of binary Veblen terms phi(a, b) kept in normal
form: the term list is non-increasing in value, and no argument b is itself
a single term phi(c, d) with c > a (such a b is a fixed point of phi_a and
the outer phi would collapse onto it).  phi(0, b) denotes w^b, so finite
ordinals are sums of phi(0, 0).  Every operation returns normal forms and
every notation below Gamma_0 has exactly one representation.

Godel coding (bit-exact, needed to reproduce the catalog numbers):

    pair(x, y)     = (x + y)(x + y + 1)/2 + y          (Cantor pairing)
    code(A)        = codeList(A.terms)
    codeList([])   = 0
    codeList(h:t)  = pair(codeTerm(h), codeList(t)) + 1
    codeTerm(phi(a, b)) = pair(code(a), code(b))

so code(0) = 0, code(1) = 1, code(eps0) = 2, code(w) = 4.  godel_decode
rejects numbers whose structural decode is not in normal form; the least
such number is 6 (it decodes to the increasing term list [1, eps0]).
"""

from __future__ import annotations

from math import isqrt

from .errors import InvalidCodeError, UndefinedError


class VeblenTerm:
    """One summand phi(index, argument)."""

    __slots__ = ("index", "argument", "_hash")

    def __init__(self, index, argument):
        self.index = index
        self.argument = argument
        self._hash = hash(("veb", index, argument))

    def __eq__(self, other):
        if not isinstance(other, VeblenTerm):
            return NotImplemented
        return self.index == other.index and self.argument == other.argument

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "VeblenTerm(%r, %r)" % (self.index, self.argument)


class Ordinal:
    """A notation: tuple of VeblenTerm summands, largest first.  () is 0."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        self.terms = tuple(terms)
        self._hash = hash(("ord", self.terms))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __repr__(self):
        from .syntax import render  # cycle only at repr time

        return "Ordinal<%s>" % render(self)


ZERO = Ordinal()
ONE = Ordinal((VeblenTerm(ZERO, ZERO),))
OMEGA = Ordinal((VeblenTerm(ZERO, ONE),))
EPS0 = Ordinal((VeblenTerm(ONE, ZERO),))


def _cmp_term(s, t):
    # Values of single terms phi(a1,b1) vs phi(a2,b2): compare indexes, then
    # the argument on the smaller-index side against the whole other term.
    c = compare(s.index, t.index)
    if c == 0:
        return compare(s.argument, t.argument)
    if c < 0:
        return compare(s.argument, Ordinal((t,)))
    return -compare(t.argument, Ordinal((s,)))


def compare(a, b):
    """Trichotomous order on notations: -1, 0 or 1."""
    for s, t in zip(a.terms, b.terms):
        c = _cmp_term(s, t)
        if c != 0:
            return c
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def is_normal_form(a):
    """Validator used by the test suite after every operation."""
    if not isinstance(a, Ordinal):
        return False
    for i, t in enumerate(a.terms):
        if not isinstance(t, VeblenTerm):
            return False
        if not (is_normal_form(t.index) and is_normal_form(t.argument)):
            return False
        arg = t.argument
        if len(arg.terms) == 1 and compare(arg.terms[0].index, t.index) > 0:
            return False  # argument is a fixed point of phi_index
        if i + 1 < len(a.terms) and _cmp_term(t, a.terms[i + 1]) < 0:
            return False  # summands must be non-increasing
    return True


def add(a, b):
    """Ordinal sum.  Trailing summands of a below b's head are absorbed."""
    if not b.terms:
        return a
    head = b.terms[0]
    i = len(a.terms)
    while i > 0 and _cmp_term(a.terms[i - 1], head) < 0:
        i -= 1
    return Ordinal(a.terms[:i] + b.terms)


def left_subtract(a, b):
    """The unique c with a + c = b; UndefinedError when a > b."""
    for i, s in enumerate(a.terms):
        if i >= len(b.terms):
            raise UndefinedError("left difference undefined: minuend is smaller")
        c = _cmp_term(s, b.terms[i])
        if c < 0:
            return Ordinal(b.terms[i:])
        if c > 0:
            raise UndefinedError("left difference undefined: minuend is smaller")
    return Ordinal(b.terms[len(a.terms):])


def phi(a, b):
    """Binary Veblen value phi_a(b) in normal form.

    When b is already a fixed point of phi_a (a single term with larger
    index) the constructor collapses onto b instead of nesting.
    """
    if len(b.terms) == 1 and compare(b.terms[0].index, a) > 0:
        return b
    return Ordinal((VeblenTerm(a, b),))


def paper_phi(a, b):
    """phi with the offset base row: paper_phi(0, b) = w^(1 + b).

    The zero row starts counting at w, so paper_phi(0, 0) = w and
    paper_phi(0, w) = w^w; rows a >= 1 agree with phi.
    """
    if a.is_zero():
        return omega_power(add(ONE, b))
    return phi(a, b)


def omega_power(a):
    """w^a (phi(0, a) up to fixed-point collapse); omega_power(0) = 1."""
    return phi(ZERO, a)


def omega_times(a):
    """w * a, by left distributivity over a's Cantor normal form."""
    out = ZERO
    for e in cnf_exponents(a):
        out = add(out, omega_power(add(ONE, e)))
    return out


def cnf_exponents(a):
    """Exponents [e1 >= e2 >= ...] with a = w^e1 + w^e2 + ...

    A summand phi(0, b) contributes b; a summand with index >= 1 is its own
    base-w exponent (it is an epsilon-or-higher fixed point).
    """
    out = []
    for t in a.terms:
        if t.index.is_zero():
            out.append(t.argument)
        else:
            out.append(Ordinal((t,)))
    return out


def from_int(n):
    if n < 0:
        raise UndefinedError("no negative ordinals")
    return Ordinal((ONE.terms[0],) * n)


def to_int(a):
    """The natural a denotes, or None if a is infinite."""
    for t in a.terms:
        if t != ONE.terms[0]:
            return None
    return len(a.terms)


def is_successor(a):
    return bool(a.terms) and a.terms[-1] == ONE.terms[0]


def is_limit(a):
    return bool(a.terms) and not is_successor(a)


def predecessor(a):
    if not is_successor(a):
        raise UndefinedError("not a successor")
    return Ordinal(a.terms[:-1])


def _pair(x, y):
    s = x + y
    return s * (s + 1) // 2 + y


def _unpair(z):
    s = (isqrt(8 * z + 1) - 1) // 2
    y = z - s * (s + 1) // 2
    return s - y, y


def godel_code(a):
    code = 0
    for t in reversed(a.terms):
        code = _pair(_pair(godel_code(t.index), godel_code(t.argument)), code) + 1
    return code


def godel_decode(n):
    """Inverse of godel_code; InvalidCodeError on non-normal-form codes."""
    if n < 0:
        raise InvalidCodeError("codes are naturals")
    a = _decode_raw(n)
    if not is_normal_form(a):
        raise InvalidCodeError("code %d does not denote a normal form" % n)
    return a


def _decode_raw(n):
    terms = []
    while n:
        u, n = _unpair(n - 1)
        i, b = _unpair(u)
        terms.append(VeblenTerm(_decode_raw(i), _decode_raw(b)))
    return Ordinal(terms)
