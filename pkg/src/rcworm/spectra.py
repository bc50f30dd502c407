"""Catalog of analyzed theories: level-indexed ordinals, conservativity
spectra, well-ordering bounds, and a micro-scale fast-growing-hierarchy
evaluator.

Theories are opaque names with attached closed-form clauses, not formalized
axiom systems.  Each catalog entry answers: at logical-complexity level beta,
which iteration ordinal does the theory reach?  Entries named after a defining
word answer through closed forms recorded here; the word itself is kept on the
descriptor so the same numbers can be recomputed independently through the
word pipeline (worm.order_type_at).

Preset keys (CLI syntax KEY or KEY:PARAM, PARAM an ordinal or a decimal):

  pi01-ca0:A        iterated comprehension, set-induction-free base; A >= 1
  pi01-ca:A         same with full induction; A >= 1
  pi01-ca0-lim:L    union of the above below a limit stage L
  pi01-ca-lim:L     ditto with full induction
  pa-t            | full truth induction; defining word [w*2]
  aca             | same strength; defining word [w*2]
  ea-ct-isigma-n:N  restricted truth induction; defining word [w+N+1]
"""

from .errors import (
    BudgetExceededError,
    InvalidCodeError,
    NotInFragmentError,
    OutOfApplicabilityError,
    UnsupportedError,
)
from .ordinal import (
    ONE,
    OMEGA,
    EPS0,
    ZERO,
    add,
    compare,
    from_int,
    godel_decode,
    is_limit,
    omega_power,
    phi,
    to_int,
)
from .worm import Worm, in_fragment, order_type_at


class TheoryDescriptor:
    """A cataloged theory; levels below `bound` have a defined ordinal."""

    __slots__ = ("name", "key", "param", "word", "bound")

    def __init__(self, name, key, param=None, word=None, bound=None):
        self.name = name
        self.key = key
        self.param = param
        self.word = word
        self.bound = bound

    def __repr__(self):
        return "TheoryDescriptor(%r)" % (self.name,)

    def __eq__(self, other):
        return isinstance(other, TheoryDescriptor) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class Spectrum:
    """Levels paired with their ordinals; levels strictly increase and the
    ordinals never increase along them."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        for (l1, o1), (l2, o2) in zip(entries, entries[1:]):
            if compare(l1, l2) >= 0:
                raise ValueError("levels must be strictly increasing")
            if compare(o1, o2) < 0:
                raise ValueError("ordinals must not increase along levels")
        self.entries = entries

    def levels(self):
        return [l for l, _ in self.entries]

    def ordinals(self):
        return [o for _, o in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, Spectrum) and self.entries == other.entries

    def __repr__(self):
        return "Spectrum(%r)" % (list(self.entries),)


def _tower(k):
    """The k-th member of 1, w, w^w, w^(w^w), ..."""
    v = ONE
    for _ in range(k):
        v = omega_power(v)
    return v


def _eps(a):
    return phi(ONE, a)


OMEGA2 = add(OMEGA, OMEGA)


def word_theory(word, bound=None):
    """A theory presented by a word alone; levels answered via the word."""
    if bound is None and word.letters:
        low = word.letters[0]
        for l in word.letters:
            if compare(l, low) < 0:
                low = l
        bound = add(low, ONE)
    from .syntax import render

    return TheoryDescriptor("word:%s" % render(word), "word", word=word, bound=bound)


def _preset_pi01(key, alpha, full_induction):
    if compare(alpha, ONE) < 0:
        raise UnsupportedError("iteration exponent must be at least 1: %s" % (key,))
    from .syntax import render

    succ = add(alpha, ONE)
    bound = omega_power(succ)
    if full_induction:
        bound = add(bound, OMEGA)
    return TheoryDescriptor(
        "%s:%s" % (key, render(alpha)), key, param=alpha, bound=bound
    )


def _preset_pi01_lim(key, lam):
    if not is_limit(lam):
        raise UnsupportedError("stage must be a limit ordinal: %s" % (key,))
    from .syntax import render

    return TheoryDescriptor(
        "%s:%s" % (key, render(lam)), key, param=lam, bound=omega_power(lam)
    )


def _preset_word(name, key, word, bound, param=None):
    return TheoryDescriptor(name, key, param=param, word=word, bound=bound)


def make_theory(key, param=None):
    """Construct a cataloged descriptor from a preset key and parameter."""
    if key == "pi01-ca0":
        return _preset_pi01(key, _need_ord(key, param), False)
    if key == "pi01-ca":
        return _preset_pi01(key, _need_ord(key, param), True)
    if key == "pi01-ca0-lim":
        return _preset_pi01_lim(key, _need_ord(key, param))
    if key == "pi01-ca-lim":
        return _preset_pi01_lim(key, _need_ord(key, param))
    if key in ("pa-t", "aca"):
        if param is not None:
            raise UnsupportedError("%s takes no parameter" % key)
        return _preset_word(key, key, Worm((OMEGA2,)), OMEGA2)
    if key == "ea-ct-isigma-n":
        n = _need_nat(key, param)
        letter = add(OMEGA, from_int(n + 1))
        return _preset_word(
            "%s:%d" % (key, n), key, Worm((letter,)), letter, param=n
        )
    raise UnsupportedError("unknown theory %r" % (key,))


def _need_ord(key, param):
    if param is None:
        raise UnsupportedError("%s needs an ordinal parameter" % key)
    return param


def _need_nat(key, param):
    if isinstance(param, int):
        return param
    n = to_int(param) if param is not None else None
    if n is None:
        raise UnsupportedError("%s needs a finite parameter" % key)
    return n


def parse_theory(text):
    """KEY or KEY:PARAM, the parameter in ordinal notation syntax."""
    from .syntax import parse_ordinal

    key, sep, rest = text.partition(":")
    key = key.strip()
    param = parse_ordinal(rest) if sep else None
    return make_theory(key, param)


def _check_level(t, beta):
    if t.bound is not None and compare(beta, t.bound) >= 0:
        raise OutOfApplicabilityError(
            "level out of range for %s" % (t.name,)
        )


def ord_at(t, beta):
    """The iteration ordinal the theory reaches at complexity level beta."""
    _check_level(t, beta)
    if t.key == "word":
        if not in_fragment(beta, t.word):
            raise OutOfApplicabilityError("level above a letter of the word")
        return order_type_at(beta, t.word)
    if t.key == "pi01-ca0":
        return phi(add(t.param, ONE), ZERO)
    if t.key == "pi01-ca":
        if compare(beta, omega_power(add(t.param, ONE))) < 0:
            return phi(add(t.param, ONE), EPS0)
        return EPS0
    if t.key in ("pi01-ca0-lim", "pi01-ca-lim"):
        return phi(t.param, ZERO)
    if t.key in ("pa-t", "aca"):
        # closed forms; the word [w*2] recomputes these independently
        if compare(beta, OMEGA) < 0:
            return _eps(EPS0)
        return EPS0
    if t.key == "ea-ct-isigma-n":
        # word [w+n+1]: levels below w keep the full order type, level w+j
        # strips the head down to the (n+1-j)-story tower
        n = t.param
        if compare(beta, OMEGA) < 0:
            return _eps(_tower(n + 1))
        j = to_int(_level_past_omega(beta))
        return _tower(n + 1 - j)
    raise UnsupportedError("no level clause for %s" % (t.name,))


def _level_past_omega(beta):
    from .ordinal import left_subtract

    return left_subtract(OMEGA, beta)


def spectrum(t, levels):
    """Pointwise ord_at along the given strictly increasing levels."""
    return Spectrum((l, ord_at(t, l)) for l in levels)


def pi11_ordinal(t):
    """Bound on provably well-founded elementary orderings, where cataloged."""
    if t.key == "pi01-ca0":
        return phi(add(t.param, ONE), ZERO)
    if t.key == "pi01-ca":
        return phi(add(t.param, ONE), EPS0)
    if t.key in ("pi01-ca0-lim", "pi01-ca-lim"):
        return phi(t.param, ZERO)
    if t.key == "aca":
        return _eps(EPS0)
    raise UnsupportedError("no well-ordering clause for %s" % (t.name,))


def fgh_class_label(t):
    """Index of the provably-total computable function class."""
    if t.key == "pi01-ca0":
        return phi(add(t.param, ONE), ZERO)
    if t.key == "pi01-ca":
        return phi(add(t.param, ONE), EPS0)
    if t.key in ("pi01-ca0-lim", "pi01-ca-lim"):
        return phi(t.param, ZERO)
    if t.key in ("pa-t", "aca", "ea-ct-isigma-n", "word"):
        if t.word is None:
            raise UnsupportedError("no function-class clause for %s" % (t.name,))
        return ord_at(t, ONE)
    raise UnsupportedError("no function-class clause for %s" % (t.name,))


# ------------------------------------------------------ fast-growing values

_BIT_CAP = 21


def fgh_eval(alpha, x, guard=20000):
    """Literal evaluation of the fast-growing function at index alpha.

    F(alpha, x) is the maximum of the height-x tower of 2s at x, plus one,
    and every F(beta, .) iterated up to x times on arguments up to x, plus
    one, where beta runs over notations coded below x that sit below alpha.
    Any intermediate beyond 2^21 bits or past the step guard raises
    BudgetExceededError; safe inputs are x <= 2 at index 0 and x <= 1 above.
    """
    budget = [guard]
    memo = {}

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError("step budget exhausted")

    def tower(y, height):
        v = y
        for _ in range(height):
            spend()
            if v.bit_length() > _BIT_CAP:
                raise BudgetExceededError("intermediate value too large")
            v = 2 ** v
        return v

    def below(a, x):
        out = []
        for code in range(0, x + 1):
            try:
                b = godel_decode(code)
            except InvalidCodeError:
                continue
            if compare(b, a) < 0:
                out.append(b)
        return out

    def fgh(a, x):
        key = (a, x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        spend()
        best = tower(x, x) + 1
        for b in below(a, x):
            for n in range(0, x + 1):
                v = n
                for _ in range(x):
                    v = fgh(b, v)
                    if v.bit_length() > _BIT_CAP:
                        raise BudgetExceededError("intermediate value too large")
                    if v + 1 > best:
                        best = v + 1
        memo[key] = best
        return best

    if x < 0:
        raise ValueError("argument must be a natural number")
    return fgh(alpha, x)
