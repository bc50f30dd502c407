"""Executable truth for bounded arithmetic sentences over finite predicate
structures.

Sentences live in negation normal form: negation sits on atoms only, the
connectives are binary and/or, and quantifiers come bounded (x <= t) or
unbounded.  The bounded fragment is decided three independent ways:

  * direct_eval          plain recursive semantics, the oracle;
  * build_evaluation     constructs a finite, locally correct assignment of
                         numbers to closed terms and bits to sentences whose
                         domain covers the input;
  * tr_eval              reads the input's bit off that assignment.

is_evaluation checks the thirteen local-correctness clauses one by one and
reports the first offender, so any disagreement between the three routes is
attributable to a specific clause.
"""

from .errors import NotInFragmentError
from .syntax import ParseError

import json
import re


# -------------------------------------------------------------------- terms


class ArithTerm:
    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())

    def __repr__(self):
        return render_term(self)


class Zero(ArithTerm):
    __slots__ = ()

    def _key(self):
        return ()


class Succ(ArithTerm):
    __slots__ = ("arg",)

    def __init__(self, arg):
        self.arg = arg

    def _key(self):
        return (self.arg,)


class Plus(ArithTerm):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.left, self.right)


class Times(ArithTerm):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.left, self.right)


class Exp(ArithTerm):
    """Unary exponential, read base 2."""

    __slots__ = ("arg",)

    def __init__(self, arg):
        self.arg = arg

    def _key(self):
        return (self.arg,)


class Var(ArithTerm):
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def _key(self):
        return (self.name,)


ZERO_T = Zero()


def numeral(n):
    """n rendered as n applications of the successor to zero."""
    if n < 0:
        raise ValueError("numerals are naturals")
    t = ZERO_T
    for _ in range(n):
        t = Succ(t)
    return t


# ----------------------------------------------------------------- formulas


class TaitFormula:
    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())

    def __repr__(self):
        return render_formula(self)


class Atom(TaitFormula):
    """pred applied to terms; "=" and "<=" are the built-in predicates."""

    __slots__ = ("pred", "terms")

    def __init__(self, pred, terms):
        self.pred = pred
        self.terms = tuple(terms)

    def _key(self):
        return (self.pred, self.terms)


class NegAtom(TaitFormula):
    __slots__ = ("pred", "terms")

    def __init__(self, pred, terms):
        self.pred = pred
        self.terms = tuple(terms)

    def _key(self):
        return (self.pred, self.terms)


class AndF(TaitFormula):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.left, self.right)


class OrF(TaitFormula):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.left, self.right)


class BoundedAll(TaitFormula):
    __slots__ = ("var", "bound", "body")

    def __init__(self, var, bound, body):
        self.var = var
        self.bound = bound
        self.body = body

    def _key(self):
        return (self.var, self.bound, self.body)


class BoundedEx(TaitFormula):
    __slots__ = ("var", "bound", "body")

    def __init__(self, var, bound, body):
        self.var = var
        self.bound = bound
        self.body = body

    def _key(self):
        return (self.var, self.bound, self.body)


class All(TaitFormula):
    __slots__ = ("var", "body")

    def __init__(self, var, body):
        self.var = var
        self.body = body

    def _key(self):
        return (self.var, self.body)


class Ex(TaitFormula):
    __slots__ = ("var", "body")

    def __init__(self, var, body):
        self.var = var
        self.body = body

    def _key(self):
        return (self.var, self.body)


def atom_eq(a, b):
    return Atom("=", (a, b))


def atom_le(a, b):
    return Atom("<=", (a, b))


# -------------------------------------------------------- structural helpers


def term_vars(t, acc=None):
    if acc is None:
        acc = set()
    if isinstance(t, Var):
        acc.add(t.name)
    elif isinstance(t, (Succ, Exp)):
        term_vars(t.arg, acc)
    elif isinstance(t, (Plus, Times)):
        term_vars(t.left, acc)
        term_vars(t.right, acc)
    return acc


def free_vars(f, acc=None):
    if acc is None:
        acc = set()
    if isinstance(f, (Atom, NegAtom)):
        for t in f.terms:
            term_vars(t, acc)
    elif isinstance(f, (AndF, OrF)):
        free_vars(f.left, acc)
        free_vars(f.right, acc)
    elif isinstance(f, (BoundedAll, BoundedEx)):
        term_vars(f.bound, acc)
        inner = free_vars(f.body, set())
        inner.discard(f.var)
        acc |= inner
    elif isinstance(f, (All, Ex)):
        inner = free_vars(f.body, set())
        inner.discard(f.var)
        acc |= inner
    return acc


def is_delta0(f):
    if isinstance(f, (Atom, NegAtom)):
        return True
    if isinstance(f, (AndF, OrF)):
        return is_delta0(f.left) and is_delta0(f.right)
    if isinstance(f, (BoundedAll, BoundedEx)):
        return is_delta0(f.body)
    return False


def subst_term(t, name, repl):
    if isinstance(t, Var):
        return repl if t.name == name else t
    if isinstance(t, Succ):
        return Succ(subst_term(t.arg, name, repl))
    if isinstance(t, Exp):
        return Exp(subst_term(t.arg, name, repl))
    if isinstance(t, Plus):
        return Plus(subst_term(t.left, name, repl), subst_term(t.right, name, repl))
    if isinstance(t, Times):
        return Times(subst_term(t.left, name, repl), subst_term(t.right, name, repl))
    return t


def subst(f, name, repl):
    """Replace the free variable `name` by the closed term `repl`."""
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(subst_term(t, name, repl) for t in f.terms))
    if isinstance(f, NegAtom):
        return NegAtom(f.pred, tuple(subst_term(t, name, repl) for t in f.terms))
    if isinstance(f, AndF):
        return AndF(subst(f.left, name, repl), subst(f.right, name, repl))
    if isinstance(f, OrF):
        return OrF(subst(f.left, name, repl), subst(f.right, name, repl))
    if isinstance(f, (BoundedAll, BoundedEx)):
        bound = subst_term(f.bound, name, repl)
        body = f.body if f.var == name else subst(f.body, name, repl)
        return type(f)(f.var, bound, body)
    if isinstance(f, (All, Ex)):
        body = f.body if f.var == name else subst(f.body, name, repl)
        return type(f)(f.var, body)
    raise TypeError("not a formula: %r" % (f,))


def _require_delta0_sentence(f):
    if not is_delta0(f):
        raise NotInFragmentError("unbounded quantifier in a bounded-only context")
    fv = free_vars(f)
    if fv:
        raise NotInFragmentError("free variables: %s" % ", ".join(sorted(fv)))


# ----------------------------------------------------------------- semantics


class FiniteStructure:
    """Finitely supported interpretations for the extra predicates; any query
    outside the listed support answers false."""

    def __init__(self, preds=None):
        table = {}
        for name, rows in (preds or {}).items():
            table[name] = frozenset(
                (r,) if isinstance(r, int) else tuple(r) for r in rows
            )
        self.preds = table

    def holds(self, pred, values):
        return tuple(values) in self.preds.get(pred, frozenset())

    def to_json(self):
        out = {}
        for name in sorted(self.preds):
            rows = sorted(self.preds[name])
            out[name] = [r[0] if len(r) == 1 else list(r) for r in rows]
        return out


def load_structure(source):
    """Structure from a JSON map predicate -> list of members (naturals, or
    tuples as lists for higher arity)."""
    if isinstance(source, str):
        with open(source) as fh:
            data = json.load(fh)
    else:
        data = source
    if not isinstance(data, dict):
        raise ValueError("structure file must be a JSON object")
    return FiniteStructure(data)


def eval_term(t):
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ):
        return eval_term(t.arg) + 1
    if isinstance(t, Plus):
        return eval_term(t.left) + eval_term(t.right)
    if isinstance(t, Times):
        return eval_term(t.left) * eval_term(t.right)
    if isinstance(t, Exp):
        return 2 ** eval_term(t.arg)
    if isinstance(t, Var):
        raise NotInFragmentError("open term: %s" % t.name)
    raise TypeError("not a term: %r" % (t,))


def _atom_truth(pred, values, structure):
    if pred == "=":
        return values[0] == values[1]
    if pred == "<=":
        return values[0] <= values[1]
    return structure.holds(pred, values)


def direct_eval(f, structure):
    """Plain recursive truth over the standard model; the oracle."""
    _require_delta0_sentence(f)
    return _direct(f, structure)


def _direct(f, structure):
    if isinstance(f, Atom):
        return _atom_truth(f.pred, [eval_term(t) for t in f.terms], structure)
    if isinstance(f, NegAtom):
        return not _atom_truth(f.pred, [eval_term(t) for t in f.terms], structure)
    if isinstance(f, AndF):
        return _direct(f.left, structure) and _direct(f.right, structure)
    if isinstance(f, OrF):
        return _direct(f.left, structure) or _direct(f.right, structure)
    if isinstance(f, BoundedAll):
        top = eval_term(f.bound)
        return all(
            _direct(subst(f.body, f.var, numeral(m)), structure)
            for m in range(top + 1)
        )
    if isinstance(f, BoundedEx):
        top = eval_term(f.bound)
        return any(
            _direct(subst(f.body, f.var, numeral(m)), structure)
            for m in range(top + 1)
        )
    raise NotInFragmentError("unbounded quantifier in a bounded-only context")


# ------------------------------------------------------ partial evaluations


class PartialEvaluation:
    """Finite assignment: closed terms to numbers, bounded sentences to bits."""

    def __init__(self, term_map=None, sent_map=None):
        self.term_map = dict(term_map or {})
        self.sent_map = dict(sent_map or {})

    def __len__(self):
        return len(self.term_map) + len(self.sent_map)

    def copy(self):
        return PartialEvaluation(self.term_map, self.sent_map)


class FailedClause:
    """Falsy diagnostic: which local-correctness clause broke, and where."""

    __slots__ = ("clause", "witness")

    def __init__(self, clause, witness):
        self.clause = clause
        self.witness = witness

    def __bool__(self):
        return False

    def __repr__(self):
        return "FailedClause(%d, %r)" % (self.clause, self.witness)


def merge_evaluations(a, b):
    """Union of two assignments; they must agree where they overlap."""
    for t, v in b.term_map.items():
        if t in a.term_map and a.term_map[t] != v:
            raise ValueError("merge conflict at term %r" % (t,))
    for f, v in b.sent_map.items():
        if f in a.sent_map and a.sent_map[f] != v:
            raise ValueError("merge conflict at sentence %r" % (f,))
    out = a.copy()
    out.term_map.update(b.term_map)
    out.sent_map.update(b.sent_map)
    return out


def is_evaluation(s, structure):
    """True, or the first failing clause of the thirteen, with a witness.

    Clauses, in order: (1) the domain holds closed terms and bounded
    sentences only; (2) sentence values are bits; (3) term values are
    naturals; (4) zero maps to 0; (5)-(8) successor, sum, product and
    exponential agree with the values of their immediate subterms, which must
    be present; (9) atoms and negated atoms agree with the structure applied
    to their arguments' values; (10)-(11) conjunction/disjunction agree with
    their parts; (12)-(13) a bounded quantifier requires its bound term and
    every instance up to the bound's value, and agrees with them.
    """
    tm, sm = s.term_map, s.sent_map

    for t in tm:
        if not isinstance(t, ArithTerm) or term_vars(t):
            return FailedClause(1, t)
    for f in sm:
        if not isinstance(f, TaitFormula) or not is_delta0(f) or free_vars(f):
            return FailedClause(1, f)
    for f, v in sm.items():
        if v not in (0, 1):
            return FailedClause(2, f)
    for t, v in tm.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            return FailedClause(3, t)
    if ZERO_T in tm and tm[ZERO_T] != 0:
        return FailedClause(4, ZERO_T)
    for t, v in tm.items():
        if isinstance(t, Succ):
            if t.arg not in tm or v != tm[t.arg] + 1:
                return FailedClause(5, t)
    for t, v in tm.items():
        if isinstance(t, Plus):
            if (
                t.left not in tm
                or t.right not in tm
                or v != tm[t.left] + tm[t.right]
            ):
                return FailedClause(6, t)
    for t, v in tm.items():
        if isinstance(t, Times):
            if (
                t.left not in tm
                or t.right not in tm
                or v != tm[t.left] * tm[t.right]
            ):
                return FailedClause(7, t)
    for t, v in tm.items():
        if isinstance(t, Exp):
            if t.arg not in tm or v != 2 ** tm[t.arg]:
                return FailedClause(8, t)
    for f, v in sm.items():
        if isinstance(f, (Atom, NegAtom)):
            if any(t not in tm for t in f.terms):
                return FailedClause(9, f)
            truth = _atom_truth(f.pred, [tm[t] for t in f.terms], structure)
            if isinstance(f, NegAtom):
                truth = not truth
            if (v == 1) != truth:
                return FailedClause(9, f)
    for f, v in sm.items():
        if isinstance(f, AndF):
            if f.left not in sm or f.right not in sm:
                return FailedClause(10, f)
            if (v == 1) != (sm[f.left] == 1 and sm[f.right] == 1):
                return FailedClause(10, f)
    for f, v in sm.items():
        if isinstance(f, OrF):
            if f.left not in sm or f.right not in sm:
                return FailedClause(11, f)
            if (v == 1) != (sm[f.left] == 1 or sm[f.right] == 1):
                return FailedClause(11, f)
    for f, v in sm.items():
        if isinstance(f, (BoundedAll, BoundedEx)):
            clause = 12 if isinstance(f, BoundedAll) else 13
            if f.bound not in tm:
                return FailedClause(clause, f)
            insts = []
            for m in range(tm[f.bound] + 1):
                inst = subst(f.body, f.var, numeral(m))
                if inst not in sm:
                    return FailedClause(clause, f)
                insts.append(sm[inst] == 1)
            want = all(insts) if isinstance(f, BoundedAll) else any(insts)
            if (v == 1) != want:
                return FailedClause(clause, f)
    return True


def build_evaluation(f, structure):
    """The least assignment whose domain covers the given sentence."""
    _require_delta0_sentence(f)
    out = PartialEvaluation()
    _build_sent(f, structure, out)
    return out


def _build_term(t, out):
    hit = out.term_map.get(t)
    if hit is not None:
        return hit
    if isinstance(t, Zero):
        v = 0
    elif isinstance(t, Succ):
        v = _build_term(t.arg, out) + 1
    elif isinstance(t, Plus):
        v = _build_term(t.left, out) + _build_term(t.right, out)
    elif isinstance(t, Times):
        v = _build_term(t.left, out) * _build_term(t.right, out)
    elif isinstance(t, Exp):
        v = 2 ** _build_term(t.arg, out)
    else:
        raise NotInFragmentError("open term in a sentence: %r" % (t,))
    out.term_map[t] = v
    return v


def _build_sent(f, structure, out):
    hit = out.sent_map.get(f)
    if hit is not None:
        return hit
    if isinstance(f, (Atom, NegAtom)):
        values = [_build_term(t, out) for t in f.terms]
        truth = _atom_truth(f.pred, values, structure)
        if isinstance(f, NegAtom):
            truth = not truth
        v = 1 if truth else 0
    elif isinstance(f, AndF):
        v = _build_sent(f.left, structure, out) & _build_sent(f.right, structure, out)
    elif isinstance(f, OrF):
        v = _build_sent(f.left, structure, out) | _build_sent(f.right, structure, out)
    elif isinstance(f, (BoundedAll, BoundedEx)):
        top = _build_term(f.bound, out)
        bits = [
            _build_sent(subst(f.body, f.var, numeral(m)), structure, out)
            for m in range(top + 1)
        ]
        if isinstance(f, BoundedAll):
            v = 1 if all(b == 1 for b in bits) else 0
        else:
            v = 1 if any(b == 1 for b in bits) else 0
    else:
        raise NotInFragmentError("unbounded quantifier in a bounded-only context")
    out.sent_map[f] = v
    return v


def tr_eval(f, structure):
    """Truth via the constructed assignment.  Any locally correct assignment
    containing the sentence gives the same bit, so the one we build decides."""
    s = build_evaluation(f, structure)
    return s.sent_map[f] == 1


# ------------------------------------------------------------ syntactic layer


def de_morgan_negate(f):
    """Negation pushed to the atoms; an involution."""
    if isinstance(f, Atom):
        return NegAtom(f.pred, f.terms)
    if isinstance(f, NegAtom):
        return Atom(f.pred, f.terms)
    if isinstance(f, AndF):
        return OrF(de_morgan_negate(f.left), de_morgan_negate(f.right))
    if isinstance(f, OrF):
        return AndF(de_morgan_negate(f.left), de_morgan_negate(f.right))
    if isinstance(f, BoundedAll):
        return BoundedEx(f.var, f.bound, de_morgan_negate(f.body))
    if isinstance(f, BoundedEx):
        return BoundedAll(f.var, f.bound, de_morgan_negate(f.body))
    if isinstance(f, All):
        return Ex(f.var, de_morgan_negate(f.body))
    if isinstance(f, Ex):
        return All(f.var, de_morgan_negate(f.body))
    raise TypeError("not a formula: %r" % (f,))


def classify(f):
    """Minimal class of a prenex formula: ("delta0", 0), ("pi", n) or
    ("sigma", n).  Unbounded quantifiers under a connective or a bounded
    quantifier have no class here and raise NotInFragmentError.
    """
    kinds = []
    while isinstance(f, (All, Ex)):
        k = "pi" if isinstance(f, All) else "sigma"
        if not kinds or kinds[-1] != k:
            kinds.append(k)
        f = f.body
    if not is_delta0(f):
        raise NotInFragmentError("formula is not in prenex form")
    if not kinds:
        return ("delta0", 0)
    return (kinds[0], len(kinds))


# ------------------------------------------------------------- text syntax
#
# formula := disj ;  disj := conj ('|' conj)* ;  conj := unit ('&' unit)*
# unit    := ('all' | 'ex') VAR ['<=' term] '.' unit-level formula
#          | 'neg' atom | '(' formula ')' | atom
# atom    := PRED '(' term {',' term} ')' | term ('=' | '<=') term
# term    := sum of products of: 0, NAT, VAR, 'S(t)', 'exp(t)', '(' term ')'
#
# A leading '(' at the unit level always opens a formula, so comparisons must
# start with an unparenthesized term.

_T_TOKEN = re.compile(r"\s*(<=|\d+|[A-Za-z_][A-Za-z0-9_]*|[()+*,.=&|~])")


def _t_tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _T_TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(
                "unexpected character %r" % stripped[0], len(text) - len(stripped)
            )
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _TruthParser:
    def __init__(self, text):
        self.tokens = _t_tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def expect(self, tok):
        got = self.peek()
        if got != tok:
            raise ParseError("expected %r" % tok, self.pos())
        self.i += 1

    def done(self):
        if self.peek() is not None:
            raise ParseError("trailing input", self.pos())

    def formula(self):
        f = self.conj()
        while self.peek() == "|":
            self.next()
            f = OrF(f, self.conj())
        return f

    def conj(self):
        f = self.unit()
        while self.peek() == "&":
            self.next()
            f = AndF(f, self.unit())
        return f

    def unit(self):
        tok = self.peek()
        if tok in ("all", "ex"):
            self.next()
            var = self.ident()
            bound = None
            if self.peek() == "<=":
                self.next()
                bound = self.term()
            self.expect(".")
            body = self.formula()
            if tok == "all":
                return All(var, body) if bound is None else BoundedAll(var, bound, body)
            return Ex(var, body) if bound is None else BoundedEx(var, bound, body)
        if tok in ("neg", "~"):
            self.next()
            a = self.unit()
            if not isinstance(a, Atom):
                raise ParseError("negation applies to atoms only", self.pos())
            return NegAtom(a.pred, a.terms)
        if tok == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()

    def ident(self):
        tok = self.next()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) or tok in (
            "all",
            "ex",
            "neg",
            "S",
            "exp",
        ):
            raise ParseError("expected a name", self.pos())
        return tok

    def atom(self):
        # predicate application, or a comparison between two terms
        tok = self.peek()
        if (
            tok is not None
            and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok)
            and tok not in ("S", "exp", "all", "ex", "neg")
            and self.i + 1 < len(self.tokens)
            and self.tokens[self.i + 1][0] == "("
        ):
            pred = self.next()
            self.expect("(")
            terms = [self.term()]
            while self.peek() == ",":
                self.next()
                terms.append(self.term())
            self.expect(")")
            return Atom(pred, terms)
        left = self.term()
        op = self.next()
        if op not in ("=", "<="):
            raise ParseError("expected '=' or '<='", self.pos())
        right = self.term()
        return Atom(op, (left, right))

    def term(self):
        t = self.factor()
        while self.peek() == "+":
            self.next()
            t = Plus(t, self.factor())
        return t

    def factor(self):
        t = self.prim()
        while self.peek() == "*":
            self.next()
            t = Times(t, self.prim())
        return t

    def prim(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        if tok.isdigit():
            self.next()
            return numeral(int(tok))
        if tok == "S":
            self.next()
            self.expect("(")
            t = self.term()
            self.expect(")")
            return Succ(t)
        if tok == "exp":
            self.next()
            self.expect("(")
            t = self.term()
            self.expect(")")
            return Exp(t)
        if tok == "(":
            self.next()
            t = self.term()
            self.expect(")")
            return t
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            self.next()
            return Var(tok)
        raise ParseError("expected a term", self.pos())


def parse_truth_formula(text):
    p = _TruthParser(text)
    f = p.formula()
    p.done()
    return f


def parse_truth_term(text):
    p = _TruthParser(text)
    t = p.term()
    p.done()
    return t


def render_term(t):
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Succ):
        # compress numerals back to decimal
        n = 0
        inner = t
        while isinstance(inner, Succ):
            n += 1
            inner = inner.arg
        if isinstance(inner, Zero):
            return str(n)
        return "S(%s)" % render_term(t.arg)
    if isinstance(t, Exp):
        return "exp(%s)" % render_term(t.arg)
    if isinstance(t, Plus):
        return "%s+%s" % (render_term(t.left), _paren_factor(t.right, True))
    if isinstance(t, Times):
        return "%s*%s" % (_paren_factor(t.left, False), _paren_factor(t.right, False))
    raise TypeError("not a term: %r" % (t,))


def _paren_factor(t, in_sum):
    s = render_term(t)
    if isinstance(t, Plus):
        return "(%s)" % s
    if isinstance(t, Times) and not in_sum:
        return "(%s)" % s
    return s


def render_formula(f):
    if isinstance(f, Atom):
        if f.pred in ("=", "<="):
            return "%s %s %s" % (render_term(f.terms[0]), f.pred, render_term(f.terms[1]))
        return "%s(%s)" % (f.pred, ", ".join(render_term(t) for t in f.terms))
    if isinstance(f, NegAtom):
        return "neg %s" % render_formula(Atom(f.pred, f.terms))
    if isinstance(f, AndF):
        # the parser is left-associative, so a nested right And needs parens
        right = _paren_conj(f.right)
        if isinstance(f.right, AndF):
            right = "(%s)" % render_formula(f.right)
        return "%s & %s" % (_paren_conj(f.left), right)
    if isinstance(f, OrF):
        right = _paren_disj(f.right)
        if isinstance(f.right, OrF):
            right = "(%s)" % render_formula(f.right)
        return "%s | %s" % (_paren_disj(f.left), right)
    if isinstance(f, BoundedAll):
        return "all %s <= %s . %s" % (f.var, render_term(f.bound), render_formula(f.body))
    if isinstance(f, BoundedEx):
        return "ex %s <= %s . %s" % (f.var, render_term(f.bound), render_formula(f.body))
    if isinstance(f, All):
        return "all %s . %s" % (f.var, render_formula(f.body))
    if isinstance(f, Ex):
        return "ex %s . %s" % (f.var, render_formula(f.body))
    raise TypeError("not a formula: %r" % (f,))


def _paren_conj(f):
    s = render_formula(f)
    if isinstance(f, (OrF, BoundedAll, BoundedEx, All, Ex)):
        return "(%s)" % s
    return s


def _paren_disj(f):
    s = render_formula(f)
    if isinstance(f, (BoundedAll, BoundedEx, All, Ex)):
        return "(%s)" % s
    return s
