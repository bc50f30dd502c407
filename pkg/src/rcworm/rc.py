"""Strictly positive modal formulas over transfinite modalities.

Derivability between conjunctive diamond formulas is decided on a minimal
closure model: the syntax tree of the left formula gives one node per
diamond occurrence, and the accessibility relations are closed under

  * downward closure   x R_a y and b < a          =>  x R_b y
  * transitivity       x R_a y and y R_a z        =>  x R_a z
  * the pairing law    x R_a y and x R_b z, b < a =>  y R_b z   (y = z allowed)

The per-edge index set is always downward closed, so an edge carries just a
bound and an inclusive flag; the strict flag is canonicalized away at
successor bounds.  The right formula is then model-checked at the root.

proof_search produces independently checkable certificates built from the
six primitive rules; a returned derivation is always locally valid, while
None only means the depth bound ran out.
"""

from __future__ import annotations

from collections import deque
from functools import cmp_to_key

import numpy as np

from .errors import NotVariableFreeError, SearchExhaustedError
from .ordinal import (
    ZERO,
    Ordinal,
    compare,
    godel_code,
    is_limit,
    is_successor,
    predecessor,
)
from .worm import Worm


# ---------------------------------------------------------------- formulas


class RcFormula:
    __slots__ = ()


class _Top(RcFormula):
    __slots__ = ()

    def __repr__(self):
        return "TOP"

    def __eq__(self, other):
        return isinstance(other, _Top)

    def __hash__(self):
        return hash("rc-top")


TOP = _Top()


class Var(RcFormula):
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Var) and self.name == other.name

    def __hash__(self):
        return hash(("rc-var", self.name))

    def __repr__(self):
        return "Var(%r)" % self.name


class And(RcFormula):
    """Flattened conjunction; never empty, never contains TOP or a nested And."""

    __slots__ = ("conjuncts",)

    def __init__(self, conjuncts):
        self.conjuncts = tuple(conjuncts)
        if not self.conjuncts:
            raise ValueError("empty conjunction; use TOP")

    def __eq__(self, other):
        return isinstance(other, And) and self.conjuncts == other.conjuncts

    def __hash__(self):
        return hash(("rc-and", self.conjuncts))

    def __repr__(self):
        return "And(%r)" % (self.conjuncts,)


class Diam(RcFormula):
    __slots__ = ("index", "body")

    def __init__(self, index, body):
        self.index = index
        self.body = body

    def __eq__(self, other):
        return isinstance(other, Diam) and self.index == other.index and self.body == other.body

    def __hash__(self):
        return hash(("rc-diam", self.index, self.body))

    def __repr__(self):
        return "Diam(%r, %r)" % (self.index, self.body)


def conj(parts):
    """Conjunction constructor: flattens, drops TOP, unwraps singletons."""
    flat = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.conjuncts)
        elif not isinstance(p, _Top):
            flat.append(p)
    if not flat:
        return TOP
    if len(flat) == 1:
        return flat[0]
    return And(flat)


def worm_formula(w):
    """The worm as a formula: letters become nested diamonds over TOP."""
    f = TOP
    for letter in reversed(w.letters):
        f = Diam(letter, f)
    return f


def formula_key(f):
    """Canonical sort/memo key; total over formulas."""
    if isinstance(f, _Top):
        return (0,)
    if isinstance(f, Var):
        return (1, f.name)
    if isinstance(f, Diam):
        return (2, godel_code(f.index), formula_key(f.body))
    return (3,) + tuple(formula_key(c) for c in f.conjuncts)


def normalize(f):
    """Set-semantics normal form: sorted, deduplicated conjunctions."""
    if isinstance(f, Diam):
        return Diam(f.index, normalize(f.body))
    if isinstance(f, And):
        parts = [normalize(c) for c in f.conjuncts]
        seen = {}
        for p in parts:
            seen.setdefault(formula_key(p), p)
        ordered = [seen[k] for k in sorted(seen)]
        return conj(ordered)
    return f


def is_variable_free(f):
    if isinstance(f, Var):
        return False
    if isinstance(f, And):
        return all(is_variable_free(c) for c in f.conjuncts)
    if isinstance(f, Diam):
        return is_variable_free(f.body)
    return True


def build_q(beta, k, f):
    """Iterated reflection tower: q(0) = f, q(k+1) = <beta>(f & q(k))."""
    out = f
    for _ in range(k):
        out = Diam(beta, And((f, out)))
    return out


# ------------------------------------------------- edge strengths (index sets)

# A strength (sigma, inclusive) denotes the downward closed index set
# {b : b < sigma} or {b : b <= sigma}.  Canonical form keeps the strict
# flag only at limit bounds; (sigma+1, strict) is rewritten to (sigma, incl).


def _s_contains(s, alpha):
    sigma, incl = s
    c = compare(alpha, sigma)
    return c < 0 or (c == 0 and incl)


def _s_cmp(s1, s2):
    # inclusion test; strengths are nested so this is a linear order
    c = compare(s1[0], s2[0])
    if c != 0:
        return c
    return (s1[1] > s2[1]) - (s1[1] < s2[1])


def _s_below(s):
    """Strictly-below set {b : exists a in s, b < a}, or None when empty."""
    sigma, incl = s
    if incl:
        if sigma.is_zero():
            return None
        if is_successor(sigma):
            return (predecessor(sigma), True)
        return (sigma, False)
    return s  # canonical strict strengths have limit bounds


# ---------------------------------------------------------------- the model


class RcModel:
    """Finite frame: labelled nodes, edges carrying index-set strengths.

    Edge values are ranks into `strengths`, the sorted table of every
    distinct strength the closure produced.  Rank order agrees with set
    inclusion, so "this edge admits index a" is one integer comparison
    against the smallest rank whose set contains a.
    """

    __slots__ = ("labels", "edges", "strengths", "root")

    def __init__(self, labels, edges, strengths):
        self.labels = labels         # list of frozensets of variable names
        self.edges = edges           # list: node -> {node: strength rank}
        self.strengths = strengths   # rank -> (bound, inclusive); [0] unused
        self.root = 0

    @property
    def nodes(self):
        return range(len(self.labels))

    def admission_rank(self, alpha):
        """Smallest rank whose strength contains alpha; len(strengths) if none."""
        lo, hi = 1, len(self.strengths)
        while lo < hi:
            mid = (lo + hi) // 2
            if _s_contains(self.strengths[mid], alpha):
                hi = mid
            else:
                lo = mid + 1
        return lo

    def related(self, x, alpha, y):
        r = self.edges[x].get(y)
        return r is not None and r >= self.admission_rank(alpha)


def build_minimal_model(f):
    """Closure model of f: one node per diamond occurrence plus the root."""
    labels = [set()]
    edges = [dict()]

    def seed(node, g):
        parts = g.conjuncts if isinstance(g, And) else (g,)
        for p in parts:
            if isinstance(p, Var):
                labels[node].add(p.name)
            elif isinstance(p, Diam):
                child = len(labels)
                labels.append(set())
                edges.append(dict())
                edges[node][child] = (p.index, True)
                seed(child, p.body)
            elif isinstance(p, And):
                seed(node, p)  # nested And from un-normalized input

    seed(0, f)
    edges, strengths = _close(edges)
    return RcModel([frozenset(s) for s in labels], edges, strengths)


def _strength_table(edges):
    """Every strength the closure can reach, sorted by inclusion; [0] unused.

    Meets pick one of their arguments and strictly-below chains terminate
    (each step drops the bound), so seeding with the syntactic strengths and
    closing under strictly-below covers everything the rules can produce.
    """
    seen = set()
    stack = []
    for row in edges:
        for s in row.values():
            if s not in seen:
                seen.add(s)
                stack.append(s)
    while stack:
        b = _s_below(stack.pop())
        if b is not None and b not in seen:
            seen.add(b)
            stack.append(b)
    return [None] + sorted(seen, key=cmp_to_key(_s_cmp))


def _close(edges):
    """Least fixpoint of the frame conditions, on interned strengths.

    Strengths are linearly ordered by inclusion, so each is replaced by its
    rank in the sorted table and the closure runs on machine integers: meet
    is min, inclusion is <=, strictly-below is a table lookup.  Rows live in
    one dense matrix and every consequence of the frame conditions is an
    instance of two row rewrites, for a present edge x -> y of rank r:

      transitivity   row(x) := max(row(x), min(r, row(y)))
      pairing        row(y) := max(row(y), min(below(r), row(x)))

    (the y = y column of the pairing rewrite is the reflexive self-loop).
    Updates only raise ranks, so sweeping until the matrix sum is stable
    reaches the fixpoint; bottom-up then top-down passes per round keep the
    number of rounds small on deep models.
    """
    table = _strength_table(edges)
    rank = {s: r for r, s in enumerate(table) if r > 0}
    below = [0] * len(table)
    for r in range(1, len(table)):
        b = _s_below(table[r])
        below[r] = 0 if b is None else rank[b]

    n = len(edges)
    m = np.zeros((n, n), dtype=np.int16)
    for x, row in enumerate(edges):
        for y, s in row.items():
            m[x, y] = rank[s]

    total = -1
    while True:
        fresh = int(m.sum(dtype=np.int64))
        if fresh == total:
            break
        total = fresh
        for x in range(n - 1, -1, -1):
            _close_row(m, x, below)
        for x in range(n):
            _close_row(m, x, below)

    out = []
    for x in range(n):
        row = m[x]
        out.append({int(y): int(row[y]) for y in np.nonzero(row)[0]})
    return out, table


def _close_row(m, x, below):
    row = m[x]
    for y in np.nonzero(row)[0]:
        r = int(row[y])
        np.maximum(row, np.minimum(r, m[y]), out=row)
        b = below[r]
        if b:
            np.maximum(m[y], np.minimum(b, row), out=m[y])


def model_check(model, node, f):
    memo = {}
    admit = {}

    def threshold(alpha):
        t = admit.get(alpha)
        if t is None:
            t = model.admission_rank(alpha)
            admit[alpha] = t
        return t

    def sat(x, g):
        key = (x, id(g))
        hit = memo.get(key)
        if hit is None:
            if isinstance(g, _Top):
                hit = True
            elif isinstance(g, Var):
                hit = g.name in model.labels[x]
            elif isinstance(g, And):
                hit = all(sat(x, c) for c in g.conjuncts)
            else:
                t = threshold(g.index)
                hit = any(
                    r >= t and sat(y, g.body)
                    for y, r in model.edges[x].items()
                )
            memo[key] = hit
        return hit

    return sat(node, f)


def derives(f, g):
    """True when f proves g."""
    return model_check(build_minimal_model(normalize(f)), 0, normalize(g))


# ------------------------------------------------------------- derivations


class Derivation:
    """Certificate tree over the primitive rules.

    rule is one of ax-refl, ax-top, ax-proj, ax-absorb, ax-lower, ax-pair,
    cut, and-intro, mono; conclusion is an (lhs, rhs) pair and premises a
    tuple of sub-derivations.  check_derivation validates every node.
    """

    __slots__ = ("rule", "conclusion", "premises")

    def __init__(self, rule, conclusion, premises=()):
        self.rule = rule
        self.conclusion = conclusion
        self.premises = tuple(premises)

    def __repr__(self):
        return "Derivation(%s, %r)" % (self.rule, self.conclusion)

    def to_lines(self):
        """Serialize: one rule per line, premises referenced by line number."""
        from .syntax import render

        lines = []

        def emit(d):
            refs = [emit(p) for p in d.premises]
            lines.append(
                "%d: %s %s ; %s |- %s"
                % (
                    len(lines),
                    d.rule,
                    ",".join(str(r) for r in refs) or "-",
                    render(d.conclusion[0]),
                    render(d.conclusion[1]),
                )
            )
            return len(lines) - 1

        emit(self)
        return lines


def check_derivation(d):
    """Local validity of every step; raises ValueError on the first break."""
    lhs, rhs = d.conclusion
    rule = d.rule
    if rule == "ax-refl":
        _expect(not d.premises and lhs == rhs, d)
    elif rule == "ax-top":
        _expect(not d.premises and rhs == TOP, d)
    elif rule == "ax-proj":
        _expect(
            not d.premises
            and isinstance(lhs, And)
            and any(c == rhs for c in lhs.conjuncts),
            d,
        )
    elif rule == "and-intro":
        _expect(
            isinstance(rhs, And)
            and len(d.premises) == len(rhs.conjuncts)
            and all(
                p.conclusion == (lhs, c) for p, c in zip(d.premises, rhs.conjuncts)
            ),
            d,
        )
    elif rule == "cut":
        _expect(
            len(d.premises) == 2
            and d.premises[0].conclusion[0] == lhs
            and d.premises[0].conclusion[1] == d.premises[1].conclusion[0]
            and d.premises[1].conclusion[1] == rhs,
            d,
        )
    elif rule == "mono":
        _expect(
            len(d.premises) == 1
            and isinstance(lhs, Diam)
            and isinstance(rhs, Diam)
            and lhs.index == rhs.index
            and d.premises[0].conclusion == (lhs.body, rhs.body),
            d,
        )
    elif rule == "ax-absorb":
        _expect(
            not d.premises
            and isinstance(lhs, Diam)
            and isinstance(lhs.body, Diam)
            and lhs.index == lhs.body.index
            and rhs == lhs.body,
            d,
        )
    elif rule == "ax-lower":
        _expect(
            not d.premises
            and isinstance(lhs, Diam)
            and isinstance(rhs, Diam)
            and lhs.body == rhs.body
            and compare(rhs.index, lhs.index) < 0,
            d,
        )
    elif rule == "ax-pair":
        ok = (
            not d.premises
            and isinstance(lhs, And)
            and len(lhs.conjuncts) == 2
            and isinstance(lhs.conjuncts[0], Diam)
            and isinstance(lhs.conjuncts[1], Diam)
            and isinstance(rhs, Diam)
            and rhs.index == lhs.conjuncts[0].index
            and compare(lhs.conjuncts[1].index, lhs.conjuncts[0].index) < 0
            and rhs.body == conj((lhs.conjuncts[0].body, lhs.conjuncts[1]))
        )
        _expect(ok, d)
    else:
        raise ValueError("unknown rule %r" % rule)
    for p in d.premises:
        check_derivation(p)
    return True


def _expect(ok, d):
    if not ok:
        raise ValueError("invalid %s step concluding %r" % (d.rule, d.conclusion))


def _cut(d1, d2):
    return Derivation("cut", (d1.conclusion[0], d2.conclusion[1]), (d1, d2))


def _restructure(src, dst):
    """Proof of src |- dst when dst is src's conjunction reordered/deduped."""
    if src == dst:
        return Derivation("ax-refl", (src, dst))
    if isinstance(dst, And):
        return Derivation(
            "and-intro",
            (src, dst),
            tuple(
                Derivation("ax-refl", (src, c)) if src == c else Derivation("ax-proj", (src, c))
                for c in dst.conjuncts
            ),
        )
    return Derivation("ax-proj", (src, dst))


def proof_search(f, g, max_depth=24):
    """Bounded goal-directed search; None means the bound ran out, nothing more.

    Every subgoal is first vetted against the closure-model decision procedure,
    so underivable branches die immediately and only true sequents are explored.
    The certificate that comes back never depends on that vetting; it checks on
    its own via check_derivation.
    """
    f = normalize(f)
    g = normalize(g)
    proven = {}
    failed = {}
    models = {}
    sem = {}

    def holds(lhs, rhs, key):
        hit = sem.get(key)
        if hit is None:
            m = models.get(key[0])
            if m is None:
                m = build_minimal_model(lhs)
                models[key[0]] = m
            hit = model_check(m, 0, rhs)
            sem[key] = hit
        return hit

    def indices_of(h, acc):
        if isinstance(h, Diam):
            acc.append(h.index)
            indices_of(h.body, acc)
        elif isinstance(h, And):
            for c in h.conjuncts:
                indices_of(c, acc)
        return acc

    def search(lhs, rhs, depth):
        key = (formula_key(lhs), formula_key(rhs))
        hit = proven.get(key)
        if hit is not None:
            return hit
        if not holds(lhs, rhs, key):
            return None
        if failed.get(key, -1) >= depth:
            return None
        d = attempt(lhs, rhs, depth)
        if d is not None:
            proven[key] = d
        elif failed.get(key, -1) < depth:
            failed[key] = depth
        return d

    def attempt(lhs, rhs, depth):
        if rhs == TOP:
            return Derivation("ax-top", (lhs, TOP))
        if lhs == rhs:
            return Derivation("ax-refl", (lhs, rhs))
        if depth <= 0:
            return None
        if isinstance(rhs, And):
            subs = []
            for c in rhs.conjuncts:
                s = search(lhs, c, depth - 1)
                if s is None:
                    return None
                subs.append(s)
            return Derivation("and-intro", (lhs, rhs), subs)
        if isinstance(lhs, And):
            for c in lhs.conjuncts:
                s = search(c, rhs, depth - 1)
                if s is not None:
                    return _cut(Derivation("ax-proj", (lhs, c)), s)
            d = _pair_moves(lhs, rhs, depth)
            if d is not None:
                return d
        if isinstance(lhs, Diam):
            d = _diam_moves(lhs, rhs, depth)
            if d is not None:
                return d
        return None

    def _diam_moves(lhs, rhs, depth):
        if not isinstance(rhs, Diam):
            return None
        c = compare(rhs.index, lhs.index)
        if c > 0:
            return None  # indexes only ever drop
        if c == 0:
            s = search(lhs.body, rhs.body, depth - 1)
            if s is not None:
                return Derivation("mono", (lhs, rhs), (s,))
        else:
            # lower the outer index first, then go monotone
            mid = Diam(rhs.index, lhs.body)
            s = search(lhs.body, rhs.body, depth - 1)
            if s is not None:
                return _cut(
                    Derivation("ax-lower", (lhs, mid)),
                    Derivation("mono", (mid, rhs), (s,)),
                )
        # unfold: prove the whole goal inside, then absorb the double diamond
        s = search(lhs.body, rhs, depth - 1)
        if s is not None:
            outer = Diam(lhs.index, rhs)
            d = Derivation("mono", (lhs, outer), (s,))
            if lhs.index != rhs.index:
                mid = Diam(rhs.index, rhs)
                d = _cut(d, Derivation("ax-lower", (outer, mid)))
                outer = mid
            return _cut(d, Derivation("ax-absorb", (outer, rhs)))
        # self-strengthening: <a>X |- <a>(X & <b>X) for b < a from the goal's indexes
        cands = []
        seen = set()
        for b in indices_of(rhs, []):
            if compare(b, lhs.index) < 0 and godel_code(b) not in seen:
                seen.add(godel_code(b))
                cands.append(b)
        for b in cands:
            lowered = Diam(b, lhs.body)
            raw_body = conj((lhs.body, lowered))
            stronger = Diam(lhs.index, normalize(raw_body))
            s = search(stronger, rhs, depth - 1)
            if s is not None:
                pair_lhs = And((lhs, lowered))
                steps = _cut(
                    Derivation(
                        "and-intro",
                        (lhs, pair_lhs),
                        (
                            Derivation("ax-refl", (lhs, lhs)),
                            Derivation("ax-lower", (lhs, lowered)),
                        ),
                    ),
                    Derivation("ax-pair", (pair_lhs, Diam(lhs.index, raw_body))),
                )
                if raw_body != stronger.body:
                    steps = _cut(
                        steps,
                        Derivation(
                            "mono",
                            (Diam(lhs.index, raw_body), stronger),
                            (_restructure(raw_body, stronger.body),),
                        ),
                    )
                return _cut(steps, s)
        return None

    def _pair_moves(lhs, rhs, depth):
        if not isinstance(rhs, Diam):
            return None
        parts = lhs.conjuncts
        for i, ci in enumerate(parts):
            if not isinstance(ci, Diam):
                continue
            for j, cj in enumerate(parts):
                if i == j or not isinstance(cj, Diam):
                    continue
                if compare(cj.index, ci.index) >= 0:
                    continue
                merged = Diam(ci.index, conj((ci.body, cj)))
                norm_merged = normalize(merged)
                key_new = formula_key(norm_merged)
                if any(formula_key(c) == key_new for c in parts):
                    continue
                grown = normalize(conj(parts + (norm_merged,)))
                s = search(grown, rhs, depth - 1)
                if s is None:
                    continue
                pair_lhs = And((ci, cj))
                pair_step = _cut(
                    Derivation(
                        "and-intro",
                        (lhs, pair_lhs),
                        (
                            Derivation("ax-proj", (lhs, ci)),
                            Derivation("ax-proj", (lhs, cj)),
                        ),
                    ),
                    Derivation("ax-pair", (pair_lhs, merged)),
                )
                if merged != norm_merged:
                    pair_step = _cut(
                        pair_step,
                        Derivation(
                            "mono",
                            (merged, norm_merged),
                            (_restructure(merged.body, norm_merged.body),),
                        ),
                    )
                assert isinstance(grown, And)
                intro = []
                for c in grown.conjuncts:
                    if formula_key(c) == key_new:
                        intro.append(pair_step)
                    else:
                        intro.append(Derivation("ax-proj", (lhs, c)))
                return _cut(
                    Derivation("and-intro", (lhs, grown), intro),
                    s,
                )
        return None

    return search(f, g, max_depth)


# ------------------------------------------------------- word normal forms


def merge_words(a, b):
    """A word equivalent to the conjunction of two words."""
    if not a.letters:
        return b
    if not b.letters:
        return a
    ha, hb = a.letters[0], b.letters[0]
    c = compare(ha, hb)
    if c > 0:
        return Worm((ha,) + merge_words(Worm(a.letters[1:]), b).letters)
    if c < 0:
        return Worm((hb,) + merge_words(Worm(b.letters[1:]), a).letters)
    return Worm(
        (ha,) + merge_words(Worm(a.letters[1:]), Worm(b.letters[1:])).letters
    )


def word_normal_form(f, budget=2000):
    """The worm equivalent to a variable-free formula.

    The result is certificate-checked with derives in both directions before
    being returned; if the structural merge fails its check, a budgeted
    enumeration over words in the formula's own letters takes over, and
    running out of budget raises SearchExhaustedError.
    """
    if not is_variable_free(f):
        raise NotVariableFreeError("word normal forms exist only for variable-free formulas")

    def wnf(g):
        if isinstance(g, _Top):
            return Worm()
        if isinstance(g, Diam):
            return Worm((g.index,) + wnf(g.body).letters)
        acc = Worm()
        for c in g.conjuncts:
            acc = merge_words(acc, wnf(c))
        return acc

    def certified(w):
        wf = worm_formula(w)
        return derives(f, wf) and derives(wf, f)

    g = normalize(f)
    if isinstance(g, _Top):
        return Worm()
    candidate = wnf(g)
    if certified(candidate):
        return candidate

    # fallback: breadth-first over words in the letters occurring in f
    letters = []
    seen = set()

    def collect(h):
        if isinstance(h, Diam):
            code = godel_code(h.index)
            if code not in seen:
                seen.add(code)
                letters.append(h.index)
            collect(h.body)
        elif isinstance(h, And):
            for c in h.conjuncts:
                collect(c)

    collect(g)
    letters.sort(key=godel_code)
    queue = deque([()])
    spent = 0
    while queue:
        prefix = queue.popleft()
        spent += 1
        if spent > budget:
            raise SearchExhaustedError("word normal form search budget exhausted")
        w = Worm(prefix)
        if certified(w):
            return w
        if len(prefix) < len(candidate.letters) + 2:
            for letter in letters:
                queue.append(prefix + (letter,))
    raise SearchExhaustedError("no equivalent word found within budget")
