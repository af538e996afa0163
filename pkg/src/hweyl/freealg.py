"""Free noncommutative algebra on the generators M, A+, A-.

Elements are finite sums of words with ParamPoly coefficients.  A rewrite
system turns out-of-order adjacent letter pairs into their normal-form
expansion, giving the ordered-monomial basis M^i * A+^j * A-^k (generator
order M < A+ < A-).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .params import (DEFAULT_ORDER, ParamPoly, as_fraction, coeff_prefix,
                     join_signed, monomial_factors, monomial_key)

GEN_M = "M"
GEN_AP = "A+"
GEN_AM = "A-"

#: Generators in PBW order: letters of a normal word are sorted by this.
GENERATORS = (GEN_M, GEN_AP, GEN_AM)
_ORD = {GEN_M: 0, GEN_AP: 1, GEN_AM: 2}

#: The out-of-order letter pairs a rewrite system must cover.
REDEXES = ((GEN_AP, GEN_M), (GEN_AM, GEN_M), (GEN_AM, GEN_AP))


def word_key(word):
    return (len(word), tuple(_ORD[x] for x in word))


def word_factors(word) -> list:
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return out


def word_str(word) -> str:
    return "*".join(word_factors(word)) or "1"


class FreeElement:
    """Linear combination of noncommutative words with ParamPoly coefficients."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order):
        clean = {}
        for word, coeff in terms.items():
            if not isinstance(coeff, ParamPoly):
                raise TypeError("coefficients must be ParamPoly")
            if coeff.order != order:
                raise ValueError("coefficient truncation order does not match element")
            if coeff:
                clean[tuple(word)] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("FreeElement is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls({}, order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls({(): ParamPoly.one(order)}, order)

    @classmethod
    def generator(cls, name, order=DEFAULT_ORDER):
        if name not in _ORD:
            raise ValueError(f"unknown generator {name!r}")
        return cls({(name,): ParamPoly.one(order)}, order)

    @classmethod
    def from_word(cls, word, order=DEFAULT_ORDER, coeff=1):
        c = coeff if isinstance(coeff, ParamPoly) else ParamPoly.const(coeff, order)
        return cls({tuple(word): c}, order)

    # -- scalar coercion -----------------------------------------------------

    def _scalar(self, other):
        if isinstance(other, ParamPoly):
            if other.order != self.order:
                raise ValueError("mismatched truncation orders")
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.const(other, self.order)
        return None

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            other = FreeElement({(): s}, self.order)
        if other.order != self.order:
            raise ValueError("mismatched truncation orders")
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word)
            terms[word] = coeff if acc is None else acc + coeff
        return FreeElement(terms, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, FreeElement):
            return self + (-other)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return self + FreeElement({(): -s}, self.order)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.terms.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return nc_mul(self, other)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return FreeElement({w: c * s for w, c in self.terms.items()}, self.order)

    def __rmul__(self, other):
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return FreeElement({w: s * c for w, c in self.terms.items()}, self.order)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = FreeElement.one(self.order)
        for _ in range(n):
            out = nc_mul(out, self)
            if not out:
                break
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            s = self._scalar(other)
            other = FreeElement({(): s}, self.order)
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None

    # -- structural operations -------------------------------------------------

    def map_coeffs(self, fn):
        out = {}
        for word, coeff in self.terms.items():
            new = fn(coeff)
            if new:
                out[word] = new
        order = next(iter(out.values())).order if out else self.order
        return FreeElement(out, order)

    def subs(self, values):
        return self.map_coeffs(lambda c: c.subs(values))

    def truncate(self, order):
        return FreeElement({w: c.truncate(order) for w, c in self.terms.items()}, order)

    def truncate_words(self, max_len):
        return FreeElement(
            {w: c for w, c in self.terms.items() if len(w) <= max_len}, self.order)

    def homogeneous_part(self, degree):
        return self.map_coeffs(lambda c: c.homogeneous_part(degree))

    def min_param_degree(self):
        degs = [c.min_degree() for c in self.terms.values()]
        return min(degs) if degs else None

    def letters_used(self):
        return {x for w in self.terms for x in w}

    def coefficient(self, word):
        return self.terms.get(tuple(word), ParamPoly.zero(self.order))

    # -- rendering --------------------------------------------------------------

    def expanded_terms(self):
        """Yield (sort_key, Fraction coeff, body string) for every monomial term."""
        items = []
        for word, poly in self.terms.items():
            wf = word_factors(word)
            wk = word_key(word)
            for exps, coeff in poly.terms.items():
                body = "*".join(monomial_factors(exps) + wf)
                items.append(((monomial_key(exps), wk), coeff, body))
        items.sort(key=lambda t: t[0])
        return items

    def __str__(self):
        return join_signed((c, body) for _, c, body in self.expanded_terms())

    def __repr__(self):
        return f"FreeElement({self}, order={self.order})"


def nc_mul(x: FreeElement, y: FreeElement) -> FreeElement:
    """Concatenation product; the result is not normal-ordered."""
    if x.order != y.order:
        raise ValueError("mismatched truncation orders")
    terms = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            coeff = c1 * c2
            if not coeff:
                continue
            word = w1 + w2
            acc = terms.get(word)
            terms[word] = coeff if acc is None else acc + coeff
    return FreeElement(terms, x.order)


class RewriteSystem:
    """Normal-form expansions of the out-of-order generator pairs.

    Each rule maps a pair (g, h) with g > h to the normal form of the product
    g*h.  Construction checks the termination witness: everything in the rule
    beyond the reordered word h*g must either be a shorter word or carry
    parameter degree >= 1, so rewriting always terminates under truncation.
    """

    __slots__ = ("name", "rules", "order")

    def __init__(self, name, rules, order):
        if set(rules) != set(REDEXES):
            raise ValueError(f"rules must cover exactly the pairs {REDEXES}")
        for (g, h), rhs in rules.items():
            if rhs.order != order:
                raise ValueError("rule truncation order does not match system")
            rest = rhs - FreeElement.from_word((h, g), order)
            for word, coeff in rest.terms.items():
                if len(word) < 2:
                    continue
                d = coeff.min_degree()
                if d is None or d >= 1:
                    continue
                raise ValueError(
                    f"rule {g}*{h} violates the termination witness on word {word}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "rules", dict(rules))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("RewriteSystem is immutable")

    @classmethod
    def undeformed(cls, order=DEFAULT_ORDER):
        """Heisenberg-Weyl relations: [A-,A+] = M with M central."""
        one = ParamPoly.one(order)
        return cls("undeformed", {
            (GEN_AP, GEN_M): FreeElement({(GEN_M, GEN_AP): one}, order),
            (GEN_AM, GEN_M): FreeElement({(GEN_M, GEN_AM): one}, order),
            (GEN_AM, GEN_AP): FreeElement(
                {(GEN_AP, GEN_AM): one, (GEN_M,): one}, order),
        }, order)

    def commutation_rules(self):
        """The commutators [g, h] = g*h - h*g encoded by the rules."""
        out = {}
        for (g, h), rhs in self.rules.items():
            out[(g, h)] = rhs - FreeElement.from_word((h, g), self.order)
        return out

    def check_confluence(self):
        """Reduce every length-3 word with two strategies; return mismatches."""
        bad = []
        for w1 in GENERATORS:
            for w2 in GENERATORS:
                for w3 in GENERATORS:
                    word = (w1, w2, w3)
                    elem = FreeElement.from_word(word, self.order)
                    left = normal_form(elem, self, rightmost=False)
                    right = normal_form(elem, self, rightmost=True)
                    if left != right:
                        bad.append(word)
        return bad


def _first_inversion(word, rightmost=False):
    rng = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in rng:
        if _ORD[word[i]] > _ORD[word[i + 1]]:
            return i
    return None


def normal_form(x: FreeElement, rs: RewriteSystem, rightmost=False) -> FreeElement:
    """Rewrite x into the ordered-word basis; strategy-independent at order K."""
    if x.order != rs.order:
        raise ValueError("element and rewrite system have different truncation orders")
    out = {}
    stack = list(x.terms.items())
    while stack:
        word, coeff = stack.pop()
        if not coeff:
            continue
        i = _first_inversion(word, rightmost)
        if i is None:
            acc = out.get(word)
            out[word] = coeff if acc is None else acc + coeff
            continue
        rule = rs.rules[(word[i], word[i + 1])]
        prefix, suffix = word[:i], word[i + 2:]
        for rw, rc in rule.terms.items():
            stack.append((prefix + rw + suffix, coeff * rc))
    return FreeElement(out, x.order)


def commutator(x: FreeElement, y: FreeElement, rs: RewriteSystem) -> FreeElement:
    return normal_form(nc_mul(x, y) - nc_mul(y, x), rs)


def exp_element(x: FreeElement) -> FreeElement:
    """Truncated exponential series of a parameter-nilpotent element."""
    if not x:
        return FreeElement.one(x.order)
    d = x.min_param_degree()
    if d is None or d < 1:
        raise ValueError(
            "exp requires every term to carry parameter degree >= 1 "
            "(series would not terminate at the truncation order)")
    out = FreeElement.one(x.order)
    power = FreeElement.one(x.order)
    for n in range(1, x.order + 1):
        power = nc_mul(power, x)
        if not power:
            break
        out = out + power * Fraction(1, factorial(n))
    return out


def exp_matrix2(mat):
    """Exponential of a 2x2 matrix of FreeElements by the terminating series.

    All entries must live in the commutative subalgebra generated by a single
    generator and carry parameter degree >= 1.
    """
    if len(mat) != 2 or any(len(row) != 2 for row in mat):
        raise ValueError("expected a 2x2 matrix")
    order = mat[0][0].order
    letters = set()
    for row in mat:
        for entry in row:
            if entry.order != order:
                raise ValueError("mismatched truncation orders in matrix")
            letters |= entry.letters_used()
            if entry and (entry.min_param_degree() or 0) < 1:
                raise ValueError("matrix exponential requires parameter degree >= 1 entries")
    if len(letters) > 1:
        raise ValueError(
            f"matrix entries must commute (single-generator entries); got {sorted(letters)}")

    one = FreeElement.one(order)
    zero = FreeElement.zero(order)
    acc = [[one, zero], [zero, one]]
    cur = [[one, zero], [zero, one]]
    for n in range(1, order + 1):
        cur = [[nc_mul(cur[i][0], mat[0][j]) + nc_mul(cur[i][1], mat[1][j])
                for j in range(2)] for i in range(2)]
        if all(not cur[i][j] for i in range(2) for j in range(2)):
            break
        scale = Fraction(1, factorial(n))
        acc = [[acc[i][j] + cur[i][j] * scale for j in range(2)] for i in range(2)]
    return acc
