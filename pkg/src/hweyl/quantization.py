"""Quantization of the classified bialgebra families into Hopf algebras.

Builds the matrix form of each family's cocommutator, exponentiates it into
the deformed coproduct, attaches the compatible commutation rules, counit and
antipode, and machine-verifies every Hopf axiom by exact truncated series.
"""

from __future__ import annotations

from fractions import Fraction

from .params import DEFAULT_ORDER, ParamPoly, as_fraction
from .freealg import (GEN_AM, GEN_AP, GEN_M, GENERATORS, REDEXES, FreeElement,
                      RewriteSystem, commutator, exp_element, exp_matrix2,
                      nc_mul, normal_form)
from .tensor import TensorElement, flip, outer, tensor_mul
from .bialgebra import (TRIVIAL, TYPE_I_MINUS, TYPE_I_PLUS, TYPE_II,
                        BialgebraClass, Cocommutator)


class VerificationError(RuntimeError):
    """A Hopf axiom failed to verify, or the antipode solve is inconsistent."""


#: Primitive generator and non-primitive vector of each quantizable family.
_FAMILY_SHAPE = {
    TYPE_I_PLUS: (GEN_AP, (GEN_AM, GEN_M)),
    TYPE_I_MINUS: (GEN_AM, (GEN_AP, GEN_M)),
    TYPE_II: (GEN_M, (GEN_AM, GEN_AP)),
}

_IDX = {GEN_AM: 0, GEN_AP: 1, GEN_M: 2}


def primitive_generator(tag):
    return _FAMILY_SHAPE[tag][0]


def _family_values(cls, order):
    """Deformation parameter values as degree-1 ParamPoly, keyed by name.

    Rational parameters q become q * <symbol>, keeping the series grading;
    symbolic parameters are used as given.
    """
    values = {}
    for name, val in cls.family_params().items():
        if isinstance(val, ParamPoly):
            if val.order != order:
                val = val.truncate(order)
            values[name] = val
        else:
            values[name] = ParamPoly.symbol(name, order) * val
    return values


def _check_quantizable(cls):
    """The family must have a primitive generator and delta(X) in X ^ primitive."""
    prim, vector = _FAMILY_SHAPE[cls.tag]
    p = _IDX[prim]
    delta = cls.normalized
    if delta.wedge_row(p):
        raise ValueError(f"{cls.tag}: delta({prim}) must vanish")
    for v in vector:
        for (i, j) in delta.wedge_row(_IDX[v]):
            if p not in (i, j):
                raise ValueError(
                    f"{cls.tag}: delta({v}) contains a wedge without {prim}")


def matrix_delta(cls, order=DEFAULT_ORDER):
    """Matrix form of the cocommutator on the non-primitive generator vector.

    Returns (theta, vector) with delta(v_i) = sum_j theta[i][j] ^ v_j and
    every entry linear in the primitive generator.
    """
    if cls.tag not in _FAMILY_SHAPE:
        raise ValueError(f"{cls.tag} has no matrix form")
    _check_quantizable(cls)
    v = _family_values(cls, order)
    prim, vector = _FAMILY_SHAPE[cls.tag]
    gen = FreeElement.generator(prim, order)
    zero = FreeElement.zero(order)
    if cls.tag == TYPE_I_PLUS:
        theta = [[gen * -v["a1"], gen * v["a3"]],
                 [zero, gen * -v["a1"]]]
    elif cls.tag == TYPE_I_MINUS:
        theta = [[gen * v["b1"], gen * v["b2"]],
                 [zero, gen * v["b1"]]]
    else:
        theta = [[gen * -v["a2"], gen * -v["a3"]],
                 [gen * -v["b2"], gen * -v["b3"]]]
    return theta, vector


def build_coproduct(cls, order=DEFAULT_ORDER):
    """Deformed coproduct: primitive on the primitive generator, and
    1 (x) v + sigma(exp(-theta) (x) v) on the non-primitive vector."""
    one = FreeElement.one(order)
    cop = {}
    if cls.tag == TRIVIAL:
        for name in GENERATORS:
            x = FreeElement.generator(name, order)
            cop[name] = outer(one, x) + outer(x, one)
        return cop
    theta, vector = matrix_delta(cls, order)
    prim = primitive_generator(cls.tag)
    x = FreeElement.generator(prim, order)
    cop[prim] = outer(one, x) + outer(x, one)
    exp_neg = exp_matrix2([[-e for e in row] for row in theta])
    for i, vi in enumerate(vector):
        acc = outer(one, FreeElement.generator(vi, order))
        for j, vj in enumerate(vector):
            if exp_neg[i][j]:
                acc = acc + outer(FreeElement.generator(vj, order), exp_neg[i][j])
        cop[vi] = acc
    return cop


def exprel_series(scale, order):
    """(exp(scale*M) - 1)/scale as the everywhere-defined series
    sum_{n>=1} scale^(n-1) M^n / n!."""
    if scale and (scale.min_degree() or 0) < 1:
        raise ValueError("series scale must carry parameter degree >= 1")
    out = FreeElement.zero(order)
    power = ParamPoly.one(order)
    fact = 1
    n = 0
    while True:
        n += 1
        fact *= n
        term = power * Fraction(1, fact)
        if not term:
            break
        out = out + FreeElement.from_word((GEN_M,) * n, order, coeff=term)
        power = power * scale
        if not power:
            break
    return out


def family_rewrite(cls, order=DEFAULT_ORDER):
    """The family's deformed commutation rules as a rewrite system."""
    if cls.tag == TRIVIAL:
        return RewriteSystem.undeformed(order)
    if cls.tag not in _FAMILY_SHAPE:
        raise ValueError(f"{cls.tag} has no commutation rules")
    v = _family_values(cls, order)
    one = ParamPoly.one(order)
    m_am = FreeElement({(GEN_M, GEN_AM): one}, order)
    m_ap = FreeElement({(GEN_M, GEN_AP): one}, order)
    ap_am = FreeElement({(GEN_AP, GEN_AM): one}, order)
    mm = FreeElement.from_word((GEN_M, GEN_M), order)
    if cls.tag == TYPE_I_PLUS:
        # [A-,A+] = M, [A-,M] = (a1/2) M^2, [A+,M] = 0
        rules = {
            (GEN_AM, GEN_AP): ap_am + FreeElement.generator(GEN_M, order),
            (GEN_AM, GEN_M): m_am + mm * (v["a1"] * Fraction(1, 2)),
            (GEN_AP, GEN_M): m_ap,
        }
        name = "type_i_plus"
    elif cls.tag == TYPE_I_MINUS:
        # swap image of the I+ rules: [A+,M] = (b1/2) M^2, [A-,M] = 0
        rules = {
            (GEN_AM, GEN_AP): ap_am + FreeElement.generator(GEN_M, order),
            (GEN_AP, GEN_M): m_ap + mm * (v["b1"] * Fraction(1, 2)),
            (GEN_AM, GEN_M): m_am,
        }
        name = "type_i_minus"
    else:
        # [A-,A+] = (exp((a2+b3)M) - 1)/(a2+b3), M central
        rules = {
            (GEN_AM, GEN_AP): ap_am + exprel_series(v["a2"] + v["b3"], order),
            (GEN_AM, GEN_M): m_am,
            (GEN_AP, GEN_M): m_ap,
        }
        name = "type_ii"
    return RewriteSystem(name, rules, order)


# -- coproduct / counit / antipode extension to arbitrary elements -------------

def coproduct_of_element(coproduct, rs, x: FreeElement) -> TensorElement:
    """Algebra-map extension of the coproduct to a free-algebra element."""
    order = x.order
    one = FreeElement.one(order)
    unit = outer(one, one)
    out = TensorElement.zero(2, order)
    for word, coeff in x.terms.items():
        acc = unit
        for letter in word:
            acc = tensor_mul(acc, coproduct[letter], rs)
        out = out + acc * coeff
    return out


def counit_of_word(counit, word, order):
    acc = ParamPoly.one(order)
    for letter in word:
        acc = acc * counit[letter]
        if not acc:
            break
    return acc


def antipode_of_element(antipode, rs, x: FreeElement) -> FreeElement:
    """Anti-multiplicative extension of the antipode, in normal form."""
    order = x.order
    out = FreeElement.zero(order)
    for word, coeff in x.terms.items():
        acc = FreeElement.one(order)
        for letter in reversed(word):
            acc = nc_mul(acc, antipode[letter])
        out = out + acc * coeff
    return normal_form(out, rs)


def _antipode_residual(coproduct, rs, antipode, name, side="left"):
    """m(gamma (x) id) Delta(X)  or  m(id (x) gamma) Delta(X); the counit term
    vanishes on generators."""
    order = rs.order
    acc = FreeElement.zero(order)
    for (u, w), coeff in coproduct[name].terms.items():
        if side == "left":
            elem = nc_mul(antipode_of_element(antipode, rs, FreeElement.from_word(u, order)),
                          FreeElement.from_word(w, order))
        else:
            elem = nc_mul(FreeElement.from_word(u, order),
                          antipode_of_element(antipode, rs, FreeElement.from_word(w, order)))
        acc = acc + elem * coeff
    return normal_form(acc, rs)


def solve_antipode(coproduct, rewrite, order=None):
    """Find the antipode order-by-order in parameter degree.

    The degree-0 part is gamma(X) = -X; each next degree is fixed by the
    left antipode axiom.  Raise VerificationError when no solution exists
    (which signals an inconsistent coproduct).
    """
    order = order or rewrite.order
    gamma = {name: -FreeElement.generator(name, rewrite.order)
             for name in GENERATORS}
    for degree in range(1, order + 1):
        for name in GENERATORS:
            res = _antipode_residual(coproduct, rewrite, gamma, name)
            part = res.homogeneous_part(degree)
            if part:
                gamma[name] = gamma[name] - part
    for name in GENERATORS:
        if _antipode_residual(coproduct, rewrite, gamma, name):
            raise VerificationError(
                f"no antipode for {name} at order {order}: the coproduct is inconsistent")
    return gamma


# -- the Hopf presentation -------------------------------------------------------

class HopfPresentation:
    """A quantized family: rewrite rules, coproduct, counit and antipode.

    Deformation parameters are carried as degree-1 ParamPoly values so the
    series grading stays intact; rational parameter choices are rendered by
    substituting the symbols away.
    """

    __slots__ = ("family", "order", "values", "rewrite", "coproduct",
                 "counit", "antipode", "bialgebra_class")

    def __init__(self, family, order, values, rewrite, coproduct, counit,
                 antipode, bialgebra_class):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "rewrite", rewrite)
        object.__setattr__(self, "coproduct", coproduct)
        object.__setattr__(self, "counit", counit)
        object.__setattr__(self, "antipode", antipode)
        object.__setattr__(self, "bialgebra_class", bialgebra_class)

    def __setattr__(self, name, value):
        raise AttributeError("HopfPresentation is immutable")

    def param_display(self):
        """Parameter values as symbol names (symbolic) or rational strings."""
        out = {}
        for name, val in self.values.items():
            if val == ParamPoly.symbol(name, self.order):
                out[name] = name
            else:
                sym = ParamPoly.symbol(name, self.order)
                const = val.subs({name: 1})
                if const.is_constant() and val == sym * const.constant_term():
                    out[name] = str(const.constant_term())
                else:
                    out[name] = str(val)
        return out

    @property
    def is_concrete(self):
        return all(d != n for n, d in self.param_display().items()) \
            if self.values else False

    def _render(self, obj):
        if self.is_concrete:
            obj = obj.subs({name: 1 for name in self.values})
            obj = obj.truncate_words(self.order)
        return str(obj)

    def relations(self):
        """Commutators [g, h] encoded by the rewrite rules, as elements."""
        return {f"[{g},{h}]": rhs
                for (g, h), rhs in self.rewrite.commutation_rules().items()}

    def to_json(self):
        doc = {
            "family": self.family,
            "order": self.order,
            "parameters": self.param_display(),
            "relations": {k: self._render(v) for k, v in sorted(self.relations().items())},
            "coproduct": {n: self._render(self.coproduct[n]) for n in GENERATORS},
            "counit": {n: str(self.counit[n]) for n in GENERATORS},
            "antipode": {n: self._render(self.antipode[n]) for n in GENERATORS},
        }
        if self.family == TYPE_I_PLUS:
            doc["central_element"] = self._render(central_element(self))
        return doc

    @classmethod
    def from_json(cls, doc):
        """Rebuild from the serialized family, parameters and order."""
        family = doc["family"]
        order = int(doc["order"])
        params = {}
        for name, disp in doc.get("parameters", {}).items():
            params[name] = None if disp == name else Fraction(disp)
        return quantize(family, order=order, params=params)

    def __repr__(self):
        return f"HopfPresentation({self.family}, order={self.order})"


def _resolve_class(family, order, params, values):
    if isinstance(family, BialgebraClass):
        return family
    if family not in (TYPE_I_PLUS, TYPE_I_MINUS, TYPE_II, TRIVIAL):
        raise ValueError(f"not a quantizable family: {family!r}")
    if family == TRIVIAL or (params is None and values is None):
        return BialgebraClass.symbolic(family, order)
    names = BialgebraClass.FAMILY_PARAMS[family]
    kwargs = {}
    for name in names:
        if values is not None and name in values:
            kwargs[name] = values[name]
        elif params is not None and params.get(name) is not None:
            kwargs[name] = as_fraction(params[name])
        else:
            kwargs[name] = ParamPoly.symbol(name, order)
    return BialgebraClass(family, normalized=Cocommutator(**kwargs))


def quantize(family, order=DEFAULT_ORDER, params=None, values=None, verify=True):
    """Quantize a family (tag or BialgebraClass) at the given truncation order.

    ``params`` maps parameter names to rationals (None entries stay symbolic);
    ``values`` may override with explicit degree-1 ParamPoly values.  With
    ``verify`` the four Hopf axioms are machine-checked before returning.
    """
    cls = _resolve_class(family, order, params, values)
    if cls.tag not in (TYPE_I_PLUS, TYPE_I_MINUS, TYPE_II, TRIVIAL):
        raise ValueError(f"cannot quantize class {cls.tag}")
    rewrite = family_rewrite(cls, order)
    bad = rewrite.check_confluence()
    if bad:
        raise VerificationError(f"rewrite rules are not confluent on {bad}")
    coproduct = build_coproduct(cls, order)
    antipode = solve_antipode(coproduct, rewrite, order)
    counit = {name: ParamPoly.zero(order) for name in GENERATORS}
    hp = HopfPresentation(
        family=cls.tag, order=order,
        values=_family_values(cls, order) if cls.tag != TRIVIAL else {},
        rewrite=rewrite, coproduct=coproduct, counit=counit,
        antipode=antipode, bialgebra_class=cls)
    if verify:
        failed = [name for name, ok in verify_all(hp).items() if not ok]
        if failed:
            raise VerificationError(f"Hopf axioms failed: {', '.join(failed)}")
    return hp


# -- verification suite ------------------------------------------------------------

def verify_homomorphism(hp) -> dict:
    """Residual Delta(g)Delta(h) - Delta(g*h as rewritten) per defining relation."""
    out = {}
    for (g, h), rhs in hp.rewrite.rules.items():
        lhs = tensor_mul(hp.coproduct[g], hp.coproduct[h], hp.rewrite)
        out[f"{g}*{h}"] = lhs - coproduct_of_element(hp.coproduct, hp.rewrite, rhs)
    return out


def _extend_slot(hp, t: TensorElement, slot: int) -> TensorElement:
    order = t.order
    terms = {}
    for (u, w), coeff in t.terms.items():
        word = u if slot == 0 else w
        inner = coproduct_of_element(hp.coproduct, hp.rewrite,
                                     FreeElement.from_word(word, order))
        for (p, q), c in inner.terms.items():
            key = (p, q, w) if slot == 0 else (u, p, q)
            prod = coeff * c
            if not prod:
                continue
            acc = terms.get(key)
            terms[key] = prod if acc is None else acc + prod
    return TensorElement(3, terms, order)


def verify_coassoc(hp) -> dict:
    """(Delta (x) id) Delta(X) - (id (x) Delta) Delta(X) per generator."""
    out = {}
    for name in GENERATORS:
        d = hp.coproduct[name]
        out[name] = _extend_slot(hp, d, 0) - _extend_slot(hp, d, 1)
    return out


def verify_counit(hp) -> dict:
    """((eps (x) id) Delta(X) - X,  (id (x) eps) Delta(X) - X) per generator."""
    order = hp.order
    out = {}
    for name in GENERATORS:
        left = FreeElement.zero(order)
        right = FreeElement.zero(order)
        for (u, w), coeff in hp.coproduct[name].terms.items():
            s = counit_of_word(hp.counit, u, order)
            if s:
                left = left + FreeElement.from_word(w, order, coeff=coeff * s)
            s = counit_of_word(hp.counit, w, order)
            if s:
                right = right + FreeElement.from_word(u, order, coeff=coeff * s)
        x = FreeElement.generator(name, order)
        out[name] = (left - x, right - x)
    return out


def verify_antipode(hp) -> dict:
    """(m(gamma (x) id) Delta(X), m(id (x) gamma) Delta(X)) per generator;
    both must equal eps(X) = 0."""
    out = {}
    for name in GENERATORS:
        out[name] = (
            _antipode_residual(hp.coproduct, hp.rewrite, hp.antipode, name, "left"),
            _antipode_residual(hp.coproduct, hp.rewrite, hp.antipode, name, "right"))
    return out


def _report_ok(report):
    for value in report.values():
        if isinstance(value, tuple):
            if any(v for v in value):
                return False
        elif value:
            return False
    return True


def verify_all(hp) -> dict:
    """PASS/FAIL of the four Hopf axioms plus the first-order consistency."""
    return {
        "homomorphism": _report_ok(verify_homomorphism(hp)),
        "coassociativity": _report_ok(verify_coassoc(hp)),
        "counit": _report_ok(verify_counit(hp)),
        "antipode": _report_ok(verify_antipode(hp)),
        "first-order": _report_ok(first_order_residuals(hp)),
    }


def first_order_cocommutator(hp) -> dict:
    """Degree-1 part of Delta - sigma Delta per generator."""
    return {name: (hp.coproduct[name] - flip(hp.coproduct[name])).homogeneous_part(1)
            for name in GENERATORS}


def first_order_residuals(hp) -> dict:
    """Difference between the coproduct's first-order asymmetry and the
    cocommutator the family was built from."""
    shape = {name: val for name, val in hp.values.items()}
    delta = Cocommutator(**shape) if shape else Cocommutator()
    got = first_order_cocommutator(hp)
    out = {}
    for name in GENERATORS:
        expected = delta.as_tensor(name, hp.order) if shape \
            else TensorElement.zero(2, hp.order)
        out[name] = got[name] - expected
    return out


# -- central element and differential realization ----------------------------------

def central_element(hp) -> FreeElement:
    """C = M exp(-a1 A+ / 2) for the I+ family; centrality is verified."""
    if hp.family != TYPE_I_PLUS:
        raise ValueError("the central element is defined for the I+ family")
    order = hp.order
    a1 = hp.values["a1"]
    c = nc_mul(FreeElement.generator(GEN_M, order),
               exp_element(FreeElement.generator(GEN_AP, order) * (a1 * Fraction(-1, 2))))
    for name in GENERATORS:
        if commutator(c, FreeElement.generator(name, order), hp.rewrite):
            raise VerificationError(f"central element fails to commute with {name}")
    return c


def _series_mult(series):
    """Operator: multiply by sum_k series[k] x^k."""
    def apply(p):
        out = {}
        for n, c in p.items():
            for k, s in series.items():
                prod = c * s
                if not prod:
                    continue
                acc = out.get(n + k)
                out[n + k] = prod if acc is None else acc + prod
        return out
    return apply


def _realization_ops(a1, order):
    """Operators for A+ = x, A- = lambda e^{a1 x/2} d/dx, M = lambda e^{a1 x/2}."""
    lam = ParamPoly.symbol("lambda", order)
    half = a1 * Fraction(1, 2)
    series = {}
    power = lam
    fact = 1
    k = 0
    while power:
        series[k] = power * Fraction(1, fact)
        k += 1
        fact *= k
        power = power * half
    mult = _series_mult(series)

    def op_ap(p):
        return {n + 1: c for n, c in p.items()}

    def op_am(p):
        return mult({n - 1: c * n for n, c in p.items() if n})

    return {GEN_AP: op_ap, GEN_AM: op_am, GEN_M: mult}


def _apply_element(ops, elem: FreeElement, p):
    order = elem.order
    out = {}
    for word, coeff in elem.terms.items():
        cur = p
        for letter in reversed(word):
            cur = ops[letter](cur)
        for n, c in cur.items():
            prod = c * coeff
            if not prod:
                continue
            acc = out.get(n)
            out[n] = prod if acc is None else acc + prod
    return {n: c for n, c in out.items() if c}


def check_realization(cls, max_degree=6, order=4) -> dict:
    """Check the single-variable differential realization of the I+ family.

    Applies [A-,A+] - M, [A-,M] - (a1/2) M^2, [A+,M], and C - lambda to every
    monomial x^n, n <= max_degree; reports True where all residuals vanish.
    """
    if isinstance(cls, str):
        cls = BialgebraClass.symbolic(cls, order)
    if cls.tag != TYPE_I_PLUS:
        raise ValueError("the differential realization is defined for the I+ family")
    values = _family_values(cls, order)
    a1 = values["a1"]
    ops = _realization_ops(a1, order)
    gen = {n: FreeElement.generator(n, order) for n in GENERATORS}
    mm = nc_mul(gen[GEN_M], gen[GEN_M])
    c_elem = nc_mul(gen[GEN_M],
                    exp_element(gen[GEN_AP] * (a1 * Fraction(-1, 2))))
    lam = ParamPoly.symbol("lambda", order)

    def dict_sub(a, b):
        out = dict(a)
        for n, c in b.items():
            out[n] = out[n] - c if n in out else -c
        return {n: c for n, c in out.items() if c}

    def comm_minus(x, y, rhs):
        def apply(p):
            t1 = _apply_element(ops, x, _apply_element(ops, y, p))
            t2 = _apply_element(ops, y, _apply_element(ops, x, p))
            t3 = _apply_element(ops, rhs, p)
            return dict_sub(dict_sub(t1, t2), t3)
        return apply

    checks = {
        "[A-,A+] = M": comm_minus(gen[GEN_AM], gen[GEN_AP], gen[GEN_M]),
        "[A-,M] = (a1/2)*M^2": comm_minus(
            gen[GEN_AM], gen[GEN_M], mm * (a1 * Fraction(1, 2))),
        "[A+,M] = 0": comm_minus(gen[GEN_AP], gen[GEN_M], FreeElement.zero(order)),
    }

    report = {}
    for label, op in checks.items():
        ok = True
        for n in range(max_degree + 1):
            if op({n: ParamPoly.one(order)}):
                ok = False
                break
        report[label] = ok
    ok = True
    for n in range(max_degree + 1):
        res = _apply_element(ops, c_elem, {n: ParamPoly.one(order)})
        res[n] = res.get(n, ParamPoly.zero(order)) - lam
        if any(c for c in res.values()):
            ok = False
            break
    report["C = lambda"] = ok
    return report


# -- swap transport I+ <-> I- ---------------------------------------------------------

_SWAP = {GEN_AP: (GEN_AM, 1), GEN_AM: (GEN_AP, 1), GEN_M: (GEN_M, -1)}


def _swap_word(word):
    sign = 1
    letters = []
    for x in word:
        image, s = _SWAP[x]
        letters.append(image)
        sign *= s
    return tuple(letters), sign


def _swap_elem(x: FreeElement, target_rs) -> FreeElement:
    out = FreeElement.zero(x.order)
    for word, coeff in x.terms.items():
        image, sign = _swap_word(word)
        out = out + FreeElement.from_word(image, x.order, coeff=coeff * sign)
    return normal_form(out, target_rs)


def _swap_tensor(t: TensorElement, target_rs) -> TensorElement:
    order = t.order
    acc = TensorElement.zero(t.rank, order)
    for slots, coeff in t.terms.items():
        elems = []
        sign = 1
        for w in slots:
            image, s = _swap_word(w)
            sign *= s
            elems.append(normal_form(FreeElement.from_word(image, order), target_rs))
        partial = {(): coeff * sign}
        for elem in elems:
            nxt = {}
            for key, c in partial.items():
                for word, wc in elem.terms.items():
                    prod = c * wc
                    if not prod:
                        continue
                    k = key + (word,)
                    old = nxt.get(k)
                    nxt[k] = prod if old is None else old + prod
            partial = nxt
        acc = acc + TensorElement(t.rank, partial, order)
    return acc


def swap_transport(hp) -> HopfPresentation:
    """Transport a quantized I+ (or I-) presentation along A+ <-> A-, M -> -M."""
    if hp.family not in (TYPE_I_PLUS, TYPE_I_MINUS):
        raise ValueError("swap transport applies to the I+ / I- families")
    order = hp.order
    target_tag = TYPE_I_MINUS if hp.family == TYPE_I_PLUS else TYPE_I_PLUS
    if hp.family == TYPE_I_PLUS:
        new_values = {"b1": -hp.values["a1"], "b2": -hp.values["a3"]}
    else:
        new_values = {"a1": -hp.values["b1"], "a3": -hp.values["b2"]}

    # transported commutation rules first (their right-hand sides are series
    # in M, whose swap images are already normal words)
    brackets = hp.rewrite.commutation_rules()

    def bracket_image(g, h):
        (gi, sg), (hi, sh) = _SWAP[g], _SWAP[h]
        if (gi, hi) in brackets:
            src, flip_sign = brackets[(gi, hi)], 1
        else:
            src, flip_sign = brackets[(hi, gi)], -1
        out = FreeElement.zero(order)
        for word, coeff in src.terms.items():
            image, s = _swap_word(word)
            out = out + FreeElement.from_word(
                image, order, coeff=coeff * (s * sg * sh * flip_sign))
        return out

    rules = {}
    for (g, h) in REDEXES:
        rules[(g, h)] = FreeElement.from_word((h, g), order) + bracket_image(g, h)
    rewrite = RewriteSystem(f"swap({hp.rewrite.name})", rules, order)

    coproduct = {}
    antipode = {}
    for name in GENERATORS:
        source, _ = _swap_word((name,))
        src_letter = source[0]
        sign = _SWAP[name][1]
        cop = _swap_tensor(hp.coproduct[src_letter], rewrite)
        coproduct[name] = cop if sign == 1 else -cop
        gam = _swap_elem(hp.antipode[src_letter], rewrite)
        antipode[name] = gam if sign == 1 else -gam

    cls = BialgebraClass(target_tag, normalized=Cocommutator(**new_values))
    return HopfPresentation(
        family=target_tag, order=order, values=new_values, rewrite=rewrite,
        coproduct=coproduct, counit={n: ParamPoly.zero(order) for n in GENERATORS},
        antipode=antipode, bialgebra_class=cls)


# -- closed-form display ----------------------------------------------------------------

def closed_forms(hp) -> dict:
    """Human-readable closed forms of the family's structure maps."""
    disp = hp.param_display()

    def v(name):
        d = disp.get(name, name)
        return d if d == name else f"({d})"

    if hp.family == TRIVIAL:
        return {
            "coproduct": [f"Delta({x}) = 1 (x) {x} + {x} (x) 1" for x in GENERATORS],
            "relations": ["[A-,A+] = M", "[A-,M] = 0", "[A+,M] = 0"],
            "antipode": [f"gamma({x}) = -{x}" for x in GENERATORS],
        }
    if hp.family == TYPE_I_PLUS:
        a1, a3 = v("a1"), v("a3")
        return {
            "coproduct": [
                "Delta(A+) = 1 (x) A+ + A+ (x) 1",
                f"Delta(M) = 1 (x) M + M (x) exp({a1}*A+)",
                f"Delta(A-) = 1 (x) A- + A- (x) exp({a1}*A+)"
                f" - {a3}*M (x) A+*exp({a1}*A+)",
            ],
            "relations": [
                "[A-,A+] = M", f"[A-,M] = ({a1}/2)*M^2", "[A+,M] = 0"],
            "antipode": [
                "gamma(A+) = -A+",
                f"gamma(M) = -M*exp(-{a1}*A+)",
                f"gamma(A-) = -A-*exp(-{a1}*A+) - {a3}*M*A+*exp(-{a1}*A+)",
            ],
            "central_element": [f"C = M*exp(-{a1}*A+/2)"],
        }
    if hp.family == TYPE_I_MINUS:
        b1, b2 = v("b1"), v("b2")
        return {
            "coproduct": [
                "Delta(A-) = 1 (x) A- + A- (x) 1",
                f"Delta(M) = 1 (x) M + M (x) exp(-{b1}*A-)",
                f"Delta(A+) = 1 (x) A+ + A+ (x) exp(-{b1}*A-)"
                f" - {b2}*M (x) A-*exp(-{b1}*A-)",
            ],
            "relations": [
                "[A-,A+] = M", f"[A+,M] = ({b1}/2)*M^2", "[A-,M] = 0"],
            "antipode": [
                "gamma(A-) = -A-",
                f"gamma(M) = -M*exp({b1}*A-)",
                f"gamma(A+) = -A+*exp({b1}*A-) - {b2}*M*A-*exp({b1}*A-)",
            ],
        }
    a2, a3, b2, b3 = v("a2"), v("a3"), v("b2"), v("b3")
    return {
        "coproduct": [
            "Delta(M) = 1 (x) M + M (x) 1",
            "Delta(A-) = 1 (x) A- + A- (x) E11(M) + A+ (x) E12(M)",
            "Delta(A+) = 1 (x) A+ + A- (x) E21(M) + A+ (x) E22(M)",
            f"with E = exp([[{a2}*M, {a3}*M], [{b2}*M, {b3}*M]])",
        ],
        "relations": [
            f"[A-,A+] = (exp(({a2}+{b3})*M) - 1)/({a2}+{b3})",
            "[A-,M] = 0", "[A+,M] = 0"],
        "antipode": [
            "gamma(M) = -M",
            "gamma(A-) = -(F11(M)*A- + F12(M)*A+)",
            "gamma(A+) = -(F21(M)*A- + F22(M)*A+)",
            "with F = E(-M)",
        ],
    }
