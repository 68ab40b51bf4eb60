"""
Sparse multivariate polynomials over exact rationals.

Variables come in three kinds, each with a fixed even Z-degree:
``x`` and ``y`` variables have degree 2, ``z`` variables have degree 4.
A variable is a pair ``(kind, index)`` such as ``("x", 1)``.

Monomials are compared in graded lexicographic order: first by weighted
total degree, then lexicographically with x1 > x2 > ... > y1 > ... > z1 > ...
(earlier kind and lower index are "larger").  The order fixes leading
terms for exact division and gives every polynomial one serialization.
"""

from fractions import Fraction

KINDS = ("x", "y", "z")
KIND_RANK = {"x": 0, "y": 1, "z": 2}
VAR_DEGREE = {"x": 2, "y": 2, "z": 4}


class NonExactDivision(ArithmeticError):
    """Raised when a multivariate division leaves a nonzero remainder."""


def var_key(v):
    kind, index = v
    return (KIND_RANK[kind], index)


def var_degree(v):
    return VAR_DEGREE[v[0]]


def var_name(v):
    return "%s%d" % v


def mono_degree(mono):
    return sum(var_degree(v) * e for v, e in mono)


def mono_mul(m1, m2):
    exp = dict(m1)
    for v, e in m2:
        exp[v] = exp.get(v, 0) + e
    return tuple(sorted(exp.items(), key=lambda it: var_key(it[0])))


def mono_div(m1, m2):
    """m1 / m2, or None if m2 does not divide m1."""
    exp = dict(m1)
    for v, e in m2:
        r = exp.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            exp.pop(v, None)
        else:
            exp[v] = r
    return tuple(sorted(exp.items(), key=lambda it: var_key(it[0])))


def mono_sort_key(mono):
    # Graded lex.  Within one degree, a variable of smaller var_key with a
    # higher exponent makes the monomial larger, so negate the key parts.
    lex = tuple((-var_key(v)[0], -var_key(v)[1], e) for v, e in mono)
    return (mono_degree(mono), lex)


def mono_str(mono):
    if not mono:
        return "1"
    parts = []
    for v, e in mono:
        parts.append(var_name(v) if e == 1 else "%s^%d" % (var_name(v), e))
    return "*".join(parts)


class Poly:
    """Immutable sparse polynomial: map monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if type(coeff) is not Fraction:
                    coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def const(c):
        c = Fraction(c)
        return Poly({(): c}) if c else Poly()

    @staticmethod
    def var(v, e=1):
        if v[0] not in KINDS or v[1] < 1:
            raise ValueError("bad variable %r" % (v,))
        return Poly({((v, e),): Fraction(1)}) if e else Poly.const(1)

    # -- predicates / views ------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.terms.get((), Fraction(0))

    def variables(self):
        out = set()
        for mono in self.terms:
            for v, _ in mono:
                out.add(v)
        return out

    def degree(self):
        """Weighted total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self):
        parts = {}
        for mono, coeff in self.terms.items():
            parts.setdefault(mono_degree(mono), {})[mono] = coeff
        return {d: Poly(t) for d, t in sorted(parts.items())}

    def degree_in(self, v):
        d = 0
        for mono in self.terms:
            for w, e in mono:
                if w == v and e > d:
                    d = e
        return d

    def coefficient_in(self, v, e):
        """The Poly coefficient of v^e (collecting over all other variables)."""
        out = {}
        for mono, coeff in self.terms.items():
            exp = dict(mono)
            if exp.pop(v, 0) == e:
                rest = tuple(sorted(exp.items(), key=lambda it: var_key(it[0])))
                out[rest] = out.get(rest, Fraction(0)) + coeff
        return Poly(out)

    def leading(self):
        """(monomial, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=mono_sort_key)
        return mono, self.terms[mono]

    def sort_key(self):
        """Total-order key so polynomials can be sorted deterministically."""
        items = sorted(self.terms.items(), key=lambda it: mono_sort_key(it[0]),
                       reverse=True)
        return tuple((mono_sort_key(m), c) for m, c in items)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly({m: co * c for m, co in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, mapping):
        """Substitute variables by polynomials; mapping: var -> Poly."""
        out = Poly()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for v, e in mono:
                repl = mapping.get(v)
                term = term * (repl ** e if repl is not None else Poly.var(v, e))
            out = out + term
        return out

    def diff(self, v):
        """Formal partial derivative with respect to variable v."""
        out = {}
        for mono, coeff in self.terms.items():
            exp = dict(mono)
            e = exp.get(v, 0)
            if not e:
                continue
            if e == 1:
                exp.pop(v)
            else:
                exp[v] = e - 1
            m = tuple(sorted(exp.items(), key=lambda it: var_key(it[0])))
            out[m] = out.get(m, Fraction(0)) + coeff * e
        return Poly(out)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda it: mono_sort_key(it[0]),
                       reverse=True)
        parts = []
        for mono, coeff in items:
            if not mono:
                body = str(coeff)
            elif coeff == 1:
                body = mono_str(mono)
            elif coeff == -1:
                body = "-" + mono_str(mono)
            else:
                body = "%s*%s" % (coeff, mono_str(mono))
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts)

    __repr__ = __str__


def partial_derivative(p, v):
    return p.diff(v)


def exact_div(num, den):
    """Exact single-divisor division: the q with q*den == num.

    Raises NonExactDivision when no such polynomial exists.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_d, lc_d = den.leading()
    quo = Poly()
    rem = num
    while not rem.is_zero():
        lm_r, lc_r = rem.leading()
        m = mono_div(lm_r, lm_d)
        if m is None:
            raise NonExactDivision("remainder %s" % rem)
        t = Poly({m: lc_r / lc_d})
        quo = quo + t
        rem = rem - t * den
    return quo
