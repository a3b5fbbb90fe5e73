"""Exact multivariate Laurent polynomials over the rationals.

A polynomial is stored as a mapping from integer exponent tuples to nonzero
Fraction coefficients, together with the tuple of variable names the
exponents refer to.  The representation is kept canonical at all times:

  * zero coefficients are pruned,
  * variables whose exponent is zero in every term are dropped,
  * variable names are sorted, and exponent tuples follow that order.

Canonical form makes structural equality coincide with mathematical
equality, so polynomials can be compared with ``==`` and used as dict keys.

The module also provides the quantum integer ``qint`` and the Gaussian
binomial ``qbinom``, both with an arbitrary monomial base, plus a check of
the q-binomial theorem used by the self-test suite.
"""

from fractions import Fraction


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("coefficient must be an int or Fraction, got %r" % (value,))


class LaurentPoly:
    """An immutable Laurent polynomial with Fraction coefficients.

    >>> q = LaurentPoly.variable("q")
    >>> (q + 1) * (q - 1)
    LaurentPoly('-1 + q^2')
    >>> q ** -2
    LaurentPoly('q^-2')
    >>> (2 * q + q) * Fraction(1, 3)
    LaurentPoly('q')
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables=(), terms=None):
        variables = tuple(variables)
        if terms is None:
            terms = {}
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError("exponent tuple %r does not match variables %r"
                                 % (exps, variables))
            coeff = _as_fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if not clean[exps]:
                    del clean[exps]
        # Drop variables that never appear with a nonzero exponent.
        used = [any(exps[i] for exps in clean) for i in range(len(variables))]
        if not all(used):
            keep = [i for i, u in enumerate(used) if u]
            variables = tuple(variables[i] for i in keep)
            clean = {tuple(exps[i] for i in keep): c for exps, c in clean.items()}
        # Sort variables by name and permute exponents to match.
        order = sorted(range(len(variables)), key=lambda i: variables[i])
        if order != list(range(len(variables))):
            variables = tuple(variables[i] for i in order)
            clean = {tuple(exps[i] for i in order): c for exps, c in clean.items()}
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---------------------------------------------------------------- constructors

    @classmethod
    def constant(cls, value):
        value = _as_fraction(value)
        if not value:
            return cls()
        return cls((), {(): value})

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, coeff, powers):
        """Build coeff * prod(var**exp) from a {name: exponent} mapping."""
        coeff = _as_fraction(coeff)
        names = tuple(sorted(powers))
        exps = tuple(int(powers[n]) for n in names)
        return cls(names, {exps: coeff})

    # ---------------------------------------------------------------- predicates

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        """Return the polynomial's value as a Fraction if it is constant."""
        if not self.terms:
            return Fraction(0)
        if self.variables:
            raise ValueError("polynomial %s is not constant" % self)
        return self.terms[()]

    # ---------------------------------------------------------------- arithmetic

    def _aligned(self, other):
        """Return (variables, self terms, other terms) over a merged variable set."""
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = tuple(sorted(set(self.variables) | set(other.variables)))

        def lift(poly):
            pos = {name: merged.index(name) for name in poly.variables}
            out = {}
            for exps, coeff in poly.terms.items():
                full = [0] * len(merged)
                for i, e in enumerate(exps):
                    full[pos[poly.variables[i]]] = e
                out[tuple(full)] = coeff
            return out

        return merged, lift(self), lift(other)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables, a, b = self._aligned(other)
        terms = dict(a)
        for exps, coeff in b.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return LaurentPoly(variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables,
                           {exps: -coeff for exps, coeff in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables, a, b = self._aligned(other)
        terms = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                if exps in terms:
                    terms[exps] += prod
                else:
                    terms[exps] = prod
        return LaurentPoly(variables, terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, int):
            return NotImplemented
        if power == 0:
            return LaurentPoly.constant(1)
        if power < 0:
            if not self.is_monomial():
                raise ValueError("negative powers are only defined for monomials")
            ((exps, coeff),) = self.terms.items()
            inv = LaurentPoly(self.variables, {tuple(-e for e in exps): 1 / coeff})
            return inv ** (-power)
        out = LaurentPoly.constant(1)
        base = self
        n = power
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # ---------------------------------------------------------------- substitution

    def substitute(self, name, image):
        """Replace a variable by a monomial or a rational constant.

        The image may be an int, a Fraction, or a monomial LaurentPoly
        (general polynomial images would need polynomial powers of negative
        exponents, which do not exist in the Laurent ring).
        """
        if name not in self.variables:
            return self
        image = self._coerce(image)
        if image is None:
            raise TypeError("substitution image must be a number or LaurentPoly")
        if not image.is_monomial() and not image.is_zero():
            raise ValueError("substitution image must be a monomial or constant")
        idx = self.variables.index(name)
        rest = self.variables[:idx] + self.variables[idx + 1:]
        out = LaurentPoly()
        for exps, coeff in self.terms.items():
            e = exps[idx]
            stripped = LaurentPoly(rest, {exps[:idx] + exps[idx + 1:]: coeff})
            if e == 0:
                out = out + stripped
                continue
            if image.is_zero():
                if e < 0:
                    raise ZeroDivisionError("zero substituted at a negative power")
                continue
            out = out + stripped * image ** e
        return out

    def evaluate(self, values):
        """Evaluate at a {name: rational} assignment covering every variable."""
        out = Fraction(0)
        for exps, coeff in self.terms.items():
            prod = coeff
            for name, e in zip(self.variables, exps):
                if name not in values:
                    raise ValueError("no value supplied for variable %r" % name)
                base = Fraction(values[name])
                if e < 0:
                    prod *= Fraction(1) / base ** (-e)
                else:
                    prod *= base ** e
            out += prod
        return out

    # ---------------------------------------------------------------- comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            h = hash((self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # ---------------------------------------------------------------- printing

    @staticmethod
    def _coeff_str(coeff):
        if coeff.denominator == 1:
            return str(coeff.numerator)
        return "%d/%d" % (coeff.numerator, coeff.denominator)

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda exps: (sum(exps), exps))
        parts = []
        for exps in keys:
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 0:
                    continue
                if e == 1:
                    factors.append(name)
                else:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                parts.append(self._coeff_str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([self._coeff_str(coeff)] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % str(self)


def _as_base(base):
    """Accept a variable name or a monomial LaurentPoly as the q-base."""
    if isinstance(base, str):
        return LaurentPoly.variable(base)
    if isinstance(base, LaurentPoly):
        if not base.is_monomial():
            raise ValueError("base must be a monomial, got %s" % base)
        ((exps, coeff),) = base.terms.items()
        if coeff != 1:
            raise ValueError("base must have coefficient 1, got %s" % base)
        return base
    raise TypeError("base must be a variable name or a monomial LaurentPoly")


def qint(n, base="q"):
    """The quantum integer 1 + base + ... + base^(n-1).

    >>> str(qint(3))
    '1 + q + q^2'
    >>> str(qint(0))
    '0'
    """
    if n < 0:
        raise ValueError("quantum integers need n >= 0, got %d" % n)
    base = _as_base(base)
    out = LaurentPoly()
    power = LaurentPoly.constant(1)
    for _ in range(n):
        out = out + power
        power = power * base
    return out


_QBINOM_CACHE = {}


def qbinom(m, n, base="q"):
    """The Gaussian binomial coefficient [m choose n] in the given base.

    Computed by the Pascal recursion
        [k+1 choose i] = base^i [k choose i] + [k choose i-1],
    which never divides, so it works verbatim for any monomial base.

    >>> str(qbinom(4, 2))
    '1 + q + 2*q^2 + q^3 + q^4'
    """
    if n < 0 or m < 0:
        raise ValueError("qbinom needs m, n >= 0")
    if n > m:
        raise ValueError("qbinom needs n <= m, got m=%d n=%d" % (m, n))
    base = _as_base(base)
    key = (m, n, base)
    if key in _QBINOM_CACHE:
        return _QBINOM_CACHE[key]
    row = [LaurentPoly.constant(1)]
    for k in range(1, m + 1):
        new = [LaurentPoly.constant(1)]
        for i in range(1, k):
            new.append(base ** i * row[i] + row[i - 1])
        new.append(LaurentPoly.constant(1))
        for i, value in enumerate(new):
            _QBINOM_CACHE[(k, i, base)] = value
        row = new
    _QBINOM_CACHE.setdefault(key, row[n] if m else LaurentPoly.constant(1))
    return _QBINOM_CACHE[key]


def qbinomial_theorem_check(n):
    """Verify the Gaussian binomial theorem at a given n.

    Expands prod_{i=0}^{n-1} (a - q^i z) and compares it with
    sum_i (-1)^i [n choose i]_q q^(i(i-1)/2) a^(n-i) z^i.
    Returns True on success, raises AssertionError otherwise.
    """
    a = LaurentPoly.variable("a")
    z = LaurentPoly.variable("z")
    q = LaurentPoly.variable("q")
    lhs = LaurentPoly.constant(1)
    for i in range(n):
        lhs = lhs * (a - q ** i * z)
    rhs = LaurentPoly()
    for i in range(n + 1):
        sign = -1 if i % 2 else 1
        rhs = rhs + (sign * qbinom(n, i, "q") * q ** (i * (i - 1) // 2)
                     * a ** (n - i) * z ** i)
    assert lhs == rhs, "q-binomial theorem failed at n=%d" % n
    return True
