"""
Exact integer polynomials in x and y.

A polynomial is a map from exponent pairs ``(i, j)`` to nonzero integer
coefficients, kept as a tuple of ``((i, j), c)`` sorted by descending
exponent pair so that equal polynomials compare and hash equal.
"""
from collections import Counter
from dataclasses import dataclass
from math import comb

from matroid_lab.exceptions import DefinitionError


def _canonical(terms):
    return tuple(sorted(((k, c) for k, c in terms.items() if c), reverse=True))


@dataclass(frozen=True)
class BivariatePolynomial:
    coefficients: tuple = ()

    @classmethod
    def from_dict(cls, terms):
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise DefinitionError(f"negative exponent in x^{i} y^{j}")
        return cls(_canonical(terms))

    @classmethod
    def constant(cls, c):
        return cls.from_dict({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls.from_dict({(i, j): c})

    @classmethod
    def from_triples(cls, triples):
        terms = Counter()
        for i, j, c in triples:
            terms[i, j] += c
        return cls.from_dict(terms)

    def as_dict(self):
        return dict(self.coefficients)

    def coefficient(self, i, j):
        return self.as_dict().get((i, j), 0)

    @property
    def degree(self):
        """Largest i + j over the terms; -1 for the zero polynomial"""
        return max((i + j for (i, j), _ in self.coefficients), default=-1)

    def __bool__(self):
        return bool(self.coefficients)

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = Counter(self.as_dict())
        for k, c in other.coefficients:
            terms[k] += c
        return BivariatePolynomial(_canonical(terms))

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial(tuple((k, -c) for k, c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = Counter()
        for (i1, j1), c1 in self.coefficients:
            for (i2, j2), c2 in other.coefficients:
                terms[i1 + i2, j1 + j2] += c1 * c2
        return BivariatePolynomial(_canonical(terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coefficients)

    def swap_variables(self):
        return BivariatePolynomial.from_dict({(j, i): c for (i, j), c in self.coefficients})

    def to_triples(self):
        return [[i, j, c] for (i, j), c in self.coefficients]

    def __str__(self):
        if not self.coefficients:
            return '0'
        out = ''
        for n, ((i, j), c) in enumerate(self.coefficients):
            factors = [f"x^{i}" if i > 1 else 'x'] if i else []
            factors += [f"y^{j}" if j > 1 else 'y'] if j else []
            magnitude = abs(c)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            term = ' '.join(factors)
            if n == 0:
                out = f"-{term}" if c < 0 else term
            else:
                out += f" - {term}" if c < 0 else f" + {term}"
        return out

    def __repr__(self):
        return f"BivariatePolynomial({self})"


ZERO = BivariatePolynomial()
ONE = BivariatePolynomial.constant(1)
X = BivariatePolynomial.monomial(1, 0)
Y = BivariatePolynomial.monomial(0, 1)


def shifted_monomial(a, b):
    """(x - 1)^a (y - 1)^b, expanded"""
    terms = {}
    for i in range(a + 1):
        for j in range(b + 1):
            terms[i, j] = comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
    return BivariatePolynomial.from_dict(terms)


def sum_shifted(counts):
    """Sum of ``count`` copies of (x - 1)^a (y - 1)^b over a Counter of ``(a, b)``"""
    total = ZERO
    for (a, b), count in sorted(counts.items()):
        total = total + count * shifted_monomial(a, b)
    return total
