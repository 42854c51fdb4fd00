"""Truncated power series over exact-rational weighted polynomials.

A ``GradedSeries`` is a polynomial in one distinguished variable ``x`` of
degree at most ``N`` whose coefficients are polynomials in the auxiliary
variables of a ``VariableTable`` of total weight at most ``W``. Both caps are
ideals, so truncating after every product is a ring homomorphism and every
identity proved over formal series holds coefficientwise in the truncation.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from shared.errors import SeriesMismatchError, SeriesPreconditionError

from .variables import VariableTable

Exponents = Tuple[int, ...]
Key = Tuple[int, Exponents]
Polynomial = Dict[Exponents, Fraction]
Scalar = Union[Fraction, int]


def _pmul(p: Mapping[Exponents, Fraction], q: Mapping[Exponents, Fraction], variables: VariableTable, cap: int) -> Polynomial:
    out: Polynomial = {}
    right = sorted(((variables.weight_of(e), e, c) for e, c in q.items()), key=lambda t: t[0])
    for e1, c1 in p.items():
        budget = cap - variables.weight_of(e1)
        for w2, e2, c2 in right:
            if w2 > budget:
                break
            key = tuple(map(operator.add, e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _padd(p: Mapping[Exponents, Fraction], q: Mapping[Exponents, Fraction], factor: Fraction = Fraction(1)) -> Polynomial:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + factor * c
    return {e: c for e, c in out.items() if c}


def _pscale(p: Mapping[Exponents, Fraction], factor: Fraction) -> Polynomial:
    if not factor:
        return {}
    return {e: c * factor for e, c in p.items()}


class GradedSeries:
    """Immutable truncated series ``Σ c[d, e] x^d aux^e``.

    Args:
        variables: Auxiliary variables and their weights.
        trunc_degree: Cap ``N`` on the degree in the distinguished variable.
        trunc_weight: Cap ``W`` on the total auxiliary weight.
        terms: Coefficients keyed by ``(d, e)``; terms outside the caps and
            zero coefficients are dropped.
        main: Display name of the distinguished variable.
    """

    __slots__ = ("variables", "trunc_degree", "trunc_weight", "main", "_terms", "_slices")

    def __init__(
        self,
        variables: VariableTable,
        trunc_degree: int,
        trunc_weight: int,
        terms: Optional[Mapping[Key, Scalar]] = None,
        main: str = "x",
    ):
        if trunc_degree < 0 or trunc_weight < 0:
            raise ValueError(
                f"Truncation caps must be nonnegative, got N={trunc_degree}, W={trunc_weight}"
            )
        self.variables = variables
        self.trunc_degree = trunc_degree
        self.trunc_weight = trunc_weight
        self.main = main
        width = len(variables)
        kept: Dict[Key, Fraction] = {}
        for (d, e), value in (terms or {}).items():
            e = tuple(e)
            if len(e) != width:
                raise ValueError(f"Exponent vector {e} does not match {width} auxiliary variables")
            if d < 0 or any(x < 0 for x in e):
                raise ValueError(f"Negative exponent in term {(d, e)}")
            if d > trunc_degree or variables.weight_of(e) > trunc_weight:
                continue
            value = Fraction(value)
            if value:
                kept[(d, e)] = value
        self._terms = kept
        self._slices: Optional[List[Polynomial]] = None

    # Construction

    @classmethod
    def zero(cls, variables: VariableTable, trunc_degree: int, trunc_weight: int, main: str = "x") -> "GradedSeries":
        return cls(variables, trunc_degree, trunc_weight, main=main)

    @classmethod
    def constant(cls, value: Scalar, variables: VariableTable, trunc_degree: int, trunc_weight: int, main: str = "x") -> "GradedSeries":
        return cls(variables, trunc_degree, trunc_weight, {(0, variables.zero_exponent): value}, main=main)

    @classmethod
    def main_variable(cls, variables: VariableTable, trunc_degree: int, trunc_weight: int, main: str = "x") -> "GradedSeries":
        return cls(variables, trunc_degree, trunc_weight, {(1, variables.zero_exponent): 1}, main=main)

    @classmethod
    def aux_variable(cls, name: str, variables: VariableTable, trunc_degree: int, trunc_weight: int, main: str = "x") -> "GradedSeries":
        return cls(variables, trunc_degree, trunc_weight, {(0, variables.unit_vector(name)): 1}, main=main)

    def like(self, terms: Optional[Mapping[Key, Scalar]] = None) -> "GradedSeries":
        """A series in the same ring as ``self`` with the given terms."""
        return GradedSeries(self.variables, self.trunc_degree, self.trunc_weight, terms, main=self.main)

    def one(self) -> "GradedSeries":
        return self.like({(0, self.variables.zero_exponent): 1})

    def main_var(self) -> "GradedSeries":
        return self.like({(1, self.variables.zero_exponent): 1})

    def aux(self, name: str) -> "GradedSeries":
        return self.like({(0, self.variables.unit_vector(name)): 1})

    # Inspection

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Key, Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, d: int, exponents: Optional[Exponents] = None) -> Fraction:
        e = self.variables.zero_exponent if exponents is None else tuple(exponents)
        return self._terms.get((d, e), Fraction(0))

    def coefficient_of(self, d: int, **powers: int) -> Fraction:
        """Coefficient of ``x^d`` times the named auxiliary monomial, e.g. ``s1=2``."""
        e = [0] * len(self.variables)
        for name, power in powers.items():
            e[self.variables.index(name)] = power
        return self.coefficient(d, tuple(e))

    def coefficient_series(self, d: int) -> "GradedSeries":
        """The auxiliary polynomial in front of ``x^d``, as a degree-0 series."""
        return self.like({(0, e): c for e, c in self._slice(d).items()})

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        return max((d for d, _ in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((d for d, _ in self._terms), default=self.trunc_degree + 1)

    def weight_of(self, key: Key) -> int:
        return self.variables.weight_of(key[1])

    def first_term(self) -> Optional[Tuple[Key, Fraction]]:
        """The smallest ``(d, e)`` key with a nonzero coefficient, if any."""
        if not self._terms:
            return None
        key = min(self._terms)
        return key, self._terms[key]

    def _slices_list(self) -> List[Polynomial]:
        if self._slices is None:
            slices: List[Polynomial] = [{} for _ in range(self.trunc_degree + 1)]
            for (d, e), c in self._terms.items():
                slices[d][e] = c
            self._slices = slices
        return self._slices

    def _slice(self, d: int) -> Polynomial:
        if d < 0 or d > self.trunc_degree:
            return {}
        return self._slices_list()[d]

    @classmethod
    def _from_slices(cls, template: "GradedSeries", slices: List[Polynomial]) -> "GradedSeries":
        return template.like({(d, e): c for d, poly in enumerate(slices) for e, c in poly.items()})

    def _require_same_ring(self, other: "GradedSeries") -> None:
        if not isinstance(other, GradedSeries):
            raise TypeError(f"Expected a GradedSeries, got {type(other).__name__}")
        if (
            self.variables != other.variables
            or self.trunc_degree != other.trunc_degree
            or self.trunc_weight != other.trunc_weight
        ):
            raise SeriesMismatchError(
                "Series live in different rings: "
                f"(N={self.trunc_degree}, W={self.trunc_weight}, vars={self.variables.names}) vs "
                f"(N={other.trunc_degree}, W={other.trunc_weight}, vars={other.variables.names})"
            )

    # Ring operations

    def __add__(self, other: Union["GradedSeries", Scalar]) -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            other = self.one().scale(other)
        self._require_same_ring(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return self.like(out)

    __radd__ = __add__

    def __neg__(self) -> "GradedSeries":
        return self.like({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: Union["GradedSeries", Scalar]) -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            other = self.one().scale(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "GradedSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "GradedSeries":
        factor = Fraction(factor)
        return self.like({key: c * factor for key, c in self._terms.items()})

    def __mul__(self, other: Union["GradedSeries", Scalar]) -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        self._require_same_ring(other)
        N, W = self.trunc_degree, self.trunc_weight
        variables = self.variables
        right = [
            sorted(((variables.weight_of(e), e, c) for e, c in poly.items()), key=lambda t: t[0])
            for poly in other._slices_list()
        ]
        out: Dict[Key, Fraction] = {}
        for i, left in enumerate(self._slices_list()):
            if not left:
                continue
            for e1, c1 in left.items():
                budget = W - variables.weight_of(e1)
                for j in range(N - i + 1):
                    for w2, e2, c2 in right[j]:
                        if w2 > budget:
                            break
                        key = (i + j, tuple(map(operator.add, e1, e2)))
                        out[key] = out.get(key, 0) + c1 * c2
        return self.like(out)

    def __rmul__(self, other: Scalar) -> "GradedSeries":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "GradedSeries":
        if exponent < 0:
            raise SeriesPreconditionError("Negative integer powers need div()")
        result, base = self.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other: Union["GradedSeries", Scalar]) -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            return self.scale(Fraction(1) / Fraction(other))
        return div(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.trunc_degree == other.trunc_degree
            and self.trunc_weight == other.trunc_weight
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    # Truncation and shifts

    def truncate(self, degree: Optional[int] = None, weight: Optional[int] = None) -> "GradedSeries":
        """Move to the ring with caps ``degree``/``weight`` (unchanged when None)."""
        return GradedSeries(
            self.variables,
            self.trunc_degree if degree is None else degree,
            self.trunc_weight if weight is None else weight,
            self._terms,
            main=self.main,
        )

    def shift_main(self, k: int) -> "GradedSeries":
        """Multiply by ``x^k``; a negative ``k`` divides and needs ``x^-k`` to divide exactly."""
        if k < 0 and self.min_degree() < -k:
            raise SeriesPreconditionError(f"Series is not divisible by {self.main}^{-k}")
        return self.like({(d + k, e): c for (d, e), c in self._terms.items()})

    # Calculus

    def derive_main(self) -> "GradedSeries":
        return self.like({(d - 1, e): c * d for (d, e), c in self._terms.items() if d > 0})

    def derive_aux(self, name: str) -> "GradedSeries":
        position = self.variables.index(name)
        out = {}
        for (d, e), c in self._terms.items():
            if e[position]:
                lowered = e[:position] + (e[position] - 1,) + e[position + 1 :]
                out[(d, lowered)] = c * e[position]
        return self.like(out)

    def integrate_main(self) -> "GradedSeries":
        """The antiderivative in ``x`` with zero constant term."""
        if self.max_degree() >= self.trunc_degree:
            raise SeriesPreconditionError(
                f"integrate_main needs degree <= {self.trunc_degree - 1}, got {self.max_degree()}"
            )
        return self.like({(d + 1, e): c / (d + 1) for (d, e), c in self._terms.items()})

    def euler_main(self) -> "GradedSeries":
        """Apply ``x d/dx``."""
        return self.like({(d, e): c * d for (d, e), c in self._terms.items()})

    # Transcendental operations

    def _nilpotent_exp(self, poly: Polynomial) -> Polynomial:
        zero = self.variables.zero_exponent
        result: Polynomial = {zero: Fraction(1)}
        term: Polynomial = {zero: Fraction(1)}
        k = 0
        while True:
            k += 1
            term = _pscale(_pmul(term, poly, self.variables, self.trunc_weight), Fraction(1, k))
            if not term:
                return result
            result = _padd(result, term)

    def _unit_inverse(self, poly: Polynomial) -> Polynomial:
        zero = self.variables.zero_exponent
        c = poly.get(zero, 0)
        if not c:
            raise SeriesPreconditionError(
                "Series is not invertible: its constant coefficient is zero"
            )
        rest = {e: -v / c for e, v in poly.items() if e != zero}
        result: Polynomial = {zero: Fraction(1)}
        term: Polynomial = {zero: Fraction(1)}
        while True:
            term = _pmul(term, rest, self.variables, self.trunc_weight)
            if not term:
                return _pscale(result, 1 / Fraction(c))
            result = _padd(result, term)

    def exp(self) -> "GradedSeries":
        """Truncated exponential; the constant coefficient must vanish."""
        zero = self.variables.zero_exponent
        if self._terms.get((0, zero)):
            raise SeriesPreconditionError("exp_series needs a zero constant coefficient")
        f = self._slices_list()
        variables, W = self.variables, self.trunc_weight
        g: List[Polynomial] = [self._nilpotent_exp(f[0])]
        for n in range(1, self.trunc_degree + 1):
            acc: Polynomial = {}
            for k in range(1, n + 1):
                if f[k] and g[n - k]:
                    acc = _padd(acc, _pmul(f[k], g[n - k], variables, W), Fraction(k))
            g.append(_pscale(acc, Fraction(1, n)))
        return self._from_slices(self, g)

    def log(self) -> "GradedSeries":
        """Truncated logarithm; the degree-0 part must be exactly 1."""
        zero = self.variables.zero_exponent
        a = self._slices_list()
        if a[0] != {zero: 1}:
            raise SeriesPreconditionError("log_series needs constant coefficient exactly 1")
        variables, W = self.variables, self.trunc_weight
        log_slices: List[Polynomial] = [{}]
        for n in range(1, self.trunc_degree + 1):
            acc: Polynomial = {}
            for k in range(1, n):
                if log_slices[k] and a[n - k]:
                    acc = _padd(acc, _pmul(log_slices[k], a[n - k], variables, W), Fraction(k))
            log_slices.append(_padd(a[n], acc, Fraction(-1, n)))
        return self._from_slices(self, log_slices)

    def compose(self, inner: "GradedSeries") -> "GradedSeries":
        """Substitute ``inner`` for the distinguished variable (Horner scheme).

        ``inner`` must have no degree-0 part.
        """
        self._require_same_ring(inner)
        if inner._slice(0):
            raise SeriesPreconditionError("compose needs an inner series without degree-0 part")
        result = self.coefficient_series(self.trunc_degree)
        for k in range(self.trunc_degree - 1, -1, -1):
            result = result * inner + self.coefficient_series(k)
        return result

    def revert(self) -> "GradedSeries":
        """Compositional inverse of ``t + O(t²)`` by fixed-point iteration."""
        zero = self.variables.zero_exponent
        if self._slice(0):
            raise SeriesPreconditionError("revert needs a zero constant coefficient")
        if self.trunc_degree >= 1 and self._slice(1) != {zero: 1}:
            raise SeriesPreconditionError("revert needs the degree-1 coefficient to be exactly 1")
        t = self.main_var()
        remainder = self - t
        inverse = t
        # each pass fixes one more degree
        for _ in range(max(self.trunc_degree - 1, 0)):
            inverse = t - remainder.compose(inverse)
        return inverse

    # Rendering

    def monomial_text(self, d: int, e: Exponents) -> str:
        factors = []
        for name, power in zip(self.variables.names, e):
            if power:
                factors.append(name if power == 1 else f"{name}^{power}")
        if d:
            factors.append(self.main if d == 1 else f"{self.main}^{d}")
        return "*".join(factors)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (d, e), c in self.sorted_terms():
            monomial = self.monomial_text(d, e)
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"GradedSeries(N={self.trunc_degree}, W={self.trunc_weight}, {self.to_text()})"

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self.sorted_terms())


def add(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a + b


def sub(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a - b


def mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    return a * b


def div(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """Return q with ``q * b = a`` up to truncation.

    Raises:
        SeriesPreconditionError: If the constant coefficient of ``b`` is zero.
    """
    a._require_same_ring(b)
    bs = b._slices_list()
    inverse0 = b._unit_inverse(bs[0])
    variables, W = a.variables, a.trunc_weight
    quotient: List[Polynomial] = []
    for n in range(a.trunc_degree + 1):
        acc = dict(a._slice(n))
        for k in range(1, n + 1):
            if bs[k] and quotient[n - k]:
                acc = _padd(acc, _pmul(bs[k], quotient[n - k], variables, W), Fraction(-1))
        quotient.append(_pmul(inverse0, acc, variables, W))
    return GradedSeries._from_slices(a, quotient)


def derive_main(a: GradedSeries) -> GradedSeries:
    return a.derive_main()


def derive_aux(a: GradedSeries, var: str) -> GradedSeries:
    return a.derive_aux(var)


def integrate_main(a: GradedSeries) -> GradedSeries:
    return a.integrate_main()


def exp_series(a: GradedSeries) -> GradedSeries:
    return a.exp()


def log_series(a: GradedSeries) -> GradedSeries:
    return a.log()


def compose(outer: GradedSeries, inner: GradedSeries) -> GradedSeries:
    return outer.compose(inner)


def revert(a: GradedSeries) -> GradedSeries:
    return a.revert()


def pow_formal(base: GradedSeries, exponent_poly: GradedSeries) -> GradedSeries:
    """Return ``exp(exponent_poly * log(base))``.

    Raises:
        SeriesPreconditionError: If ``exponent_poly`` involves the distinguished
            variable or ``base`` does not start with 1.
    """
    base._require_same_ring(exponent_poly)
    if exponent_poly.max_degree() > 0:
        raise SeriesPreconditionError("pow_formal needs an exponent free of the distinguished variable")
    if exponent_poly.is_zero():
        return base.one()
    return (exponent_poly * base.log()).exp()
