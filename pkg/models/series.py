# models/series.py
# truncated multivariate power series with exact rational coefficients

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from models.errors import ConversionFailure


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """
    sum of c * x1^e1 ... xk^ek over exponent tuples of total degree <= order.
    zero coefficients are never stored.
    """
    variables: tuple[str, ...]
    order: int
    coefficients: dict[tuple[int, ...], Fraction]

    # --- construction ---

    @classmethod
    def from_terms(cls, variables, order: int, terms) -> "TruncatedSeries":
        coefficients = {}
        for exps, c in (terms.items() if isinstance(terms, dict) else terms):
            if sum(exps) > order:
                continue
            total = coefficients.get(exps, Fraction(0)) + Fraction(c)
            if total:
                coefficients[exps] = total
            else:
                coefficients.pop(exps, None)
        return cls(tuple(variables), order, coefficients)

    @classmethod
    def zero(cls, variables, order: int) -> "TruncatedSeries":
        return cls(tuple(variables), order, {})

    @classmethod
    def constant(cls, variables, order: int, value=1) -> "TruncatedSeries":
        return cls.from_terms(variables, order, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, order: int, name: str) -> "TruncatedSeries":
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls.from_terms(variables, order, {exps: 1})

    # --- inspection ---

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def coefficient(self, *exps: int) -> Fraction:
        return self.coefficients.get(tuple(exps), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(*((0,) * self.nvars))

    def valuation(self) -> int | None:
        if not self.coefficients:
            return None
        return min(sum(e) for e in self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """terms sorted by total degree, then lexicographically"""
        return sorted(self.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_rows(self) -> list[list[int]]:
        """[[e1, ..., ek, numerator, denominator], ...] in deterministic order"""
        return [list(e) + [c.numerator, c.denominator] for e, c in self.terms()]

    def univariate_coefficients(self) -> list[Fraction]:
        if self.nvars != 1:
            raise ConversionFailure("univariate_coefficients needs a one-variable series")
        return [self.coefficient(k) for k in range(self.order + 1)]

    # --- arithmetic ---

    def _check(self, other: "TruncatedSeries"):
        if self.variables != other.variables:
            raise ConversionFailure(f"variables differ: {self.variables} vs {other.variables}")

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        return TruncatedSeries.constant(self.variables, self.order, other)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._lift(other)
        order = min(self.order, other.order)
        return TruncatedSeries.from_terms(
            self.variables, order, list(self.coefficients.items()) + list(other.coefficients.items())
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.order, {e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries.from_terms(
                self.variables, self.order, {e: v * c for e, v in self.coefficients.items()}
            )
        self._check(other)
        order = min(self.order, other.order)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coefficients.items():
            d1 = sum(e1)
            if d1 > order:
                continue
            for e2, c2 in other.coefficients.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return TruncatedSeries.from_terms(self.variables, order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.constant(self.variables, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """1/self, needs a nonzero constant term"""
        c0 = self.constant_term
        if not c0:
            raise ConversionFailure("series with zero constant term has no inverse")
        # 1/(c0 (1 - u)) = (1/c0) sum u^k with u of valuation >= 1
        u = TruncatedSeries.constant(self.variables, self.order) - self * (1 / c0)
        result = TruncatedSeries.constant(self.variables, self.order)
        power = TruncatedSeries.constant(self.variables, self.order)
        for _ in range(self.order):
            power = power * u
            if power.is_zero():
                break
            result = result + power
        return result * (1 / c0)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.variables != other.variables:
            return False
        order = min(self.order, other.order)
        return self.truncate(order).coefficients == other.truncate(order).coefficients

    # --- transformations ---

    def truncate(self, order: int) -> "TruncatedSeries":
        order = min(order, self.order)
        return TruncatedSeries(
            self.variables, order, {e: c for e, c in self.coefficients.items() if sum(e) <= order}
        )

    def swap(self) -> "TruncatedSeries":
        """exchange the two variables of a bivariate series"""
        return TruncatedSeries(self.variables, self.order, {(b, a): c for (a, b), c in self.coefficients.items()})

    def diagonal(self, name: str = "z") -> "TruncatedSeries":
        """set every variable equal to a single variable"""
        return TruncatedSeries.from_terms((name,), self.order, [((sum(e),), c) for e, c in self.coefficients.items()])

    def substitute(self, values: tuple["TruncatedSeries", ...]) -> "TruncatedSeries":
        """
        compose: replace variable i by values[i]. the substituted series must have
        no constant term, otherwise the truncation would not be exact.
        """
        if len(values) != self.nvars:
            raise ConversionFailure("one substitution per variable is required")
        for v in values:
            if v.constant_term:
                raise ConversionFailure("substituted series must have zero constant term")
        return evaluate_polynomial(self.coefficients, values)


def evaluate_polynomial(coefficients: dict[tuple[int, ...], object], values: tuple[TruncatedSeries, ...]) -> TruncatedSeries:
    """evaluate a polynomial {exponents: coefficient} at series arguments"""
    target = values[0]
    order = min(v.order for v in values)
    max_exp = [0] * len(values)
    for e in coefficients:
        for i, k in enumerate(e):
            max_exp[i] = max(max_exp[i], k)
    powers = []
    for v, top in zip(values, max_exp):
        row = [TruncatedSeries.constant(target.variables, order)]
        for _ in range(top):
            row.append(row[-1] * v)
        powers.append(row)
    total = TruncatedSeries.zero(target.variables, order)
    for e, c in coefficients.items():
        term = TruncatedSeries.constant(target.variables, order, Fraction(c))
        for i, k in enumerate(e):
            if k:
                term = term * powers[i][k]
        total = total + term
    return total


def monomials_up_to(nvars: int, order: int):
    for e in product(range(order + 1), repeat=nvars):
        if sum(e) <= order:
            yield e
