# models/rational_function.py
# exact rational functions in the motzkin series variables

from dataclasses import dataclass

from sympy import ZZ, field

from models.errors import ConversionFailure
from models.series import TruncatedSeries, evaluate_polynomial

# D_black, D_white: the two primitive-walk series; D: their common specialization
BIVARIATE_FIELD, D_BLACK, D_WHITE = field("Db,Dw", ZZ)
UNIVARIATE_FIELD, D_UNI = field("D", ZZ)


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """
    wrapper around a sympy fraction-field element over ZZ.
    numerator and denominator are coprime, the denominator has a positive
    leading coefficient (lex order, D_black before D_white).
    """
    value: object  # sympy FracElement

    # --- construction ---

    @classmethod
    def bivariate(cls, value) -> "RationalFunction":
        return cls(BIVARIATE_FIELD(value))

    @classmethod
    def univariate(cls, value) -> "RationalFunction":
        return cls(UNIVARIATE_FIELD(value))

    @classmethod
    def one(cls, nvars: int = 2) -> "RationalFunction":
        return cls((BIVARIATE_FIELD if nvars == 2 else UNIVARIATE_FIELD).one)

    @classmethod
    def monomial(cls, exponents: tuple[int, ...], coefficient: int = 1) -> "RationalFunction":
        """x^a y^b with possibly negative exponents"""
        K = BIVARIATE_FIELD if len(exponents) == 2 else UNIVARIATE_FIELD
        num = {tuple(max(e, 0) for e in exponents): coefficient}
        den = {tuple(max(-e, 0) for e in exponents): 1}
        return cls(K.new(K.ring.from_dict(num), K.ring.from_dict(den)))

    @classmethod
    def from_polys(cls, numerator: dict, denominator: dict, nvars: int = 2) -> "RationalFunction":
        K = BIVARIATE_FIELD if nvars == 2 else UNIVARIATE_FIELD
        return cls(K.new(K.ring.from_dict(dict(numerator)), K.ring.from_dict(dict(denominator))))

    # --- inspection ---

    @property
    def nvars(self) -> int:
        return self.value.field.ngens

    def _normalized(self):
        num, den = self.value.numer, self.value.denom
        if den.LC < 0:
            num, den = -num, -den
        return num, den

    @property
    def numerator(self) -> dict[tuple[int, ...], int]:
        return {m: int(c) for m, c in self._normalized()[0].terms()}

    @property
    def denominator(self) -> dict[tuple[int, ...], int]:
        return {m: int(c) for m, c in self._normalized()[1].terms()}

    def is_zero(self) -> bool:
        return not self.value.numer

    def to_dump(self) -> dict:
        """two polynomial dumps, terms as [e1, ..., ek, coefficient]"""
        def rows(poly):
            return [list(m) + [c] for m, c in sorted(poly.items())]
        return {"numerator": rows(self.numerator), "denominator": rows(self.denominator)}

    def to_expr(self):
        return self.value.as_expr()

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other.value
        return self.value.field(other)

    def __add__(self, other):
        return RationalFunction(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return RationalFunction(self.value - self._coerce(other))

    def __rsub__(self, other):
        return RationalFunction(self._coerce(other) - self.value)

    def __mul__(self, other):
        return RationalFunction(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RationalFunction(self.value / self._coerce(other))

    def __rtruediv__(self, other):
        return RationalFunction(self._coerce(other) / self.value)

    def __neg__(self):
        return RationalFunction(-self.value)

    def __pow__(self, k: int):
        return RationalFunction(self.value ** k)

    def __eq__(self, other) -> bool:
        """cross-multiplication, so equality never depends on normalization"""
        if not isinstance(other, RationalFunction):
            other = RationalFunction(self._coerce(other))
        a, b = self.value, other.value
        return a.numer * b.denom == b.numer * a.denom

    # --- substitutions ---

    def swap(self) -> "RationalFunction":
        """f(y, x)"""
        if self.nvars == 1:
            return self
        num, den = self._normalized()
        return RationalFunction.from_polys(
            {(b, a): c for (a, b), c in num.terms()},
            {(b, a): c for (a, b), c in den.terms()},
        )

    def par_bar(self) -> "RationalFunction":
        """f(1/x, 1/y), by reversing numerator and denominator with degree padding"""
        num, den = self._normalized()
        rev_num, shift_num = _reverse(num, self.nvars)
        rev_den, shift_den = _reverse(den, self.nvars)
        # p(1/x) = x^-deg(p) rev(p)
        exponents = tuple(sd - sn for sn, sd in zip(shift_num, shift_den))
        base = RationalFunction.from_polys(rev_num, rev_den, self.nvars)
        return base * RationalFunction.monomial(exponents)

    def times_bar(self) -> "RationalFunction":
        """f(1/y, 1/x)"""
        return self.par_bar().swap()

    def circ(self) -> "RationalFunction":
        """f(x, y) + f(y, x)"""
        return self + self.swap()

    def diagonal(self) -> "RationalFunction":
        """specialize D_black = D_white = D"""
        if self.nvars == 1:
            return self
        num, den = self._normalized()
        return RationalFunction.from_polys(
            _collapse(num.terms()), _collapse(den.terms()), nvars=1
        )

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_par_symmetric(self) -> bool:
        return self == self.par_bar()

    def is_times_symmetric(self) -> bool:
        return self == self.times_bar()

    def expand(self, values: tuple[TruncatedSeries, ...]) -> TruncatedSeries:
        """expand at series arguments; the denominator must not vanish at the constant terms"""
        num = evaluate_polynomial(self.numerator, values)
        den = evaluate_polynomial(self.denominator, values)
        if not den.constant_term:
            raise ConversionFailure("denominator vanishes at the expansion point")
        return num / den

    def __repr__(self) -> str:
        return f"RationalFunction({self.value})"


def _reverse(poly, nvars: int):
    degrees = [max((m[i] for m in poly.keys()), default=0) for i in range(nvars)]
    reversed_terms = {tuple(d - e for d, e in zip(degrees, m)): int(c) for m, c in poly.terms()}
    return reversed_terms, degrees


def _collapse(terms) -> dict[tuple[int], int]:
    out: dict[tuple[int], int] = {}
    for m, c in terms:
        out[(sum(m),)] = out.get((sum(m),), 0) + int(c)
    return out
