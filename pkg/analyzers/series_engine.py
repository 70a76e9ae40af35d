# analyzers/series_engine.py
# tree series, the motzkin series as rational functions of D, and conversions

from collections.abc import Callable
from functools import lru_cache

from analyzers.motzkin import series_B, series_D_bullet, series_D_circ
from models.errors import BadInterval, ConversionFailure, NonContracting
from models.rational_function import D_BLACK, D_UNI, D_WHITE, RationalFunction
from models.series import TruncatedSeries

Z_VARIABLES = ("z_black", "z_white")
Z_UNIVARIATE = ("z",)


# --- fixed points ---

def solve_fixed_point(system: Callable[[tuple[TruncatedSeries, ...]], tuple[TruncatedSeries, ...]],
                      variables: tuple[str, ...], n_unknowns: int, order: int) -> tuple[TruncatedSeries, ...]:
    """
    iterate x <- system(x) from zero. each round fixes one more degree when
    the system has no constant term; anything else is rejected.
    """
    zero = TruncatedSeries.zero(variables, order)
    current = tuple(zero for _ in range(n_unknowns))
    if any(s.constant_term for s in system(current)):
        raise NonContracting("system has a constant term at the origin")
    for _ in range(order + 2):
        following = tuple(system(current))
        if all(a == b for a, b in zip(following, current)):
            return following
        current = following
    raise NonContracting(f"no fixed point reached after {order + 2} rounds")


def tree_series(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """T_black = z_black + T_black^2 + 2 T_white T_black, and symmetrically"""
    zb = TruncatedSeries.variable(Z_VARIABLES, order, "z_black")
    zw = TruncatedSeries.variable(Z_VARIABLES, order, "z_white")

    def system(x):
        tb, tw = x
        return zb + tb * tb + 2 * tw * tb, zw + tw * tw + 2 * tb * tw

    return solve_fixed_point(system, Z_VARIABLES, 2, order)


def bc_tree_series(order: int) -> TruncatedSeries:
    """T = z + 3 T^2"""
    z = TruncatedSeries.variable(Z_UNIVARIATE, order, "z")
    (t,) = solve_fixed_point(lambda x: (z + 3 * x[0] * x[0],), Z_UNIVARIATE, 1, order)
    return t


def tree_residuals(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """left minus right side of the tree system, zero to the truncation order"""
    zb = TruncatedSeries.variable(Z_VARIABLES, order, "z_black")
    zw = TruncatedSeries.variable(Z_VARIABLES, order, "z_white")
    tb, tw = tree_series(order)
    return tb - (zb + tb * tb + 2 * tw * tb), tw - (zw + tw * tw + 2 * tb * tw)


# --- rational side ---

def rational_t_and_B(univariate: bool = False) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
    """t_black, t_white and B as rational functions of (D_black, D_white), or of D"""
    if univariate:
        d = RationalFunction.univariate(D_UNI)
        t = 1 / (d + 4 + 1 / d)
        return t, t, (1 + 4 * d + d * d) / (1 - d * d)
    db = RationalFunction.bivariate(D_BLACK)
    dw = RationalFunction.bivariate(D_WHITE)
    tb = 1 / (dw + 2 * (dw / db + 1) + 1 / db)
    tw = 1 / (db + 2 * (db / dw + 1) + 1 / dw)
    b = (1 + 2 * (db + dw) + db * dw) / (1 - db * dw)
    return tb, tw, b


def delta_exponents(i: int, j: int) -> tuple[int, int]:
    """(even, odd) integers in [i, j)"""
    if i > j:
        raise BadInterval(f"empty interval [{i}, {j}) is reversed")
    evens = (j + 1) // 2 - (i + 1) // 2
    return evens, (j - i) - evens


def delta(i: int, j: int, x, y):
    """x to the number of even heights in [i, j), times y to the number of odd ones"""
    a, b = delta_exponents(i, j)
    return x ** a * y ** b


@lru_cache(maxsize=None)
def d_series(order: int, univariate: bool = False) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """(D_black, D_white, B) as series in t, by walk enumeration"""
    return (
        series_D_bullet(order, univariate),
        series_D_circ(order, univariate),
        series_B(order, univariate),
    )


def compose(f: RationalFunction, args: tuple[RationalFunction, ...]) -> RationalFunction:
    """f evaluated at rational arguments"""
    one = RationalFunction.one(args[0].nvars)

    def evaluate(poly: dict) -> RationalFunction:
        total = one * 0
        for exps, c in poly.items():
            term = one * c
            for a, k in zip(args, exps):
                if k:
                    term = term * a ** k
            total = total + term
        return total

    return evaluate(f.numerator) / evaluate(f.denominator)


def rational_to_series(f: RationalFunction, values: tuple[TruncatedSeries, ...], order: int) -> TruncatedSeries:
    """
    expand f as a power series in its own variables and substitute `values`
    (series without constant term). the denominator may carry a monomial
    factor as long as it divides out.
    """
    num, den = f.numerator, f.denominator
    nvars = f.nvars
    shift = tuple(min(m[i] for m in den) for i in range(nvars))
    unit = {tuple(a - s for a, s in zip(m, shift)): c for m, c in den.items()}
    if not unit.get((0,) * nvars):
        raise ConversionFailure(f"denominator of {f} has no unit part")
    names = tuple(f"x{i}" for i in range(nvars))
    extended = order + sum(shift)
    quotient = TruncatedSeries.from_terms(names, extended, num) / TruncatedSeries.from_terms(names, extended, unit)

    terms = {}
    for exps, c in quotient.coefficients.items():
        reduced = tuple(a - s for a, s in zip(exps, shift))
        if sum(reduced) > order:
            continue
        if min(reduced) < 0:
            raise ConversionFailure(f"{f} is not a power series in its variables")
        terms[reduced] = c
    return TruncatedSeries.from_terms(names, order, terms).substitute(values)


def series_identity_checks(order: int) -> dict[str, bool]:
    """t_white D_black = t_black D_white, B symmetric, and the rational forms reproduce t and B"""
    from analyzers.motzkin import markers

    tb, tw = markers(order)
    db, dw, b = d_series(order)
    rt_b, rt_w, rb = rational_t_and_B()
    return {
        "t_white*D_black == t_black*D_white": tw * db == tb * dw,
        "B symmetric": b == b.swap(),
        "t_black from D": rational_to_series(rt_b, (db, dw), order) == tb,
        "t_white from D": rational_to_series(rt_w, (db, dw), order) == tw,
        "B from D": rational_to_series(rb, (db, dw), order) == b,
        "D_black decomposition": db == tb + 2 * (tb + tw) * db + tb * dw * db,
        "D_white decomposition": dw == tw + 2 * (tb + tw) * dw + tw * db * dw,
        "B decomposition": b == 1 + 2 * (tb + tw) * b + (tb * dw + tw * db) * b,
    }
