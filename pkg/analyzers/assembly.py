# analyzers/assembly.py
# from scheme series to the bivariate generating series of maps of genus g

import sys
from dataclasses import dataclass, field

from sympy import ZZ, ring

import config
from analyzers.rationality import R_scheme_rational, expand_in_t
from analyzers.scheme_enumerator import SchemeClass, enumerate_schemes
from analyzers.series_engine import Z_UNIVARIATE, Z_VARIABLES, bc_tree_series, tree_series
from models.count_table import CountTable
from models.errors import ConversionFailure
from models.series import TruncatedSeries
from models.verification import VerificationReport

TREE_VARIABLES = ("T_black", "T_white")
TREE_RING, T_BLACK, T_WHITE = ring("Tb,Tw", ZZ)


@dataclass
class ClassSeries:
    """contribution of one unrooted scheme"""
    key: tuple
    rooted: int
    trunks: int
    R: TruncatedSeries            # sum of R_s over the rooted members, in t
    O: TruncatedSeries            # in z


@dataclass
class Assembly:
    genus: int
    order: int
    classes: list[ClassSeries] = field(default_factory=list)
    M: TruncatedSeries | None = None        # in (z_black, z_white)
    M_tree: TruncatedSeries | None = None   # the same series as a function of (T_black, T_white)
    numerator: object = None                # sympy polynomial in Tb, Tw
    rational_form: object = None            # numerator / denominator in the fraction field

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "order": self.order,
            "classes": [
                {"rooted": c.rooted, "trunks": c.trunks, "O": c.O.to_rows()} for c in self.classes
            ],
            "M": self.M.to_rows() if self.M is not None else None,
            "numerator": str(self.numerator.as_expr()) if self.numerator is not None else None,
            "denominator": str(shape_denominator(self.genus).as_expr()),
        }


def shape_denominator(g: int):
    """((1 - 2 Tb - 2 Tw)^2 - 4 Tb Tw)^(5g - 3)"""
    return ((1 - 2 * T_BLACK - 2 * T_WHITE) ** 2 - 4 * T_BLACK * T_WHITE) ** (5 * g - 3)


def shape_factor():
    return T_BLACK * T_WHITE * (1 - T_BLACK - T_WHITE)


def class_R(c: SchemeClass, order: int) -> TruncatedSeries:
    # each (map, trunk) pair lands on exactly one distinct rooted member, so
    # repeated rootings of a symmetric scheme are not summed twice
    total = TruncatedSeries.zero(("t_black", "t_white"), order)
    for s in c.members:
        total = total + expand_in_t(R_scheme_rational(s), order)
    return total


def _renamed(s: TruncatedSeries, variables: tuple[str, ...]) -> TruncatedSeries:
    return TruncatedSeries(variables, s.order, dict(s.coefficients))


def assemble_O_and_M(g: int = 1, order: int | None = None, verbose: bool = False) -> Assembly:
    """
    O for each unrooted scheme is (R(T_black, T_white) + R(T_white, T_black))
    divided by its trunk count; M is their sum
    """
    order = order or config.default_order
    tb, tw = tree_series(order)
    result = Assembly(g, order)
    m = TruncatedSeries.zero(Z_VARIABLES, order)
    m_tree = TruncatedSeries.zero(TREE_VARIABLES, order)
    classes = enumerate_schemes(g, verbose=verbose)
    for c in classes:
        r = class_R(c, order)
        o = (r.substitute((tb, tw)) + r.substitute((tw, tb))) / c.trunk_count
        result.classes.append(ClassSeries(c.key, len(c.members), c.trunk_count, r, o))
        m = m + o
        m_tree = m_tree + _renamed(r + r.swap(), TREE_VARIABLES) / c.trunk_count
        if verbose:
            print(f"🔍 class with {len(c.members)} rooted schemes, {c.trunk_count} trunks", file=sys.stderr)
    result.M, result.M_tree = m, m_tree
    result.numerator = tree_numerator(m_tree, g)
    result.rational_form = result.numerator.ring.to_field().new(result.numerator, shape_denominator(g))
    if verbose:
        print(f"✅ genus {g} assembled from {len(classes)} unrooted schemes", file=sys.stderr)
    return result


def tree_numerator(m_tree: TruncatedSeries, g: int):
    """
    M times the shape denominator, as a polynomial in T. it must have
    integer coefficients and no term of degree above 6g - 3 up to the order.
    """
    den = shape_denominator(g)
    den_series = TruncatedSeries.from_terms(TREE_VARIABLES, m_tree.order, {m: int(c) for m, c in den.terms()})
    product = m_tree * den_series
    bound = 6 * g - 3
    if m_tree.order <= bound:
        raise ConversionFailure(f"order {m_tree.order} cannot certify a numerator of degree {bound}")
    terms = {}
    for exps, c in product.coefficients.items():
        if sum(exps) > bound:
            raise ConversionFailure(f"term {exps} of degree above {bound} survives in the numerator")
        if c.denominator != 1:
            raise ConversionFailure(f"coefficient {c} of {exps} is not an integer")
        terms[exps] = int(c)
    return TREE_RING.from_dict(terms)


def verify_shape(assembly: Assembly) -> VerificationReport:
    """numerator symmetric and divisible by Tb Tw (1 - Tb - Tw)"""
    report = VerificationReport("rational form")
    report.checked = 1
    p = assembly.numerator
    swapped = TREE_RING.from_dict({(b, a): c for (a, b), c in p.terms()})
    if p != swapped:
        report.fail("numerator is not symmetric", str(p.as_expr()))
    quotient, remainder = p.div(shape_factor())
    if remainder:
        report.fail("numerator is not divisible by Tb Tw (1 - Tb - Tw)", str(p.as_expr()))
    report.details["cofactor"] = str(quotient.as_expr())
    return report


def compare_with_census(m: TruncatedSeries, table: CountTable, max_total: int) -> VerificationReport:
    """[z_black^V z_white^F] M against the rooted map census, for V + F <= max_total"""
    report = VerificationReport("census comparison")
    for v in range(max_total + 1):
        for f in range(max_total + 1 - v):
            report.checked += 1
            expected, found = table.get(v, f), m.coefficient(v, f)
            if found != expected:
                report.fail(f"V={v} F={f}: census {expected}, assembled {found}", (v, f))
    return report


def assemble_univariate(g: int = 1, order: int | None = None) -> TruncatedSeries:
    """M(z) = sum over unrooted schemes of 2 R(T, T) / trunks with T = z + 3T^2"""
    order = order or config.default_order
    t = bc_tree_series(order)
    m = TruncatedSeries.zero(Z_UNIVARIATE, order)
    for c in enumerate_schemes(g):
        r = TruncatedSeries.zero(("t",), order)
        for s in c.members:
            r = r + expand_in_t(R_scheme_rational(s).diagonal(), order)
        m = m + 2 * r.substitute((t,)) / c.trunk_count
    return m
