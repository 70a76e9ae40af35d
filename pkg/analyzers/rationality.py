# analyzers/rationality.py
# generating series of labeled schemes, their closed forms in D and the mirror symmetries

import sys
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import config
from analyzers.core_scheme import (
    binary_bijection,
    consistent_naming,
    height_order,
    is_consistent,
    labeled_schemes,
    mirror_order,
    scheme_stats,
    truncate,
)
from analyzers.motzkin import T_VARIABLES, branch_leaf_colors, decode_branch, markers, series_W, typed_walks
from analyzers.series_engine import compose, d_series, delta, rational_t_and_B, rational_to_series
from models.errors import ConventionError, DomainError, InconsistentNaming, ResourceLimit
from models.rational_function import D_BLACK, D_UNI, D_WHITE, RationalFunction
from models.scheme import BinaryBijection, LabeledScheme, Truncation, UnlabeledScheme
from models.series import TruncatedSeries
from models.verification import VerificationReport

MODES = ("closed", "direct", "decorated")

# typed walks grow like 6^length, keep the decorated oracle small
DECORATED_MAX_ORDER = 6


# --- labeled schemes ---

def edge_delta(lambda0: int, lambda1: int, d_black, d_white):
    """levels crossed by a branch: increasing branches see D_black on even levels, decreasing ones D_white"""
    if lambda0 <= lambda1:
        return delta(lambda0, lambda1, d_black, d_white)
    return delta(lambda1, lambda0, d_white, d_black)


def stem_factor(l: LabeledScheme, order: int) -> TruncatedSeries:
    """t_black per rootable stem after an even corner, t_white otherwise"""
    tb, tw = markers(order)
    p = TruncatedSeries.constant(T_VARIABLES, order)
    for r in l.scheme.rootable_stems:
        p = p * (tb if l.stem_parity(r) == 0 else tw)
    return p


@lru_cache(maxsize=None)
def _walk_series(parity: int, increment: int, order: int) -> TruncatedSeries:
    # W only depends on the parity of the start and on the increment
    return series_W(parity, parity + increment, order)


@lru_cache(maxsize=None)
def _closed_edge(parity: int, increment: int, order: int) -> TruncatedSeries:
    # B times the level factors, shifted by an even height
    db, dw, b = d_series(order)
    return b * edge_delta(parity, parity + increment, db, dw)


@lru_cache(maxsize=None)
def _decorated_branches(parity: int, order: int) -> dict[int, TruncatedSeries]:
    """every branch of at most `order` vertices from a corner of the given parity, by increment"""
    counts: dict[int, dict[tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
    for length in range(order + 1):
        for w in typed_walks(parity, length):
            colors = branch_leaf_colors(decode_branch(w, parity, w.end_height))
            counts[w.increment][colors] += 1
    return {inc: TruncatedSeries.from_terms(T_VARIABLES, order, dict(c)) for inc, c in counts.items()}


def R_labeled_scheme(l: LabeledScheme, mode: str = "closed", order: int | None = None) -> TruncatedSeries:
    """
    series in (t_black, t_white) of the blossoming cores with labeled scheme l.
    closed: product of B and the level factors; direct: product of walk
    series; decorated: enumerate the branches themselves.
    """
    order = order or config.default_order
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}, expected one of {MODES}")
    if mode == "decorated" and order > DECORATED_MAX_ORDER:
        raise ResourceLimit(f"decorated enumeration is capped at order {DECORATED_MAX_ORDER}")

    total = stem_factor(l, order)
    zero = TruncatedSeries.zero(T_VARIABLES, order)
    for e in l.scheme.edges:
        if not total.coefficients:
            break
        lam0, lam1 = l.lambda0(e), l.lambda1(e)
        if mode == "closed":
            total = total * _closed_edge(lam0 % 2, lam1 - lam0, order)
        elif mode == "direct":
            total = total * _walk_series(lam0 % 2, lam1 - lam0, order)
        else:
            total = total * _decorated_branches(lam0 % 2, order).get(lam1 - lam0, zero)
    return total


def direct_scheme_series(s: UnlabeledScheme, order: int, mode: str = "closed") -> TruncatedSeries:
    """R_s by summing over labeled schemes; heights further than order + |E| from the root cost more than order"""
    total = TruncatedSeries.zero(T_VARIABLES, order)
    for l in labeled_schemes(s, order + s.n_edges):
        total = total + R_labeled_scheme(l, mode, order)
    return total


def verify_decomposition(schemes: list[UnlabeledScheme], order: int, height_bound: int,
                         verbose: bool = False) -> VerificationReport:
    """closed, direct (and at small orders decorated) series agree on every labeled scheme"""
    report = VerificationReport("labeled scheme decomposition")
    modes = MODES if order <= DECORATED_MAX_ORDER else MODES[:2]
    for s in schemes:
        for l in labeled_schemes(s, height_bound):
            report.checked += 1
            closed = R_labeled_scheme(l, "closed", order)
            for mode in modes[1:]:
                if R_labeled_scheme(l, mode, order) != closed:
                    report.fail(f"{mode} differs from closed", {"scheme": s.to_json(), "heights": l.heights})
    report.details["modes"] = list(modes)
    if verbose:
        print(f"{'✅' if report.passed else '❌'} {report.checked} labeled schemes checked", file=sys.stderr)
    return report


# --- univariate closed form ---

def _checked_naming(s: UnlabeledScheme, naming: tuple[int, ...] | None) -> tuple[int, ...]:
    naming = naming or consistent_naming(s)
    if not is_consistent(s, naming):
        raise InconsistentNaming(f"{naming} is not a linear extension of the offset arcs {s.offset_arcs}")
    return naming


def _enclosing(stats, k: int) -> int:
    c = stats.C_plus(k)
    if c == 0:
        raise ConventionError(f"no edge crosses relative height {k}; the scheme is disconnected there")
    return c


def R_uni_closed(s: UnlabeledScheme, naming: tuple[int, ...] | None, pi: tuple[int, ...]) -> RationalFunction:
    """B^|E| D^(O - U) prod_k D^(delta C) / (1 - D^C), stems left out"""
    naming = _checked_naming(s, naming)
    d = RationalFunction.univariate(D_UNI)
    _, _, b = rational_t_and_B(univariate=True)
    stats = scheme_stats(s, pi, naming)
    result = b ** s.n_edges * d ** (stats.O_total - stats.U_total)
    for k in range(1, len(pi)):
        c = _enclosing(stats, k)
        result = result * d ** (stats.delta(k) * c) / (1 - d ** c)
    return result


def direct_r_uni(s: UnlabeledScheme, naming: tuple[int, ...] | None, pi: tuple[int, ...], order: int) -> TruncatedSeries:
    """sum of B^|E| D^(stature) over the labeled schemes of height order pi"""
    naming = _checked_naming(s, naming)
    db, _, b = d_series(order, univariate=True)
    total = TruncatedSeries.zero(db.variables, order)
    for l in labeled_schemes(s, order + s.n_edges):
        if height_order(l, naming) != tuple(pi):
            continue
        term = TruncatedSeries.constant(db.variables, order)
        for e in s.edges:
            term = term * b * db ** abs(l.lambda1(e) - l.lambda0(e))
        total = total + term
    return total


def verify_uni_mirror(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> VerificationReport:
    """reflecting D -> 1/D exchanges an order with its mirror"""
    naming = _checked_naming(s, naming)
    report = VerificationReport("univariate mirror")
    for pi in permutations(range(s.n_vertices)):
        report.checked += 1
        if R_uni_closed(s, naming, mirror_order(pi)).par_bar() != R_uni_closed(s, naming, pi):
            report.fail("reflection of the mirrored order differs", list(pi))
    return report


# --- bivariate closed forms ---

@dataclass(frozen=True)
class _EdgeEnds:
    low: int
    high: int
    tau_low: int
    tau_high: int
    up: bool        # tail at the lower relative height


def _edge_ends(s: UnlabeledScheme, bb: BinaryBijection) -> list[_EdgeEnds]:
    pos = bb.positions
    ends = []
    for e in s.edges:
        pt, ph = pos[e.tail_vertex], pos[e.head_vertex]
        if pt < ph:
            ends.append(_EdgeEnds(pt, ph, e.tail_type, e.head_type, True))
        elif pt > ph:
            ends.append(_EdgeEnds(ph, pt, e.head_type, e.tail_type, False))
    return ends


def _level_weight(up: bool, parity: int) -> RationalFunction:
    black = (parity == 0) == up
    return RationalFunction.bivariate(D_BLACK if black else D_WHITE)


def _step(stats, ends: list[_EdgeEnds], bb: BinaryBijection, k: int, parity: int) -> RationalFunction:
    """
    sum over the gap between relative heights k and k+1, with h(pi(k)) of the
    given parity, including the type corrections of edges ending at k or k+1
    """
    pair = RationalFunction.bivariate(D_BLACK * D_WHITE)
    c = _enclosing(stats, k)
    following = (parity + bb.gap(k)) % 2
    if bb.gap(k) == 0:
        factor = pair ** (c * stats.delta(k)) / (1 - pair ** c)
    else:
        factor = 1 / (1 - pair ** c)
        for e in ends:
            if e.low <= k < e.high:
                factor = factor * _level_weight(e.up, parity)
    for e in ends:
        if e.low == k and e.tau_low:
            factor = factor / _level_weight(e.up, parity)
        if e.high == k + 1 and e.tau_high:
            factor = factor * _level_weight(e.up, following)
    return factor


def S_series(s: UnlabeledScheme, naming: tuple[int, ...] | None, bb: BinaryBijection, k: int,
             ascending: bool, parity: int) -> RationalFunction:
    """
    the truncations above (ascending) or below relative height k, summed,
    with h(pi(k)) of the given parity; 1 at the last (resp. first) height
    """
    naming = _checked_naming(s, naming)
    if not 1 <= k <= bb.n:
        raise DomainError(f"relative height {k} outside 1..{bb.n}")
    stats = scheme_stats(s, bb.pi, naming)
    ends = _edge_ends(s, bb)
    result = RationalFunction.one()
    par = parity
    if ascending:
        for step in range(k, bb.n):
            result = result * _step(stats, ends, bb, step, par)
            par = (par + bb.gap(step)) % 2
    else:
        for step in range(k - 1, 0, -1):
            par = (par - bb.gap(step)) % 2
            result = result * _step(stats, ends, bb, step, par)
    return result


def root_parity(s: UnlabeledScheme, bb: BinaryBijection) -> int:
    """parity of h(pi(1)) once the root corner is labeled 0"""
    root_pos = bb.positions[s.root_vertex]
    return bb.parity_at(1, s.relative_labels[s.map.root_dart] % 2, reference=root_pos)


def stem_prefactor(s: UnlabeledScheme, bb: BinaryBijection, parity: int) -> RationalFunction:
    """product over rootable stems of t_black or t_white, with h(pi(1)) of the given parity"""
    tb, tw, _ = rational_t_and_B()
    rel = s.relative_labels
    p = RationalFunction.one()
    for r in s.rootable_stems:
        h = bb.parity_at(bb.positions[s.map.vertex_of[r]], parity)
        p = p * (tb if (h + rel[r]) % 2 == 0 else tw)
    return p


def R_binary(s: UnlabeledScheme, naming: tuple[int, ...] | None, bb: BinaryBijection) -> RationalFunction:
    naming = _checked_naming(s, naming)
    c = root_parity(s, bb)
    _, _, b = rational_t_and_B()
    return stem_prefactor(s, bb, c) * b ** s.n_edges * S_series(s, naming, bb, 1, True, c)


def R_half_sum(s: UnlabeledScheme, naming: tuple[int, ...] | None, bb: BinaryBijection) -> RationalFunction:
    """R_binary(D_black, D_white) + R_binary(D_white, D_black), summed over both parity classes"""
    naming = _checked_naming(s, naming)
    _, _, b = rational_t_and_B()
    total = stem_prefactor(s, bb, 0) * S_series(s, naming, bb, 1, True, 0)
    total = total + stem_prefactor(s, bb, 1) * S_series(s, naming, bb, 1, True, 1)
    return b ** s.n_edges * total


def binary_bijections(n: int):
    for pi in permutations(range(n)):
        for zeta in product((0, 1), repeat=max(n - 1, 0)):
            yield BinaryBijection(pi, zeta)


def R_scheme_rational(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> RationalFunction:
    """R_s in (D_black, D_white), summed over every binary bijection"""
    naming = _checked_naming(s, naming)
    total = RationalFunction.bivariate(0)
    for bb in binary_bijections(s.n_vertices):
        total = total + R_binary(s, naming, bb)
    return total


# --- direct oracles ---

def truncation_weight(t: Truncation, d_black, d_white):
    weight = 1
    for e in t.edges:
        weight = weight * edge_delta(e.lambda0, e.lambda1, d_black, d_white)
    return weight


def direct_s_series(s: UnlabeledScheme, naming: tuple[int, ...] | None, bb: BinaryBijection, k: int,
                    ascending: bool, parity: int, order: int) -> TruncatedSeries:
    """S by summing the weights of the distinct truncations met in a bounded window of labeled schemes"""
    naming = _checked_naming(s, naming)
    db, dw, _ = d_series(order)
    window = order + s.n_edges + 2 * s.n_vertices
    seen: set[Truncation] = set()
    total = TruncatedSeries.zero(T_VARIABLES, order)
    for base in labeled_schemes(s, window):
        for l in (base, base.shifted(1)):
            if l.heights[bb.vertex(k)] % 2 != parity or binary_bijection(l, naming) != bb:
                continue
            t = truncate(l, naming, k, ascending).normalized()
            if t not in seen:
                seen.add(t)
                total = total + truncation_weight(t, db, dw)
    return total


def direct_r_binary(s: UnlabeledScheme, naming: tuple[int, ...] | None, bb: BinaryBijection,
                    order: int) -> TruncatedSeries:
    naming = _checked_naming(s, naming)
    total = TruncatedSeries.zero(T_VARIABLES, order)
    for l in labeled_schemes(s, order + s.n_edges):
        if binary_bijection(l, naming) == bb:
            total = total + R_labeled_scheme(l, "closed", order)
    return total


def expand_in_t(f: RationalFunction, order: int) -> TruncatedSeries:
    db, dw, _ = d_series(order)
    if f.nvars == 1:
        return rational_to_series(f, (d_series(order, univariate=True)[0],), order)
    return rational_to_series(f, (db, dw), order)


# --- symmetries ---

def verify_s_mirror(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> VerificationReport:
    """reflecting the ascending series gives, up to sign, the descending series of the mirror in the other class"""
    naming = _checked_naming(s, naming)
    n = s.n_vertices
    sign = -1 if (n - 1) % 2 else 1
    report = VerificationReport("truncation series mirror")
    for bb in binary_bijections(n):
        for c in (0, 1):
            report.checked += 1
            left = S_series(s, naming, bb, 1, True, c).par_bar()
            right = S_series(s, naming, bb.mirror(), n, False, 1 - c) * sign
            if left != right:
                report.fail("mirror relation fails", {"binary": bb.to_json(), "parity": c})
    return report


def verify_mirror(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> VerificationReport:
    """
    reflection of the half sum at (pi, zeta) is the half sum at the mirrored
    pair, the half sum is the swap sum of R_binary, and R_s summed is
    reflection invariant
    """
    naming = _checked_naming(s, naming)
    report = VerificationReport("bivariate mirror")
    for bb in binary_bijections(s.n_vertices):
        report.checked += 1
        half = R_half_sum(s, naming, bb)
        if half.par_bar() != R_half_sum(s, naming, bb.mirror()):
            report.fail("reflection of the half sum differs from the mirrored half sum", bb.to_json())
        if half != R_binary(s, naming, bb).circ():
            report.fail("half sum is not the swap sum", bb.to_json())
    if not R_scheme_rational(s, naming).circ().is_par_symmetric():
        report.fail("summed series is not reflection invariant", s.to_json())
    return report


def verify_diagonal(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> VerificationReport:
    """setting D_black = D_white collapses the parity sum onto the univariate closed form"""
    naming = _checked_naming(s, naming)
    _, _, b = rational_t_and_B(univariate=True)
    report = VerificationReport("diagonal specialization")
    n = s.n_vertices
    for pi in permutations(range(n)):
        report.checked += 1
        total = RationalFunction.univariate(0)
        for zeta in product((0, 1), repeat=max(n - 1, 0)):
            total = total + S_series(s, naming, BinaryBijection(pi, zeta), 1, True, 0).diagonal()
        if b ** s.n_edges * total != R_uni_closed(s, naming, pi):
            report.fail("diagonal differs from the univariate closed form", list(pi))
    return report


def verify_criterion(f: RationalFunction, variables: str = "t") -> VerificationReport:
    """
    f symmetric in (t_black, t_white) composes with t(D) into a reflection
    invariant function of D. given in D directly, the report records whether
    f is reflection invariant, i.e. whether it is rational in t.
    """
    report = VerificationReport("rationality criterion")
    report.checked = 1
    if not f.is_symmetric():
        report.fail("precondition: f is not symmetric", f.to_dump())
        return report
    if variables == "t":
        tb, tw, _ = rational_t_and_B()
        composed = compose(f, (tb, tw))
        report.details["symmetric"] = composed.is_symmetric()
        report.details["par_symmetric"] = composed.is_par_symmetric()
        if not (report.details["symmetric"] and report.details["par_symmetric"]):
            report.fail("composition with t(D) is not reflection invariant", f.to_dump())
    elif variables == "D":
        report.details["par_symmetric"] = f.is_par_symmetric()
        report.details["rational_in_t"] = report.details["par_symmetric"]
    else:
        raise DomainError(f"unknown variables {variables!r}, expected 't' or 'D'")
    return report
