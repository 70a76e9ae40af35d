# analyzers/radial.py
# radial construction: maps <-> 4-valent bicolorable maps

from dataclasses import dataclass

from analyzers.map_analyzer import MapAnalyzer
from models.errors import DomainError, NotBicolorable, NotFourValent
from models.rooted_map import Color, RootedMap, build_map, canonical_form


@dataclass(frozen=True)
class RadialResult:
    """the radial map with its vertex/face correspondence tables"""
    map: RootedMap
    vertex_to_black_face: dict[int, int]  # vertex of m -> black face of the radial map
    face_to_white_face: dict[int, int]  # face of m -> white face of the radial map


def radial(m: RootedMap) -> RadialResult:
    """
    one radial vertex per edge of m. dart d of m gives two radial darts,
    P(d) = d and Q(d) = 2E + d; P-faces trace the vertices of m and Q-faces its faces.
    """
    if m.is_vertex_map:
        raise DomainError("the vertex map has no radial map")
    n = m.n_darts
    P = lambda d: d
    Q = lambda d: n + d

    sigma = [0] * (2 * n + 1)
    alpha = [0] * (2 * n + 1)
    for d in m.darts:
        sigma[P(d)] = Q(m.alpha[d])
        sigma[Q(d)] = P(d)
        alpha[P(d)] = Q(m.sigma_inv[d])
        alpha[Q(d)] = P(m.sigma[d])

    r = build_map(2 * n, tuple(sigma), tuple(alpha), P(m.sigma_inv[m.root_dart]))
    vertex_to_black_face = {v: r.face_of[P(cycle[0])] for v, cycle in enumerate(m.vertices)}
    face_to_white_face = {f: r.face_of[Q(cycle[0])] for f, cycle in enumerate(m.faces)}
    return RadialResult(r, vertex_to_black_face, face_to_white_face)


def radial_inverse(r: RootedMap) -> RootedMap:
    """recover m from a rooted 4-valent bicolorable map; darts of m are the black corners"""
    if any(len(cycle) != 4 for cycle in r.vertices):
        raise NotFourValent("radial_inverse needs a 4-valent map")
    coloring = MapAnalyzer(r).face_coloring()  # raises NotBicolorable

    black = [d for d in r.darts if coloring.colors[r.face_of[d]] is Color.BLACK]
    if r.root_dart not in black:
        raise NotBicolorable("root corner of a radial map must be black")
    label = {d: i + 1 for i, d in enumerate(black)}

    sigma = [0] * (len(black) + 1)
    alpha = [0] * (len(black) + 1)
    for x in black:
        alpha[label[x]] = label[r.sigma[r.sigma[x]]]
        sigma[label[x]] = label[r.alpha[r.sigma_inv[x]]]
    root = sigma[label[r.root_dart]]

    return canonical_form(build_map(len(black), tuple(sigma), tuple(alpha), root))
