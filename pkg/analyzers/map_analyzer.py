# analyzers/map_analyzer.py
# faces, bicolorings, heights and orientations of rooted maps

from itertools import product

import networkx as nx

import config
from models.errors import NotBicolorable, ResourceLimit
from models.rooted_map import Color, FaceColoring, Orientation, RootedMap


class MapAnalyzer:
    """face-level structure of a rooted map: dual graph, colorings, heights"""

    def __init__(self, m: RootedMap):
        self.map = m
        self.dual = self._build_dual()

    def _build_dual(self) -> nx.MultiGraph:
        """dual multigraph, one node per face and one edge per map edge"""
        dual = nx.MultiGraph()
        dual.add_nodes_from(range(self.map.n_faces))
        for a, b in self.map.edges:
            dual.add_edge(self.map.face_of[a], self.map.face_of[b], dart=a)
        return dual

    def is_bicolorable(self) -> bool:
        # an edge with the same face on both sides is a dual self-loop
        if any(u == v for u, v in self.dual.edges()):
            return False
        return nx.is_bipartite(self.dual)

    def face_coloring(self) -> FaceColoring:
        if not self.is_bicolorable():
            raise NotBicolorable("dual graph is not bipartite")
        heights = self.face_heights()
        return FaceColoring(tuple(
            Color.BLACK if heights[f] % 2 == 0 else Color.WHITE
            for f in range(self.map.n_faces)
        ))

    def face_heights(self) -> dict[int, int]:
        """dual distance of every face to the root face"""
        return nx.single_source_shortest_path_length(self.dual, self.map.root_face)

    def dual_geodesic_orientation(self) -> Orientation:
        """
        orient every edge so that the face on its left is one higher than the
        face on its right (corner d lies on the right of the tail dart d)
        """
        if not self.is_bicolorable():
            raise NotBicolorable("dual-geodesic orientation needs a bicolorable map")
        m = self.map
        h = self.face_heights()
        heads = set()
        for a, b in m.edges:
            ha, hb = h[m.face_of[a]], h[m.face_of[b]]
            if hb == ha + 1:
                heads.add(b)
            elif ha == hb + 1:
                heads.add(a)
            else:
                raise NotBicolorable(f"faces around edge ({a},{b}) have heights {ha} and {hb}")
        return Orientation(frozenset(heads))

    def face_potential(self, o: Orientation) -> dict[int, int] | None:
        """
        integer potential with the root face at 0 and, across each edge,
        the left face one above the right face; None when no such potential exists
        """
        m = self.map
        constraints: dict[int, list[tuple[int, int]]] = {f: [] for f in range(m.n_faces)}
        for d in m.darts:
            if o.is_tail(d):
                right, left = m.face_of[d], m.face_of[m.alpha[d]]
                constraints[right].append((left, 1))
                constraints[left].append((right, -1))

        potential = {m.root_face: 0}
        queue = [m.root_face]
        while queue:
            f = queue.pop()
            for g, step in constraints[f]:
                if g not in potential:
                    potential[g] = potential[f] + step
                    queue.append(g)
                elif potential[g] != potential[f] + step:
                    return None
        return potential

    def is_bicolorable_orientation(self, o: Orientation) -> bool:
        return self.face_potential(o) is not None

    def has_clockwise_face(self, o: Orientation) -> bool:
        """
        a face is clockwise when its boundary is a directed cycle with the face
        on its right; for the root face the cycle must run the other way
        """
        m = self.map
        for f, cycle in enumerate(m.faces):
            if f == m.root_face:
                if all(o.is_head(d) for d in cycle):
                    return True
            elif all(o.is_tail(d) for d in cycle):
                return True
        return False


def dual_graph(m: RootedMap) -> nx.MultiGraph:
    return MapAnalyzer(m).dual


def is_bicolorable(m: RootedMap) -> bool:
    return MapAnalyzer(m).is_bicolorable()


def face_coloring(m: RootedMap) -> FaceColoring:
    return MapAnalyzer(m).face_coloring()


def face_heights(m: RootedMap) -> dict[int, int]:
    return MapAnalyzer(m).face_heights()


def dual_geodesic_orientation(m: RootedMap) -> Orientation:
    return MapAnalyzer(m).dual_geodesic_orientation()


def is_bicolorable_orientation(m: RootedMap, o: Orientation) -> bool:
    return MapAnalyzer(m).is_bicolorable_orientation(o)


def has_clockwise_face(m: RootedMap, o: Orientation) -> bool:
    return MapAnalyzer(m).has_clockwise_face(o)


def verify_propp(m: RootedMap) -> bool:
    """
    brute force over all 2^E orientations: exactly one is bicolorable with no
    clockwise face, and it is the dual-geodesic orientation
    """
    if m.n_edges > config.propp_max_edges:
        raise ResourceLimit(f"{m.n_edges} edges exceeds the brute-force bound of {config.propp_max_edges}")
    analyzer = MapAnalyzer(m)
    found = []
    for choice in product((0, 1), repeat=m.n_edges):
        o = Orientation(frozenset(edge[side] for edge, side in zip(m.edges, choice)))
        if analyzer.is_bicolorable_orientation(o) and not analyzer.has_clockwise_face(o):
            found.append(o)
    return len(found) == 1 and found[0] == analyzer.dual_geodesic_orientation()
