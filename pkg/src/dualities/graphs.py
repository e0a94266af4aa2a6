"""Multigraphs and rotation-system embeddings.

An embedding is a cyclic order of edge-ends ("darts") at every vertex.
Faces come from walking the permutation d -> rotation-successor of the
twin of d, so the face count, Euler characteristic and genus are defined
purely combinatorially.  Loops and parallel edges are first-class: dual
graphs generate them even from simple polyhedra.

Darts are (edge_index, end) pairs with end 0 or 1; the dart (e, s) sits
at the endpoint edges[e][s].  The dual embedding keeps edge indices, so
"which dual edge crosses which primal edge" is the identity map.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

from .matroids import Matroid, TooManyBases, _canonical_bases
from . import matroids

Dart = tuple[int, int]


class GraphError(ValueError):
    """Base class for graph and embedding failures."""


class EndpointOutOfRange(GraphError):
    """An edge endpoint is not a valid vertex index."""


class NonCellular(GraphError):
    """Rotation data malformed, or a single surface was required but the
    underlying graph is disconnected."""


class NonPlanarEmbedding(GraphError):
    """A genus-0 embedding was required."""


class TooLarge(GraphError):
    """Search bound exceeded."""


class UnknownGraphName(GraphError):
    """Unrecognized named graph or embedding."""


# ---------------------------------------------------------------------------
# multigraphs


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..vertex_count-1 and an indexed edge list.

    Loops and parallel edges are allowed; the edge index is the stable
    identity used everywhere (matroids, duals, witnesses).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise EndpointOutOfRange("vertex_count must be nonnegative")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise EndpointOutOfRange(f"edge {i} endpoint out of range: {(u, v)}")

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(g) for g in sorted(groups.values()))

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for ci, grp in enumerate(self.components):
            for v in grp:
                out[v] = ci
        return tuple(out)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)


def make_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Multigraph:
    return Multigraph(vertex_count, tuple((int(u), int(v)) for u, v in edge_list))


@dataclass(frozen=True)
class GraphInvariants:
    components: int
    rank: int
    nullity: int

    def to_json_dict(self) -> dict:
        return {"components": self.components, "rank": self.rank, "nullity": self.nullity}


def graph_invariants(g: Multigraph) -> GraphInvariants:
    """Component count k, rank V - k, nullity E - rank."""
    k = len(g.components)
    r = g.vertex_count - k
    return GraphInvariants(k, r, len(g.edges) - r)


# ---------------------------------------------------------------------------
# embeddings and face tracing


@dataclass(frozen=True)
class Embedding:
    """A multigraph with a cyclic order of darts at each vertex."""

    graph: Multigraph
    rotation: tuple[tuple[Dart, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.vertex_count:
            raise NonCellular("one rotation list required per vertex")
        seen: set[Dart] = set()
        for v, cyc in enumerate(self.rotation):
            for d in cyc:
                e, s = d
                if not (0 <= e < len(g.edges)) or s not in (0, 1):
                    raise NonCellular(f"bad dart {d} at vertex {v}")
                if g.edges[e][s] != v:
                    raise NonCellular(f"dart {d} listed at vertex {v}, belongs at {g.edges[e][s]}")
                if d in seen:
                    raise NonCellular(f"dart {d} appears twice")
                seen.add(d)
        if len(seen) != 2 * len(g.edges):
            raise NonCellular("every edge must contribute exactly two darts")


def _face_orbits(
    edges: tuple[tuple[int, int], ...], rotation
) -> list[tuple[Dart, ...]]:
    rot_next: dict[Dart, Dart] = {}
    for cyc in rotation:
        for i, d in enumerate(cyc):
            rot_next[d] = cyc[(i + 1) % len(cyc)]
    succ: dict[Dart, Dart] = {}
    for e in range(len(edges)):
        for s in (0, 1):
            succ[(e, s)] = rot_next[(e, 1 - s)]
    faces = []
    seen: set[Dart] = set()
    for d in sorted(succ):
        if d in seen:
            continue
        face = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            cur = succ[cur]
        faces.append(tuple(face))
    return faces


@dataclass(frozen=True)
class TracedFaces:
    """Faces of an embedding plus the derived Euler data.

    ``chi`` uses the plane convention for disconnected graphs: all
    components share one outer region, so chi = sum of per-component
    Euler characteristics minus (k - 1).  For a connected embedding this
    is just V - E + F, and ``genus`` is (2 - chi) / 2; for disconnected
    input ``genus`` is None and the per-component values carry the data.
    """

    faces: tuple[tuple[Dart, ...], ...]
    face_count: int
    component_count: int
    chi: int
    genus: Optional[int]
    chi_by_component: tuple[int, ...]
    genus_by_component: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "faces": [[list(d) for d in f] for f in self.faces],
            "face_count": self.face_count,
            "component_count": self.component_count,
            "chi": self.chi,
            "genus": self.genus,
            "chi_by_component": list(self.chi_by_component),
            "genus_by_component": list(self.genus_by_component),
        }


def trace_faces(emb: Embedding) -> TracedFaces:
    """Walk the rotation system and report faces, chi and genus."""
    g = emb.graph
    faces = _face_orbits(g.edges, emb.rotation)
    comp_of = g.component_of
    k = len(g.components)
    v_c = [0] * k
    e_c = [0] * k
    f_c = [0] * k
    for v in range(g.vertex_count):
        v_c[comp_of[v]] += 1
    for u, _ in g.edges:
        e_c[comp_of[u]] += 1
    for face in faces:
        e, s = face[0]
        f_c[comp_of[g.edges[e][s]]] += 1
    for ci in range(k):
        if e_c[ci] == 0:
            f_c[ci] = 1  # an edgeless component bounds one region
    chi_by_comp = tuple(v_c[i] - e_c[i] + f_c[i] for i in range(k))
    genus_by_comp = tuple((2 - chi) // 2 for chi in chi_by_comp)
    chi = sum(chi_by_comp) - (k - 1)
    genus = genus_by_comp[0] if k == 1 else None
    return TracedFaces(
        tuple(faces), sum(f_c), k, chi, genus, chi_by_comp, genus_by_comp
    )


def dual_embedding(emb: Embedding) -> Embedding:
    """Dual map: one vertex per face, same edge indices, faces become
    the primal vertices.  Requires a connected embedding."""
    traced = trace_faces(emb)
    if traced.component_count != 1:
        raise NonCellular("dual requires a connected embedding")
    face_of: dict[Dart, int] = {}
    for fi, face in enumerate(traced.faces):
        for d in face:
            face_of[d] = fi
    edges = tuple(
        (face_of[(e, 0)], face_of[(e, 1)]) for e in range(len(emb.graph.edges))
    )
    rotation = tuple(tuple(face) for face in traced.faces)
    return Embedding(Multigraph(len(traced.faces), edges), rotation)


@dataclass(frozen=True)
class DualityReport:
    """Rank/nullity of a genus-0 embedding against its dual."""

    rank: int
    nullity: int
    rank_dual: int
    nullity_dual: int
    euler_chi: int

    @property
    def duality_ok(self) -> bool:
        return (
            self.rank_dual == self.nullity
            and self.nullity_dual == self.rank
            and self.rank - self.nullity_dual + 2 == self.euler_chi
        )

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "nullity": self.nullity,
            "rank_dual": self.rank_dual,
            "nullity_dual": self.nullity_dual,
            "euler_chi": self.euler_chi,
            "duality_ok": self.duality_ok,
        }


def rank_nullity_duality_report(emb: Embedding) -> DualityReport:
    """Check rank* = nullity and nullity* = rank on a planar embedding."""
    traced = trace_faces(emb)
    if traced.component_count != 1:
        raise NonCellular("duality report requires a connected embedding")
    if traced.genus != 0:
        raise NonPlanarEmbedding(f"genus {traced.genus} embedding; need genus 0")
    inv = graph_invariants(emb.graph)
    dual = dual_embedding(emb)
    inv_d = graph_invariants(dual.graph)
    return DualityReport(inv.rank, inv.nullity, inv_d.rank, inv_d.nullity, traced.chi)


# ---------------------------------------------------------------------------
# planarity


@dataclass(frozen=True)
class PlanarityReport:
    planar: bool
    obstruction: Optional[str]
    deletions: Optional[tuple[int, ...]]
    contractions: Optional[tuple[int, ...]]
    embedding: Optional[Embedding]
    note: str

    def to_json_dict(self) -> dict:
        return {
            "planar": self.planar,
            "obstruction": self.obstruction,
            "deletions": list(self.deletions) if self.deletions is not None else None,
            "contractions": list(self.contractions)
            if self.contractions is not None
            else None,
            "embedding": embedding_to_json_dict(self.embedding)
            if self.embedding is not None
            else None,
            "note": self.note,
        }


def _rotation_candidates(g: Multigraph):
    """All rotation systems, first incident dart pinned per vertex."""
    incident: list[list[Dart]] = [[] for _ in range(g.vertex_count)]
    for e, (u, v) in enumerate(g.edges):
        incident[u].append((e, 0))
        incident[v].append((e, 1))
    pools = []
    for darts in incident:
        if len(darts) <= 1:
            pools.append([tuple(darts)])
        else:
            first, rest = darts[0], darts[1:]
            pools.append([(first,) + perm for perm in itertools.permutations(rest)])
    return itertools.product(*pools)


def find_planar_embedding(
    g: Multigraph, max_candidates: int = 2_000_000
) -> Optional[Embedding]:
    """Exhaustive rotation-system search for an all-genus-0 embedding.

    Returns the first genus-0 rotation in canonical order, or None if
    none exists or the candidate space exceeds ``max_candidates``.
    """
    total = 1
    for v in range(g.vertex_count):
        d = g.degree(v)
        for i in range(2, d):
            total *= i
        if total > max_candidates:
            return None
    for rotation in _rotation_candidates(g):
        emb = Embedding(g, tuple(rotation))
        traced = trace_faces(emb)
        if all(gc == 0 for gc in traced.genus_by_component):
            return emb
    return None


def is_planar(g: Multigraph, bound: int = 20) -> PlanarityReport:
    """Minor-excluded planarity with explicit witnesses.

    Nonplanar iff the cycle matroid has an M(K5) or M(K3,3) minor; the
    witness is the delete/contract pair.  A planar verdict is certified,
    when the graph has at most 8 vertices, by an explicit genus-0
    rotation system found by exhaustive search.
    """
    if len(g.edges) > bound:
        raise TooLarge(f"planarity search capped at {bound} edges")
    cm = cycle_matroid(g, bound=max(bound, len(g.edges)))
    for name, key in (("M(K5)", "mk5"), ("M(K3,3)", "mk33")):
        found, wit = matroids.has_minor(cm, matroids.named_matroid(key))
        if found:
            return PlanarityReport(
                False, name, wit[0], wit[1], None, f"{name} minor found"
            )
    emb = None
    note = "no M(K5)/M(K3,3) minor (exhaustive search)"
    if g.vertex_count <= 8:
        emb = find_planar_embedding(g)
        if emb is not None:
            note += "; genus-0 rotation system exhibited"
        else:
            note += "; rotation search skipped (space too large)"
    return PlanarityReport(True, None, None, None, emb, note)


# ---------------------------------------------------------------------------
# regular polyhedra


@dataclass(frozen=True)
class PlatonicRow:
    p: int
    q: int
    vertices: int
    edges: int
    faces: int
    name: str

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "name": self.name,
        }


_PLATONIC_NAMES = {
    (3, 3): "tetrahedron",
    (4, 3): "cube",
    (3, 4): "octahedron",
    (5, 3): "dodecahedron",
    (3, 5): "icosahedron",
}


def platonic_solids() -> list[PlatonicRow]:
    """Solve (p-2)(q-2) < 4 over p, q >= 3 and derive the counts.

    With p-gon faces and q faces per vertex, pF = 2E and qV = 2E force
    E(2p - pq + 2q) = 2pq; only five (p, q) pairs admit positive E.
    """
    candidates = [
        (p, q)
        for p in range(3, 7)
        for q in range(3, 7)
        if (p - 2) * (q - 2) < 4
    ]
    candidates.sort(key=lambda pq: ((pq[0] - 2) * (pq[1] - 2), -pq[0]))
    rows = []
    for p, q in candidates:
        denom = 2 * p - p * q + 2 * q
        assert denom > 0
        e2, rem = divmod(2 * p * q, denom)
        assert rem == 0
        v, rem_v = divmod(2 * e2, q)
        f, rem_f = divmod(2 * e2, p)
        assert rem_v == 0 and rem_f == 0
        assert v - e2 + f == 2
        rows.append(PlatonicRow(p, q, v, e2, f, _PLATONIC_NAMES[(p, q)]))
    assert len(rows) == 5
    return rows


# ---------------------------------------------------------------------------
# blocks and cycle matroids


@dataclass(frozen=True)
class Block:
    """A biconnected component, keeping its original edge indices."""

    graph: Multigraph
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_indices": list(self.edge_indices),
            "edges": [list(e) for e in self.graph.edges],
        }


def blocks(g: Multigraph) -> list[Block]:
    """Biconnected components; bridges and loops are single-edge blocks."""
    n = g.vertex_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    edge_sets: list[list[int]] = []
    for ei, (u, v) in enumerate(g.edges):
        if u == v:
            edge_sets.append([ei])
        else:
            adj[u].append((ei, v))
            adj[v].append((ei, u))

    disc = [-1] * n
    low = [0] * n
    time = 0
    estack: list[int] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = time
        time += 1
        stack: list[list] = [[root, -1, 0]]
        while stack:
            v, pe, pos = stack[-1]
            if pos < len(adj[v]):
                stack[-1][2] += 1
                ei, w = adj[v][pos]
                if ei == pe:
                    continue
                if disc[w] == -1:
                    estack.append(ei)
                    disc[w] = low[w] = time
                    time += 1
                    stack.append([w, ei, 0])
                elif disc[w] < disc[v]:
                    estack.append(ei)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        blk = []
                        while True:
                            e = estack.pop()
                            blk.append(e)
                            if e == pe:
                                break
                        edge_sets.append(blk)

    out = []
    for es in sorted(edge_sets, key=min):
        vs = sorted({v for ei in es for v in g.edges[ei]})
        vmap = {v: i for i, v in enumerate(vs)}
        sub_edges = tuple((vmap[g.edges[ei][0]], vmap[g.edges[ei][1]]) for ei in sorted(es))
        out.append(Block(Multigraph(len(vs), sub_edges), tuple(vs), tuple(sorted(es))))
    return out


def cycle_matroid(g: Multigraph, bound: int = matroids.GROUND_BOUND) -> Matroid:
    """Matroid on the edge indices whose bases are the spanning forests."""
    ne = len(g.edges)
    if ne > bound:
        raise TooManyBases(f"{ne} edges exceed the matroid ground bound {bound}")
    r = graph_invariants(g).rank
    ground = tuple(range(ne))
    bases = []
    for combo in itertools.combinations(range(ne), r):
        parent = list(range(g.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for ei in combo:
            u, v = g.edges[ei]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            bases.append(frozenset(combo))
    return Matroid(ground, _canonical_bases(bases))


# ---------------------------------------------------------------------------
# graph isomorphism (small multigraphs)


def is_graph_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Backtracking multigraph isomorphism with degree/loop pruning."""
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False

    def profile(g: Multigraph):
        loops = [0] * g.vertex_count
        mult: dict[tuple[int, int], int] = {}
        for u, v in g.edges:
            if u == v:
                loops[u] += 1
            else:
                key = (min(u, v), max(u, v))
                mult[key] = mult.get(key, 0) + 1
        return loops, mult

    loops1, mult1 = profile(g1)
    loops2, mult2 = profile(g2)

    def sig(g, loops, mult):
        out = []
        for v in range(g.vertex_count):
            neigh = sorted(
                m for (a, b), m in mult.items() if v in (a, b)
            )
            out.append((g.degree(v), loops[v], tuple(neigh)))
        return out

    s1, s2 = sig(g1, loops1, mult1), sig(g2, loops2, mult2)
    if sorted(s1) != sorted(s2):
        return False

    perm = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        if s1[v] != s2[w]:
            return False
        if loops1[v] != loops2[w]:
            return False
        for u in range(v):
            x = perm[u]
            a = mult1.get((min(u, v), max(u, v)), 0)
            b = mult2.get((min(x, w), max(x, w)), 0)
            if a != b:
                return False
        return True

    def rec(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if not used[w] and consistent(v, w):
                perm[v] = w
                used[w] = True
                if rec(v + 1):
                    return True
                used[w] = False
                perm[v] = -1
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# named graphs and embeddings


def _complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple(itertools.combinations(range(n), 2)))


@lru_cache(maxsize=None)
def named_graph(name: str) -> Multigraph:
    name = name.lower()
    if name in ("k4", "tetrahedron"):
        return _complete_graph(4)
    if name == "k5":
        return _complete_graph(5)
    if name == "k33":
        edges = tuple((u, v) for u in range(3) for v in range(3, 6))
        return Multigraph(6, edges)
    if name == "cube":
        edges = tuple(
            (u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)
        )
        return Multigraph(8, edges)
    if name == "octahedron":
        skip = {(0, 1), (2, 3), (4, 5)}
        edges = tuple(e for e in itertools.combinations(range(6), 2) if e not in skip)
        return Multigraph(6, edges)
    if name == "triangle" or name == "c3":
        return Multigraph(3, ((0, 1), (1, 2), (0, 2)))
    if name.startswith("cycle:"):
        n = int(name.split(":")[1])
        return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if name.startswith("path:"):
        n = int(name.split(":")[1])
        return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))
    raise UnknownGraphName(f"unknown graph name {name!r}")


def _one_vertex_surface(genus: int) -> Embedding:
    """One vertex, 2g loops in the classic aba'b'... rotation order."""
    edges = tuple((0, 0) for _ in range(2 * genus))
    rot = []
    for h in range(genus):
        a, b = 2 * h, 2 * h + 1
        rot += [(a, 0), (b, 0), (a, 1), (b, 1)]
    return Embedding(Multigraph(1, edges), (tuple(rot),))


@lru_cache(maxsize=None)
def named_embedding(name: str) -> Embedding:
    """Named embeddings: planar solids get a searched genus-0 rotation."""
    name = name.lower()
    if name == "torus":
        return _one_vertex_surface(1)
    if name.startswith("genus:"):
        return _one_vertex_surface(int(name.split(":")[1]))
    g = named_graph(name)
    emb = find_planar_embedding(g)
    if emb is None:
        raise UnknownGraphName(f"no planar embedding available for {name!r}")
    return emb


# ---------------------------------------------------------------------------
# seeded generators (used by property and acceptance tests, and the CLI)


class _PlaneBuilder:
    """Grow a connected plane embedding by face-preserving operations.

    Every operation keeps the embedding genus 0 by construction: adding
    a pendant vertex in a face leaves the face count unchanged, adding a
    chord between two corners of one face splits it in two.
    """

    def __init__(self):
        self.edges: list[tuple[int, int]] = [(0, 1)]
        self.rot: list[list[Dart]] = [[(0, 0)], [(0, 1)]]

    def faces(self) -> list[tuple[Dart, ...]]:
        return _face_orbits(tuple(self.edges), self.rot)

    def _vertex_of(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def add_pendant(self, face: tuple[Dart, ...], pos: int) -> None:
        d = face[pos]
        u = self._vertex_of(d)
        w = len(self.rot)
        e = len(self.edges)
        self.edges.append((u, w))
        self.rot[u].insert(self.rot[u].index(d), (e, 0))
        self.rot.append([(e, 1)])

    def add_chord(self, face: tuple[Dart, ...], pos_a: int, pos_b: int) -> None:
        da, db = face[pos_a], face[pos_b]
        u, w = self._vertex_of(da), self._vertex_of(db)
        e = len(self.edges)
        self.edges.append((u, w))
        self.rot[u].insert(self.rot[u].index(da), (e, 0))
        self.rot[w].insert(self.rot[w].index(db), (e, 1))

    def embedding(self) -> Embedding:
        g = Multigraph(len(self.rot), tuple(self.edges))
        return Embedding(g, tuple(tuple(c) for c in self.rot))


def random_planar_embedding(
    rng: random.Random, max_vertices: int = 10, max_edges: int = 24
) -> Embedding:
    """A seeded random connected plane embedding (loops/parallels allowed)."""
    b = _PlaneBuilder()
    nv = rng.randint(2, max_vertices)
    ne = rng.randint(nv - 1, max_edges)
    while len(b.rot) < nv or len(b.edges) < ne:
        face = rng.choice(b.faces())
        can_grow_v = len(b.rot) < nv
        if can_grow_v and (len(b.edges) >= ne or rng.random() < 0.55):
            b.add_pendant(face, rng.randrange(len(face)))
        else:
            b.add_chord(face, rng.randrange(len(face)), rng.randrange(len(face)))
    return b.embedding()


def random_cellular_embedding(
    rng: random.Random, vertices: int = 5, extra_edges: int = 4
) -> Embedding:
    """A seeded random connected multigraph with a random rotation system.

    Nullity is vertices-1+extra_edges - (vertices-1) = extra_edges, so the
    genus is at most (extra_edges + 1) // 2.
    """
    edges = [(rng.randrange(v), v) for v in range(1, vertices)]
    for _ in range(extra_edges):
        u = rng.randrange(vertices)
        v = rng.randrange(vertices)
        edges.append((min(u, v), max(u, v)))
    g = Multigraph(vertices, tuple(edges))
    incident: list[list[Dart]] = [[] for _ in range(vertices)]
    for e, (u, v) in enumerate(g.edges):
        incident[u].append((e, 0))
        incident[v].append((e, 1))
    rot = []
    for darts in incident:
        darts = list(darts)
        rng.shuffle(darts)
        rot.append(tuple(darts))
    return Embedding(g, tuple(rot))


def disjoint_union_embeddings(embs: list[Embedding]) -> Embedding:
    """Place embeddings side by side with offset vertex and edge indices."""
    edges: list[tuple[int, int]] = []
    rot: list[tuple[Dart, ...]] = []
    voff = 0
    for emb in embs:
        eoff = len(edges)
        for u, v in emb.graph.edges:
            edges.append((u + voff, v + voff))
        for cyc in emb.rotation:
            rot.append(tuple((e + eoff, s) for e, s in cyc))
        voff += emb.graph.vertex_count
    return Embedding(Multigraph(voff, tuple(edges)), tuple(rot))


# ---------------------------------------------------------------------------
# text / JSON formats


def parse_graph(text: str) -> Multigraph:
    """Parse ``v:``/``e:`` lines or the JSON equivalent."""
    text = text.strip()
    if text.startswith("{"):
        import json

        data = json.loads(text)
        return Multigraph(data["vertices"], tuple(tuple(e) for e in data["edges"]))
    nv = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("v:"):
            nv = int(line[2:])
        elif line.startswith("e:"):
            u, v = line[2:].split()
            edges.append((int(u), int(v)))
        elif line.startswith("rot"):
            continue
        else:
            raise GraphError(f"unrecognized line {raw!r}")
    if nv is None:
        raise GraphError("missing 'v:' line")
    return Multigraph(nv, tuple(edges))


def parse_embedding(text: str) -> Embedding:
    """Parse a graph plus ``rot <vertex>: <signed 1-based edges>`` lines.

    +k is end 0 of edge k-1, -k is end 1; JSON uses explicit dart pairs.
    """
    text = text.strip()
    if text.startswith("{"):
        import json

        data = json.loads(text)
        g = Multigraph(data["vertices"], tuple(tuple(e) for e in data["edges"]))
        rot = tuple(tuple((e, s) for e, s in cyc) for cyc in data["rotation"])
        return Embedding(g, rot)
    g = parse_graph(text)
    rot: list[tuple[Dart, ...]] = [()] * g.vertex_count
    seen_rot = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line.startswith("rot"):
            continue
        head, _, rest = line.partition(":")
        v = int(head[3:])
        cyc = []
        for tok in rest.split():
            k = int(tok)
            if k == 0:
                raise GraphError("signed edge references are 1-based")
            cyc.append((abs(k) - 1, 0 if k > 0 else 1))
        rot[v] = tuple(cyc)
        seen_rot.add(v)
    if len(seen_rot) != g.vertex_count and any(
        g.degree(v) > 0 and v not in seen_rot for v in range(g.vertex_count)
    ):
        raise GraphError("every vertex with incident edges needs a rot line")
    return Embedding(g, tuple(rot))


def graph_to_json_dict(g: Multigraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def embedding_to_json_dict(emb: Embedding) -> dict:
    d = graph_to_json_dict(emb.graph)
    d["rotation"] = [[list(dart) for dart in cyc] for cyc in emb.rotation]
    return d


def embedding_to_text(emb: Embedding) -> str:
    lines = [f"v: {emb.graph.vertex_count}"]
    for u, v in emb.graph.edges:
        lines.append(f"e: {u} {v}")
    for v, cyc in enumerate(emb.rotation):
        toks = " ".join(str(e + 1) if s == 0 else str(-(e + 1)) for e, s in cyc)
        lines.append(f"rot {v}: {toks}")
    return "\n".join(lines) + "\n"
