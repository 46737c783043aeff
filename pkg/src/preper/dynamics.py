"""Orbits and preperiodic points of z**2 + c over Q.

Every rational preperiodic point of z**2 + c is constrained two ways:

* at each prime p dividing the denominator of c, an eventually periodic
  point must have v_p(x) = v_p(c)/2 exactly (so the denominator of c must
  be a perfect square d**2 and every candidate is k/d with k coprime to d);
  at all other primes v_p(x) >= 0;
* in absolute value, |x| <= B where B is the positive root of B**2 - B = |c|,
  because |x| > B forces |x**2 + c| > |x| and the orbit escapes.

Both tests are decidable in exact rational arithmetic, the candidate box
is finite, and iteration inside the box must repeat, so classification and
full enumeration terminate unconditionally.

Graphs are canonicalized as functional digraphs: rooted trees hang off
cycle vertices, trees get sorted-parenthesis codes, cycles get the
lexicographically minimal rotation of their tree-code sequence.  The
catalog of shapes allowed by the classification theorems for cycle
lengths up to 3 is a derived catalog: twelve graphs (the empty one
included) assembled from the structural rules, not hard-coded codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt


@dataclass(frozen=True)
class QuadMap:
    """The polynomial z**2 + c."""

    c: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return x * x + self.c


@dataclass(frozen=True)
class OrbitClass:
    """Orbit type of a point: periodic(m), preperiodic(m, n), or divergent.

    m is the exact cycle length; n >= 1 is the number of steps before the
    orbit becomes periodic.
    """

    kind: str  # "periodic" | "preperiodic" | "divergent"
    period: int = 0
    tail: int = 0

    @classmethod
    def periodic(cls, m: int) -> "OrbitClass":
        return cls("periodic", m, 0)

    @classmethod
    def preperiodic(cls, m: int, n: int) -> "OrbitClass":
        return cls("preperiodic", m, n)

    @classmethod
    def divergent(cls) -> "OrbitClass":
        return cls("divergent")

    @property
    def is_divergent(self) -> bool:
        return self.kind == "divergent"

    def __str__(self) -> str:
        if self.kind == "periodic":
            return f"periodic({self.period})"
        if self.kind == "preperiodic":
            return f"type {self.period}_{self.tail}"
        return "divergent"


@dataclass(frozen=True)
class PreperGraph:
    """Finite rational preperiodic points of z**2 + c with edges x -> f(x).

    The fixed point at infinity is not a vertex; includes_infinity records
    that it exists so counts can add one for it.
    """

    c: Fraction
    vertices: frozenset[Fraction]
    edges: dict[Fraction, Fraction] = field(compare=False)
    includes_infinity: bool = True

    def orbit_types(self) -> dict[Fraction, OrbitClass]:
        f = QuadMap(self.c)
        return {v: orbit_classify(f, v) for v in self.vertices}

    def size_with_infinity(self) -> int:
        return len(self.vertices) + (1 if self.includes_infinity else 0)


@dataclass(frozen=True, order=True)
class GraphShape:
    """Canonical code of a functional digraph up to isomorphism."""

    code: str

    def __str__(self) -> str:
        return self.code or "(empty)"


class NotQuadraticError(ValueError):
    pass


def normalize_quadratic(a: Fraction, b: Fraction, c0: Fraction):
    """Conjugate a*z**2 + b*z + c0 to z**2 + c via ell(z) = a*z + b/2.

    Returns (c, (a, b/2)); ell maps preperiodic points of the original map
    bijectively onto those of z**2 + c.
    """
    a, b, c0 = Fraction(a), Fraction(b), Fraction(c0)
    if a == 0:
        raise NotQuadraticError("leading coefficient must be nonzero")
    c = a * c0 + b / 2 - b * b / 4
    return c, (a, b / 2)


def _denominator_root(c: Fraction) -> int | None:
    """d with d**2 = denominator(c), or None when there is no such d."""
    D = c.denominator
    d = isqrt(D)
    return d if d * d == D else None


def _within_escape_bound(x: Fraction, c: Fraction) -> bool:
    # |x| <= 1/2 + sqrt(1/4 + |c|)  <=>  |x| < 1/2 or |x|(|x| - 1) <= |c|
    ax = abs(x)
    return 2 * ax <= 1 or ax * (ax - 1) <= abs(c)


def orbit_classify(f: QuadMap, x: Fraction) -> OrbitClass:
    """Exact orbit type of x under z**2 + c; always terminates."""
    c = f.c
    d = _denominator_root(c)
    if d is None:
        return OrbitClass.divergent()
    seen: dict[Fraction, int] = {}
    y = Fraction(x)
    while y not in seen:
        if y.denominator != d or not _within_escape_bound(y, c):
            return OrbitClass.divergent()
        seen[y] = len(seen)
        y = f(y)
    first = seen[y]
    period = len(seen) - first
    if first == 0:
        return OrbitClass.periodic(period)
    return OrbitClass.preperiodic(period, first)


def preper_points(f: QuadMap) -> PreperGraph:
    """The complete graph of finite rational preperiodic points of f."""
    c = f.c
    d = _denominator_root(c)
    vertices: set[Fraction] = set()
    if d is not None:
        # candidates k/d with gcd(k, d) = 1 and k*k - k*d <= |c|*d*d
        cn, cd = abs(c).numerator, abs(c).denominator
        kmax = (d * (cd + isqrt(cd * cd + 4 * cd * cn))) // (2 * cd) + 1
        for k in range(-kmax, kmax + 1):
            if gcd(k, d) != 1:
                continue
            x = Fraction(k, d)
            if not _within_escape_bound(x, c):
                continue
            if not orbit_classify(f, x).is_divergent:
                vertices.add(x)
    edges = {v: f(v) for v in vertices}
    for v, w in edges.items():
        assert w in vertices, f"image {w} of vertex {v} escaped the vertex set"
    return PreperGraph(c=c, vertices=frozenset(vertices), edges=edges)


# --- canonical shapes -------------------------------------------------------


def _shape_of_edges(edges: dict) -> GraphShape:
    """Canonical code of a functional digraph given as vertex -> image."""
    if not edges:
        return GraphShape("")
    vertices = set(edges)
    # cycle vertices: following the map from v returns to v
    cyclic = set()
    for v in vertices:
        tortoise = v
        for _ in range(len(vertices)):
            tortoise = edges[tortoise]
        # after |V| steps we are on the cycle of v's component
        probe, cycle = tortoise, []
        while probe not in cycle:
            cycle.append(probe)
            probe = edges[probe]
        cyclic.update(cycle)
    children: dict = {v: [] for v in vertices}
    for v in vertices:
        if v not in cyclic:
            children[edges[v]].append(v)

    def tree_code(v) -> str:
        return "(" + "".join(sorted(tree_code(ch) for ch in children[v])) + ")"

    components = []
    done = set()
    for v in sorted(cyclic, key=repr):
        if v in done:
            continue
        cycle = [v]
        w = edges[v]
        while w != v:
            cycle.append(w)
            w = edges[w]
        done.update(cycle)
        codes = [tree_code(u) for u in cycle]
        m = len(cycle)
        best = min(tuple(codes[(i + j) % m] for j in range(m)) for i in range(m))
        components.append(f"{m}:" + ",".join(best))
    return GraphShape(";".join(sorted(components)))


def graph_shape(g: PreperGraph) -> GraphShape:
    return _shape_of_edges(g.edges)


def _build_graph(components) -> GraphShape:
    """Assemble an abstract graph from component specs and canonicalize.

    Each component is (m, tails) where tails is a per-cycle-vertex list:
    None for no tail, or an integer giving how many depth-2 vertices hang
    off that cycle vertex's single mirror tail.
    """
    edges = {}
    fresh = itertools.count()
    for m, tails in components:
        cyc = [f"c{next(fresh)}" for _ in range(m)]
        for i, v in enumerate(cyc):
            edges[v] = cyc[(i + 1) % m]
        for i, deep_count in enumerate(tails):
            if deep_count is None:
                continue
            tail = f"t{next(fresh)}"
            edges[tail] = cyc[i]
            for _ in range(deep_count):
                deep = f"d{next(fresh)}"
                edges[deep] = tail
    return _shape_of_edges(edges)


def admissible_shapes() -> frozenset[GraphShape]:
    """All graph shapes consistent with the classification theorems for
    cycles of length at most 3.

    Cycle content is limited to: up to two fixed points, at most one
    2-cycle (possibly alongside the fixed points), or a single 3-cycle
    alone.  Every nonzero cycle point contributes exactly one mirror tail;
    a zero cycle point contributes none.  Depth-2 points come in a pair on
    a single tail (for cycle length 1 they may coincide, giving a single
    depth-2 chain), exclude coexisting cycles of other lengths, and no
    tail extends to depth 3.
    """
    catalog = {
        # no finite preperiodic points at all (e.g. c = 1)
        _build_graph([]),
        # one fixed point with its mirror (c = 1/4 only)
        _build_graph([(1, [0])]),
        # two fixed points, one of them zero (c = 0 only)
        _build_graph([(1, [0]), (1, [None])]),
        # two fixed points, both mirrored (generic fixed-point pair)
        _build_graph([(1, [0]), (1, [0])]),
        # coincident depth-2 pair on one branch (c = -2 only)
        _build_graph([(1, [1]), (1, [0])]),
        # depth-2 pair on one branch (generic 1_2 family)
        _build_graph([(1, [2]), (1, [0])]),
        # 2-cycle through zero (c = -1 only)
        _build_graph([(2, [0, None])]),
        # generic 2-cycle
        _build_graph([(2, [0, 0])]),
        # 2-cycle with a depth-2 pair (generic 2_2 family)
        _build_graph([(2, [2, 0])]),
        # fixed points and 2-cycle together
        _build_graph([(1, [0]), (1, [0]), (2, [0, 0])]),
        # generic 3-cycle
        _build_graph([(3, [0, 0, 0])]),
        # 3-cycle with a depth-2 pair (c = -29/16 only)
        _build_graph([(3, [2, 0, 0])]),
    }
    return frozenset(catalog)


# --- census scan ------------------------------------------------------------


def c_values_up_to_height(height: int) -> list[Fraction]:
    """All c = u/v**2 in lowest terms with |u| <= height and v**2 <= height,
    in a fixed deterministic order."""
    if height < 1:
        raise ValueError("height bound must be >= 1")
    out = []
    v = 1
    while v * v <= height:
        for u in range(-height, height + 1):
            if gcd(u, v) == 1:
                out.append(Fraction(u, v * v))
        v += 1
    return out


@dataclass
class ScanResult:
    height: int
    census: dict[GraphShape, tuple[int, list[Fraction]]]
    out_of_catalog: list[tuple[Fraction, GraphShape]]
    bound_violations: list[tuple[Fraction, int]]  # (c, size counting infinity)


def _scan_chunk(args) -> list[tuple[str, int, Fraction, int]]:
    """Worker: (index, c-list) -> [(shape code, index, c, size_with_inf)]."""
    start, cs = args
    out = []
    for offset, c in enumerate(cs):
        g = preper_points(QuadMap(c))
        out.append((graph_shape(g).code, start + offset, c, g.size_with_infinity()))
    return out


def scan(height: int, jobs: int = 1) -> ScanResult:
    """Census of graph shapes over all c up to the given height.

    The result is independent of the worker count: records are merged in
    global iteration order before aggregation.
    """
    cs = c_values_up_to_height(height)
    if jobs <= 1 or len(cs) < 2 * jobs:
        records = _scan_chunk((0, cs))
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunk = (len(cs) + jobs - 1) // jobs
        tasks = [(i, cs[i:i + chunk]) for i in range(0, len(cs), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
        records = [r for part in parts for r in part]
    records.sort(key=lambda r: r[1])

    catalog = admissible_shapes()
    census: dict[GraphShape, tuple[int, list[Fraction]]] = {}
    out_of_catalog = []
    bound_violations = []
    for code, _idx, c, size in records:
        shape = GraphShape(code)
        count, samples = census.get(shape, (0, []))
        if len(samples) < 3:
            samples = samples + [c]
        census[shape] = (count + 1, samples)
        if shape not in catalog:
            out_of_catalog.append((c, shape))
        if size > 9:
            bound_violations.append((c, size))
    ordered = dict(sorted(census.items()))
    return ScanResult(height=height, census=ordered,
                      out_of_catalog=out_of_catalog,
                      bound_violations=bound_violations)
