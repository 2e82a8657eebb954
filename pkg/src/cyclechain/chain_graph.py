"""Chain-of-cycles graphs with their canonical edge labeling.

A member of the family consists of r cycles C_1..C_r with lengths
m_1..m_r in which consecutive cycles share exactly one edge and
non-consecutive cycles share none, together with an attached forest of t
extra edges.  The edge count is n = sum(m) - (r - 1) + t and the vertex
count is n - r + 1.

Edges are labeled

    e_{1,1} .. e_{1,m1}, e_{2,1} .. e_{2,m2-1}, ..., e_{r,1} .. e_{r,mr-1},
    e_1 .. e_t

where cycle j >= 2 consists of its own labels plus the shared edge
e_{j-1,1}, and e_{j,1} is the edge shared with cycle j+1 whenever j < r.
Ground-set indices follow this label order, which makes every ordering in
the package reproducible.

Besides construction, this module enumerates the composite cycles
C_{i,...,i+k} (symmetric differences of runs of consecutive simple cycles),
their lengths, and their pairwise intersection sizes.  Intersections are
computed exactly from edge sets; a separate nine-row closed-form predictor
is evaluated alongside and the agreement is reported, never assumed.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

from .edgeset import MAX_GROUND, EdgeSet
from .errors import BadAttachment, CapacityExceeded, IndexOutOfRange, InvalidLength


@dataclass(frozen=True)
class CycleEdge:
    """Label e_{j,i}: position i inside cycle j."""

    cycle: int
    position: int

    def __str__(self) -> str:
        return f"e_{{{self.cycle},{self.position}}}"


@dataclass(frozen=True)
class ForestEdge:
    """Label e_k for the k-th forest edge."""

    index: int

    def __str__(self) -> str:
        return f"e_{self.index}"


EdgeLabel = CycleEdge | ForestEdge


class ChainGraph:
    """Immutable labeled chain-of-cycles graph.

    Instances are only built through build_chain_graph, which also runs the
    structural validation.  Equality and hashing use the defining data
    (r, m, forest attachments), so graphs work as cache keys.
    """

    def __init__(
        self,
        r: int,
        m: tuple[int, ...],
        endpoints: tuple[tuple[int, int], ...],
        labels: tuple[EdgeLabel, ...],
        forest_attachments: tuple[int, ...],
    ):
        self.r = r
        self.m = m
        self.endpoints = endpoints
        self.labels = labels
        self.forest_attachments = forest_attachments
        self.t = len(forest_attachments)
        self.n = len(endpoints)
        self.num_vertices = self.n - r + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainGraph):
            return NotImplemented
        return (self.r, self.m, self.forest_attachments) == (
            other.r,
            other.m,
            other.forest_attachments,
        )

    def __hash__(self) -> int:
        return hash((self.r, self.m, self.forest_attachments))

    def __repr__(self) -> str:
        return f"ChainGraph(r={self.r}, m={list(self.m)}, t={self.t})"

    @cached_property
    def label_index(self) -> dict[EdgeLabel, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: EdgeLabel) -> int:
        try:
            return self.label_index[label]
        except KeyError:
            raise IndexOutOfRange(f"no edge labeled {label}") from None

    def label_of(self, index: int) -> EdgeLabel:
        if not 0 <= index < self.n:
            raise IndexOutOfRange(f"edge index {index} outside 0..{self.n - 1}")
        return self.labels[index]

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: tuple of (neighbor, edge index)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for e, (u, v) in enumerate(self.endpoints):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def cycle_offsets(self) -> tuple[int, ...]:
        """Ground index where each cycle's own label block starts."""
        offs = [0]
        for j in range(1, self.r):
            prev_len = self.m[0] if j == 1 else self.m[j - 1] - 1
            offs.append(offs[-1] + prev_len)
        return tuple(offs)

    @cached_property
    def common_edge_indices(self) -> tuple[int, ...]:
        """Ground index of e_{j,1} for j = 1..r-1, the shared edges."""
        return tuple(self.cycle_offsets[j - 1] for j in range(1, self.r))

    @cached_property
    def simple_cycle_masks(self) -> tuple[int, ...]:
        """Edge bitmask of C_j for j = 1..r (index j-1)."""
        masks = []
        for j in range(1, self.r + 1):
            off = self.cycle_offsets[j - 1]
            own = self.m[0] if j == 1 else self.m[j - 1] - 1
            mask = ((1 << own) - 1) << off
            if j >= 2:
                mask |= 1 << self.cycle_offsets[j - 2]
            masks.append(mask)
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_set(self, mask: int) -> EdgeSet:
        return EdgeSet(mask, self.n)


def build_chain_graph(r: int, m, forest=0) -> ChainGraph:
    """Construct the canonical graph for cycle lengths m and a forest.

    forest is either an edge count (the default shape is a path of that
    length hanging from the first vertex of cycle 1) or an explicit list of
    attachment vertex ids, one per forest edge.  Each forest edge connects
    its attachment vertex to a fresh vertex, so attachments may also name
    vertices created by earlier forest edges.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidLength(f"need r >= 1 cycles, got {r!r}")
    m = tuple(m)
    if len(m) != r:
        raise InvalidLength(f"expected {r} cycle lengths, got {len(m)}")
    for mi in m:
        if not isinstance(mi, int) or mi < 3:
            raise InvalidLength(f"cycle lengths must be integers >= 3, got {mi!r}")

    if isinstance(forest, int):
        if forest < 0:
            raise InvalidLength(f"forest edge count must be >= 0, got {forest}")
        t = forest
        attach_spec = None
    else:
        attach_spec = [int(a) for a in forest]
        t = len(attach_spec)

    n = sum(m) - (r - 1) + t
    if n > MAX_GROUND:
        raise CapacityExceeded(f"graph needs {n} edges, capacity is {MAX_GROUND}")

    endpoints: list[tuple[int, int]] = []
    labels: list[EdgeLabel] = []

    # Cycle 1 is the ring 0,1,..,m1-1 with e_{1,p} = (p-1, p mod m1).
    for p in range(1, m[0] + 1):
        endpoints.append((p - 1, p % m[0]))
        labels.append(CycleEdge(1, p))
    next_vertex = m[0]

    # Each later cycle is a fresh path closing up the previous shared edge
    # (ca, cb).  The first path edge becomes the next shared edge e_{j,1}.
    ca, cb = 0, 1
    for j in range(2, r + 1):
        prev = cb
        first_new = -1
        for p in range(1, m[j - 1]):
            if p < m[j - 1] - 1:
                nxt = next_vertex
                next_vertex += 1
            else:
                nxt = ca
            endpoints.append((prev, nxt))
            labels.append(CycleEdge(j, p))
            if p == 1:
                first_new = nxt
            prev = nxt
        ca, cb = cb, first_new

    attachments: list[int] = []
    if attach_spec is None:
        anchor = 0
        for k in range(1, t + 1):
            endpoints.append((anchor, next_vertex))
            labels.append(ForestEdge(k))
            attachments.append(anchor)
            anchor = next_vertex
            next_vertex += 1
    else:
        for k, a in enumerate(attach_spec, start=1):
            if not 0 <= a < next_vertex:
                raise BadAttachment(
                    f"forest edge e_{k} attaches at vertex {a}, "
                    f"but only vertices 0..{next_vertex - 1} exist"
                )
            endpoints.append((a, next_vertex))
            labels.append(ForestEdge(k))
            attachments.append(a)
            next_vertex += 1

    g = ChainGraph(r, m, tuple(endpoints), tuple(labels), tuple(attachments))
    _validate(g)
    return g


def _validate(g: ChainGraph) -> None:
    # Construction bugs, not user errors, so plain RuntimeError.
    if g.num_vertices != max(v for uv in g.endpoints for v in uv) + 1:
        raise RuntimeError("vertex count does not match n - r + 1")
    seen = [False] * g.num_vertices
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    if not all(seen):
        raise RuntimeError("graph is not connected")
    for j in range(g.r):
        for jj in range(j + 1, g.r):
            shared = (g.simple_cycle_masks[j] & g.simple_cycle_masks[jj]).bit_count()
            want = 1 if jj == j + 1 else 0
            if shared != want:
                raise RuntimeError(f"cycles {j + 1} and {jj + 1} share {shared} edges")
    cyc_all = 0
    for mask in g.simple_cycle_masks:
        cyc_all |= mask
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (u, v) in enumerate(g.endpoints):
        if cyc_all >> e & 1:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            raise RuntimeError("edges outside the cycles contain a cycle")
        parent[ru] = rv


@dataclass(frozen=True)
class CompositeCycle:
    """Cycle C_{start,...,start+span} of the chain (span = 0 is simple)."""

    start: int
    span: int
    edges: EdgeSet


def cycle_count(r: int) -> int:
    """Number of cycles of the chain, r(r+1)/2."""
    return r * (r + 1) // 2


def _check_range(g: ChainGraph, i: int, k: int) -> None:
    if not (1 <= i and 0 <= k and i + k <= g.r):
        raise IndexOutOfRange(f"cycle range (i={i}, k={k}) invalid for r={g.r}")


def composite_cycle(g: ChainGraph, i: int, k: int) -> CompositeCycle:
    """C_{i,...,i+k} as the symmetric difference of its simple cycles."""
    _check_range(g, i, k)
    mask = 0
    for a in range(i, i + k + 1):
        mask ^= g.simple_cycle_masks[a - 1]
    if not _is_simple_cycle(g, mask):
        raise RuntimeError(f"composite ({i},{k}) is not a simple cycle")
    return CompositeCycle(i, k, g.edge_set(mask))


def composite_length(g: ChainGraph, i: int, k: int) -> int:
    """Edge count of C_{i,...,i+k}: the length sum minus 2k."""
    _check_range(g, i, k)
    return sum(g.m[i - 1 + a] for a in range(k + 1)) - 2 * k


def all_cycles(g: ChainGraph) -> list[CompositeCycle]:
    """All r(r+1)/2 cycles, in lexicographic (span, start) order."""
    out = []
    for k in range(g.r):
        for i in range(1, g.r - k + 1):
            out.append(composite_cycle(g, i, k))
    return out


def _is_simple_cycle(g: ChainGraph, mask: int) -> bool:
    if mask == 0:
        return False
    degree: dict[int, int] = {}
    for e in range(g.n):
        if mask >> e & 1:
            u, v = g.endpoints[e]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    start = next(iter(degree))
    seen_v = {start}
    seen_e = 0
    stack = [start]
    while stack:
        u = stack.pop()
        for v, e in g.adjacency[u]:
            if mask >> e & 1 and not seen_e >> e & 1:
                seen_e |= 1 << e
                if v not in seen_v:
                    seen_v.add(v)
                    stack.append(v)
    return len(seen_v) == len(degree) and seen_e == mask


def cycle_intersection_size(g: ChainGraph, a: CompositeCycle, b: CompositeCycle) -> int:
    """Exact intersection size of two cycles, straight from the edge sets."""
    return len(a.edges & b.edges)


def intersection_formula(g: ChainGraph, a: CompositeCycle, b: CompositeCycle) -> tuple[int, int]:
    """Closed-form predictor for the intersection size.

    Returns (predicted size, row id 1..9).  The pair is normalized so the
    first cycle has the smaller span; rows are tried top to bottom and the
    first match wins.  Row 3 only applies to strictly nested ranges with
    equal left ends, which keeps identical cycles in the identity row 4.
    """
    i, k, j, l = a.start, a.span, b.start, b.span
    if k > l:
        i, k, j, l = j, l, i, k
    if i + k == j - 1:
        return 1, 1
    if 0 <= i + k - j <= k - 1:
        return composite_length(g, j, i + k - j) - 2, 2
    if i == j and k < l:
        return composite_length(g, j, k) - 1, 3
    if i + k == j + l and l == k:
        return composite_length(g, j, l), 4
    if k + 1 <= i + k - j <= l - 1:
        return composite_length(g, i, k) - 2, 5
    if i + k == j + l:
        return composite_length(g, i, k) - 1, 6
    if 1 <= i + k - j - l <= k:
        return composite_length(g, i, k - (i + k - j - l)) - 2, 7
    if i == j + l + 1:
        return 1, 8
    return 0, 9


@dataclass(frozen=True)
class PairComparison:
    a: tuple[int, int]
    b: tuple[int, int]
    exact: int
    predicted: int
    row: int

    @property
    def agree(self) -> bool:
        return self.exact == self.predicted


def intersection_report(g: ChainGraph) -> list[PairComparison]:
    """Exact vs predicted intersection size for every unordered cycle pair."""
    cycles = all_cycles(g)
    out = []
    for a, b in itertools.combinations_with_replacement(cycles, 2):
        predicted, row = intersection_formula(g, a, b)
        out.append(
            PairComparison(
                (a.start, a.span),
                (b.start, b.span),
                cycle_intersection_size(g, a, b),
                predicted,
                row,
            )
        )
    return out
