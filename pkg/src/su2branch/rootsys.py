"""Simply laced (ADE) root systems over the simple-root basis.

Roots are integer coefficient tuples over the simple roots and the
bilinear form is the Cartan pairing, normalized so that every root has
squared length 2.  All arithmetic is exact.

Node numbering (convention tag ``"v1"``; every module and all CLI
output use it):

* ``A(l)`` -- nodes ``1 .. l`` along the path.
* ``D(l)`` -- nodes ``1 .. l-2`` along a path; the two fork tails are
  ``l-1`` and ``l``, both attached to the branch node ``l-2``.
* ``E(l)`` -- nodes ``1 .. l-1`` along a path; node ``l`` is the short
  branch tail, attached to node 3 (the branch node).

Type A is only built for odd rank; even-rank A diagrams belong to the
odd-order cyclic subgroups, which sit outside the binary polyhedral
families handled by this package, so they are rejected up front.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ConsistencyError

#: Version tag for the node-numbering convention, carried by JSON output.
NODE_CONVENTION = "v1"

Root = tuple[int, ...]

_E_BRANCH = 3


@dataclass(frozen=True)
class DiagramType:
    """A simply laced diagram: family ``A``, ``D`` or ``E`` plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}; expected A, D or E")
        r = self.rank
        if self.family == "A" and (r < 1 or r % 2 == 0):
            raise ValueError(f"A{r} is not supported: type A requires odd rank >= 1")
        if self.family == "D" and r < 4:
            raise ValueError(f"D{r} is not supported: type D requires rank >= 4")
        if self.family == "E" and r not in (6, 7, 8):
            raise ValueError(f"E{r} is not supported: type E requires rank 6, 7 or 8")

    @classmethod
    def parse(cls, text: str) -> "DiagramType":
        m = re.fullmatch(r"\s*([ADEade])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(
                f"cannot parse diagram type {text!r} (expected e.g. 'A7', 'D5', 'E8')"
            )
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def dynkin_edges(dtype: DiagramType) -> tuple[tuple[int, int], ...]:
    """Edges of the diagram as (i, j) pairs with i < j, 1-based nodes."""
    r = dtype.rank
    if dtype.family == "A":
        return tuple((i, i + 1) for i in range(1, r))
    if dtype.family == "D":
        path = tuple((i, i + 1) for i in range(1, r - 2))
        return path + ((r - 2, r - 1), (r - 2, r))
    path = tuple((i, i + 1) for i in range(1, r - 1))
    return path + ((_E_BRANCH, r),)


def cartan_matrix(dtype: DiagramType) -> tuple[tuple[int, ...], ...]:
    r = dtype.rank
    c = [[0] * r for _ in range(r)]
    for i in range(r):
        c[i][i] = 2
    for i, j in dynkin_edges(dtype):
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A built ADE root system.

    ``roots`` lists all roots, positive roots first (ordered by height,
    then lexicographically) and then their negatives in matching order,
    so root ``i`` and root ``i + num_positive`` are negatives of each
    other.  Instances are immutable and safe to share.
    """

    dtype: DiagramType
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    num_positive: int
    highest_root: Root
    marks: tuple[int, ...]
    coxeter_number: int
    _index: dict[Root, int] = field(repr=False)
    _adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.dtype.rank

    @property
    def nodes(self) -> range:
        """Node indices 1 .. rank."""
        return range(1, self.rank + 1)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[: self.num_positive]

    def simple_root(self, i: int) -> Root:
        self._check_node(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def mark(self, i: int) -> int:
        """Coefficient of the simple root ``i`` in the highest root."""
        self._check_node(i)
        return self.marks[i - 1]

    def inner(self, x: Root, y: Root) -> int:
        """Cartan pairing; bilinear, symmetric, (alpha, alpha) = 2."""
        c = self.cartan
        n = self.rank
        total = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = c[i]
                total += xi * sum(row[j] * y[j] for j in range(n))
        return total

    def pair_with_simple(self, x: Root, i: int) -> int:
        """(x, alpha_i), i.e. the i-th entry of the Cartan image of x."""
        self._check_node(i)
        row = self.cartan[i - 1]
        return sum(row[j] * x[j] for j in range(self.rank))

    def reflect(self, i: int, x: Root) -> Root:
        """Reflection in the hyperplane orthogonal to alpha_i."""
        c = self.pair_with_simple(x, i)
        out = list(x)
        out[i - 1] -= c
        return tuple(out)

    def is_root(self, x: Root) -> bool:
        return x in self._index

    def index_of(self, x: Root) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x} is not a root of {self.dtype}") from None

    def root_at(self, idx: int) -> Root:
        return self.roots[idx]

    def negation(self, idx: int) -> int:
        """Index of the negative of the root at ``idx``."""
        p = self.num_positive
        return idx + p if idx < p else idx - p

    def neighbors(self, i: int) -> tuple[int, ...]:
        self._check_node(i)
        return self._adjacency[i - 1]

    def affine_attachment(self) -> tuple[int, ...]:
        """Nodes pairing strictly positively with the highest root.

        These are exactly the nodes the affine vertex attaches to in the
        extended diagram: both path ends for type A, node 2 for type D,
        one arm end for type E.
        """
        psi = self.highest_root
        return tuple(i for i in self.nodes if self.pair_with_simple(psi, i) > 0)

    def distances_from(self, sources: tuple[int, ...]) -> dict[int, int]:
        """Graph distance from the nearest of ``sources``, per node."""
        dist = {i: 0 for i in sources}
        frontier = list(sources)
        while frontier:
            nxt = []
            for i in frontier:
                for j in self.neighbors(i):
                    if j not in dist:
                        dist[j] = dist[i] + 1
                        nxt.append(j)
            frontier = nxt
        return dist

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError(f"node index {i} out of range for {self.dtype}")


def build_root_system(dtype: DiagramType | str) -> RootSystem:
    """Construct the root system for an accepted ADE diagram type.

    Positive roots are generated by breadth-first closure from the
    simple roots: a simple root alpha may be added to a known root r
    exactly when (r, alpha) = -1.  No Weyl-group enumeration is used.
    """
    if isinstance(dtype, str):
        dtype = DiagramType.parse(dtype)
    rank = dtype.rank
    cartan = cartan_matrix(dtype)

    def pair(x: Root, i: int) -> int:
        row = cartan[i]
        return sum(row[j] * x[j] for j in range(rank))

    simples = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    pos: set[Root] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                if pair(r, i) == -1:
                    s = list(r)
                    s[i] += 1
                    t = tuple(s)
                    if t not in pos:
                        pos.add(t)
                        nxt.append(t)
        frontier = nxt

    positives = sorted(pos, key=lambda r: (sum(r), r))
    num_positive = len(positives)
    if (2 * num_positive) % rank != 0:
        raise ConsistencyError(
            f"{dtype}: {num_positive} positive roots do not divide into rank {rank} orbits"
        )
    h = 2 * num_positive // rank
    if h % 2 != 0:
        raise ConsistencyError(f"{dtype}: Coxeter number {h} is odd")

    psi = positives[-1]
    if num_positive > 1 and sum(positives[-2]) == sum(psi):
        raise ConsistencyError(f"{dtype}: highest root is not unique")
    for i in range(rank):
        above = list(psi)
        above[i] += 1
        if tuple(above) in pos:
            raise ConsistencyError(f"{dtype}: highest root is not maximal")
    if any(m < 1 for m in psi):
        raise ConsistencyError(f"{dtype}: highest root has a nonpositive mark")

    roots = tuple(positives) + tuple(tuple(-c for c in r) for r in positives)
    index = {r: k for k, r in enumerate(roots)}

    adjacency: list[list[int]] = [[] for _ in range(rank)]
    for i, j in dynkin_edges(dtype):
        adjacency[i - 1].append(j)
        adjacency[j - 1].append(i)

    return RootSystem(
        dtype=dtype,
        cartan=cartan,
        roots=roots,
        num_positive=num_positive,
        highest_root=psi,
        marks=psi,
        coxeter_number=h,
        _index=index,
        _adjacency=tuple(tuple(sorted(a)) for a in adjacency),
    )
