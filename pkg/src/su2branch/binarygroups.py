"""Binary polyhedral subgroups of SU(2) as explicit unit quaternions.

A quaternion (w, x, y, z) stands for the special-unitary matrix

    [[ w + x*i,  y + z*i],
     [-y + z*i,  w - x*i]]

so the trace is 2w and the inverse is the conjugate.  Groups are closed
by breadth-first multiplication from fixed generators, deduplicating on
coordinates rounded to 9 decimals; all the exact coordinate values that
occur are far from rounding midpoints, so double precision has ample
headroom.  Character tables come from simultaneous diagonalization of
the class-sum structure constants (integer matrices), with a seeded
random linear combination, and are matched to extended-diagram nodes by
the tensor-with-defining-representation adjacency.

Generator conventions (exact coordinates, fixed for reproducibility):

* cyclic of order 2n       : r_n = (cos(pi/n), sin(pi/n), 0, 0)
* binary dihedral, order 4n: r_n and j = (0, 0, 1, 0)
* binary tetrahedral, 24   : i = (0, 1, 0, 0) and (1, 1, 1, 1)/2
* binary octahedral, 48    : the tetrahedral pair and (1, 1, 0, 0)/sqrt(2)
* binary icosahedral, 120  : i and (phi - 1, phi, 1, 0)/2 with
  phi = (1 + sqrt(5))/2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .branching import BranchParams, branch_params
from .errors import ConsistencyError
from .mckay import McKayGraph
from .rootsys import DiagramType, build_root_system

#: Decimal places used to deduplicate quaternion coordinates.
DEDUP_DECIMALS = 9
#: Tolerance for rounding character sums to integers.
CHAR_EPS = 1e-6

_PHI = (1.0 + math.sqrt(5.0)) / 2.0
_EIG_SEED = 20240801


@dataclass(frozen=True)
class GroupElement:
    """A unit quaternion, i.e. an element of SU(2)."""

    w: float
    x: float
    y: float
    z: float

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return GroupElement(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.w, -self.x, -self.y, -self.z)

    @property
    def trace(self) -> float:
        return 2.0 * self.w

    def norm_sq(self) -> float:
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.w + self.x * 1j, self.y + self.z * 1j],
                [-self.y + self.z * 1j, self.w - self.x * 1j],
            ]
        )

    def key(self) -> tuple[float, float, float, float]:
        return (
            round(self.w, DEDUP_DECIMALS) + 0.0,
            round(self.x, DEDUP_DECIMALS) + 0.0,
            round(self.y, DEDUP_DECIMALS) + 0.0,
            round(self.z, DEDUP_DECIMALS) + 0.0,
        )


IDENTITY = GroupElement(1.0, 0.0, 0.0, 0.0)
MINUS_IDENTITY = GroupElement(-1.0, 0.0, 0.0, 0.0)
I_UNIT = GroupElement(0.0, 1.0, 0.0, 0.0)
J_UNIT = GroupElement(0.0, 0.0, 1.0, 0.0)
OMEGA = GroupElement(0.5, 0.5, 0.5, 0.5)
C_OCT = GroupElement(1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0), 0.0, 0.0)
S_ICO = GroupElement((_PHI - 1.0) / 2.0, _PHI / 2.0, 0.5, 0.0)


def _rotation(n: int) -> GroupElement:
    return GroupElement(math.cos(math.pi / n), math.sin(math.pi / n), 0.0, 0.0)


def generators(dtype: DiagramType) -> tuple[GroupElement, ...]:
    """Fixed generator list per family (see module docstring)."""
    if dtype.family == "A":
        return (_rotation((dtype.rank + 1) // 2),)
    if dtype.family == "D":
        return (_rotation(dtype.rank - 2), J_UNIT)
    if dtype.rank == 6:
        return (I_UNIT, OMEGA)
    if dtype.rank == 7:
        return (I_UNIT, OMEGA, C_OCT)
    return (I_UNIT, S_ICO)


@dataclass(eq=False)
class FiniteGroup:
    """A closed binary polyhedral group with index-based tables.

    ``elements[0]`` is the identity.  ``classes`` are conjugacy classes
    as sorted index tuples, ordered by their smallest member, so the
    identity class is first.
    """

    dtype: DiagramType
    elements: tuple[GroupElement, ...]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    minus_identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)


def build_group(dtype: DiagramType | str, params: BranchParams | None = None) -> FiniteGroup:
    """Close the generators and compute tables and conjugacy classes.

    The expected order comes from the denominator exponents (a*b/2);
    overshooting it during closure aborts, as does any product that
    escapes the closed set, a class count different from rank + 1, or a
    non-singleton class at +-identity.
    """
    if isinstance(dtype, str):
        dtype = DiagramType.parse(dtype)
    if params is None:
        params = branch_params(build_root_system(dtype))
    expected = params.order_fstar

    gens = generators(dtype)
    elements: list[GroupElement] = [IDENTITY]
    index: dict[tuple[float, float, float, float], int] = {IDENTITY.key(): 0}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for a in frontier:
            for gen in gens:
                p = a * gen
                if abs(p.norm_sq() - 1.0) > 1e-9:
                    raise ConsistencyError(f"{dtype}: closure drifted off the unit sphere")
                k = p.key()
                if k not in index:
                    if len(elements) >= expected:
                        raise ConsistencyError(
                            f"{dtype}: closure exceeds the expected order {expected}"
                        )
                    index[k] = len(elements)
                    elements.append(p)
                    nxt.append(p)
        frontier = nxt
    n = len(elements)
    if n != expected:
        raise ConsistencyError(f"{dtype}: closure has {n} elements, expected {expected}")

    def lookup(p: GroupElement) -> int:
        try:
            return index[p.key()]
        except KeyError:
            raise ConsistencyError(f"{dtype}: product escaped the closed set") from None

    mult = tuple(
        tuple(lookup(elements[i] * elements[j]) for j in range(n)) for i in range(n)
    )
    inverse = tuple(lookup(e.inverse()) for e in elements)
    minus_identity = lookup(MINUS_IDENTITY)
    for g in range(n):
        if mult[minus_identity][g] != mult[g][minus_identity]:
            raise ConsistencyError(f"{dtype}: -identity is not central")

    classes, class_of = conjugacy_classes(dtype, mult, inverse, minus_identity)
    return FiniteGroup(
        dtype=dtype,
        elements=tuple(elements),
        mult=mult,
        inverse=inverse,
        classes=classes,
        class_of=class_of,
        minus_identity=minus_identity,
    )


def conjugacy_classes(
    dtype: DiagramType,
    mult: tuple[tuple[int, ...], ...],
    inverse: tuple[int, ...],
    minus_identity: int,
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Partition element indices into conjugation orbits.

    The class count must be rank + 1 and the classes of +-identity must
    be singletons; anything else aborts.
    """
    n = len(inverse)
    class_of_list = [-1] * n
    classes: list[tuple[int, ...]] = []
    for e in range(n):
        if class_of_list[e] >= 0:
            continue
        orbit = {mult[mult[g][e]][inverse[g]] for g in range(n)}
        members = tuple(sorted(orbit))
        cid = len(classes)
        for m in members:
            class_of_list[m] = cid
        classes.append(members)

    if len(classes) != dtype.rank + 1:
        raise ConsistencyError(
            f"{dtype}: {len(classes)} conjugacy classes, expected {dtype.rank + 1}"
        )
    for special in (0, minus_identity):
        if len(classes[class_of_list[special]]) != 1:
            raise ConsistencyError(f"{dtype}: central element has a non-singleton class")
    return tuple(classes), tuple(class_of_list)


def su2_character(g: GroupElement, n: int) -> float:
    """Trace of the (n+1)-dimensional SU(2) representation at ``g``.

    chi_0 = 1, chi_1 = trace, chi_(k+1) = trace * chi_k - chi_(k-1);
    a polynomial in the trace, so exact at +-identity.
    """
    return _char_from_trace(g.trace, n)


def _char_from_trace(trace: float, n: int) -> float:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = 1.0, trace
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, trace * cur - prev
    return cur


def _round_int(value: float, what: str) -> int:
    out = round(value)
    if abs(value - out) >= CHAR_EPS:
        raise ConsistencyError(f"{what} = {value!r} is not within {CHAR_EPS} of an integer")
    return int(out)


def molien_series(group: FiniteGroup, order: int) -> tuple[int, ...]:
    """Invariant dimensions by direct group averaging of SU(2) traces.

    Independent of the character table: sums chi_n over every element
    and divides by the order, rounding within tolerance.
    """
    traces = [e.trace for e in group.elements]
    prev = [1.0] * group.order
    cur = list(traces)
    out = []
    for n in range(order + 1):
        vals = prev if n == 0 else cur
        avg = sum(vals) / group.order
        m = _round_int(avg, f"{group.dtype} invariant dimension at n={n}")
        if m < 0:
            raise ConsistencyError(f"{group.dtype}: negative invariant dimension at n={n}")
        out.append(m)
        if n >= 1:
            prev, cur = cur, [traces[i] * cur[i] - prev[i] for i in range(group.order)]
    return tuple(out)


@dataclass(eq=False)
class CharacterTable:
    """Irreducible characters by conjugacy class, tied to diagram nodes.

    ``rows[r][c]`` is the value of irreducible r on class c; ``node_map``
    sends each extended-diagram node to its row.
    """

    group: FiniteGroup
    rows: tuple[tuple[complex, ...], ...]
    dims: tuple[int, ...]
    node_map: tuple[int, ...]
    _traces: tuple[float, ...] = field(repr=False, default=())

    def character_for_node(self, node: int) -> tuple[complex, ...]:
        return self.rows[self.node_map[node]]


def _class_structure_matrices(group: FiniteGroup) -> list[list[list[int]]]:
    classes = group.classes
    reps = group.representatives()
    r = len(classes)
    out = []
    for ci in range(r):
        m = [[0] * r for _ in range(r)]
        for k, zk in enumerate(reps):
            for x in classes[ci]:
                y = group.mult[group.inverse[x]][zk]
                m[group.class_of[y]][k] += 1
        out.append(m)
    return out


def character_table(group: FiniteGroup, graph: McKayGraph) -> CharacterTable:
    """Compute all irreducible characters and match them to nodes.

    Rows are recovered as common eigenvectors of the class-sum matrices
    (one random seeded combination, verified against every matrix and
    retried on degeneracy), normalized so the identity value is the
    positive integer dimension.  The node matching is forced by the
    trivial character at node 0, equal dimensions and marks, and the
    tensor adjacency; choices left open by diagram automorphisms are
    resolved deterministically and do not affect any multiplicity.
    """
    r = len(group.classes)
    if r != graph.size:
        raise ConsistencyError(
            f"{group.dtype}: {r} classes but {graph.size} extended nodes"
        )
    sizes = group.class_sizes
    reps = group.representatives()
    mats = [np.array(m, dtype=float) for m in _class_structure_matrices(group)]

    rng = np.random.default_rng(_EIG_SEED)
    rows_raw: list[np.ndarray] | None = None
    for _ in range(32):
        combo = sum(c * m for c, m in zip(rng.standard_normal(r), mats))
        _, vecs = np.linalg.eig(combo)
        candidates = []
        good = True
        for c in range(r):
            v = vecs[:, c]
            if abs(v[0]) < 1e-10:
                good = False
                break
            v = v / v[0]
            for m in mats:
                image = m @ v
                if np.max(np.abs(image - image[0] * v)) > 1e-6 * (1.0 + np.max(np.abs(v))):
                    good = False
                    break
            if not good:
                break
            candidates.append(v)
        if good:
            rows_raw = candidates
            break
    if rows_raw is None:
        raise ConsistencyError(f"{group.dtype}: class-sum diagonalization failed")

    rows: list[tuple[complex, ...]] = []
    dims: list[int] = []
    for v in rows_raw:
        weight = sum(abs(v[j]) ** 2 / sizes[j] for j in range(r))
        d = _round_int(math.sqrt(group.order / weight), f"{group.dtype} character degree")
        if d < 1:
            raise ConsistencyError(f"{group.dtype}: nonpositive character degree")
        rows.append(tuple(complex(d * v[j] / sizes[j]) for j in range(r)))
        dims.append(d)

    order = sorted(
        range(r),
        key=lambda idx: (
            dims[idx],
            tuple((round(c.real, 6), round(c.imag, 6)) for c in rows[idx]),
        ),
    )
    rows = [rows[idx] for idx in order]
    dims = [dims[idx] for idx in order]

    gram_err = 0.0
    for p in range(r):
        for q in range(r):
            val = (
                sum(sizes[c] * rows[p][c] * rows[q][c].conjugate() for c in range(r))
                / group.order
            )
            gram_err = max(gram_err, abs(val - (1.0 if p == q else 0.0)))
    if gram_err > CHAR_EPS:
        raise ConsistencyError(
            f"{group.dtype}: character rows not orthonormal (error {gram_err:.2e})"
        )
    if sorted(dims) != sorted(graph.marks_ext):
        raise ConsistencyError(
            f"{group.dtype}: character degrees {sorted(dims)} do not match marks "
            f"{sorted(graph.marks_ext)}"
        )

    traces = tuple(group.elements[rep].trace for rep in reps)
    tensor = [[0] * r for _ in range(r)]
    for p in range(r):
        for q in range(r):
            val = (
                sum(
                    sizes[c] * rows[p][c] * traces[c] * rows[q][c].conjugate()
                    for c in range(r)
                )
                / group.order
            )
            tensor[p][q] = _round_int(val.real, f"{group.dtype} tensor multiplicity")
            if abs(val.imag) >= CHAR_EPS:
                raise ConsistencyError(f"{group.dtype}: complex tensor multiplicity")

    trivial = [
        idx
        for idx in range(r)
        if dims[idx] == 1 and max(abs(c - 1.0) for c in rows[idx]) < CHAR_EPS
    ]
    if len(trivial) != 1:
        raise ConsistencyError(f"{group.dtype}: trivial character not unique")

    node_map = _match_nodes(graph, tensor, dims, trivial[0])
    return CharacterTable(
        group=group,
        rows=tuple(rows),
        dims=tuple(dims),
        node_map=node_map,
        _traces=traces,
    )


def _match_nodes(
    graph: McKayGraph, tensor: list[list[int]], dims: list[int], trivial_row: int
) -> tuple[int, ...]:
    size = graph.size
    adj = graph.adjacency

    bfs = [0]
    seen = {0}
    for node in bfs:
        for j in range(size):
            if adj[node][j] and j not in seen:
                seen.add(j)
                bfs.append(j)
    if len(bfs) != size:
        raise ConsistencyError(f"{graph.dtype}: extended diagram is not connected")

    assign: dict[int, int] = {0: trivial_row}
    used = {trivial_row}

    def backtrack(pos: int) -> bool:
        if pos == size:
            return True
        node = bfs[pos]
        for row in range(size):
            if row in used or dims[row] != graph.marks_ext[node]:
                continue
            if all(tensor[row][assign[m]] == adj[node][m] for m in assign):
                assign[node] = row
                used.add(row)
                if backtrack(pos + 1):
                    return True
                del assign[node]
                used.discard(row)
        return False

    if dims[trivial_row] != graph.marks_ext[0] or not backtrack(1):
        raise ConsistencyError(
            f"{graph.dtype}: tensor adjacency does not match the extended diagram"
        )
    return tuple(assign[node] for node in range(size))


def oracle_multiplicity(group: FiniteGroup, table: CharacterTable, n: int, node: int) -> int:
    """Multiplicity of the node's irreducible in the level-n restriction,
    by the character inner product; rounds within tolerance or aborts."""
    sizes = group.class_sizes
    row = table.character_for_node(node)
    total = 0j
    for c in range(len(sizes)):
        total += sizes[c] * _char_from_trace(table._traces[c], n) * row[c].conjugate()
    val = total / group.order
    if abs(val.imag) >= CHAR_EPS:
        raise ConsistencyError(f"{group.dtype}: complex multiplicity at n={n}, node={node}")
    m = _round_int(val.real, f"{group.dtype} multiplicity at n={n}, node={node}")
    if m < 0:
        raise ConsistencyError(f"{group.dtype}: negative multiplicity at n={n}, node={node}")
    return m


def character_multiplicities(
    group: FiniteGroup, table: CharacterTable, order: int
) -> list[tuple[int, ...]]:
    """Multiplicity vectors over extended nodes for n = 0..order.

    Same inner product as :func:`oracle_multiplicity`, evaluated with a
    single running recursion over the class traces.
    """
    sizes = group.class_sizes
    r = len(sizes)
    traces = table._traces
    num_nodes = len(table.node_map)
    weights = [
        [sizes[c] * table.character_for_node(node)[c].conjugate() for c in range(r)]
        for node in range(num_nodes)
    ]
    prev = [1.0] * r
    cur = list(traces)
    out = []
    for n in range(order + 1):
        vals = prev if n == 0 else cur
        vec = []
        for node in range(num_nodes):
            total = sum(vals[c] * weights[node][c] for c in range(r))
            total /= group.order
            if abs(total.imag) >= CHAR_EPS:
                raise ConsistencyError(
                    f"{group.dtype}: complex multiplicity at n={n}, node={node}"
                )
            m = _round_int(total.real, f"{group.dtype} multiplicity at n={n}, node={node}")
            if m < 0:
                raise ConsistencyError(
                    f"{group.dtype}: negative multiplicity at n={n}, node={node}"
                )
            vec.append(m)
        out.append(tuple(vec))
        if n >= 1:
            prev, cur = cur, [traces[c] * cur[c] - prev[c] for c in range(r)]
    return out
