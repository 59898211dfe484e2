"""The bipartite Coxeter element and its orbit structure on the roots.

The diagram is two-colored so that each color class consists of
pairwise orthogonal simple roots; the products tau_1 and tau_2 of the
reflections in each class are involutions, and sigma = tau_2 tau_1 is a
Coxeter element of order h.  Negating the simple roots of the second
class yields one representative per sigma-orbit, and every positive
root picks up a well-defined exponent n in [1, h] recording how far
along its orbit it sits.  Permutations of the root set are stored as
index arrays over the fixed root enumeration of :class:`RootSystem`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyError
from .rootsys import Root, RootSystem

Perm = tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """(p o q)[x] = p[q[x]]: apply q first, then p."""
    return tuple(p[x] for x in q)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_power(p: Perm, k: int) -> Perm:
    if k < 0:
        return perm_power(perm_inverse(p), -k)
    out = perm_identity(len(p))
    base = p
    while k:
        if k & 1:
            out = perm_compose(base, out)
        base = perm_compose(base, base)
        k >>= 1
    return out


@dataclass(frozen=True)
class Bipartition:
    """The unique two-coloring with the highest-root side labeled 1.

    Nodes in ``part2`` are orthogonal to the highest root; nodes within
    one part are pairwise orthogonal.
    """

    part1: tuple[int, ...]
    part2: tuple[int, ...]

    def side(self, i: int) -> int:
        if i in self.part1:
            return 1
        if i in self.part2:
            return 2
        raise IndexError(f"node index {i} not in bipartition")


def bipartition(rs: RootSystem) -> Bipartition:
    """Two-color the diagram; the class meeting the highest root is part 1."""
    color = {1: 0}
    frontier = [1]
    while frontier:
        nxt = []
        for i in frontier:
            for j in rs.neighbors(i):
                if j not in color:
                    color[j] = 1 - color[i]
                    nxt.append(j)
        frontier = nxt

    hot = rs.affine_attachment()
    hot_colors = {color[i] for i in hot}
    if len(hot_colors) != 1:
        raise ConsistencyError(
            f"{rs.dtype}: nodes meeting the highest root fall in both color classes"
        )
    c1 = hot_colors.pop()
    part1 = tuple(sorted(i for i in rs.nodes if color[i] == c1))
    part2 = tuple(sorted(i for i in rs.nodes if color[i] != c1))
    return Bipartition(part1, part2)


def special_index(rs: RootSystem) -> int:
    """The branch node (types D, E) or the path midpoint (type A).

    The returned node lands in part 2 of the bipartition exactly when
    h/2 is even; this is asserted.
    """
    if rs.dtype.family == "A":
        i_star = (rs.rank + 1) // 2
    else:
        branches = [i for i in rs.nodes if len(rs.neighbors(i)) == 3]
        if len(branches) != 1:
            raise ConsistencyError(f"{rs.dtype}: expected exactly one branch node")
        i_star = branches[0]
    g = rs.coxeter_number // 2
    side = bipartition(rs).side(i_star)
    if (side == 2) != (g % 2 == 0):
        raise ConsistencyError(
            f"{rs.dtype}: special node {i_star} sits on side {side} but g = {g}"
        )
    return i_star


@dataclass(frozen=True, eq=False)
class CoxeterAction:
    """sigma = tau_2 tau_1 acting on the full root list, plus its factors."""

    order: int
    tau1: Perm
    tau2: Perm
    sigma: Perm
    sigma_inv: Perm


def _reflection_perm(rs: RootSystem, i: int) -> Perm:
    return tuple(rs.index_of(rs.reflect(i, r)) for r in rs.roots)


def _class_involution(rs: RootSystem, nodes: tuple[int, ...]) -> Perm:
    out = perm_identity(len(rs.roots))
    for i in nodes:  # ascending; factors commute, order fixed for reproducibility
        out = perm_compose(_reflection_perm(rs, i), out)
    return out


def coxeter_element(rs: RootSystem, bp: Bipartition) -> CoxeterAction:
    """Build tau_1, tau_2 and sigma = tau_2 tau_1; sigma has order h."""
    n = len(rs.roots)
    tau1 = _class_involution(rs, bp.part1)
    tau2 = _class_involution(rs, bp.part2)
    for name, tau in (("tau1", tau1), ("tau2", tau2)):
        if perm_compose(tau, tau) != perm_identity(n):
            raise ConsistencyError(f"{rs.dtype}: {name} is not an involution")
    sigma = perm_compose(tau2, tau1)

    h = rs.coxeter_number
    power = sigma
    order = 1
    ident = perm_identity(n)
    while power != ident:
        power = perm_compose(sigma, power)
        order += 1
        if order > h:
            raise ConsistencyError(f"{rs.dtype}: sigma order exceeds h = {h}")
    if order != h:
        raise ConsistencyError(f"{rs.dtype}: sigma has order {order}, expected h = {h}")
    return CoxeterAction(
        order=h, tau1=tau1, tau2=tau2, sigma=sigma, sigma_inv=perm_inverse(sigma)
    )


@dataclass(frozen=True, eq=False)
class OrbitTable:
    """Orbit membership, parity class and exponent for every root.

    ``signed_simples[i-1]`` is beta_i: alpha_i on side 1, -alpha_i on
    side 2.  ``orbits[i-1][m]`` is the root index sent to beta_i by the
    m-th power of sigma.  For each positive root index: ``orbit_node``
    gives the node i of its orbit, ``parity`` the side of that node and
    ``exponent`` the exponent n (odd on side 1, even on side 2).
    """

    signed_simples: tuple[Root, ...]
    orbits: tuple[tuple[int, ...], ...]
    orbit_node: dict[int, int] = field(repr=False)
    parity: dict[int, int] = field(repr=False)
    exponent: dict[int, int] = field(repr=False)


def orbit_table(rs: RootSystem, cox: CoxeterAction, bp: Bipartition) -> OrbitTable:
    """Decompose the roots into sigma-orbits and attach exponents.

    Each orbit is walked backwards from beta_i (repeatedly applying
    sigma inverse), so position m in the walk satisfies sigma^m(root) =
    beta_i.  The exponent is n = 2m + 1 on side 1 and n = 2m on side 2;
    over the positive part of each orbit, (n-1)/2 runs bijectively over
    {0..g-1} on side 1 and n/2 over {1..g} on side 2.  Any violation of
    the orbit-size, uniqueness or bijection properties raises.
    """
    h = rs.coxeter_number
    g = h // 2
    num_pos = rs.num_positive

    betas: list[Root] = []
    for i in rs.nodes:
        alpha = rs.simple_root(i)
        betas.append(alpha if bp.side(i) == 1 else tuple(-c for c in alpha))
    beta_indices = {rs.index_of(b) for b in betas}

    orbits: list[tuple[int, ...]] = []
    orbit_node: dict[int, int] = {}
    parity: dict[int, int] = {}
    exponent: dict[int, int] = {}
    covered: set[int] = set()

    for i in rs.nodes:
        k = bp.side(i)
        start = rs.index_of(betas[i - 1])
        walk: list[int] = []
        cur = start
        while True:
            walk.append(cur)
            cur = cox.sigma_inv[cur]
            if cur == start:
                break
            if len(walk) > h:
                raise ConsistencyError(
                    f"{rs.dtype}: orbit of beta_{i} exceeds {h} elements"
                )
        if len(walk) != h:
            raise ConsistencyError(
                f"{rs.dtype}: orbit of beta_{i} has {len(walk)} elements, expected {h}"
            )
        if len(set(walk) & beta_indices) != 1:
            raise ConsistencyError(
                f"{rs.dtype}: orbit of beta_{i} meets the signed simple roots "
                f"{len(set(walk) & beta_indices)} times"
            )
        if set(walk) & covered:
            raise ConsistencyError(f"{rs.dtype}: orbit of beta_{i} overlaps another orbit")
        covered.update(walk)

        steps = []
        for m, idx in enumerate(walk):
            orbit_node[idx] = i
            if idx < num_pos:
                n = 2 * m + 1 if k == 1 else 2 * m
                if not 1 <= n <= h:
                    raise ConsistencyError(
                        f"{rs.dtype}: root {rs.root_at(idx)} got exponent {n} outside [1, {h}]"
                    )
                parity[idx] = k
                exponent[idx] = n
                steps.append(m)
        if len(steps) != g:
            raise ConsistencyError(
                f"{rs.dtype}: orbit of beta_{i} has {len(steps)} positive roots, expected {g}"
            )
        expected = set(range(g)) if k == 1 else set(range(1, g + 1))
        if set(steps) != expected:
            raise ConsistencyError(
                f"{rs.dtype}: exponent map on orbit of beta_{i} is not a bijection"
            )
        orbits.append(tuple(walk))

    if len(covered) != len(rs.roots):
        raise ConsistencyError(
            f"{rs.dtype}: orbits cover {len(covered)} of {len(rs.roots)} roots"
        )
    return OrbitTable(
        signed_simples=tuple(betas),
        orbits=tuple(orbits),
        orbit_node=orbit_node,
        parity=parity,
        exponent=exponent,
    )


def longest_element_checks(
    rs: RootSystem, cox: CoxeterAction, bp: Bipartition, table: OrbitTable
) -> list[tuple[str, bool, str]]:
    """Assertions about sigma^g acting as the longest Weyl element.

    Returns (name, passed, detail) triples; callers decide how to report.
    """
    h = rs.coxeter_number
    g = h // 2
    num_pos = rs.num_positive
    kappa = perm_power(cox.sigma, g)
    results: list[tuple[str, bool, str]] = []

    bad = [rs.root_at(x) for x in range(num_pos) if kappa[x] < num_pos]
    results.append(
        (
            "sigma^g sends every positive root to a negative root",
            not bad,
            f"{num_pos - len(bad)}/{num_pos} positive roots negated"
            + (f"; offenders {bad[:3]}" if bad else ""),
        )
    )

    for kk, part in ((1, bp.part1), (2, bp.part2)):
        want = {rs.negation(rs.index_of(rs.simple_root(i))) for i in part}
        got = {kappa[rs.index_of(rs.simple_root(i))] for i in part}
        results.append(
            (
                f"sigma^g negates color class {kk} setwise",
                got == want,
                f"{len(part)} simple roots checked",
            )
        )

    i_star = special_index(rs)
    a_star = rs.index_of(rs.simple_root(i_star))
    ok = kappa[a_star] == rs.negation(a_star)
    results.append(
        (
            "sigma^g negates the special simple root",
            ok,
            f"node {i_star}" + ("" if ok else f"; image {rs.root_at(kappa[a_star])}"),
        )
    )

    psi_idx = rs.index_of(rs.highest_root)
    beta_star_idx = rs.index_of(table.signed_simples[i_star - 1])
    steps = (g - 1) // 2 if g % 2 == 1 else g // 2
    reached = perm_power(cox.sigma, steps)[psi_idx]
    results.append(
        (
            "highest root reaches the signed special root in (g-1)/2 or g/2 steps",
            reached == beta_star_idx,
            f"g = {g}, steps = {steps}"
            + ("" if reached == beta_star_idx else f"; landed on {rs.root_at(reached)}"),
        )
    )
    results.append(
        (
            "highest root and special root share an orbit",
            table.orbit_node[psi_idx] == i_star,
            f"orbit of highest root: node {table.orbit_node[psi_idx]}",
        )
    )

    ident = perm_identity(len(rs.roots))
    results.append(
        (
            "sigma^2g is the identity",
            perm_power(kappa, 2) == ident,
            f"2g = {2 * g}",
        )
    )
    commutes = perm_compose(kappa, cox.tau1) == perm_compose(cox.tau1, kappa) and (
        perm_compose(kappa, cox.tau2) == perm_compose(cox.tau2, kappa)
    )
    results.append(("sigma^g commutes with tau1 and tau2", commutes, "both factors"))
    return results
