"""Maximal antipodal sets as Weyl orbits of the canonical element xi_I.

The Weyl group acts on dual-basis (coweight) coordinates, where entry j of a
vector is the value of alpha_j on it: s_j(v)_k = v_k - v_j * C[k][j].  The
orbit of xi_I is enumerated by a level-synchronized BFS that only ever steps
"down" from the dominant representative, so deduplication is per level and
exact; its size must equal |W| / |W_parabolic| where the parabolic stabilizer
is generated by the simple reflections fixing xi_I.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .admissible import IndexSet, is_admissible
from .roots import RootSystem, RootSystemType

CoweightVector = tuple[int, ...]

DEFAULT_ORBIT_BUDGET = 50_000_000
_BUDGET_ENV_VAR = "RSPACES_ORBIT_BUDGET"


def default_budget() -> int:
    """Element cap for orbit enumeration; override with RSPACES_ORBIT_BUDGET."""
    raw = os.environ.get(_BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_ORBIT_BUDGET


def xi_vector(I: IndexSet, rank: int) -> CoweightVector:
    """xi_I in dual-basis coordinates: the 0/1 indicator vector of I."""
    return tuple(1 if j in I else 0 for j in range(1, rank + 1))


def reflect(v: CoweightVector, j: int, system: RootSystem) -> CoweightVector:
    """Simple reflection s_j on dual-basis coordinates; involutive, integer-exact."""
    r = system.rank
    if not 1 <= j <= r:
        raise IndexError(f"index {j} out of range for rank {r}")
    c = system.cartan
    vj = v[j - 1]
    return tuple(v[k] - vj * c[k][j - 1] for k in range(r))


@dataclass(frozen=True)
class OrbitResult:
    """Size (and optionally the points) of the Weyl orbit of xi_I."""

    size: int
    weyl_order: int
    stabilizer_order: int
    method: str  # "enumeration", "order_formula", or "both"
    elements: tuple[CoweightVector, ...] | None = None
    budget_exceeded: bool = False

    def to_dict(self) -> dict:
        out = {
            "size": self.size,
            "weyl_order": self.weyl_order,
            "stabilizer_order": self.stabilizer_order,
            "method": self.method,
            "budget_exceeded": self.budget_exceeded,
        }
        if self.elements is not None:
            out["elements"] = [list(v) for v in self.elements]
        return out


def weyl_group_order(rst: RootSystemType) -> int:
    """Order of the Weyl group; BC_r shares the B_r group."""
    r = rst.rank
    fam = rst.family
    if fam == "A":
        return math.factorial(r + 1)
    if fam in ("B", "C", "BC"):
        return (1 << r) * math.factorial(r)
    if fam == "D":
        return (1 << (r - 1)) * math.factorial(r)
    if fam == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[r]
    if fam == "F":
        return 1152
    if fam == "G":
        return 12
    raise AssertionError(fam)


def classify_subdiagram(
    cartan: tuple[tuple[int, ...], ...], nodes: tuple[int, ...]
) -> RootSystemType:
    """Type of one connected Dynkin subdiagram, from degrees and edge weights.

    nodes are 0-based positions into the ambient Cartan matrix and must form a
    connected induced subgraph.  B_2 is returned for the ambiguous rank-2
    double-edge diagram (same Weyl group as C_2).
    """
    n = len(nodes)
    if n == 1:
        return RootSystemType("A", 1)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            i, j = nodes[a], nodes[b]
            if cartan[i][j]:
                edges.append((a, b, cartan[i][j] * cartan[j][i]))
    degree = [0] * n
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    if any(w == 3 for _, _, w in edges):
        if n != 2:
            raise ValueError("triple edge only occurs in G2")
        return RootSystemType("G", 2)
    doubles = [(a, b) for a, b, w in edges if w == 2]
    if doubles:
        if len(doubles) != 1 or max(degree) > 2:
            raise ValueError("unrecognized multiply-laced subdiagram")
        a, b = doubles[0]
        if n == 2:
            return RootSystemType("B", 2)
        if degree[a] == 2 and degree[b] == 2:
            if n != 4:
                raise ValueError("interior double edge only occurs in F4")
            return RootSystemType("F", 4)
        end = a if degree[a] == 1 else b
        other = b if end == a else a
        # <alpha_long, alpha_short^vee> = -2: row of the long root holds the -2
        long_is_end = cartan[nodes[end]][nodes[other]] == -2
        return RootSystemType("C" if long_is_end else "B", n)
    if max(degree) == 2 or n == 2:
        return RootSystemType("A", n)
    hubs = [a for a in range(n) if degree[a] == 3]
    if len(hubs) != 1 or max(degree) > 3:
        raise ValueError("unrecognized branching in simply-laced subdiagram")
    arms = sorted(_arm_lengths(edges, hubs[0], n))
    if arms[0] == 1 and arms[1] == 1:
        return RootSystemType("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return RootSystemType("E", n)
    raise ValueError(f"unrecognized arm profile {arms}")


def _arm_lengths(edges: list[tuple[int, int, int]], hub: int, n: int) -> list[int]:
    adj: dict[int, list[int]] = {a: [] for a in range(n)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    lengths = []
    for start in adj[hub]:
        length, prev, cur = 1, hub, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


def _connected_components(
    cartan: tuple[tuple[int, ...], ...], vertices: list[int]
) -> list[tuple[int, ...]]:
    vertex_set = set(vertices)
    seen: set[int] = set()
    components = []
    for v in vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in vertex_set:
                if y not in seen and cartan[x][y]:
                    seen.add(y)
                    stack.append(y)
        components.append(tuple(sorted(comp)))
    return components


def stabilizer_order(system: RootSystem, I: IndexSet) -> int:
    """Order of the parabolic stabilizer of xi_I.

    xi_I is dominant, so its stabilizer is generated by the simple reflections
    s_j with j outside I; the order is the product of Weyl orders over the
    connected components of the Dynkin subdiagram on the complement.
    """
    if not I:
        raise ValueError("index set must be non-empty")
    rest = [j for j in range(system.rank) if (j + 1) not in I]
    order = 1
    for comp in _connected_components(system.cartan, rest):
        order *= weyl_group_order(classify_subdiagram(system.cartan, comp))
    return order


def _orbit_bfs(
    system: RootSystem, start: CoweightVector, budget: int, keep_elements: bool
) -> tuple[int, np.ndarray | None]:
    """Exact orbit size by descending level BFS; optionally all points.

    From a dominant start, applying s_j only where v_j > 0 strictly increases
    the distance from the dominant chamber, so levels never collide and a
    per-level unique pass suffices for global deduplication.
    """
    r = system.rank
    cols = np.array(system.cartan, dtype=np.int16).T.copy()  # cols[j] = C[:, j]
    level = np.array([start], dtype=np.int16)
    total = 0
    collected: list[np.ndarray] = []
    while level.size:
        total += len(level)
        if total > budget:
            raise MemoryError(f"orbit exceeds enumeration budget {budget}")
        if keep_elements:
            collected.append(level)
        parts = []
        for j in range(r):
            mask = level[:, j] > 0
            if mask.any():
                sel = level[mask]
                parts.append(sel - np.outer(sel[:, j], cols[j]))
        if not parts:
            break
        stacked = np.vstack(parts)
        level = _unique_rows(stacked)
    if keep_elements:
        points = np.vstack(collected)
        points = points[np.lexsort(points.T[::-1])]
        return total, points
    return total, None


def _unique_rows(arr: np.ndarray) -> np.ndarray:
    """Deduplicate int16 rows; packs into int64 keys when coordinates permit."""
    r = arr.shape[1]
    if r * 7 <= 63:
        lo = int(arr.min())
        hi = int(arr.max())
        if -64 <= lo and hi < 64:
            shifts = np.arange(r, dtype=np.int64) * 7
            keys = ((arr.astype(np.int64) + 64) << shifts).sum(axis=1)
            _, idx = np.unique(keys, return_index=True)
            return arr[idx]
    return np.unique(arr, axis=0)


def orbit(
    system: RootSystem,
    I: IndexSet,
    enumerate: bool = False,
    keep_elements: bool = False,
    budget: int | None = None,
) -> OrbitResult:
    """Weyl orbit of xi_I: by the order formula, by BFS, or both.

    With enumerate=True the BFS runs and must agree with the quotient
    |W| / |stabilizer|; orbits larger than the budget fall back to the
    formula with budget_exceeded set.  keep_elements materializes the
    lexicographically sorted point list (implies enumerate).
    """
    if not I:
        raise ValueError("index set must be non-empty")
    if I.mask >> system.rank:
        raise ValueError(f"index set {I} exceeds rank {system.rank}")
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        raise ValueError("budget must be positive")
    w = weyl_group_order(system.type)
    stab = stabilizer_order(system, I)
    predicted, rem = divmod(w, stab)
    if rem:
        raise AssertionError(f"stabilizer order {stab} does not divide |W| = {w}")
    enumerate = enumerate or keep_elements
    if not enumerate:
        return OrbitResult(predicted, w, stab, "order_formula")
    if predicted > budget:
        return OrbitResult(predicted, w, stab, "order_formula", budget_exceeded=True)
    size, points = _orbit_bfs(system, xi_vector(I, system.rank), budget, keep_elements)
    if size != predicted:
        raise AssertionError(
            f"orbit enumeration found {size} points but |W|/|W_I| = {predicted}"
        )
    elements = tuple(map(tuple, points.tolist())) if points is not None else None
    return OrbitResult(size, w, stab, "both", elements=elements)


def two_number(system: RootSystem, I: IndexSet) -> int:
    """Cardinality of a maximal antipodal set of X_I: the Weyl orbit size of xi_I.

    Requires I admissible; otherwise the index set carries no compatible
    family of point symmetries and the antipodal count is undefined.
    """
    if not I:
        raise ValueError("index set must be non-empty")
    if not is_admissible(system, I):
        raise ValueError(
            f"{I} is not admissible for {system.type}: some positive root is even "
            "and nonzero on it, so the required symmetric structure does not exist"
        )
    return orbit(system, I).size


def elements_to_bytes(elements: tuple[CoweightVector, ...]) -> bytes:
    """Flat little-endian int16 dump of orbit points, row-major, presorted order."""
    return np.array(elements, dtype="<i2").tobytes()
