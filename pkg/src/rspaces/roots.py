"""Irreducible root systems as exact integer data in the simple-root basis.

Every root is a tuple of non-negative integer coefficients (c_1, ..., c_r)
with respect to the simple roots in Bourbaki numbering.  Reduced systems are
generated from the Cartan matrix by root-string closure; the non-reduced
family BC is built from its explicit coordinate model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")

# minimal rank per family; E is special-cased to {6, 7, 8}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "F": 4, "G": 2, "BC": 1}

_POSITIVE_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "BC": lambda r: r * r + r,
}
_EXCEPTIONAL_COUNTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


class RootSystemError(ValueError):
    """Raised for invalid root-system parameters or queries."""


@dataclass(frozen=True, order=True)
class RootSystemType:
    """A family label plus rank, e.g. RootSystemType("B", 3)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise RootSystemError(f"family E requires rank in {{6, 7, 8}}, got {self.rank}")
        elif self.family in ("F", "G"):
            need = _MIN_RANK[self.family]
            if self.rank != need:
                raise RootSystemError(f"family {self.family} requires rank == {need}, got {self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise RootSystemError(
                f"family {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @property
    def reduced(self) -> bool:
        """False exactly for the BC family."""
        return self.family != "BC"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(rst: RootSystemType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [k][j] = <alpha_k, alpha_j^vee>, Bourbaki numbering.

    For BC_r this returns the B_r matrix: BC_r shares the B_r Weyl group, and
    the matrix is only ever used for reflections, never for generation.
    """
    fam, r = rst.family, rst.rank
    if fam == "BC":
        fam = "B"
    if fam == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
        edges = [(1, 3), (3, 4), (2, 4)] + [(j, j + 1) for j in range(4, r)]
        return _simply_laced_cartan(r, edges)
    if fam == "A":
        return _simply_laced_cartan(r, [(j, j + 1) for j in range(1, r)])
    if fam == "D":
        edges = [(j, j + 1) for j in range(1, r - 1)] + [(r - 2, r)]
        return _simply_laced_cartan(r, edges)
    if fam == "B":
        if r == 1:  # only reachable via BC_1, whose Weyl group is W(B_1) = W(A_1)
            return ((2,),)
        # alpha_r is the short root: <alpha_{r-1}, alpha_r^vee> = -2
        m = _chain_cartan(r)
        m[r - 2][r - 1] = -2
        return tuple(tuple(row) for row in m)
    if fam == "C":
        # alpha_r is the long root: <alpha_r, alpha_{r-1}^vee> = -2
        m = _chain_cartan(r)
        m[r - 1][r - 2] = -2
        return tuple(tuple(row) for row in m)
    if fam == "F":
        m = _chain_cartan(4)
        m[1][2] = -2  # alpha_2 long, alpha_3 short
        return tuple(tuple(row) for row in m)
    if fam == "G":
        # alpha_1 short, alpha_2 long
        return ((2, -1), (-3, 2))
    raise AssertionError(fam)


def _chain_cartan(r: int) -> list[list[int]]:
    return [
        [2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)]
        for i in range(r)
    ]


def _simply_laced_cartan(r: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for a, b in edges:
        m[a - 1][b - 1] = -1
        m[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class RootSystem:
    """Immutable positive-root data for one irreducible system.

    positive_roots is sorted lexicographically; all arithmetic downstream is
    exact integer, so instances are safe to share across threads.
    """

    type: RootSystemType
    positive_roots: tuple[Root, ...]
    cartan: tuple[tuple[int, ...], ...]
    highest_root: Root
    simple_roots: tuple[Root, ...]
    _root_set: frozenset[Root] = field(repr=False, hash=False, compare=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.type.rank

    def __contains__(self, root: Root) -> bool:
        return tuple(root) in self._root_set

    def __str__(self) -> str:
        return str(self.type)


def build(rst: RootSystemType) -> RootSystem:
    """Construct the full positive-root list for the given type."""
    cartan = cartan_matrix(rst)
    r = rst.rank
    if rst.family == "BC":
        roots = _bc_positive_roots(r)
    else:
        roots = _generate_by_closure(cartan)
    roots = tuple(sorted(roots))
    expected = positive_root_count(rst)
    if len(roots) != expected:
        raise AssertionError(f"{rst}: generated {len(roots)} roots, expected {expected}")
    highest = max(roots, key=sum)
    if any(any(c > h for c, h in zip(root, highest)) for root in roots):
        raise AssertionError(f"{rst}: no coefficient-wise maximal root")
    simple = tuple(tuple(1 if k == j else 0 for k in range(r)) for j in range(r))
    return RootSystem(rst, roots, cartan, highest, simple, frozenset(roots))


def positive_root_count(rst: RootSystemType) -> int:
    """Closed-form |positive roots| per type."""
    if rst.family in _POSITIVE_ROOT_COUNTS:
        return _POSITIVE_ROOT_COUNTS[rst.family](rst.rank)
    return _EXCEPTIONAL_COUNTS[(rst.family, rst.rank)]


def _generate_by_closure(cartan: tuple[tuple[int, ...], ...]) -> set[Root]:
    """Positive roots of a reduced system from the Cartan matrix.

    Starts from the simple roots and repeatedly extends root strings: for a
    known root b and simple root alpha_j, b + alpha_j is a root exactly when
    the string through b in direction j has not been exhausted, i.e. when
    p - <b, alpha_j^vee> >= 1 with p the number of backward steps that stay
    in the system.  Processing by height keeps the backward string known.
    """
    r = len(cartan)
    roots: set[Root] = {tuple(1 if k == j else 0 for k in range(r)) for j in range(r)}
    current = set(roots)
    while current:
        nxt: set[Root] = set()
        for beta in current:
            for j in range(r):
                pairing = sum(beta[k] * cartan[k][j] for k in range(r))
                p = 0
                lower = list(beta)
                while True:
                    lower[j] -= 1
                    if lower[j] < 0 or tuple(lower) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    new = list(beta)
                    new[j] += 1
                    cand = tuple(new)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.add(cand)
        current = nxt
    return roots


def _bc_positive_roots(r: int) -> set[Root]:
    """BC_r model: simple roots e_1-e_2, ..., e_{r-1}-e_r, e_r.

    Positive roots are {e_i, 2e_i} for 1 <= i <= r and {e_i +- e_j} for
    i < j, stored as a plain set: multiplicities never matter here.
    """

    def e(i: int) -> list[int]:
        return [1 if k >= i else 0 for k in range(1, r + 1)]

    roots: set[Root] = set()
    for i in range(1, r + 1):
        roots.add(tuple(e(i)))
        roots.add(tuple(2 * c for c in e(i)))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            diff = [a - b for a, b in zip(e(i), e(j))]
            roots.add(tuple(diff))
            roots.add(tuple(a + b for a, b in zip(e(i), e(j))))
    return roots


def coefficient(root: Root, j: int) -> int:
    """The j-th simple-root coefficient c_j (1-indexed); equals alpha evaluated on xi_j."""
    if not 1 <= j <= len(root):
        raise IndexError(f"index {j} out of range for rank {len(root)}")
    return root[j - 1]


def evaluate_on_xi_sum(root: Root, indices: Iterable[int]) -> int:
    """Evaluate the root on xi_J = sum of dual-basis vectors over J; empty J gives 0."""
    return sum(coefficient(root, j) for j in indices)


def to_json_dict(system: RootSystem) -> dict:
    """Canonical JSON-ready form: {family, rank, positive_roots, highest_root, cartan}."""
    return {
        "family": system.type.family,
        "rank": system.type.rank,
        "positive_roots": [list(root) for root in system.positive_roots],
        "highest_root": list(system.highest_root),
        "cartan": [list(row) for row in system.cartan],
    }


def to_json(system: RootSystem) -> str:
    import json

    return json.dumps(to_json_dict(system), sort_keys=True, separators=(",", ": "), indent=1)
