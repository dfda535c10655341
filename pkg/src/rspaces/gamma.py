"""Subgroups of the full involution group and the root-parity triple criterion.

Elements of the rank-r involution group are labeled by subsets J of
{1, ..., r}; the product of two elements is the symmetric difference of
their labels, so subgroups are GF(2)-linear subspaces of bitmask vectors.
A subgroup forms a compatible triple with the index set I exactly when the
positive roots that are even on every subgroup label coincide with the roots
vanishing on I.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .admissible import IndexSet, _parity_masks, is_admissible
from .roots import Root, RootSystem


@dataclass(frozen=True)
class GammaElement:
    """Group element gamma^J, identified by its label set J (empty = identity)."""

    J: IndexSet = IndexSet(0)

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(self.J ^ other.J)

    @property
    def is_identity(self) -> bool:
        return not self.J

    def __str__(self) -> str:
        return "e" if self.is_identity else "*".join(f"g{j}" for j in self.J)


def _reduced_echelon(masks: Iterable[int]) -> tuple[int, ...]:
    """Reduced GF(2) row-echelon basis; pivot = lowest set bit, rows sorted by pivot."""
    rows: dict[int, int] = {}
    for m in masks:
        cur = m
        while cur:
            p = cur & -cur
            if p in rows:
                cur ^= rows[p]
            else:
                rows[p] = cur
                break
    pivots = sorted(rows)
    for p in pivots:
        for q in pivots:
            if q != p and rows[q] & p:
                rows[q] ^= rows[p]
    return tuple(rows[p] for p in sorted(rows))


def _in_span(mask: int, basis: tuple[int, ...]) -> bool:
    cur = mask
    for b in basis:
        pivot = b & -b
        if cur & pivot:
            cur ^= b
    return cur == 0


@dataclass(frozen=True)
class GammaSubgroup:
    """A GF(2)-linear subgroup, canonicalized by its reduced echelon basis."""

    rank: int
    generators: tuple[GammaElement, ...]
    basis: tuple[int, ...]
    elements: tuple[IndexSet, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 1 << self.dim

    def contains(self, J: IndexSet) -> bool:
        return _in_span(J.mask, self.basis)

    def issubgroup_of(self, other: "GammaSubgroup") -> bool:
        return all(_in_span(b, other.basis) for b in self.basis)

    def __str__(self) -> str:
        gens = ", ".join(str(IndexSet(b)) for b in self.basis)
        return f"<{gens}>" if self.basis else "<e>"


def subgroup_span(generators: list[IndexSet] | tuple[IndexSet, ...], rank: int) -> GammaSubgroup:
    """GF(2) closure of the generators inside the rank-r involution group."""
    for g in generators:
        if g.mask >> rank:
            raise ValueError(f"generator {g} exceeds rank {rank}")
    basis = _reduced_echelon(g.mask for g in generators)
    elems = [0]
    for b in basis:
        elems += [e ^ b for e in elems]
    return GammaSubgroup(
        rank,
        tuple(GammaElement(g) for g in generators),
        basis,
        tuple(IndexSet(m) for m in sorted(elems)),
    )


def gamma_full(I: IndexSet, rank: int) -> GammaSubgroup:
    """Gamma^I: the subgroup generated by all single-index involutions in I."""
    return subgroup_span([IndexSet.of(j) for j in I], rank)


def all_subgroups(rank: int) -> Iterator[GammaSubgroup]:
    """Every GF(2) subgroup of the rank-r involution group, echelon-enumerated.

    Each subspace appears exactly once via its unique reduced echelon basis;
    deterministic order by (dimension, pivot set, free bits).
    """
    for k in range(rank + 1):
        for pivots in combinations(range(rank), k):
            pivot_set = set(pivots)
            free = [[q for q in range(p + 1, rank) if q not in pivot_set] for p in pivots]
            total = sum(len(f) for f in free)
            for bits in range(1 << total):
                rows = []
                off = 0
                for p, positions in zip(pivots, free):
                    m = 1 << p
                    for q in positions:
                        if (bits >> off) & 1:
                            m |= 1 << q
                        off += 1
                    rows.append(m)
                yield subgroup_span([IndexSet(m) for m in rows], rank)


@dataclass(frozen=True)
class FixedRootSet:
    """Positive roots even on every element label of a subgroup."""

    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: Root) -> bool:
        return tuple(root) in set(self.roots)


def _even_on_basis(odd_mask: int, basis: tuple[int, ...]) -> bool:
    return all((odd_mask & b).bit_count() % 2 == 0 for b in basis)


def fixed_root_set(system: RootSystem, subgroup: GammaSubgroup) -> FixedRootSet:
    """Roots with even evaluation on xi_J for every J in the subgroup.

    Parity of the evaluation is GF(2)-linear in J, so checking the echelon
    basis is equivalent to checking all 2^dim elements; the test suite pins
    that equivalence against fixed_root_set_by_definition.
    """
    pairs = zip(system.positive_roots, _parity_masks(system))
    return FixedRootSet(
        tuple(root for root, (odd, _) in pairs if _even_on_basis(odd, subgroup.basis))
    )


def fixed_root_set_by_definition(system: RootSystem, subgroup: GammaSubgroup) -> FixedRootSet:
    """Same set computed literally over every subgroup element; test oracle."""
    keep = []
    for root, (odd, _) in zip(system.positive_roots, _parity_masks(system)):
        if all((odd & J.mask).bit_count() % 2 == 0 for J in subgroup.elements):
            keep.append(root)
    return FixedRootSet(tuple(keep))


def roots_vanishing_on(system: RootSystem, I: IndexSet) -> FixedRootSet:
    """Positive roots supported entirely outside I."""
    pairs = zip(system.positive_roots, _parity_masks(system))
    return FixedRootSet(tuple(root for root, (_, sup) in pairs if not sup & I.mask))


def is_triple(system: RootSystem, I: IndexSet, subgroup: GammaSubgroup) -> bool:
    """Whether the subgroup's fixed root set equals the roots vanishing on I."""
    if not I:
        raise ValueError("index set must be non-empty")
    m = I.mask
    for _, (odd, sup) in zip(system.positive_roots, _parity_masks(system)):
        if _even_on_basis(odd, subgroup.basis) != (not sup & m):
            return False
    return True


def triple_witness(
    system: RootSystem, I: IndexSet, subgroup: GammaSubgroup
) -> Root | None:
    """A root separating the fixed set from the vanishing set, when they differ."""
    m = I.mask
    for root, (odd, sup) in zip(
        reversed(system.positive_roots), reversed(_parity_masks(system))
    ):
        if _even_on_basis(odd, subgroup.basis) != (not sup & m):
            return root
    return None


def verify_maximality_proposition(system: RootSystem, max_rank: int = 4) -> bool:
    """Exhaustively confirm: every triple forces the subgroup inside Gamma^I and I admissible.

    Scans all GF(2) subgroups against all non-empty index sets, so cost grows
    like the number of subspaces of F_2^r; raise max_rank knowingly.
    """
    r = system.rank
    if r > max_rank:
        raise ValueError(
            f"exhaustive subgroup scan is bounded at rank {max_rank}; "
            f"{system.type} has rank {r} (pass max_rank to raise the bound)"
        )
    subgroups = list(all_subgroups(r))
    for m in range(1, 1 << r):
        I = IndexSet(m)
        admissible = is_admissible(system, I)
        for sub in subgroups:
            if is_triple(system, I, sub):
                if not all(J.issubset(I) for J in sub.elements):
                    return False
                if not admissible:
                    return False
    return True


def minimal_triple_subgroups(
    system: RootSystem, I: IndexSet, max_dim: int = 6
) -> list[GammaSubgroup]:
    """Inclusion-minimal subgroups of Gamma^I forming a triple with I.

    Exploratory extension of the published single example: enumerates every
    subspace of Gamma^I, so |I| is capped by max_dim.
    """
    if not is_admissible(system, I):
        raise ValueError(f"{I} is not admissible for {system.type}")
    positions = list(I)
    k = len(positions)
    if k > max_dim:
        raise ValueError(f"|I| = {k} exceeds the subspace-enumeration bound {max_dim}")
    triples: list[GammaSubgroup] = []
    for small in all_subgroups(k):
        lifted = [
            IndexSet.from_iterable(positions[t - 1] for t in J) for J in small.elements
        ]
        sub = subgroup_span(lifted, system.rank)
        if is_triple(system, I, sub):
            triples.append(sub)
    minimal = [
        s
        for s in triples
        if not any(t is not s and t.issubgroup_of(s) and t.basis != s.basis for t in triples)
    ]
    return sorted(minimal, key=lambda s: (s.dim, s.basis))
