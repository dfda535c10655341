"""Involution subgroups, fixed root sets, and the triple criterion."""

from itertools import combinations

import pytest

from rspaces.admissible import IndexSet, is_admissible
from rspaces.gamma import (
    GammaElement,
    all_subgroups,
    fixed_root_set,
    fixed_root_set_by_definition,
    gamma_full,
    is_triple,
    minimal_triple_subgroups,
    roots_vanishing_on,
    subgroup_span,
    triple_witness,
    verify_maximality_proposition,
)
from rspaces.roots import RootSystemType, build


def rst(fam, r):
    return RootSystemType(fam, r)


# ---------------------------------------------------------------------------
# group elements and spans


def test_gamma_element_product_is_symmetric_difference():
    a = GammaElement(IndexSet.of(1, 3))
    b = GammaElement(IndexSet.of(2, 3))
    assert (a * b).J == IndexSet.of(1, 2)
    assert (a * a).J == IndexSet(0)
    assert (a * GammaElement()).J == a.J
    assert GammaElement().is_identity
    assert str(a) == "g1*g3" and str(GammaElement()) == "e"


def test_distinct_labels_give_distinct_elements():
    sub = gamma_full(IndexSet.full(3), 3)
    assert len(set(sub.elements)) == 8


def test_subgroup_span_example():
    sub = subgroup_span([IndexSet.of(1, 3), IndexSet.of(2)], 4)
    assert [e.mask for e in sub.elements] == [0b0000, 0b0010, 0b0101, 0b0111]
    assert sub.dim == 2 and sub.order == 4


def test_subgroup_span_trivial_and_redundant():
    assert subgroup_span([], 3).elements == (IndexSet(0),)
    sub = subgroup_span([IndexSet.of(1), IndexSet.of(1, 2), IndexSet.of(2)], 3)
    assert sub.dim == 2 and sub.order == 4


def test_subgroup_span_rejects_oversized_generator():
    with pytest.raises(ValueError):
        subgroup_span([IndexSet.of(5)], 4)


def test_span_is_closed_under_product():
    sub = subgroup_span([IndexSet.of(1, 2), IndexSet.of(2, 3)], 4)
    masks = {e.mask for e in sub.elements}
    assert 0 in masks
    for a in masks:
        for b in masks:
            assert a ^ b in masks


def test_subgroup_containment():
    small = subgroup_span([IndexSet.of(1, 3)], 4)
    big = subgroup_span([IndexSet.of(1, 3), IndexSet.of(2)], 4)
    assert small.issubgroup_of(big)
    assert not big.issubgroup_of(small)
    assert big.contains(IndexSet.of(1, 2, 3))
    assert not big.contains(IndexSet.of(1))


def test_all_subgroups_counts():
    # Gaussian binomial totals: sums over k of [r choose k]_2
    assert sum(1 for _ in all_subgroups(1)) == 2
    assert sum(1 for _ in all_subgroups(2)) == 5
    assert sum(1 for _ in all_subgroups(3)) == 16
    assert sum(1 for _ in all_subgroups(4)) == 67
    # each subspace exactly once: canonical bases are pairwise distinct
    bases = [s.basis for s in all_subgroups(4)]
    assert len(set(bases)) == len(bases)


# ---------------------------------------------------------------------------
# fixed root sets


def test_fixed_root_set_examples():
    a3 = build(rst("A", 3))
    fs = fixed_root_set(a3, subgroup_span([IndexSet.of(1, 3)], 3))
    assert (1, 1, 1) in fs.roots
    trivial = fixed_root_set(a3, subgroup_span([], 3))
    assert trivial.roots == a3.positive_roots
    a4 = build(rst("A", 4))
    fs = fixed_root_set(a4, gamma_full(IndexSet.of(1, 2, 3), 4))
    assert fs.roots == ((0, 0, 0, 1),)


def test_fixed_root_set_basis_equals_definition():
    for fam, r in [("A", 4), ("B", 3), ("G", 2), ("BC", 3)]:
        system = build(rst(fam, r))
        for sub in all_subgroups(r):
            assert fixed_root_set(system, sub) == fixed_root_set_by_definition(system, sub)


def test_fixed_root_set_anti_monotone():
    system = build(rst("B", 3))
    subs = list(all_subgroups(3))
    for s1 in subs:
        for s2 in subs:
            if s1.issubgroup_of(s2):
                assert set(fixed_root_set(system, s2).roots) <= set(fixed_root_set(system, s1).roots)


def test_vanishing_roots_inside_fixed_set_when_labels_inside_I():
    system = build(rst("D", 4))
    I = IndexSet.of(1, 4)
    vanishing = set(roots_vanishing_on(system, I).roots)
    for sub in all_subgroups(4):
        if all(J.issubset(I) for J in sub.elements):
            assert vanishing <= set(fixed_root_set(system, sub).roots)


# ---------------------------------------------------------------------------
# triples


def test_flag_example_triples():
    for r in range(3, 7):
        system = build(rst("A", r))
        for i1, i2, i3 in combinations(range(1, r + 1), 3):
            I = IndexSet.of(i1, i2, i3)
            sub = subgroup_span([IndexSet.of(i1, i3), IndexSet.of(i2)], r)
            assert is_triple(system, I, sub)
            assert sub.order == 4 < gamma_full(I, r).order == 8


def test_flag_example_case_analysis():
    """The published three-bullet split of A_r roots agrees with the fixed set."""
    for r in range(3, 7):
        system = build(rst("A", r))
        for i1, i2, i3 in combinations(range(1, r + 1), 3):
            sub = subgroup_span([IndexSet.of(i1, i3), IndexSet.of(i2)], r)
            fixed = set(fixed_root_set(system, sub).roots)
            for root in system.positive_roots:
                support = [p + 1 for p, c in enumerate(root) if c]
                j, k = support[0], support[-1] + 1  # root is e_j - e_k
                in_fixed_by_cases = (
                    k <= i1
                    or (i1 < j and k <= i2)
                    or (i2 < j and k <= i3)
                    or i3 < j
                )
                assert (root in fixed) == in_fixed_by_cases, (r, (i1, i2, i3), root)


def test_triple_with_full_subgroup_iff_admissible():
    for fam, r in [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4), ("G", 2), ("BC", 3)]:
        system = build(rst(fam, r))
        for m in range(1, 1 << r):
            I = IndexSet(m)
            assert is_triple(system, I, gamma_full(I, r)) == is_admissible(system, I)


def test_triple_counterexample_with_witness():
    a3 = build(rst("A", 3))
    I = IndexSet.of(1, 3)
    sub = subgroup_span([IndexSet.of(1, 3)], 3)
    assert not is_triple(a3, I, sub)
    assert triple_witness(a3, I, sub) == (1, 1, 1)
    good = gamma_full(I, 3)
    assert is_triple(a3, I, good)
    assert triple_witness(a3, I, good) is None


def test_is_triple_rejects_empty_I():
    with pytest.raises(ValueError):
        is_triple(build(rst("A", 2)), IndexSet(0), subgroup_span([], 2))


# ---------------------------------------------------------------------------
# maximality and minimal subgroups


@pytest.mark.parametrize("fam,r", [("A", 3), ("B", 3), ("G", 2), ("BC", 2), ("D", 4)])
def test_maximality_proposition(fam, r):
    assert verify_maximality_proposition(build(rst(fam, r)))


def test_maximality_refuses_above_bound():
    with pytest.raises(ValueError, match="rank 4"):
        verify_maximality_proposition(build(rst("A", 5)))
    # configurable upward
    assert verify_maximality_proposition(build(rst("A", 5)), max_rank=5)


def test_minimal_triple_subgroups_flag_example():
    mins = minimal_triple_subgroups(build(rst("A", 4)), IndexSet.of(1, 2, 3))
    bases = [m.basis for m in mins]
    flag = subgroup_span([IndexSet.of(1, 3), IndexSet.of(2)], 4)
    assert flag.basis in bases
    assert all(m.order < 8 for m in mins)  # all strictly below gamma_full


def test_minimal_triple_subgroups_g2_and_a2():
    g2 = build(rst("G", 2))
    mins = minimal_triple_subgroups(g2, IndexSet.full(2))
    assert [m.basis for m in mins] == [gamma_full(IndexSet.full(2), 2).basis]
    a2 = build(rst("A", 2))
    assert [m.basis for m in minimal_triple_subgroups(a2, IndexSet.of(1))] == [(0b001,)]


def test_minimal_triple_subgroups_are_minimal_and_triples():
    system = build(rst("C", 4))
    I = IndexSet.of(2, 4)
    mins = minimal_triple_subgroups(system, I)
    assert mins, "an admissible set always has at least one triple subgroup"
    for sub in mins:
        assert is_triple(system, I, sub)
        assert all(J.issubset(I) for J in sub.elements)
    for a in mins:
        for b in mins:
            if a.basis != b.basis:
                assert not a.issubgroup_of(b)


def test_minimal_triple_subgroups_requires_admissible():
    with pytest.raises(ValueError, match="not admissible"):
        minimal_triple_subgroups(build(rst("B", 3)), IndexSet.of(2))
