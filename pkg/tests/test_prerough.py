import itertools

import pytest

import oracles
from granrough import prerough as pr
from granrough.claims import SIX_K, SIX_K_PLUS, six_element_algebra
from granrough.core_space import ApproximationSpace, partitions_of
from granrough.orders import bits


@pytest.fixture(scope="module")
def six():
    return six_element_algebra()


def test_six_element_carrier_matches_oracle(x1_eq, six):
    classes = [frozenset(x1_eq.names(g)) for g in x1_eq.granule_masks]
    pairs = oracles.rough_pairs(classes, ("x1", "x2", "x3", "x4"))
    got = {(frozenset(x1_eq.names(o.lower)), frozenset(x1_eq.names(o.upper))) for o in six.objects}
    assert six.size == 6 and got == pairs


def test_rough_objects_realizable(x1_eq, six):
    for o in six.objects:
        assert x1_eq.lower(o.representative) == o.lower and x1_eq.upper(o.representative) == o.upper
        assert o.lower & ~o.upper == 0


def test_quotient_sizes_and_axioms():
    for n in range(1, 5):
        for sp in partitions_of(n):
            q = pr.quotient_by_rough_equality(sp)
            assert q.size == pr.expected_quotient_size(sp)
            assert pr.is_prerough(q)
            assert pr.check_prerough_axioms(q)["distributive"].holds


def test_x2_quotient_size(x2_eq):
    assert pr.quotient_by_rough_equality(x2_eq).size == 12


def test_quotient_needs_equivalence(x1_tol):
    with pytest.raises(Exception):
        pr.quotient_by_rough_equality(x1_tol)


def test_two_element_class_gives_chain3():
    q = pr.quotient_by_rough_equality(ApproximationSpace.from_partition([["a", "b"]]))
    assert q.size == 3
    mid = next(i for i in range(3) if i not in (q.bottom, q.top))
    assert q.L[mid] == q.bottom and q.U[mid] == q.top and q.neg[mid] == mid


def test_chain3_axioms():
    c = pr.chain(3)
    ax = pr.check_prerough_axioms(c)
    assert all(v.holds for v in ax.values())


def test_chain_bounds():
    with pytest.raises(pr.PreRoughError):
        pr.chain(4)


def test_chain3_filters():
    c = pr.chain(3)
    lf = {tuple(c.names(r.K)) for r in pr.enumerate_filters(c)}
    assert lf == {("1",), ("0", "a", "1")}
    # {a,1} is up-closed but La = 0 leaves it
    ups = {tuple(c.names(r.K)): r for r in pr.enumerate_filters(c, l_only=False)}
    assert ups[("a", "1")].o_filter and not ups[("a", "1")].l_filter


def test_six_element_nontrivial_lattice_filter(six):
    K = six.mask_of(SIX_K)
    rec = pr.filter_record(six, K)
    assert rec.l_filter and rec.lattice and not rec.trivial
    assert K in {r.K for r in pr.nontrivial_lattice_l_filters(six)}


def test_six_element_plus(six):
    K = six.mask_of(SIX_K)
    s = pr.supremal(six, K)
    assert s.K_plus == six.mask_of(SIX_K_PLUS)
    assert s.plus_is_lattice_l_filter and s.equivalence_holds


def test_plus_of_top_is_everything(six):
    assert pr.plus(six, 1 << six.top) == six.full


def test_whole_carrier_is_l_filter(six):
    assert pr.filter_record(six, six.full).l_filter


def test_filter_flags_nest(x2_eq, six):
    for q in (six, pr.quotient_by_rough_equality(x2_eq)):
        for r in pr.enumerate_filters(q, l_only=False):
            assert not r.l_filter or r.o_filter
            assert not r.lattice or r.l_filter
            assert not r.prime or r.l_filter


def test_meet_membership_invariant(six):
    for r in pr.enumerate_filters(six):
        ind = pr.induced_structure(six, r.K)
        assert ind["meet_membership"].holds


def test_cofine_iff_plus_top_sweep():
    for n in range(1, 5):
        for sp in partitions_of(n):
            q = pr.quotient_by_rough_equality(sp)
            for r in pr.lattice_l_filters(q):
                assert pr.supremal(q, r.K).equivalence_holds


def test_u_ideals_dual(six):
    ideals = pr.enumerate_u_ideals(six)
    assert six.full in ideals and 1 << six.bottom in ideals
    for I in ideals:
        assert all(I >> six.U[x] & 1 for x in bits(I))


def test_induced_top_filter_chain3():
    c = pr.chain(3)
    ind = pr.induced_structure(c, 1 << c.top)
    assert not ind["neg_closed"].holds


def test_induced_six_lattice_filter(six):
    ind = pr.induced_structure(six, six.mask_of(SIX_K))
    for k in ("join_closed", "meet_closed", "L_closed", "U_closed", "distributive", "L_join"):
        assert ind[k].holds, k
    assert not ind["neg_closed"].holds


def test_induced_whole_algebra(six):
    ind = pr.induced_structure(six, six.full)
    assert all(v.holds for v in ind.values())


def test_induced_needs_l_filter():
    c = pr.chain(3)
    with pytest.raises(pr.PreRoughError):
        pr.induced_structure(c, c.mask_of(["a", "1"]))


def test_incomparability_six(six):
    K = six.mask_of(SIX_K)
    a, b = pr.incomparability_search(six, K)
    j = six.join[a][b]
    for c in bits(K):
        if c != six.top:
            assert not six.le(j, c) and not six.le(c, j)
    # the pair (1,0),(1,0) also works
    m = six.index("({x1,x2,x3},{x1,x2,x3})")
    assert all(not six.le(m, c) and not six.le(c, m) for c in bits(K) if c != six.top)


def test_incomparability_needs_nontrivial():
    c = pr.chain(3)
    with pytest.raises(pr.PreRoughError):
        pr.incomparability_search(c, 1 << c.top)


def test_paste_chain3():
    p = pr.paste(pr.chain(3))
    assert p.size == 5 and pr.has_no_nontrivial_lattice_filter(p)
    ax = pr.check_prerough_axioms(p)
    assert not ax["distributive"].holds
    assert len(pr.enumerate_filters(p, l_only=False)) == 9


def test_paste_twice_keeps_property():
    q = pr.chain(3)
    for _ in range(2):
        q = pr.paste(q)
        assert pr.has_no_nontrivial_lattice_filter(q)


def test_product_chain3_squared():
    q = pr.product(pr.chain(3), pr.chain(3))
    assert q.size == 9 and pr.is_prerough(q)
    # the product of two chains has nontrivial lattice L-filters
    assert not pr.has_no_nontrivial_lattice_filter(q)


def test_ocpr_six(six):
    o = pr.ocpr_build(six, six.mask_of(SIX_K))
    a, b = six.index(SIX_K[0]), six.index(SIX_K[1])
    assert o.lhd(a, b) and o.cap[a][b] == a
    assert all(v.holds for v in pr.verify_ocpr(o).values())
    x, y = six.index("({x1,x2,x3},{x1,x2,x3})"), six.index(SIX_K[1])
    assert o.cap[y][x] is None
    assert pr.absorption_failure(o) is not None


def test_ocpr_order_all_small():
    algebras = [pr.chain(3), pr.paste(pr.chain(3)), six_element_algebra()]
    for q in algebras:
        for r in pr.enumerate_filters(q):
            o = pr.ocpr_build(q, r.K)
            for x in range(q.size):
                assert o.lhd(x, x)
            ver = pr.verify_ocpr(o)
            assert ver["antisymmetric"].holds and ver["transitive"].holds
            assert ver["L_compatible"].holds and ver["U_compatible"].holds


def test_ocpr_needs_l_filter():
    c = pr.chain(3)
    with pytest.raises(pr.PreRoughError):
        pr.ocpr_build(c, c.mask_of(["a", "1"]))


def test_cofine_embedding(six):
    rep = pr.cofine_embedding(six, six.full)
    assert rep.preserves_join and rep.preserves_L and rep.preserves_U and rep.closed
    for r in pr.enumerate_filters(six):
        if r.cofine:
            e = pr.cofine_embedding(six, r.K)
            assert e.preserves_join and e.preserves_L


def test_cofine_embedding_rejects_non_cofine(six):
    K = six.mask_of(SIX_K)
    assert not pr.filter_record(six, K).cofine
    with pytest.raises(pr.PreRoughError):
        pr.cofine_embedding(six, K)


def test_json_lists_pairs(six):
    j = six.to_json()
    assert len(j["elements"]) == 6 and "({x4},{x4})" in j["elements"]


def test_supremal_structure_reported(six):
    s = pr.supremal_structure(six)
    assert six.mask_of(SIX_K_PLUS) in s.supremals
    assert isinstance(s.boolean_under_inclusion, bool)


def test_family_sizes_bounded():
    for how, q in pr.paste_product_family([pr.chain(2), pr.chain(3)], levels=2, max_size=15):
        assert q.size <= 15 and how in ("paste", "product")


def test_join_meet_are_lub_glb(six):
    n = range(six.size)
    for a, b in itertools.product(n, n):
        j, m = six.join[a][b], six.meet[a][b]
        assert six.le(a, j) and six.le(b, j) and six.le(m, a) and six.le(m, b)
        for c in n:
            if six.le(a, c) and six.le(b, c):
                assert six.le(j, c)
