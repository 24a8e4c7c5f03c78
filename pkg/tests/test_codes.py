"""Code layer: closures, weight profiles, monomial transforms, extension search."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eplab.codes import (
    Code,
    ExtensionResult,
    code_generate,
    code_map_make,
    column_fingerprint,
    extension_search,
    group_elements,
    map_preserves,
    monomial_apply,
    monomial_compose,
    monomial_identity,
    monomial_is_valid,
    MonomialTransform,
    weight_profile,
)
from eplab.errors import GuardExceeded, Guards, InputError
from eplab.modules import automorphism_group, module_make, partition
from eplab.rings import ring_make


def z4_alphabet():
    ring = ring_make({"kind": "mod_n", "n": 4})
    return module_make(ring, {"kind": "regular"})


def f2sq_alphabet():
    ring = ring_make({"kind": "mod_n", "n": 2})
    return module_make(
        ring, {"kind": "direct_sum", "summands": [{"kind": "regular"}, {"kind": "regular"}]}
    )


def test_code_generate_frozen():
    a = z4_alphabet()
    c = code_generate(a, 2, [(1, 2)])
    assert c.elements == ((0, 0), (1, 2), (2, 0), (3, 2))
    assert c.size == 4
    c2 = code_generate(a, 2, [(1, 0), (0, 2)])
    assert c2.size == 8
    assert (3, 2) in c2
    zero = code_generate(a, 3, [])
    assert zero.elements == ((0, 0, 0),)


def test_code_generate_validation_and_guard():
    a = z4_alphabet()
    with pytest.raises(InputError):
        code_generate(a, 2, [(1, 2, 3)])
    with pytest.raises(InputError):
        code_generate(a, 2, [(1, 7)])
    with pytest.raises(InputError):
        code_generate(a, 0, [])
    with pytest.raises(GuardExceeded):
        code_generate(a, 2, [(1, 0)], guards=Guards(max_code=2))


def test_weight_profiles_frozen():
    a = z4_alphabet()
    # orbits of Z/4 under Aut = {1, 3}: {0}, {1,3}, {2} -> labels (0,1,2,1)
    assert partition(a, "orbit").labels == (0, 1, 2, 1)
    assert partition(a, "annihilator").labels == (0, 1, 2, 1)
    w = (0, 1, 2)
    assert weight_profile(a, w, "hamming").counts == (("nonzero", 2),)
    assert weight_profile(a, w, "swc").counts == (("0", 1), ("1", 1), ("2", 1))
    assert weight_profile(a, w, "aw").counts == (("0", 1), ("1", 1), ("2", 1))
    with pytest.raises(InputError):
        weight_profile(a, w, "lee")
    with pytest.raises(InputError):
        weight_profile(a, w, "swc", index=partition(a, "annihilator"))


def test_weight_profile_sums_to_length():
    a = z4_alphabet()
    for w in itertools.product(range(4), repeat=3):
        for kind in ("swc", "aw"):
            assert sum(weight_profile(a, w, kind).as_dict().values()) == 3


def test_monomial_apply_and_compose():
    a = z4_alphabet()
    ident = monomial_identity(a, 2)
    assert monomial_apply(ident, (1, 2)) == (1, 2)
    neg = (0, 3, 2, 1)
    t = MonomialTransform((1, 0), (neg, tuple(range(4))))
    assert monomial_apply(t, (1, 2)) == (2, 1)
    assert monomial_is_valid(a, t)
    assert not monomial_is_valid(a, MonomialTransform((0, 0), (neg, neg)))
    t2 = MonomialTransform((1, 0), (tuple(range(4)), neg))
    comp = monomial_compose(t2, t)
    for w in itertools.product(range(4), repeat=2):
        assert monomial_apply(comp, w) == monomial_apply(t2, monomial_apply(t, w))


def test_monomial_transforms_preserve_profiles():
    a = f2sq_alphabet()
    g = automorphism_group(a)
    t = MonomialTransform((1, 0), (g.elements[2], g.elements[4]))
    for w in itertools.product(range(4), repeat=2):
        tw = monomial_apply(t, w)
        for kind in ("hamming", "swc", "aw"):
            assert weight_profile(a, w, kind) == weight_profile(a, tw, kind)


def test_code_map_make_and_errors():
    a = z4_alphabet()
    c1 = code_generate(a, 2, [(1, 2)])
    c2 = code_generate(a, 2, [(2, 1)])
    f = code_map_make(c1, c2, [(2, 1)])
    assert f.apply((1, 2)) == (2, 1)
    assert f.apply((2, 0)) == (0, 2)
    with pytest.raises(InputError):
        f.apply((1, 1))
    # 2*(2,0) = (0,0) but 2*(1,0) = (2,0): not a map
    bad_src = code_generate(a, 2, [(2, 0)])
    tgt = code_generate(a, 2, [(1, 0)])
    with pytest.raises(InputError):
        code_map_make(bad_src, tgt, [(1, 0)])
    # collapses (2,4)->(0,0): not injective
    with pytest.raises(InputError):
        code_map_make(c1, code_generate(a, 2, [(2, 2)]), [(2, 2)])
    # bijective but lands in a different code than declared
    with pytest.raises(InputError):
        code_map_make(c1, code_generate(a, 2, [(1, 1)]), [(1, 3)])
    with pytest.raises(InputError):
        code_map_make(c1, c2, [(2, 1), (0, 0)])


def test_map_preserves_frozen():
    a = z4_alphabet()
    c1 = code_generate(a, 2, [(1, 1)])
    c2 = code_generate(a, 2, [(1, 3)])
    f = code_map_make(c1, c2, [(1, 3)])
    assert map_preserves(f, "hamming")
    assert map_preserves(f, "swc")
    assert map_preserves(f, "aw")
    c3 = code_generate(a, 2, [(1, 0)])
    g = code_map_make(c3, c1, [(1, 1)])
    assert not map_preserves(g, "hamming")


def test_column_fingerprint_frozen():
    a = z4_alphabet()
    c = code_generate(a, 2, [(1, 2)])
    idx = partition(a, "orbit")
    assert column_fingerprint(c, 0, idx) == (0, 1, 1, 2)
    assert column_fingerprint(c, 1, idx) == (0, 0, 2, 2)
    with pytest.raises(InputError):
        column_fingerprint(c, 2, idx)


def test_extension_search_identity_columns():
    a = z4_alphabet()
    c1 = code_generate(a, 2, [(1, 1)])
    c2 = code_generate(a, 2, [(1, 3)])
    f = code_map_make(c1, c2, [(1, 3)])
    res = extension_search(f)
    assert res.transform is not None
    assert res.transform.sigma == (0, 1)
    assert res.transform.taus == ((0, 1, 2, 3), (0, 3, 2, 1))
    assert res.group_order == 2
    assert res.candidate_space == 2 * 4


def test_extension_search_swapped_columns():
    a = z4_alphabet()
    c1 = code_generate(a, 2, [(1, 2)])
    c2 = code_generate(a, 2, [(2, 1)])
    f = code_map_make(c1, c2, [(2, 1)])
    res = extension_search(f)
    assert res.transform is not None
    assert res.transform.sigma == (1, 0)
    assert res.transform.taus[0] == (0, 1, 2, 3)
    for w, fw in f.mapping.items():
        assert monomial_apply(res.transform, w) == fw


def test_extension_search_zero_column_obstruction():
    """The length-3 pair over F_2^2: hamming-preserving map from a code with an
    identically zero column to one without it can have no monomial extension."""
    a = f2sq_alphabet()
    # with (a1, a2) encoded as 2*a1 + a2
    cp = code_generate(a, 3, [(0, 2, 2), (0, 1, 1)])
    cm = code_generate(a, 3, [(2, 0, 1), (0, 1, 1)])
    f = code_map_make(cp, cm, [(2, 0, 1), (0, 1, 1)])
    assert map_preserves(f, "hamming")
    res = extension_search(f)
    assert res.transform is None
    assert res.nodes == 0


def _naive_extension(cmap, perms):
    n = cmap.source.length
    for sigma in itertools.permutations(range(n)):
        for taus in itertools.product(perms, repeat=n):
            t = MonomialTransform(sigma, taus)
            if all(monomial_apply(t, w) == fw for w, fw in cmap.mapping.items()):
                return t
    return None


def test_extension_search_matches_naive_enumeration():
    a = z4_alphabet()
    perms = automorphism_group(a).elements
    gens_pool = [(1, 0), (1, 1), (1, 2), (1, 3), (0, 1), (2, 1)]
    codes = [code_generate(a, 2, [g]) for g in gens_pool]
    checked = 0
    for c1 in codes:
        for c2 in codes:
            if c1.size != c2.size:
                continue
            for img in c2.elements:
                try:
                    f = code_map_make(c1, c2, [img])
                except InputError:
                    continue
                checked += 1
                fast = extension_search(f).transform
                naive = _naive_extension(f, perms)
                assert (fast is None) == (naive is None)
                if fast is not None:
                    assert all(
                        monomial_apply(fast, w) == fw for w, fw in f.mapping.items()
                    )
    assert checked > 10


def test_group_elements_closure():
    a = z4_alphabet()
    neg = (0, 3, 2, 1)
    els = group_elements(a, [neg])
    assert els == ((0, 1, 2, 3), (0, 3, 2, 1))
    with pytest.raises(InputError):
        group_elements(a, [(1, 0, 2, 3)])
    assert group_elements(a, automorphism_group(a)) == automorphism_group(a).elements


def test_extension_search_node_budget():
    a = z4_alphabet()
    c1 = code_generate(a, 2, [(1, 1)])
    c2 = code_generate(a, 2, [(1, 3)])
    f = code_map_make(c1, c2, [(1, 3)])
    with pytest.raises(GuardExceeded):
        extension_search(f, guards=Guards(max_nodes=1))


# ---------------------------------------------------------------------------
# property: monomial transforms never move a word's weight profiles


@given(
    word=st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3),
    sigma=st.permutations(range(3)),
    taus=st.lists(st.integers(min_value=0, max_value=1), min_size=3, max_size=3),
)
@settings(max_examples=200, deadline=None)
def test_weight_profiles_are_monomial_invariants(word, sigma, taus):
    a = z4_alphabet()
    auts = automorphism_group(a).elements
    transform = MonomialTransform(tuple(sigma), tuple(auts[t] for t in taus))
    assert monomial_is_valid(a, transform)
    image = monomial_apply(transform, word)
    for kind in ("hamming", "swc", "aw"):
        assert weight_profile(a, image, kind) == weight_profile(a, word, kind)
