import json
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisimple import groups
from bisimple.bruck_reilly import BrContext, BrElement as E
from bisimple.congruences import (
    ValidationError,
    catalog,
    class_members,
    recover_kernel,
    sigma_spec,
    spec_from_json,
    spec_to_json,
    validate_gc,
    validate_is,
)

from brute import in_unitary, unitary_relation
from conftest import FINITE, S3_T12, bicyclic_context, s3_identity, z2_identity, z4_doubling, z_times2

KMAX = {"bicyclic": 3, "z4-doubling": 3, "z6-negation": 2, "z2-identity": 1,
        "s3-identity": 2, "s3-sign": 2}


def finite_catalogs():
    for name in sorted(FINITE):
        S = FINITE[name]()
        yield name, S, catalog(S, KMAX[name])


CATALOGS = list(finite_catalogs())


def test_validate_is_examples():
    S = z4_doubling()
    G = S.group
    assert validate_is(S, G.subgroup([0, 2])).variant == "is"
    assert validate_is(S, G.whole()).N == G.whole()
    S3 = s3_identity()
    with pytest.raises(ValidationError) as err:
        validate_is(S3, S3.group.subgroup([0, S3_T12]))
    assert err.value.condition == "not-normal"


def test_not_admissible():
    Z2 = groups.free_abelian(2)
    S = BrContext(Z2, groups.MatrixEndo(Z2, [[0, 1], [1, 0]]))
    with pytest.raises(ValidationError) as err:
        validate_is(S, Z2.subgroup([(1, 0)]))
    assert err.value.condition == "not-admissible"


def test_validate_gc_examples():
    S = z_times2()
    Z = S.group
    three = Z.subgroup([(3,)])
    spec = validate_gc(S, three, (0,), 2)
    assert spec.certificate["cond10"]
    with pytest.raises(ValidationError) as err:
        validate_gc(S, three, (0,), 1)
    assert err.value.condition == "cond10-failed"
    assert err.value.witness == (1,)
    with pytest.raises(ValidationError) as err:
        validate_gc(S, three, (1,), 2)
    assert err.value.condition == "cond9-failed"
    Sz = z4_doubling()
    with pytest.raises(ValidationError) as err:
        validate_gc(Sz, Sz.group.subgroup([0, 2]), 0, 1)
    assert err.value.condition == "not-invariant"
    for name in FINITE:
        T = FINITE[name]()
        validate_gc(T, T.group.whole(), T.e, 1)


def test_membership_examples():
    S = z4_doubling()
    spec = validate_is(S, S.group.subgroup([0, 2]))
    assert spec.contains(E(2, 1, 3), E(2, 3, 3))
    assert spec.contains(E(2, 1, 3), E(2, 1, 3))
    assert not spec.contains(E(2, 1, 3), E(3, 1, 2))
    B = bicyclic_context()
    z3 = validate_gc(B, B.group.whole(), 0, 3)
    assert z3.contains(E(0, 0, 1), E(0, 0, 4))
    assert not z3.contains(E(0, 0, 1), E(1, 0, 4))
    z0 = validate_gc(B, B.group.whole(), 0, 0)
    assert z0.contains(E(2, 0, 5), E(2, 0, 5))


def test_class_members_examples():
    S = z4_doubling()
    spec = validate_is(S, S.group.subgroup([0, 2]))
    assert class_members(spec, E(1, 1, 2), 4) == [E(1, 1, 2), E(1, 3, 2)]
    eq = validate_is(S, S.group.trivial())
    assert class_members(eq, E(1, 1, 2), 2) == [E(1, 1, 2)]
    B = bicyclic_context()
    z0 = validate_gc(B, B.group.whole(), 0, 0)
    assert class_members(z0, E(1, 0, 1), 2) == [E(0, 0, 0), E(1, 0, 1), E(2, 0, 2)]
    with pytest.raises(ValueError):
        class_members(z0, E(3, 0, 1), 2)


def test_sigma_examples():
    S = z4_doubling()
    sig = sigma_spec(S)
    assert (sig.N, sig.k) == (S.group.whole(), 0)
    T = FINITE["z6-negation"]()
    assert sigma_spec(T).N == T.group.trivial()
    Z = z_times2()
    assert sigma_spec(Z).N == Z.group.trivial()


def test_catalog_examples():
    S = z4_doubling()
    c = catalog(S, 3)
    assert len(c) == 7
    assert [s.variant for s in c] == ["is"] * 3 + ["gc"] * 4
    assert [s.k for s in c[3:]] == [0, 1, 2, 3]
    assert all(s.N == S.group.whole() for s in c[3:])
    assert len(catalog(bicyclic_context(), 2)) == 4
    assert len(catalog(z2_identity(), 1)) == 7


def test_k0_specs_ignore_z():
    S = z2_identity()
    G = S.group
    a = validate_gc(S, G.trivial(), 0, 0)
    b = validate_gc(S, G.trivial(), 1, 0)
    assert a == b and hash(a) == hash(b)
    W = S.elements(2)
    assert all(a.contains(x, y) == b.contains(x, y) for x, y in product(W, repeat=2))


@pytest.mark.parametrize("name,S,cat", CATALOGS, ids=[c[0] for c in CATALOGS])
def test_catalog_has_no_duplicates(name, S, cat):
    assert len(set(cat)) == len(cat)
    labels = [s.label for s in cat]
    assert len(set(labels)) == len(labels)


@pytest.mark.parametrize("name,S,cat", CATALOGS, ids=[c[0] for c in CATALOGS])
def test_membership_matches_unitary_definition(name, S, cat):
    W = S.elements(2)
    for spec in cat:
        if spec.variant != "gc":
            continue
        rel = unitary_relation(S, spec.N, spec.z, spec.k)
        for x, y in product(W, repeat=2):
            assert spec.contains(x, y) == rel(x, y), (spec, x, y)


@pytest.mark.parametrize("name,S,cat", CATALOGS, ids=[c[0] for c in CATALOGS])
def test_coset_representative_does_not_matter(name, S, cat):
    G = S.group
    W = S.elements(2)
    for spec in cat:
        if spec.variant != "gc" or spec.k == 0:
            continue
        for a in spec.N.members:
            other = validate_gc(S, spec.N, G.mul(a, spec.z), spec.k)
            assert other == spec
            assert all(other.contains(x, y) == spec.contains(x, y) for x, y in product(W, repeat=2))


@pytest.mark.parametrize("name,S,cat", CATALOGS, ids=[c[0] for c in CATALOGS])
def test_structural_properties(name, S, cat):
    W = S.elements(2)
    idem = [S.idempotent(i) for i in range(4)]
    sig = sigma_spec(S)
    for spec in cat:
        if spec.variant == "is":
            assert set(recover_kernel(spec)) == set(spec.N.members)
            for e, f in product(idem, repeat=2):
                assert spec.contains(e, f) == (e == f)
        else:
            assert all(spec.contains(e, f) for e, f in product(idem, repeat=2))
            for x, y in product(W, repeat=2):
                if sig.contains(x, y):
                    assert spec.contains(x, y)


@pytest.mark.parametrize("name,S,cat", CATALOGS, ids=[c[0] for c in CATALOGS])
def test_json_round_trip(name, S, cat):
    for spec in cat:
        data = json.loads(json.dumps(spec_to_json(spec)))
        back = spec_from_json(S, data)
        assert back == spec and back.label == spec.label


def test_abelian_catalog_and_json():
    S = z_times2()
    Z = S.group
    pool = [Z.trivial(), Z.subgroup([(3,)]), Z.whole()]
    c = catalog(S, 2, pool)
    labels = [s.label for s in c]
    assert "gc:N1,z=[0],k=2" in labels
    assert "gc:N1,z=[0],k=1" not in labels
    assert c.notes  # the zero subgroup has infinite index
    for spec in c:
        assert spec_from_json(S, json.loads(json.dumps(spec_to_json(spec)))) == spec


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.integers(0, 5), st.integers(-20, 20), st.integers(0, 5)),
       st.tuples(st.integers(0, 5), st.integers(-20, 20), st.integers(0, 5)))
def test_abelian_membership_matches_unitary_definition(a, b):
    S = z_times2()
    Z = S.group
    spec = validate_gc(S, Z.subgroup([(3,)]), (0,), 2)
    x, y = E(a[0], (a[1],), a[2]), E(b[0], (b[1],), b[2])
    assert spec.contains(x, y) == in_unitary(S, spec.N, spec.z, spec.k, S.mul(x, S.inv(y)))
