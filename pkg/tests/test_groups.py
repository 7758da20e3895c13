import pytest

from ncrainbow.groups import (AssociativityViolation, InvalidTwist, NoIdentity,
                              NotAutomorphism, NotCentral, NotHomomorphism,
                              NotLatinSquare, OrderMismatch, central_product, cyclic,
                              dicyclic, dihedral, direct_product, group_from_cayley_table,
                              load_cayley_table, metacyclic, semidirect_product,
                              write_cayley_table)
from util import brute_center, group_isomorphism

S3_TABLE = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 3, 0, 1, 5, 4],
    [3, 2, 5, 4, 0, 1],
    [4, 5, 1, 0, 3, 2],
    [5, 4, 3, 2, 1, 0],
]


def test_trivial_group():
    g = group_from_cayley_table([[0]])
    assert g.order == 1
    assert g.is_abelian


def test_s3_from_table():
    g = group_from_cayley_table(S3_TABLE)
    assert g.order == 6
    assert len(g.center()) == 1
    assert g.center().members == tuple(brute_center(S3_TABLE))


def test_associativity_violation_reported():
    # A non-associative loop of order 5: Latin with identity and inverses,
    # but (1*1)*2 = 2 while 1*(1*2) = 4.
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 1, 0],
        [3, 4, 0, 2, 1],
        [4, 2, 1, 0, 3],
    ]
    with pytest.raises(AssociativityViolation):
        group_from_cayley_table(loop)


def test_identity_relocated_to_zero():
    # Swap labels 0 and 2 in S3 so the identity sits at index 2.
    perm = [2, 1, 0, 3, 4, 5]
    shuffled = [[perm[S3_TABLE[perm[a]][perm[b]]] for b in range(6)] for a in range(6)]
    names = [f"n{perm[i]}" for i in range(6)]
    g = group_from_cayley_table(shuffled, names)
    assert g.table[0] == tuple(range(6))
    assert g.names[0] == "n0"
    assert len(g.center()) == 1


def test_identity_found_anywhere():
    # Z2 written with the identity at index 1 is still accepted.
    g = group_from_cayley_table([[1, 0], [0, 1]])
    assert g.table == ((0, 1), (1, 0))


def test_no_identity():
    with pytest.raises(NoIdentity):
        group_from_cayley_table([[1, 0], [0, 0]])


def test_cyclic_groups():
    assert cyclic(1).order == 1
    z3 = cyclic(3)
    assert z3.is_abelian and len(z3.center()) == 3
    assert cyclic(4).element_order(1) == 4


@pytest.mark.parametrize("n,center_size", [(3, 1), (4, 2), (5, 1), (6, 2),
                                           (7, 1), (8, 2), (9, 1), (10, 2)])
def test_dihedral_center(n, center_size):
    g = dihedral(n)
    assert g.order == 2 * n
    assert len(g.center()) == center_size
    assert list(g.center().members) == brute_center([list(r) for r in g.table])


def test_dicyclic():
    q8 = dicyclic(2)
    assert q8.order == 8
    assert q8.center().members == (0, 2)
    q12 = dicyclic(3)
    assert q12.order == 12
    # b^2 = a^m: element b is at index 2m.
    for m, g in ((2, q8), (3, q12)):
        b = 2 * m
        assert g.mul(b, b) == m


def test_metacyclic():
    sd16 = metacyclic(8, 3)
    assert sd16.order == 16 and len(sd16.center()) == 2
    m42 = metacyclic(8, 5)
    assert len(m42.center()) == 4
    with pytest.raises(InvalidTwist):
        metacyclic(5, 2)


@pytest.mark.parametrize("m", range(3, 9))
def test_metacyclic_twist_minus_one_is_dihedral(m):
    assert group_isomorphism(metacyclic(m, m - 1), dihedral(m)) is not None


def test_direct_product():
    d6z3 = direct_product(dihedral(3), cyclic(3))
    assert d6z3.order == 18 and len(d6z3.center()) == 3
    assert direct_product(dicyclic(2), cyclic(3)).order == 24
    g = dihedral(4)
    with_trivial = direct_product(g, cyclic(1))
    assert with_trivial.table == g.table


@pytest.mark.parametrize("a,b", [(dihedral(3), cyclic(2)), (dicyclic(2), cyclic(3)),
                                 (dihedral(4), dihedral(3))])
def test_center_of_product_multiplies(a, b):
    prod = direct_product(a, b)
    assert len(prod.center()) == len(a.center()) * len(b.center())


def test_semidirect_trivial_action_is_direct():
    z3, z2 = cyclic(3), cyclic(2)
    ident = list(range(3))
    sd = semidirect_product(z3, z2, [ident, ident])
    assert sd.table == direct_product(z3, z2).table


def test_semidirect_inversion_is_dihedral():
    z3, z2 = cyclic(3), cyclic(2)
    sd = semidirect_product(z3, z2, [[0, 1, 2], [0, 2, 1]])
    assert group_isomorphism(sd, dihedral(3)) is not None


def test_semidirect_rejects_bad_action():
    z3, z4 = cyclic(3), cyclic(4)
    ident = list(range(3))
    inv = [0, 2, 1]
    with pytest.raises(NotHomomorphism):
        # inversion at h=1 but identity at h=2 breaks action(1*1) = action(1)^2
        semidirect_product(z3, z4, [ident, inv, inv, ident])
    with pytest.raises(NotAutomorphism):
        semidirect_product(z3, cyclic(2), [ident, [1, 0, 2]])


def test_central_products():
    d8 = dihedral(4)
    q8 = dicyclic(2)
    g1 = central_product(d8, d8, 2, 2)
    assert g1.order == 32 and len(g1.center()) == 2
    g2 = central_product(d8, q8, 2, 2)
    assert g2.order == 32 and len(g2.center()) == 2
    with pytest.raises(NotCentral):
        central_product(d8, d8, 1, 2)
    with pytest.raises(OrderMismatch):
        central_product(cyclic(4), cyclic(2), 1, 1)


def test_centralizers():
    d6 = dihedral(3)
    assert d6.centralizer(1).members == (0, 1, 2)     # <r>
    assert d6.centralizer(3).members == (0, 3)        # {e, s}
    assert len(d6.centralizer(0)) == d6.order


@pytest.mark.parametrize("group", [dihedral(3), dihedral(4), dicyclic(2),
                                   metacyclic(8, 3), direct_product(dihedral(3), cyclic(3))])
def test_centralizer_contains_center_and_divides(group):
    center = set(group.center().members)
    for g in range(group.order):
        c = group.centralizer(g)
        assert group.order % len(c) == 0
        assert center <= set(c.members)
        assert g in c
        members = set(c.members)
        for a in members:  # subgroup closure
            for b in members:
                assert group.mul(a, b) in members


def test_cayley_file_round_trip(tmp_path):
    g = dicyclic(3)
    path = tmp_path / "q12.cay"
    write_cayley_table(g, path)
    back = load_cayley_table(path)
    assert back.table == g.table
    assert back.names == g.names


def test_loader_rejects_malformed(tmp_path):
    p = tmp_path / "bad.cay"
    p.write_text("graph 2 1\n0 1\n")
    with pytest.raises(ValueError):
        load_cayley_table(p)
    p.write_text("cayley 2\n0 1\n")
    with pytest.raises(ValueError):
        load_cayley_table(p)
    p.write_text("cayley 2\n0 0\n1 1\n")
    with pytest.raises((NotLatinSquare, NoIdentity)):
        load_cayley_table(p)
