import numpy as np
import pytest

from ringlab import InvalidStructureError, SizeCapError, make_zmod
from ringlab.groups import (
    FiniteGroup,
    augmentation,
    augmentation_ideal,
    augmentation_quotient,
    coefficients,
    from_coefficients,
    group_center,
    group_element,
    group_ring,
    is_nilpotent_group,
    is_p_group,
    make_cyclic,
    make_dihedral,
    make_group_product,
    make_quaternion8,
    make_symmetric3,
)
from ringlab.subsets import is_ideal, is_nil_ideal

GROUPS = {
    "C1": make_cyclic(1),
    "C4": make_cyclic(4),
    "C2 x C2": make_group_product(make_cyclic(2), make_cyclic(2)),
    "D4": make_dihedral(4),
    "Q8": make_quaternion8(),
    "S3": make_symmetric3(),
    "C6": make_cyclic(6),
}


def test_group_examples():
    assert GROUPS["C1"].size == 1
    V = GROUPS["C2 x C2"]
    assert V.size == 4 and is_p_group(V, 2) and all(V.order(g) <= 2 for g in range(4))
    D4 = GROUPS["D4"]
    assert D4.size == 8 and len(group_center(D4)) == 2 and is_nilpotent_group(D4)
    assert is_p_group(GROUPS["C4"], 2)
    assert not is_nilpotent_group(GROUPS["S3"]) and group_center(GROUPS["S3"]) == [GROUPS["S3"].identity]
    Q8 = GROUPS["Q8"]
    assert len(group_center(Q8)) == 2
    assert not is_p_group(GROUPS["C6"], 2) and not is_p_group(GROUPS["C6"], 3)
    assert is_nilpotent_group(GROUPS["C6"])


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_groups_are_groups(name):
    G = GROUPS[name]
    G.validate()
    t = G.table
    for g in range(G.size):
        assert t[g, G.inverse[g]] == G.identity
        assert sorted(t[g]) == list(range(G.size))  # latin square


def test_bad_group_table_rejected():
    with pytest.raises(InvalidStructureError):
        FiniteGroup([[0, 1], [1, 1]], 0, "bad")


def test_nonabelian_groups():
    for name in ("D4", "Q8", "S3"):
        G = GROUPS[name]
        assert not np.array_equal(G.table, G.table.T)
    Q8 = GROUPS["Q8"]
    # Q8 has a unique element of order 2
    assert sum(Q8.order(g) == 2 for g in range(8)) == 1
    assert sum(GROUPS["D4"].order(g) == 2 for g in range(8)) == 5


def test_group_ring_convolution():
    R = make_zmod(3)
    G = make_symmetric3()
    RG = group_ring(R, G)
    assert RG.size == 3**6
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y = (int(v) for v in rng.integers(0, RG.size, 2))
        cx, cy = coefficients(RG, x), coefficients(RG, y)
        want = [0] * 6
        for g in range(6):
            for h in range(6):
                want[int(G.compose(g, h))] = (want[int(G.compose(g, h))] + cx[g] * cy[h]) % 3
        assert coefficients(RG, int(RG.mul(x, y))) == want
        assert from_coefficients(RG, cx) == x
    assert RG.one == group_element(RG, G.identity)


def test_group_ring_cap():
    with pytest.raises(SizeCapError):
        group_ring(make_zmod(4), make_dihedral(4), max_size=1000)


@pytest.mark.parametrize("r,g", [(2, "C2"), (4, "C2"), (2, "C2 x C2"), (3, "C3"), (2, "S3")])
def test_augmentation(build, r, g):
    RG = build(f"GR(Z{r}, {g})")
    R = make_zmod(r)
    for x in range(RG.size):
        assert augmentation(RG, x) == sum(coefficients(RG, x)) % r
    D = augmentation_ideal(RG)
    assert is_ideal(RG, D)
    assert len(D) * R.size == RG.size
    assert augmentation_quotient(RG).same_tables(R)


def test_augmentation_ideal_nil_for_two_groups(build):
    assert is_nil_ideal(build("GR(Z2, C2)"), augmentation_ideal(build("GR(Z2, C2)")))
    assert is_nil_ideal(build("GR(Z4, C2)"), augmentation_ideal(build("GR(Z4, C2)")))
    # 3 does not divide |C2|, so Z3C2 splits and its augmentation ideal holds an idempotent
    assert not is_nil_ideal(build("GR(Z3, C2)"), augmentation_ideal(build("GR(Z3, C2)")))
