from itertools import permutations

import pytest

from ringlab.isomorphism import (
    COLLISION,
    FINGERPRINT_MISMATCH,
    ISOMORPHIC,
    TOO_LARGE,
    find_isomorphism,
    is_isomorphic,
    ring_fingerprint,
    verify_isomorphism,
)

from oracles import TableRing

FOUR = ["Z4", "Z2 x Z2", "GF(2,2)", "TE(Z2)", "GR(Z2, C2)", "S2(Z2)", "Toeplitz2(Z2)"]
EIGHT = ["Z8", "Z2 x Z4", "Z2 x Z2 x Z2", "GF(2,3)", "Z2 x GF(2,2)", "GR(Z2, C3)", "Toeplitz3(Z2)", "Z2 x TE(Z2)"]


def brute_isomorphic(R, S):
    a, b = TableRing(R), TableRing(S)
    if a.n != b.n:
        return False
    rest_r = [x for x in range(a.n) if x not in (a.zero, a.one)]
    rest_s = [x for x in range(b.n) if x not in (b.zero, b.one)]
    if a.zero == a.one:
        return b.zero == b.one
    for perm in permutations(rest_s):
        f = {a.zero: b.zero, a.one: b.one, **dict(zip(rest_r, perm))}
        if all(f[a.add[x][y]] == b.add[f[x]][f[y]] and f[a.mul[x][y]] == b.mul[f[x]][f[y]] for x in range(a.n) for y in range(a.n)):
            return True
    return False


@pytest.mark.parametrize("group", [FOUR, EIGHT])
def test_agrees_with_permutation_search(build, group):
    rings = [build(e) for e in group]
    for i, R in enumerate(rings):
        for S in rings[i:]:
            assert is_isomorphic(R, S) == brute_isomorphic(R, S), (R.label, S.label)


def test_known_isomorphisms(build):
    assert is_isomorphic(build("Z2 x Z3"), build("Z6"))
    assert is_isomorphic(build("GR(Z2, C2)"), build("TE(Z2)"))
    assert is_isomorphic(build("GR(Z2, C3)"), build("Z2 x GF(2,2)"))
    assert is_isomorphic(build("S2(Z2)"), build("TE(Z2)"))
    assert not is_isomorphic(build("Z4"), build("TE(Z2)"))


def test_mapping_is_verified(build):
    R, S = build("Z2 x Z3"), build("Z6")
    res = find_isomorphism(R, S)
    assert res.status == ISOMORPHIC and verify_isomorphism(R, S, res.mapping)
    broken = list(res.mapping)
    broken[1], broken[2] = broken[2], broken[1]
    assert not verify_isomorphism(R, S, broken)


def test_statuses(build):
    assert find_isomorphism(build("Z4"), build("Z2 x Z2")).status == FINGERPRINT_MISMATCH
    big = build("M2(Z4)")
    assert find_isomorphism(big, big).status == TOO_LARGE
    assert find_isomorphism(big, big, limit=big.size).status == ISOMORPHIC


def test_collision_reported_separately(build):
    # Z2[C4] = Z2[x]/(x^4) and Z2[C2 x C2] = Z2[x, y]/(x^2, y^2) share every
    # coarse invariant, but only the first has an element with nonzero cube
    R, S = build("GR(Z2, C4)"), build("GR(Z2, C2 x C2)")
    assert ring_fingerprint(R) == ring_fingerprint(S)
    res = find_isomorphism(R, S)
    assert res.status == COLLISION and not res
    assert max(TableRing(R).nil_exponent(a) for a in range(16)) == 4
    assert max(TableRing(S).nil_exponent(a) for a in range(16)) == 2
    assert is_isomorphic(R, build("Toeplitz4(Z2)"))
