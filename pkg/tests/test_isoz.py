from itertools import product

from isomon import ZIsometry

UNITS = [ZIsometry(a, r) for a in range(-8, 9) for r in (False, True)]
IDENT = ZIsometry(0)


def brute_order(g: ZIsometry) -> int | None:
    acc = g
    for n in range(1, 17):
        if acc.is_identity():
            return n
        acc = acc * g
    return None


def test_apply_examples():
    assert ZIsometry(1, True).apply(0) == 1
    assert ZIsometry(0).apply(7) == 7
    assert ZIsometry(5).apply(-2) == 3


def test_compose_examples():
    assert ZIsometry(3, True) * ZIsometry(3, True) == IDENT
    assert ZIsometry(2) * ZIsometry(5) == ZIsometry(7)
    assert ZIsometry(1) * ZIsometry(0, True) == ZIsometry(-1, True)


def test_inverse_examples():
    assert ZIsometry(5).inverse() == ZIsometry(-5)
    assert ZIsometry(3, True).inverse() == ZIsometry(3, True)
    assert IDENT.inverse() == IDENT


def test_order_examples():
    assert IDENT.order() == 1
    assert ZIsometry(3, True).order() == 2
    assert ZIsometry(5).order() is None


def test_group_axioms_exhaustive():
    for g, h in product(UNITS, repeat=2):
        assert g * IDENT == g == IDENT * g
        assert g * g.inverse() == IDENT == g.inverse() * g
        for k in UNITS:
            assert (g * h) * k == g * (h * k)


def test_apply_respects_composition():
    for g, h in product(UNITS, repeat=2):
        gh = g * h
        for x in range(-20, 21):
            assert gh.apply(x) == h.apply(g.apply(x))


def test_isometry_law():
    for g in UNITS:
        for x in range(-12, 13):
            for y in range(-12, 13):
                assert abs(g.apply(x) - g.apply(y)) == abs(x - y)


def test_order_matches_brute_force():
    for g in UNITS:
        assert g.order() == brute_order(g)
