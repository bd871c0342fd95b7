"""Independent re-evaluation of failure witnesses, straight from the tables.

Each validator returns True when the claimed violation actually holds, using
only scalar table lookups so it cannot share bugs with the vectorized
verification engine.
"""

from gyrogroups import CheckResult, FiniteGyrogroup


def _smallest_left_inverse(G: FiniteGyrogroup, x: int) -> int | None:
    for b in range(G.order):
        if G.oplus(b, x) == 0:
            return b
    return None


def _latin_row(G, w):
    a, j1, j2 = w
    return j1 != j2 and G.oplus(a, j1) == G.oplus(a, j2)


def _latin_col(G, w):
    b, a1, a2 = w
    return a1 != a2 and G.oplus(a1, b) == G.oplus(a2, b)


def _left_identity(G, w):
    (x,) = w
    return G.oplus(0, x) != x


def _left_inverses(G, w):
    (a,) = w
    return _smallest_left_inverse(G, a) is None


def _gyr_automorphisms(G, w):
    k, x, y = w
    p = G.perms[k]
    return p(G.oplus(x, y)) != G.oplus(p(x), p(y))


def _left_gyroassociativity(G, w):
    a, b, c = w
    return G.oplus(a, G.oplus(b, c)) != G.oplus(G.oplus(a, b), G.gyration(a, b)(c))


def _loop_property(G, w):
    a, b = w
    return G.gyration(a, b).images != G.gyration(G.oplus(a, b), b).images


def _gyrator_identity(G, w):
    if len(w) == 1:
        return _smallest_left_inverse(G, w[0]) is None
    a, b, c = w
    inv_ab = _smallest_left_inverse(G, G.oplus(a, b))
    if inv_ab is None:
        return True
    formula = G.oplus(inv_ab, G.oplus(a, G.oplus(b, c)))
    return G.gyration(a, b)(c) != formula


def _gyrocommutativity(G, w):
    a, b = w
    return G.oplus(a, b) != G.gyration(a, b)(G.oplus(b, a))


VALIDATORS = {
    "left_translations_bijective": _latin_row,
    "right_translations_bijective": _latin_col,
    "left_identity": _left_identity,
    "left_inverses": _left_inverses,
    "gyrations_are_automorphisms": _gyr_automorphisms,
    "left_gyroassociativity": _left_gyroassociativity,
    "loop_property": _loop_property,
    "gyrator_identity": _gyrator_identity,
    "gyrocommutativity": _gyrocommutativity,
}


def witness_confirms(G: FiniteGyrogroup, result: CheckResult) -> bool:
    assert not result.passed and result.witness is not None
    return VALIDATORS[result.name](G, result.witness)
