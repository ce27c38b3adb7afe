"""Unit and property tests for the exact Chow-ring engine."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delpezzo import (
    P1,
    P2,
    P1xP1,
    Fe,
    P1xP2,
    adjunction,
    base_space,
    canonical_base_class,
    canonical_class,
    chern_tower,
    integrate,
    make_tower,
    polarized_degree,
)

coeffs = st.integers(min_value=-6, max_value=6)


def p1_tower(*a):
    return make_tower(P1(), list(a))


def tower_F(T):
    return T.pullback(base_space(P1()).gen("F"))


# -- canonical classes and adjunction ------------------------------------


def test_canonical_class_on_split_p1_tower():
    T = p1_tower(0, 0, 0, 1)
    assert str(canonical_class(T)) == "-F - 4*z"
    X = 2 * T.zeta + tower_F(T)
    assert str(adjunction(T, X)) == "-2*z"


def test_canonical_class_base_constants():
    assert str(canonical_base_class(P1())) == "-2*F"
    assert str(canonical_base_class(P2())) == "-3*h"
    assert str(canonical_base_class(P1xP1())) == "-2*f1 - 2*f2"
    assert str(canonical_base_class(Fe(3))) == "-2*C0 - 5*f"
    assert str(canonical_base_class(P1xP2())) == "-2*p - 3*h"


@pytest.mark.parametrize("e", [0, 1, 2, 3, 7])
def test_canonical_squared_is_8_on_hirzebruch(e):
    K = canonical_base_class(Fe(e))
    assert integrate(K * K) == 8


def test_canonical_squared_on_other_surfaces():
    assert integrate(canonical_base_class(P2()) ** 2) == 9
    assert integrate(canonical_base_class(P1xP1()) ** 2) == 8


# -- degrees of the rank-4 quadric fibration models ----------------------

# X in |2z + alpha F| on F(a1..a4) with alpha = 2 - sum(a), degree sum(a) + 2
QUADRIC_CASES = [
    ((0, 0, 0, 0), 2),
    ((0, 0, 0, 1), 3),
    ((0, 0, 1, 1), 4),
    ((0, 1, 1, 1), 5),
    ((-1, 0, 0, 1), 2),
    ((-1, 0, 0, 0), 1),
]


@pytest.mark.parametrize("a,expected", QUADRIC_CASES)
def test_quadric_fibration_degrees(a, expected):
    T = p1_tower(*a)
    alpha = 2 - sum(a)
    X = 2 * T.zeta + alpha * tower_F(T)
    assert str(adjunction(T, X)) == "-2*z"
    assert polarized_degree(T, X, T.zeta) == expected


# -- scroll models for the three high-dimensional exceptional cases ------


def test_scroll_over_p2():
    B = base_space(P2())
    h = B.gen("h")
    W = make_tower(P2(), [2 * h, 0, 0, 0])
    z = W.zeta
    assert str(canonical_class(W)) == "-h - 4*z"
    X = z + W.pullback(h)
    assert str(adjunction(W, X)) == "-3*z"
    assert integrate(z**5) == 4
    assert integrate(z**4 * W.pullback(h)) == 2
    assert polarized_degree(W, X, z) == 6


def test_scroll_over_p1_x_p2():
    B = base_space(P1xP2())
    p, h = B.gen("p"), B.gen("h")
    W = make_tower(P1xP2(), [p + h, 0, 0, 0])
    z = W.zeta
    assert str(canonical_class(W)) == "-p - 2*h - 4*z"
    X = z + W.pullback(h)
    assert str(adjunction(W, X)) == "-p - h - 3*z"
    assert integrate(z**6) == 3
    assert integrate(z**5 * W.pullback(h)) == 2
    assert polarized_degree(W, X, z) == 5


def test_scroll_over_f1():
    B = base_space(Fe(1))
    tau = B.gen("C0") + 2 * B.gen("f")
    assert integrate(tau * tau) == 3
    W = make_tower(Fe(1), [tau, 0, 0, 0])
    z = W.zeta
    assert str(canonical_class(W)) == "-C0 - f - 4*z"
    X = z + W.pullback(tau - B.gen("f"))
    assert str(adjunction(W, X)) == "-3*z"
    assert integrate(z**5) == 3
    assert integrate(z**4 * W.pullback(tau - B.gen("f"))) == 2
    assert polarized_degree(W, X, z) == 5


# -- Segre-type identities for towers with prescribed Chern classes ------


@pytest.mark.parametrize("c2", [0, 3, 7])
@pytest.mark.parametrize("surface", ["P2", "P1xP1", "F1"])
@pytest.mark.parametrize("rank", [2, 3])
def test_segre_identity_over_surfaces(surface, rank, c2):
    # integral of z^(rank+1) equals c1^2 - c2 for rank 2 and rank 3 alike
    if surface == "P2":
        B, base = base_space(P2()), P2()
        c1, c1c1 = 3 * B.gen("h"), 9
    elif surface == "P1xP1":
        B, base = base_space(P1xP1()), P1xP1()
        c1, c1c1 = 2 * B.gen("f1") + 2 * B.gen("f2"), 8
    else:
        B, base = base_space(Fe(1)), Fe(1)
        c1, c1c1 = 2 * B.gen("C0") + 3 * B.gen("f"), 8
    assert integrate(c1 * c1) == c1c1
    A = chern_tower(base, rank, [c1, c2 * B.point()])
    assert integrate(A.zeta ** (rank + 1)) == c1c1 - c2


@pytest.mark.parametrize("c2", range(8))
@pytest.mark.parametrize("surface", [P1xP1(), Fe(2)])
def test_degenerate_conic_bundle_degree(surface, c2):
    # rank-2 bundle with c1 = -K_S: the tower has -K = 2z and degree 8 - c2
    B = base_space(surface)
    c1 = -1 * canonical_base_class(surface)
    A = chern_tower(surface, 2, [c1, c2 * B.point()])
    assert str(canonical_class(A)) == "-2*z"
    assert polarized_degree(A, -1 * canonical_class(A), A.zeta) == 2 * (8 - c2)
    assert integrate(A.zeta**3) == 8 - c2


# -- normalization and ring sanity ----------------------------------------


@pytest.mark.parametrize(
    "A",
    [
        make_tower(P1(), [0, 1, 1, 2]),
        make_tower(P2(), [0, base_space(P2()).gen("h")]),
        make_tower(Fe(2), [0, 0, base_space(Fe(2)).gen("f")]),
        chern_tower(P1xP2(), 2, [base_space(P1xP2()).gen("p")]),
    ],
    ids=repr,
)
def test_fiber_normalization(A):
    # the class of a point integrates to 1 against z^(rank-1)
    assert integrate(A.zeta ** (A.rank - 1) * A.point()) == 1


def test_grothendieck_relation_holds():
    B = base_space(Fe(1))
    c1 = 2 * B.gen("C0") + 3 * B.gen("f")
    A = chern_tower(Fe(1), 3, [c1, 4 * B.point()])
    z = A.zeta
    lhs = z**3
    rhs = A.pullback(c1) * z**2 - A.pullback(4 * B.point()) * z
    assert lhs == rhs
    assert integrate(z**4) == 8 - 4


def test_hirzebruch_intersection_table():
    B = base_space(Fe(2))
    C0, f = B.gen("C0"), B.gen("f")
    assert integrate(C0 * C0) == -2
    assert integrate(C0 * f) == 1
    assert integrate(f * f) == 0
    assert str(C0 * C0) == "-2*C0*f"


def test_rendering_is_deterministic_across_constructions():
    def build():
        B = base_space(P1xP2())
        W = make_tower(P1xP2(), [B.gen("p") + B.gen("h"), 0, 0, 0])
        return str(canonical_class(W)), str(W.zeta**4)

    assert build() == build()
    s, _ = build()
    assert s == "-p - 2*h - 4*z"


def test_zero_and_scalars():
    T = p1_tower(0, 1)
    z = T.zeta
    assert str(0 * z) == "0"
    assert (0 * z).is_zero()
    assert integrate(0 * (z * z)) == 0
    assert 2 * z + 3 * z == 5 * z
    assert str(z - z) == "0"


# -- rejection paths -------------------------------------------------------


def test_mixed_degree_addition_rejected():
    T = p1_tower(0, 1)
    with pytest.raises(ValueError, match="degrees"):
        T.zeta + T.zeta * T.zeta


def test_ambient_mismatch_rejected():
    T1 = p1_tower(0, 1)
    T2 = p1_tower(0, 2)
    with pytest.raises(ValueError, match="different ambients"):
        T1.zeta * T2.zeta


def test_integrate_rejects_wrong_degree():
    T = p1_tower(0, 0, 0, 1)
    with pytest.raises(ValueError, match="degree"):
        integrate(T.zeta)


def test_adjunction_rejects_non_divisor():
    T = p1_tower(0, 0, 0, 1)
    with pytest.raises(ValueError, match="divisor"):
        adjunction(T, T.zeta * T.zeta)
    with pytest.raises(ValueError, match="divisor"):
        adjunction(T, T.zero())


def test_make_tower_input_validation():
    with pytest.raises(ValueError, match="empty"):
        make_tower(P1(), [])
    with pytest.raises(ValueError, match="rank"):
        make_tower(P1(), [1])
    with pytest.raises(ValueError, match="only meaningful over P1"):
        make_tower(P2(), [1, 0])
    B = base_space(P2())
    with pytest.raises(ValueError, match="not a divisor"):
        make_tower(P2(), [B.gen("h") ** 2, 0])


def test_chern_tower_input_validation():
    B = base_space(P2())
    h = B.gen("h")
    with pytest.raises(ValueError, match="rank"):
        chern_tower(P2(), 1, [h])
    with pytest.raises(ValueError, match="degree"):
        chern_tower(P2(), 2, [h * h])
    with pytest.raises(ValueError, match="too many"):
        chern_tower(P2(), 2, [h, h * h, h * h * h])


def test_canonical_class_needs_tower():
    with pytest.raises(ValueError, match="rank"):
        canonical_class(base_space(P2()))


# -- algebraic laws under hypothesis ---------------------------------------


@given(a=coeffs, b=coeffs, x=st.tuples(coeffs, coeffs), y=st.tuples(coeffs, coeffs))
@settings(max_examples=80, deadline=None)
def test_integrate_is_multilinear(a, b, x, y):
    T = p1_tower(0, 0, 0, 1)
    F = tower_F(T)
    X = x[0] * T.zeta + x[1] * F
    Y = y[0] * T.zeta + y[1] * F
    M = T.zeta**3
    lhs = integrate((a * X + b * Y) * M)
    rhs = a * integrate(X * M) + b * integrate(Y * M)
    assert lhs == rhs


@given(
    x=st.tuples(coeffs, coeffs, coeffs),
    y=st.tuples(coeffs, coeffs, coeffs),
    w=st.tuples(coeffs, coeffs, coeffs),
)
@settings(max_examples=80, deadline=None)
def test_product_commutes_and_associates(x, y, w):
    B = base_space(Fe(1))
    A = make_tower(Fe(1), [B.gen("C0") + 2 * B.gen("f"), 0])
    gens = [A.zeta, A.pullback(B.gen("C0")), A.pullback(B.gen("f"))]

    def divisor(cs):
        out = A.zero()
        for c, g in zip(cs, gens):
            out = out + c * g
        return out

    X, Y, W = divisor(x), divisor(y), divisor(w)
    assert X * Y == Y * X
    assert (X * Y) * W == X * (Y * W)


@given(x=st.tuples(coeffs, coeffs), y=st.tuples(coeffs, coeffs))
@settings(max_examples=80, deadline=None)
def test_pullback_is_a_ring_map(x, y):
    B = base_space(P1xP1())
    A = make_tower(P1xP1(), [B.gen("f1"), 0, 0])
    bx = x[0] * B.gen("f1") + x[1] * B.gen("f2")
    by = y[0] * B.gen("f1") + y[1] * B.gen("f2")
    assert A.pullback(bx * by) == A.pullback(bx) * A.pullback(by)
    assert A.pullback(bx + by) == A.pullback(bx) + A.pullback(by)


@given(c=st.integers(min_value=-9, max_value=9))
@settings(max_examples=40, deadline=None)
def test_projection_formula_for_points(c):
    B = base_space(P1xP2())
    A = make_tower(P1xP2(), [B.gen("p"), 0, 0])
    top = c * B.gen("p") * B.gen("h") ** 2
    assert integrate(A.pullback(top) * A.zeta ** (A.rank - 1)) == integrate(top) == c
