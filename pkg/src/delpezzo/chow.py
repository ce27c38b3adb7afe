"""Exact Chow-ring arithmetic on projective bundles over small rational bases.

The ambient spaces are towers P(V) -> B where B is one of P1, P2,
P1 x P1, a Hirzebruch surface F_e, or P1 x P2, and V is either a sum of
line bundles or a bundle with prescribed Chern classes.  The ring is the
quotient of Z[base generators, z] by the base relations and the
Grothendieck relation

    z^r = sum_{i >= 1} (-1)^(i+1) c_i(V) z^(r-i),

with z the relative hyperplane class.  Every element is kept in a unique
normal form (no reducible generator power, z-exponent < rank), so
equality is dictionary equality and integration of a top-degree class
reads off a single coefficient.  All coefficients are Python ints, hence
exact at any size.

Values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence

_BASE_GENS = {
    "P1": ("F",),
    "P2": ("h",),
    "P1xP1": ("f1", "f2"),
    "Fe": ("C0", "f"),
    "P1xP2": ("p", "h"),
}

_BASE_DIM = {"P1": 1, "P2": 2, "P1xP1": 2, "Fe": 2, "P1xP2": 3}

# the unique monomial of top degree surviving normal form, and its
# normalization: integral of that monomial over the base is 1
_BASE_TOP = {
    "P1": (1,),
    "P2": (2,),
    "P1xP1": (1, 1),
    "Fe": (1, 1),
    "P1xP2": (1, 2),
}


class Base:
    """One of the supported base spaces, identified by kind (and e for F_e)."""

    __slots__ = ("kind", "e")

    def __init__(self, kind: str, e: int = 0):
        if kind not in _BASE_GENS:
            raise ValueError(f"unsupported base kind {kind!r}")
        if kind != "Fe" and e != 0:
            raise ValueError("parameter e only applies to Hirzebruch surfaces")
        if kind == "Fe" and e < 0:
            raise ValueError("Hirzebruch parameter e must be >= 0")
        self.kind = kind
        self.e = e

    @property
    def gens(self) -> tuple[str, ...]:
        return _BASE_GENS[self.kind]

    @property
    def dim(self) -> int:
        return _BASE_DIM[self.kind]

    @property
    def top_monomial(self) -> tuple[int, ...]:
        return _BASE_TOP[self.kind]

    def relations(self) -> list[tuple[tuple[int, ...], list[tuple[tuple[int, ...], int]]]]:
        """Rewrite rules (lhs monomial -> polynomial) defining the base ring."""
        if self.kind == "P1":
            return [((2,), [])]
        if self.kind == "P2":
            return [((3,), [])]
        if self.kind == "P1xP1":
            return [((2, 0), []), ((0, 2), [])]
        if self.kind == "Fe":
            # C0^2 = -e * C0 f,  f^2 = 0
            return [((2, 0), [((1, 1), -self.e)]), ((0, 2), [])]
        return [((2, 0), []), ((0, 3), [])]

    def canonical_coeffs(self) -> dict[str, int]:
        """Coefficients of K_B on the degree-1 generators."""
        if self.kind == "P1":
            return {"F": -2}
        if self.kind == "P2":
            return {"h": -3}
        if self.kind == "P1xP1":
            return {"f1": -2, "f2": -2}
        if self.kind == "Fe":
            return {"C0": -2, "f": -(self.e + 2)}
        return {"p": -2, "h": -3}

    def __eq__(self, other):
        return isinstance(other, Base) and self.kind == other.kind and self.e == other.e

    def __hash__(self):
        return hash((self.kind, self.e))

    def __repr__(self):
        if self.kind == "Fe":
            return f"F{self.e}"
        return self.kind


def P1() -> Base:
    return Base("P1")


def P2() -> Base:
    return Base("P2")


def P1xP1() -> Base:
    return Base("P1xP1")


def Fe(e: int) -> Base:
    return Base("Fe", e)


def P1xP2() -> Base:
    return Base("P1xP2")


class ChowElement:
    """A homogeneous class on a fixed ambient, stored in normal form."""

    __slots__ = ("ambient", "terms", "degree")

    def __init__(self, ambient: "Ambient", terms: dict, degree):
        # internal constructor; terms must already be normal-form
        self.ambient = ambient
        self.terms = terms
        self.degree = degree

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same_ambient(self, other: "ChowElement"):
        if self.ambient != other.ambient:
            raise ValueError("classes live on different ambients")

    def __add__(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        self._check_same_ambient(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add classes of degrees {self.degree} and {other.degree}"
            )
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            terms[expo] = terms.get(expo, 0) + c
            if terms[expo] == 0:
                del terms[expo]
        return ChowElement(self.ambient, terms, self.degree if terms else None)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ChowElement(
            self.ambient, {e: -c for e, c in self.terms.items()}, self.degree
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ChowElement(self.ambient, {}, None)
            return ChowElement(
                self.ambient, {e: other * c for e, c in self.terms.items()}, self.degree
            )
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if not isinstance(other, ChowElement):
            return NotImplemented
        self._check_same_ambient(other)
        if self.is_zero() or other.is_zero():
            return ChowElement(self.ambient, {}, None)
        raw: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                raw[expo] = raw.get(expo, 0) + c1 * c2
        terms = self.ambient._reduce(raw)
        degree = self.degree + other.degree if terms else None
        return ChowElement(self.ambient, terms, degree)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ambient.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, ChowElement)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ambient.gen_names
        parts = []
        for expo in sorted(self.terms, reverse=True):
            coeff = self.terms[expo]
            factors = []
            for name, k in zip(names, expo):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<{self} on {self.ambient!r}>"


class Ambient:
    """A projective bundle P(V) -> B, or the plain base B itself.

    Towers have rank >= 2 and carry the tautological class z; a plain
    base is modelled with rank 1 and no z.  The Grothendieck relation is
    stored with the Chern classes of V truncated at dim(B): relations()
    exposes every stored rewrite rule.
    """

    __slots__ = ("base", "rank", "twists", "cherns", "_rules")

    def __init__(self, base: Base, rank: int, twists, cherns):
        self.base = base
        self.rank = rank
        self.twists = twists
        self.cherns = cherns
        self._rules = None  # built lazily, immutable once built

    # -- structure ---------------------------------------------------

    @property
    def is_tower(self) -> bool:
        return self.rank >= 2

    @property
    def dim(self) -> int:
        return self.base.dim + self.rank - 1

    @property
    def gen_names(self) -> tuple[str, ...]:
        if self.is_tower:
            return self.base.gens + ("z",)
        return self.base.gens

    @property
    def nvars(self) -> int:
        return len(self.gen_names)

    def __eq__(self, other):
        return (
            isinstance(other, Ambient)
            and self.base == other.base
            and self.rank == other.rank
            and [t.terms for t in self.twists] == [t.terms for t in other.twists]
            and [c.terms for c in self.cherns] == [c.terms for c in other.cherns]
        )

    def __hash__(self):
        return hash((self.base, self.rank))

    def __repr__(self):
        if not self.is_tower:
            return f"{self.base!r}"
        if self.twists:
            inner = ", ".join(str(t) if not t.is_zero() else "0" for t in self.twists)
            return f"P({inner}) over {self.base!r}"
        inner = ", ".join(f"c{i + 1}={c}" for i, c in enumerate(self.cherns))
        return f"P({inner}) over {self.base!r}"

    # -- element construction ----------------------------------------

    def zero(self) -> ChowElement:
        return ChowElement(self, {}, None)

    def one(self) -> ChowElement:
        return ChowElement(self, {(0,) * self.nvars: 1}, 0)

    def gen(self, name: str) -> ChowElement:
        names = self.gen_names
        if name not in names:
            raise ValueError(f"no generator {name!r} on {self!r}")
        expo = tuple(1 if g == name else 0 for g in names)
        return ChowElement(self, {expo: 1}, 1)

    @property
    def zeta(self) -> ChowElement:
        if not self.is_tower:
            raise ValueError("plain base carries no tautological class")
        return self.gen("z")

    def point(self) -> ChowElement:
        """The class of a point of the base (degree dim(B))."""
        expo = self.base.top_monomial
        if self.is_tower:
            expo = expo + (0,)
        return ChowElement(self, {expo: 1}, self.base.dim)

    def from_terms(self, terms: dict) -> ChowElement:
        """Build an element from raw exponent->coefficient data (normalized here)."""
        for expo in terms:
            if len(expo) != self.nvars or any(k < 0 for k in expo):
                raise ValueError(f"bad exponent vector {expo} for {self!r}")
        degrees = {sum(e) for e, c in terms.items() if c != 0}
        if len(degrees) > 1:
            raise ValueError(f"mixed-degree input {sorted(degrees)} rejected")
        reduced = self._reduce({e: c for e, c in terms.items() if c != 0})
        return ChowElement(self, reduced, degrees.pop() if reduced else None)

    def pullback(self, x: ChowElement) -> ChowElement:
        """Pull a base class back to the tower."""
        if x.ambient.base != self.base or x.ambient.is_tower:
            raise ValueError("pullback expects a class on this tower's base")
        if not self.is_tower:
            return x
        return ChowElement(
            self, {e + (0,): c for e, c in x.terms.items()}, x.degree
        )

    # -- rewriting ---------------------------------------------------

    def relations(self) -> list[tuple[tuple[int, ...], list[tuple[tuple[int, ...], int]]]]:
        """All stored rewrite rules over the full generator tuple."""
        if self._rules is None:
            rules = []
            pad = (0,) if self.is_tower else ()
            for lhs, rhs in self.base.relations():
                rules.append((lhs + pad, [(e + pad, c) for e, c in rhs]))
            if self.is_tower:
                nb = len(self.base.gens)
                lhs = (0,) * nb + (self.rank,)
                rhs = []
                for i, ci in enumerate(self.cherns, start=1):
                    sign = 1 if i % 2 == 1 else -1
                    for bexpo, bcoeff in ci.terms.items():
                        rhs.append((bexpo + (self.rank - i,), sign * bcoeff))
                rules.append((lhs, rhs))
            self._rules = rules
        return self._rules

    def _reduce(self, raw: dict) -> dict:
        rules = self.relations()
        out: dict = {}
        stack = list(raw.items())
        while stack:
            expo, coeff = stack.pop()
            if coeff == 0:
                continue
            applied = False
            for lhs, rhs in rules:
                if all(a >= b for a, b in zip(expo, lhs)):
                    rest = tuple(a - b for a, b in zip(expo, lhs))
                    for rexpo, rcoeff in rhs:
                        stack.append(
                            (tuple(a + b for a, b in zip(rest, rexpo)), coeff * rcoeff)
                        )
                    applied = True
                    break
            if not applied:
                out[expo] = out.get(expo, 0) + coeff
                if out[expo] == 0:
                    del out[expo]
        return out


def base_space(base: Base) -> Ambient:
    """The base itself, as a rank-1 ambient without tautological class."""
    return Ambient(base, 1, (), ())


def _coerce_twist(base: Base, t) -> ChowElement:
    B = base_space(base)
    if isinstance(t, int):
        if t == 0:
            return B.zero()
        if base.kind == "P1":
            return t * B.gen("F")
        raise ValueError(
            f"integer twist {t} is only meaningful over P1; pass a divisor class"
        )
    if not isinstance(t, ChowElement):
        raise ValueError(f"twist must be a divisor class or 0, got {t!r}")
    if t.ambient.is_tower or t.ambient.base != base:
        raise ValueError(f"twist {t} does not live on the base {base!r}")
    if not t.is_zero() and t.degree != 1:
        raise ValueError(f"twist {t} is not a divisor class")
    return t


def make_tower(base: Base, twists: Sequence) -> Ambient:
    """P(O(L_1) + ... + O(L_r)) over base, r >= 2.

    Twists are divisor classes on the base; 0 denotes a trivial summand,
    and over P1 a plain integer n denotes O(n).
    """
    if not twists:
        raise ValueError("empty twist list: a tower needs at least two summands")
    coerced = tuple(_coerce_twist(base, t) for t in twists)
    if len(coerced) < 2:
        raise ValueError("a tower needs rank >= 2")
    B = base_space(base)
    # elementary symmetric classes of the twists, truncated by the base ring
    es = [B.one()]
    for L in coerced:
        es.append(B.zero())
        for i in range(len(es) - 1, 0, -1):
            es[i] = es[i] + es[i - 1] * L
    cherns = tuple(es[1:])
    return Ambient(base, len(coerced), coerced, cherns)


def chern_tower(base: Base, rank: int, cherns: Sequence[ChowElement]) -> Ambient:
    """P(V) over base for V of the given rank with prescribed c_1, c_2, ...

    cherns[i] must be a class of degree i+1 on the base (or zero); classes
    beyond dim(base) are identically zero and must not be supplied.
    """
    if rank < 2:
        raise ValueError("a tower needs rank >= 2")
    if len(cherns) > min(rank, base.dim):
        raise ValueError("too many Chern classes for this rank and base")
    B = base_space(base)
    coerced = []
    for i, c in enumerate(cherns, start=1):
        if not isinstance(c, ChowElement) or c.ambient != B:
            raise ValueError(f"c{i} must be a class on the base")
        if not c.is_zero() and c.degree != i:
            raise ValueError(f"c{i} has degree {c.degree}, expected {i}")
        coerced.append(c)
    while len(coerced) < min(rank, base.dim):
        coerced.append(B.zero())
    return Ambient(base, rank, (), tuple(coerced))


def mul(a: ChowElement, b: ChowElement) -> ChowElement:
    return a * b


def integrate(x: ChowElement) -> int:
    """Degree of a zero-cycle: x must be homogeneous of top degree."""
    A = x.ambient
    if x.is_zero():
        return 0
    if x.degree != A.dim:
        raise ValueError(
            f"integrate needs degree {A.dim} on {A!r}, got degree {x.degree}"
        )
    top = A.base.top_monomial
    if A.is_tower:
        top = top + (A.rank - 1,)
    return x.terms.get(top, 0)


def canonical_class(A: Ambient) -> ChowElement:
    """K_A = -rank * z + pullback(K_base + c1(V))."""
    if not A.is_tower:
        raise ValueError("canonical_class expects a genuine tower (rank >= 2)")
    B = base_space(A.base)
    k = B.zero()
    for name, c in A.base.canonical_coeffs().items():
        k = k + c * B.gen(name)
    return (-A.rank) * A.zeta + A.pullback(k + A.cherns[0])


def canonical_base_class(base: Base) -> ChowElement:
    """K_B as a divisor class on the plain base."""
    B = base_space(base)
    k = B.zero()
    for name, c in base.canonical_coeffs().items():
        k = k + c * B.gen(name)
    return k


def adjunction(A: Ambient, X: ChowElement) -> ChowElement:
    """K_A + X: the ambient class restricting to K_X on a smooth member."""
    if X.ambient != A:
        raise ValueError("divisor does not live on this ambient")
    if X.degree != 1:
        raise ValueError(f"adjunction needs a divisor class, got degree {X.degree}")
    return canonical_class(A) + X


def polarized_degree(A: Ambient, X: ChowElement, H: ChowElement) -> int:
    """H^n . X for a divisor X on the (n+1)-dimensional ambient."""
    if X.ambient != A or H.ambient != A:
        raise ValueError("classes do not live on this ambient")
    if X.degree != 1 or H.degree != 1:
        raise ValueError("polarized_degree needs divisor classes")
    n = A.dim - 1
    return integrate(H**n * X)
