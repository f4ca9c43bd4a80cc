"""Quotient models of the invariant-valuation algebras.

The unitary model in complex dimension n is the graded quotient of Q[s,t]
(deg s = 2, deg t = 1) by the ideal generated by the degree n+1 and n+2
components of log(1 + s + t).  In each degree d <= 2n the monomials
s^p t^(d-2p) with 0 <= p <= floor(min(d, 2n-d)/2) form a basis; every other
monomial is rewritten through per-degree reduction tables computed once at
construction by eliminating the corresponding degree slice of the ideal.
Degrees 2n+1 and 2n+2 are verified to be covered entirely by the ideal, so
everything above degree 2n reduces to zero.

The orthogonal model in real dimension n is the truncated polynomial ring
Q[t]/(t^(n+1)), which doubles as a tiny independent oracle for the unitary
engine (the n=1 unitary model collapses onto it).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AlgebraMismatch, DegreeOutOfRange, InternalInconsistency
from .exact import _row_reduce
from .poly import GradedPoly, Monomial, S, log_component, poly_parse


def basis_monomials(n: int, d: int) -> tuple[Monomial, ...]:
    """Ordered basis of degree d: t^d, s*t^(d-2), ..., up to p = min(d, 2n-d)//2."""
    if d < 0 or d > 2 * n:
        return ()
    p_max = min(d, 2 * n - d) // 2
    return tuple((p, d - 2 * p) for p in range(p_max + 1))


def series_dimension(n: int, d: int) -> int:
    """Coefficient of x^d in (1-x^(n+1))(1-x^(n+2)) / ((1-x)(1-x^2)).

    Independent of the basis rule: expands 1/((1-x)(1-x^2)) as
    sum_m (floor(m/2)+1) x^m and distributes the numerator.
    """

    def g(m: int) -> int:
        return m // 2 + 1 if m >= 0 else 0

    return g(d) - g(d - n - 1) - g(d - n - 2) + g(d - 2 * n - 3)


class AlgebraElement:
    """An element of a quotient model, held in normal form.

    Instances are produced by the algebras' ``normal_form``; the polynomial
    is always supported on basis monomials.
    """

    __slots__ = ("algebra", "poly")

    def __init__(self, algebra, poly: GradedPoly):
        self.algebra = algebra
        self.poly = poly

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.poly == other.poly

    def _require_same(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement) or self.algebra != other.algebra:
            raise AlgebraMismatch(f"operands live in {self.algebra!r} and {getattr(other, 'algebra', other)!r}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same(other)
        return AlgebraElement(self.algebra, self.poly + other.poly)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same(other)
        return AlgebraElement(self.algebra, self.poly - other.poly)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, -self.poly)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._require_same(other)
            return self.algebra.normal_form(self.poly * other.poly)
        return AlgebraElement(self.algebra, self.poly * Fraction(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def degree_component(self, d: int) -> "AlgebraElement":
        return AlgebraElement(self.algebra, self.poly.homogeneous_component(d))

    def restrict(self, m: int) -> "AlgebraElement":
        """Image in the unitary model of complex dimension m <= n."""
        if not isinstance(self.algebra, UnitaryAlgebra):
            raise AlgebraMismatch("restriction is defined on the unitary model")
        if not 1 <= m <= self.algebra.n:
            raise DegreeOutOfRange(f"restriction target must satisfy 1 <= m <= {self.algebra.n}")
        return build_algebra(m).normal_form(self.poly)

    def step_up(self) -> "AlgebraElement":
        """Multiplication by s after inclusion into the next unitary model."""
        if not isinstance(self.algebra, UnitaryAlgebra):
            raise AlgebraMismatch("step-up is defined on the unitary model")
        return build_algebra(self.algebra.n + 1).normal_form(S * self.poly)

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"<{self.poly} in {self.algebra!r}>"


class UnitaryAlgebra:
    """Unitary quotient model for a fixed complex dimension n."""

    __slots__ = ("n", "top_degree", "_basis", "_basis_index", "_reduction")

    def __init__(self, n: int):
        if n < 1:
            raise DegreeOutOfRange("complex dimension n must be >= 1")
        self.n = n
        self.top_degree = 2 * n
        self._basis = {d: basis_monomials(n, d) for d in range(2 * n + 1)}
        self._basis_index = {d: {m: i for i, m in enumerate(b)} for d, b in self._basis.items()}
        self._reduction: dict[Monomial, GradedPoly] = {}
        generators = (log_component(n + 1), log_component(n + 2))
        for d in range(n + 1, 2 * n + 3):
            self._reduce_degree_slice(d, generators)

    def _reduce_degree_slice(self, d: int, generators: tuple[GradedPoly, GradedPoly]) -> None:
        """Rewrite every non-basis monomial of degree d in basis monomials.

        The degree-d slice of the ideal is spanned by the monomial multiples
        of the two generators landing in degree d.  Row-reducing those
        multiples with pivot columns at the non-basis monomials (descending
        s-power first) must consume exactly the non-basis monomials; any
        other pivot pattern contradicts the dimension count and aborts.
        """
        monos = [(p, d - 2 * p) for p in range(d // 2 + 1)]
        basis = self._basis.get(d, ())
        in_basis = set(basis)
        nonbasis = sorted((m for m in monos if m not in in_basis), key=lambda m: -m[0])
        if not nonbasis:
            return
        cols = nonbasis + list(basis)
        index = {m: c for c, m in enumerate(cols)}
        rows: list[list[Fraction]] = []
        for g in generators:
            shift = d - g.total_degree()
            if shift < 0:
                continue
            for a in range(shift // 2 + 1):
                multiple = GradedPoly.monomial(a, shift - 2 * a) * g
                row = [Fraction(0)] * len(cols)
                for mono, c in multiple.terms.items():
                    row[index[mono]] = c
                rows.append(row)
        pivots = _row_reduce(rows, len(cols))
        if pivots != list(range(len(nonbasis))):
            raise InternalInconsistency(
                f"n={self.n}: degree-{d} ideal slice pivots {pivots} do not match "
                f"the {len(nonbasis)} non-basis monomials"
            )
        for r, mono in enumerate(nonbasis):
            rewrite = {
                cols[c]: -rows[r][c] for c in range(len(nonbasis), len(cols)) if rows[r][c] != 0
            }
            self._reduction[mono] = GradedPoly(rewrite)

    def basis(self, d: int) -> tuple[Monomial, ...]:
        return self._basis.get(d, ())

    def basis_index(self, d: int) -> dict[Monomial, int]:
        return self._basis_index.get(d, {})

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def reduction_of(self, mono: Monomial) -> GradedPoly:
        """Normal form of a single non-basis monomial (zero above degree 2n+2)."""
        d = 2 * mono[0] + mono[1]
        if d > self.top_degree:
            return self._reduction.get(mono, GradedPoly.zero())
        if mono in self._basis_index[d]:
            return GradedPoly.monomial(*mono)
        return self._reduction[mono]

    def normal_form(self, poly: GradedPoly | str) -> AlgebraElement:
        """Linear extension of the reduction tables; total on all of Q[s,t]."""
        if isinstance(poly, str):
            poly = poly_parse(poly)
        acc: dict[Monomial, Fraction] = {}
        for mono, c in poly.terms.items():
            d = 2 * mono[0] + mono[1]
            if d > self.top_degree:
                continue
            if mono in self._basis_index[d]:
                acc[mono] = acc.get(mono, Fraction(0)) + c
            else:
                for m2, c2 in self._reduction[mono].terms.items():
                    acc[m2] = acc.get(m2, Fraction(0)) + c * c2
        return AlgebraElement(self, GradedPoly(acc))

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, GradedPoly.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitaryAlgebra):
            return NotImplemented
        return self.n == other.n

    def __hash__(self) -> int:
        return hash(("U", self.n))

    def __repr__(self) -> str:
        return f"UnitaryAlgebra(n={self.n})"


class SOAlgebra:
    """Truncated polynomial model Q[t]/(t^(n+1)) in real dimension n."""

    __slots__ = ("n", "top_degree")

    def __init__(self, n: int):
        if n < 1:
            raise DegreeOutOfRange("real dimension n must be >= 1")
        self.n = n
        self.top_degree = n

    def basis(self, d: int) -> tuple[Monomial, ...]:
        return ((0, d),) if 0 <= d <= self.n else ()

    def basis_index(self, d: int) -> dict[Monomial, int]:
        return {(0, d): 0} if 0 <= d <= self.n else {}

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def normal_form(self, poly: GradedPoly | str) -> AlgebraElement:
        if isinstance(poly, str):
            poly = poly_parse(poly)
        acc: dict[Monomial, Fraction] = {}
        for (p, q), c in poly.terms.items():
            if p:
                raise ValueError("the orthogonal model is generated by t alone")
            if q <= self.n:
                acc[(0, q)] = acc.get((0, q), Fraction(0)) + c
        return AlgebraElement(self, GradedPoly(acc))

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, GradedPoly.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SOAlgebra):
            return NotImplemented
        return self.n == other.n

    def __hash__(self) -> int:
        return hash(("SO", self.n))

    def __repr__(self) -> str:
        return f"SOAlgebra(n={self.n})"


_BUILD_CACHE: dict[int, UnitaryAlgebra] = {}


def build_algebra(n: int) -> UnitaryAlgebra:
    """Shared construction of the unitary model; instances are immutable."""
    if n < 1:
        raise DegreeOutOfRange("complex dimension n must be >= 1")
    alg = _BUILD_CACHE.get(n)
    if alg is None:
        alg = UnitaryAlgebra(n)
        _BUILD_CACHE[n] = alg
    return alg


def annihilator_basis(alg: UnitaryAlgebra, j: int) -> list[AlgebraElement]:
    """Basis of the degree-j annihilator of the t-powers subalgebra.

    The elements are (n-i)*s^i*t^(j-2i) - (4n-4i-2)*s^(i+1)*t^(j-2i-2) for
    0 <= i < min(j, 2n-j)//2; there are dim(degree j) - 1 of them.  Degrees
    where the annihilator vanishes (j in {0, 1, 2n-1, 2n}, and every degree
    when n = 1) yield the empty list.
    """
    n = alg.n
    if j < 0 or j > 2 * n:
        raise DegreeOutOfRange(f"degree must lie in 0..{2 * n}, got {j}")
    count = min(j, 2 * n - j) // 2
    out = []
    for i in range(count):
        poly = GradedPoly(
            {(i, j - 2 * i): n - i, (i + 1, j - 2 * i - 2): -(4 * n - 4 * i - 2)}
        )
        out.append(alg.normal_form(poly))
    return out
