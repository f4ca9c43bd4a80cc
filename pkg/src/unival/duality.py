"""Duality pairings, kinematic coefficient matrices, and their identities.

Conventions: the top class of the unitary model in complex dimension n is
t^(2n), and the duality pairing of two elements is the t^(2n)-coefficient of
their product.  All matrices below are taken over the ordered monomial basis
t^(2k), s*t^(2k-2), ..., s^k of degree 2k.

  * pairing_matrix(n, k)            the (k+1)x(k+1) pairing Gram matrix
  * kinematic_matrix(n, k)          its inverse: one coefficient block of the
                                    kinematic tensor
  * annihilator_change_of_basis     rewrites monomial coordinates in the
                                    basis (t^j, annihilator elements)
  * companion_data(n, k)            the scaled product of a kinematic matrix
                                    with the next-lower pairing matrix, which
                                    must be a companion matrix; its last
                                    column encodes one relation of the
                                    quotient
  * step_down_matrix(n, k)          reduces the (n, k) kinematic matrix to
                                    the (n-1, k-1) one by a block identity
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import build_algebra
from .errors import IndexOutOfRange, InternalInconsistency, StructureViolation
from .exact import ExactMatrix, is_positive_definite
from .poly import GradedPoly, log_component


def top_coefficient(element) -> Fraction:
    """Coefficient of the top class t^top in a normal form (0 if absent)."""
    return element.poly.coefficient(0, element.algebra.top_degree)


@lru_cache(maxsize=None)
def pairing_matrix(n: int, k: int) -> ExactMatrix:
    """Gram matrix of the degree-2k duality pairing <a, b> = top(a * t^(2n-4k) * b).

    Entry (i, j) is the top coefficient of s^(i+j) t^(2n-2i-2j), so the
    matrix is Hankel, hence symmetric.  Construction cross-checks the direct
    reduction against both product pairings <a,b> = top(a * (t^(2n-4k) b))
    and <<a,b>> = top((t a) * (t^(2n-4k-1) b)), which must coincide.
    """
    if not 0 <= 2 * k <= n:
        raise IndexOutOfRange(f"pairing matrix requires 0 <= 2k <= n, got n={n}, k={k}")
    alg = build_algebra(n)

    def top_of(p: int, q: int) -> Fraction:
        return top_coefficient(alg.normal_form(GradedPoly.monomial(p, q)))

    h = [top_of(m, 2 * n - 2 * m) for m in range(2 * k + 1)]
    entries = [[h[i + j] for j in range(k + 1)] for i in range(k + 1)]
    for i in range(k + 1):
        for j in range(k + 1):
            a = alg.normal_form(GradedPoly.monomial(i, 2 * k - 2 * i))
            b = alg.normal_form(GradedPoly.monomial(j, 2 * n - 2 * k - 2 * j))
            if top_coefficient(a * b) != entries[i][j]:
                raise InternalInconsistency(
                    f"pairing route <a,b> disagrees with direct reduction at n={n}, k={k}, ({i},{j})"
                )
            if 2 * k + 1 <= n:
                ta = alg.normal_form(GradedPoly.monomial(i, 2 * k - 2 * i + 1))
                tb = alg.normal_form(GradedPoly.monomial(j, 2 * n - 2 * k - 2 * j - 1))
                if top_coefficient(ta * tb) != entries[i][j]:
                    raise InternalInconsistency(
                        f"pairing route <<a,b>> disagrees with direct reduction at n={n}, k={k}, ({i},{j})"
                    )
    return ExactMatrix(entries)


@lru_cache(maxsize=None)
def kinematic_matrix(n: int, k: int) -> ExactMatrix:
    """Inverse of the pairing matrix: the degree-(2k, 2n-2k) kinematic block."""
    inv = pairing_matrix(n, k).inverse()
    if not inv.is_symmetric():
        raise InternalInconsistency(f"inverse of the symmetric pairing matrix n={n}, k={k} is not symmetric")
    return inv


def annihilator_change_of_basis(n: int, k: int) -> ExactMatrix:
    """Bidiagonal matrix expressing (t^j, annihilator elements) in monomials.

    Row 0 selects t^j; row r has (n-r+1) in column r-1 and -2(2n-2r+1) on the
    diagonal, matching the annihilator basis elements degree by degree.
    """
    if not 2 * k + 1 <= n:
        raise IndexOutOfRange(f"requires 2k+1 <= n, got n={n}, k={k}")
    size = k + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[0][0] = Fraction(1)
    for r in range(1, size):
        rows[r][r - 1] = Fraction(n - r + 1)
        rows[r][r] = Fraction(-2 * (2 * n - 2 * r + 1))
    return ExactMatrix(rows)


def kinematic_annihilator_block(n: int, k: int) -> ExactMatrix:
    """Lower-right k x k block of the kinematic matrix in annihilator coordinates.

    Conjugating the kinematic matrix by the inverse change of basis must
    produce a block matrix diag(1, B) with B symmetric and nonsingular; B is
    returned.  Any other shape raises StructureViolation.
    """
    if k < 1 or 2 * k + 1 > n:
        raise IndexOutOfRange(f"requires k >= 1 and 2k+1 <= n, got n={n}, k={k}")
    a_inv = annihilator_change_of_basis(n, k).inverse()
    m = a_inv.transpose() @ kinematic_matrix(n, k) @ a_inv
    if m[0, 0] != 1 or any(m[0, i] != 0 or m[i, 0] != 0 for i in range(1, k + 1)):
        raise StructureViolation(
            f"kinematic matrix n={n}, k={k} does not split off the unit block in annihilator coordinates"
        )
    block = m.block(1, k + 1, 1, k + 1)
    if not block.is_symmetric():
        raise StructureViolation(f"annihilator block n={n}, k={k} is not symmetric")
    if block.det() == 0:
        raise StructureViolation(f"annihilator block n={n}, k={k} is singular")
    return block


@dataclass(frozen=True)
class CompanionData:
    """Companion matrix extracted from one kinematic/pairing product.

    ``coefficients`` holds a_0 .. a_k read off the last column; the implied
    next coefficient a_{k+1} is always 1.
    """

    n: int
    k: int
    matrix: ExactMatrix
    coefficients: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "a": [str(c) for c in self.coefficients]}


def companion_data(n: int, k: int) -> CompanionData:
    """Verify (n / (2(2n-1))) * kinematic(n,k) @ pairing(n-1,k) is a companion matrix.

    The product must have ones on the subdiagonal, zeros elsewhere outside
    the last column, and the negated relation coefficients in the last
    column, which are extracted and returned.
    """
    if not 2 * k <= n - 1:
        raise IndexOutOfRange(f"requires 2k <= n-1, got n={n}, k={k}")
    product = (kinematic_matrix(n, k) @ pairing_matrix(n - 1, k)).scale(Fraction(n, 2 * (2 * n - 1)))
    for i in range(k + 1):
        for j in range(k):
            if product[i, j] != Fraction(int(i == j + 1)):
                raise StructureViolation(
                    f"kinematic/pairing product n={n}, k={k} is not a companion matrix at ({i},{j})"
                )
    coefficients = tuple(-product[i, k] for i in range(k + 1))
    return CompanionData(n, k, product, coefficients)


def companion_coefficient(n: int, k: int, i: int) -> Fraction:
    """Closed form of the i-th companion coefficient a_i.

    a_i = (-2)^(i-k-1) C(k+1, i) (n-i)(n-i-1)...(n-k) /
          ((2n-2k-2i-1)(2n-2k-2i-3)...(2n-4k-1)), with a_{k+1} = 1 and empty
    products equal to 1.
    """
    if not 2 * k <= n - 1:
        raise IndexOutOfRange(f"requires 2k <= n-1, got n={n}, k={k}")
    if not 0 <= i <= k + 1:
        raise IndexOutOfRange(f"coefficient index must lie in 0..{k + 1}, got {i}")
    if i == k + 1:
        return Fraction(1)
    numerator = 1
    for j in range(i, k + 1):
        numerator *= n - j
    denominator = 1
    for j in range(k - i + 1):
        denominator *= 2 * n - 2 * k - 2 * i - 1 - 2 * j
    power = k + 1 - i
    return Fraction((-1) ** power * comb(k + 1, i) * numerator, 2**power * denominator)


def companion_relation_times_t(n: int, k: int) -> GradedPoly:
    """t times the relation polynomial: sum_i a_i s^i t^(2n-2k-2i).

    Always a polynomial; for odd n at k = (n-1)/2 the bare relation would
    carry t^(-1), so only this product is ever materialized.
    """
    if not 2 * k <= n - 1:
        raise IndexOutOfRange(f"requires 2k <= n-1, got n={n}, k={k}")
    return GradedPoly(
        {(i, 2 * n - 2 * k - 2 * i): companion_coefficient(n, k, i) for i in range(k + 2)}
    )


def companion_relation(n: int, k: int) -> GradedPoly:
    """The relation polynomial sum_i a_i s^i t^(2n-2k-2i-1); needs 2k <= n-2."""
    if not 2 * k <= n - 2:
        raise IndexOutOfRange(
            f"requires 2k <= n-2 (only t times the relation is polynomial at 2k = n-1), got n={n}, k={k}"
        )
    return GradedPoly(
        {(i, 2 * n - 2 * k - 2 * i - 1): companion_coefficient(n, k, i) for i in range(k + 2)}
    )


def companion_relation_vanishes(n: int, k: int) -> bool:
    """Whether the relation (resp. t times it) reduces to zero in the quotient."""
    alg = build_algebra(n)
    if alg.normal_form(companion_relation_times_t(n, k)):
        return False
    if 2 * k <= n - 2 and alg.normal_form(companion_relation(n, k)):
        return False
    return True


def companion_relation_is_log_component(n: int) -> bool:
    """Whether the extreme relation equals the stated multiple of the degree-(n+1) log component.

    Even n: relation(n, n/2 - 1) == (-1)^(n/2) f_{n+1}; odd n:
    t * relation(n, (n-1)/2) == (-1)^((n-1)/2) (n+1)/2 f_{n+1}.  Compared as
    raw polynomials, before any reduction.
    """
    if n < 2:
        raise IndexOutOfRange("requires n >= 2")
    f = log_component(n + 1)
    if n % 2 == 0:
        return companion_relation(n, n // 2 - 1) == Fraction((-1) ** (n // 2)) * f
    scale = Fraction((-1) ** ((n - 1) // 2) * (n + 1), 2)
    return companion_relation_times_t(n, (n - 1) // 2) == scale * f


def binomial_reduction_identity(n: int, i: int) -> bool:
    """(n-i) C(2n-2i-1, n-i) == 2 (2n-2i-1) C(2n-2i-3, n-i-1)."""
    return (n - i) * comb(2 * n - 2 * i - 1, n - i) == 2 * (2 * n - 2 * i - 1) * comb(
        2 * n - 2 * i - 3, n - i - 1
    )


def step_down_matrix(n: int, k: int) -> ExactMatrix:
    """Matrix reducing the (n, k) kinematic matrix to the (n-1, k-1) one.

    Row 0 is C(2n-2j-1, n-j) / C(2n-1, n) for j = 0..k; row i >= 1 carries
    n/(2(2n-1)) in column i-1 and minus that multiple of the (n-1, k-1)
    companion coefficient a_{i-1} in the last column.
    """
    if k < 1 or 2 * k + 1 > n:
        raise IndexOutOfRange(f"requires k >= 1 and 2k+1 <= n, got n={n}, k={k}")
    size = k + 1
    lead = Fraction(n, 2 * (2 * n - 1))
    rows = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        rows[0][j] = Fraction(comb(2 * n - 2 * j - 1, n - j), comb(2 * n - 1, n))
    for i in range(1, size):
        rows[i][i - 1] = lead
        rows[i][k] -= lead * companion_coefficient(n - 1, k - 1, i - 1)
    return ExactMatrix(rows)


def step_down_identity_holds(n: int, k: int) -> bool:
    """Whether step_down(n,k) @ kinematic(n,k) == diag(1, kinematic(n-1,k-1)).

    Also checks the binomial identity used alongside it for i = 0..k-1.
    """
    product = step_down_matrix(n, k) @ kinematic_matrix(n, k)
    small = kinematic_matrix(n - 1, k - 1)
    for i in range(k + 1):
        for j in range(k + 1):
            if i == 0 or j == 0:
                expected = Fraction(int(i == j))
            else:
                expected = small[i - 1, j - 1]
            if product[i, j] != expected:
                return False
    return all(binomial_reduction_identity(n, i) for i in range(k))


def coefficient_recurrences_hold(n: int, k: int) -> bool:
    """The linear relations pinning down the companion coefficients.

    Checks, with closed-form values throughout:
      sum_i C(2n-2i-1, n-i) a_i^{n,k} == 0                       (i = 0..k+1)
      a_k^{n,k} - a_{k-1}^{n-2,k-1} == -n / (2(2n-4k-1))
      a_{i-1}^{n-2,k-1} + a_i^{n-1,k-1} (a_k^{n,k} - a_{k-1}^{n-2,k-1})
          == a_i^{n,k}                                           (i = 0..k-1)
    """
    if k < 1 or 2 * k > n - 1:
        raise IndexOutOfRange(f"requires k >= 1 and 2k <= n-1, got n={n}, k={k}")
    a = [companion_coefficient(n, k, i) for i in range(k + 2)]
    if sum(comb(2 * n - 2 * i - 1, n - i) * a[i] for i in range(k + 2)) != 0:
        return False
    gap = a[k] - companion_coefficient(n - 2, k - 1, k - 1)
    if gap != Fraction(-n, 2 * (2 * n - 4 * k - 1)):
        return False
    for i in range(k):
        previous = companion_coefficient(n - 2, k - 1, i - 1) if i >= 1 else Fraction(0)
        if previous + companion_coefficient(n - 1, k - 1, i) * gap != a[i]:
            return False
    return True


def positivity_scan(n_max: int) -> list[tuple[int, int, bool]]:
    """Positive definiteness of every kinematic matrix with 2k <= n <= n_max.

    Reports only; draws no conclusion beyond the scanned range.
    """
    if n_max < 1:
        raise IndexOutOfRange("n_max must be >= 1")
    return [
        (n, k, is_positive_definite(kinematic_matrix(n, k)))
        for n in range(1, n_max + 1)
        for k in range(n // 2 + 1)
    ]
