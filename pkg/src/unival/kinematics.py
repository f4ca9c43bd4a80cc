"""Kinematic coefficient tensors and their structural identities.

A tensor lives in (left model) x (right model) and is stored as one exact
coefficient matrix per bidegree, indexed by the ordered monomial bases of the
two factors.  The unit kinematic tensor of the unitary model packs one
kinematic matrix per bidegree (i, 2n-i); multiplying a factor in, restricting
a factor, or stepping a factor up are all linear block operations.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AlgebraElement,
    SOAlgebra,
    annihilator_basis,
    build_algebra,
)
from .duality import kinematic_matrix
from .errors import AlgebraMismatch, DegreeOutOfRange, InternalInconsistency, NotInSpan
from .exact import ExactMatrix, solve_in_span
from .poly import GradedPoly, S


class TensorElement:
    """Bidegree-blocked element of a tensor product of two quotient models."""

    __slots__ = ("left", "right", "blocks")

    def __init__(self, left, right, blocks: dict[tuple[int, int], ExactMatrix]):
        canonical: dict[tuple[int, int], ExactMatrix] = {}
        for (dl, dr), matrix in blocks.items():
            rows = left.dim(dl)
            cols = right.dim(dr)
            if matrix.rows != rows or matrix.cols != cols:
                raise ValueError(
                    f"block ({dl},{dr}) has shape {matrix.rows}x{matrix.cols}, expected {rows}x{cols}"
                )
            if not matrix.is_zero():
                canonical[(dl, dr)] = matrix
        self.left = left
        self.right = right
        self.blocks = canonical

    @classmethod
    def zero(cls, left, right) -> "TensorElement":
        return cls(left, right, {})

    def __bool__(self) -> bool:
        return bool(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.left == other.left and self.right == other.right and self.blocks == other.blocks

    def _require_same(self, other: "TensorElement") -> None:
        if self.left != other.left or self.right != other.right:
            raise AlgebraMismatch("tensor operands live in different products")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._require_same(other)
        merged = dict(self.blocks)
        for key, matrix in other.blocks.items():
            merged[key] = merged[key] + matrix if key in merged else matrix
        return TensorElement(self.left, self.right, merged)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._require_same(other)
        merged = dict(self.blocks)
        for key, matrix in other.blocks.items():
            merged[key] = merged[key] - matrix if key in merged else -matrix
        return TensorElement(self.left, self.right, merged)

    def scale(self, c) -> "TensorElement":
        return TensorElement(
            self.left, self.right, {key: m.scale(c) for key, m in self.blocks.items()}
        )

    def sorted_blocks(self) -> list[tuple[tuple[int, int], ExactMatrix]]:
        return sorted(self.blocks.items())

    def map_left(self, fn, new_left) -> "TensorElement":
        """Apply a linear map (given on basis monomials) to the left factors."""
        acc: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {}
        for (dl, dr), matrix in self.blocks.items():
            for p, mono in enumerate(self.left.basis(dl)):
                image = fn(mono)
                if not image:
                    continue
                for m2, c2 in image.poly.terms.items():
                    d2 = 2 * m2[0] + m2[1]
                    i2 = new_left.basis_index(d2)[m2]
                    bucket = acc.setdefault((d2, dr), {})
                    for q in range(matrix.cols):
                        c = matrix[p, q]
                        if c:
                            bucket[(i2, q)] = bucket.get((i2, q), Fraction(0)) + c2 * c
        return TensorElement(new_left, self.right, _freeze(acc, new_left, self.right))

    def map_right(self, fn, new_right) -> "TensorElement":
        """Apply a linear map (given on basis monomials) to the right factors."""
        acc: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {}
        for (dl, dr), matrix in self.blocks.items():
            for q, mono in enumerate(self.right.basis(dr)):
                image = fn(mono)
                if not image:
                    continue
                for m2, c2 in image.poly.terms.items():
                    d2 = 2 * m2[0] + m2[1]
                    j2 = new_right.basis_index(d2)[m2]
                    bucket = acc.setdefault((dl, d2), {})
                    for p in range(matrix.rows):
                        c = matrix[p, q]
                        if c:
                            bucket[(p, j2)] = bucket.get((p, j2), Fraction(0)) + c2 * c
        return TensorElement(self.left, new_right, _freeze(acc, self.left, new_right))

    def multiply_left(self, phi: AlgebraElement) -> "TensorElement":
        if phi.algebra != self.left:
            raise AlgebraMismatch("factor does not live in the left algebra")
        return self.map_left(
            lambda mono: phi * self.left.normal_form(GradedPoly.monomial(*mono)), self.left
        )

    def multiply_right(self, phi: AlgebraElement) -> "TensorElement":
        if phi.algebra != self.right:
            raise AlgebraMismatch("factor does not live in the right algebra")
        return self.map_right(
            lambda mono: phi * self.right.normal_form(GradedPoly.monomial(*mono)), self.right
        )


def _freeze(acc, left, right) -> dict[tuple[int, int], ExactMatrix]:
    blocks = {}
    for (dl, dr), entries in acc.items():
        rows = left.dim(dl)
        cols = right.dim(dr)
        data = [[entries.get((i, j), Fraction(0)) for j in range(cols)] for i in range(rows)]
        blocks[(dl, dr)] = ExactMatrix(data)
    return blocks


def kinematic_unit(n: int) -> TensorElement:
    """The unit kinematic tensor: one kinematic matrix per bidegree (i, 2n-i)."""
    alg = build_algebra(n)
    blocks = {}
    for i in range(2 * n + 1):
        blocks[(i, 2 * n - i)] = kinematic_matrix(n, min(i // 2, (2 * n - i) // 2))
    return TensorElement(alg, alg, blocks)


def kinematic_of(n: int, phi: AlgebraElement) -> TensorElement:
    """Kinematic tensor of an element: the unit tensor multiplied by it.

    The factor may be absorbed on either side; both placements are computed
    and must agree exactly.
    """
    alg = build_algebra(n)
    if phi.algebra != alg:
        raise AlgebraMismatch(f"element lives in {phi.algebra!r}, expected {alg!r}")
    unit = kinematic_unit(n)
    left = unit.multiply_left(phi)
    right = unit.multiply_right(phi)
    if left != right:
        raise InternalInconsistency(f"kinematic tensor of {phi} differs between factor placements")
    return left


def so_kinematic(n_real: int, k: int) -> TensorElement:
    """Kinematic tensor of t^k in the orthogonal model: all-ones over i+j = n+k."""
    alg = SOAlgebra(n_real)
    if not 0 <= k <= n_real:
        raise DegreeOutOfRange(f"power must satisfy 0 <= k <= {n_real}, got {k}")
    blocks = {
        (i, n_real + k - i): ExactMatrix([[1]]) for i in range(k, n_real + 1)
    }
    return TensorElement(alg, alg, blocks)


def so_kinematic_of(n_real: int, phi: AlgebraElement) -> TensorElement:
    """Kinematic tensor of an orthogonal-model element, by linearity in t-powers."""
    alg = SOAlgebra(n_real)
    if phi.algebra != alg:
        raise AlgebraMismatch(f"element lives in {phi.algebra!r}, expected {alg!r}")
    out = TensorElement.zero(alg, alg)
    for (_, q), c in phi.poly.terms.items():
        out = out + so_kinematic(n_real, q).scale(c)
    return out


def annihilator_congruence_holds(n: int, k: int) -> bool:
    """Whether the kinematic tensor of t^k matches the all-ones t-power tensor
    modulo (annihilator) x (annihilator).

    Subtracts sum_{i+j = 2n+k} t^i x t^j from the kinematic tensor of t^k and
    solves every remaining block against the products of annihilator basis
    vectors on both sides.
    """
    alg = build_algebra(n)
    if not 0 <= k <= 2 * n:
        raise DegreeOutOfRange(f"power must satisfy 0 <= k <= {2 * n}, got {k}")
    tensor = kinematic_of(n, alg.normal_form(GradedPoly.monomial(0, k)))
    residual: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {
        key: {
            (i, j): matrix[i, j]
            for i in range(matrix.rows)
            for j in range(matrix.cols)
            if matrix[i, j]
        }
        for key, matrix in tensor.blocks.items()
    }
    for i in range(max(0, k), 2 * n + 1):
        j = 2 * n + k - i
        if 0 <= j <= 2 * n:
            bucket = residual.setdefault((i, j), {})
            bucket[(0, 0)] = bucket.get((0, 0), Fraction(0)) - 1

    vectors: dict[int, list[list[Fraction]]] = {}

    def annihilator_vectors(d: int) -> list[list[Fraction]]:
        if d not in vectors:
            basis = alg.basis(d)
            vectors[d] = [
                [element.poly.coefficient(*mono) for mono in basis]
                for element in annihilator_basis(alg, d)
            ]
        return vectors[d]

    for (dl, dr), entries in residual.items():
        if not any(entries.values()):
            continue
        rows = alg.dim(dl)
        cols = alg.dim(dr)
        target = [entries.get((i, j), Fraction(0)) for i in range(rows) for j in range(cols)]
        left_vecs = annihilator_vectors(dl)
        right_vecs = annihilator_vectors(dr)
        if not left_vecs or not right_vecs:
            return False
        generators = [[u * v for u in uvec for v in vvec] for uvec in left_vecs for vvec in right_vecs]
        try:
            solve_in_span(generators, target)
        except NotInSpan:
            return False
    return True


def step_up_identity_holds(n: int) -> bool:
    """Whether (n+1) (id x restrict) unit(n+1) == 2(2n+1) (s-step x id) unit(n).

    Both sides are compared exactly as tensors over (dimension n+1) x
    (dimension n); degrees above 2n vanish under restriction.
    """
    small = build_algebra(n)
    big = build_algebra(n + 1)
    lhs = kinematic_unit(n + 1).map_right(
        lambda mono: small.normal_form(GradedPoly.monomial(*mono)), small
    ).scale(n + 1)
    rhs = kinematic_unit(n).map_left(
        lambda mono: big.normal_form(S * GradedPoly.monomial(*mono)), big
    ).scale(2 * (2 * n + 1))
    return lhs == rhs
