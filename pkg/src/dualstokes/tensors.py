"""Multilinear and alternating tensors over dual n-space.

A general k-tensor is a dual-linear combination of elementary products
``e^{i1} x ... x e^{ik}`` indexed by arbitrary index tuples; an
alternating k-tensor is a combination of determinant functionals
``eps^I`` indexed by strictly ascending tuples ``I``.  Evaluation,
antisymmetrization, and the wedge product all reduce to permutation
bookkeeping, which stays exact because every sign is computed as an
integer.

The permutation expansions are factorial in k, so degrees above
``MAX_PERMUTATION_DEGREE`` are rejected outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial

from .dual import Dual, DualVec, ONE, ZERO, as_dual

MAX_PERMUTATION_DEGREE = 8


def lambda_dim(n: int, k: int) -> int:
    """Dimension of the alternating k-tensors on n-space (0 when k > n)."""
    if n < 0 or k < 0:
        raise ValueError("dimensions must be nonnegative")
    return comb(n, k)


def ascending_tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All strictly ascending k-tuples drawn from 0..n-1."""
    return tuple(itertools.combinations(range(n), k))


def perm_sign(perm) -> int:
    """Sign of a permutation given as a rearrangement of 0..k-1."""
    perm = tuple(perm)
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign that sorts the concatenation of two ascending tuples.

    Returns 0 when the tuples share an index (the wedge term dies).
    """
    if set(left) & set(right):
        return 0
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def _check_degree(k: int):
    if k > MAX_PERMUTATION_DEGREE:
        raise ValueError(
            f"degree {k} exceeds the permutation-expansion cap "
            f"{MAX_PERMUTATION_DEGREE}")


def _coerce_vectors(n: int, k: int, vectors) -> tuple[DualVec, ...]:
    vecs = tuple(v if isinstance(v, DualVec) else DualVec(v) for v in vectors)
    if len(vecs) != k:
        raise ValueError(f"expected {k} vectors, got {len(vecs)}")
    if any(len(v) != n for v in vecs):
        raise ValueError(f"all vectors must have {n} components")
    return vecs


def _clean_coeffs(n: int, k: int, coeffs, *, ascending: bool) -> dict:
    out = {}
    for index, raw in dict(coeffs).items():
        index = tuple(index)
        if len(index) != k:
            raise ValueError(f"index {index} does not have length {k}")
        if any(not (0 <= i < n) for i in index):
            raise ValueError(f"index {index} out of range for n={n}")
        if ascending and any(a >= b for a, b in zip(index, index[1:])):
            raise ValueError(f"index {index} is not strictly ascending")
        value = as_dual(raw)
        if not value.is_zero():
            out[index] = value
    return out


@dataclass(eq=False)
class GenTensor:
    """General k-linear tensor: coefficients over full index tuples."""

    n: int
    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("dimensions must be nonnegative")
        self.coeffs = _clean_coeffs(self.n, self.k, self.coeffs,
                                    ascending=False)

    @staticmethod
    def basis(n: int, index) -> "GenTensor":
        index = tuple(index)
        return GenTensor(n, len(index), {index: ONE})

    def evaluate(self, vectors) -> Dual:
        vecs = _coerce_vectors(self.n, self.k, vectors)
        total = ZERO
        for index, coeff in self.coeffs.items():
            term = coeff
            for slot, i in enumerate(index):
                term = term * vecs[slot][i]
            total = total + term
        return total

    def scale(self, scalar) -> "GenTensor":
        s = as_dual(scalar)
        return GenTensor(self.n, self.k,
                         {i: s * c for i, c in self.coeffs.items()})

    def __add__(self, other: "GenTensor") -> "GenTensor":
        if not isinstance(other, GenTensor):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("tensors must share dimension and degree")
        merged = dict(self.coeffs)
        for index, coeff in other.coeffs.items():
            merged[index] = merged.get(index, ZERO) + coeff
        return GenTensor(self.n, self.k, merged)

    def __neg__(self) -> "GenTensor":
        return self.scale(-1.0)

    def __sub__(self, other: "GenTensor") -> "GenTensor":
        if not isinstance(other, GenTensor):
            return NotImplemented
        return self + (-other)


def tensor_product(left: GenTensor, right: GenTensor) -> GenTensor:
    """Concatenate index tuples; degrees add."""
    if left.n != right.n:
        raise ValueError("tensors must live over the same space")
    coeffs = {}
    for li, lc in left.coeffs.items():
        for ri, rc in right.coeffs.items():
            index = li + ri
            value = lc * rc
            if index in coeffs:
                value = coeffs[index] + value
            coeffs[index] = value
    return GenTensor(left.n, left.k + right.k, coeffs)


@dataclass(eq=False)
class AltTensor:
    """Alternating k-tensor: coefficients over strictly ascending tuples."""

    n: int
    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("dimensions must be nonnegative")
        self.coeffs = _clean_coeffs(self.n, self.k, self.coeffs,
                                    ascending=True)

    @staticmethod
    def basis(n: int, index) -> "AltTensor":
        index = tuple(index)
        return AltTensor(n, len(index), {index: ONE})

    def evaluate(self, vectors) -> Dual:
        """Sum of coefficient times determinant of the selected components."""
        _check_degree(self.k)
        vecs = _coerce_vectors(self.n, self.k, vectors)
        total = ZERO
        for index, coeff in self.coeffs.items():
            det = ZERO
            for perm in itertools.permutations(range(self.k)):
                term = ONE
                for slot in range(self.k):
                    term = term * vecs[slot][index[perm[slot]]]
                det = det + term * float(perm_sign(perm))
            total = total + coeff * det
        return total

    def as_general(self) -> GenTensor:
        """Expand each determinant functional into signed elementary products."""
        _check_degree(self.k)
        coeffs = {}
        for index, coeff in self.coeffs.items():
            for perm in itertools.permutations(range(self.k)):
                full = tuple(index[perm[slot]] for slot in range(self.k))
                value = coeff * float(perm_sign(perm))
                if full in coeffs:
                    value = coeffs[full] + value
                coeffs[full] = value
        return GenTensor(self.n, self.k, coeffs)

    def scale(self, scalar) -> "AltTensor":
        s = as_dual(scalar)
        return AltTensor(self.n, self.k,
                         {i: s * c for i, c in self.coeffs.items()})

    def __add__(self, other: "AltTensor") -> "AltTensor":
        if not isinstance(other, AltTensor):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("tensors must share dimension and degree")
        merged = dict(self.coeffs)
        for index, coeff in other.coeffs.items():
            merged[index] = merged.get(index, ZERO) + coeff
        return AltTensor(self.n, self.k, merged)

    def __neg__(self) -> "AltTensor":
        return self.scale(-1.0)

    def __sub__(self, other: "AltTensor") -> "AltTensor":
        if not isinstance(other, AltTensor):
            return NotImplemented
        return self + (-other)


def _alt_coeffs(t: GenTensor) -> dict:
    """Ascending-index evaluations of the unnormalized antisymmetrization."""
    _check_degree(t.k)
    out = {}
    for index in ascending_tuples(t.n, t.k):
        acc = ZERO
        for perm in itertools.permutations(range(t.k)):
            permuted = tuple(index[perm[slot]] for slot in range(t.k))
            coeff = t.coeffs.get(permuted)
            if coeff is not None:
                acc = acc + coeff * float(perm_sign(perm))
        if not acc.is_zero():
            out[index] = acc
    return out


def alt_sum(t: GenTensor) -> AltTensor:
    """Signed sum over all argument permutations (k! times the projection)."""
    return AltTensor(t.n, t.k, _alt_coeffs(t))


def alt(t: GenTensor) -> AltTensor:
    """Projection onto alternating tensors (signed average over permutations)."""
    fact = factorial(t.k)
    # divide componentwise: exact whenever the sum is a multiple of k!
    return AltTensor(t.n, t.k,
                     {i: Dual(c.re / fact, c.ze / fact)
                      for i, c in _alt_coeffs(t).items()})


def wedge(left: AltTensor, right: AltTensor) -> AltTensor:
    """Determinant-convention product: basis tuples merge with a sort sign."""
    if left.n != right.n:
        raise ValueError("tensors must live over the same space")
    coeffs = {}
    for li, lc in left.coeffs.items():
        for ri, rc in right.coeffs.items():
            sign = merge_sign(li, ri)
            if sign == 0:
                continue
            index = tuple(sorted(li + ri))
            value = (lc * rc) * float(sign)
            if index in coeffs:
                value = coeffs[index] + value
            coeffs[index] = value
    return AltTensor(left.n, left.k + right.k, coeffs)


def tensors_equal(left, right, tol: float = 1e-9) -> bool:
    """Coefficientwise comparison for two tensors of the same kind."""
    if type(left) is not type(right):
        return False
    if (left.n, left.k) != (right.n, right.k):
        return False
    for index in left.coeffs.keys() | right.coeffs.keys():
        a = left.coeffs.get(index, ZERO)
        b = right.coeffs.get(index, ZERO)
        if abs(a.re - b.re) > tol or abs(a.ze - b.ze) > tol:
            return False
    return True
