"""Singular cubes over inflated unit domains, and integer chains of them.

The model k-cube of type theta with inflation r is the rectangle
``[0, b]^k`` where ``b = 1 + r*eps`` for the type-1 order and
``b = 1 - r*eps`` for type-2; ``r = 0`` recovers the classical unit
cube.  A singular cube is a symbolic map from that domain into dual
n-space; faces substitute an endpoint for one coordinate, and the
boundary is the usual signed sum of faces.

Chains are finite integer combinations of cubes sharing one
``(theta, r, k, n)`` signature.  Normalization merges terms whose maps
agree on a fixed pseudo-random sample of the domain — that is what lets
the geometric cancellations in a double boundary actually cancel, since
composed substitutions need not be syntactically identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .darboux import ThetaRectangle, make_interval
from .dual import Dual, Theta, ZERO
from .expr import Expr, ExprMap, Var, compose

_FINGERPRINT_SEED = 0xC0BE
_FINGERPRINT_POINTS = 16
MERGE_TOL = 1e-9


@dataclass(frozen=True)
class CubeDomain:
    """The model domain: k axes of [0, 1 + (sign of theta)*r*eps]."""

    theta: Theta
    r: float
    k: int

    def __post_init__(self):
        object.__setattr__(self, "theta", Theta(self.theta))
        object.__setattr__(self, "r", float(self.r))
        if self.r < 0:
            raise ValueError("inflation must be nonnegative")
        if self.k < 0:
            raise ValueError("dimension must be nonnegative")

    @property
    def b(self) -> Dual:
        return Dual(1.0, self.theta.sign * self.r)

    def rectangle(self) -> ThetaRectangle:
        if self.k == 0:
            raise ValueError("a 0-dimensional domain has no rectangle")
        side = make_interval(self.theta, ZERO, self.b)
        return ThetaRectangle(self.theta, (side,) * self.k)

    def sample_points(self) -> tuple[tuple[Dual, ...], ...]:
        """Fixed pseudo-random points of the domain, for map comparison."""
        if self.k == 0:
            return ((),)
        rng = random.Random(_FINGERPRINT_SEED ^ (self.k * 1009))
        ze_span = self.b.ze
        return tuple(
            tuple(Dual(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0) * ze_span)
                  for _ in range(self.k))
            for _ in range(_FINGERPRINT_POINTS))


@dataclass(eq=False)
class SingularCube:
    """A symbolic map from the model domain into dual n-space."""

    domain: CubeDomain
    mapping: ExprMap

    def __post_init__(self):
        if self.mapping.arity != self.domain.k:
            raise ValueError(
                f"map takes {self.mapping.arity} variables but the domain "
                f"has dimension {self.domain.k}")

    @property
    def theta(self) -> Theta:
        return self.domain.theta

    @property
    def r(self) -> float:
        return self.domain.r

    @property
    def k(self) -> int:
        return self.domain.k

    @property
    def n(self) -> int:
        return self.mapping.dim_out

    def signature(self) -> tuple:
        return (self.theta, self.r, self.k, self.n)


def standard_cube(theta: Theta, r: float, k: int) -> SingularCube:
    """The identity cube (for k = 0: the origin of the dual line)."""
    domain = CubeDomain(Theta(theta), r, k)
    if k == 0:
        mapping = ExprMap((Expr.constant(0.0, 0),))
    else:
        mapping = ExprMap.identity(k)
    return SingularCube(domain, mapping)


def face(cube: SingularCube, axis: int, side: int) -> SingularCube:
    """Restrict to one face: `axis` is 1-based, `side` is 0 or 1.

    Coordinate `axis` is pinned to 0 or to the inflated endpoint b, and
    the remaining coordinates close ranks, so the face is a cube of one
    dimension less over the same (theta, r).
    """
    k = cube.k
    if k == 0:
        raise ValueError("a 0-dimensional cube has no faces")
    if not 1 <= axis <= k:
        raise ValueError(f"axis must be in 1..{k}")
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    pinned = ZERO if side == 0 else cube.domain.b
    repl = []
    for i in range(k):
        if i < axis - 1:
            repl.append(Expr(Var(i), k - 1))
        elif i == axis - 1:
            repl.append(Expr.constant(pinned, k - 1))
        else:
            repl.append(Expr(Var(i - 1), k - 1))
    mapping = ExprMap(tuple(compose(c, repl) for c in cube.mapping.components))
    return SingularCube(CubeDomain(cube.theta, cube.r, k - 1), mapping)


@dataclass(eq=False)
class Chain:
    """Integer combination of cubes sharing one (theta, r, k, n) signature."""

    theta: Theta
    r: float
    k: int
    n: int
    terms: tuple

    def __post_init__(self):
        self.theta = Theta(self.theta)
        self.r = float(self.r)
        kept = []
        for weight, cube in tuple(self.terms):
            if not isinstance(weight, int) or isinstance(weight, bool):
                raise TypeError("chain weights must be integers")
            if cube.signature() != (self.theta, self.r, self.k, self.n):
                raise ValueError(
                    f"cube signature {cube.signature()} does not match "
                    f"chain signature {(self.theta, self.r, self.k, self.n)}")
            if weight != 0:
                kept.append((weight, cube))
        self.terms = tuple(kept)

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, factor: int) -> "Chain":
        if not isinstance(factor, int) or isinstance(factor, bool):
            raise TypeError("chain weights must be integers")
        return Chain(self.theta, self.r, self.k, self.n,
                     tuple((factor * w, c) for w, c in self.terms))

    def __add__(self, other: "Chain") -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        if (self.theta, self.r, self.k, self.n) != \
                (other.theta, other.r, other.k, other.n):
            raise ValueError("chains must share their signature")
        return Chain(self.theta, self.r, self.k, self.n,
                     self.terms + other.terms)

    def __neg__(self) -> "Chain":
        return self.scale(-1)

    def __sub__(self, other: "Chain") -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        return self + (-other)


def chain_of(cube: SingularCube, weight: int = 1) -> Chain:
    return Chain(cube.theta, cube.r, cube.k, cube.n, ((weight, cube),))


def boundary(obj) -> Chain:
    """Signed sum of faces, with weight (-1)^(axis + side)."""
    if isinstance(obj, SingularCube):
        if obj.k == 0:
            raise ValueError("a 0-dimensional cube has no boundary")
        terms = []
        for axis in range(1, obj.k + 1):
            for side in (0, 1):
                weight = -1 if (axis + side) % 2 else 1
                terms.append((weight, face(obj, axis, side)))
        return Chain(obj.theta, obj.r, obj.k - 1, obj.n, tuple(terms))
    if isinstance(obj, Chain):
        if obj.k == 0:
            raise ValueError("0-dimensional chains have no boundary")
        total = Chain(obj.theta, obj.r, obj.k - 1, obj.n, ())
        for weight, cube in obj.terms:
            total = total + boundary(cube).scale(weight)
        return total
    raise TypeError("expected a cube or a chain")


def cubes_equal(left: SingularCube, right: SingularCube,
                tol: float = MERGE_TOL) -> bool:
    """Same signature and maps agreeing on the domain's sample points."""
    if left.signature() != right.signature():
        return False
    for point in left.domain.sample_points():
        a = left.mapping.eval(point)
        b = right.mapping.eval(point)
        for x, y in zip(a, b):
            if abs(x.re - y.re) > tol or abs(x.ze - y.ze) > tol:
                return False
    return True


def chain_normalize(chain: Chain, tol: float = MERGE_TOL) -> Chain:
    """Merge terms with pointwise-equal cubes and drop zero weights."""
    groups: list[list] = []
    for weight, cube in chain.terms:
        for entry in groups:
            if cubes_equal(entry[1], cube, tol):
                entry[0] += weight
                break
        else:
            groups.append([weight, cube])
    return Chain(chain.theta, chain.r, chain.k, chain.n,
                 tuple((w, c) for w, c in groups if w != 0))
