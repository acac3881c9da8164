"""Symbolic cross-check of the descent lattice through monomial algebra.

Discrete-Fourier coordinates y_0, ..., y_(p-1) diagonalize the p-cycle:
the cycle multiplies y_i by the i-th power of a fixed p-th root of unity,
and the Galois generator (raising the root of unity to a primitive-root
power t) permutes indices by i -> i*t mod p.  No root of unity is ever
represented numerically; the cycle action survives only as an additive
character weight mod p, which is all the identities need.

A Laurent monomial in the y's is a length-p integer exponent vector.  The
weight-zero monomials z_1, ..., z_(p-1) built from consecutive powers of
t form a multiplicative basis of the invariant coordinates (modulo y_0,
which never appears).  Writing the Galois image of each z in that basis
is an exact integer linear solve, and the resulting matrix must coincide
with the lattice built directly in the noether module; `verify --p N` on
the command line and the test suite compare the two routes entry by
entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intmat import IntMatrix, solve_exact
from .noether import primitive_root
from .numfield import is_prime


@dataclass(frozen=True)
class Monomial:
    """Laurent monomial in p Fourier coordinates, as an exponent vector."""

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if len(self.exponents) != self.modulus:
            raise ValueError("exponent vector must have one slot per residue")

    def __mul__(self, other: Monomial) -> Monomial:
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        return Monomial(self.modulus,
                        tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.modulus, tuple(k * e for e in self.exponents))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 0:
                continue
            parts.append(f"y{i}" if e == 1 else f"y{i}^{e}")
        return "*".join(parts) if parts else "1"


def coordinate(p: int, i: int, exponent: int = 1) -> Monomial:
    """The monomial y_i^exponent."""
    exps = [0] * p
    exps[i % p] = exponent
    return Monomial(p, tuple(exps))


def shift_weight(m: Monomial) -> int:
    """Character weight mod p picked up under the basic p-cycle.

    The cycle multiplies y_i by the i-th power of the root of unity, so a
    monomial scales by the power sum(i * e_i) mod p; weight zero means the
    monomial is invariant.
    """
    return sum(i * e for i, e in enumerate(m.exponents)) % m.modulus


def rescale_indices(m: Monomial, t: int) -> Monomial:
    """Galois image: move the exponent of y_i to y_(i*t mod p).

    t must be a unit mod p; y_0 stays in place.
    """
    p = m.modulus
    if math.gcd(t, p) != 1:
        raise ValueError(f"{t} is not a unit mod {p}")
    out = [0] * p
    for i, e in enumerate(m.exponents):
        out[i * t % p] += e
    return Monomial(p, tuple(out))


@dataclass(frozen=True)
class InvariantBasis:
    """The weight-zero monomials z_1 ... z_(p-1) with their primitive root.

    z_i = y_(t^i) * y_(t^(i-1))^(-t) for i < p - 1, and z_(p-1) = y_1^p.
    Every entry has weight zero and never involves y_0; both facts are
    enforced on construction.
    """

    p: int
    t: int
    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for m in self.monomials:
            if shift_weight(m) != 0:
                raise ValueError(f"basis monomial {m} is not invariant")
            if m.exponents[0] != 0:
                raise ValueError(f"basis monomial {m} involves the free coordinate y0")


def invariant_basis(p: int) -> InvariantBasis:
    """Multiplicative basis of the invariant coordinates for the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    t = primitive_root(p)
    if p == 2:
        return InvariantBasis(2, 1, (coordinate(2, 1, 2),))
    monomials = []
    for i in range(1, p - 1):
        m = coordinate(p, pow(t, i, p)) * coordinate(p, pow(t, i - 1, p), -t)
        monomials.append(m)
    monomials.append(coordinate(p, 1, p))
    return InvariantBasis(p, t, tuple(monomials))


def galois_images(basis: InvariantBasis) -> tuple[Monomial, ...]:
    """The Galois image of every basis monomial."""
    return tuple(rescale_indices(m, basis.t) for m in basis.monomials)


def galois_action_matrix(p: int) -> IntMatrix:
    """Extract the Galois action on the invariant basis as an integer matrix.

    Column i holds the exact exponents writing the image of z_i as a
    product of powers of the z's.  The solve is exact and unique; an image
    outside the basis span would be a genuine inconsistency in the
    construction and raises rather than being coerced.
    """
    basis = invariant_basis(p)
    if p == 2:
        return IntMatrix.identity(1)
    span = IntMatrix.from_columns([m.exponents[1:] for m in basis.monomials],
                                  rows=p - 1)
    columns = []
    for m in basis.monomials:
        image = rescale_indices(m, basis.t)
        if image.exponents[0] != 0:
            raise ArithmeticError(f"image {image} involves the free coordinate y0")
        target = IntMatrix.from_columns([image.exponents[1:]], rows=p - 1)
        try:
            coeffs = solve_exact(span, target)
        except ValueError as exc:
            raise ArithmeticError(
                f"image {image} is not an integer word in the basis: {exc}") from exc
        columns.append(coeffs.column(0))
    return IntMatrix.from_columns(columns, rows=p - 1)
