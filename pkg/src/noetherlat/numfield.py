"""Integer polynomials, discriminants, and ramification of rational primes.

The ramification test is two-stage.  If p does not divide the
discriminant of the defining polynomial the prime is unramified outright.
Otherwise Dedekind's criterion decides whether the equation order is
maximal at p; when it is, the factorization of the polynomial mod p
mirrors the splitting of p, and a repeated factor means ramification.
When maximality at p cannot be certified the verdict is Undecided: the
polynomial discriminant may differ from the field discriminant exactly at
such primes, and we refuse to guess.

Quadratic fields get a second, independent route through the classical
splitting law (Legendre symbol, and the residue of d mod 8 at p = 2),
which also supplies the ramification index used by the Eisenstein check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .intmat import IntMatrix, determinant

UNRAMIFIED = "Unramified"
RAMIFIED = "Ramified"
UNDECIDED = "Undecided"

SPLIT = "Split"
INERT = "Inert"


# ----------------------------------------------------------------------
# primes


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all n below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| by trial division (desk scale)."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1 if d == 2 else 2
    return True


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for odd prime p: 1, -1, or 0 when p divides a."""
    a %= p
    if a == 0:
        return 0
    v = pow(a, (p - 1) // 2, p)
    return 1 if v == 1 else -1


# ----------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree order.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use from_coeffs)")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be exact integers")

    @staticmethod
    def from_coeffs(seq: Sequence[int]) -> IntPolynomial:
        coeffs = list(seq)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return IntPolynomial(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial.from_coeffs(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial.from_coeffs([k * c for c in self.coeffs])

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial.from_coeffs([i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                var = "X" if i == 1 else f"X^{i}"
                term = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


X = IntPolynomial((0, 1))


@dataclass(frozen=True)
class NumberFieldSpec:
    """A number field presented as Q[X]/(f) for a monic integer polynomial."""

    minpoly: IntPolynomial

    def __post_init__(self) -> None:
        if self.minpoly.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if not self.minpoly.is_monic:
            raise ValueError("defining polynomial must be monic")

    @property
    def degree(self) -> int:
        return self.minpoly.degree


# ----------------------------------------------------------------------
# cyclotomic polynomials at prime index


def cyclotomic_phi(p: int) -> IntPolynomial:
    """1 + X + ... + X^(p-1) for prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return IntPolynomial((1,) * p)


def shifted_phi(p: int) -> IntPolynomial:
    """The prime-index cyclotomic polynomial evaluated at X + 1.

    Expanding ((X+1)^p - 1) / X gives coefficient C(p, k+1) on X^k, so the
    constant term is exactly p and every other non-leading coefficient is
    divisible by p.  That pattern is what makes the Eisenstein test at p
    applicable after the shift.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return IntPolynomial(tuple(math.comb(p, k + 1) for k in range(p)))


# ----------------------------------------------------------------------
# resultants and discriminants


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant via the Sylvester matrix and exact Bareiss elimination."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial")
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return 1
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return determinant(IntMatrix.from_rows(rows, cols=size))


def discriminant(f: IntPolynomial) -> int:
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f), exact."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    lc = f.coeffs[-1]
    if res % lc != 0:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return sign * (res // lc)


# ----------------------------------------------------------------------
# arithmetic in F_p[X]; polynomials are plain lists, ascending, reduced


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdeg(a: list[int]) -> int:
    return len(a) - 1


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pmonic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], p - 2, p) if a[-1] != 1 else 1
    return [c * inv % p for c in a]


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], p - 2, p)
    rem = list(a)
    quo = [0] * max(0, len(a) - len(b) + 1)
    while rem and len(rem) >= len(b):
        k = len(rem) - len(b)
        c = rem[-1] * inv % p
        quo[k] = c
        for i, bc in enumerate(b):
            rem[k + i] = (rem[k + i] - c * bc) % p
        _ptrim(rem)
    return _ptrim(quo), rem


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else []


def _ppowmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _pderiv(a: list[int], p: int) -> list[int]:
    return _ptrim([i * c % p for i, c in enumerate(a)][1:])


def _pth_root(a: list[int], p: int) -> list[int]:
    # a has nonzero coefficients only in degrees divisible by p, and the
    # Frobenius is the identity on F_p, so the root just reindexes
    return _ptrim([a[i] for i in range(0, len(a), p)])


def _squarefree_parts(f: list[int], p: int, scale: int, out: list[tuple[list[int], int]]) -> None:
    fp = _pderiv(f, p)
    if not fp:
        _squarefree_parts(_pth_root(f, p), p, scale * p, out)
        return
    c = _pgcd(f, fp, p)
    w = _pdivmod(f, c, p)[0]
    i = 1
    while _pdeg(w) > 0:
        y = _pgcd(w, c, p)
        z = _pdivmod(w, y, p)[0]
        if _pdeg(z) > 0:
            out.append((z, i * scale))
        w = y
        c = _pdivmod(c, y, p)[0]
        i += 1
    if _pdeg(c) > 0:
        _squarefree_parts(_pth_root(c, p), p, scale * p, out)


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    # f squarefree monic; returns (product of irreducibles of degree d, d)
    out = []
    h = [0, 1]
    d = 0
    rest = f
    while _pdeg(rest) >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, rest, p)
        g = _pgcd(_psub(h, [0, 1], p), rest, p)
        if _pdeg(g) > 0:
            out.append((g, d))
            rest = _pdivmod(rest, g, p)[0]
            h = _pdivmod(h, rest, p)[1] if _pdeg(rest) > 0 else h
    if _pdeg(rest) > 0:
        out.append((rest, _pdeg(rest)))
    return out


def _monic_polys(degree: int, p: int) -> Iterator[list[int]]:
    # all monic polynomials of the given degree, lexicographic in the
    # low-order coefficients
    def rec(i: int, acc: list[int]) -> Iterator[list[int]]:
        if i == degree:
            yield acc + [1]
            return
        for c in range(p):
            yield from rec(i + 1, acc + [c])

    yield from rec(0, [])


def _equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    # f monic squarefree, all irreducible factors of degree d
    k = _pdeg(f)
    if k == d:
        return [f]
    if p <= 3:
        # tiny fields make the probabilistic split degenerate; every monic
        # degree-d divisor of f is irreducible here, so scan them all
        out = []
        rest = f
        for cand in _monic_polys(d, p):
            if _pdeg(rest) == 0:
                break
            q, r = _pdivmod(rest, cand, p)
            if not r:
                out.append(cand)
                rest = q
        assert _pdeg(rest) == 0
        return out
    exp = (p ** d - 1) // 2
    while True:
        a = _ptrim([rng.randrange(p) for _ in range(k)])
        if _pdeg(a) < 1:
            continue
        g = _pgcd(a, f, p)
        if 0 < _pdeg(g) < k:
            break
        b = _psub(_ppowmod(a, exp, f, p), [1], p)
        g = _pgcd(b, f, p)
        if 0 < _pdeg(g) < k:
            break
    other = _pdivmod(f, g, p)[0]
    return _equal_degree(g, d, p, rng) + _equal_degree(other, d, p, rng)


def factor_mod_p(f: IntPolynomial, p: int, seed: int = 0) -> list[tuple[IntPolynomial, int]]:
    """Complete monic factorization of f over the field with p elements.

    Returns (irreducible, multiplicity) pairs sorted by degree and then by
    coefficient tuple, so the output does not depend on the seed; the seed
    only drives the internal equal-degree splitting.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    reduced = _ptrim([c % p for c in f.coeffs])
    if not reduced:
        raise ValueError("polynomial vanishes mod p")
    if _pdeg(reduced) == 0:
        return []
    monic = _pmonic(reduced, p)
    rng = random.Random(seed)
    parts: list[tuple[list[int], int]] = []
    _squarefree_parts(monic, p, 1, parts)
    out = []
    for part, mult in parts:
        for prod, d in _distinct_degree(part, p):
            for irr in _equal_degree(prod, d, p, rng):
                out.append((IntPolynomial.from_coeffs(irr), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


# ----------------------------------------------------------------------
# ramification


@dataclass(frozen=True)
class RamificationVerdict:
    """Outcome of the ramification test, with the data that justified it.

    factorization lists (coefficients, multiplicity) of the mod-p factors
    when they were computed; p_maximal records the Dedekind test result
    (None when the test was not needed).
    """

    kind: str
    p: int
    discriminant: int
    factorization: tuple[tuple[tuple[int, ...], int], ...] | None
    p_maximal: bool | None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "discriminant": self.discriminant,
            "factorization": None if self.factorization is None
            else [[list(c), m] for c, m in self.factorization],
            "p_maximal": self.p_maximal,
        }

    @staticmethod
    def from_json(d: dict) -> RamificationVerdict:
        fac = d["factorization"]
        return RamificationVerdict(
            kind=d["kind"],
            p=d["p"],
            discriminant=d["discriminant"],
            factorization=None if fac is None
            else tuple((tuple(c), m) for c, m in fac),
            p_maximal=d["p_maximal"],
        )


def dedekind_ramification(field: NumberFieldSpec, p: int, seed: int = 0) -> RamificationVerdict:
    """Decide whether p ramifies in the field, or report Undecided.

    p not dividing disc(f) settles it immediately.  Otherwise Dedekind's
    criterion checks whether Z[theta] is maximal at p: with f = prod g_i^e_i
    mod p, lift g = prod g_i and h = f/g, set F = (g*h - f)/p; maximality
    at p holds iff gcd(F, g, h) = 1 mod p.  When it holds, ramification is
    equivalent to some e_i > 1; when it fails we refuse to guess, because
    p may divide the index without dividing the field discriminant.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = field.minpoly
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("defining polynomial has a repeated factor")
    if disc % p != 0:
        return RamificationVerdict(UNRAMIFIED, p, disc, None, None)
    factors = factor_mod_p(f, p, seed)
    cert = tuple((g.coeffs, m) for g, m in factors)
    radical = [1]
    for g, _ in factors:
        radical = _pmul(radical, list(g.coeffs), p)
    fbar = _ptrim([c % p for c in f.coeffs])
    hbar = _pdivmod(fbar, radical, p)[0]
    g_lift = IntPolynomial.from_coeffs(radical)
    h_lift = IntPolynomial.from_coeffs(hbar)
    diff = g_lift * h_lift - f
    if any(c % p != 0 for c in diff.coeffs):
        raise ArithmeticError("lift of the mod-p factorization is inconsistent")
    big_f = [c // p for c in diff.coeffs]
    fbar_big = _ptrim([c % p for c in big_f])
    common = _pgcd(_pgcd(fbar_big, radical, p), hbar, p)
    p_maximal = _pdeg(common) == 0
    if p_maximal:
        kind = UNRAMIFIED if all(m == 1 for _, m in factors) else RAMIFIED
    else:
        kind = UNDECIDED
    return RamificationVerdict(kind, p, disc, cert, p_maximal)


# ----------------------------------------------------------------------
# quadratic fields


@dataclass(frozen=True)
class QuadraticSplitting:
    """How p sits in Q(sqrt(d)): Split, Inert, or Ramified."""

    d: int
    p: int
    kind: str
    valuation_of_p: int

    def __post_init__(self) -> None:
        if (self.valuation_of_p == 2) != (self.kind == RAMIFIED):
            raise ValueError("valuation 2 exactly when ramified")


def quadratic_splitting(d: int, p: int) -> QuadraticSplitting:
    """Classical splitting law for a rational prime in Q(sqrt(d))."""
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError("d must be a squarefree integer other than 0 and 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if d % 4 in (2, 3):
            kind = RAMIFIED
        elif d % 8 == 1:
            kind = SPLIT
        else:
            kind = INERT
    else:
        if d % p == 0:
            kind = RAMIFIED
        else:
            kind = SPLIT if legendre_symbol(d, p) == 1 else INERT
    return QuadraticSplitting(d, p, kind, 2 if kind == RAMIFIED else 1)


@dataclass(frozen=True)
class EisensteinCheck:
    """Eisenstein test for the shifted cyclotomic polynomial at a prime of Q(sqrt(d)).

    valuations[k] is the valuation of the degree-k coefficient at the
    chosen prime above p; integer coefficients pick up the ramification
    index, so each equals e * v_p(coefficient).
    """

    applies: bool
    valuations: tuple[int, ...]
    splitting: QuadraticSplitting


def eisenstein_check_quadratic(d: int, p: int) -> EisensteinCheck:
    """Does Eisenstein at a prime above p apply to the shifted polynomial?

    It applies precisely when the constant term (equal to p) has valuation
    exactly 1, i.e. when p is unramified in Q(sqrt(d)); divisibility of
    the other coefficients by p makes their valuation condition automatic.
    """
    splitting = quadratic_splitting(d, p)
    e = splitting.valuation_of_p
    shifted = shifted_phi(p)
    vals = []
    for c in shifted.coeffs:
        v = 0
        while c % p == 0:
            c //= p
            v += 1
        vals.append(e * v)
    valuations = tuple(vals)
    applies = all(v >= 1 for v in valuations[:-1]) and valuations[0] == 1
    return EisensteinCheck(applies, valuations, splitting)
