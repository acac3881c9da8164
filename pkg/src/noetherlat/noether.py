"""The cyclotomic descent lattice for prime degree, and the classifier.

For a prime p the fixed field of the p-cycle action on p independent
variables descends, after adjoining a p-th root of unity, to the function
field of an algebraic torus over the base whose character module is an
explicit lattice of rank p - 1 over the cyclic Galois group of order
p - 1.  `noether_lattice` builds that lattice from the least primitive
root t mod p and the integer s with t^(p-1) = 1 + p*s.

The classifier needs no cohomology at run time.  Rationality over Q is
known to hold exactly for the primes where the cyclotomic field of
conductor p - 1 has class number one, a finite list hardcoded below; a
rational invariant field over Q stays rational over every number field.
For p outside that list, whenever p is unramified in the base field the
degree-p cyclotomic polynomial stays irreducible (Eisenstein after the
shift X -> X + 1, at a prime above p), the descent lattice is the same as
over Q, and the invariant field is not stably rational.  Ramified primes
outside the list get no verdict: soundness over completeness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import IntMatrix
from .lattices import CyclicGroup, PiLattice
from .numfield import (
    RAMIFIED,
    UNRAMIFIED,
    NumberFieldSpec,
    RamificationVerdict,
    dedekind_ramification,
    discriminant,
    factor_mod_p,
    is_prime,
    prime_factors,
    primes_up_to,
)

RATIONAL = "Rational"
NOT_STABLY_RATIONAL = "NotStablyRational"
UNKNOWN = "Unknown"

#: Primes p for which the cyclotomic field of conductor p - 1 has class
#: number one; these are exactly the primes with rational invariant field.
CLASS_NUMBER_ONE_PRIMES = frozenset(
    {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71})

RETRACT_NOTE = ("the invariant field is retract rational over every base field, "
                "for every prime degree")


@dataclass(frozen=True)
class NoetherParams:
    """The arithmetic data behind the descent lattice for a prime p."""

    p: int
    t: int
    s: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p == 2:
            if (self.t, self.s) != (1, 0):
                raise ValueError("degenerate case p = 2 requires t = 1, s = 0")
            return
        if not 2 <= self.t <= self.p - 1:
            raise ValueError("t must lie in [2, p-1]")
        if self.t ** (self.p - 1) != 1 + self.p * self.s:
            raise ValueError("s must satisfy t**(p-1) = 1 + p*s")
        order = _multiplicative_order(self.t, self.p)
        if order != self.p - 1:
            raise ValueError(f"{self.t} has order {order} mod {self.p}, not a primitive root")


def _multiplicative_order(t: int, p: int) -> int:
    k = 1
    v = t % p
    while v != 1:
        v = v * t % p
        k += 1
    return k


def primitive_root(p: int) -> int:
    """Least primitive root mod p (1 for the degenerate prime 2)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for t in range(2, p):
        if all(pow(t, (p - 1) // q, p) != 1 for q in factors):
            return t
    raise AssertionError("every prime has a primitive root")


def noether_lattice(p: int) -> tuple[PiLattice, NoetherParams]:
    """The explicit rank p-1 descent lattice over the cyclic group C_(p-1).

    The generator cycles the first p - 2 basis vectors w_1 -> w_2 -> ...;
    the last of those maps to -(t^(p-2) w_1 + t^(p-3) w_2 + ... + t w_(p-2)
    + s w_(p-1)), and the final basis vector maps to p w_1 + t w_(p-1).
    The matrix has order p - 1 and determinant +-1, both checked on
    construction.  For p = 2 the lattice degenerates to rank one with
    trivial action.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return PiLattice(CyclicGroup(1), IntMatrix.identity(1)), NoetherParams(2, 1, 0)
    t = primitive_root(p)
    s = (t ** (p - 1) - 1) // p
    rank = p - 1
    columns = []
    for j in range(rank - 2):
        columns.append(tuple(1 if i == j + 1 else 0 for i in range(rank)))
    columns.append(tuple([-t ** (p - 1 - i) for i in range(1, p - 1)] + [-s]))
    columns.append(tuple([p] + [0] * (rank - 2) + [t]))
    action = IntMatrix.from_columns(columns, rows=rank)
    return PiLattice(CyclicGroup(rank), action), NoetherParams(p, t, s)


# ----------------------------------------------------------------------
# classifier


@dataclass(frozen=True)
class Verdict:
    """Classifier outcome with human-readable provenance.

    retract_rational is always True: the invariant field is retract
    rational over any base, independently of the main outcome.
    """

    outcome: str
    retract_rational: bool
    provenance: tuple[str, ...]
    ramification: RamificationVerdict | None

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "retract_rational": self.retract_rational,
            "provenance": list(self.provenance),
            "ramification": None if self.ramification is None else self.ramification.to_json(),
        }

    @staticmethod
    def from_json(d: dict) -> Verdict:
        ram = d["ramification"]
        return Verdict(
            outcome=d["outcome"],
            retract_rational=d["retract_rational"],
            provenance=tuple(d["provenance"]),
            ramification=None if ram is None else RamificationVerdict.from_json(ram),
        )


def _probe_reducible(f) -> str | None:
    """Cheap certificates of reducibility; None when none was found.

    Degree one is always fine.  Otherwise a repeated factor (vanishing
    discriminant) or a rational root proves reducibility.  A mod-q
    factorization that comes out irreducible for some small q not
    dividing the discriminant certifies irreducibility, in which case the
    probing stops early; absence of such a q proves nothing (some
    irreducible polynomials split mod every prime), so the caller stays
    responsible in that case.
    """
    if f.degree == 1:
        return None
    disc = discriminant(f)
    if disc == 0:
        return "the polynomial has a repeated factor"
    c0 = f.coeffs[0]
    if c0 == 0:
        return "the polynomial has the root 0"
    divisors = set()
    d = 1
    while d * d <= abs(c0):
        if c0 % d == 0:
            divisors.update({d, -d, c0 // d, -(c0 // d)})
        d += 1
    for root in sorted(divisors, key=abs):
        if f.evaluate(root) == 0:
            return f"the polynomial has the root {root}"
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if disc % q == 0:
            continue
        factors = factor_mod_p(f, q)
        if len(factors) == 1 and factors[0][1] == 1:
            return None  # certified irreducible mod q
    return None


def classify(field: NumberFieldSpec, p: int, seed: int = 0) -> Verdict:
    """Rationality verdict for the degree-p invariant field over the field.

    Rational for p in the class-number-one list, whatever the base.
    Otherwise a ramification certificate decides: unramified means not
    stably rational, ramified or undecidable means no verdict.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    reason = _probe_reducible(field.minpoly)
    if reason is not None:
        raise ValueError(f"defining polynomial is reducible: {reason}")
    if p in CLASS_NUMBER_ONE_PRIMES:
        return Verdict(
            outcome=RATIONAL,
            retract_rational=True,
            provenance=(
                f"p = {p} is in the class-number-one list: the invariant field is "
                "rational over Q, hence over every number field",
                RETRACT_NOTE,
            ),
            ramification=None,
        )
    ram = dedekind_ramification(field, p, seed)
    if ram.kind == UNRAMIFIED:
        return Verdict(
            outcome=NOT_STABLY_RATIONAL,
            retract_rational=True,
            provenance=(
                f"p = {p} is outside the class-number-one list and unramified in the "
                "base field: the descent lattice matches the one over Q, whose flabby "
                "class is nonzero, so the invariant field is not stably rational",
                RETRACT_NOTE,
            ),
            ramification=ram,
        )
    if ram.kind == RAMIFIED:
        note = (f"p = {p} ramifies in the base field "
                f"(p divides the discriminant {ram.discriminant}); no verdict is "
                "available for ramified primes outside the class-number-one list")
    else:
        note = (f"ramification of p = {p} is undecided: the equation order is not "
                "provably maximal at p, and we refuse to guess")
    return Verdict(
        outcome=UNKNOWN,
        retract_rational=True,
        provenance=(note, RETRACT_NOTE),
        ramification=ram,
    )


def rational_field() -> NumberFieldSpec:
    """Q presented as the degree-one field defined by X."""
    from .numfield import IntPolynomial

    return NumberFieldSpec(IntPolynomial((0, 1)))


def verdict_table(max_p: int, seed: int = 0) -> list[tuple[int, Verdict]]:
    """Classify every prime up to max_p over Q, ascending."""
    base = rational_field()
    return [(p, classify(base, p, seed)) for p in primes_up_to(max_p)]
