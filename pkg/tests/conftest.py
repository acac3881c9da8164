"""Shared test helpers: random lattice generation and independent oracles."""

from __future__ import annotations

import random

from noetherlat import (
    CyclicGroup,
    IntMatrix,
    PiLattice,
    Subgroup,
    cokernel_invariants,
    norm_matrix,
    unimodular_inverse,
)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def cycle_matrix(size: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[1 if i == (j + 1) % size else 0 for j in range(size)] for i in range(size)])


def random_unimodular(rng: random.Random, n: int, ops: int = 8) -> IntMatrix:
    """Product of random elementary matrices (row adds, swaps, negations)."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-1, 1))
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == 2:
            m[i] = [-a for a in m[i]]
    return IntMatrix.from_rows(m)


def random_pi_lattice(rng: random.Random, n: int, max_rank: int = 4,
                      entry_bound: int = 3) -> PiLattice:
    """Order-n action with small entries: a conjugated permutation block sum.

    Block sizes divide n so the permutation part has order dividing n;
    conjugation by a unimodular matrix preserves the order exactly.
    Candidates with entries beyond the bound are resampled.
    """
    sizes: list[int] = []
    total = 0
    choices = [d for d in divisors(n) if d <= max_rank]
    while True:
        fitting = [d for d in choices if total + d <= max_rank]
        if not fitting or (total > 0 and rng.random() < 0.4):
            break
        c = rng.choice(fitting)
        sizes.append(c)
        total += c
    if not sizes:
        sizes = [1]
    base = IntMatrix.block_diag([cycle_matrix(c) for c in sizes])
    rank = base.rows
    for _ in range(300):
        w = random_unimodular(rng, rank)
        candidate = w @ base @ unimodular_inverse(w)
        if candidate.max_abs() <= entry_bound:
            return PiLattice(CyclicGroup(n), candidate)
    return PiLattice(CyclicGroup(n), base)


# ----------------------------------------------------------------------
# independent cohomology oracles
#
# Torsion of the coinvariants M/(g-1)M equals ker N/(g-1)M: a multiple of
# x lands in (g-1)M only if N x = 0, and rationally the norm kernel is
# spanned by (g-1)M.  Dually, torsion of M/NM equals the fixed points
# modulo norms.  Each oracle is a single cokernel computation, bypassing
# the kernel-basis and in-lattice solving used by the main route.


def h_minus1_oracle(lat: PiLattice, sub: Subgroup) -> tuple[int, ...]:
    g = lat.action.power(lat.group.order // sub.order)
    cok = cokernel_invariants(g - IntMatrix.identity(lat.rank), lat.rank)
    return cok.factors


def h0_oracle(lat: PiLattice, sub: Subgroup) -> tuple[int, ...]:
    cok = cokernel_invariants(norm_matrix(lat, sub), lat.rank)
    return cok.factors
