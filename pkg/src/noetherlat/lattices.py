"""Lattices with an action of a cyclic group, and their Tate cohomology.

A lattice here is a free Z-module of finite rank on which a cyclic group
of order n acts through a single unimodular integer matrix T (the image
of the chosen generator; column j holds the image of basis vector j).
Subgroups are identified with the divisors of n: the subgroup of order d
is generated by T^(n/d).

Cohomology conventions for the subgroup generated by g, of order d, with
norm N = 1 + g + ... + g^(d-1):

    H^0  = fixed points modulo norms        = ker(g - 1) / N M
    H^-1 = norm kernel modulo augmentation  = ker N / (g - 1) M

Cyclic groups have 2-periodic Tate cohomology, so H^1 = H^-1; the code
computes H^1 through that identification and the flabby and coflabby
flags therefore always coincide here.  Both are reported anyway to keep
the interface stable.

A lattice is flabby when H^-1 vanishes for every subgroup, coflabby when
H^1 does.  Every lattice M embeds in a flabby resolution

    0 -> M -> Q -> E -> 0

with Q a permutation lattice and E flabby; `flabby_resolution` builds one
by the dual-surjection method and `verify_resolution` re-checks every
claimed property from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import (
    IntMatrix,
    cokernel_invariants,
    determinant,
    kernel_basis,
    solve_exact,
    unimodular_inverse,
)


@dataclass(frozen=True)
class CyclicGroup:
    """Cyclic group of the given order; elements are powers of one generator."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("group order must be positive")


@dataclass(frozen=True)
class Subgroup:
    """The unique subgroup of a cyclic group with the given order."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("subgroup order must be positive")


@dataclass(frozen=True)
class TateGroup:
    """A finite abelian group as a chain of invariant factors (each > 1)."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        for f in self.factors:
            if f <= 1:
                raise ValueError("invariant factors must exceed 1")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{f}" for f in self.factors)


@dataclass(frozen=True)
class PiLattice:
    """A lattice with cyclic group action given by one generator matrix.

    Rank zero is legal (the zero module) so that direct sums stay total.
    """

    group: CyclicGroup
    action: IntMatrix

    def __post_init__(self) -> None:
        if not self.action.is_square:
            raise ValueError("action matrix must be square")
        if determinant(self.action) not in (1, -1):
            raise ValueError("action matrix must be unimodular")
        if not self.action.power(self.group.order).is_identity():
            raise ValueError("generator action must have order dividing the group order")

    @property
    def rank(self) -> int:
        return self.action.rows


def trivial_lattice(group: CyclicGroup, rank: int = 1) -> PiLattice:
    return PiLattice(group, IntMatrix.identity(rank))


def zero_lattice(group: CyclicGroup) -> PiLattice:
    return PiLattice(group, IntMatrix.identity(0))


def sign_lattice() -> PiLattice:
    """Rank-one lattice over the order-2 group where the generator negates."""
    return PiLattice(CyclicGroup(2), IntMatrix.from_rows([[-1]]))


# ----------------------------------------------------------------------
# subgroups and the basic matrices


def subgroups(group: CyclicGroup) -> list[Subgroup]:
    """All subgroups, one per divisor of the order, ascending."""
    n = group.order
    return [Subgroup(d) for d in range(1, n + 1) if n % d == 0]


def _check_subgroup(lat: PiLattice, sub: Subgroup) -> int:
    n = lat.group.order
    if n % sub.order != 0:
        raise ValueError(f"order {sub.order} does not divide the group order {n}")
    return n // sub.order


def generator_matrix(lat: PiLattice, sub: Subgroup) -> IntMatrix:
    """Action of the canonical generator of the subgroup."""
    step = _check_subgroup(lat, sub)
    return lat.action.power(step)


def norm_matrix(lat: PiLattice, sub: Subgroup) -> IntMatrix:
    """Sum of the subgroup's elements acting on the lattice."""
    g = generator_matrix(lat, sub)
    acc = IntMatrix.identity(lat.rank)
    power = g
    for _ in range(sub.order - 1):
        acc = acc + power
        power = power @ g
    return acc


def fixed_sublattice(lat: PiLattice, sub: Subgroup) -> IntMatrix:
    """Primitive basis (columns) of the vectors fixed by the subgroup."""
    g = generator_matrix(lat, sub)
    return kernel_basis(g - IntMatrix.identity(lat.rank))


# ----------------------------------------------------------------------
# Tate cohomology


def _finite_quotient(basis: IntMatrix, inside: IntMatrix) -> TateGroup:
    # quotient of the lattice spanned by `basis` by the columns of `inside`
    # (which must lie in that span); the result must be finite
    coords = solve_exact(basis, inside)
    cok = cokernel_invariants(coords, basis.cols)
    assert cok.free_rank == 0, "Tate cohomology of a lattice must be finite"
    return TateGroup(cok.factors)


def tate_h0(lat: PiLattice, sub: Subgroup) -> TateGroup:
    """Fixed points modulo norms for the given subgroup."""
    fixed = fixed_sublattice(lat, sub)
    return _finite_quotient(fixed, norm_matrix(lat, sub))


def tate_h_minus1(lat: PiLattice, sub: Subgroup) -> TateGroup:
    """Norm kernel modulo the augmentation submodule (g - 1)M.

    By 2-periodicity of cyclic Tate cohomology this same group is H^1 and
    every other odd-degree group.
    """
    g = generator_matrix(lat, sub)
    norm_kernel = kernel_basis(norm_matrix(lat, sub))
    return _finite_quotient(norm_kernel, g - IntMatrix.identity(lat.rank))


@dataclass(frozen=True)
class FlabbinessReport:
    """H^-1 (= H^1) for every subgroup, with the two summary flags.

    For cyclic groups the flags agree by periodicity; both are kept for
    interface stability.
    """

    flabby: bool
    coflabby: bool
    table: tuple[tuple[int, TateGroup], ...]


def flabbiness_report(lat: PiLattice) -> FlabbinessReport:
    table = tuple((sub.order, tate_h_minus1(lat, sub)) for sub in subgroups(lat.group))
    vanishes = all(t.is_trivial for _, t in table)
    return FlabbinessReport(flabby=vanishes, coflabby=vanishes, table=table)


# ----------------------------------------------------------------------
# duals, sums, permutation lattices


def dual(lat: PiLattice) -> PiLattice:
    """Dual lattice: the action becomes inverse-transpose."""
    return PiLattice(lat.group, unimodular_inverse(lat.action).transpose())


def direct_sum(a: PiLattice, b: PiLattice) -> PiLattice:
    if a.group != b.group:
        raise ValueError("direct sum requires lattices over the same group")
    return PiLattice(a.group, IntMatrix.block_diag([a.action, b.action]))


def _cycle_matrix(size: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[1 if i == (j + 1) % size else 0 for j in range(size)] for i in range(size)],
        cols=size)


def permutation_lattice(group: CyclicGroup, orders: tuple[int, ...] | list[int]) -> PiLattice:
    """Direct sum of coset lattices, one for each listed subgroup order.

    The summand for order d has rank n/d and the generator cycles its
    basis; an empty list gives the zero lattice.
    """
    n = group.order
    blocks = []
    for d in orders:
        if d < 1 or n % d != 0:
            raise ValueError(f"order {d} does not divide the group order {n}")
        blocks.append(_cycle_matrix(n // d))
    return PiLattice(group, IntMatrix.block_diag(blocks))


# ----------------------------------------------------------------------
# flabby resolutions


@dataclass(frozen=True)
class FlabbyResolution:
    """An exact triple 0 -> m -> q -> e -> 0 with q a permutation lattice.

    Only shapes are validated here; the mathematical claims (equivariance,
    exactness, flabbiness of e) are the business of verify_resolution, so
    that deliberately broken triples can be built and fed to it.
    """

    m: PiLattice
    q: PiLattice
    e: PiLattice
    inject: IntMatrix
    project: IntMatrix
    q_shape: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (self.m.group == self.q.group == self.e.group):
            raise ValueError("all three lattices must share one group")
        if (self.inject.rows, self.inject.cols) != (self.q.rank, self.m.rank):
            raise ValueError("injection must map m into q")
        if (self.project.rows, self.project.cols) != (self.e.rank, self.q.rank):
            raise ValueError("projection must map q onto e")
        n = self.m.group.order
        if any(d < 1 or n % d != 0 for d in self.q_shape):
            raise ValueError("q_shape must list subgroup orders")
        if sum(n // d for d in self.q_shape) != self.q.rank:
            raise ValueError("q_shape does not account for the rank of q")


def flabby_resolution(lat: PiLattice) -> FlabbyResolution:
    """Build a flabby resolution by the dual-surjection method.

    Take the dual lattice and, for every subgroup, a primitive basis of
    its fixed sublattice.  Each fixed vector spawns one coset-lattice
    summand of a permutation lattice P, mapped onto the dual by sending
    the generating coset to that vector and pushing around the orbit; the
    trivial subgroup contributes a free cover, so the map is onto.
    Dualizing 0 -> ker -> P -> dual -> 0 yields the resolution of the
    original lattice.  The cokernel side is flabby because every fixed
    sublattice of the dual is hit by construction.
    """
    group = lat.group
    n = group.order
    ldual = dual(lat)
    s = ldual.action
    s_powers = [IntMatrix.identity(lat.rank)]
    for _ in range(n - 1):
        s_powers.append(s_powers[-1] @ s)

    shape: list[int] = []
    blocks: list[IntMatrix] = []
    phi_columns: list[tuple[int, ...]] = []
    for sub in subgroups(group):
        coset_count = n // sub.order
        fixed = fixed_sublattice(ldual, sub)
        for j in range(fixed.cols):
            vector = fixed.column(j)
            shape.append(sub.order)
            blocks.append(_cycle_matrix(coset_count))
            for a in range(coset_count):
                phi_columns.append(s_powers[a].apply(vector))

    p_action = IntMatrix.block_diag(blocks)
    phi = IntMatrix.from_columns(phi_columns, rows=lat.rank)
    kappa = kernel_basis(phi)
    q = PiLattice(group, p_action)
    if kappa.cols == 0:
        e = zero_lattice(group)
    else:
        restricted = solve_exact(kappa, p_action @ kappa)
        e = PiLattice(group, unimodular_inverse(restricted).transpose())
    return FlabbyResolution(
        m=lat,
        q=q,
        e=e,
        inject=phi.transpose(),
        project=kappa.transpose(),
        q_shape=tuple(shape),
    )


@dataclass(frozen=True)
class ResolutionCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ResolutionReport:
    checks: tuple[ResolutionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        return "\n".join(
            f"[{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in self.checks)


def _permutation_cycle_lengths(a: IntMatrix) -> list[int] | None:
    # None when the matrix is not a permutation matrix
    n = a.rows
    if not a.is_square:
        return None
    image = [-1] * n
    for j in range(n):
        ones = [i for i in range(n) if a.data[i][j] == 1]
        if len(ones) != 1 or any(a.data[i][j] != 0 for i in range(n) if i != ones[0]):
            return None
        image[j] = ones[0]
    if sorted(image) != list(range(n)):
        return None
    lengths = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = image[j]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def verify_resolution(res: FlabbyResolution) -> ResolutionReport:
    """Re-check every property a flabby resolution claims, from scratch.

    Items: q is a permutation lattice of the declared shape, both maps are
    equivariant, the injection is injective, the projection is onto, the
    composite vanishes, the image of the injection is exactly (index one)
    the kernel of the projection, and e is flabby.
    """
    n = res.m.group.order
    checks = []

    lengths = _permutation_cycle_lengths(res.q.action)
    expected = sorted(n // d for d in res.q_shape)
    checks.append(ResolutionCheck(
        "q_permutation",
        lengths == expected,
        f"cycle lengths {lengths} vs declared {expected}"))

    inj_eq = res.q.action @ res.inject == res.inject @ res.m.action
    checks.append(ResolutionCheck(
        "inject_equivariant", inj_eq, "commutes with the two actions" if inj_eq else "does not commute"))

    proj_eq = res.e.action @ res.project == res.project @ res.q.action
    checks.append(ResolutionCheck(
        "project_equivariant", proj_eq, "commutes with the two actions" if proj_eq else "does not commute"))

    inj_ker = kernel_basis(res.inject)
    checks.append(ResolutionCheck(
        "inject_injective", inj_ker.cols == 0, f"kernel rank {inj_ker.cols}"))

    cok = cokernel_invariants(res.project, res.e.rank)
    checks.append(ResolutionCheck(
        "project_surjective", cok.is_trivial,
        f"cokernel factors {list(cok.factors)}, free rank {cok.free_rank}"))

    comp = res.project @ res.inject
    checks.append(ResolutionCheck(
        "composite_zero", comp.is_zero(), "projection kills the image" if comp.is_zero() else "nonzero composite"))

    mid_kernel = kernel_basis(res.project)
    if mid_kernel.cols != res.m.rank:
        checks.append(ResolutionCheck(
            "image_equals_kernel", False,
            f"kernel rank {mid_kernel.cols} differs from injected rank {res.m.rank}"))
    else:
        try:
            coords = solve_exact(mid_kernel, res.inject)
            index = abs(determinant(coords))
            checks.append(ResolutionCheck(
                "image_equals_kernel", index == 1, f"index of image in kernel: {index}"))
        except ValueError as exc:
            checks.append(ResolutionCheck("image_equals_kernel", False, str(exc)))

    report = flabbiness_report(res.e)
    detail = ", ".join(f"d={d}: {t}" for d, t in report.table) or "no subgroups"
    checks.append(ResolutionCheck("e_flabby", report.flabby, detail))

    return ResolutionReport(tuple(checks))


# ----------------------------------------------------------------------
# interchange format: line 1 "n rank", then rank rows of the action


def lattice_to_text(lat: PiLattice) -> str:
    lines = [f"{lat.group.order} {lat.rank}"]
    lines.extend(" ".join(str(x) for x in row) for row in lat.action.data)
    return "\n".join(lines) + "\n"


def lattice_from_text(text: str) -> PiLattice:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty lattice text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("lattice header must be 'n rank'")
    try:
        n, rank = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("lattice header must contain two integers") from None
    if len(lines) != 1 + rank:
        raise ValueError(f"expected {rank} action rows, found {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValueError(f"non-integer entry in line: {ln!r}") from None
        if len(row) != rank:
            raise ValueError(f"expected {rank} entries per row, found {len(row)}")
        data.append(row)
    return PiLattice(CyclicGroup(n), IntMatrix.from_rows(data, cols=rank))


def lattice_to_json(lat: PiLattice) -> dict:
    return {
        "schema": "v1",
        "n": lat.group.order,
        "rank": lat.rank,
        "action": [list(row) for row in lat.action.data],
    }


def lattice_from_json(payload: dict) -> PiLattice:
    action = IntMatrix.from_rows([list(r) for r in payload["action"]],
                                 cols=payload["rank"])
    return PiLattice(CyclicGroup(payload["n"]), action)
