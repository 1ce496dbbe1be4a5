"""Component catalog of the extended quotient of a maximal torus of
SL_n(C)/C_k by the Weyl group S_n.

The quotient splits into irreducible components indexed by a partition mu of
n (the conjugacy class) together with a root of unity omega drawn from the
cyclic group of order gcd(g(mu), k).  Each component is

    (C*)^(b-1)  x  A^(c-b) / C_d  x  (discrete set),

where b, c are the distinct/total part counts of mu, d = gcd(m, k/|omega|)
with m the gcd of the multiplicities, the cyclic group acts diagonally with
weight l on p_l coordinates, and the discrete factor has gcd(g/|omega|, n/k)
points.  Only this descriptor data is materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .numtheory import pillai
from .partitions import Partition, enumerate_partitions, invariants


@dataclass(frozen=True)
class OmegaLabel:
    """A root of unity omega = zeta_h^exponent in the cyclic group C_h.

    Here h = gcd(g(mu), k); every omega attached to a partition satisfies
    order | h.  Labels are kept distinct per exponent even though the
    component formulas only consume the order, so per-omega tables can be
    reproduced exactly.
    """

    h: int
    exponent: int

    def __post_init__(self) -> None:
        if self.h < 1 or not 0 <= self.exponent < self.h:
            raise ValueError(f"invalid omega label ({self.h}, {self.exponent})")

    @property
    def order(self) -> int:
        return self.h // math.gcd(self.h, self.exponent)

    def zeta_exponent(self, k: int) -> int:
        """Exponent of omega as a power of the primitive k-th root of unity."""
        if k % self.h != 0:
            raise ValueError(f"h={self.h} does not divide k={k}")
        return self.exponent * (k // self.h)


@dataclass(frozen=True)
class CyclicSingularity:
    """The quotient A^ambient_dim / C_group_order for a diagonal action.

    ``weights`` lists, per coordinate, the power of the group generator's
    eigenvalue; entries are reduced modulo group_order and weight 0 (a
    coordinate with trivial action) is retained.  group_order == 1 means the
    space is smooth affine space.
    """

    ambient_dim: int
    group_order: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 0 or self.group_order < 1:
            raise ValueError("invalid singularity data")
        if len(self.weights) != self.ambient_dim:
            raise ValueError("one weight per ambient coordinate is required")
        if any(not 0 <= w < self.group_order for w in self.weights):
            raise ValueError("weights must be residues mod group_order")

    def to_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "group_order": self.group_order,
            "weights": list(self.weights),
        }


@dataclass(frozen=True)
class ComplexComponent:
    """One stratum of the complex extended quotient."""

    partition: Partition
    omega: OmegaLabel
    torus_dim: int
    singularity: CyclicSingularity
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "omega_exponent": self.omega.exponent,
            "omega_order": self.omega.order,
            "torus_dim": self.torus_dim,
            "multiplicity": self.multiplicity,
            "singularity": self.singularity.to_dict(),
        }


@dataclass(frozen=True)
class QuotientCatalog:
    """The full decomposition for (n, k), complex or real form.

    Entries are ordered by partition enumeration order, then by omega
    exponent, so renderings diff cleanly.  Each entry carries its discrete
    multiplicity; the total component count is the sum of multiplicities.
    """

    n: int
    k: int
    form: str
    entries: tuple

    def total_components(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    def by_partition(self) -> Iterator[tuple[Partition, list]]:
        group: list = []
        current: Partition | None = None
        for entry in self.entries:
            if current is not None and entry.partition != current:
                yield current, group
                group = []
            current = entry.partition
            group.append(entry)
        if current is not None:
            yield current, group

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "form": self.form,
            "entries": [entry.to_dict() for entry in self.entries],
        }


def _require_divides(k: int, n: int) -> None:
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"k={k} must divide n={n}")


def enumerate_omegas(mu: Partition, n: int, k: int) -> list[OmegaLabel]:
    """All omega labels for the partition: h = gcd(g(mu), k) of them."""
    _require_divides(k, n)
    h = math.gcd(invariants(mu).g, k)
    return [OmegaLabel(h, e) for e in range(h)]


def singularity_weights(mu: Partition, d: int) -> CyclicSingularity:
    """The cyclic singularity A^(c-b) / C_d attached to mu.

    The generator multiplies p_l(mu) coordinates by its l-th power; weights
    are listed by increasing l and reduced mod d at construction.
    """
    if d < 1:
        raise ValueError("group order must be positive")
    inv = invariants(mu)
    weights = tuple(l % d for l, p_l in enumerate(inv.p, start=1) for _ in range(p_l))
    return CyclicSingularity(inv.c - inv.b, d, weights)


def complex_component(mu: Partition, omega: OmegaLabel, n: int, k: int) -> ComplexComponent:
    """The stratum of the complex quotient labelled by (mu, omega)."""
    _require_divides(k, n)
    inv = invariants(mu)
    order = omega.order
    if k % order != 0:
        raise ValueError(f"omega order {order} does not divide k={k}")
    d = math.gcd(inv.m, k // order)
    multiplicity = math.gcd(inv.g // order, n // k)
    return ComplexComponent(
        partition=mu,
        omega=omega,
        torus_dim=inv.b - 1,
        singularity=singularity_weights(mu, d),
        multiplicity=multiplicity,
    )


def component_count_from_gcd(g: int, n: int, k: int) -> int:
    """Number of components contributed by any partition with part-gcd g.

    Closed form: (g/a) * pillai(a) with a = gcd(g, n/g, k, n/k); it equals
    the direct sum over omega of gcd(g/|omega|, n/k).
    """
    a = math.gcd(math.gcd(g, n // g), math.gcd(k, n // k))
    return (g // a) * pillai(a)


def component_count(mu: Partition, n: int, k: int) -> int:
    """Number of components the partition mu contributes to the (n, k) quotient."""
    _require_divides(k, n)
    return component_count_from_gcd(invariants(mu).g, n, k)


def decompose_complex(n: int, k: int) -> QuotientCatalog:
    """The full complex catalog for (n, k), in deterministic order."""
    _require_divides(k, n)
    entries = []
    for mu in enumerate_partitions(n):
        for omega in enumerate_omegas(mu, n, k):
            entries.append(complex_component(mu, omega, n, k))
    return QuotientCatalog(n=n, k=k, form="complex", entries=tuple(entries))


def canonical_singularity(s: CyclicSingularity) -> CyclicSingularity:
    """Canonical representative under relabelling the acting group.

    Rescaling the weights by a unit mod d amounts to choosing a different
    generator of the same group, and permuting coordinates is harmless, so
    the canonical form is the lexicographically smallest sorted weight tuple
    over all unit multiples.  Two singularities are isomorphic in this
    group-data sense iff their canonical forms (ambient dim, d, weights)
    agree.
    """
    d = s.group_order
    if d == 1 or s.ambient_dim == 0:
        return CyclicSingularity(s.ambient_dim, d, tuple(sorted(s.weights)))
    best = min(
        tuple(sorted(u * w % d for w in s.weights))
        for u in range(1, d)
        if math.gcd(u, d) == 1
    )
    return CyclicSingularity(s.ambient_dim, d, best)


def variety_normal_form(s: CyclicSingularity) -> CyclicSingularity:
    """Normal form of the underlying quotient variety.

    Goes beyond :func:`canonical_singularity` by discarding the part of the
    group data that does not affect the variety: the kernel of the action,
    and the subgroup generated by quasi-reflections (elements moving a single
    coordinate), whose quotient is again affine space by Chevalley's theorem.
    E.g. A^1 / C_2 acting by -1 normalizes to smooth A^1, and
    A^2 / C_4 (1, 2) normalizes to A^2 / C_2 (1, 1).
    """
    d = s.group_order
    weights = list(s.weights)
    count = len(weights)
    if count == 0:
        return CyclicSingularity(0, 1, ())
    while d > 1:
        shrink = math.gcd(d, *weights)
        if shrink > 1:
            d //= shrink
            weights = [w // shrink for w in weights]
            continue
        # Order of the generator on each coordinate; a quasi-reflection moving
        # coordinate i is a power fixing every other coordinate (exponent a
        # multiple of fix_others) while still acting on coordinate i.
        orders = [d // math.gcd(d, w) for w in weights]
        reflect_exponents = []
        for i in range(count):
            fix_others = math.lcm(*orders[:i], *orders[i + 1 :])
            if fix_others % orders[i] != 0:
                reflect_exponents.append(fix_others)
        if not reflect_exponents:
            break
        # Quotient by the subgroup the quasi-reflections generate: coordinate i
        # maps to its c_i-th power and the residual group has order d_new < d.
        d_new = math.gcd(d, *reflect_exponents)
        new_weights = []
        for w in weights:
            c_i = d // math.gcd(d, d_new * w)
            new_weights.append((c_i * w * d_new // d) % d_new)
        d, weights = d_new, new_weights
    if d == 1:
        weights = [0] * count
    return canonical_singularity(CyclicSingularity(count, d, tuple(weights)))
