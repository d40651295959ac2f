"""Smith normal form over the integers, H1 of a presentation, R-perfectness."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from rgood.presentations import Presentation, exponent_matrix
from rgood.rings import Integers, LocalizedIntegers, PrimeField, Rationals, RingDescriptor, prime_factors

Matrix = list[list[int]]


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``."""

    free_rank: int
    torsion_divisors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion_divisors", tuple(self.torsion_divisors))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        ds = self.torsion_divisors
        if any(d < 2 for d in ds):
            raise ValueError(f"torsion divisors must be >= 2: {ds}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"torsion divisors must form a divisibility chain: {ds}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_divisors

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return None if self.free_rank else prod(self.torsion_divisors)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion_divisors)
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion_divisors)}


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[int, ...]
    left_transform: Matrix = field(repr=False)
    right_transform: Matrix = field(repr=False)


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Matrix, ncols: int | None = None) -> SnfResult:
    """Compute ``U, V`` unimodular with ``U m V`` diagonal in divisibility order.

    ``ncols`` is only needed when ``m`` has no rows. The pivot at each stage is
    the entry of least nonzero absolute value, ties broken by row-major
    position. All arithmetic is on Python ints.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else (ncols or 0)
    if any(len(row) != cols for row in a):
        raise ValueError("matrix rows must have equal length")
    left = _identity(rows)
    right = _identity(cols)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    def best_pivot(t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return None if best is None else best[1:]

    diagonal = []
    for t in range(min(rows, cols)):
        while True:
            pos = best_pivot(t)
            if pos is None:
                break
            swap_rows(t, pos[0])
            swap_cols(t, pos[1])
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue  # a smaller remainder now exists; re-pivot
            bad_row = next(
                (i for i in range(t + 1, rows) if any(a[i][j] % p for j in range(t + 1, cols))),
                None,
            )
            if bad_row is None:
                break
            add_row(t, bad_row, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        diagonal.append(a[t][t])
    return SnfResult(tuple(diagonal), left, right)


def invariants_from_matrix(m: Matrix, ncols: int) -> AbelianInvariants:
    """Invariants of the cokernel of ``m`` viewed as relations on ``ncols`` generators."""
    diag = smith_normal_form(m, ncols).diagonal if m else ()
    nonzero = [d for d in diag if d]
    return AbelianInvariants(ncols - len(nonzero), tuple(d for d in nonzero if d > 1))


def h1_invariants(p: Presentation) -> AbelianInvariants:
    """Abelianization of the presented group."""
    return invariants_from_matrix(exponent_matrix(p), len(p.generators))


def tensor_vanishes(inv: AbelianInvariants, r: RingDescriptor) -> bool:
    """Whether ``R (x) A = 0`` for the abelian group ``A`` described by ``inv``."""
    if inv.free_rank:
        return False
    match r:
        case Integers():
            return not inv.torsion_divisors
        case Rationals():
            return True
        case PrimeField(p=p):
            return all(d % p for d in inv.torsion_divisors)
        case LocalizedIntegers(inverted=primes):
            return all(q in primes for d in inv.torsion_divisors for q in prime_factors(d))
    raise TypeError(f"unsupported ring descriptor {r!r}")
