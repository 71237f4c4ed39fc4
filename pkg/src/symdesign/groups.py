"""Irrep sectors of the on-site symmetries and their canonical ordering.

For each built-in symmetry the total Hilbert space of ``n`` sites splits into
isotypic sectors, one per inequivalent irrep appearing in the on-site
representation.  Each sector carries an exact integer multiplicity ``m`` and
irrep dimension ``d`` with ``sum(m * d) == (local dim) ** n``.  The canonical
ordering sorts sectors by weakly increasing multiplicity, with a fixed
deterministic tie-break per group so that solver certificates are reproducible.

Built-in symmetries:

* ``U1``   -- qubits, sectors labeled by Hamming weight ``w``.
* ``SU2``  -- qubits, sectors labeled by total spin (stored as ``2j``).
* ``Zp``   -- qubits, sectors labeled by a residue mod ``p``.
* ``SUd``  -- qudits (``d >= 3``), sectors labeled by partitions of ``n`` with
  at most ``d`` rows; multiplicities are symmetric-group irrep dimensions
  (hook lengths), irrep dimensions come from the Weyl dimension formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Union


# ---------------------------------------------------------------------------
# group descriptions
# ---------------------------------------------------------------------------

_KINDS = ("U1", "SU2", "Zp", "SUd", "Custom")


@dataclass(frozen=True)
class GroupSpec:
    """Tagged description of a symmetry group and its on-site representation."""

    kind: str
    p: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "Zp":
            if self.p is None or self.p < 2:
                raise ValueError("Zp requires p >= 2")
        elif self.p is not None:
            raise ValueError("p is only meaningful for Zp")
        if self.kind == "SUd":
            if self.d is None or self.d < 3:
                raise ValueError("SUd requires local dimension d >= 3")
        elif self.d is not None:
            raise ValueError("d is only meaningful for SUd")

    @property
    def local_dim(self) -> int:
        if self.kind == "SUd":
            return self.d
        if self.kind == "Custom":
            raise ValueError("custom groups have no built-in local dimension")
        return 2

    def __str__(self):
        if self.kind == "Zp":
            return f"zp(p={self.p})"
        if self.kind == "SUd":
            return f"sud(d={self.d})"
        return self.kind.lower()


U1 = GroupSpec("U1")
SU2 = GroupSpec("SU2")
CUSTOM = GroupSpec("Custom")


def zp(p: int) -> GroupSpec:
    return GroupSpec("Zp", p=p)


def sud(d: int) -> GroupSpec:
    return GroupSpec("SUd", d=d)


# ---------------------------------------------------------------------------
# irrep labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HammingWeight:
    w: int

    @property
    def label(self) -> str:
        return f"w={self.w}"


@dataclass(frozen=True)
class TwiceSpin:
    jj: int  # 2j, kept integral for both parities of n

    @property
    def label(self) -> str:
        return f"2j={self.jj}"


@dataclass(frozen=True)
class Residue:
    beta: int

    @property
    def label(self) -> str:
        return f"b={self.beta}"


@dataclass(frozen=True)
class PartitionId:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(a <= 0 for a in self.parts):
            raise ValueError("partition parts must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def label(self) -> str:
        return "[" + ",".join(str(a) for a in self.parts) + "]"


@dataclass(frozen=True)
class CustomSector:
    index: int
    name: str | None = None

    @property
    def label(self) -> str:
        return self.name if self.name is not None else f"s{self.index}"


IrrepId = Union[HammingWeight, TwiceSpin, Residue, PartitionId, CustomSector]


@dataclass(frozen=True)
class SectorEntry:
    irrep: IrrepId
    multiplicity: int
    dim: int


@dataclass(frozen=True)
class SectorTable:
    """Ordered list of irrep sectors with exact multiplicities and dimensions."""

    group: GroupSpec
    n: int
    sectors: tuple[SectorEntry, ...]

    @property
    def ids(self) -> tuple[IrrepId, ...]:
        return tuple(e.irrep for e in self.sectors)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(e.multiplicity for e in self.sectors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(e.dim for e in self.sectors)

    def __len__(self):
        return len(self.sectors)

    def labels(self) -> tuple[str, ...]:
        return tuple(e.irrep.label for e in self.sectors)

    def is_canonical(self) -> bool:
        m = self.multiplicities
        return all(m[i] <= m[i + 1] for i in range(len(m) - 1))


# ---------------------------------------------------------------------------
# partitions and symmetric-group dimensions (used for SUd sectors)
# ---------------------------------------------------------------------------


def partitions_max_rows(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with at most ``d`` parts, descending lexicographic."""

    def rec(rest: int, max_part: int, rows_left: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        if rows_left == 0:
            return
        for part in range(min(rest, max_part), 0, -1):
            yield from rec(rest - part, part, rows_left - 1, prefix + (part,))

    yield from rec(n, n, d, ())


@lru_cache(maxsize=None)
def sn_irrep_dim(parts: tuple[int, ...]) -> int:
    """Dimension of the symmetric-group irrep of shape ``parts`` (hook lengths)."""
    n = sum(parts)
    cols = _conjugate(parts)
    hook_prod = 1
    for i, row_len in enumerate(parts):
        for j in range(row_len):
            hook_prod *= row_len - j + cols[j] - i - 1
    dim, rem = divmod(factorial(n), hook_prod)
    assert rem == 0
    return dim


def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for a in parts if a > j) for j in range(parts[0]))


def sud_irrep_dim(parts: tuple[int, ...], d: int) -> int:
    """Dimension of the SU(d) irrep with highest weight given by ``parts``."""
    lam = list(parts) + [0] * (d - len(parts))
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


# ---------------------------------------------------------------------------
# sector enumeration
# ---------------------------------------------------------------------------


def su2_multiplicity(n: int, jj: int) -> int:
    """Multiplicity of the total-spin-``jj/2`` sector of ``n`` qubits."""
    if jj < 0 or jj > n or (n - jj) % 2:
        raise ValueError(f"2j={jj} invalid for n={n}")
    i = (n - jj) // 2
    return comb(n, i) - (comb(n, i - 1) if i >= 1 else 0)


def zp_multiplicity(n: int, p: int, beta: int) -> int:
    """Number of ``n``-bit strings whose Hamming weight is ``beta`` mod ``p``."""
    return sum(comb(n, beta + p * l) for l in range((n - beta) // p + 1)) if beta <= n else 0


def sectors(group: GroupSpec, n: int) -> SectorTable:
    """Enumerate all irrep sectors of the on-site representation on ``n`` sites.

    Sectors are returned in the group's natural label order (ascending weight,
    ascending ``2j``, ascending residue, descending-lex partitions); see
    :func:`canonical_order` for the multiplicity-sorted order the solver uses.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    entries: list[SectorEntry] = []
    if group.kind == "U1":
        for w in range(n + 1):
            entries.append(SectorEntry(HammingWeight(w), comb(n, w), 1))
    elif group.kind == "SU2":
        for jj in range(n % 2, n + 1, 2):
            entries.append(SectorEntry(TwiceSpin(jj), su2_multiplicity(n, jj), jj + 1))
    elif group.kind == "Zp":
        for beta in range(group.p):
            m = zp_multiplicity(n, group.p, beta)
            if m > 0:  # residues beyond n do not appear for n < p - 1
                entries.append(SectorEntry(Residue(beta), m, 1))
    elif group.kind == "SUd":
        for parts in partitions_max_rows(n, group.d):
            entries.append(
                SectorEntry(PartitionId(parts), sn_irrep_dim(parts), sud_irrep_dim(parts, group.d))
            )
    else:
        raise ValueError("custom groups carry their own sector tables")
    table = SectorTable(group, n, tuple(entries))
    assert sum(e.multiplicity * e.dim for e in entries) == group.local_dim**n
    return table


def _tie_break_key(group: GroupSpec, n: int, irrep: IrrepId):
    if isinstance(irrep, HammingWeight):
        # low-weight member of each mirror pair (w, n-w) first: 0, n, 1, n-1, ...
        return (min(irrep.w, n - irrep.w), irrep.w)
    if isinstance(irrep, TwiceSpin):
        return (-irrep.jj,)
    if isinstance(irrep, Residue):
        return (irrep.beta,)
    if isinstance(irrep, PartitionId):
        return (irrep.parts,)
    return (irrep.index,)


def canonical_order(table: SectorTable) -> SectorTable:
    """Sort sectors by weakly increasing multiplicity with deterministic ties."""
    order = sorted(
        table.sectors,
        key=lambda e: (e.multiplicity,) + _tie_break_key(table.group, table.n, e.irrep),
    )
    return SectorTable(table.group, table.n, tuple(order))


def semiuniversal_min_locality(group: GroupSpec) -> int:
    """Smallest gate locality for which the built-in gate sets are semi-universal."""
    if group.kind in ("U1", "SU2"):
        return 2
    if group.kind == "Zp":
        return group.p
    if group.kind == "SUd":
        return 3
    raise ValueError(
        "semi-universality of custom gate sets is unknown; "
        "pass assume_semiuniversal=True to the solver if it holds"
    )


def custom_table(multiplicities: list[int], names: list[str] | None = None) -> SectorTable:
    """Sector table for a user-supplied problem (irrep dimensions default to 1)."""
    if names is not None and len(names) != len(multiplicities):
        raise ValueError("labels length must match multiplicity vector")
    entries = []
    for i, m in enumerate(multiplicities):
        if int(m) != m or m <= 0:
            raise ValueError("multiplicities must be positive integers")
        entries.append(SectorEntry(CustomSector(i, names[i] if names else None), int(m), 1))
    return SectorTable(CUSTOM, len(entries), tuple(entries))
