"""Atoms, finite permutations, and swap-based support computation.

Values never carry their support explicitly.  Each kind of value (a
"carrier") registers a permutation action, a decidable equality, and a
finite overapproximation of the atoms a value can touch; freshness of an
atom is then decided by a single swap against a fresh atom, and minimal
support by folding that test over the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Generic, Iterable, Iterator, TypeVar

T = TypeVar("T")


@dataclass(frozen=True, order=True)
class Atom:
    """A name, identified by its index alone; display is presentation only."""

    index: int
    display: str | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"atom index must be non-negative, got {self.index}")

    @property
    def name(self) -> str:
        return self.display if self.display is not None else f"a{self.index}"

    def __str__(self) -> str:
        return self.name


class AtomSet:
    """Immutable finite set of atoms, iterated in ascending index order."""

    __slots__ = ("_atoms", "_indices")

    def __init__(self, atoms: Iterable[Atom] = ()) -> None:
        by_index: dict[int, Atom] = {}
        for a in atoms:
            by_index.setdefault(a.index, a)
        self._atoms: tuple[Atom, ...] = tuple(by_index[i] for i in sorted(by_index))
        self._indices: frozenset[int] = frozenset(by_index)

    @classmethod
    def of(cls, *atoms: Atom) -> "AtomSet":
        return cls(atoms)

    def __contains__(self, a: Atom) -> bool:
        return a.index in self._indices

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._atoms)

    def __len__(self) -> int:
        return len(self._atoms)

    def __bool__(self) -> bool:
        return bool(self._atoms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self._indices == other._indices

    def __hash__(self) -> int:
        return hash(self._indices)

    def __or__(self, other: Iterable[Atom]) -> "AtomSet":
        return AtomSet((*self._atoms, *other))

    def __and__(self, other: Iterable[Atom]) -> "AtomSet":
        keep = other._indices if isinstance(other, AtomSet) else {a.index for a in other}
        return AtomSet(a for a in self._atoms if a.index in keep)

    def __sub__(self, other: Iterable[Atom]) -> "AtomSet":
        drop = other._indices if isinstance(other, AtomSet) else {a.index for a in other}
        return AtomSet(a for a in self._atoms if a.index not in drop)

    def isdisjoint(self, other: "AtomSet") -> bool:
        return self._indices.isdisjoint(other._indices)

    def issubset(self, other: "AtomSet") -> bool:
        return self._indices <= other._indices

    def __repr__(self) -> str:
        return "{" + ", ".join(a.name for a in self._atoms) + "}"


def fresh_atom(avoid: Iterable[Atom]) -> Atom:
    """The atom with least index not occurring in `avoid`."""
    used = {a.index for a in avoid}
    i = 0
    while i in used:
        i += 1
    return Atom(i)


@dataclass(frozen=True)
class Perm:
    """Finite permutation of atoms, stored as its non-fixpoint graph.

    `pairs` is sorted by source index and contains no fixpoints, so equal
    permutations are structurally equal.
    """

    pairs: tuple[tuple[Atom, Atom], ...] = ()

    def __post_init__(self) -> None:
        sources = [a for a, _ in self.pairs]
        images = [b for _, b in self.pairs]
        if sources != sorted(set(sources)):
            raise ValueError("permutation pairs must be sorted by source and unique")
        if {a.index for a in sources} != {b.index for b in images}:
            raise ValueError("permutation must be a bijection on the atoms it moves")
        if any(a == b for a, b in self.pairs):
            raise ValueError("permutation pairs must not contain fixpoints")

    @classmethod
    def from_map(cls, mapping: dict[Atom, Atom]) -> "Perm":
        pairs = tuple(sorted(((a, b) for a, b in mapping.items() if a != b)))
        return cls(pairs)

    @classmethod
    def identity(cls) -> "Perm":
        return cls(())

    def __call__(self, a: Atom) -> Atom:
        for src, img in self.pairs:
            if src == a:
                return img
        return a

    def __matmul__(self, other: "Perm") -> "Perm":
        """Composition: (p @ q)(a) = p(q(a))."""
        domain = {a for a, _ in self.pairs} | {a for a, _ in other.pairs}
        return Perm.from_map({a: self(other(a)) for a in domain})

    def inverse(self) -> "Perm":
        return Perm.from_map({b: a for a, b in self.pairs})

    def moved(self) -> AtomSet:
        return AtomSet(a for a, _ in self.pairs)

    def is_identity(self) -> bool:
        return not self.pairs

    def __str__(self) -> str:
        if not self.pairs:
            return "id"
        return " ".join(f"({a} {b})" for a, b in self.pairs)


def swap(a: Atom, b: Atom) -> Perm:
    """The transposition exchanging a and b."""
    return Perm.from_map({a: b, b: a})


def is_fresh_by_swap(
    a: Atom,
    x: T,
    *,
    act: Callable[[Perm, T], T],
    eq: Callable[[T, T], bool],
    bound: AtomSet,
) -> bool:
    """Decide a # x with one swap against a fresh atom.

    `bound` must overapproximate the support of x; then a is fresh for x
    exactly when swapping it with a brand-new atom leaves x fixed.
    """
    b = fresh_atom(bound | AtomSet.of(a))
    return eq(act(swap(b, a), x), x)


@dataclass(frozen=True)
class Carrier(Generic[T]):
    """Permutation-action contract for one kind of value."""

    name: str
    act: Callable[[Perm, T], T]
    eq: Callable[[T, T], bool]
    support_bound: Callable[[T], AtomSet]

    def is_fresh(self, a: Atom, x: T) -> bool:
        return is_fresh_by_swap(a, x, act=self.act, eq=self.eq, bound=self.support_bound(x))

    def support(self, x: T) -> AtomSet:
        """Minimal support: the bound filtered by per-atom swap tests."""
        return AtomSet(a for a in self.support_bound(x) if not self.is_fresh(a, x))


ATOM_CARRIER: Carrier[Atom] = Carrier(
    name="atoms",
    act=lambda p, a: p(a),
    eq=lambda x, y: x == y,
    support_bound=lambda a: AtomSet.of(a),
)
