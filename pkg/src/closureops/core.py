"""Ground sets, subset masks, closure operators, and closed-set topologies.

A closure operator on a finite ground set X is a map f: 2^X -> 2^X that is
extensive (A ⊆ f(A), with f(∅) = ∅), idempotent (f(f(A)) = f(A)) and monotone
(A ⊆ B implies f(A) ⊆ f(B)).  Its closed sets S(f) = {A : f(A) = A} always form
an intersection-closed family containing ∅ and X, and conversely every such
family S induces the unique closure operator

    f_S(A) = ⋂ {B ∈ S : A ⊆ B},

so closure operators and these families ("topologies" below, by loose analogy)
are two encodings of the same object.  This module provides both encodings,
conversion in both directions, closure-axiom validation with complete witness
reports, and the lattice structure of a topology (meet = intersection,
join = closure of the union, depth = longest chain of nonempty closed sets).

Subsets are machine words: a :class:`SubsetMask` stores one bit per element of
its :class:`GroundSet`, which caps ground sets at 20 elements and makes the
canonical ordering of subsets (ascending numeric mask value) a linear extension
of inclusion.  All values are immutable; all functions are pure.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .errors import (
    ForeignMask,
    GroundSetMismatch,
    GroundSetTooLarge,
    InvalidClosureTable,
    MissingEntry,
    MissingTopBottom,
    NotClosed,
    NotIntersectionClosed,
)

__all__ = [
    "MAX_ELEMENTS",
    "GroundSet",
    "SubsetMask",
    "Topology",
    "ValidationReport",
    "ClosureOperator",
    "validate_closure",
    "operator_from_topology",
]

#: Hard cap on ground-set size: every algorithm here enumerates subsets of X at
#: least once, and one machine word per subset keeps worst cases tractable.
MAX_ELEMENTS = 20


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite set of named elements.

    The element order is fixed at construction and determines bit positions in
    every :class:`SubsetMask` over this ground set.  Two ground sets compare
    equal iff they list the same names in the same order.

    Attributes:
        elements: the element names, in bit-position order.
    """

    elements: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValueError("ground set must be nonempty")
        if len(elements) > MAX_ELEMENTS:
            raise GroundSetTooLarge(
                f"ground set has {len(elements)} elements; the cap is {MAX_ELEMENTS}"
            )
        index: dict[str, int] = {}
        for i, name in enumerate(elements):
            if not isinstance(name, str) or not name:
                raise ValueError(f"element names must be nonempty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate element name {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_bits(self) -> int:
        """Bit pattern of the full ground set."""
        return (1 << len(self.elements)) - 1

    @property
    def empty(self) -> SubsetMask:
        return SubsetMask(self, 0)

    @property
    def full(self) -> SubsetMask:
        return SubsetMask(self, self.full_bits)

    def index(self, name: str) -> int:
        """Bit position of ``name``, or :class:`ForeignMask` if unknown."""
        try:
            return self._index[name]
        except KeyError:
            raise ForeignMask(f"element {name!r} is not in the ground set") from None

    def mask(self, bits: int) -> SubsetMask:
        """Wrap a raw bit pattern as a subset of this ground set."""
        return SubsetMask(self, bits)

    def subset(self, names: Iterable[str]) -> SubsetMask:
        """The subset holding exactly ``names`` (order and repeats ignored)."""
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return SubsetMask(self, bits)

    def singleton(self, name: str) -> SubsetMask:
        return SubsetMask(self, 1 << self.index(name))

    def subsets(self) -> Iterator[SubsetMask]:
        """All 2^|X| subsets in canonical (ascending mask) order."""
        for bits in range(self.full_bits + 1):
            yield SubsetMask(self, bits)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, name: object) -> bool:
        return name in self._index


@dataclass(frozen=True, repr=False)
class SubsetMask:
    """An immutable subset of a :class:`GroundSet`, stored as a bit pattern.

    Bit i is set iff element i (in the ground set's order) is a member.  The
    comparison operators implement the inclusion partial order, like
    :class:`frozenset`; use :attr:`bits` as a sort key for the canonical total
    order.  Set algebra (``&``, ``|``, ``-``) requires both operands to share
    one ground set and raises :class:`GroundSetMismatch` otherwise.

    Attributes:
        ground: the ground set this subset lives in.
        bits: the bit pattern.
    """

    ground: GroundSet
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.ground.full_bits:
            raise ForeignMask(
                f"bit pattern {self.bits:#x} does not fit a ground set of "
                f"{self.ground.size} elements"
            )

    def _check(self, other: SubsetMask) -> None:
        if not isinstance(other, SubsetMask):
            raise TypeError(f"expected a SubsetMask, got {type(other).__name__}")
        if other.ground != self.ground:
            raise GroundSetMismatch("subsets live in different ground sets")

    def members(self) -> tuple[str, ...]:
        """Member names in ground-set order."""
        return tuple(
            name for i, name in enumerate(self.ground.elements) if self.bits >> i & 1
        )

    def label(self) -> str:
        """Human-readable set notation: ``∅`` or ``{a,b}``."""
        if not self.bits:
            return "∅"
        return "{" + ",".join(self.members()) + "}"

    def complement(self) -> SubsetMask:
        return SubsetMask(self.ground, self.ground.full_bits & ~self.bits)

    def __and__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.ground, self.bits & other.bits)

    def __or__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.ground, self.bits | other.bits)

    def __sub__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.ground, self.bits & ~other.bits)

    def __le__(self, other: SubsetMask) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: SubsetMask) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: SubsetMask) -> bool:
        self._check(other)
        return other.bits & ~self.bits == 0

    def __gt__(self, other: SubsetMask) -> bool:
        return self >= other and self.bits != other.bits

    def __contains__(self, name: object) -> bool:
        if not isinstance(name, str) or name not in self.ground:
            return False
        return self.bits >> self.ground.index(name) & 1 == 1

    def __iter__(self) -> Iterator[str]:
        return iter(self.members())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"SubsetMask({self.label()})"


def _sorted_unique(masks: Iterable[SubsetMask]) -> tuple[SubsetMask, ...]:
    by_bits: dict[int, SubsetMask] = {}
    for m in masks:
        by_bits[m.bits] = m
    return tuple(by_bits[b] for b in sorted(by_bits))


@dataclass(frozen=True, repr=False)
class Topology:
    """An intersection-closed family of subsets containing ∅ and X.

    This is exactly the data of a closure operator in closed-set form: the
    closed sets of any closure operator form such a family, and
    :meth:`closure_of` recovers the operator as the map to the smallest closed
    superset.  Construction normalizes the family to canonical (ascending mask)
    order, drops duplicates, and validates the invariants eagerly.

    Attributes:
        ground: the underlying ground set.
        closed: the closed sets, sorted ascending by mask value.
    """

    ground: GroundSet
    closed: tuple[SubsetMask, ...]
    _bitset: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for m in self.closed:
            if m.ground != self.ground:
                raise GroundSetMismatch("closed set lives in a different ground set")
        closed = _sorted_unique(self.closed)
        object.__setattr__(self, "closed", closed)
        bitset = frozenset(m.bits for m in closed)
        object.__setattr__(self, "_bitset", bitset)
        if 0 not in bitset:
            raise MissingTopBottom("the empty set must be closed")
        if self.ground.full_bits not in bitset:
            raise MissingTopBottom("the full ground set must be closed")
        for i, a in enumerate(closed):
            for b in closed[i + 1 :]:
                if a.bits & b.bits not in bitset:
                    raise NotIntersectionClosed(a, b)

    @classmethod
    def from_bits(cls, ground: GroundSet, bits: Iterable[int]) -> Topology:
        return cls(ground, tuple(SubsetMask(ground, b) for b in bits))

    def __len__(self) -> int:
        return len(self.closed)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.closed)

    def __contains__(self, mask: object) -> bool:
        if not isinstance(mask, SubsetMask):
            return False
        return mask.ground == self.ground and mask.bits in self._bitset

    def contains_bits(self, bits: int) -> bool:
        return bits in self._bitset

    def closure_of(self, mask: SubsetMask) -> SubsetMask:
        """The smallest closed superset of ``mask``.

        Well defined because the family is intersection-closed and contains X;
        since ascending mask order extends inclusion, the first closed superset
        encountered in canonical order is the smallest.
        """
        if mask.ground != self.ground:
            raise GroundSetMismatch("mask lives in a different ground set")
        return self.ground.mask(self.closure_bits(mask.bits))

    def closure_bits(self, bits: int) -> int:
        for m in self.closed:
            if bits & ~m.bits == 0:
                return m.bits
        raise AssertionError("unreachable: the full ground set is closed")

    def meet(self, a: SubsetMask, b: SubsetMask) -> SubsetMask:
        """Lattice meet of two closed sets: their intersection."""
        self._require_closed(a)
        self._require_closed(b)
        return a & b

    def join(self, a: SubsetMask, b: SubsetMask) -> SubsetMask:
        """Lattice join of two closed sets: the closure of their union."""
        self._require_closed(a)
        self._require_closed(b)
        return self.closure_of(a | b)

    def _require_closed(self, mask: SubsetMask) -> None:
        if mask not in self:
            raise NotClosed(f"{mask.label()} is not a closed set of this topology")

    def depth(self) -> int:
        """Length of the longest chain of *nonempty* closed sets.

        A single-chain topology {∅, B_1 ⊂ … ⊂ B_k = X} has depth k; the trivial
        topology {∅, X} has depth 1.
        """
        nonempty = [m.bits for m in self.closed if m.bits]
        longest: dict[int, int] = {}
        for b in nonempty:  # ascending order: all proper subsets come first
            best = 0
            for a in nonempty:
                if a == b:
                    break
                if a & ~b == 0:
                    best = max(best, longest[a])
            longest[b] = best + 1
        return max(longest.values())

    def operator(self) -> ClosureOperator:
        """The closure operator whose closed sets are exactly this family."""
        return ClosureOperator._from_topology(self)

    def __repr__(self) -> str:
        sets = ", ".join(m.label() for m in self.closed)
        return f"Topology([{sets}])"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of closure-axiom validation of an operator table.

    Collects *all* violations rather than stopping at the first, so a report is
    a complete diagnosis: the table is a closure operator iff :attr:`ok`.
    Monotonicity witnesses are adjacent pairs (A, A ∪ {x}); if monotonicity
    fails for any pair A ⊆ B it fails for an adjacent pair along a chain from
    A to B, so adjacent pairs suffice to detect every failure.

    Attributes:
        ground: the ground set of the validated table.
        extensivity: subsets A with A ⊄ f(A).
        idempotence: subsets A with f(f(A)) ≠ f(A).
        monotonicity: adjacent pairs (A, B) with A ⊂ B but f(A) ⊄ f(B).
        fixes_empty: whether f(∅) = ∅.
    """

    ground: GroundSet
    extensivity: tuple[SubsetMask, ...]
    idempotence: tuple[SubsetMask, ...]
    monotonicity: tuple[tuple[SubsetMask, SubsetMask], ...]
    fixes_empty: bool

    @property
    def ok(self) -> bool:
        return (
            self.fixes_empty
            and not self.extensivity
            and not self.idempotence
            and not self.monotonicity
        )

    def summary(self) -> list[str]:
        """One human-readable line per violated axiom."""
        lines: list[str] = []
        if not self.fixes_empty:
            lines.append("f(∅) ≠ ∅")
        if self.extensivity:
            lines.append(
                "extensivity fails at "
                + ", ".join(m.label() for m in self.extensivity)
            )
        if self.idempotence:
            lines.append(
                "idempotence fails at "
                + ", ".join(m.label() for m in self.idempotence)
            )
        if self.monotonicity:
            lines.append(
                "monotonicity fails at "
                + ", ".join(f"({a.label()}, {b.label()})" for a, b in self.monotonicity)
            )
        if not lines:
            lines.append("all closure axioms hold")
        return lines


def _images_from_table(
    ground: GroundSet, table: Mapping[SubsetMask, SubsetMask]
) -> tuple[int, ...]:
    """Flatten a mask-keyed table into images indexed by bit pattern."""
    size = ground.full_bits + 1
    images: list[int] = [-1] * size
    for key, value in table.items():
        if key.ground != ground or value.ground != ground:
            raise ForeignMask(
                f"table entry {key.label()} -> {value.label()} does not live in the "
                f"stated ground set"
            )
        images[key.bits] = value.bits
    for bits in range(size):
        if images[bits] == -1:
            raise MissingEntry(
                f"table lacks an image for {ground.mask(bits).label()}"
            )
    return tuple(images)


def validate_closure(
    ground: GroundSet, table: Mapping[SubsetMask, SubsetMask]
) -> ValidationReport:
    """Check a full operator table against the closure axioms.

    The table must have exactly one entry per subset of the ground set
    (:class:`MissingEntry` otherwise) and every mask must live in ``ground``
    (:class:`ForeignMask` otherwise).  The returned report lists every violated
    axiom with concrete witnesses; see :class:`ValidationReport`.
    """
    images = _images_from_table(ground, table)
    return _validate_images(ground, images)


def _validate_images(ground: GroundSet, images: tuple[int, ...]) -> ValidationReport:
    full = ground.full_bits
    extensivity: list[SubsetMask] = []
    idempotence: list[SubsetMask] = []
    monotonicity: list[tuple[SubsetMask, SubsetMask]] = []
    for bits in range(full + 1):
        img = images[bits]
        if bits & ~img:
            extensivity.append(ground.mask(bits))
        if images[img] != img:
            idempotence.append(ground.mask(bits))
        rest = full & ~bits
        while rest:
            x = rest & -rest
            rest ^= x
            if img & ~images[bits | x]:
                monotonicity.append((ground.mask(bits), ground.mask(bits | x)))
    return ValidationReport(
        ground=ground,
        extensivity=tuple(extensivity),
        idempotence=tuple(idempotence),
        monotonicity=tuple(monotonicity),
        fixes_empty=images[0] == 0,
    )


class ClosureOperator:
    """A closure operator f: 2^X -> 2^X on a finite ground set.

    Instances are immutable and come in two storage variants with identical
    behavior: table-backed (an explicit image for every subset, validated at
    construction) and topology-backed (images computed as smallest closed
    supersets).  Equality is pointwise over all of 2^X, regardless of variant.

    Call the operator like a function: ``f(mask)`` returns the closure.
    """

    __slots__ = ("ground", "_images", "_topology")

    def __init__(self, ground: GroundSet, images, topology) -> None:
        self.ground = ground
        self._images: tuple[int, ...] | None = images
        self._topology: Topology | None = topology

    @classmethod
    def from_table(
        cls, ground: GroundSet, table: Mapping[SubsetMask, SubsetMask]
    ) -> ClosureOperator:
        """Build a table-backed operator, validating the closure axioms.

        Raises :class:`InvalidClosureTable` (carrying the full
        :class:`ValidationReport`) if any axiom fails.
        """
        images = _images_from_table(ground, table)
        report = _validate_images(ground, images)
        if not report.ok:
            raise InvalidClosureTable(report)
        return cls(ground, images, None)

    @classmethod
    def _from_images(cls, ground: GroundSet, images: tuple[int, ...]) -> ClosureOperator:
        """Trusted constructor for images known to satisfy the axioms."""
        return cls(ground, images, None)

    @classmethod
    def _from_topology(cls, topology: Topology) -> ClosureOperator:
        return cls(topology.ground, None, topology)

    @property
    def is_table_backed(self) -> bool:
        return self._images is not None

    def __call__(self, mask: SubsetMask) -> SubsetMask:
        if mask.ground != self.ground:
            raise GroundSetMismatch("argument lives in a different ground set")
        return self.ground.mask(self.image_bits(mask.bits))

    def image_bits(self, bits: int) -> int:
        """Closure of a raw bit pattern (fast path for inner loops)."""
        if self._images is not None:
            return self._images[bits]
        assert self._topology is not None
        return self._topology.closure_bits(bits)

    def tabulate_bits(self) -> tuple[int, ...]:
        """All images, indexed by subset bit pattern."""
        if self._images is not None:
            return self._images
        assert self._topology is not None
        topology = self._topology
        return tuple(
            topology.closure_bits(bits) for bits in range(self.ground.full_bits + 1)
        )

    def table(self) -> dict[SubsetMask, SubsetMask]:
        """The operator as an explicit mask-keyed table, in canonical order."""
        return {
            self.ground.mask(bits): self.ground.mask(img)
            for bits, img in enumerate(self.tabulate_bits())
        }

    def closed_sets(self) -> Topology:
        """The topology S(f) = {A : f(A) = A} of this operator."""
        if self._topology is not None:
            return self._topology
        assert self._images is not None
        fixed = [bits for bits, img in enumerate(self._images) if bits == img]
        return Topology.from_bits(self.ground, fixed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosureOperator):
            return NotImplemented
        if self.ground != other.ground:
            return False
        return self.tabulate_bits() == other.tabulate_bits()

    __hash__ = None  # pointwise equality is too expensive for hashing

    def __repr__(self) -> str:
        kind = "table" if self.is_table_backed else "topology"
        return (
            f"ClosureOperator({kind}-backed on "
            f"{{{','.join(self.ground.elements)}}})"
        )


def operator_from_topology(topology: Topology) -> ClosureOperator:
    """The unique closure operator whose closed sets are ``topology``.

    This is the smallest-closed-superset map A ↦ ⋂{B ∈ S : A ⊆ B}; together
    with :meth:`ClosureOperator.closed_sets` it establishes the bijection
    between closure operators and intersection-closed families containing
    ∅ and X.
    """
    return topology.operator()
