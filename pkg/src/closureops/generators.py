"""Weak orders, binary classifiers, and generation by intersection.

Two families of primitive closure operators generate everything:

* A weak order ⪰ on X (an ordered partition into indifference classes, worst
  class first) induces the half-space operator f_⪰ that sends a nonempty menu
  A to the union of all classes weakly below A's best class — equivalently the
  smallest prefix of classes containing A, so S(f_⪰) is the chain
  {∅, C_1, C_1 ∪ C_2, …, X}.  Conversely every topology that is a single chain
  arises this way from exactly one weak order.

* A binary classifier with proper nonempty cutoff C sends ∅ to ∅, any A ⊆ C to
  C, and everything else to X, so S(f_C) = {∅, C, X}.

A family g_1, …, g_k *generates* f when f(A) = ⋂_i g_i(A) for every A.
:func:`check_generation` tests this through two structural conditions — every
S(g_i) ⊆ S(f), and every x ∉ A ∈ S(f) is excluded by some g_i — and also
cross-checks the pointwise intersection directly; the two routes always agree,
and the report keeps them separate so tests can confirm it.

The intersection of an *empty* family is, by the usual convention, the trivial
operator (∅ ↦ ∅, everything else ↦ X); an empty generator list is therefore
accepted exactly for the trivial operator.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import ClosureOperator, GroundSet, SubsetMask, Topology
from .errors import BadEndpoints, GroundSetMismatch, NotAChain

__all__ = [
    "WeakOrder",
    "BinaryClassifier",
    "GenerationReport",
    "intersect_generate",
    "check_generation",
    "is_single_chain",
    "iter_weak_orders",
]


@dataclass(frozen=True, repr=False)
class WeakOrder:
    """A weak order on the ground set: an ordered partition, worst class first.

    ``classes[0]`` holds the least-preferred elements and ``classes[-1]`` the
    most-preferred; elements within one class are indifferent.  The classes
    must be nonempty, pairwise disjoint, and cover the ground set.

    Attributes:
        ground: the underlying ground set.
        classes: the indifference classes, worst first.
    """

    ground: GroundSet
    classes: tuple[SubsetMask, ...]

    def __post_init__(self) -> None:
        classes = tuple(self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise ValueError("a weak order needs at least one class")
        union = 0
        for c in classes:
            if c.ground != self.ground:
                raise GroundSetMismatch("class lives in a different ground set")
            if not c.bits:
                raise ValueError("indifference classes must be nonempty")
            if union & c.bits:
                raise ValueError("indifference classes must be disjoint")
            union |= c.bits
        if union != self.ground.full_bits:
            raise ValueError("indifference classes must cover the ground set")

    @classmethod
    def from_chain(cls, chain: Sequence[SubsetMask]) -> WeakOrder:
        """The weak order whose half-space chain is ∅ = B_0 ⊂ B_1 ⊂ … ⊂ B_k = X.

        The classes are the successive differences B_1, B_2 ∖ B_1, …, worst
        first.  Raises :class:`BadEndpoints` unless the chain starts at ∅ and
        ends at X, and :class:`NotAChain` unless it is strictly increasing.
        """
        chain = tuple(chain)
        if not chain:
            raise BadEndpoints("chain must run from ∅ to the full ground set")
        ground = chain[0].ground
        for m in chain:
            if m.ground != ground:
                raise GroundSetMismatch("chain links live in different ground sets")
        if chain[0].bits != 0 or chain[-1].bits != ground.full_bits:
            raise BadEndpoints("chain must run from ∅ to the full ground set")
        classes = []
        for lower, upper in zip(chain, chain[1:]):
            if not lower < upper:
                raise NotAChain(
                    f"{lower.label()} is not a strict subset of {upper.label()}"
                )
            classes.append(upper - lower)
        return cls(ground, tuple(classes))

    @classmethod
    def from_utilities(
        cls, ground: GroundSet, utilities: Mapping[str, Fraction | int]
    ) -> WeakOrder:
        """Group elements by numeric utility, ascending (worst class first)."""
        missing = [name for name in ground if name not in utilities]
        if missing:
            raise ValueError(f"no utility given for {missing[0]!r}")
        levels = sorted({Fraction(utilities[name]) for name in ground})
        classes = [
            ground.subset(n for n in ground if Fraction(utilities[n]) == level)
            for level in levels
        ]
        return cls(ground, tuple(classes))

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_index(self, name: str) -> int:
        """0-based class index of an element (0 = worst)."""
        bit = 1 << self.ground.index(name)
        for i, c in enumerate(self.classes):
            if c.bits & bit:
                return i
        raise AssertionError("unreachable: classes cover the ground set")

    def at_least(self, a: str, b: str) -> bool:
        """Whether a ⪰ b."""
        return self.class_index(a) >= self.class_index(b)

    def support_set(self, menu: SubsetMask) -> SubsetMask:
        """The ⪰-best elements of a menu (∅ for the empty menu)."""
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        for c in reversed(self.classes):
            best = c.bits & menu.bits
            if best:
                return self.ground.mask(best)
        return self.ground.empty

    def half_space(self, menu: SubsetMask) -> SubsetMask:
        """Everything weakly below the menu's best class; the closure f_⪰(A).

        The empty menu maps to ∅; a nonempty menu maps to the union of classes
        up to and including the highest class the menu touches.
        """
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        if not menu.bits:
            return self.ground.empty
        cut = 0
        for i, c in enumerate(self.classes):
            if c.bits & menu.bits:
                cut = i
        union = 0
        for c in self.classes[: cut + 1]:
            union |= c.bits
        return self.ground.mask(union)

    def topology(self) -> Topology:
        """The chain of closed sets {∅, C_1, C_1 ∪ C_2, …, X}."""
        bits = [0]
        acc = 0
        for c in self.classes:
            acc |= c.bits
            bits.append(acc)
        return Topology.from_bits(self.ground, bits)

    def operator(self) -> ClosureOperator:
        """The half-space closure operator f_⪰."""
        return self.topology().operator()

    def __repr__(self) -> str:
        parts = " < ".join(c.label() for c in self.classes)
        return f"WeakOrder({parts})"


@dataclass(frozen=True, repr=False)
class BinaryClassifier:
    """A two-outcome classifier with proper nonempty cutoff set C.

    Its closure operator sends ∅ to ∅, any nonempty A ⊆ C to C, and everything
    else to X, so the closed sets are exactly {∅, C, X}.  It coincides with the
    half-space operator of the two-class weak order (C worst, X ∖ C best).

    Attributes:
        cutoff: the cutoff set C (must be a proper nonempty subset).
    """

    cutoff: SubsetMask

    def __post_init__(self) -> None:
        if not self.cutoff.bits:
            raise ValueError("cutoff must be nonempty")
        if self.cutoff.bits == self.cutoff.ground.full_bits:
            raise ValueError("cutoff must be a proper subset of the ground set")

    @property
    def ground(self) -> GroundSet:
        return self.cutoff.ground

    def closure(self, menu: SubsetMask) -> SubsetMask:
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        if not menu.bits:
            return self.ground.empty
        if menu.bits & ~self.cutoff.bits == 0:
            return self.cutoff
        return self.ground.full

    def as_weak_order(self) -> WeakOrder:
        """The two-class weak order (cutoff worst) with the same operator."""
        return WeakOrder(self.ground, (self.cutoff, self.cutoff.complement()))

    def topology(self) -> Topology:
        return Topology.from_bits(
            self.ground, (0, self.cutoff.bits, self.ground.full_bits)
        )

    def operator(self) -> ClosureOperator:
        return self.topology().operator()

    def __repr__(self) -> str:
        return f"BinaryClassifier(cutoff={self.cutoff.label()})"


def _trivial_images(ground: GroundSet) -> tuple[int, ...]:
    full = ground.full_bits
    return tuple(0 if bits == 0 else full for bits in range(full + 1))


def intersect_generate(
    ground: GroundSet, operators: Sequence[ClosureOperator]
) -> ClosureOperator:
    """The pointwise intersection A ↦ ⋂_i g_i(A) of a family of operators.

    Always a closure operator again; its closed sets are the intersection
    closure of the union of the S(g_i).  The empty family yields the trivial
    operator by the empty-intersection convention.
    """
    for g in operators:
        if g.ground != ground:
            raise GroundSetMismatch("generator lives in a different ground set")
    if not operators:
        return ClosureOperator._from_images(ground, _trivial_images(ground))
    tables = [g.tabulate_bits() for g in operators]
    size = ground.full_bits + 1
    images = []
    for bits in range(size):
        img = tables[0][bits]
        for t in tables[1:]:
            img &= t[bits]
        images.append(img)
    return ClosureOperator._from_images(ground, tuple(images))


@dataclass(frozen=True)
class GenerationReport:
    """Outcome of the two-condition test for f = ⋂_i g_i.

    Condition 1: every closed set of every generator is closed under f.
    Condition 2: for every nonempty closed set A of f and every x ∉ A, some
    generator excludes x from its closure of A.  Both conditions together are
    equivalent to the pointwise equation; :attr:`pointwise_equal` records the
    direct check of that equation so the two routes can be compared.

    Attributes:
        condition1_witnesses: pairs (generator position, closed set ∉ S(f)).
        condition2_witnesses: pairs (closed set A, element x) with no generator
            excluding x from the closure of A.
        pointwise_equal: whether ⋂_i g_i literally equals f on every subset.
    """

    condition1_witnesses: tuple[tuple[int, SubsetMask], ...]
    condition2_witnesses: tuple[tuple[SubsetMask, str], ...]
    pointwise_equal: bool

    @property
    def condition1_ok(self) -> bool:
        return not self.condition1_witnesses

    @property
    def condition2_ok(self) -> bool:
        return not self.condition2_witnesses

    @property
    def generates(self) -> bool:
        return self.condition1_ok and self.condition2_ok


def check_generation(
    f: ClosureOperator, generators: Sequence[ClosureOperator]
) -> GenerationReport:
    """Test whether the generators intersect to f; see :class:`GenerationReport`."""
    ground = f.ground
    for g in generators:
        if g.ground != ground:
            raise GroundSetMismatch("generator lives in a different ground set")
    topology = f.closed_sets()
    condition1: list[tuple[int, SubsetMask]] = []
    for position, g in enumerate(generators):
        for closed in g.closed_sets():
            if not topology.contains_bits(closed.bits):
                condition1.append((position, closed))
    tables = [g.tabulate_bits() for g in generators]
    condition2: list[tuple[SubsetMask, str]] = []
    full = ground.full_bits
    for closed in topology:
        if not closed.bits:
            continue
        outside = full & ~closed.bits
        while outside:
            x = outside & -outside
            outside ^= x
            if all(t[closed.bits] & x for t in tables):
                name = ground.elements[x.bit_length() - 1]
                condition2.append((closed, name))
    f_images = f.tabulate_bits()
    intersection = intersect_generate(ground, generators)
    pointwise = intersection.tabulate_bits() == f_images
    return GenerationReport(
        condition1_witnesses=tuple(condition1),
        condition2_witnesses=tuple(condition2),
        pointwise_equal=pointwise,
    )


def is_single_chain(topology: Topology) -> WeakOrder | None:
    """The weak order behind a topology, if its closed sets form one chain.

    Returns None when two closed sets are incomparable.  On a chain the
    reconstruction inverts :meth:`WeakOrder.topology` exactly.
    """
    closed = topology.closed  # canonical order extends inclusion
    for lower, upper in zip(closed, closed[1:]):
        if not lower < upper:
            return None
    return WeakOrder.from_chain(closed)


def iter_weak_orders(ground: GroundSet) -> Iterator[WeakOrder]:
    """All weak orders on the ground set, in a fixed deterministic order.

    Enumerates ordered set partitions by choosing the worst class first
    (nonempty subsets in ascending mask order), then recursing on the rest.
    The count is the Fubini number of |X| (75 for four elements).
    """

    def split(rest: int) -> Iterator[tuple[int, ...]]:
        if not rest:
            yield ()
            return
        # iterate nonempty submasks of rest in ascending numeric order
        sub = rest
        choices = []
        while sub:
            choices.append(sub)
            sub = (sub - 1) & rest
        for worst in reversed(choices):
            for tail in split(rest & ~worst):
                yield (worst, *tail)

    for shape in split(ground.full_bits):
        yield WeakOrder(ground, tuple(ground.mask(b) for b in shape))
