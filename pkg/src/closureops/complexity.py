"""Complexity measures for closure operators.

How hard is a classifier to express with primitive parts?  Two counts answer
that for the generators of :mod:`closureops.generators`:

* MNWO — the minimum number of weak orders whose half-space operators
  intersect to f.  It equals the width (largest antichain) of P(f), the
  meet-irreducible closed sets of f, and a minimum chain cover of P(f) turns
  directly into an optimal witness list: each chain, padded with ∅ and X,
  is the closed-set chain of one weak order.

* MNBC — the minimum number of binary classifiers that intersect to f.  It
  equals |B(f)| where B(f) = P(f) ∖ {∅, X}: one classifier per proper
  meet-irreducible, and no fewer can work.

A closed set A is *meet-irreducible* when it is not the intersection of its
strict closed supersets (the ground set X, with no strict supersets, counts).
Every closed set is the intersection of the meet-irreducibles above it, which
is why these sets alone decide both measures.

The profile also records coarser shape statistics of S(f): its width and depth
as a lattice and the number of nonempty closed sets (distinguishable classes).
All witnesses are re-verified through :func:`~closureops.generators.check_generation`
before they are returned.

:func:`oracle_mnwo` and :func:`oracle_mnbc` recompute both measures by brute
force from the definition alone (exact minimum set cover over all candidate
generators), without touching P(f) or chain covers, so tests can compare the
two routes on small ground sets.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .core import ClosureOperator, GroundSet, SubsetMask, Topology
from .errors import GroundSetMismatch, GroundSetTooLarge, WitnessVerificationFailed
from .generators import (
    BinaryClassifier,
    WeakOrder,
    check_generation,
    iter_weak_orders,
)
from .poset import FinitePoset

__all__ = [
    "ORACLE_MAX_ELEMENTS",
    "IrreducibleSet",
    "ComplexityProfile",
    "ComplexityComparison",
    "meet_irreducibles",
    "complexity_profile",
    "more_complex",
    "oracle_mnwo",
    "oracle_mnbc",
]

#: Brute-force oracles enumerate all weak orders on X (75 at four elements,
#: 541 at five) and search subsets; four elements keeps them instant.
ORACLE_MAX_ELEMENTS = 4


@dataclass(frozen=True)
class IrreducibleSet:
    """The meet-irreducible closed sets of a topology.

    Attributes:
        topology: the source topology S(f).
        p_of_f: all meet-irreducibles P(f), canonically sorted.
        b_of_f: the proper meet-irreducibles B(f) = P(f) ∖ {∅, X}.
    """

    topology: Topology
    p_of_f: tuple[SubsetMask, ...]
    b_of_f: tuple[SubsetMask, ...]


def meet_irreducibles(topology: Topology) -> IrreducibleSet:
    """Compute P(f) and B(f) for a topology; see :class:`IrreducibleSet`."""
    full = topology.ground.full_bits
    p: list[SubsetMask] = []
    for a in topology:
        if a.bits == full:
            p.append(a)  # X has no strict supersets; it is never a meet
            continue
        meet = full
        for b in topology:
            if b.bits != a.bits and a.bits & ~b.bits == 0:
                meet &= b.bits
        if meet != a.bits:
            p.append(a)
    b_of_f = tuple(m for m in p if m.bits not in (0, full))
    return IrreducibleSet(topology=topology, p_of_f=tuple(p), b_of_f=b_of_f)


@dataclass(frozen=True)
class ComplexityProfile:
    """The complexity measures of one closure operator, with verified witnesses.

    Attributes:
        mnwo: minimum number of weak orders generating f (= width of P(f)).
        mnbc: minimum number of binary classifiers generating f (= |B(f)|).
        width_s: width of the full closed-set lattice S(f) under inclusion.
        depth_s: longest chain of nonempty closed sets in S(f).
        class_count: number of nonempty closed sets (distinguishable classes).
        weak_order_witness: mnwo weak orders that intersect-generate f.
        binary_witness: mnbc binary classifiers that intersect-generate f.
        irreducibles: P(f) and B(f).
    """

    mnwo: int
    mnbc: int
    width_s: int
    depth_s: int
    class_count: int
    weak_order_witness: tuple[WeakOrder, ...]
    binary_witness: tuple[BinaryClassifier, ...]
    irreducibles: IrreducibleSet


def complexity_profile(f: ClosureOperator) -> ComplexityProfile:
    """Compute both complexity measures of f together with optimal witnesses.

    The weak-order witness comes from a minimum chain cover of P(f): each
    chain is padded with ∅ and X and read as a half-space chain.  The binary
    witness is one classifier per member of B(f).  Both witness lists are
    re-verified with :func:`check_generation`; a failure would be an
    implementation bug and raises :class:`WitnessVerificationFailed`.
    """
    ground = f.ground
    topology = f.closed_sets()
    irreducibles = meet_irreducibles(topology)
    p_poset = FinitePoset.from_masks(irreducibles.p_of_f)
    cover = p_poset.min_chain_cover()
    weak_orders = []
    for chain in cover.chains:
        masks = list(chain)
        if masks[0].bits != 0:
            masks.insert(0, ground.empty)
        if masks[-1].bits != ground.full_bits:
            masks.append(ground.full)
        weak_orders.append(WeakOrder.from_chain(masks))
    binary = tuple(BinaryClassifier(cutoff) for cutoff in irreducibles.b_of_f)
    report = check_generation(f, [w.operator() for w in weak_orders])
    if not (report.generates and report.pointwise_equal):
        raise WitnessVerificationFailed("weak-order witness does not generate f")
    report = check_generation(f, [b.operator() for b in binary])
    if not (report.generates and report.pointwise_equal):
        raise WitnessVerificationFailed("binary witness does not generate f")
    width_s = FinitePoset.from_topology(topology).min_chain_cover().width
    return ComplexityProfile(
        mnwo=cover.width,
        mnbc=len(binary),
        width_s=width_s,
        depth_s=topology.depth(),
        class_count=len(topology) - 1,
        weak_order_witness=tuple(weak_orders),
        binary_witness=binary,
        irreducibles=irreducibles,
    )


@dataclass(frozen=True)
class ComplexityComparison:
    """How two operators' closed-set families relate by inclusion.

    f is *at least as complex* as g when S(g) ⊆ S(f): f can draw every
    distinction g can.  The comparison is a partial order, so two operators
    may be incomparable; the witnesses name a closed set present on one side
    only.

    Attributes:
        f_at_least_g: whether S(g) ⊆ S(f).
        g_at_least_f: whether S(f) ⊆ S(g).
        missing_from_f: a member of S(g) ∖ S(f), if any.
        missing_from_g: a member of S(f) ∖ S(g), if any.
    """

    f_at_least_g: bool
    g_at_least_f: bool
    missing_from_f: SubsetMask | None
    missing_from_g: SubsetMask | None

    @property
    def relation(self) -> str:
        """One of ``"equal"``, ``"f-more-complex"``, ``"g-more-complex"``,
        ``"incomparable"``."""
        if self.f_at_least_g and self.g_at_least_f:
            return "equal"
        if self.f_at_least_g:
            return "f-more-complex"
        if self.g_at_least_f:
            return "g-more-complex"
        return "incomparable"


def more_complex(f: ClosureOperator, g: ClosureOperator) -> ComplexityComparison:
    """Compare two operators on one ground set by S(g) ⊆ S(f) and conversely."""
    if f.ground != g.ground:
        raise GroundSetMismatch("operators live in different ground sets")
    s_f = f.closed_sets()
    s_g = g.closed_sets()
    missing_from_f = next((m for m in s_g if not s_f.contains_bits(m.bits)), None)
    missing_from_g = next((m for m in s_f if not s_g.contains_bits(m.bits)), None)
    return ComplexityComparison(
        f_at_least_g=missing_from_f is None,
        g_at_least_f=missing_from_g is None,
        missing_from_f=missing_from_f,
        missing_from_g=missing_from_g,
    )


def _require_oracle_size(ground: GroundSet) -> None:
    if ground.size > ORACLE_MAX_ELEMENTS:
        raise GroundSetTooLarge(
            f"oracles brute-force all generator subsets and are capped at "
            f"{ORACLE_MAX_ELEMENTS} elements; got {ground.size}"
        )


def _exclusion_pairs(f_images: Sequence[int], full: int) -> list[tuple[int, int]]:
    """All (menu bits, element bit) with the element outside the closure.

    The empty menu is skipped: every closure operator fixes ∅, so those pairs
    hold for any intersection, including the empty one.
    """
    pairs = []
    for bits in range(1, full + 1):
        outside = full & ~f_images[bits]
        while outside:
            x = outside & -outside
            outside ^= x
            pairs.append((bits, x))
    return pairs


def _minimum_generator_count(
    f: ClosureOperator,
    candidates: Sequence[ClosureOperator],
    *,
    allow_empty: bool,
) -> int:
    """Exact minimum number of candidates whose intersection equals f.

    Works straight from the definition: a family generates f iff every member
    dominates f pointwise (g(A) ⊇ f(A) for all A — anything else shrinks the
    intersection below f somewhere) and every exclusion pair (A, x ∉ f(A)) is
    realized by some member.  That is an exact minimum set cover, solved by
    iterative deepening with a fewest-options-first branching rule.
    """
    ground = f.ground
    full = ground.full_bits
    f_images = f.tabulate_bits()
    pairs = _exclusion_pairs(f_images, full)
    pair_index = {pair: i for i, pair in enumerate(pairs)}
    covers: list[int] = []
    for candidate in candidates:
        images = candidate.tabulate_bits()
        if any(f_images[bits] & ~images[bits] for bits in range(full + 1)):
            continue  # does not dominate f; can never appear in a generating family
        mask = 0
        for bits in range(1, full + 1):
            # dominance gives f(A) ⊆ g(A), so everything outside g's closure is
            # an exclusion pair of f
            rest = full & ~images[bits]
            while rest:
                x = rest & -rest
                rest ^= x
                mask |= 1 << pair_index[(bits, x)]
        covers.append(mask)
    universe = (1 << len(pairs)) - 1
    if universe == 0:
        if allow_empty:
            return 0
        if not covers:
            raise WitnessVerificationFailed("no candidate dominates the operator")
        return 1  # any dominating candidate already equals f here

    per_pair: list[list[int]] = [[] for _ in pairs]
    for c, mask in enumerate(covers):
        rest = mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest ^= rest & -rest
            per_pair[i].append(c)

    def can_cover(uncovered: int, budget: int) -> bool:
        if not uncovered:
            return True
        if budget == 0:
            return False
        # fail-first: branch on the uncovered pair with fewest covering options
        best_i = -1
        best_options: list[int] = []
        rest = uncovered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest ^= rest & -rest
            options = [c for c in per_pair[i] if covers[c] & uncovered]
            if best_i < 0 or len(options) < len(best_options):
                best_i, best_options = i, options
                if not options:
                    return False
        return any(
            can_cover(uncovered & ~covers[c], budget - 1) for c in best_options
        )

    lower = 0 if allow_empty else 1
    for k in range(lower, len(covers) + 1):
        if can_cover(universe, k):
            return k
    raise WitnessVerificationFailed("no candidate subset generates the operator")


def oracle_mnwo(f: ClosureOperator) -> int:
    """MNWO by brute force (definition only; capped at four elements).

    Enumerates every weak order on X and finds the smallest family whose
    half-space operators intersect to f.  At least one weak order is always
    needed: the empty intersection is the trivial operator, which the single
    one-class weak order already generates.
    """
    _require_oracle_size(f.ground)
    candidates = [w.operator() for w in iter_weak_orders(f.ground)]
    return _minimum_generator_count(f, candidates, allow_empty=False)


def oracle_mnbc(f: ClosureOperator) -> int:
    """MNBC by brute force (definition only; capped at four elements).

    Enumerates every proper nonempty cutoff and finds the smallest family of
    binary classifiers that intersects to f; zero classifiers (the empty
    intersection) account for the trivial operator.
    """
    _require_oracle_size(f.ground)
    ground = f.ground
    candidates = [
        BinaryClassifier(ground.mask(bits)).operator()
        for bits in range(1, ground.full_bits)
    ]
    return _minimum_generator_count(f, candidates, allow_empty=True)
