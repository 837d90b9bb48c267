"""Menu preferences over subsets and their state-space representations.

A menu preference assigns an exact rational utility U(A) to every nonempty
menu A ⊆ X (a value for ∅ may be supplied but plays no mathematical role).
Two axioms make a preference a preference *for flexibility*:

* flexibility: B ⊆ A implies U(A) ≥ U(B);
* ordinal submodularity: U(A ∪ B) = U(A) implies U(A ∪ B ∪ C) = U(A ∪ C).

Under these axioms the *Kreps operator*

    f(A) = ⋃ {B : U(A ∪ B) = U(A)},        f(∅) = ∅,

is a closure operator, the preference depends only on closures
(U(A) = U(f(A)), "respects" f), indifference is exactly closure containment
(U(A ∪ B) = U(A) ⟺ f(B) ⊆ f(A)), and strictly larger closures are strictly
better.  This module checks the axioms with complete witness reports, builds
the Kreps operator with those consequences verified, and constructs two
state-space representations:

* :func:`kreps_representation` — a minimal set of weak-order states (one per
  chain of a minimum chain cover of P(f), so exactly MNWO states) with
  state utilities U(a, s) = 1-based indifference-class index, a signature
  σ(A) = (max_{a∈A} U(a, s))_s per menu, and a strictly monotone aggregator
  ranking achieved signatures; U(A) ≥ U(B) iff rank σ(A) ≥ rank σ(B).

* :func:`additive_representation` — for any closure operator f the preference
  respects: Möbius inversion of U over the closed sets under reversed
  inclusion yields weights h with U(A) = Σ{h(B) : A ⊆ B ∈ S(f)}; splitting
  h = h⁺ − h⁻ gives 2·(|S(f)|−1) states, each carrying a closed set B and a
  per-element utility (−weight inside B, 0 outside), whose
  sum-of-maxes evaluation reproduces U exactly — in exact rational arithmetic.

Everything is verified at construction; verification failures for
mathematically guaranteed facts raise
:class:`~closureops.errors.WitnessVerificationFailed` (an implementation bug),
while user-facing failures raise :class:`~closureops.errors.AxiomsViolated` or
:class:`~closureops.errors.DoesNotRespect` with witnesses.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .complexity import complexity_profile
from .core import ClosureOperator, GroundSet, SubsetMask, _validate_images
from .errors import (
    AxiomsViolated,
    DoesNotRespect,
    GroundSetMismatch,
    WitnessVerificationFailed,
)
from .generators import WeakOrder
from .poset import FinitePoset

__all__ = [
    "MenuPreference",
    "AxiomReport",
    "KrepsRepresentation",
    "AdditiveState",
    "AdditiveRepresentation",
    "check_axioms",
    "kreps_operator",
    "respects",
    "kreps_representation",
    "additive_representation",
]


def _as_fraction(value: Fraction | int | str) -> Fraction:
    if isinstance(value, float):
        raise TypeError("utilities must be exact: pass Fraction, int, or str")
    return Fraction(value)


@dataclass(frozen=True, repr=False)
class MenuPreference:
    """Exact rational utilities over the nonempty menus of a ground set.

    Attributes:
        ground: the underlying ground set.
        values: utilities indexed by menu bit pattern; index 0 (the empty
            menu) may be None, every other index holds a Fraction.
    """

    ground: GroundSet
    values: tuple[Fraction | None, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.ground.full_bits + 1:
            raise ValueError("one utility required per menu")
        for bits, value in enumerate(self.values):
            if bits and not isinstance(value, Fraction):
                raise ValueError(
                    f"missing or inexact utility for menu "
                    f"{self.ground.mask(bits).label()}"
                )

    @classmethod
    def from_utilities(
        cls,
        ground: GroundSet,
        utilities: Mapping[SubsetMask, Fraction | int | str],
    ) -> MenuPreference:
        """Build from a mask-keyed map covering every nonempty menu."""
        values: list[Fraction | None] = [None] * (ground.full_bits + 1)
        for menu, value in utilities.items():
            if menu.ground != ground:
                raise GroundSetMismatch("menu lives in a different ground set")
            values[menu.bits] = _as_fraction(value)
        return cls(ground, tuple(values))

    def utility(self, menu: SubsetMask) -> Fraction:
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        value = self.values[menu.bits]
        if value is None:
            raise ValueError("no utility was supplied for the empty menu")
        return value

    def weakly_prefers(self, a: SubsetMask, b: SubsetMask) -> bool:
        return self.utility(a) >= self.utility(b)

    def strictly_prefers(self, a: SubsetMask, b: SubsetMask) -> bool:
        return self.utility(a) > self.utility(b)

    def indifferent(self, a: SubsetMask, b: SubsetMask) -> bool:
        return self.utility(a) == self.utility(b)

    def __repr__(self) -> str:
        return (
            f"MenuPreference({2 ** self.ground.size - 1} menus on "
            f"{{{','.join(self.ground.elements)}}})"
        )


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the two menu axioms, with complete witness lists.

    Attributes:
        flexibility_witnesses: pairs (A, B) with B ⊆ A but U(B) > U(A).
        submodularity_witnesses: triples (A, B, C) with U(A ∪ B) = U(A) but
            U(A ∪ B ∪ C) ≠ U(A ∪ C).
    """

    flexibility_witnesses: tuple[tuple[SubsetMask, SubsetMask], ...]
    submodularity_witnesses: tuple[tuple[SubsetMask, SubsetMask, SubsetMask], ...]

    @property
    def flexibility_ok(self) -> bool:
        return not self.flexibility_witnesses

    @property
    def submodularity_ok(self) -> bool:
        return not self.submodularity_witnesses

    @property
    def ok(self) -> bool:
        return self.flexibility_ok and self.submodularity_ok

    def summary(self) -> list[str]:
        lines: list[str] = []
        if self.flexibility_witnesses:
            a, b = self.flexibility_witnesses[0]
            lines.append(
                f"flexibility fails on {len(self.flexibility_witnesses)} pair(s), "
                f"e.g. U({b.label()}) > U({a.label()}) despite {b.label()} ⊆ {a.label()}"
            )
        if self.submodularity_witnesses:
            a, b, c = self.submodularity_witnesses[0]
            lines.append(
                f"ordinal submodularity fails on "
                f"{len(self.submodularity_witnesses)} triple(s), e.g. "
                f"(A,B,C)=({a.label()},{b.label()},{c.label()})"
            )
        if not lines:
            lines.append("both menu axioms hold")
        return lines


def check_axioms(preference: MenuPreference) -> AxiomReport:
    """Check flexibility and ordinal submodularity exhaustively over 2^X."""
    ground = preference.ground
    values = preference.values
    full = ground.full_bits
    flexibility: list[tuple[SubsetMask, SubsetMask]] = []
    for a in range(1, full + 1):
        b = (a - 1) & a
        while b:
            if values[b] > values[a]:
                flexibility.append((ground.mask(a), ground.mask(b)))
            b = (b - 1) & a
    submodularity: list[tuple[SubsetMask, SubsetMask, SubsetMask]] = []
    for a in range(1, full + 1):
        for b in range(full + 1):
            if values[a | b] != values[a]:
                continue
            for c in range(full + 1):
                if values[a | b | c] != values[a | c]:
                    submodularity.append(
                        (ground.mask(a), ground.mask(b), ground.mask(c))
                    )
    return AxiomReport(
        flexibility_witnesses=tuple(flexibility),
        submodularity_witnesses=tuple(submodularity),
    )


def kreps_operator(preference: MenuPreference) -> ClosureOperator:
    """The closure operator f(A) = ⋃{B : U(A ∪ B) = U(A)} of a preference.

    Requires the axioms (:class:`AxiomsViolated` otherwise, with the full
    report).  Under them, flexibility collapses the union to a per-element
    test — x ∈ f(A) iff U(A ∪ {x}) = U(A) — and the result provably is a
    closure operator respected by the preference, with indifference equal to
    closure containment and strictly larger closures strictly preferred; all
    four consequences are re-verified here before the operator is returned.
    """
    report = check_axioms(preference)
    if not report.ok:
        raise AxiomsViolated(report)
    ground = preference.ground
    values = preference.values
    full = ground.full_bits
    images = [0]
    for a in range(1, full + 1):
        image = 0
        for i in range(ground.size):
            if values[a | 1 << i] == values[a]:
                image |= 1 << i
        images.append(image)
    validation = _validate_images(ground, tuple(images))
    if not validation.ok:
        raise WitnessVerificationFailed(
            "Kreps construction produced a non-closure: "
            + "; ".join(validation.summary())
        )
    for a in range(1, full + 1):
        if values[images[a]] != values[a]:
            raise WitnessVerificationFailed(
                "preference does not respect its own Kreps operator"
            )
        for b in range(full + 1):
            contained = images[b] & ~images[a] == 0
            if (values[a | b] == values[a]) != contained:
                raise WitnessVerificationFailed(
                    "indifference does not match closure containment"
                )
            if b and images[b] & ~images[a] == 0 and images[b] != images[a]:
                if values[a] <= values[b]:
                    raise WitnessVerificationFailed(
                        "strictly larger closure is not strictly preferred"
                    )
    return ClosureOperator._from_images(ground, tuple(images))


def respects(
    preference: MenuPreference, f: ClosureOperator
) -> tuple[bool, SubsetMask | None]:
    """Whether U(A) = U(f(A)) for every nonempty menu; witness on failure."""
    if preference.ground != f.ground:
        raise GroundSetMismatch("preference and operator use different ground sets")
    values = preference.values
    for bits, img in enumerate(f.tabulate_bits()):
        if bits and values[bits] != values[img]:
            return False, preference.ground.mask(bits)
    return True, None


@dataclass(frozen=True)
class KrepsRepresentation:
    """A minimal weak-order state space representing a menu preference.

    Each state s is a weak order with utilities U(a, s) = 1-based class index
    (worst class = 1).  A menu's signature σ(A) collects max_{a∈A} U(a, s)
    per state; menus share a signature iff they share a closure, and the
    aggregator ranks achieved signatures so that
    U(A) ≥ U(B) ⟺ rank σ(A) ≥ rank σ(B), strictly increasing in the
    product order on achieved signatures.

    Attributes:
        ground: the underlying ground set.
        states: the weak-order states (exactly MNWO of the Kreps operator).
        ranks: achieved signatures → dense 1-based rank.
    """

    ground: GroundSet
    states: tuple[WeakOrder, ...]
    ranks: dict[tuple[int, ...], int]

    @property
    def state_count(self) -> int:
        return len(self.states)

    def state_utility(self, element: str, state: int) -> int:
        """U(element, state): the 1-based indifference-class index."""
        return self.states[state].class_index(element) + 1

    def signature(self, menu: SubsetMask) -> tuple[int, ...]:
        """σ(A) = (max_{a∈A} U(a, s))_s; requires a nonempty menu."""
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        if not menu:
            raise ValueError("the empty menu has no signature")
        names = menu.members()
        return tuple(
            max(self.state_utility(a, s) for a in names)
            for s in range(len(self.states))
        )

    def evaluate(self, menu: SubsetMask) -> int:
        """The rank of the menu's signature (a utility representing ⊵)."""
        return self.ranks[self.signature(menu)]


def kreps_representation(preference: MenuPreference) -> KrepsRepresentation:
    """Build the minimal weak-order representation of an axiom-satisfying
    preference; see :class:`KrepsRepresentation`.

    States are the verified weak-order witness of the Kreps operator's
    complexity profile, so the state count is exactly MNWO.  Signature
    soundness (equal signatures ⟺ equal closures), aggregator strict
    monotonicity, and faithfulness of the ranking are all verified here.
    """
    f = kreps_operator(preference)
    profile = complexity_profile(f)
    states = profile.weak_order_witness
    ground = preference.ground
    values = preference.values
    images = f.tabulate_bits()
    # state utilities per element, 1-based with the worst class at 1
    utilities = [
        [state.class_index(name) + 1 for name in ground.elements] for state in states
    ]
    signatures: dict[int, tuple[int, ...]] = {}
    for bits in range(1, ground.full_bits + 1):
        members = [i for i in range(ground.size) if bits >> i & 1]
        signatures[bits] = tuple(max(row[i] for i in members) for row in utilities)
    for a in range(1, ground.full_bits + 1):
        for b in range(1, ground.full_bits + 1):
            if (signatures[a] == signatures[b]) != (images[a] == images[b]):
                raise WitnessVerificationFailed(
                    "signatures do not separate closures"
                )
    by_signature: dict[tuple[int, ...], Fraction] = {}
    for bits, sig in signatures.items():
        value = values[bits]
        if by_signature.setdefault(sig, value) != value:
            raise WitnessVerificationFailed(
                "menus sharing a signature have different utilities"
            )
    levels = sorted(set(by_signature.values()))
    rank_of_value = {value: i + 1 for i, value in enumerate(levels)}
    ranks = {sig: rank_of_value[value] for sig, value in by_signature.items()}
    for sig_a, value_a in by_signature.items():
        for sig_b, value_b in by_signature.items():
            dominates = all(x >= y for x, y in zip(sig_a, sig_b))
            if dominates and sig_a != sig_b and value_a <= value_b:
                raise WitnessVerificationFailed(
                    "aggregator is not strictly increasing on achieved signatures"
                )
            if (ranks[sig_a] >= ranks[sig_b]) != (value_a >= value_b):
                raise WitnessVerificationFailed("ranking does not represent ⊵")
    return KrepsRepresentation(ground=ground, states=states, ranks=ranks)


@dataclass(frozen=True)
class AdditiveState:
    """One state of an additive representation.

    Attributes:
        name: the state label (``p<i>`` for positive, ``n<i>`` for negative).
        carrier: the closed set B behind the state.
        weight: the nonnegative Möbius weight (h⁻(B) on positive states,
            h⁺(B) on negative ones).
    """

    name: str
    carrier: SubsetMask
    weight: Fraction

    def utility(self, element: str) -> Fraction:
        """U(element, state) = −weight inside the carrier, 0 outside."""
        return -self.weight if element in self.carrier else Fraction(0)


@dataclass(frozen=True)
class AdditiveRepresentation:
    """A sum-of-maxes additive state representation with exact weights.

    Evaluation reproduces the source utility exactly:

        U(A) = Σ_{s positive} max_{a∈A} U(a, s) − Σ_{s negative} max_{a∈A} U(a, s).

    There is one positive and one negative state per nonempty closed set of
    the operator used to build the representation (zero-weight states are
    kept, so the count is exactly 2·(|S(f)|−1)).

    Attributes:
        ground: the underlying ground set.
        positive_states: states entering the sum with +.
        negative_states: states entering the sum with −.
    """

    ground: GroundSet
    positive_states: tuple[AdditiveState, ...]
    negative_states: tuple[AdditiveState, ...]

    @property
    def state_count(self) -> int:
        return len(self.positive_states) + len(self.negative_states)

    def evaluate(self, menu: SubsetMask) -> Fraction:
        """Literal sum-of-maxes evaluation; requires a nonempty menu."""
        if menu.ground != self.ground:
            raise GroundSetMismatch("menu lives in a different ground set")
        if not menu:
            raise ValueError("the empty menu is outside the representation")
        names = menu.members()
        total = Fraction(0)
        for state in self.positive_states:
            total += max(state.utility(a) for a in names)
        for state in self.negative_states:
            total -= max(state.utility(a) for a in names)
        return total


def additive_representation(
    preference: MenuPreference, f: ClosureOperator
) -> AdditiveRepresentation:
    """Additive states for a preference that respects f; see
    :class:`AdditiveRepresentation`.

    Möbius inversion runs on the nonempty closed sets under *reversed*
    inclusion (so supersets lie below), giving weights h with
    U(A) = Σ{h(B) : A ⊆ B ∈ S(f)}; the forward sum is re-verified on every
    closed set, the final representation on every nonempty menu, both exactly.
    Raises :class:`DoesNotRespect` if U(A) ≠ U(f(A)) somewhere.
    """
    ok, witness = respects(preference, f)
    if not ok:
        assert witness is not None
        raise DoesNotRespect(witness)
    ground = preference.ground
    closed = [m for m in f.closed_sets() if m.bits]
    reversed_poset = FinitePoset.from_leq(tuple(closed), lambda a, b: b <= a)
    utilities = {m: preference.utility(m) for m in closed}
    weights = reversed_poset.mobius_invert(utilities)
    recovered = reversed_poset.sum_below(weights)
    if any(recovered[m] != utilities[m] for m in closed):
        raise WitnessVerificationFailed("Möbius inversion failed to invert")
    positive = []
    negative = []
    for i, m in enumerate(closed):
        h = weights[m]
        positive.append(
            AdditiveState(name=f"p{i + 1}", carrier=m, weight=max(Fraction(0), -h))
        )
        negative.append(
            AdditiveState(name=f"n{i + 1}", carrier=m, weight=max(Fraction(0), h))
        )
    representation = AdditiveRepresentation(
        ground=ground,
        positive_states=tuple(positive),
        negative_states=tuple(negative),
    )
    for bits in range(1, ground.full_bits + 1):
        menu = ground.mask(bits)
        if representation.evaluate(menu) != preference.utility(menu):
            raise WitnessVerificationFailed(
                f"additive evaluation differs from U at {menu.label()}"
            )
    return representation
