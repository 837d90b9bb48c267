"""Shared test helpers: reference fixtures, seeded random builders, and
independent brute-force oracles.

Everything random is driven by an explicit ``random.Random(seed)`` so every
test is deterministic.  The oracles recompute results straight from the
definitions (set intersections, antichain enumeration, exhaustive search)
without touching the code paths they check.
"""

from __future__ import annotations

import random
from fractions import Fraction

from closureops import (
    BinaryClassifier,
    ClosureOperator,
    FinitePoset,
    GroundSet,
    Labeling,
    MenuPreference,
    SubsetMask,
    Topology,
    WeakOrder,
)

ABCD = ("a", "b", "c", "d")
XYZ = ("x", "y", "z")

# ---------------------------------------------------------------- builders


def ground(names) -> GroundSet:
    return GroundSet(tuple(names))


def sub(g: GroundSet, names) -> SubsetMask:
    """Subset from a compact string of single-character element names."""
    return g.subset(tuple(names))


def topo(g: GroundSet, *sets: str) -> Topology:
    return Topology(g, tuple(sub(g, s) for s in sets))


def order(g: GroundSet, *classes: str) -> WeakOrder:
    """Weak order from compact class strings, worst class first."""
    return WeakOrder(g, tuple(sub(g, c) for c in classes))


# ------------------------------------------------------- reference fixtures
#
# Small operators with known complexity numbers, used across the suite.
# All expected values are derived by hand from the definitions and re-checked
# against the brute-force oracles where the ground set allows.


def atoms_topology() -> Topology:
    """Two incomparable singleton atoms: {∅,{a},{b},X} on four elements."""
    g = ground(ABCD)
    return topo(g, "", "a", "b", "abcd")


def chain_topology() -> Topology:
    """A three-step chain {∅,{a},{a,b},X} on four elements."""
    g = ground(ABCD)
    return topo(g, "", "a", "ab", "abcd")


def fork_topology() -> Topology:
    """A chain forking once: {∅,{a},{a,b},{a,c},X} on four elements."""
    g = ground(ABCD)
    return topo(g, "", "a", "ab", "ac", "abcd")


def tall_chain_topology() -> Topology:
    """A maximal chain {∅,{a},{a,b},{a,b,c},X} on four elements."""
    g = ground(ABCD)
    return topo(g, "", "a", "ab", "abc", "abcd")


def wide_topology() -> Topology:
    """Width-three family on {a,b,c} that two weak orders still generate.

    S = {∅,{a},{b},{c},{a,b},{b,c},X}; the middle {b} equals {a,b} ∩ {b,c},
    so it is meet-reducible and the irreducibles have width two.
    """
    g = ground("abc")
    return topo(g, "", "a", "b", "c", "ab", "bc", "abc")


def crown_topology() -> Topology:
    """Three atoms with one extra join: {∅,{a},{b},{c},{a,b},X} on {a,b,c}."""
    g = ground("abc")
    return topo(g, "", "a", "b", "c", "ab", "abc")


def animals_labeling() -> Labeling:
    """The dog/cat/car labeling of four data points a, b, c, d."""
    g = ground(ABCD)
    return Labeling.from_names(
        g,
        ("dog", "cat", "black", "white", "female", "male", "car"),
        {
            "a": ("dog", "black", "female"),
            "b": ("dog", "black", "male"),
            "c": ("cat", "white", "female"),
            "d": ("car", "black"),
        },
    )


def animals_topology() -> Topology:
    """The closed sets induced by :func:`animals_labeling`."""
    g = ground(ABCD)
    return topo(g, "", "a", "b", "c", "d", "ab", "ac", "abd", "abcd")


def sum_of_maxes(g: GroundSet, orders) -> MenuPreference:
    """U(A) = Σ_i max_{a∈A} (1-based class index of a in order i).

    This form satisfies both menu axioms by construction, so it is the
    standard recipe for axiom-satisfying random preferences.
    """
    ranks = [
        [o.class_index(name) + 1 for name in g.elements] for o in orders
    ]
    values: list[Fraction | None] = [None] * (g.full_bits + 1)
    for bits in range(1, g.full_bits + 1):
        members = [i for i in range(g.size) if bits >> i & 1]
        values[bits] = Fraction(
            sum(max(row[i] for i in members) for row in ranks)
        )
    return MenuPreference(g, tuple(values))


def alice_preference() -> MenuPreference:
    """Ranks alternatives x ≻ y ≻ z and values a menu by its best element."""
    g = ground(XYZ)
    return sum_of_maxes(g, [order(g, "z", "y", "x")])


def bob_preference() -> MenuPreference:
    """Values a menu as the sum of its maxima under x ≻ y ≻ z and y ≻ x ≻ z."""
    g = ground(XYZ)
    return sum_of_maxes(g, [order(g, "z", "y", "x"), order(g, "z", "x", "y")])


# ------------------------------------------------------- seeded random data


def random_topology(rng: random.Random, g: GroundSet) -> Topology:
    """A random intersection-closed family containing ∅ and X."""
    full = g.full_bits
    bits = {0, full}
    for _ in range(rng.randrange(0, full + 1)):
        bits.add(rng.randrange(1, full + 1))
    changed = True
    while changed:
        changed = False
        for a in tuple(bits):
            for b in tuple(bits):
                if a & b not in bits:
                    bits.add(a & b)
                    changed = True
    return Topology.from_bits(g, sorted(bits))


def random_operator(rng: random.Random, g: GroundSet) -> ClosureOperator:
    return random_topology(rng, g).operator()


def random_weak_order(rng: random.Random, g: GroundSet) -> WeakOrder:
    names = list(g.elements)
    rng.shuffle(names)
    classes = []
    start = 0
    while start < len(names):
        take = rng.randrange(1, len(names) - start + 1)
        classes.append(g.subset(names[start : start + take]))
        start += take
    return WeakOrder(g, tuple(classes))


def random_binary(rng: random.Random, g: GroundSet) -> BinaryClassifier:
    return BinaryClassifier(g.mask(rng.randrange(1, g.full_bits)))


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randrange(-30, 31), rng.randrange(1, 12))


def respecting_preference(rng: random.Random, f: ClosureOperator) -> MenuPreference:
    """A random preference with U(A) = U(f(A)): one value per nonempty closed set."""
    per_closed = {
        m.bits: random_fraction(rng) for m in f.closed_sets() if m.bits
    }
    values: list[Fraction | None] = [None] * (f.ground.full_bits + 1)
    for bits in range(1, f.ground.full_bits + 1):
        values[bits] = per_closed[f.image_bits(bits)]
    return MenuPreference(f.ground, tuple(values))


def random_poset(rng: random.Random, n: int, p: float = 0.3) -> FinitePoset:
    """A random poset on items 0..n−1, oriented along the index order."""
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                up[i] |= 1 << j
    for i in range(n - 1, -1, -1):  # indices only point upward, so this closes
        rest = up[i] & ~(1 << i)
        acc = up[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            acc |= up[j]
        up[i] = acc
    return FinitePoset(tuple(range(n)), tuple(up))


# ------------------------------------------------------------------ oracles


def closure_by_common_supersets(topology: Topology, mask: SubsetMask) -> SubsetMask:
    """Closure as the literal intersection of every closed superset."""
    acc = topology.ground.full_bits
    for m in topology:
        if mask.bits & ~m.bits == 0:
            acc &= m.bits
    return topology.ground.mask(acc)


def brute_width(masks) -> int:
    """Largest antichain among the given subsets, by full enumeration."""
    masks = tuple(masks)
    n = len(masks)
    assert n <= 16, "brute-force width is exponential in the family size"
    best = 0
    for pick in range(1 << n):
        chosen = [masks[i] for i in range(n) if pick >> i & 1]
        if all(
            not (a <= b or b <= a)
            for i, a in enumerate(chosen)
            for b in chosen[i + 1 :]
        ):
            best = max(best, len(chosen))
    return best


def brute_poset_width(poset: FinitePoset) -> int:
    """Largest antichain of a poset, by full enumeration."""
    n = poset.size
    assert n <= 14, "brute-force width is exponential in the poset size"
    items = poset.items
    best = 0
    for pick in range(1 << n):
        chosen = [i for i in range(n) if pick >> i & 1]
        if all(
            not (poset.leq(items[i], items[j]) or poset.leq(items[j], items[i]))
            for a, i in enumerate(chosen)
            for j in chosen[a + 1 :]
        ):
            best = max(best, len(chosen))
    return best


def brute_depth(masks) -> int:
    """Longest strict-inclusion chain among the nonempty given subsets."""
    nonempty = sorted((m for m in masks if m.bits), key=lambda m: m.bits)
    longest: dict[int, int] = {}
    for m in nonempty:
        below = [
            longest[o.bits] for o in nonempty if o.bits != m.bits and o < m
        ]
        longest[m.bits] = 1 + max(below, default=0)
    return max(longest.values(), default=0)


def brute_meet_reducible(topology: Topology, mask: SubsetMask) -> bool:
    """Whether a closed set equals an intersection of two strict closed supersets.

    In an intersection-closed family this pairwise test is equivalent to being
    the intersection of *all* strict supersets, so it gives an independent
    route to the meet-irreducibles.
    """
    strict = [m for m in topology if m.bits != mask.bits and mask < m]
    return any(
        (a.bits & b.bits) == mask.bits for a in strict for b in strict
    )


def iter_topologies(g: GroundSet):
    """Every intersection-closed family containing ∅ and X (small grounds only)."""
    assert g.size <= 4, "enumeration is doubly exponential in the ground size"
    full = g.full_bits
    middles = tuple(range(1, full))
    for pick in range(1 << len(middles)):
        bits = [0, full] + [m for i, m in enumerate(middles) if pick >> i & 1]
        closed = set(bits)
        if all(a & b in closed for a in bits for b in bits):
            yield Topology.from_bits(g, sorted(closed))


# ----------------------------------------------- acceptance-summary report

_ACCEPTANCE_OUTCOMES: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid:
        if report.when == "call" or (
            report.when == "setup" and report.outcome != "passed"
        ):
            _ACCEPTANCE_OUTCOMES[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_OUTCOMES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE_OUTCOMES):
        name = nodeid.split("::")[-1]
        verdict = "PASS" if _ACCEPTANCE_OUTCOMES[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict}")
