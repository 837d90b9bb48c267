"""Finite posets: Hasse diagrams, minimum chain covers, Möbius inversion.

The poset algorithms back two very different consumers: complexity measures
(width of a family of subsets under inclusion, computed through a minimum chain
cover) and additive menu representations (Möbius inversion of a utility over a
reversed inclusion order, in exact rational arithmetic).  Everything is
deterministic: items keep their construction order, algorithms scan neighbors
in that order, and all outputs are canonically sorted, so equal inputs produce
byte-equal outputs.

Internally a poset over n items stores one n-bit row per item (``up[i]`` has
bit j set iff item i ≤ item j), which keeps the O(n²)–O(n³) algorithms here in
cheap word operations.  The order axioms are validated eagerly at construction,
so malformed relations never reach the algorithms.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .core import SubsetMask, Topology
from .errors import InvalidOrderRelation

__all__ = [
    "FinitePoset",
    "ChainCover",
    "MobiusTable",
    "to_dot",
]


@dataclass(frozen=True)
class ChainCover:
    """A minimum chain cover of a poset, with a maximum antichain as certificate.

    Dilworth's theorem says the minimum number of chains covering a poset
    equals the maximum size of an antichain; construction enforces
    ``len(chains) == len(antichain)``, so every instance carries its own proof
    of optimality.

    Attributes:
        chains: disjoint covering chains, each strictly increasing; ordered by
            the position of their minimal item in the poset's item order.
        antichain: a maximum antichain, in item order.
    """

    chains: tuple[tuple[Hashable, ...], ...]
    antichain: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        if len(self.chains) != len(self.antichain):
            raise AssertionError(
                "chain cover and antichain certificate disagree "
                f"({len(self.chains)} chains vs {len(self.antichain)} antichain items)"
            )

    @property
    def width(self) -> int:
        return len(self.chains)


@dataclass(frozen=True)
class MobiusTable:
    """The Möbius function of a finite poset, as exact integers.

    μ is defined by μ(x, x) = 1 and μ(x, y) = −Σ_{x ≤ z < y} μ(x, z) for
    x < y; by convention :meth:`mu` returns 0 for incomparable pairs.

    Attributes:
        poset: the poset the table belongs to.
    """

    poset: FinitePoset
    _mu: dict[tuple[int, int], int] = field(repr=False, compare=False)

    def mu(self, x: Hashable, y: Hashable) -> int:
        i = self.poset.index(x)
        j = self.poset.index(y)
        return self._mu.get((i, j), 0)

    def pairs(self) -> Iterable[tuple[Hashable, Hashable, int]]:
        """All comparable pairs (x, y, μ(x, y)) in item order."""
        items = self.poset.items
        for (i, j), value in sorted(self._mu.items()):
            yield items[i], items[j], value


@dataclass(frozen=True, repr=False)
class FinitePoset:
    """An immutable finite partially ordered set over hashable items.

    Attributes:
        items: the items, in construction order (used for all tie-breaking).
        up: per item i, a bitmask over item indices j with item i ≤ item j.
    """

    items: tuple[Hashable, ...]
    up: tuple[int, ...]
    _index: dict[Hashable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "up", tuple(self.up))
        index: dict[Hashable, int] = {}
        for i, item in enumerate(items):
            if item in index:
                raise InvalidOrderRelation(f"duplicate item {item!r}")
            index[item] = i
        object.__setattr__(self, "_index", index)
        n = len(items)
        if len(self.up) != n:
            raise InvalidOrderRelation("one relation row required per item")
        for i in range(n):
            if self.up[i] >> n:
                raise InvalidOrderRelation("relation row refers to unknown items")
            if not self.up[i] >> i & 1:
                raise InvalidOrderRelation(f"reflexivity fails at {items[i]!r}")
        for i in range(n):
            row = self.up[i]
            rest = row & ~(1 << i)
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if self.up[j] >> i & 1:
                    raise InvalidOrderRelation(
                        f"antisymmetry fails at ({items[i]!r}, {items[j]!r})"
                    )
                if self.up[j] & ~row:
                    k = ((self.up[j] & ~row) & -(self.up[j] & ~row)).bit_length() - 1
                    raise InvalidOrderRelation(
                        f"transitivity fails: {items[i]!r} ≤ {items[j]!r} ≤ "
                        f"{items[k]!r} but not {items[i]!r} ≤ {items[k]!r}"
                    )

    @classmethod
    def from_leq(
        cls,
        items: Sequence[Hashable],
        leq: Callable[[Hashable, Hashable], bool],
    ) -> FinitePoset:
        """Build a poset from a comparison predicate (evaluated on all pairs)."""
        items = tuple(items)
        rows = []
        for a in items:
            row = 0
            for j, b in enumerate(items):
                if leq(a, b):
                    row |= 1 << j
            rows.append(row)
        return cls(items, tuple(rows))

    @classmethod
    def from_masks(cls, masks: Sequence[SubsetMask]) -> FinitePoset:
        """The inclusion order on a family of subsets (kept in given order)."""
        return cls.from_leq(tuple(masks), lambda a, b: a <= b)

    @classmethod
    def from_topology(cls, topology: Topology) -> FinitePoset:
        """The inclusion order on a topology's closed sets (canonical order)."""
        return cls.from_masks(topology.closed)

    @property
    def size(self) -> int:
        return len(self.items)

    def index(self, item: Hashable) -> int:
        try:
            return self._index[item]
        except KeyError:
            raise InvalidOrderRelation(f"{item!r} is not an item of this poset") from None

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return self.up[self.index(a)] >> self.index(b) & 1 == 1

    def dual(self) -> FinitePoset:
        """The same items under the reversed order."""
        n = self.size
        rows = [0] * n
        for i in range(n):
            row = self.up[i]
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                rows[j] |= 1 << i
        return FinitePoset(self.items, tuple(rows))

    def _strict_up(self) -> list[int]:
        return [self.up[i] & ~(1 << i) for i in range(self.size)]

    def _strict_down(self) -> list[int]:
        down = [0] * self.size
        for i, row in enumerate(self._strict_up()):
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                down[j] |= 1 << i
        return down

    def hasse(self) -> tuple[tuple[Hashable, Hashable], ...]:
        """The covering pairs (a, b): a < b with nothing strictly between.

        These are the arrows of the Hasse diagram, ordered by item index of the
        lower item, then of the upper.
        """
        strict_up = self._strict_up()
        strict_down = self._strict_down()
        covers = []
        for i in range(self.size):
            row = strict_up[i]
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                if strict_up[i] & strict_down[j] == 0:
                    covers.append((self.items[i], self.items[j]))
        return tuple(covers)

    def min_chain_cover(self) -> ChainCover:
        """A minimum chain cover with a maximum antichain certificate.

        Runs augmenting-path bipartite matching on the strict order (left copy
        below, right copy above); a matching edge links consecutive items of a
        chain, so the cover has n − |matching| chains.  The antichain is read
        off the matching by König's construction: items whose left copy is
        reachable by an alternating path from an unmatched left vertex and
        whose right copy is not.  Neighbor scans follow item order, so the
        result is deterministic.
        """
        n = self.size
        strict_up = self._strict_up()
        adj: list[list[int]] = []
        for i in range(n):
            row = strict_up[i]
            targets = []
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                targets.append(j)
            adj.append(targets)
        match_l = [-1] * n
        match_r = [-1] * n
        for start in range(n):
            parent: dict[int, int] = {}
            queue = deque([start])
            seen_left = {start}
            goal = -1
            while queue and goal < 0:
                u = queue.popleft()
                for v in adj[u]:
                    if v in parent:
                        continue
                    parent[v] = u
                    w = match_r[v]
                    if w < 0:
                        goal = v
                        break
                    if w not in seen_left:
                        seen_left.add(w)
                        queue.append(w)
            if goal < 0:
                continue
            v = goal
            while v >= 0:
                u = parent[v]
                previous = match_l[u]
                match_l[u] = v
                match_r[v] = u
                v = previous
        # König: Z = alternating reachability from unmatched left vertices.
        unmatched = [u for u in range(n) if match_l[u] < 0]
        z_left = set(unmatched)
        z_right: set[int] = set()
        queue = deque(unmatched)
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in z_right or match_l[u] == v:
                    continue
                z_right.add(v)
                w = match_r[v]
                if w >= 0 and w not in z_left:
                    z_left.add(w)
                    queue.append(w)
        antichain = tuple(
            self.items[i] for i in range(n) if i in z_left and i not in z_right
        )
        chains = []
        for i in range(n):
            if match_r[i] >= 0:
                continue  # i has a predecessor in some chain
            chain = [self.items[i]]
            j = match_l[i]
            while j >= 0:
                chain.append(self.items[j])
                j = match_l[j]
            chains.append(tuple(chain))
        return ChainCover(chains=tuple(chains), antichain=antichain)

    def _topo_order(self) -> list[int]:
        """A linear extension: ascending count of items weakly below."""
        down = self._strict_down()
        return sorted(range(self.size), key=lambda i: (down[i].bit_count(), i))

    def mobius(self) -> MobiusTable:
        """The Möbius function on all comparable pairs, as exact integers."""
        order = self._topo_order()
        strict_down = self._strict_down()
        mu: dict[tuple[int, int], int] = {}
        for x in range(self.size):
            row = self.up[x]
            for y in order:
                if not row >> y & 1:
                    continue
                if y == x:
                    mu[(x, x)] = 1
                    continue
                total = mu[(x, x)]
                between = row & strict_down[y] & ~(1 << x)
                while between:
                    z = (between & -between).bit_length() - 1
                    between &= between - 1
                    total += mu[(x, z)]
                mu[(x, y)] = -total
        return MobiusTable(poset=self, _mu=mu)

    def sum_below(
        self, values: Mapping[Hashable, Fraction | int]
    ) -> dict[Hashable, Fraction]:
        """The down-set sums g(x) = Σ_{y ≤ x} values(y) (the zeta transform)."""
        totals: dict[Hashable, Fraction] = {}
        for i, item in enumerate(self.items):
            total = Fraction(0)
            for j, other in enumerate(self.items):
                if self.up[j] >> i & 1:
                    total += values[other]
            totals[item] = total
        return totals

    def mobius_invert(
        self, values: Mapping[Hashable, Fraction | int]
    ) -> dict[Hashable, Fraction]:
        """Recover h from its down-set sums: h(x) = Σ_{y ≤ x} μ(y, x)·values(y).

        Inverse of :meth:`sum_below`: if ``values`` maps x to Σ_{y ≤ x} h(y)
        then the result maps x to h(x), exactly.
        """
        table = self.mobius()
        result: dict[Hashable, Fraction] = {}
        for i, item in enumerate(self.items):
            total = Fraction(0)
            for j, other in enumerate(self.items):
                if self.up[j] >> i & 1:
                    total += table._mu[(j, i)] * Fraction(values[other])
            result[item] = total
        return result

    def __repr__(self) -> str:
        return f"FinitePoset({self.size} items, {sum(r.bit_count() for r in self.up) - self.size} strict relations)"


def _default_label(item: Hashable) -> str:
    if isinstance(item, SubsetMask):
        return item.label()
    return str(item)


def to_dot(
    poset: FinitePoset,
    *,
    name: str = "hasse",
    label: Callable[[Hashable], str] | None = None,
) -> str:
    """Render the Hasse diagram as Graphviz DOT text, bottom-up.

    Output is deterministic: nodes appear in item order, edges in
    :meth:`FinitePoset.hasse` order, so equal posets yield byte-equal text.
    """
    label = label or _default_label
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, item in enumerate(poset.items):
        text = label(item).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{text}"];')
    for lower, upper in poset.hasse():
        lines.append(f"  n{poset.index(lower)} -> n{poset.index(upper)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
