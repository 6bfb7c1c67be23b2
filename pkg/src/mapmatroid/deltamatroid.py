"""Ground sets, basis families, the symmetric exchange axiom and the greedy
algorithm.

Ground-set elements are signed ints: ``+i`` is the plain element i (edge i of
a map), ``-i`` its starred partner i* (the coedge).  The star involution is
negation.  Basis families are kept explicit; this module plays the role of a
brute-force oracle, so transparency beats cleverness throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .maps import CombinatorialMap, element_str, is_independent, parse_element


@dataclass(frozen=True)
class GroundSet:
    """The 2n-element set {1..n} with a starred copy {1*..n*}."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set needs n >= 1")

    def elements(self) -> tuple[int, ...]:
        return tuple(x for i in range(1, self.n + 1) for x in (i, -i))

    @staticmethod
    def star(x: int) -> int:
        return -x

    def is_admissible(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(x != 0 and abs(x) <= self.n for x in s) and not any(-x in s for x in s)

    def admissible_subsets(self, k: int):
        """All admissible k-subsets."""
        for idx in itertools.combinations(range(1, self.n + 1), k):
            for signs in itertools.product((1, -1), repeat=k):
                yield frozenset(s * i for s, i in zip(signs, idx))


def _element_key(x: int) -> tuple[int, int]:
    return (abs(x), 0 if x > 0 else 1)


def format_subset(subset: Iterable[int]) -> str:
    return " ".join(element_str(x) for x in sorted(subset, key=_element_key))


def parse_subset(line: str) -> frozenset[int]:
    return frozenset(parse_element(tok) for tok in line.split())


class BasisFamily:
    """A non-empty family of admissible n-subsets, stored canonically."""

    def __init__(self, n: int, bases: Iterable[Iterable[int]]):
        ground = GroundSet(n)
        fam = {frozenset(b) for b in bases}
        if not fam:
            raise ValueError("basis family is empty")
        for b in fam:
            if len(b) != n or not ground.is_admissible(b):
                raise ValueError(f"not an admissible {n}-subset: {sorted(b)}")
        self.n = n
        self.ground = ground
        self.bases = frozenset(fam)

    def __eq__(self, other):
        return (isinstance(other, BasisFamily) and self.n == other.n
                and self.bases == other.bases)

    def __hash__(self):
        return hash((self.n, self.bases))

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.sorted_bases())

    def __repr__(self):
        return f"BasisFamily(n={self.n}, {len(self.bases)} bases)"

    def sorted_bases(self) -> list[frozenset[int]]:
        return sorted(self.bases, key=format_subset)

    def is_basis(self, x: Iterable[int]) -> bool:
        x = frozenset(x)
        if len(x) != self.n or not self.ground.is_admissible(x):
            return False
        return x in self.bases

    def starred(self) -> "BasisFamily":
        """The family with every basis star-swapped (bases of the dual map)."""
        return BasisFamily(self.n, [frozenset(-x for x in b) for b in self.bases])

    def to_text(self) -> str:
        return "\n".join(format_subset(b) for b in self.sorted_bases()) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BasisFamily":
        bases = [parse_subset(ln) for ln in text.splitlines() if ln.strip()]
        if not bases:
            raise ValueError("no bases in text")
        return cls(len(bases[0]), bases)


def enumerate_bases(m: CombinatorialMap, limit: int = 6) -> BasisFamily:
    """All bases of a map: maximal admissible sets whose closed cut keeps the
    surface connected.

    Enumerates every admissible subset, so it doubles as a check that every
    maximal independent set has full cardinality n; a smaller maximal set
    would be a structural impossibility and raises loudly.
    """
    if m.n > limit:
        raise ValueError(f"n={m.n} exceeds the enumeration limit {limit}; "
                         f"raise the limit explicitly if you mean it")
    independents: set[frozenset[int]] = set()
    for choice in itertools.product((0, 1, -1), repeat=m.n):
        subset = frozenset(s * i for i, s in enumerate(choice, start=1) if s)
        if is_independent(m, subset):
            independents.add(subset)
    for f in independents:
        if len(f) == m.n:
            continue
        uncovered = [i for i in range(1, m.n + 1) if i not in f and -i not in f]
        if not any(f | {s * i} in independents for i in uncovered for s in (1, -1)):
            raise RuntimeError(
                f"maximal independent set of size {len(f)} < n={m.n} found: "
                f"{format_subset(f)}; this should be impossible for a map")
    return BasisFamily(m.n, [f for f in independents if len(f) == m.n])


def map_independence_oracle(m: CombinatorialMap) -> Callable[[Iterable[int]], bool]:
    return lambda subset: is_independent(m, subset)


def check_symmetric_exchange(family: BasisFamily):
    """Symmetric exchange: for all bases A, B and k in their symmetric
    difference there is some i there with A symdiff {k, k*, i, i*} in the
    family.  Returns (True, None) or (False, (A, B, k)) with the first
    violation in canonical order.
    """
    bases = family.sorted_bases()
    for a in bases:
        for b in bases:
            diff = sorted(a ^ b, key=_element_key)
            for k in diff:
                if not any(a ^ {k, -k, i, -i} in family.bases for i in diff):
                    return False, (a, b, k)
    return True, None


def check_even(family: BasisFamily) -> bool:
    """True iff all bases have the same number of starred elements mod 2."""
    parities = {sum(1 for x in b if x < 0) % 2 for b in family.bases}
    return len(parities) == 1


def greedy(ground: GroundSet | int, indep: Callable[[frozenset[int]], bool],
           order: Sequence[int]) -> frozenset[int]:
    """One pass over the indices in the given order, taking the plain element
    when the oracle allows it and its starred partner otherwise."""
    n = ground.n if isinstance(ground, GroundSet) else ground
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order must be a permutation of 1..{n}")
    picked: frozenset[int] = frozenset()
    for i in order:
        if indep(picked | {i}):
            picked = picked | {i}
        elif indep(picked | {-i}):
            picked = picked | {-i}
        else:
            raise ValueError("oracle is not a Lagrangian independence oracle: "
                             f"rejected both {element_str(i)} and {element_str(-i)}")
    return picked
