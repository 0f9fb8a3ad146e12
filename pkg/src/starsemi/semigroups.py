"""Numerical semigroups: construction, classical invariants, enumeration by genus.

A numerical semigroup is a cofinite submonoid of the naturals.  It is stored
through its finite gap set together with every invariant the rest of the
library needs (Frobenius number, multiplicity, genus, pseudo-Frobenius set,
minimal generators).  Instances are immutable and hashable, so they are used
as cache keys throughout.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EmptyInput, NotClosed, NotNumerical

__all__ = [
    "NumericalSemigroup",
    "NATURALS",
    "from_generators",
    "from_gaps",
    "enumerate_semigroups",
    "parse_semigroup",
]


@dataclass(frozen=True, order=True)
class NumericalSemigroup:
    """A cofinite additive submonoid of the naturals, keyed by its gap set.

    ``frobenius == -1`` encodes the full monoid (no gaps).  All derived
    invariants are computed once at construction; instances are immutable
    and safe to share across threads.
    """

    gaps: tuple[int, ...]
    frobenius: int
    multiplicity: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    min_generators: tuple[int, ...]

    @cached_property
    def gap_mask(self) -> int:
        """Bitmask with bit ``x`` set exactly when ``x`` is a gap."""
        m = 0
        for x in self.gaps:
            m |= 1 << x
        return m

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return not (self.gap_mask >> x) & 1

    @property
    def type_set(self) -> tuple[int, ...]:
        """The pseudo-Frobenius numbers, i.e. (S - M_S) minus S."""
        return self.pseudo_frobenius

    @property
    def type_size(self) -> int:
        return len(self.pseudo_frobenius)

    def is_symmetric(self) -> bool:
        """True when removing any gap a leaves frobenius - a inside S.

        Computed from the gap/co-gap pairing and cross-checked against the
        type being a singleton; the two characterizations must agree.
        """
        if self.genus == 0:
            return True
        g = self.frobenius
        by_pairing = all((g - a) in self for a in self.gaps)
        by_type = self.type_size == 1
        if by_pairing != by_type:
            raise AssertionError(f"symmetry characterizations disagree on {self}")
        return by_type

    def is_pseudosymmetric(self) -> bool:
        """True when the Frobenius number g is even and the type set is {g, g/2}."""
        if self.genus == 0:
            return False
        g = self.frobenius
        return g % 2 == 0 and set(self.pseudo_frobenius) == {g, g // 2}

    def apery_sequence(self) -> tuple[int, ...]:
        """Sequence (k_1, ..., k_{mu-1}) where k_i*mu + i is the least member
        of S congruent to i modulo the multiplicity.  The entries sum to the
        genus, which is asserted."""
        mu = self.multiplicity
        if mu < 2:
            raise ValueError("apery_sequence needs multiplicity >= 2")
        ks = []
        for i in range(1, mu):
            x = i
            while x not in self:
                x += mu
            ks.append((x - i) // mu)
        if sum(ks) != self.genus:
            raise AssertionError(f"Apery sum {sum(ks)} != genus {self.genus} for {self}")
        return tuple(ks)

    def elements_upto(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if x in self]

    def to_json(self) -> dict:
        return {
            "generators": list(self.min_generators),
            "gaps": list(self.gaps),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "type": list(self.pseudo_frobenius),
        }

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.min_generators) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup(gaps={self.gaps})"


def _build(gaps: tuple[int, ...]) -> NumericalSemigroup:
    """Assemble a semigroup from a sorted, validated gap tuple."""
    if not gaps:
        return NumericalSemigroup(
            gaps=(), frobenius=-1, multiplicity=1, genus=0,
            pseudo_frobenius=(), min_generators=(1,),
        )
    g = gaps[-1]
    gapset = frozenset(gaps)
    mu = next(x for x in range(1, g + 2) if x not in gapset)

    def member(x: int) -> bool:
        return x >= 0 and (x > g or x not in gapset)

    positives = [x for x in range(1, g + 1) if member(x)]
    pf = tuple(
        x for x in gaps
        if all((x + m > g) or member(x + m) for m in positives)
    )
    gens = []
    for x in range(mu, g + mu + 1):
        if not member(x):
            continue
        if any(member(a) and member(x - a) for a in range(mu, x - mu + 1)):
            continue
        gens.append(x)
    return NumericalSemigroup(
        gaps=gaps, frobenius=g, multiplicity=mu, genus=len(gaps),
        pseudo_frobenius=pf, min_generators=tuple(gens),
    )


NATURALS = _build(())


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing the given positive integers.

    Raises EmptyInput for an empty set and NotNumerical when the gcd is not 1
    (the complement would be infinite).  Redundant generators are fine; the
    minimal system is recomputed.
    """
    glist = sorted({int(a) for a in gens})
    if not glist:
        raise EmptyInput("no generators given")
    if glist[0] <= 0:
        raise ValueError(f"generators must be positive, got {glist[0]}")
    if math.gcd(*glist) != 1:
        raise NotNumerical(f"gcd of generators is {math.gcd(*glist)}, not 1")
    mu = glist[0]
    if mu == 1:
        return NATURALS
    # Sieve reachable sums on a growing window until the top mu slots are all
    # reachable; past that point every larger integer is reachable too.
    bound = glist[-1] * mu + mu
    while True:
        reach = bytearray(bound + 1)
        reach[0] = 1
        for x in range(bound + 1):
            if reach[x]:
                for a in glist:
                    if x + a <= bound:
                        reach[x + a] = 1
        if all(reach[bound - k] for k in range(mu)):
            gaps = tuple(x for x in range(1, bound + 1) if not reach[x])
            return _build(gaps)
        bound *= 2


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup with exactly the given gap set.

    Raises NotClosed, with a witness pair, when the complement of the gaps is
    not closed under addition.
    """
    gtuple = tuple(sorted({int(x) for x in gaps}))
    if gtuple and gtuple[0] <= 0:
        raise ValueError(f"gaps must be positive, got {gtuple[0]}")
    gapset = frozenset(gtuple)
    for x in gtuple:
        for a in range(1, x // 2 + 1):
            if a not in gapset and (x - a) not in gapset:
                raise NotClosed(a, x - a)
    return _build(gtuple)


def enumerate_semigroups(max_genus: int) -> Iterator[NumericalSemigroup]:
    """All numerical semigroups of genus at most ``max_genus``, each exactly once.

    Walks the semigroup tree rooted at the naturals where a child removes one
    minimal generator larger than the Frobenius number.  Yields by genus, and
    within a genus in lexicographic gap-set order.
    """
    if max_genus < 0:
        return
    level = [NATURALS]
    yield NATURALS
    for _ in range(max_genus):
        nxt = []
        for s in level:
            for m in s.min_generators:
                if m > s.frobenius:
                    nxt.append(_build(tuple(sorted(s.gaps + (m,)))))
        nxt.sort(key=lambda t: t.gaps)
        yield from nxt
        level = nxt


_GEN_RE = re.compile(r"^<\s*(\d+(?:\s*,\s*\d+)*)\s*>$")
_GAP_RE = re.compile(r"^gaps:\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$")


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``<a1,a2,...>`` (generators) or ``gaps:[1,2,5]`` into a semigroup."""
    s = text.strip()
    m = _GEN_RE.match(s)
    if m:
        return from_generators(int(a) for a in m.group(1).split(","))
    m = _GAP_RE.match(s)
    if m:
        inner = m.group(1)
        return from_gaps(int(a) for a in inner.split(",")) if inner else NATURALS
    raise ValueError(f"cannot parse semigroup spec: {text!r}")
