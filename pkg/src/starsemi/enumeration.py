"""Antichain enumeration and exact counting of star operations.

Counting rests on two facts.  First, the operation generated by a set of
nondivisorial ideals only depends on the order-maximal part of the set, so
sweeping the antichains of the star order reaches every star operation.
Second, an antichain reproduces itself as the maximal closed part exactly
when the closed nondivisorial ideals equal its down-set; distinct operations
correspond one-to-one to such self-reproducing antichains.  The sweep walks
the antichain tree depth first, maintains incrementally which ideals are
closed (through per-ideal "uncovered excess" masks), and counts or collects
the self-reproducing ones, giving both the number of antichains and the
number of distinct operations in one pass.

Dedekind numbers are antichain counts of powerset lattices and use the same
generic counter (memoized divide and conquer over connected components).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import LimitExceeded
from .ideals import Ideal
from .semigroups import NumericalSemigroup
from .stars import StarOperation, _full_ctx, is_atom

__all__ = [
    "Poset",
    "StarCensus",
    "enumerate_antichains",
    "count_antichains",
    "dedekind",
    "enumerate_star_operations",
    "count_star_operations_up_to",
    "all_atoms_property",
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_MATERIALIZE_CAP",
]

DEFAULT_NODE_BUDGET = 3_000_000
DEFAULT_MATERIALIZE_CAP = 50_000
_ENUM_LIMIT = 40
_COUNT_LIMIT = 64
_DEDEKIND_CAP = 6


@dataclass(frozen=True)
class Poset:
    """An explicit finite partial order: labels plus an up-set bitmask per element."""

    labels: tuple
    up: tuple[int, ...]  # up[i] has bit j set when labels[i] <= labels[j]

    def __post_init__(self):
        n = len(self.labels)
        for i in range(n):
            if not (self.up[i] >> i) & 1:
                raise ValueError("order must be reflexive")
            for j in range(n):
                if (self.up[i] >> j) & 1:
                    if i != j and (self.up[j] >> i) & 1:
                        raise ValueError("order must be antisymmetric")
                    if self.up[j] & ~self.up[i]:
                        raise ValueError("order must be transitive")

    @property
    def size(self) -> int:
        return len(self.labels)

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    @classmethod
    def from_leq(cls, labels: Sequence, leq: Callable) -> "Poset":
        labels = tuple(labels)
        n = len(labels)
        up = []
        for i in range(n):
            row = 0
            for j in range(n):
                if leq(labels[i], labels[j]):
                    row |= 1 << j
            up.append(row)
        return cls(labels, tuple(up))

    @classmethod
    def from_mask_inclusion(cls, masks: Sequence[int], labels: Sequence | None = None) -> "Poset":
        """Order a family of distinct bitmasks by inclusion."""
        up = []
        for a in masks:
            row = 0
            for j, b in enumerate(masks):
                if a | b == b:
                    row |= 1 << j
            up.append(row)
        return cls(tuple(labels) if labels is not None else tuple(masks), tuple(up))

    @classmethod
    def powerset(cls, n: int) -> "Poset":
        """The subsets of an n-element set ordered by inclusion."""
        return cls.from_mask_inclusion(tuple(range(1 << n)))

    @classmethod
    def antichain_poset(cls, n: int) -> "Poset":
        return cls(tuple(range(n)), tuple(1 << i for i in range(n)))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        full = (1 << n) - 1
        return cls(tuple(range(n)), tuple((full >> i) << i for i in range(n)))


def _comparability(p: Poset) -> list[int]:
    n = p.size
    comp = list(p.up)
    for i in range(n):
        for j in range(n):
            if (p.up[i] >> j) & 1:
                comp[j] |= 1 << i
    return comp


def enumerate_antichains(p: Poset, limit: int = _ENUM_LIMIT) -> Iterator[tuple]:
    """Every antichain of the poset exactly once, the empty one included.

    Deterministic depth-first order over increasing element indices.
    """
    if p.size > limit:
        raise LimitExceeded(f"antichain enumeration limited to {limit} elements, poset has {p.size}")
    comp = _comparability(p)

    def walk(chosen: tuple, cand: int, start: int):
        yield tuple(p.labels[k] for k in chosen)
        t = cand >> start << start
        while t:
            low = t & -t
            t ^= low
            k = low.bit_length() - 1
            yield from walk(chosen + (k,), cand & ~comp[k], k + 1)

    yield from walk((), (1 << p.size) - 1, 0)


def count_antichains(p: Poset, limit: int = _COUNT_LIMIT) -> int:
    """Number of antichains, via memoized splitting on a minimal element.

    Antichains of disjoint comparability components multiply, which keeps
    the recursion shallow on the posets that show up here.
    """
    if p.size > limit:
        raise LimitExceeded(f"antichain counting limited to {limit} elements, poset has {p.size}")
    comp = _comparability(p)
    memo: dict[int, int] = {}

    def components(avail: int) -> list[int]:
        out = []
        rest = avail
        while rest:
            seed = rest & -rest
            blob = seed
            while True:
                grown = blob
                t = blob
                while t:
                    low = t & -t
                    t ^= low
                    grown |= comp[low.bit_length() - 1] & avail
                if grown == blob:
                    break
                blob = grown
            out.append(blob)
            rest &= ~blob
        return out

    def count(avail: int) -> int:
        if avail == 0:
            return 1
        got = memo.get(avail)
        if got is not None:
            return got
        parts = components(avail)
        if len(parts) > 1:
            total = 1
            for part in parts:
                total *= count(part)
        else:
            low = avail & -avail
            k = low.bit_length() - 1
            total = count(avail & ~low) + count(avail & ~comp[k])
        memo[avail] = total
        return total

    return count((1 << p.size) - 1)


@lru_cache(maxsize=None)
def dedekind(n: int) -> int:
    """Number of antichains of the powerset of an n-element set.

    Grows super-exponentially; capped at n = 6.  The first values are pinned
    to their known small cases as a self-check.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > _DEDEKIND_CAP:
        raise LimitExceeded(f"Dedekind numbers supported only up to n = {_DEDEKIND_CAP}")
    value = count_antichains(Poset.powerset(n))
    known = {0: 2, 1: 3, 2: 6}
    if n in known and value != known[n]:
        raise AssertionError(f"Dedekind number mismatch at {n}: {value}")
    return value


def _dedekind_or_none(n: int) -> int | None:
    return dedekind(n) if 0 <= n <= _DEDEKIND_CAP else None


# ---------------------------------------------------------------------------
# the census sweep

class _CapHit(Exception):
    pass


@dataclass(frozen=True)
class StarCensus:
    """Exact census of the star operations on one semigroup.

    ``omega`` is the number of antichains of the star order; the count can
    be strictly smaller because distinct antichains may generate the same
    operation.  ``operations`` is materialized only for censuses up to the
    configured cap (the count and the qm histogram are always exact).
    """

    semigroup: NumericalSemigroup
    count: int
    omega: int
    by_qm: dict[int, int]
    operations: tuple[StarOperation, ...] | None

    @property
    def all_atoms(self) -> bool:
        return self.count == self.omega

    def to_json(self) -> dict:
        return {
            "semigroup": self.semigroup.to_json(),
            "star_count": self.count,
            "omega": self.omega,
            "all_atoms": self.all_atoms,
            "by_qm": {str(k): self.by_qm[k] for k in sorted(self.by_qm)},
        }


def _sweep(s: NumericalSemigroup, *, node_budget: int, cap: int | None,
           collect_cap: int = 0) -> tuple[int, int, dict[int, int], list[int] | None]:
    """Walk all antichains of the star order; count the self-reproducing ones.

    Returns (count, antichains seen, qm histogram, closed-set vectors or
    None).  Vectors stop being collected once the count passes
    ``collect_cap``.  Raises _CapHit as soon as the count passes ``cap`` and
    LimitExceeded when the walk itself outgrows ``node_budget``.
    """
    ctx = _full_ctx(s)
    m = len(ctx.light.g0)
    level = ctx.light.level
    cover = ctx.cover
    comp = ctx.comp
    dn = ctx.dn
    unc = list(ctx.excess)
    vecs: list[int] | None = [] if collect_cap > 0 else None
    by_qm: dict[int, int] = {}
    nodes = 0
    count = 0

    def visit(cand: int, closed: int, down: int, qm_cur: int):
        nonlocal nodes, count, vecs
        nodes += 1
        if nodes > node_budget:
            raise LimitExceeded(
                f"census of {s} exceeds the antichain budget {node_budget}"
            )
        if closed == down:
            count += 1
            by_qm[qm_cur] = by_qm.get(qm_cur, 0) + 1
            if vecs is not None:
                if count > collect_cap:
                    vecs = None
                else:
                    vecs.append(closed)
            if cap is not None and count > cap:
                raise _CapHit
        t = cand
        while t:
            low = t & -t
            t ^= low
            k = low.bit_length() - 1
            changed = []
            newly = 0
            for j, cov in cover[k]:
                old = unc[j]
                new = old & ~cov
                if new != old:
                    unc[j] = new
                    changed.append((j, old))
                    if not new:
                        newly |= 1 << j
            qm_next = qm_cur
            nn = newly
            while nn:
                lb = nn & -nn
                nn ^= lb
                lv = level[lb.bit_length() - 1]
                if lv > qm_next:
                    qm_next = lv
            try:
                visit(t & ~comp[k], closed | newly, down | dn[k], qm_next)
            finally:
                for j, old in changed:
                    unc[j] = old

    visit((1 << m) - 1, 0, 0, 0)
    return count, nodes, by_qm, vecs


def enumerate_star_operations(s: NumericalSemigroup, *,
                              node_budget: int = DEFAULT_NODE_BUDGET,
                              materialize_cap: int = DEFAULT_MATERIALIZE_CAP) -> StarCensus:
    """Compute every star operation on S (deduplicated), with counts by qm.

    Raises LimitExceeded when the antichain sweep would exceed the node
    budget; operations are materialized only when the census is no larger
    than ``materialize_cap``.
    """
    count, omega, by_qm, vecs = _sweep(
        s, node_budget=node_budget, cap=None, collect_cap=materialize_cap)
    ops: tuple[StarOperation, ...] | None = None
    if vecs is not None and count <= materialize_cap:
        ops = tuple(_materialize(s, vec) for vec in sorted(vecs))
        if len(ops) != count:
            raise AssertionError("census produced duplicate operations")
    symmetric = s.genus == 0 or s.is_symmetric()
    if (count == 1) != symmetric:
        raise AssertionError(f"count 1 and symmetry disagree on {s}")
    if sum(by_qm.values()) != count:
        raise AssertionError("qm histogram does not add up")
    return StarCensus(semigroup=s, count=count, omega=omega, by_qm=by_qm,
                      operations=ops)


def _materialize(s: NumericalSemigroup, vec: int) -> StarOperation:
    ctx = _full_ctx(s)
    lt = ctx.light
    closed_masks = {lt.g0[j] for j in range(len(lt.g0)) if (vec >> j) & 1}
    family = tuple(
        Ideal(s, m) for k, m in enumerate(lt.f0)
        if lt.vt[k] == m or m in closed_masks
    )
    anti = tuple(
        Ideal(s, lt.g0[j]) for j in range(len(lt.g0))
        if (vec >> j) & 1 and ctx.up[j] & vec == 1 << j
    )
    return StarOperation(semigroup=s, closed_family=family, antichain=anti)


def count_star_operations_up_to(s: NumericalSemigroup, cap: int, *,
                                node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact count when it is at most ``cap``, else ``cap + 1``.

    The sweep aborts as soon as more than ``cap`` distinct operations have
    been seen, which keeps classification runs cheap on semigroups with
    enormous censuses.
    """
    try:
        count, _, _, _ = _sweep(s, node_budget=node_budget, cap=cap)
    except _CapHit:
        return cap + 1
    return count


def all_atoms_property(s: NumericalSemigroup) -> bool:
    """Whether every ideal in F0 generates a prime star operation.

    Divisorial ideals always do, so only the nondivisorial ones are tested.
    Equivalent to the census count reaching the antichain count of the star
    order (checked as a test invariant, not here).
    """
    from .ideals import enumerate_nondivisorial

    return all(is_atom(i) for i in enumerate_nondivisorial(s))
