"""Fractional ideals of a numerical semigroup, stored as window bitmasks.

Every ideal this library manipulates lives between the semigroup S and the
naturals (possibly after normalization) and therefore contains every integer
past the Frobenius number g.  Membership is recorded in a mask over the
window [0, g+1]: bit x (x <= g) is plain membership, and bit g+1 stands for
the whole tail {x : x > g}.  That bit is set on every valid ideal, so the
finite mask determines the ideal exactly and all arithmetic (quotients,
divisorial closure, translates) closes over masks of width g+2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import LimitExceeded, NotAnIdeal
from .semigroups import NumericalSemigroup

__all__ = [
    "Ideal",
    "normalize",
    "quotient",
    "v_closure",
    "ideal_M",
    "maximal_ideal",
    "enumerate_F0",
    "enumerate_nondivisorial",
    "DEFAULT_GENUS_LIMIT",
]

DEFAULT_GENUS_LIMIT = 20


# ---------------------------------------------------------------------------
# mask primitives (shared with the star-operation machinery)

def _head(g: int) -> int:
    return (1 << (g + 1)) - 1


def _tail_bit(g: int) -> int:
    return 1 << (g + 1)


def _full_mask(g: int) -> int:
    return (1 << (g + 2)) - 1


def _extend(g: int, mask: int) -> int:
    # membership over [0, 2g+3]: everything past g is present
    return (mask & _head(g)) | (((1 << (g + 3)) - 1) << (g + 1))


def _quotient_mask(g: int, im: int, jm: int) -> int:
    """Mask of (I - J) = {x >= 0 : x + J inside I} over the window."""
    jcore = jm & _head(g)
    bad = ~_extend(g, im) & ((1 << (2 * g + 4)) - 1)
    out = _tail_bit(g)
    for x in range(g + 1):
        if (jcore << x) & bad == 0:
            out |= 1 << x
    return out


def _v_mask(g: int, smask: int, im: int) -> int:
    """Divisorial closure (S - (S - I)) of a window ideal."""
    return _quotient_mask(g, smask, _quotient_mask(g, smask, im))


def _shift_down_mask(g: int, im: int, a: int) -> int:
    """(-a + I) intersected with the naturals, as a window mask (a >= 0)."""
    return ((_extend(g, im) >> a) & _head(g)) | _tail_bit(g)


def _smask(s: NumericalSemigroup) -> int:
    g = s.frobenius
    if g < 0:
        return 1
    return (~s.gap_mask & _head(g)) | _tail_bit(g)


def _sup_missing(g: int, mask: int) -> int | None:
    """Largest natural not in the ideal, or None when the ideal is all of N."""
    missing = ~mask & _head(g)
    if missing == 0:
        return None
    return missing.bit_length() - 1


# ---------------------------------------------------------------------------
# the Ideal value type

@dataclass(frozen=True)
class Ideal:
    """An ideal of S contained in the naturals, with the full tail past g.

    Most ideals in play are normalized (they contain 0 and hence all of S);
    raw quotient results may have a positive minimum, which is why the type
    only enforces the ideal property itself.  ``is_normalized`` tells the two
    apart, and ``normalized()`` shifts the minimum back to zero.
    """

    semigroup: NumericalSemigroup
    mask: int

    def __post_init__(self):
        s = self.semigroup
        g = s.frobenius
        if self.mask & ~_full_mask(g):
            raise ValueError("ideal mask exceeds the window")
        if not (self.mask >> (g + 1)) & 1:
            raise ValueError("ideal must contain the tail past the Frobenius number")
        for x in range(g + 1):
            if (self.mask >> x) & 1:
                for m in s.min_generators:
                    if x + m <= g and not (self.mask >> (x + m)) & 1:
                        raise NotAnIdeal(x, m)

    # -- queries ------------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.semigroup.frobenius:
            return True
        return bool((self.mask >> x) & 1)

    @property
    def is_normalized(self) -> bool:
        return bool(self.mask & 1)

    @property
    def added_gaps(self) -> tuple[int, ...]:
        """Gaps of S that are members; for F0 ideals this determines the ideal."""
        return tuple(a for a in self.semigroup.gaps if (self.mask >> a) & 1)

    @property
    def is_divisorial(self) -> bool:
        return self.mask == v_closure(self).mask

    def members_upto(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if x in self]

    def min_element(self) -> int:
        return (self.mask & -self.mask).bit_length() - 1

    def normalized(self) -> "Ideal":
        m = self.min_element()
        if m == 0:
            return self
        g = self.semigroup.frobenius
        return Ideal(self.semigroup, _shift_down_mask(g, self.mask, m))

    def intersect(self, other: "Ideal") -> "Ideal":
        self._check_same(other)
        return Ideal(self.semigroup, self.mask & other.mask)

    __and__ = intersect

    def issubset(self, other: "Ideal") -> bool:
        self._check_same(other)
        return self.mask | other.mask == other.mask

    def _check_same(self, other: "Ideal") -> None:
        if self.semigroup != other.semigroup:
            raise ValueError("ideals belong to different semigroups")

    def to_json(self) -> dict:
        return {"added_gaps": list(self.added_gaps)}

    def __str__(self) -> str:
        added = self.added_gaps
        if self.is_normalized:
            return "S+{" + ",".join(str(a) for a in added) + "}" if added else "S"
        return "{" + ",".join(str(x) for x in self.members_upto(self.semigroup.frobenius + 1)) + ",...}"

    def __repr__(self) -> str:
        return f"Ideal({self.semigroup!r}, {str(self)})"


# ---------------------------------------------------------------------------
# constructors and arithmetic

def ideal_from_added(s: NumericalSemigroup, added: Iterable[int] = ()) -> Ideal:
    """The ideal S union A for a set A of gaps of S."""
    mask = _smask(s)
    for a in added:
        if a not in s.gaps:
            raise ValueError(f"{a} is not a gap of {s}")
        mask |= 1 << a
    return Ideal(s, mask)


def maximal_ideal(s: NumericalSemigroup) -> Ideal:
    """The maximal ideal of S (every positive member), not normalized."""
    if s.genus == 0:
        raise ValueError("the full monoid window cannot drop 0")
    return Ideal(s, _smask(s) & ~1)


def normalize(s: NumericalSemigroup, elements: Iterable[int]) -> Ideal:
    """Normalize a fractional ideal given by a finite element list.

    The listed integers, together with everything past their maximum, form
    the set; the result is that set shifted so its minimum becomes 0.  Raises
    NotAnIdeal (with witness) when the set is not an ideal of S.
    """
    elems = sorted(set(int(x) for x in elements))
    if not elems:
        raise ValueError("an ideal needs at least one element")
    lo, hi = elems[0], elems[-1]
    shifted = {x - lo for x in elems}
    top = hi - lo

    def member(x: int) -> bool:
        return x in shifted or x > top

    for a in sorted(shifted):
        for m in s.min_generators:
            if not member(a + m):
                raise NotAnIdeal(a + lo, m)
    g = s.frobenius
    mask = _tail_bit(g)
    for x in range(g + 1):
        if member(x):
            mask |= 1 << x
    return Ideal(s, mask)


def quotient(i: Ideal, j: Ideal, normalized: bool = False) -> Ideal:
    """The ideal quotient (I - J) = {x : x + J inside I}.

    For I, J in F0 the result sits inside the naturals and contains the whole
    tail, but contains 0 only when J is inside I; pass ``normalized=True`` to
    shift the minimum back to zero.
    """
    i._check_same(j)
    g = i.semigroup.frobenius
    out = Ideal(i.semigroup, _quotient_mask(g, i.mask, j.mask))
    return out.normalized() if normalized else out


def v_closure(i: Ideal) -> Ideal:
    """Divisorial closure I -> (S - (S - I)); extensive and idempotent."""
    s = i.semigroup
    return Ideal(s, _v_mask(s.frobenius, _smask(s), i.mask))


def ideal_M(s: NumericalSemigroup, a: int) -> Ideal:
    """Largest ideal between S and N that avoids the gap a."""
    if a not in s.gaps:
        raise ValueError(f"{a} is not a gap of {s}")
    g = s.frobenius
    mask = _tail_bit(g)
    for x in range(g + 1):
        if (a - x) not in s:
            mask |= 1 << x
    return Ideal(s, mask)


@lru_cache(maxsize=None)
def _f0_masks(s: NumericalSemigroup, genus_limit: int) -> tuple[int, ...]:
    if s.genus > genus_limit:
        raise LimitExceeded(
            f"F0 enumeration over 2^{s.genus} gap subsets exceeds the genus budget {genus_limit}"
        )
    gaps = s.gaps
    g = s.frobenius
    pos = {a: k for k, a in enumerate(gaps)}
    req = []
    for a in gaps:
        r = 0
        for m in s.min_generators:
            b = a + m
            if b <= g and b in pos:
                r |= 1 << pos[b]
        req.append(r)
    base = _smask(s)
    out = []
    for bits in range(1 << len(gaps)):
        t = bits
        ok = True
        while t:
            low = t & -t
            if req[low.bit_length() - 1] & ~bits:
                ok = False
                break
            t ^= low
        if ok:
            mask = base
            t = bits
            while t:
                low = t & -t
                mask |= 1 << gaps[low.bit_length() - 1]
                t ^= low
            out.append(mask)
    return tuple(out)


@lru_cache(maxsize=None)
def _v_table(s: NumericalSemigroup, genus_limit: int) -> tuple[int, ...]:
    g = s.frobenius
    sm = _smask(s)
    return tuple(_v_mask(g, sm, m) for m in _f0_masks(s, genus_limit))


def enumerate_F0(s: NumericalSemigroup, genus_limit: int = DEFAULT_GENUS_LIMIT) -> tuple[Ideal, ...]:
    """All ideals between S and N, in a fixed deterministic order.

    These are exactly the sets S union A with A a gap subset satisfying the
    ideal property; the order is by the added-gap subset pattern.
    """
    return tuple(Ideal(s, m) for m in _f0_masks(s, genus_limit))


def enumerate_nondivisorial(s: NumericalSemigroup, genus_limit: int = DEFAULT_GENUS_LIMIT) -> tuple[Ideal, ...]:
    """The sublist of enumerate_F0 that the divisorial closure moves."""
    masks = _f0_masks(s, genus_limit)
    vt = _v_table(s, genus_limit)
    return tuple(Ideal(s, m) for m, v in zip(masks, vt) if m != v)
