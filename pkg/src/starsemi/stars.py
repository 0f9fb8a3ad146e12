"""Star operations generated by ideal sets, and the star order they induce.

A star operation is a closure on fractional ideals that fixes S, commutes
with translation, and is monotone and idempotent.  Here every operation is
handled extensionally through its family of closed ideals inside F0(S): the
largest operation closing a set Delta sends J to the intersection of the
divisorial closure of J with all translates (-a + I) for I in Delta and
a in (I - J).  Two operations are equal exactly when their closed families
agree, which reduces equality, deduplication and counting to bitmask work.

The order "I below J when I is closed under the operation generated by J"
is a partial order on nondivisorial normalized ideals; its antichains index
all star operations.  Per-semigroup tables (closure of every nondivisorial
ideal under every principal operation, the order matrix, covering data for
the antichain sweep) are cached on the semigroup value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .ideals import (
    DEFAULT_GENUS_LIMIT,
    Ideal,
    _f0_masks,
    _head,
    _quotient_mask,
    _shift_down_mask,
    _smask,
    _sup_missing,
    _v_table,
    ideal_M,
)
from .semigroups import NumericalSemigroup

__all__ = [
    "StarOperation",
    "StarPoset",
    "star_close",
    "build_star",
    "star_leq",
    "build_star_poset",
    "is_atom",
    "q_set",
    "qm_invariant",
]


def _star_close_mask(g: int, vj: int, delta: Iterable[int], jm: int) -> int:
    """Close jm under the largest star operation fixing every mask in delta.

    Follows the translate-intersection form: start from the divisorial
    closure and cut with (-a + I) for every a in (I - J).  Translations by
    a > g add nothing (they contain all of N on the window), so a stays
    within [0, g].  The result can never drop below jm, which gives the
    early exits.
    """
    res = vj
    for im in delta:
        if res == jm:
            break
        q = _quotient_mask(g, im, jm) & _head(g)
        while q:
            low = q & -q
            q ^= low
            res &= _shift_down_mask(g, im, low.bit_length() - 1)
            if res == jm:
                break
    return res


# ---------------------------------------------------------------------------
# cached per-semigroup tables

@dataclass(frozen=True)
class _Light:
    g: int
    smask: int
    f0: tuple[int, ...]
    index: dict
    vt: tuple[int, ...]
    g0_f0: tuple[int, ...]      # positions in f0 of the nondivisorial ideals
    g0: tuple[int, ...]         # their masks, in f0 order
    level: tuple[int, ...]      # Q-index of each nondivisorial ideal, 0 if none


@dataclass(frozen=True)
class _Full:
    light: _Light
    cl: tuple[tuple[int, ...], ...]   # cl[j][i]: closure of g0[j] under the op of g0[i]
    up: tuple[int, ...]               # up[j]: bitmask over g0 of {i : j below i}, self included
    dn: tuple[int, ...]               # transpose of up
    comp: tuple[int, ...]             # up | dn
    excess: tuple[int, ...]           # v(j) minus j, per g0 member
    cover: tuple[tuple[tuple[int, int], ...], ...]  # cover[i]: (j, excess bits of j removed by i)
    max_pos: int                      # position of the order maximum in g0


@lru_cache(maxsize=None)
def _light_ctx(s: NumericalSemigroup, genus_limit: int = DEFAULT_GENUS_LIMIT) -> _Light:
    g = s.frobenius
    f0 = _f0_masks(s, genus_limit)
    vt = _v_table(s, genus_limit)
    index = {m: k for k, m in enumerate(f0)}
    g0_f0 = tuple(k for k in range(len(f0)) if f0[k] != vt[k])
    g0 = tuple(f0[k] for k in g0_f0)
    levels = []
    for k in g0_f0:
        a = _sup_missing(g, f0[k])
        levels.append(a if a is not None and (vt[k] >> a) & 1 else 0)
    return _Light(g=g, smask=_smask(s), f0=f0, index=index, vt=vt,
                  g0_f0=g0_f0, g0=g0, level=tuple(levels))


@lru_cache(maxsize=None)
def _full_ctx(s: NumericalSemigroup, genus_limit: int = DEFAULT_GENUS_LIMIT) -> _Full:
    lt = _light_ctx(s, genus_limit)
    g = lt.g
    m = len(lt.g0)
    vg0 = tuple(lt.vt[k] for k in lt.g0_f0)
    cl = tuple(
        tuple(_star_close_mask(g, vg0[j], (lt.g0[i],), lt.g0[j]) for i in range(m))
        for j in range(m)
    )
    up = []
    for j in range(m):
        row = 0
        for i in range(m):
            if cl[j][i] == lt.g0[j]:
                row |= 1 << i
        up.append(row)
    dn = [0] * m
    for j in range(m):
        for i in range(m):
            if (up[j] >> i) & 1:
                dn[i] |= 1 << j
    for j in range(m):
        if up[j] & dn[j] != 1 << j:
            raise AssertionError(f"star order not antisymmetric on {s}")
    excess = tuple(vg0[j] & ~lt.g0[j] for j in range(m))
    cover = tuple(
        tuple((j, excess[j] & ~cl[j][i]) for j in range(m) if excess[j] & ~cl[j][i])
        for i in range(m)
    )
    max_pos = -1
    if m:
        all_bits = (1 << m) - 1
        for j in range(m):
            if dn[j] == all_bits:
                max_pos = j
                break
        if max_pos < 0:
            raise AssertionError(f"star order on {s} has no maximum")
    return _Full(light=lt, cl=cl, up=tuple(up), dn=tuple(dn),
                 comp=tuple(up[j] | dn[j] for j in range(m)),
                 excess=excess, cover=cover, max_pos=max_pos)


def _masks_of(ideals: Iterable[Ideal], s: NumericalSemigroup) -> tuple[int, ...]:
    out = []
    for i in ideals:
        if i.semigroup != s:
            raise ValueError("ideal belongs to a different semigroup")
        out.append(i.mask)
    return tuple(out)


# ---------------------------------------------------------------------------
# public operations

def star_close(delta: Iterable[Ideal], target: Ideal) -> Ideal:
    """Closure of ``target`` under the largest star operation fixing delta.

    An empty delta gives the divisorial closure.
    """
    s = target.semigroup
    lt = _light_ctx(s)
    vj = lt.vt[lt.index[target.mask]] if target.mask in lt.index else None
    if vj is None:
        raise ValueError("target must lie between S and N")
    return Ideal(s, _star_close_mask(lt.g, vj, _masks_of(delta, s), target.mask))


def star_leq(i: Ideal, j: Ideal) -> bool:
    """True when i is fixed by the star operation generated by j."""
    i._check_same(j)
    return star_close((j,), i).mask == i.mask


@dataclass(frozen=True)
class StarOperation:
    """A star operation given extensionally by its closed ideals in F0.

    ``antichain`` holds the order-maximal nondivisorial closed ideals; it
    determines the whole operation.  ``generators`` records the set the
    operation was built from, when there was one.
    """

    semigroup: NumericalSemigroup
    closed_family: tuple[Ideal, ...]
    antichain: tuple[Ideal, ...]
    generators: tuple[Ideal, ...] | None = None

    def close(self, target: Ideal) -> Ideal:
        return star_close(self.antichain, target)

    def is_closed(self, i: Ideal) -> bool:
        return self.close(i).mask == i.mask

    @property
    def closed_count(self) -> int:
        return len(self.closed_family)

    def _key(self) -> frozenset[int]:
        return frozenset(i.mask for i in self.closed_family)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StarOperation):
            return NotImplemented
        return self.semigroup == other.semigroup and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.semigroup, self._key()))

    def to_json(self) -> dict:
        return {
            "antichain": [i.to_json() for i in self.antichain],
            "closed_count": self.closed_count,
            "qm": qm_invariant(self),
        }

    def __str__(self) -> str:
        return "star{" + "; ".join(str(i) for i in self.antichain) + "}"


def build_star(s: NumericalSemigroup, delta: Iterable[Ideal] = (), *,
               check_axioms: bool = False) -> StarOperation:
    """The star operation generated by a set of ideals in F0(S).

    The empty set generates the divisorial closure; the closed family is the
    fixed-point set over F0, and the antichain its order-maximal
    nondivisorial part.  ``check_axioms`` additionally verifies extension,
    monotonicity, idempotence, S-closedness and intersection stability over
    all of F0 (quadratic, meant for debugging and tests).
    """
    lt = _light_ctx(s)
    dmasks = _masks_of(delta, s)
    closure = [
        _star_close_mask(lt.g, lt.vt[k], dmasks, lt.f0[k])
        for k in range(len(lt.f0))
    ]
    closed_idx = [k for k in range(len(lt.f0)) if closure[k] == lt.f0[k]]
    closed = tuple(Ideal(s, lt.f0[k]) for k in closed_idx)
    nondiv = [lt.f0[k] for k in closed_idx if lt.vt[k] != lt.f0[k]]
    maximal = []
    for mk in nondiv:
        ii = Ideal(s, mk)
        if not any(
            other != mk and star_leq(ii, Ideal(s, other)) for other in nondiv
        ):
            maximal.append(ii)
    op = StarOperation(
        semigroup=s, closed_family=closed, antichain=tuple(maximal),
        generators=tuple(Ideal(s, m) for m in dmasks),
    )
    if check_axioms:
        _verify_axioms(op, closure, lt)
    return op


def _verify_axioms(op: StarOperation, closure: Sequence[int], lt: _Light) -> None:
    s = op.semigroup
    n = len(lt.f0)
    for k in range(n):
        if lt.f0[k] | closure[k] != closure[k]:
            raise AssertionError(f"extension fails on {Ideal(s, lt.f0[k])}")
        ck = lt.index[closure[k]]
        if closure[ck] != closure[k]:
            raise AssertionError(f"idempotence fails on {Ideal(s, lt.f0[k])}")
    if closure[lt.index[lt.smask]] != lt.smask:
        raise AssertionError("S is not closed")
    for k in range(n):
        for l in range(n):
            if lt.f0[k] | lt.f0[l] == lt.f0[l] and closure[k] | closure[l] != closure[l]:
                raise AssertionError("monotonicity fails")
    closed_set = {i.mask for i in op.closed_family}
    for a in closed_set:
        for b in closed_set:
            if a & b not in closed_set:
                raise AssertionError("closed family not intersection stable")
    recovered = {m for m in closed_set if lt.vt[lt.index[m]] == m}
    for i in op.antichain:
        recovered |= {
            lt.g0[j] for j in range(len(lt.g0))
            if star_leq(Ideal(s, lt.g0[j]), i)
        }
    if recovered != closed_set:
        raise AssertionError("antichain does not recover the closed family")


@dataclass(frozen=True)
class StarPoset:
    """The star order on the nondivisorial normalized ideals of a semigroup."""

    semigroup: NumericalSemigroup
    elements: tuple[Ideal, ...]
    up: tuple[int, ...]   # up[i]: bitmask of j with elements[i] below elements[j]

    @property
    def size(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def maximum(self) -> Ideal:
        all_bits = (1 << self.size) - 1
        for j in range(self.size):
            down = sum(1 << i for i in range(self.size) if self.leq(i, j))
            if down == all_bits:
                return self.elements[j]
        raise AssertionError("no maximum element")

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (upper, lower) of the covering relation (transitive reduction)."""
        out = []
        n = self.size
        for u in range(n):
            for l in range(n):
                if l == u or not self.leq(l, u):
                    continue
                if any(
                    w != l and w != u and self.leq(l, w) and self.leq(w, u)
                    for w in range(n)
                ):
                    continue
                out.append((u, l))
        return out

    def to_dot(self) -> str:
        lines = ["digraph star_order {", "  rankdir=TB;"]
        for i in self.elements:
            lines.append(f'  "{i}";')
        for u, l in sorted(self.covers()):
            lines.append(f'  "{self.elements[u]}" -> "{self.elements[l]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_star_poset(s: NumericalSemigroup) -> StarPoset:
    """Full order matrix over the nondivisorial ideals; empty when symmetric."""
    ctx = _full_ctx(s)
    lt = ctx.light
    poset = StarPoset(
        semigroup=s,
        elements=tuple(Ideal(s, m) for m in lt.g0),
        up=ctx.up,
    )
    if poset.size:
        top = poset.maximum()
        mg = ideal_M(s, s.frobenius)
        if top.mask != mg.mask:
            raise AssertionError("order maximum is not the largest ideal avoiding g")
    return poset


def q_set(s: NumericalSemigroup, a: int) -> tuple[Ideal, ...]:
    """Ideals I in F0 whose largest missing natural is a, with a back inside
    the divisorial closure.

    Empty exactly when the largest ideal avoiding a is divisorial; when
    nonempty that ideal belongs to the set and dominates it in the star
    order, which is asserted.
    """
    if a not in s.gaps:
        raise ValueError(f"{a} is not a gap of {s}")
    lt = _light_ctx(s)
    out = []
    for k, mask in enumerate(lt.f0):
        if _sup_missing(lt.g, mask) == a and (lt.vt[k] >> a) & 1:
            out.append(Ideal(s, mask))
    if out:
        top = ideal_M(s, a)
        if top.mask not in {i.mask for i in out}:
            raise AssertionError(f"largest ideal avoiding {a} missing from its Q set")
        for i in out:
            if not star_leq(i, top):
                raise AssertionError(f"{i} not dominated by the largest ideal avoiding {a}")
    return tuple(out)


def qm_invariant(star: StarOperation) -> int:
    """Largest gap x such that some closed ideal lies in the Q set of x, else 0."""
    s = star.semigroup
    lt = _light_ctx(s)
    pos = {m: j for j, m in enumerate(lt.g0)}
    best = 0
    for i in star.closed_family:
        j = pos.get(i.mask)
        if j is not None and lt.level[j] > best:
            best = lt.level[j]
    return best


def is_atom(i: Ideal) -> bool:
    """Whether the star operation generated by i is prime.

    Divisorial ideals generate the divisorial closure, the order maximum,
    and are reported as (trivial) atoms; query ``i.is_divisorial`` to tell
    them apart.  For a nondivisorial ideal the criterion is: whenever i is
    the intersection of two ideals of F0, it is below one of them in the
    star order.  The pair scan over supersets of i is exhaustive.
    """
    if i.is_divisorial:
        return True
    s = i.semigroup
    lt = _light_ctx(s)
    im = i.mask
    sups = [m for m in lt.f0 if m | im == m and m != im]
    leq_memo: dict[int, bool] = {}

    def leq(other: int) -> bool:
        if other not in leq_memo:
            leq_memo[other] = star_leq(i, Ideal(s, other))
        return leq_memo[other]

    for x in range(len(sups)):
        for y in range(x + 1, len(sups)):
            if sups[x] & sups[y] == im and not (leq(sups[x]) or leq(sups[y])):
                return False
    return True
