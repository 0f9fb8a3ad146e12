"""Closed-form counts, lower bounds, and the exhaustive classification search.

Every nonsymmetric semigroup satisfies a family of proven lower bounds on its
number of star operations (through its type, genus, and the antichain counts
of the Q sets).  ``verify_supporting_bounds`` evaluates each bound with its
exact applicability guard against the exact census; ``classify_up_to`` uses
the genus bound to cut the search space and the type bounds to skip
semigroups whose census provably exceeds the target, so the search stays
exact while never enumerating a huge census.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import LimitExceeded
from .enumeration import (
    DEFAULT_NODE_BUDGET,
    Poset,
    StarCensus,
    _dedekind_or_none,
    count_antichains,
    count_star_operations_up_to,
    dedekind,
    enumerate_star_operations,
)
from .ideals import ideal_M, v_closure
from .semigroups import NumericalSemigroup, enumerate_semigroups, from_gaps, from_generators
from .stars import q_set

__all__ = [
    "BoundEntry",
    "BoundReport",
    "bound_dedekind_type",
    "bound_sum_dedekind",
    "bound_t_dedekind",
    "bound_delta",
    "formula_mu3",
    "formula_pseudosym_2mu2",
    "pseudosymmetric_family",
    "bound_xi_mu",
    "measure_xi_mu",
    "classify_up_to",
    "verify_supporting_bounds",
]


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def bound_dedekind_type(s: NumericalSemigroup) -> int:
    """Lower bound D(t-1) - 1 on the star count of a nonsymmetric semigroup."""
    return dedekind(s.type_size - 1) - 1


def _sum_dedekind_value(t: int) -> int:
    return 2 * sum(dedekind(i) for i in range(1, t)) - 3 * (t - 1)


def bound_sum_dedekind(s: NumericalSemigroup) -> int:
    """Lower bound 2*(D(1)+...+D(t-1)) - 3(t-1) on the star count."""
    return _sum_dedekind_value(s.type_size)


def bound_t_dedekind(s: NumericalSemigroup) -> int | None:
    """Lower bound (2t-1)*D(t-1) - 3t + 1, valid only when every
    pseudo-Frobenius number exceeds the multiplicity; None when it does not
    apply."""
    t = s.type_size
    if not all(tau > s.multiplicity for tau in s.pseudo_frobenius):
        return None
    return (2 * t - 1) * dedekind(t - 1) - 3 * t + 1


def bound_delta(s: NumericalSemigroup) -> int:
    """Lower bound genus + 1 on the star count of a nonsymmetric semigroup."""
    return s.genus + 1


def formula_mu3(alpha: int, beta: int) -> int:
    """Exact star count binom(alpha+beta+1, 2*alpha-beta) for the semigroup
    generated by 3, 3*alpha+1 and 3*beta+2.

    The three generators must form the minimal system, which is checked
    constructively; ValueError otherwise.
    """
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be at least 1")
    gens = (3, 3 * alpha + 1, 3 * beta + 2)
    s = from_generators(gens)
    if s.min_generators != gens:
        raise ValueError(f"{gens} is not a minimal generating system")
    return _binom(alpha + beta + 1, 2 * alpha - beta)


def pseudosymmetric_family(mu: int) -> NumericalSemigroup:
    """The semigroup {0, mu, mu+1, ..., 2mu-3, 2mu-1, ->} (mu >= 3)."""
    if mu < 3:
        raise ValueError("the family starts at multiplicity 3")
    return from_gaps(tuple(range(1, mu)) + (2 * mu - 2,))


def formula_pseudosym_2mu2(mu: int) -> int:
    """Exact star count 1 + D(mu-2) for the pseudosymmetric family above."""
    if mu < 3:
        raise ValueError("the family starts at multiplicity 3")
    return 1 + dedekind(mu - 2)


def bound_xi_mu(n: int, mu: int) -> int:
    """Upper bound binom(n-1, mu-1) on the number of semigroups with
    multiplicity mu and between 2 and n star operations."""
    if n < 2 or mu < 2:
        raise ValueError("need n >= 2 and mu >= 2")
    return _binom(n - 1, mu - 1)


def measure_xi_mu(n: int, mu: int, **kwargs) -> int:
    """Exact number of semigroups with multiplicity mu and star count in [2, n]."""
    return sum(1 for s, _ in classify_up_to(n, **kwargs) if s.multiplicity == mu)


def classify_up_to(n: int, *, node_budget: int = DEFAULT_NODE_BUDGET,
                   ) -> list[tuple[NumericalSemigroup, int]]:
    """All nonsymmetric semigroups with at most n star operations, with counts.

    Complete because a nonsymmetric semigroup has more star operations than
    its genus, so genus <= n - 1 suffices.  Semigroups whose type-based lower
    bound already exceeds n are skipped without a census; the rest get a
    census capped at n + 1 distinct operations.  Sorted by (count,
    generators).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = []
    for s in enumerate_semigroups(n - 1):
        if s.genus == 0 or s.is_symmetric():
            continue
        t = s.type_size
        # the sum bound is monotone in t, so clamping t keeps it valid
        if _sum_dedekind_value(min(t, 7)) > n:
            continue
        count = count_star_operations_up_to(s, n, node_budget=node_budget)
        if count <= n:
            rows.append((s, count))
    rows.sort(key=lambda row: (row[1], row[0].min_generators))
    return rows


@dataclass(frozen=True)
class BoundEntry:
    """One evaluated bound: value None means the value itself was out of
    reach (a Dedekind number past the cap); satisfied None means the exact
    census needed for the comparison was unavailable."""

    name: str
    value: int | None
    applicable: bool
    satisfied: bool | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class BoundReport:
    """Every bound evaluated on one semigroup, against its exact census."""

    semigroup: NumericalSemigroup
    exact: int | None
    entries: tuple[BoundEntry, ...]

    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.satisfied is False]

    @property
    def all_satisfied(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {
            "semigroup": self.semigroup.to_json(),
            "exact": self.exact,
            "bounds": [e.to_json() for e in self.entries],
        }

    def csv_rows(self) -> list[str]:
        s = self.semigroup
        head = (
            f"{str(s)},{s.genus},{s.multiplicity},{s.type_size},"
            f"{'' if self.exact is None else self.exact}"
        )
        return [
            f"{head},{e.name},{'' if e.value is None else e.value},{e.applicable},"
            f"{'' if e.satisfied is None else e.satisfied}"
            for e in self.entries
        ]


CSV_HEADER = "semigroup,genus,mult,type,star_count,bound_name,value,applicable,satisfied"


def _entry(name: str, value: int | None, applicable: bool,
           exact: int | None) -> BoundEntry:
    if not applicable:
        return BoundEntry(name, value, False, None)
    if value is None or exact is None:
        return BoundEntry(name, value, True, None)
    return BoundEntry(name, value, True, exact >= value)


def _omega_entry(name: str, value: int | None, applicable: bool,
                 actual: int) -> BoundEntry:
    if not applicable:
        return BoundEntry(name, value, False, None)
    if value is None:
        return BoundEntry(name, value, True, None)
    return BoundEntry(name, value, True, actual >= value)


def verify_supporting_bounds(s: NumericalSemigroup, *,
                             census: StarCensus | None = None,
                             node_budget: int = DEFAULT_NODE_BUDGET) -> BoundReport:
    """Evaluate every lower bound with its applicability guard on one
    nonsymmetric semigroup.

    Bounds on the full star count or on the qm histogram need the exact
    census; when that is over budget they are reported with satisfied=None.
    Bounds on inclusion-antichain counts of the Q sets are always decided.
    """
    if s.genus == 0 or s.is_symmetric():
        raise ValueError("bounds apply to nonsymmetric semigroups")
    if census is None:
        try:
            census = enumerate_star_operations(s, node_budget=node_budget,
                                               materialize_cap=0)
        except LimitExceeded:
            census = None
    exact = census.count if census is not None else None
    by_qm = census.by_qm if census is not None else None
    g = s.frobenius
    mu = s.multiplicity
    taus = s.pseudo_frobenius
    t = len(taus)
    nu = -(-(mu - 1) // 2)
    gaps = s.gaps

    q_ideals = {a: q_set(s, a) for a in gaps}
    omega_incl = {
        a: count_antichains(Poset.from_mask_inclusion(tuple(i.mask for i in qa)))
        for a, qa in q_ideals.items()
    }
    m_nondiv = {}
    for a in gaps:
        ma = ideal_M(s, a)
        m_nondiv[a] = v_closure(ma).mask != ma.mask

    def sx(x: int) -> int | None:
        return by_qm.get(x, 0) if by_qm is not None else None

    def sx_entry(name: str, x: int, value: int | None, applicable: bool) -> BoundEntry:
        return _entry(name, value, applicable, sx(x))

    dt = _dedekind_or_none(t - 1)
    entries: list[BoundEntry] = []
    entries.append(_entry("dedekind_type", dt - 1 if dt is not None else None,
                          True, exact))
    entries.append(_entry("sum_dedekind",
                          _sum_dedekind_value(t) if t - 1 <= 6 else None,
                          True, exact))
    t_ded_applies = all(tau > mu for tau in taus)
    entries.append(_entry(
        "t_dedekind",
        (2 * t - 1) * dt - 3 * t + 1 if dt is not None else None,
        t_ded_applies, exact))
    entries.append(_entry("delta_plus_one", s.genus + 1, True, exact))

    # qm-histogram bounds
    for y in gaps:
        applicable = any(m_nondiv[x] for x in gaps if x < y)
        entries.append(sx_entry(
            f"sx_after_nondivisorial[{y}]", y,
            2 * omega_incl[y] - 3, applicable))
    for i in range(2, t):
        di = _dedekind_or_none(i - 1)
        entries.append(sx_entry(
            f"sx_interior_tau[{taus[i - 1]}]", taus[i - 1],
            2 * di - 3 if di is not None else None, True))
    entries.append(sx_entry(
        "sx_frobenius", g,
        2 * dt - 5 if dt is not None else None, True))
    entries.append(_entry("sx_zero", 1, True, sx(0)))

    # inclusion-antichain bounds on the Q sets
    for a in gaps:
        if mu < a < g and (g - a) in gaps:
            entries.append(_omega_entry(
                f"omega_between_mu_g[{a}]", dt, True, omega_incl[a]))
    dnu = _dedekind_or_none(nu)
    for a in gaps:
        if 2 * a <= g and (g - a) in gaps:
            if a > mu:
                entries.append(_omega_entry(
                    f"omega_above_mu[{a}]", dnu, True, omega_incl[a]))
            if a > 2 * mu:
                entries.append(_omega_entry(
                    f"omega_above_2mu[{a}]",
                    2 * dnu - 2 if dnu is not None else None, True, omega_incl[a]))
    small = [a for a in gaps if a < mu and (g - a) in gaps]
    for a in small:
        entries.append(_omega_entry(
            f"omega_below_mu[{a}]", _dedekind_or_none(a - 1), True, omega_incl[a]))
    if small:
        a0 = min(small)
        for x in range(a0 + 1, mu):
            entries.append(_omega_entry(
                f"omega_below_mu_later[{x}]", _dedekind_or_none(x - 2), True,
                omega_incl[x]))

    # global antichain-sum bound
    entries.append(_entry(
        "sum_q_antichains", 1 + sum(omega_incl[a] - 1 for a in gaps), True, exact))

    return BoundReport(semigroup=s, exact=exact, entries=tuple(entries))
