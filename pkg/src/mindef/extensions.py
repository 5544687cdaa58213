"""Extension enumeration: preferred, preferred-on-a-set, and min-def.

The solver explores an include/exclude tree over the candidate arguments
(see :mod:`mindef._kernels`). Before searching it shrinks the problem:

* arguments that can never sit in a conflict-free set (self-attackers) or
  can never be defended inside the search space are dropped, to a fixed
  point;
* for maximality searches, the "forced core" - the least fixed point of
  collective defence inside the space - is included up front, and anything
  in conflict with it is dropped, again to a fixed point. Every maximal
  admissible subset of the space provably contains that core, so this
  prunes without losing solutions.

Min-def extensions are computed by a two-step pipeline: enumerate the
preferred extensions on the focus, keep those whose unrestricted part is
maximal, then shrink each one's restricted part to all its minimal
admissible supports; a final strict-preference filter removes candidates
dominated across branches.
"""

import itertools
import time
from dataclasses import dataclass

from . import _kernels
from .errors import (BudgetExceeded, CrossFrameworkSet, EmptyFamily,
                     NotWithinFocus, PreconditionViolated)
from .model import ArgumentationFramework, ArgumentSet, Partition
from .semantics import is_admissible, is_restrictedly_admissible

CONFLICT_FREE = "conflict-free"
ADMISSIBLE_ALL = "admissible-all"
ADMISSIBLE_MAX = "admissible-max"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a single solver or oracle invocation.

    ``max_arguments_for_exhaustive`` caps the exhaustive (oracle) search
    space; exceeding it is a hard error, never a truncated answer. The
    wall-clock ceiling applies to the tree search, which aborts with
    :class:`BudgetExceeded` when it fires.
    """

    max_arguments_for_exhaustive: int = 20
    wall_clock_seconds: float | None = None

    def deadline(self) -> float | None:
        if self.wall_clock_seconds is None:
            return None
        return time.monotonic() + self.wall_clock_seconds


DEFAULT_BUDGET = SearchBudget()


class ExtensionFamily:
    """A duplicate-free, canonically ordered collection of argument sets.

    Canonical order is lexicographic on the tuple of sorted member names,
    so identical inputs always serialize identically.
    """

    __slots__ = ("members", "_masks", "framework")

    def __init__(self, members):
        framework = None
        by_mask = {}
        for s in members:
            if framework is None:
                framework = s.framework
            elif s.framework is not framework:
                raise CrossFrameworkSet(
                    "family members belong to different frameworks")
            by_mask[s.mask] = s
        self.framework = framework
        self.members = tuple(sorted(by_mask.values(),
                                    key=lambda s: tuple(sorted(s.names))))
        self._masks = frozenset(by_mask)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        return (isinstance(s, ArgumentSet)
                and s.framework is self.framework
                and s.mask in self._masks)

    def __eq__(self, other):
        if not isinstance(other, ExtensionFamily):
            return NotImplemented
        if len(self) == len(other) == 0:
            return True
        return self.framework is other.framework and self._masks == other._masks

    def __hash__(self):
        return hash((id(self.framework), self._masks))

    def __repr__(self):
        return "ExtensionFamily[%s]" % ", ".join(repr(m) for m in self.members)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _prepare_space(af, space_mask, mode):
    """Shrink the search space; returns (candidate mask, forced mask)."""
    att = af.attacker_masks
    tgt = af.target_masks
    cand = space_mask
    for i in _bits(space_mask):
        if att[i] >> i & 1:
            cand &= ~(1 << i)  # self-attackers are never conflict-free
    if mode == CONFLICT_FREE:
        return cand, 0
    forced = 0
    while True:
        changed = False
        # drop members with an attacker nobody in the space can answer
        dropping = True
        while dropping:
            dropping = False
            for i in _bits(cand):
                for b in _bits(att[i]):
                    if att[b] & cand == 0:
                        cand &= ~(1 << i)
                        dropping = changed = True
                        break
        if mode != ADMISSIBLE_MAX:
            return cand, 0
        # least fixed point of collective defence inside the space
        forced = 0
        while True:
            grown = forced
            for i in _bits(cand & ~forced):
                if all(att[b] & forced for b in _bits(att[i])):
                    grown |= 1 << i
            if grown == forced:
                break
            forced = grown
        conflicted = 0
        for i in _bits(cand & ~forced):
            if (att[i] | tgt[i]) & forced:
                conflicted |= 1 << i
        if conflicted:
            cand &= ~conflicted
            changed = True
        if not changed:
            return cand, forced


def _solve_space(af, space_mask, mode, budget):
    """Global masks of all qualifying subsets of ``space_mask``."""
    deadline = (budget or DEFAULT_BUDGET).deadline()
    cand, forced = _prepare_space(af, space_mask, mode)
    members = list(_bits(cand))
    k = len(members)
    local_of = {g: j for j, g in enumerate(members)}

    def to_local(global_mask):
        out = 0
        for g in _bits(global_mask & cand):
            out |= 1 << local_of[g]
        return out

    conflict = [to_local(af.attacker_masks[g] | af.target_masks[g])
                for g in members]
    ob_off = [0]
    ob_masks = []
    for g in members:
        if mode != CONFLICT_FREE:
            for b in _bits(af.attacker_masks[g]):
                ob_masks.append(to_local(af.attacker_masks[b]))
        ob_off.append(len(ob_masks))
    forced_local = to_local(forced)
    pos_idx = [j for j in range(k) if not forced_local >> j & 1]
    suffix = [0] * (len(pos_idx) + 1)
    for d in range(len(pos_idx) - 1, -1, -1):
        suffix[d] = suffix[d + 1] | (1 << pos_idx[d])
    try:
        local_masks = _kernels.dfs_enumerate(
            k, pos_idx, suffix, forced_local, conflict, ob_off, ob_masks,
            mode == ADMISSIBLE_MAX, deadline)
    except _kernels.DeadlineReached:
        raise BudgetExceeded(
            f"wall-clock ceiling of {budget.wall_clock_seconds}s exhausted"
        ) from None
    globals_of = {j: g for g, j in local_of.items()}
    out = []
    for lm in local_masks:
        gm = 0
        for j in _bits(lm):
            gm |= 1 << globals_of[j]
        out.append(gm)
    return out


def _subset_maximal_masks(masks):
    # a strict superset has strictly more bits, so candidates only need to
    # be tested against survivors from larger popcount groups
    groups = {}
    for m in set(masks):
        groups.setdefault(m.bit_count(), []).append(m)
    kept = []
    larger = []
    for pc in sorted(groups, reverse=True):
        survivors = [m for m in sorted(groups[pc])
                     if not any(m | k == k for k in larger)]
        kept.extend(survivors)
        larger = kept[:]
    return kept


def _space_of(af, within):
    if within is None:
        return af.full_mask
    if within.framework is not af:
        raise CrossFrameworkSet("set belongs to a different framework")
    return within.mask


def conflict_free_sets(af: ArgumentationFramework, within: ArgumentSet = None,
                       budget: SearchBudget = None) -> ExtensionFamily:
    """Every conflict-free subset of ``within`` (default: all arguments)."""
    space = _space_of(af, within)
    masks = _solve_space(af, space, CONFLICT_FREE, budget)
    return ExtensionFamily(ArgumentSet(af, m) for m in masks)


def admissible_sets(af: ArgumentationFramework, within: ArgumentSet = None,
                    budget: SearchBudget = None) -> ExtensionFamily:
    """Every admissible subset of ``within`` (default: all arguments)."""
    space = _space_of(af, within)
    masks = _solve_space(af, space, ADMISSIBLE_ALL, budget)
    return ExtensionFamily(ArgumentSet(af, m) for m in masks)


def restrictedly_admissible_sets(af: ArgumentationFramework, p: Partition,
                                 budget: SearchBudget = None) -> ExtensionFamily:
    """Every restrictedly admissible subset of the focus."""
    members = [s for s in admissible_sets(af, p.focus, budget)
               if is_restrictedly_admissible(af, p, s)]
    return ExtensionFamily(members)


def preferred_extensions(af: ArgumentationFramework,
                         budget: SearchBudget = None) -> ExtensionFamily:
    """The inclusion-maximal admissible sets (always at least one)."""
    return preferred_extensions_on(af, af.full_set(), budget)


def preferred_extensions_on(af: ArgumentationFramework, x: ArgumentSet,
                            budget: SearchBudget = None) -> ExtensionFamily:
    """The inclusion-maximal admissible subsets of ``x``.

    Note this is genuinely different from intersecting the preferred
    extensions with ``x``: a defender outside ``x`` does not count.
    """
    space = _space_of(af, x)
    masks = _solve_space(af, space, ADMISSIBLE_MAX, budget)
    kept = _subset_maximal_masks(masks)
    return ExtensionFamily(ArgumentSet(af, m) for m in kept)


def minimize_restricted(af: ArgumentationFramework, p: Partition,
                        e: ArgumentSet, budget: SearchBudget = None) -> ExtensionFamily:
    """All admissible shrinkings of ``e`` that keep its unrestricted part.

    Every result is ``e_u`` plus a subset of ``e_r`` that is minimal for
    inclusion among those keeping the whole set admissible. ``e`` itself
    qualifies as a support, so the family is never empty.
    """
    if e.framework is not af:
        raise CrossFrameworkSet("set belongs to a different framework")
    if e.mask & ~p.focus.mask:
        raise PreconditionViolated("set must lie within the partition's focus")
    if not is_admissible(af, e):
        raise PreconditionViolated("set must be admissible")
    deadline = (budget or DEFAULT_BUDGET).deadline()
    eu = e.mask & p.unrestricted.mask
    er_bits = list(_bits(e.mask & p.restricted.mask))
    minimal = []
    for size in range(len(er_bits) + 1):
        for combo in itertools.combinations(er_bits, size):
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded(
                    f"wall-clock ceiling of {budget.wall_clock_seconds}s exhausted")
            rmask = 0
            for b in combo:
                rmask |= 1 << b
            if any(rmask | m == rmask for m in minimal):
                continue  # strict superset of a known minimal support
            if is_admissible(af, ArgumentSet(af, eu | rmask)):
                minimal.append(rmask)
    return ExtensionFamily(ArgumentSet(af, eu | m) for m in minimal)


def min_def_extensions(af: ArgumentationFramework, p: Partition,
                       budget: SearchBudget = None) -> ExtensionFamily:
    """The preference-maximal restrictedly admissible sets.

    Two-step computation: take the preferred extensions on the focus whose
    unrestricted part is inclusion-maximal, minimize each one's restricted
    part, and keep the candidates no other candidate strictly improves on.
    """
    prefs = preferred_extensions_on(af, p.focus, budget)
    u_masks = [s.mask & p.unrestricted.mask for s in prefs]
    max_u = _subset_maximal_masks(u_masks)
    candidates = []
    for s in prefs:
        if s.mask & p.unrestricted.mask in max_u:
            candidates.extend(minimize_restricted(af, p, s, budget))
    return filter_maximal(ExtensionFamily(candidates), order="prec", partition=p)


def _prec_strictly_below(p, m1, m2):
    # strictly more unrestricted content, or the same unrestricted content
    # with strictly less restricted content
    u1, r1 = m1 & p.unrestricted.mask, m1 & p.restricted.mask
    u2, r2 = m2 & p.unrestricted.mask, m2 & p.restricted.mask
    if u1 != u2:
        return u1 | u2 == u2
    return r1 != r2 and r2 | r1 == r1


def filter_maximal(family: ExtensionFamily, order: str = "subset",
                   partition: Partition = None) -> ExtensionFamily:
    """Members of ``family`` not strictly dominated by another member.

    ``order`` is ``"subset"`` (inclusion) or ``"prec"`` (the partition's
    preference order; requires ``partition``, and every member must lie
    within its focus).
    """
    if order == "subset":
        kept = _subset_maximal_masks([s.mask for s in family])
        return ExtensionFamily(ArgumentSet(family.framework, m) for m in kept)
    if order != "prec":
        raise ValueError(f"unknown order {order!r}")
    if partition is None:
        raise ValueError("prec order needs a partition")
    p = partition
    if family.framework is not None and family.framework is not p.framework:
        raise CrossFrameworkSet("family and partition belong to different frameworks")
    for s in family:
        if s.mask & ~p.focus.mask:
            raise NotWithinFocus(f"family member {s!r} is not within the focus")
    # dominators always rank higher under (|unrestricted|, -|restricted|)
    masks = sorted({s.mask for s in family},
                   key=lambda m: (-(m & p.unrestricted.mask).bit_count(),
                                  (m & p.restricted.mask).bit_count(), m))
    kept = []
    for m in masks:
        if not any(_prec_strictly_below(p, m, k) for k in kept):
            kept.append(m)
    return ExtensionFamily(ArgumentSet(p.framework, m) for m in kept)


def credulous_accepted(af: ArgumentationFramework, family: ExtensionFamily,
                       a) -> bool:
    """True iff ``a`` belongs to at least one member of ``family``."""
    if len(family) == 0:
        raise EmptyFamily("acceptance query against an empty family")
    if family.framework is not af:
        raise CrossFrameworkSet("family belongs to a different framework")
    bit = 1 << af.index(a)
    return any(s.mask & bit for s in family)


def skeptical_accepted(af: ArgumentationFramework, family: ExtensionFamily,
                       a) -> bool:
    """True iff ``a`` belongs to every member of ``family``."""
    if len(family) == 0:
        raise EmptyFamily("acceptance query against an empty family")
    if family.framework is not af:
        raise CrossFrameworkSet("family belongs to a different framework")
    bit = 1 << af.index(a)
    return all(s.mask & bit for s in family)
