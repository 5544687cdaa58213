"""Brute-force reference enumeration over all subsets of a search space.

This module is the trust anchor for the tree-search solver, so it stays as
literal as possible: every bit pattern of the space is generated in numeric
order and tested against the defining predicate, and maximality is a final
pairwise pass. No preprocessing, no pruning. Spaces are capped at 20
arguments; beyond that the run is refused outright rather than left to
crawl for hours.
"""

from . import _kernels
from .errors import BudgetExceeded, CrossFrameworkSet
from .extensions import (DEFAULT_BUDGET, ExtensionFamily, SearchBudget,
                         filter_maximal)
from .model import ArgumentationFramework, ArgumentSet, Partition
from .semantics import is_restrictedly_admissible


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _scan(af, restrict_to, budget, require_defence):
    if restrict_to is None:
        space = af.full_mask
    else:
        if restrict_to.framework is not af:
            raise CrossFrameworkSet("set belongs to a different framework")
        space = restrict_to.mask
    members = list(_bits(space))
    k = len(members)
    cap = (budget or DEFAULT_BUDGET).max_arguments_for_exhaustive
    if k > cap:
        raise BudgetExceeded(
            f"exhaustive scan over {k} arguments exceeds the cap of {cap}")
    local_of = {g: j for j, g in enumerate(members)}

    def to_local(global_mask):
        out = 0
        for g in _bits(global_mask & space):
            out |= 1 << local_of[g]
        return out

    att_local = [to_local(af.attacker_masks[g]) for g in members]
    ob_off = [0]
    ob_masks = []
    for g in members:
        if require_defence:
            for b in _bits(af.attacker_masks[g]):
                ob_masks.append(to_local(af.attacker_masks[b]))
        ob_off.append(len(ob_masks))
    local_masks = _kernels.subset_scan(k, att_local, ob_off, ob_masks,
                                       require_defence)
    out = []
    for lm in local_masks:
        gm = 0
        for j in _bits(lm):
            gm |= 1 << members[j]
        out.append(ArgumentSet(af, gm))
    return out


def oracle_conflict_free(af: ArgumentationFramework, restrict_to: ArgumentSet = None,
                         budget: SearchBudget = None) -> ExtensionFamily:
    """All conflict-free subsets of ``restrict_to`` (default: all arguments)."""
    return ExtensionFamily(_scan(af, restrict_to, budget, require_defence=False))


def oracle_admissible(af: ArgumentationFramework, restrict_to: ArgumentSet = None,
                      budget: SearchBudget = None) -> ExtensionFamily:
    """All admissible subsets of ``restrict_to`` (default: all arguments)."""
    return ExtensionFamily(_scan(af, restrict_to, budget, require_defence=True))


def oracle_preferred(af: ArgumentationFramework,
                     budget: SearchBudget = None) -> ExtensionFamily:
    """Inclusion-maximal admissible sets, by scan plus a maximality pass."""
    return filter_maximal(oracle_admissible(af, None, budget), order="subset")


def oracle_preferred_on(af: ArgumentationFramework, x: ArgumentSet,
                        budget: SearchBudget = None) -> ExtensionFamily:
    """Inclusion-maximal admissible subsets of ``x``."""
    return filter_maximal(oracle_admissible(af, x, budget), order="subset")


def oracle_restrictedly_admissible(af: ArgumentationFramework, p: Partition,
                                   budget: SearchBudget = None) -> ExtensionFamily:
    """All restrictedly admissible subsets of the focus."""
    return ExtensionFamily(
        s for s in oracle_admissible(af, p.focus, budget)
        if is_restrictedly_admissible(af, p, s))


def oracle_min_def(af: ArgumentationFramework, p: Partition,
                   budget: SearchBudget = None) -> ExtensionFamily:
    """Preference-maximal restrictedly admissible sets, definition-literally."""
    return filter_maximal(oracle_restrictedly_admissible(af, p, budget),
                          order="prec", partition=p)
