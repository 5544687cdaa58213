"""Solver for argumentation frameworks with restricted arguments.

Frameworks are directed attack graphs; a partition singles out one agent's
arguments (the focus) and, inside the focus, the restricted arguments that
should only back an unrestricted argument that cannot be defended without
them. On top of the classical conflict-free / admissible / preferred
semantics, the package computes the minimal-defence ("min-def") extensions:
restrictedly admissible sets with maximal unrestricted and minimal
restricted content.
"""

from .errors import (AfpSyntaxError, BudgetExceeded, CrossFrameworkSet,
                     EmptyFamily, MindefError, NotWithinFocus,
                     PreconditionViolated, UndeclaredArgument)
from .model import (ArgumentSet, ArgumentationFramework, Partition,
                    build_framework, build_partition, is_well_founded, split)
from .semantics import (PrecOrdering, defends, defends_all,
                        individual_defenders, individually_defended_by,
                        is_admissible, is_conflict_free,
                        is_restrictedly_admissible, prec_compare)
from .extensions import (ExtensionFamily, SearchBudget, admissible_sets,
                         conflict_free_sets, credulous_accepted,
                         filter_maximal, min_def_extensions,
                         minimize_restricted, preferred_extensions,
                         preferred_extensions_on,
                         restrictedly_admissible_sets, skeptical_accepted)
from .oracle import (oracle_admissible, oracle_conflict_free, oracle_min_def,
                     oracle_preferred, oracle_preferred_on,
                     oracle_restrictedly_admissible)
from .generators import GeneratorConfig, SplitMix64, builtin_fixtures, random_instance
from .afp import parse_afp, serialize_afp

__version__ = "0.1.0"

__all__ = [
    "AfpSyntaxError", "ArgumentSet", "ArgumentationFramework",
    "BudgetExceeded", "CrossFrameworkSet", "EmptyFamily", "ExtensionFamily",
    "GeneratorConfig", "MindefError", "NotWithinFocus", "Partition",
    "PrecOrdering", "PreconditionViolated", "SearchBudget", "SplitMix64",
    "UndeclaredArgument", "admissible_sets", "build_framework",
    "build_partition", "builtin_fixtures", "conflict_free_sets",
    "credulous_accepted", "defends", "defends_all", "filter_maximal",
    "individual_defenders", "individually_defended_by", "is_admissible",
    "is_conflict_free", "is_restrictedly_admissible", "is_well_founded",
    "min_def_extensions", "minimize_restricted", "oracle_admissible",
    "oracle_conflict_free", "oracle_min_def", "oracle_preferred",
    "oracle_preferred_on", "oracle_restrictedly_admissible", "parse_afp",
    "prec_compare", "preferred_extensions", "preferred_extensions_on",
    "random_instance", "restrictedly_admissible_sets", "serialize_afp",
    "skeptical_accepted", "split",
]
