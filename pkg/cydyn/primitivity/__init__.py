"""
cydyn.primitivity

Contains the primitivity criterion and its discharge rules.
"""

from .subspaces import StableSubspace, StableSubspaceLattice, enumerate_stable_subspaces
from .discharge_rules import (
    BaseDischargeRule,
    RayExclusionRule,
    DualNefExclusionRule,
    DischargeRuleSet,
    eff_cone_ruleset,
)
from .criterion import Hypotheses, CriterionReport, verdict, check_irreducibility

__all__ = [
    'StableSubspace',
    'StableSubspaceLattice',
    'enumerate_stable_subspaces',
    'BaseDischargeRule',
    'RayExclusionRule',
    'DualNefExclusionRule',
    'DischargeRuleSet',
    'eff_cone_ruleset',
    'Hypotheses',
    'CriterionReport',
    'verdict',
    'check_irreducibility',
]
