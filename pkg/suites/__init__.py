"""
Verification suites package.
Exports all suites for easy importing.
"""

from suites.base_suite import BaseSuite, ClaimCheck, SuiteResult
from suites.product_suites import (
    ProductEqualitySuite,
    ProductIdentitySuite,
    product_equality_suite,
    product_identity_suite,
)
from suites.tree_suite import TreeSuite, tree_suite
from suites.diam2_suite import Diam2Suite, diam2_suite
from suites.family_suite import FamilySuite, family_suite
from suites.runner import SUITES, run_suites

__all__ = [
    "BaseSuite",
    "ClaimCheck",
    "SuiteResult",
    "ProductIdentitySuite",
    "ProductEqualitySuite",
    "TreeSuite",
    "Diam2Suite",
    "FamilySuite",
    "product_identity_suite",
    "product_equality_suite",
    "tree_suite",
    "diam2_suite",
    "family_suite",
    "SUITES",
    "run_suites",
]
