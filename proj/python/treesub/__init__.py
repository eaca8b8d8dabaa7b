# Copyright 2026 The treesub Authors
# SPDX-License-Identifier: Apache-2.0
"""Minimization of submodular functions on products of rooted trees."""

from ._treesub import (
    BudgetExceeded,
    DomainError,
    Error,
    GenerationFailure,
    InputError,
    Instance,
    IterationBoundViolation,
    NotInImage,
    SolverFailure,
    Tree,
    UnsupportedStructure,
    catalog_names,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "GenerationFailure",
    "InputError",
    "Instance",
    "IterationBoundViolation",
    "NotInImage",
    "SolverFailure",
    "Tree",
    "UnsupportedStructure",
    "catalog_names",
]
