"""Arithmetic pruning of quadrangle parameters: order formulas, feasibility
predicates, the order-equation solver and table recomputation."""

from .orders import GroupOrderSpec, matrix_group_order, parse_group, simple_group_order
from .predicates import (
    Check,
    OrderPair,
    OrderSolution,
    SieveCase,
    Verdict,
    discriminant_td,
    order_discriminant,
    order_equation,
    parameter_feasible,
    pbounds_check,
    pbounds_with_s,
    q_part,
    ratio_check,
    sieve_case,
    solve_order_equation,
    stabilizer_bounds,
)
from .tables import DISCREPANCY, MATCH, TableReport, replicate_table, table_ids

__all__ = [
    "Check", "DISCREPANCY", "GroupOrderSpec", "MATCH", "OrderPair", "OrderSolution", "SieveCase",
    "TableReport", "Verdict", "discriminant_td", "matrix_group_order", "order_discriminant",
    "order_equation", "parameter_feasible", "parse_group", "pbounds_check", "pbounds_with_s",
    "q_part", "ratio_check", "replicate_table", "sieve_case", "simple_group_order",
    "solve_order_equation", "stabilizer_bounds", "table_ids",
]
