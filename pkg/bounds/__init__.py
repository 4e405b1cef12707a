from .formulas import (
    ball_mu1,
    corollary_a_bound,
    corollary_b_upper,
    improvement_condition,
    payne_weinberger_bound,
    poincare_constant,
    quasi_monotonicity_upper,
    star_shaped_bound,
    symmetric_bound,
    theorem_a_bound,
)

__all__ = [
    'ball_mu1', 'corollary_a_bound', 'corollary_b_upper', 'improvement_condition',
    'payne_weinberger_bound', 'poincare_constant', 'quasi_monotonicity_upper',
    'star_shaped_bound', 'symmetric_bound', 'theorem_a_bound',
]
