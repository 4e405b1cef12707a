from .mikhlin import mikhlin_ball_norm_sq, mikhlin_star_norm_sq_bound
from .simple import half_ball_reflection_norm, quasidisc_norm

__all__ = ['mikhlin_ball_norm_sq', 'mikhlin_star_norm_sq_bound', 'half_ball_reflection_norm', 'quasidisc_norm']
