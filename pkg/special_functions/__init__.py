from .bessel import bessel_i, bessel_j, bessel_k
from .roots import find_root, p_zero

__all__ = ['bessel_i', 'bessel_j', 'bessel_k', 'find_root', 'p_zero']
