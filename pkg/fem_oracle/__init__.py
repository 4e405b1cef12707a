from .assembly import assemble, dirichlet_energy, rayleigh_quotient
from .mesh import Mesh, mirror_extension, refine, triangulate
from .spectrum import neumann_eigenvalues
from .verification import convergence_study, quasi_monotonicity_check, verify_bound

__all__ = [
    'Mesh', 'assemble', 'convergence_study', 'dirichlet_energy', 'mirror_extension',
    'neumann_eigenvalues', 'quasi_monotonicity_check', 'rayleigh_quotient', 'refine',
    'triangulate', 'verify_bound',
]
