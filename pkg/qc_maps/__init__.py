from .affine import affine_qc_coefficient, beltrami_coefficient, piecewise_qc_coefficient
from .bowtie import bowtie_map, bowtie_pieces
from .star import spiral_shaped_K, star_shaped_K

__all__ = [
    'affine_qc_coefficient', 'beltrami_coefficient', 'piecewise_qc_coefficient',
    'bowtie_map', 'bowtie_pieces', 'spiral_shaped_K', 'star_shaped_K',
]
