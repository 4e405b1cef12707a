"""Кусочно-аффинное отображение квадрата [-1/2, 1/2] x [0, 1] на bowtie"""

import numpy as np

from schema.qc_schema import AffinePiece



def bowtie_pieces() -> list[AffinePiece]:
    return [
        AffinePiece(jacobian=[[1.0, 0.0], [1.0, 1.0]], region_label="Q-"),
        AffinePiece(jacobian=[[1.0, 0.0], [-1.0, 1.0]], region_label="Q+"),
        AffinePiece(jacobian=[[1.0, 0.0], [0.0, 1.0]], region_label="outside"),
    ]


def bowtie_map(points) -> np.ndarray:
    """(x, y) -> (x, y + 1/2 - |x|) при |x| <= 1/2, тождество вне полосы"""
    p = np.asarray(points, dtype=float)
    x, y = p[:, 0], p[:, 1]
    shift = np.where(np.abs(x) <= 0.5, 0.5 - np.abs(x), 0.0)
    return np.column_stack([x, y + shift])
