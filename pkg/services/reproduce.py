"""Воспроизведение опубликованных примеров: входы, промежуточные величины, заявленное и вычисленное"""

import math

from loguru import logger

from bounds.formulas import (
    corollary_a_bound,
    improvement_condition,
    payne_weinberger_bound,
    star_shaped_bound,
    symmetric_bound,
    theorem_a_bound,
)

from core.errors import ConfigurationError

from extension_norms.mikhlin import mikhlin_ball_norm_sq
from extension_norms.simple import half_ball_reflection_norm, quasidisc_norm

from geometry.domains import sample_domain
from geometry.enclosing import diameter, min_enclosing_ball
from geometry.named import BOWTIE_VERTICES, named_spec

from qc_maps.affine import beltrami_coefficient, dilatation_from_beltrami, piecewise_qc_coefficient
from qc_maps.bowtie import bowtie_map, bowtie_pieces
from qc_maps.star import star_angle, star_shaped_K

from schema.run_schema import REPRODUCIBLE, Claim, ReproductionReport

from special_functions.roots import p_zero



PUBLISHED_P_ZERO = {2: 1.841, 3: 2.081, 4: 2.299, 5: 2.501, 6: 2.688, 7: 2.864, 8: 3.031}
PUBLISHED_MIKHLIN = {2.0: 8.38905, 3.0: 7.50825}

TAN_STAR_DIAMETER = 3.2
TAN_STAR_SAMPLES = 4096


def reproduce_bowtie(seed: int = 0) -> ReproductionReport:
    pieces = bowtie_pieces()
    K = piecewise_qc_coefficient(pieces)
    K_beltrami = max(dilatation_from_beltrami(beltrami_coefficient(piece)) for piece in pieces)

    square = [(-0.5, 0.0), (0.0, 0.0), (0.5, 0.0), (0.5, 1.0), (0.0, 1.0), (-0.5, 1.0)]
    d = diameter(BOWTIE_VERTICES)
    ball = min_enclosing_ball(BOWTIE_VERTICES, seed=seed)
    norm = quasidisc_norm(K)
    symmetric = symmetric_bound(norm, d, 2)
    mecb = corollary_a_bound(K, ball.radius)

    return ReproductionReport(
        example="bowtie",
        inputs={
            "vertices": [list(v) for v in BOWTIE_VERTICES],
            "jacobians": [piece.jacobian for piece in pieces],
        },
        intermediates={
            "K": K.value,
            "K_beltrami": K_beltrami,
            "square_image": bowtie_map(square).tolist(),
            "d": d,
            "effective_R": 0.5 * d,
            "mecb_center": ball.center,
            "mecb_radius": ball.radius,
            "norm_sq": norm.value_sq,
            "bound_symmetric": symmetric.value,
            "bound_mecb": mecb.value,
            "payne_weinberger_reference": payne_weinberger_bound(d).value,
        },
        claims=[
            Claim.compare("K", (3.0 + math.sqrt(5.0)) / 2.0, K.value, 1e-12),
            Claim.compare("d", math.sqrt(10.0) / 2.0, d, 1e-12),
            Claim.compare("bound", 0.4, symmetric.value, 0.02),
        ],
        notes=[
            "published ~2/5 uses d/2 as the radius; the bowtie has no centre of symmetry, "
            f"its MECB radius 5/6 gives {mecb.value:.4f}",
        ],
    )


def reproduce_half_ball() -> ReproductionReport:
    norm = half_ball_reflection_norm()
    pw = payne_weinberger_bound(2.0).value
    rows = []
    for n in range(2, 9):
        rows.append({
            "n": n,
            "bound": theorem_a_bound(norm, 1.0, n).value,
            "improves": improvement_condition(norm, n),
        })
    first_improving = min(row["n"] for row in rows if row["improves"])
    bound_n4 = rows[2]["bound"]

    return ReproductionReport(
        example="half_ball",
        inputs={"R": 1.0, "d": 2.0},
        intermediates={
            "norm_sq": norm.value_sq,
            "bound_n4": bound_n4,
            "pw": pw,
            "improves": rows[2]["improves"],
            "table": rows,
        },
        claims=[
            Claim.compare("bound_n4", PUBLISHED_P_ZERO[4] ** 2 / 2.0, bound_n4, 0.01),
            Claim.compare("first_improving_n", 4, first_improving, 0),
        ],
    )


def reproduce_tan_star() -> ReproductionReport:
    beta = 0.5
    spec = named_spec("tan_disc", samples=TAN_STAR_SAMPLES)
    d_sampled = diameter(sample_domain(spec))
    p = p_zero(2)
    trig_factor = 4.0 * math.sin(star_angle(beta)) ** 4
    ratio_factor = (p / TAN_STAR_DIAMETER) ** 2
    bound = star_shaped_bound(beta, TAN_STAR_DIAMETER).value

    return ReproductionReport(
        example="tan_star",
        inputs={"beta": beta, "samples": TAN_STAR_SAMPLES, "d_published": TAN_STAR_DIAMETER},
        intermediates={
            "K": star_shaped_K(beta).value,
            "trig_factor": trig_factor,
            "ratio_factor": ratio_factor,
            "bound": bound,
            "d_sampled": d_sampled,
            "bound_sampled_d": star_shaped_bound(beta, d_sampled).value,
        },
        claims=[
            Claim.compare("d", TAN_STAR_DIAMETER, d_sampled, 0.1),
            Claim.compare("bound", 0.2, bound, 0.0005),
        ],
        notes=[
            f"published ~1/5 disagrees with its own factors {trig_factor:.5f} * {ratio_factor:.5f} = {bound:.4f}",
        ],
    )


def reproduce_mikhlin_table() -> ReproductionReport:
    rows = []
    for n in (3, 4, 5):
        for R in (1.5, 2.0, 3.0, 4.0):
            rows.append({"n": n, "R": R, "value_sq": mikhlin_ball_norm_sq(n, R).value_sq})

    claims = [
        Claim.compare(f"norm_sq_n3_R{R:g}", value, mikhlin_ball_norm_sq(3, R).value_sq, 1e-4)
        for R, value in PUBLISHED_MIKHLIN.items()
    ]
    return ReproductionReport(
        example="mikhlin_table",
        inputs={"n": [3, 4, 5], "R": [1.5, 2.0, 3.0, 4.0]},
        intermediates={"table": rows},
        claims=claims,
        notes=["values are W^1_2 extension norms from B_1 to B_R"],
    )


def reproduce_pzero_table() -> ReproductionReport:
    rows = [{"n": n, "p": p_zero(n)} for n in PUBLISHED_P_ZERO]
    return ReproductionReport(
        example="pzero_table",
        inputs={"n": list(PUBLISHED_P_ZERO)},
        intermediates={"table": rows},
        claims=[Claim.compare(f"p_n{row['n']}", PUBLISHED_P_ZERO[row["n"]], row["p"], 0.001) for row in rows],
    )


def reproduce(example_name: str, seed: int = 0) -> ReproductionReport:
    builders = {
        "bowtie": lambda: reproduce_bowtie(seed),
        "half_ball": reproduce_half_ball,
        "tan_star": reproduce_tan_star,
        "mikhlin_table": reproduce_mikhlin_table,
        "pzero_table": reproduce_pzero_table,
    }
    if example_name not in builders:
        raise ConfigurationError(f"Unknown example {example_name!r}; valid names: {', '.join(REPRODUCIBLE)}")

    report = builders[example_name]()
    for claim in report.discrepancies:
        logger.warning(
            f"reproduce {example_name}: {claim.name} computed {claim.computed:.6g}, "
            f"published {claim.published_value:.6g}"
        )
    return report
