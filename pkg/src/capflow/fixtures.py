"""Canonical test/validation fixtures and seeded random parameter draws.

The canonical configuration below is the reference desk-scale case used
for convergence curves; keeping it here makes every emitted curve
reproducible bit-for-bit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .flow_models import FluidProperties, MomentumModel
from .geometry import CONVERGING_DIVERGING_KINDS, CapillaryGeometry, TubeKind

# Canonical desk-scale configuration (water-like fluid).
CANONICAL_R_MIN = 0.5
CANONICAL_R_MAX = 1.0
CANONICAL_LENGTH = 2.0
CANONICAL_FLUID = FluidProperties(mu=1e-3, rho=1e3)
CANONICAL_MODEL = MomentumModel()  # alpha = 4/3
CANONICAL_Q = 1e-6

DEFAULT_SEED = 20260826


def canonical_geometry(kind: TubeKind) -> CapillaryGeometry:
    if kind is TubeKind.STRAIGHT:
        return CapillaryGeometry.straight(CANONICAL_R_MIN, CANONICAL_LENGTH)
    return CapillaryGeometry(kind, CANONICAL_R_MIN, CANONICAL_R_MAX, CANONICAL_LENGTH)


def canonical_geometries(include_straight: bool = False) -> list[CapillaryGeometry]:
    kinds = list(CONVERGING_DIVERGING_KINDS)
    if include_straight:
        kinds.append(TubeKind.STRAIGHT)
    return [canonical_geometry(k) for k in kinds]


@dataclass(frozen=True)
class RandomCase:
    """One randomized parameter draw spanning all valid ranges."""

    geom: CapillaryGeometry
    fluid: FluidProperties
    model: MomentumModel
    q: float


def random_cases(
    n: int,
    seed: int = DEFAULT_SEED,
    kinds: tuple[TubeKind, ...] = CONVERGING_DIVERGING_KINDS,
    alpha: float | None = None,
) -> list[RandomCase]:
    """n seeded draws with r_min in [0.1, 5], r_max/r_min in (1+1e-6, 20],
    L in [0.1, 100], alpha in (1, 2], mu in [1e-5, 10], rho in [1, 1e4],
    Q in [1e-9, 1]."""
    rng = random.Random(seed)
    cases = []
    for i in range(n):
        kind = kinds[i % len(kinds)]
        r_min = rng.uniform(0.1, 5.0)
        if kind is TubeKind.STRAIGHT:
            r_max = r_min
        else:
            # log-uniform gap keeps near-degenerate ratios represented
            ratio = 1.0 + 10.0 ** rng.uniform(-6.0, math.log10(19.0))
            r_max = r_min * min(ratio, 20.0)
        length = rng.uniform(0.1, 100.0)
        a = alpha if alpha is not None else rng.uniform(1.0 + 1e-6, 2.0)
        mu = 10.0 ** rng.uniform(-5.0, 1.0)
        rho = 10.0 ** rng.uniform(0.0, 4.0)
        q = 10.0 ** rng.uniform(-9.0, 0.0)
        cases.append(
            RandomCase(
                geom=CapillaryGeometry(kind, r_min, r_max, length),
                fluid=FluidProperties(mu=mu, rho=rho),
                model=MomentumModel(alpha=a),
                q=q,
            )
        )
    return cases
