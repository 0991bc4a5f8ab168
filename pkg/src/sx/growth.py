"""Seeded random growers used by the property suites and the CLI.

Balls grow from the standard ball by uniformly chosen shelling moves of
bounded index; spheres grow from the standard sphere by bistellar moves.
Every grower returns the complex together with the certificate that
built it, so structural cross-checks can transport certificates
instead of searching.
"""

from __future__ import annotations

import random

from .complexes import Complex
from .moves import (
    MoveCertificate,
    apply_bistellar,
    apply_shelling,
    bistellar_options,
    shelling_options,
    standard_ball,
    standard_sphere,
)

__all__ = [
    "grow_shelled_ball",
    "grow_stellated_sphere",
    "grow_stacked_sphere",
]


def grow_shelled_ball(
    dim: int, k: int, steps: int, rng: random.Random
) -> tuple[Complex, MoveCertificate]:
    """A random ball built by ``steps`` shelling moves of index < k."""
    ball = standard_ball(dim)
    seed = ball
    moves = []
    for _ in range(steps):
        opts = shelling_options(ball, max_index=k - 1)
        if not opts:
            break
        mv = opts[rng.randrange(len(opts))]
        ball = apply_shelling(ball, mv)
        moves.append(mv)
    cert = MoveCertificate(
        kind="shelling",
        start_digest=seed.digest,
        moves=tuple(moves),
        result_digest=ball.digest,
    )
    return ball, cert


def grow_stellated_sphere(
    dim: int, k: int, steps: int, rng: random.Random
) -> tuple[Complex, MoveCertificate]:
    """A random sphere built by ``steps`` bistellar moves of index < k."""
    sphere = standard_sphere(dim)
    seed = sphere
    moves = []
    for _ in range(steps):
        opts = bistellar_options(sphere, 0, k - 1)
        if not opts:
            break
        mv = opts[rng.randrange(len(opts))]
        sphere = apply_bistellar(sphere, mv)
        moves.append(mv)
    cert = MoveCertificate(
        kind="bistellar",
        start_digest=seed.digest,
        moves=tuple(moves),
        result_digest=sphere.digest,
    )
    return sphere, cert


def grow_stacked_sphere(dim: int, steps: int, rng: random.Random) -> Complex:
    """A random stacked sphere: the boundary of an index-0-shelled ball."""
    ball, _ = grow_shelled_ball(dim + 1, 1, steps, rng)
    return ball.boundary()
