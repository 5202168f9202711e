"""Named verification targets behind the CLI ``verify`` command.

Each target rebuilds its grammar or ring setup from scratch, sweeps
n = 1..n_max and returns a Report with one entry per check.  The default
n_max per target is sized to finish comfortably within a few seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import classical, quadratic
from .gamma import GammaVector, associahedron_h, coxeter_h, gamma_to_h, h_to_gamma
from .grammar import DerivOp, PowerPattern, verify_identity
from .parser import parse_grammar
from .poly import MultiPoly
from .report import Check, Report, merge_reports
from .triangles import (ASSOC_GAMMA_A, ASSOC_GAMMA_A_REC, ASSOC_GAMMA_B,
                        ASSOC_GAMMA_B_REC, EULERIAN_A, EULERIAN_B, GAMMA_A,
                        GAMMA_B, MOTZKIN_T, CUBE_F, binomial, factorial,
                        plain_triangle)

__all__ = ["TARGETS", "Target", "run_all", "run_target"]


def _target_thm11(n_max: int) -> Report:
    # Weighted iterates over {y -> z^2, z -> y*z} carry 2^n times the plain
    # Eulerian row on y^(2n-2k-1) z^(2k+2), and the signed Eulerian row on
    # y^(2n-2k) z^(2k+1).
    g = parse_grammar("y -> z^2; z -> y*z")
    y, z = MultiPoly.variables(g.letters)
    op = DerivOp.pre_mul("y")
    parts = [
        verify_identity(g, op, y, n_max, EULERIAN_A, lambda n: 2 ** n,
                        lambda n: PowerPattern(g.letters, (2 * n - 1, 2), (-2, 2)),
                        "(Dy)^n(y)"),
        verify_identity(g, op, z, n_max, EULERIAN_B, lambda n: 1,
                        lambda n: PowerPattern(g.letters, (2 * n, 1), (-2, 2)),
                        "(Dy)^n(z)"),
    ]
    return merge_reports("thm11", parts)


def _gamma_family_report(target: str, n_max: int, family: str, degree_of,
                         coxeter_triangle, assoc_triangle) -> Report:
    report = Report(target)
    for n in range(1, n_max + 1):
        d = degree_of(n)
        row = GammaVector(tuple(coxeter_triangle.row(n)), d)
        want = coxeter_h(family, n)
        ok = gamma_to_h(row) == want
        report.add(Check("coxeter-h", n, ok,
                         "" if ok else f"gamma row {row} does not expand to {want}"))
        back = h_to_gamma(want)
        ok = back == row
        report.add(Check("gamma-roundtrip", n, ok,
                         "" if ok else f"extracted {back}, expected {row}"))
        assoc_row = GammaVector(tuple(assoc_triangle.row(n)), d)
        assoc_want = associahedron_h(family, n)
        ok = gamma_to_h(assoc_row) == assoc_want
        report.add(Check("assoc-h", n, ok,
                         "" if ok else f"gamma row {assoc_row} does not expand to {assoc_want}"))
    return report


def _target_thm21(n_max: int) -> Report:
    return _gamma_family_report("thm21", n_max, "A", lambda n: n - 1,
                                GAMMA_A, ASSOC_GAMMA_A)


def _target_thm22(n_max: int) -> Report:
    return _gamma_family_report("thm22", n_max, "B", lambda n: n,
                                GAMMA_B, ASSOC_GAMMA_B)


def _target_thm32(n_max: int) -> Report:
    # The four expansions over {f -> f*g, g -> 4*f^2}, read against the
    # recurrence-backed triangles.
    g = parse_grammar(classical.DOUBLE_ANGLE_RULES)
    f, gg = MultiPoly.variables(g.letters)
    d = DerivOp.plain()
    fd = DerivOp.post_mul("f")
    parts = [
        verify_identity(g, d, f, n_max, GAMMA_B, lambda n: 1,
                        lambda n: PowerPattern(g.letters, (1, n), (2, -2)),
                        "D^n(f)"),
        verify_identity(g, d, gg, n_max, GAMMA_A, lambda n: 2 ** (n + 1),
                        lambda n: PowerPattern(g.letters, (2, n - 1), (2, -2)),
                        "D^n(g)"),
        verify_identity(g, fd, f, n_max, ASSOC_GAMMA_B_REC, factorial,
                        lambda n: PowerPattern(g.letters, (n + 1, n), (2, -2)),
                        "(fD)^n(f)"),
        verify_identity(g, fd, gg, n_max, ASSOC_GAMMA_A_REC,
                        lambda n: 2 * factorial(n + 1),
                        lambda n: PowerPattern(g.letters, (n + 2, n - 1), (2, -2)),
                        "(fD)^n(g)"),
    ]
    return merge_reports("thm32", parts)


def _target_prop41(n_max: int) -> Report:
    g = parse_grammar("u -> u^2*v; v -> 4*u^3")
    u, v = MultiPoly.variables(g.letters)
    expected = plain_triangle("four-power-binomial",
                              lambda n, k: 4 ** k * binomial(n + 1, 2 * k),
                              lambda n: range((n + 1) // 2 + 1))
    part = verify_identity(g, DerivOp.plain(), u * v, n_max, expected, factorial,
                           lambda n: PowerPattern(g.letters, (n + 1, n + 1), (2, -2)),
                           "D^n(uv)")
    return merge_reports("prop41", [part])


def _target_thm42(n_max: int) -> Report:
    g = parse_grammar("u -> u^2*v; v -> u^3")
    u, v = MultiPoly.variables(g.letters)
    even_slots = plain_triangle("binomial-even-slots",
                                lambda n, k: binomial(n + 1, 2 * k),
                                lambda n: range((n + 1) // 2 + 1))
    odd_slots = plain_triangle("binomial-odd-slots",
                               lambda n, k: binomial(n + 1, 2 * k + 1),
                               lambda n: range(n // 2 + 1))
    parts = [
        verify_identity(g, DerivOp.plain(), u * v, n_max, even_slots, factorial,
                        lambda n: PowerPattern(g.letters, (n + 1, n + 1), (2, -2)),
                        "D^n(uv)"),
        verify_identity(g, DerivOp.plain(), u * u, n_max, odd_slots, factorial,
                        lambda n: PowerPattern(g.letters, (n + 2, n), (2, -2)),
                        "D^n(u^2)"),
        quadratic.check_chebyshev_specialization(n_max),
    ]
    return merge_reports("thm42", parts)


def _target_thm43(n_max: int) -> Report:
    g = parse_grammar("u -> u*v; v -> 2*u")
    u, v = MultiPoly.variables(g.letters)
    shifted = plain_triangle("gamma-a-shifted",
                             lambda n, k: GAMMA_A.value(n + 1, k),
                             lambda n: range(n // 2 + 1), "recurrence")
    part = verify_identity(g, DerivOp.plain(), u, n_max, shifted, lambda n: 1,
                           lambda n: PowerPattern(g.letters, (1, n), (1, -2)),
                           "D^n(u)")
    return merge_reports("thm43", [part])


def _target_thm44(n_max: int) -> Report:
    g = parse_grammar("t -> t*u^2; u -> u^2*v; v -> 4*u^3")
    t, u, v = MultiPoly.variables(g.letters)
    parts = [
        verify_identity(g, DerivOp.plain(), t * t * u * u, n_max, MOTZKIN_T,
                        lambda n: factorial(n + 1),
                        lambda n: PowerPattern(g.letters, (2, 2 * n + 2, 0), (0, -1, 1)),
                        "D^n(t^2 u^2)"),
        verify_identity(g, DerivOp.plain(), t * t * u, n_max, CUBE_F, factorial,
                        lambda n: PowerPattern(g.letters, (2, 2 * n + 1, 0), (0, -1, 1)),
                        "D^n(t^2 u)"),
    ]
    return merge_reports("thm44", parts)


def _target_alternating(n_max: int) -> Report:
    # Clamped to the enumeration guards (9 plain, 7 signed).
    return classical.check_alternating_counts(min(n_max, 9), min(n_max, 7))


@dataclass(frozen=True)
class Target:
    name: str
    default_n_max: int
    description: str
    run: Callable[[int], Report]


TARGETS: dict[str, Target] = {
    t.name: t
    for t in (
        Target("thm11", 15, "weighted iterates carry scaled Eulerian rows of both types",
               _target_thm11),
        Target("prop12", 12, "derivative iterates reduce to scaled tangent/secant polynomials",
               classical.check_scaled_tan_sec),
        Target("thm21", 12, "type A gamma rows expand to the Coxeter and associahedron h-rows",
               _target_thm21),
        Target("thm22", 12, "type B gamma rows expand to the Coxeter and associahedron h-rows",
               _target_thm22),
        Target("thm31", 12, "gamma row generating functions via the square root of 4x-1",
               quadratic.check_sqrt_gamma_forms),
        Target("thm32", 25, "the four coefficient expansions over the double-angle rules",
               _target_thm32),
        Target("cor33", 10, "weighted iterates against Legendre/Narayana values at i*h",
               quadratic.check_imaginary_assoc_forms),
        Target("prop41", 15, "quartic-rule iterates carry 4^k binomial rows",
               _target_prop41),
        Target("thm42", 12, "cubic-rule expansions and their Chebyshev specialization",
               _target_thm42),
        Target("thm43", 15, "single-step grammar carries the shifted type A gamma rows",
               _target_thm43),
        Target("thm44", 15, "three-letter grammar carries Motzkin prefix and cube face rows",
               _target_thm44),
        Target("egf", 12, "closed tangent/secant generating functions match the recurrences",
               classical.check_generating_functions),
        Target("alternating", 8, "alternating counts match polynomial values at zero",
               _target_alternating),
    )
}


def run_target(name: str, n_max: int | None = None) -> Report:
    if name not in TARGETS:
        raise ValueError(f"unknown target {name!r}; known: {', '.join(sorted(TARGETS))}, all")
    target = TARGETS[name]
    return target.run(n_max if n_max is not None else target.default_n_max)


def run_all(n_max: int | None = None) -> list[Report]:
    """Every target once, in name order; reports keep that order."""
    return [run_target(name, n_max) for name in sorted(TARGETS)]
