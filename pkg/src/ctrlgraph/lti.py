"""Discrete single-input single-output linear systems, exactly.

State recurrence x_{n+1} = A x_n + u_n b with output c^T x_n.  Everything
is rational arithmetic: trajectories, Kalman matrices, the transfer
function c^T (I - tA)^{-1} b as a ratio of integer polynomials, and exact
state recovery from an invertible observability matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import (
    ExactMatrix,
    bilinear_numerator_fractions,
    char_poly,
    int_rank,
    mat_rank,
    solve,
)
from .polys import IntPoly, RationalFunction


@dataclass(frozen=True)
class DiscreteSystem:
    a: ExactMatrix
    b: tuple
    c: tuple
    x0: tuple

    def __post_init__(self):
        d = self.a.rows
        if not self.a.is_square:
            raise ValueError("state matrix must be square")
        if len(self.b) != d or len(self.c) != d or len(self.x0) != d:
            raise ValueError("vector dimensions must match the state matrix")

    @property
    def dim(self) -> int:
        return self.a.rows

    @classmethod
    def create(cls, a_rows, b, c, x0=None) -> "DiscreteSystem":
        a = ExactMatrix.from_rows(a_rows)
        if x0 is None:
            x0 = [0] * a.rows
        return cls(a, tuple(b), tuple(c), tuple(x0))


def simulate(sys: DiscreteSystem, inputs: Sequence, steps: int) -> list[list]:
    """States x_0 .. x_steps under the given input sequence."""
    if len(inputs) < steps:
        raise ValueError("need at least `steps` input values")
    states = [list(sys.x0)]
    for n in range(steps):
        x = sys.a.matvec(states[-1])
        u = inputs[n]
        states.append([xi + u * bi for xi, bi in zip(x, sys.b)])
    return states


def outputs(sys: DiscreteSystem, states: Sequence[Sequence]) -> list:
    return [sum(ci * xi for ci, xi in zip(sys.c, x)) for x in states]


def controllability_matrix(a: ExactMatrix, b: Sequence) -> ExactMatrix:
    """(b  Ab ... A^{d-1}b)."""
    d = a.rows
    if len(b) != d:
        raise ValueError("dimension mismatch")
    cols = [list(b)]
    for _ in range(d - 1):
        cols.append(a.matvec(cols[-1]))
    return ExactMatrix(d, d, [cols[j][i] for i in range(d) for j in range(d)])


def observability_matrix(a: ExactMatrix, c: Sequence) -> ExactMatrix:
    """(c^T; c^T A; ...; c^T A^{d-1})."""
    return controllability_matrix(a.transpose(), c).transpose()


def is_controllable(a: ExactMatrix, b: Sequence) -> bool:
    return mat_rank(controllability_matrix(a, b)) == a.rows


def is_observable(a: ExactMatrix, c: Sequence) -> bool:
    return mat_rank(observability_matrix(a, c)) == a.rows


def transfer_function(sys: DiscreteSystem) -> RationalFunction:
    """c^T (I - tA)^{-1} b, exactly.

    Built by reversing the coefficients of the adjugate numerator and the
    characteristic polynomial: det(I - tA) = t^d phi(1/t).
    """
    d = sys.dim
    if d == 0:
        return RationalFunction(IntPoly(), IntPoly([1]))
    if not sys.a.is_integer():
        raise ValueError("integer state matrix required for the transfer function")
    num_coeffs = bilinear_numerator_fractions(sys.a, sys.c, sys.b)
    den_lcm = 1
    for x in num_coeffs:
        den_lcm = math.lcm(den_lcm, Fraction(x).denominator)
    psi = [int(Fraction(x) * den_lcm) for x in num_coeffs]  # deg <= d-1
    phi = char_poly(sys.a)
    # reverse both against degree d: numerator picks up t^{d-1}, so the
    # extra factor of t in (1/t) phi_rev cancels cleanly
    num_rev = IntPoly(reversed([psi[k] if k < len(psi) else 0 for k in range(d)]))
    den_rev = IntPoly(reversed([phi[k] * den_lcm for k in range(d + 1)]))
    return RationalFunction(num_rev, den_rev).normalize()


def generating_identity_check(sys: DiscreteSystem, inputs: Sequence, order: int):
    """Compare the simulated trajectory against the power-series expansion
    (I-tA)^{-1}x_0 + t u(t) (I-tA)^{-1} b, coefficient by coefficient.

    Returns (True, None) or (False, first mismatching order).
    """
    if len(inputs) < order:
        raise ValueError("need at least `order` input values")
    states = simulate(sys, inputs, order)
    # Neumann expansion: coefficient of t^n is A^n x0 + sum A^{n-1-k} u_k b
    apow_x0 = list(sys.x0)
    series_terms = [list(apow_x0)]
    apow_b = [list(sys.b)]
    for n in range(1, order + 1):
        apow_x0 = sys.a.matvec(apow_x0)
        term = list(apow_x0)
        for k in range(n):
            coeff = inputs[k]
            vec = apow_b[n - 1 - k]
            for i in range(sys.dim):
                term[i] += coeff * vec[i]
        series_terms.append(term)
        apow_b.append(sys.a.matvec(apow_b[-1]))
    for n in range(order + 1):
        if any(Fraction(a) != Fraction(b) for a, b in zip(states[n], series_terms[n])):
            return False, n
    return True, None


def recover_state(sys: DiscreteSystem, observed: Sequence, m: int) -> list[Fraction]:
    """State at time m from d consecutive outputs, assuming zero input from
    time m on (so the outputs are c^T A^k x_m)."""
    d = sys.dim
    if len(observed) != d:
        raise ValueError(f"need exactly {d} consecutive outputs")
    omat = observability_matrix(sys.a, sys.c)
    try:
        return solve(omat, list(observed))
    except ValueError:
        raise ValueError("system is not observable: observability matrix is singular")
