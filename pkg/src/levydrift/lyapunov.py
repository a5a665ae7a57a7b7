"""Norm-like value function V = phi^p(|x|) and the rate calculus f, F, psi.

The radial profile phi blends a quintic into the identity so that
phi(r) = r for r above the cutoff radius and phi has a continuous second
derivative at the junction.  All evaluators are vectorized over leading
axes: an input of shape (..., d) yields values of shape (...).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParameterError

# Quintic blend r^3 (a + b r + c r^2) with value/slope/curvature matched to
# the identity at r = 1; monotone and <= r on [0, 1].
DEFAULT_CUTOFF_COEFFS = (6.0, -8.0, 3.0)


@dataclass(frozen=True)
class LyapunovSpec:
    """Parameters of the value function V(x) = phi^p(|x|), p in (0, 1)."""

    p: float
    cutoff_radius: float = 1.0
    cutoff_coeffs: tuple[float, float, float] = DEFAULT_CUTOFF_COEFFS

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ParameterError(f"exponent p must lie in (0, 1), got {self.p}")
        if self.cutoff_radius <= 0.0:
            raise ParameterError("cutoff_radius must be positive")

    # -- radial profile ---------------------------------------------------

    def profile(self, r):
        """phi(r): identity above the cutoff, quintic blend below."""
        r = np.asarray(r, dtype=float)
        s = np.minimum(r / self.cutoff_radius, 1.0)
        a, b, c = self.cutoff_coeffs
        inner = self.cutoff_radius * s**3 * (a + b * s + c * s * s)
        return np.where(r > self.cutoff_radius, r, inner)

    def profile_d1(self, r):
        r = np.asarray(r, dtype=float)
        s = np.minimum(r / self.cutoff_radius, 1.0)
        a, b, c = self.cutoff_coeffs
        inner = 3 * a * s**2 + 4 * b * s**3 + 5 * c * s**4
        return np.where(r > self.cutoff_radius, 1.0, inner)

    def profile_d2(self, r):
        r = np.asarray(r, dtype=float)
        s = np.minimum(r / self.cutoff_radius, 1.0)
        a, b, c = self.cutoff_coeffs
        inner = (6 * a * s + 12 * b * s**2 + 20 * c * s**3) / self.cutoff_radius
        return np.where(r > self.cutoff_radius, 0.0, inner)

    # -- radial value g(r) = phi(r)^p and its derivatives ------------------

    def radial_value(self, r):
        return self.profile(r) ** self.p

    def radial_d1(self, r):
        phi = self.profile(r)
        return self.p * phi ** (self.p - 1.0) * self.profile_d1(r)

    def radial_d2(self, r):
        phi = self.profile(r)
        d1 = self.profile_d1(r)
        d2 = self.profile_d2(r)
        p = self.p
        return p * (p - 1.0) * phi ** (p - 2.0) * d1 * d1 + p * phi ** (p - 1.0) * d2


def _norms(x):
    x = np.asarray(x, dtype=float)
    if x.ndim == 0:
        raise ParameterError("x must have a final coordinate axis")
    return x, np.linalg.norm(x, axis=-1)


def eval_V(x, spec: LyapunovSpec):
    """V(x) = phi^p(|x|); equals |x|^p beyond the cutoff radius."""
    x, r = _norms(x)
    return spec.radial_value(r)


def grad_V(x, spec: LyapunovSpec):
    """Gradient of V; undefined at the origin (raises DomainError)."""
    x, r = _norms(x)
    if np.any(r == 0.0):
        raise DomainError("grad_V is undefined at the origin")
    return (spec.radial_d1(r) / r)[..., None] * x


def hess_V(x, spec: LyapunovSpec):
    """Hessian of V as a (..., d, d) array; DomainError at the origin."""
    x, r = _norms(x)
    if np.any(r == 0.0):
        raise DomainError("hess_V is undefined at the origin")
    d = x.shape[-1]
    e = x / r[..., None]
    proj = e[..., :, None] * e[..., None, :]
    eye = np.broadcast_to(np.eye(d), proj.shape)
    g1 = spec.radial_d1(r)[..., None, None]
    g2 = spec.radial_d2(r)[..., None, None]
    rr = r[..., None, None]
    return g2 * proj + g1 / rr * (eye - proj)


class Classification(str, enum.Enum):
    EXPONENTIAL = "exponential"
    POLYNOMIAL = "polynomial"
    INCONCLUSIVE = "inconclusive"


def classify_gamma(p: float, gamma: float) -> Classification:
    """Ergodicity regime implied by the growth exponent gamma."""
    if gamma >= 1.0:
        return Classification.EXPONENTIAL
    if p + gamma > 1.0:
        return Classification.POLYNOMIAL
    return Classification.INCONCLUSIVE


@dataclass(frozen=True)
class RateSpec:
    """Inputs of the convergence-rate envelope psi."""

    p: float
    gamma: float
    delta: float = 0.5
    gamma_time: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ParameterError("p must lie in (0, 1)")
        if not 0.0 < self.delta < 1.0:
            raise ParameterError("delta must lie in (0, 1)")
        if not 0.0 < self.gamma_time < 1.0:
            raise ParameterError("gamma_time must lie in (0, 1)")

    @property
    def classification(self) -> Classification:
        return classify_gamma(self.p, self.gamma)

    @property
    def polynomial_exponent(self) -> float:
        """Slope of log psi vs log t in the polynomial regime."""
        if self.classification is not Classification.POLYNOMIAL:
            raise ParameterError("polynomial exponent defined only for gamma < 1")
        return -(self.p + self.gamma - 1.0) * self.delta / (1.0 - self.gamma)


def rate_f(r, p: float, gamma: float):
    """Concave drift-rate function r^((p-1+gamma)/p), tangent-linear below 1.

    Requires p + gamma > 1 so the exponent is positive.  For gamma < 1 the
    exponent is below 1 and the extension stays nonnegative, increasing and
    concave; for gamma >= 1 the power is already at-least-linear.
    """
    if p + gamma <= 1.0:
        raise ParameterError("rate_f requires p + gamma > 1")
    m = (p - 1.0 + gamma) / p
    r = np.asarray(r, dtype=float)
    above = np.power(np.maximum(r, 1.0), m)
    below = np.maximum(1.0 + m * (r - 1.0), 0.0)
    return np.where(r >= 1.0, above, below)


def rate_F(t, p: float, gamma: float):
    """F(t) = integral_1^t dw / f(w) in closed form, t >= 1."""
    if p + gamma <= 1.0:
        raise ParameterError("rate_F requires p + gamma > 1")
    t = np.asarray(t, dtype=float)
    if np.any(t < 1.0):
        raise DomainError("rate_F is defined for t >= 1")
    m = (p - 1.0 + gamma) / p
    if math.isclose(m, 1.0):
        return np.log(t)
    return (t ** (1.0 - m) - 1.0) / (1.0 - m)


def rate_F_inv(s, p: float, gamma: float):
    """Inverse of rate_F on s >= 0."""
    if p + gamma <= 1.0:
        raise ParameterError("rate_F_inv requires p + gamma > 1")
    s = np.asarray(s, dtype=float)
    if np.any(s < 0.0):
        raise DomainError("rate_F_inv is defined for s >= 0")
    m = (p - 1.0 + gamma) / p
    if math.isclose(m, 1.0):
        return np.exp(s)
    return (1.0 + (1.0 - m) * s) ** (1.0 / (1.0 - m))


def rate_psi(t, spec: RateSpec):
    """Convergence envelope psi(t) = f(F^{-1}(gamma_time * t))^(-delta).

    Polynomial regime (gamma < 1, p + gamma > 1):
        psi(t) = (1 + gamma_time * t * (1 - gamma) / p)^(-(p+gamma-1) delta / (1-gamma)).
    Exponential regime (gamma >= 1): the linear minorant f(w) = w applies and
        psi(t) = exp(-delta * gamma_time * t).
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 1.0):
        raise DomainError("rate_psi is defined for t >= 1")
    cls = spec.classification
    if cls is Classification.INCONCLUSIVE:
        raise ParameterError("rate_psi undefined: p + gamma <= 1 and gamma < 1")
    if cls is Classification.EXPONENTIAL:
        return np.exp(-spec.delta * spec.gamma_time * t)
    g, p, dlt = spec.gamma, spec.p, spec.delta
    base = 1.0 + spec.gamma_time * t * (1.0 - g) / p
    return base ** (-(p + g - 1.0) * dlt / (1.0 - g))
