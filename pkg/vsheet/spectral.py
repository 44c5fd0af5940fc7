"""
Fourier calculus on the uniform periodic grid rho_i = 2*pi*i/n.

All routines take plain sample arrays; the grid is implied by the array length.
"""
import math

import numpy as np

from vsheet.errors import ContractError


MIN_SAMPLES = 16


def check_samples(samples, n_samples=None):
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 1:
        raise ContractError(f'Expected a one-dimensional sample array, got shape {samples.shape}')
    length = samples.shape[0]
    if n_samples is not None and length != n_samples:
        raise ContractError(f'Sample array has length {length}, grid has {n_samples} samples')
    if length % 2 != 0 or length < MIN_SAMPLES:
        raise ContractError(f'Sample array length must be even and at least {MIN_SAMPLES}, got {length}')
    return samples


def wavenumbers(n_samples):
    return np.arange(n_samples // 2 + 1)


def spectral_derivative(samples, winding=0.0, n_samples=None):
    """d/drho of (winding / 2pi) * rho + periodic(rho), periodic part given by its samples.

    The Nyquist mode is dropped, so the result is exact for trigonometric polynomials
    of degree below n / 2.
    """
    samples = check_samples(samples, n_samples)
    n = samples.shape[0]
    coeffs = np.fft.rfft(samples) * (1j * wavenumbers(n))
    coeffs[-1] = 0.0
    return np.fft.irfft(coeffs, n=n) + winding / (2 * math.pi)


def spectral_antiderivative(samples, n_samples=None):
    """Zero-mean periodic antiderivative of the mean-free part of samples."""
    samples = check_samples(samples, n_samples)
    n = samples.shape[0]
    coeffs = np.fft.rfft(samples)
    k = wavenumbers(n)
    result = np.zeros_like(coeffs)
    result[1:] = coeffs[1:] / (1j * k[1:])
    result[-1] = 0.0
    return np.fft.irfft(result, n=n)


def dealias(samples, n_samples=None):
    """2/3-rule filter: zero every mode above n / 3."""
    samples = check_samples(samples, n_samples)
    n = samples.shape[0]
    coeffs = np.fft.rfft(samples)
    coeffs[wavenumbers(n) > n // 3] = 0.0
    return np.fft.irfft(coeffs, n=n)


def periodic_quadrature(values):
    """Periodic trapezoid rule over [0, 2pi); summation order is fixed."""
    values = np.asarray(values, dtype=float)
    return float(np.sum(values)) * (2 * math.pi / values.shape[0])
