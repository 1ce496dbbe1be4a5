"""Shared oracles for the test suite.

These are deliberately written independently of the library code they check:
cofactor expansion instead of Bareiss elimination, a sieve instead of trial
division, and direct power-series multiplication instead of the convolution
formula.
"""

from __future__ import annotations


def cofactor_det(rows) -> int:
    """Determinant by recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [tuple(row[:j]) + tuple(row[j + 1 :]) for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def primes_up_to(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(limit + 1) if sieve[p]]


def two_kind_series_coefficients(max_degree: int) -> list[int]:
    """Coefficients of the product over s >= 1 of (1 - x^s)^(-2), truncated."""
    coeffs = [1] + [0] * max_degree
    for s in range(1, max_degree + 1):
        for _ in range(2):
            for i in range(s, max_degree + 1):
                coeffs[i] += coeffs[i - s]
    return coeffs
