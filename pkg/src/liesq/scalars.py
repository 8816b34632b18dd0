"""Gaussian rationals and small dense matrix helpers for both scalar backends.

Exact matrices are numpy ``object`` arrays whose entries are :class:`QI`;
float matrices are ``complex128`` arrays.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

import numpy as np

EXACT = "gaussian-rational"
FLOAT = "float"


class QI:
    """An element ``re + i*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "QI":
        if isinstance(x, QI):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, (int, Fraction, np.integer)):
            return cls(Fraction(int(x)) if isinstance(x, np.integer) else x, 0)
        if isinstance(x, float):
            return cls(Fraction(x), 0)
        raise TypeError(f"cannot convert {x!r} to a Gaussian rational")

    def __add__(self, o):
        o = QI.coerce(o)
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = QI.coerce(o)
        return QI(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return QI.coerce(o) - self

    def __mul__(self, o):
        o = QI.coerce(o)
        return QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = QI.coerce(o)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, o):
        return QI.coerce(o) / self

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def __eq__(self, o):
        try:
            o = QI.coerce(o)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"QI({self.re})"
        return f"QI({self.re}, {self.im})"


ZERO = QI(0)
ONE = QI(1)
I = QI(0, 1)

Matrix = np.ndarray


def exact_zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    out = np.empty((n, m), dtype=object)
    for idx in np.ndindex(n, m):
        out[idx] = ZERO
    return out


def exact_identity(n: int) -> Matrix:
    out = exact_zeros(n)
    for i in range(n):
        out[i, i] = ONE
    return out


def to_exact(a) -> Matrix:
    arr = np.asarray(a, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(*arr.shape):
        out[idx] = QI.coerce(arr[idx])
    return out


def to_float(a: Matrix) -> np.ndarray:
    if a.dtype != object:
        return np.asarray(a, dtype=np.complex128)
    out = np.empty(a.shape, dtype=np.complex128)
    for idx in np.ndindex(*a.shape):
        out[idx] = complex(a[idx])
    return out


def is_exact(a: Matrix) -> bool:
    return a.dtype == object


def identity_like(a: Matrix, n: int) -> Matrix:
    return exact_identity(n) if is_exact(a) else np.eye(n, dtype=np.complex128)


def conj(a: Matrix) -> Matrix:
    if is_exact(a):
        return np.vectorize(lambda x: x.conjugate(), otypes=[object])(a) if a.size else a.copy()
    return np.conj(a)


def dagger(a: Matrix) -> Matrix:
    return conj(a).T


def kron(a: Matrix, b: Matrix) -> Matrix:
    if is_exact(a) or is_exact(b):
        a, b = to_exact(a), to_exact(b)
        n1, m1 = a.shape
        n2, m2 = b.shape
        out = np.empty((n1 * n2, m1 * m2), dtype=object)
        for i in range(n1):
            for j in range(m1):
                x = a[i, j]
                for k in range(n2):
                    for l in range(m2):
                        out[i * n2 + k, j * m2 + l] = x * b[k, l] if x else ZERO
        return out
    return np.kron(a, b)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if is_exact(a) or is_exact(b):
        a, b = to_exact(a), to_exact(b)
        n, k = a.shape
        k2, m = b.shape
        out = exact_zeros(n, m)
        for i in range(n):
            for j in range(k):
                x = a[i, j]
                if not x:
                    continue
                for l in range(m):
                    y = b[j, l]
                    if y:
                        out[i, l] = out[i, l] + x * y
        return out
    return a @ b


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return matmul(a, b) - matmul(b, a)


def is_zero(a: Matrix, tol: float = 0.0) -> bool:
    if is_exact(a):
        return not any(bool(x) for x in a.flat)
    return bool(np.abs(a).max(initial=0.0) <= tol)


def equal(a: Matrix, b: Matrix, tol: float = 0.0) -> bool:
    if a.shape != b.shape:
        return False
    return is_zero(a - b, tol)


def nonzeros(a: Matrix):
    """Yield ``(i, j, value)`` for the nonzero entries."""
    if is_exact(a):
        for (i, j), x in np.ndenumerate(a):
            if x:
                yield i, j, x
    else:
        for i, j in zip(*np.nonzero(a)):
            yield int(i), int(j), a[i, j]


def gaussian_integer_row(entries: Iterable[QI]):
    """Scale a list of Gaussian rationals to coprime Gaussian integers ``(re, im)``."""
    from math import gcd

    entries = list(entries)
    den = 1
    for x in entries:
        for q in (x.re, x.im):
            den = den * q.denominator // gcd(den, q.denominator)
    return [(int(x.re * den), int(x.im * den)) for x in entries]


Scalar = Union[QI, complex]
