"""JSON serialization of generator lists.

Exact::

    {"dim": d, "scalars": "gaussian-rational",
     "generators": [[[[re_num, re_den, im_num, im_den], ...], ...], ...]}

Float::

    {"dim": d, "scalars": "float", "generators": [[[[re, im], ...], ...], ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np

from .matrixrep import MatrixRep
from .scalars import EXACT, FLOAT, QI


class MatrixFormatError(ValueError):
    """Malformed matrix JSON."""


def _entry_exact(e) -> QI:
    if not (isinstance(e, list) and len(e) == 4 and all(isinstance(x, int) for x in e)):
        raise MatrixFormatError(f"exact entries must be [re_num, re_den, im_num, im_den], got {e!r}")
    if e[1] == 0 or e[3] == 0:
        raise MatrixFormatError("zero denominator")
    return QI(Fraction(e[0], e[1]), Fraction(e[2], e[3]))


def _entry_float(e) -> complex:
    if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, (int, float)) for x in e)):
        raise MatrixFormatError(f"float entries must be [re, im], got {e!r}")
    return complex(e[0], e[1])


def rep_from_json(data: dict) -> MatrixRep:
    if not isinstance(data, dict):
        raise MatrixFormatError("top level must be an object")
    try:
        d = data["dim"]
        kind = data["scalars"]
        gens = data["generators"]
    except KeyError as exc:
        raise MatrixFormatError(f"missing key {exc}") from exc
    if not isinstance(d, int) or d < 1:
        raise MatrixFormatError("dim must be a positive integer")
    if kind not in (EXACT, FLOAT):
        raise MatrixFormatError(f"scalars must be {EXACT!r} or {FLOAT!r}")
    if not isinstance(gens, list) or not gens:
        raise MatrixFormatError("generators must be a nonempty list")
    conv = _entry_exact if kind == EXACT else _entry_float
    mats = []
    for g in gens:
        if not (isinstance(g, list) and len(g) == d and all(isinstance(row, list) and len(row) == d for row in g)):
            raise MatrixFormatError(f"each generator must be a {d} x {d} array")
        m = np.empty((d, d), dtype=object if kind == EXACT else np.complex128)
        for i, row in enumerate(g):
            for j, e in enumerate(row):
                m[i, j] = conv(e)
        mats.append(m)
    return MatrixRep(d, tuple(mats), kind)


def rep_to_json(r: MatrixRep) -> dict:
    gens = []
    for g in r.generators:
        if r.exact:
            gens.append([[[x.re.numerator, x.re.denominator, x.im.numerator, x.im.denominator] for x in row] for row in g])
        else:
            gens.append([[[float(x.real), float(x.imag)] for x in row] for row in g])
    return {"dim": r.dim, "scalars": r.scalars, "generators": gens}


def load_rep(path: Union[str, Path]) -> MatrixRep:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    return rep_from_json(data)


def save_rep(r: MatrixRep, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(rep_to_json(r)))
