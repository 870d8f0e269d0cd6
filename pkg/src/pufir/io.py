"""JSON file formats for polynomials and angle parameters.

Complex entries are stored as [re, im] pairs; floats serialize with
Python's shortest round-trip repr, so save/load is bit-exact and the
output bytes are deterministic.
"""
from __future__ import annotations

import json

import numpy as np

from .blaschke import AngleParams
from .laurent import LaurentPoly

__all__ = [
    "poly_to_dict", "poly_from_dict", "dumps_poly", "loads_poly",
    "save_poly", "load_poly",
    "angles_to_dict", "angles_from_dict", "save_angles", "load_angles",
]


def poly_to_dict(F):
    coeffs = [[[[float(x.real), float(x.imag)] for x in row]
               for row in np.asarray(B)]
              for B in F.coeffs]
    return {"p": F.p, "m": F.m, "q": F.q, "n": F.n, "coeffs": coeffs}


def poly_from_dict(data):
    try:
        q = int(data["q"])
        coeffs = [np.array([[complex(re, im) for re, im in row]
                            for row in B]) for B in data["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed polynomial data: {exc}") from exc
    F = LaurentPoly(q, coeffs)
    for key, val in (("p", F.p), ("m", F.m), ("n", F.n)):
        if key in data and int(data[key]) != val:
            raise ValueError(f"inconsistent field {key!r} in polynomial file")
    return F


def _dumps(data):
    return json.dumps(data, sort_keys=True, separators=(",", ": "),
                      indent=1) + "\n"


def dumps_poly(F):
    return _dumps(poly_to_dict(F))


def loads_poly(text):
    return poly_from_dict(json.loads(text))


def save_poly(F, path):
    with open(path, "w") as fh:
        fh.write(dumps_poly(F))


def load_poly(path):
    with open(path) as fh:
        return loads_poly(fh.read())


def angles_to_dict(params):
    return {"side": params.side, "p": params.p, "m": params.m,
            "d": params.d, "gamma": params.gamma,
            "angles": [float(a) for a in params.angles]}


def angles_from_dict(data):
    try:
        return AngleParams(data["side"], int(data["p"]), int(data["m"]),
                           int(data["d"]), int(data["gamma"]),
                           np.array(data["angles"], dtype=float))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed angle data: {exc}") from exc


def save_angles(params, path):
    with open(path, "w") as fh:
        fh.write(_dumps(angles_to_dict(params)))


def load_angles(path):
    with open(path) as fh:
        return angles_from_dict(json.loads(fh.read()))
