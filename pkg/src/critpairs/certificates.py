"""JSON form of certificates: stable key order, subsets as sorted index lists."""

from __future__ import annotations

import json
from typing import Any

from critpairs.beyond import Extendible16, PeriodicBranch, StructuredCertificate
from critpairs.groups import GroupSubset, Subgroup
from critpairs.kst import KstCertificate, PeriodicReduction


def _plain(x: Any) -> Any:
    if isinstance(x, GroupSubset):
        return list(x.elements())
    if isinstance(x, Subgroup):
        return list(x.carrier.elements())
    if isinstance(x, dict):
        return {k: _plain(x[k]) for k in sorted(x)}
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


def certificate_to_dict(cert) -> dict[str, Any] | None:
    if cert is None:
        return None
    if isinstance(cert, KstCertificate):
        return {
            "group": cert.group.name,
            "type": cert.type_tag,
            "quasi_period": _plain(cert.quasi_period),
            "A1": _plain(cert.a1),
            "A0": _plain(cert.a0),
            "B1": _plain(cert.b1),
            "B0": _plain(cert.b0),
            "witnesses": _plain(cert.witnesses),
            "recursion": certificate_to_dict(cert.recursion),
        }
    if isinstance(cert, StructuredCertificate):
        return {
            "group": cert.group.name,
            "type": cert.type_tag,
            "quasi_period": _plain(cert.quasi_period),
            "A1": _plain(cert.a1),
            "A0": _plain(cert.a0),
            "B1": _plain(cert.b1),
            "B0": _plain(cert.b0),
            "witnesses": _plain(cert.witnesses),
            "recursion": None,
        }
    if isinstance(cert, Extendible16):
        return {
            "group": cert.group.name,
            "type": "Extendible16",
            "witnesses": {"alpha": cert.alpha, "beta": cert.beta},
            "aux": certificate_to_dict(cert.aux),
        }
    if isinstance(cert, PeriodicBranch):
        return {
            "group": cert.group.name,
            "type": "PeriodicBranch",
            "quasi_period": _plain(cert.quasi_period),
            "quotient_A": _plain(cert.quotient_a),
            "quotient_B": _plain(cert.quotient_b),
            "recursion": certificate_to_dict(cert.recursion),
        }
    if isinstance(cert, PeriodicReduction):
        return {
            "group": cert.group.name,
            "type": "PeriodicReduction",
            "quasi_period": _plain(cert.quasi_period),
            "hole_count": cert.hole_count,
            "quotient_A": _plain(cert.quotient_a),
            "quotient_B": _plain(cert.quotient_b),
            "recursion": certificate_to_dict(cert.quotient_certificate),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_to_json(cert) -> str:
    return json.dumps(certificate_to_dict(cert), separators=(",", ":"))
