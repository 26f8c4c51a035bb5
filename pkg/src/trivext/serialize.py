"""Conversion of library objects to JSON-compatible values.

Elements become ints or nested lists, ideals become generator/element listings,
certificates become flat dicts. Output is deterministic for identical inputs.
"""

from .finite_module import Submodule, TorsionResult
from .ideal_theory import Ideal, MultiplicativeSet, SPrimalityCertificate
from .z_layer import ZIdeal, ZMultSet, ZTEIdeal, ZWitness


def element(x):
    if isinstance(x, tuple):
        return [element(v) for v in x]
    return int(x)


def ideal(I, with_elements: bool = True) -> dict:
    out = {"ring": str(I.ring), "generators": [element(g) for g in I.generators], "size": I.size}
    if with_elements:
        out["elements"] = [element(e) for e in I.elements]
    return out


def submodule(N: Submodule) -> dict:
    return {
        "module": str(N.ambient),
        "generators": [element(g) for g in N.generators],
        "elements": [element(e) for e in N.elements],
    }


def zte_ideal(J: ZTEIdeal) -> dict:
    return {
        "generators": [[a, element(m)] for a, m in J.generators],
        "J0": str(J.j0),
        "J1": [element(e) for e in J.j1.elements],
    }


def witness(w):
    if w is None:
        return None
    if isinstance(w, ZWitness):
        return {"product": str(w), "value": w.value}
    return element(w)


def residual(r):
    if r is None:
        return None
    if isinstance(r, ZIdeal):
        return str(r)
    if isinstance(r, Ideal):
        return ideal(r)
    return jsonable(r)


def certificate(c: SPrimalityCertificate, with_details: bool = True) -> dict:
    out = {
        "verdict": c.verdict,
        "witness": witness(c.witness),
        "residual": residual(c.residual),
        "reason": c.reason,
        "method": c.method,
    }
    if with_details and c.details:
        out["details"] = {k: jsonable(v) for k, v in sorted(c.details.items())}
    return out


def jsonable(obj):
    """Best-effort conversion of anything the library returns."""
    if obj is None or isinstance(obj, (bool, str, float)):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, SPrimalityCertificate):
        return certificate(obj)
    if isinstance(obj, TorsionResult):
        return {"holds": obj.holds, "witness": witness(obj.label) if obj.holds or obj.label is not None else None}
    if isinstance(obj, Ideal):
        return ideal(obj)
    if isinstance(obj, Submodule):
        return submodule(obj)
    if isinstance(obj, ZTEIdeal):
        return zte_ideal(obj)
    if isinstance(obj, (ZIdeal, ZMultSet)):
        return str(obj)
    if isinstance(obj, ZWitness):
        return witness(obj)
    if isinstance(obj, MultiplicativeSet):
        return {"ring": str(obj.ring), "generators": [element(g) for g in obj.generators],
                "elements": [element(e) for e in obj.elements]}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "__int__"):
        return int(obj)
    return str(obj)
