"""JSON encodings for the wire formats used by the CLI."""

from __future__ import annotations

from .homs import FiniteTailMap, Witness
from .intsets import FiniteIntSet, HalfInteger
from .intmonoid import IntIsometry
from .isoz import ZIsometry
from .natmonoid import NatIsometry


def element_to_obj(e: NatIsometry | IntIsometry) -> dict:
    if isinstance(e, NatIsometry):
        return {"kind": "nat", "shift": e.shift, "exceptions": list(e.exceptions)}
    if isinstance(e, IntIsometry):
        return {"kind": "int", "a": e.unit.a, "reflect": e.unit.reflect,
                "exceptions": list(e.exceptions)}
    raise TypeError(f"not a monoid element: {e!r}")


def element_from_obj(obj: dict) -> NatIsometry | IntIsometry:
    try:
        kind = obj["kind"]
        if kind == "nat":
            return NatIsometry(int(obj["shift"]),
                               FiniteIntSet(int(x) for x in obj["exceptions"]))
        if kind == "int":
            return IntIsometry(ZIsometry(int(obj["a"]), bool(obj["reflect"])),
                               FiniteIntSet(int(x) for x in obj["exceptions"]))
    except (KeyError, TypeError) as err:
        raise ValueError(f"malformed element object: {err}") from err
    raise ValueError(f"unknown element kind {obj.get('kind')!r}")


def isoz_to_obj(u: ZIsometry) -> dict:
    return {"a": u.a, "reflect": u.reflect}


def half_integer_to_obj(c: HalfInteger) -> dict:
    return {"doubled": c.doubled}


def tailmap_to_obj(f: FiniteTailMap) -> dict:
    return {"neg": [f.neg_threshold, f.neg_shift],
            "pos": [f.pos_threshold, f.pos_shift],
            "middle": [[x, y] for x, y in f.middle]}


def tailmap_from_obj(obj: dict) -> FiniteTailMap:
    try:
        (nt, ns), (pt, ps) = obj["neg"], obj["pos"]
        middle = [(int(x), int(y)) for x, y in obj["middle"]]
    except (KeyError, TypeError, ValueError) as err:
        raise ValueError(f"malformed tail-map object: {err}") from err
    return FiniteTailMap(int(nt), int(ns), int(pt), int(ps), middle)


def witness_to_obj(w: Witness) -> dict:
    return {"element": element_to_obj(w.element),
            "bound_k": w.bound_k,
            "certificate": w.certificate}
