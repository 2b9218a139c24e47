"""JSON documents for elections, CCAV instances, generators, 3DM and results.

Every document may be wrapped in an envelope
``{"format_version": "1", "kind": ..., "payload": ...}``; readers accept
both wrapped and bare payloads.  Rationals are written as strings
(``"3"``, ``"-1/2"``) so exact values survive the trip.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from .core import CCAVInstance, Election, ElectionError, VoteMultiset, as_fraction, as_vector
from .generators import Builtin, BuiltinKind, GeneratorSpec, Pattern, Tabulated
from .hardness.threedm import ThreeDMInstance
from .solvers.brute import SolveResult

FORMAT_VERSION = "1"
KINDS = ("election", "ccav", "generator", "threedm", "result")


class FormatError(ElectionError):
    """A document does not match its schema."""


def fmt_rational(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(value) -> Fraction:
    try:
        return as_fraction(value)
    except (ElectionError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational: {value!r}") from exc


def parse_vector_literal(text: str):
    """Comma-separated rationals such as ``"3,2,1/2,0"``."""
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(not p for p in parts):
        raise FormatError(f"cannot parse vector {text!r}")
    try:
        return as_vector(parse_rational(p) for p in parts)
    except FormatError:
        raise
    except ElectionError as exc:
        raise FormatError(str(exc)) from exc


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def envelope(kind: str, payload: Any) -> dict:
    if kind not in KINDS:
        raise FormatError(f"unknown document kind {kind!r}")
    return {"format_version": FORMAT_VERSION, "kind": kind, "payload": payload}


def unwrap(doc: Any, kind: str) -> Any:
    if isinstance(doc, dict) and "format_version" in doc:
        if doc.get("format_version") != FORMAT_VERSION:
            raise FormatError(f"unsupported format_version {doc.get('format_version')!r}")
        if doc.get("kind") != kind:
            raise FormatError(f"expected a {kind} document, got {doc.get('kind')!r}")
        if "payload" not in doc:
            raise FormatError("envelope without payload")
        return doc["payload"]
    return doc


def _require(obj: Any, keys: Iterable[str], what: str) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"{what} is missing {', '.join(missing)}")
    return obj


# -- votes and elections ------------------------------------------------------

def votes_to_json(votes: VoteMultiset) -> list:
    out = []
    for vote, count in votes:
        item: dict = {"order": list(vote)}
        if count != 1:
            item["count"] = count
        out.append(item)
    return out


def votes_from_json(data: Any) -> VoteMultiset:
    if not isinstance(data, list):
        raise FormatError("votes must be a list")
    entries = []
    for item in data:
        _require(item, ["order"], "vote")
        order, count = item["order"], item.get("count", 1)
        if not isinstance(order, list) or not all(isinstance(c, str) for c in order):
            raise FormatError("vote order must be a list of candidate ids")
        if isinstance(count, bool) or not isinstance(count, int) or count < 1:
            raise FormatError(f"vote count must be a positive integer, got {count!r}")
        entries.append((tuple(order), count))
    return VoteMultiset(entries)


def election_to_json(election: Election) -> dict:
    return {"candidates": list(election.candidates), "votes": votes_to_json(election.votes)}


def election_from_json(doc: Any) -> Election:
    data = _require(unwrap(doc, "election"), ["candidates", "votes"], "election")
    return Election(tuple(data["candidates"]), votes_from_json(data["votes"]))


def ccav_to_json(inst: CCAVInstance) -> dict:
    return {
        "candidates": list(inst.candidates),
        "registered": votes_to_json(inst.registered),
        "unregistered": votes_to_json(inst.unregistered),
        "preferred": inst.preferred,
        "budget": inst.budget,
    }


def ccav_from_json(doc: Any) -> CCAVInstance:
    keys = ["candidates", "registered", "unregistered", "preferred", "budget"]
    data = _require(unwrap(doc, "ccav"), keys, "ccav instance")
    if not isinstance(data["candidates"], list):
        raise FormatError("candidates must be a list")
    return CCAVInstance(tuple(data["candidates"]), votes_from_json(data["registered"]),
                        votes_from_json(data["unregistered"]), data["preferred"], data["budget"])


# -- generators ---------------------------------------------------------------

def _rationals(values) -> list:
    return [fmt_rational(v) for v in values]


def generator_to_json(spec: GeneratorSpec) -> dict:
    if isinstance(spec, Pattern):
        return {
            "kind": "pattern",
            "prefix": _rationals(spec.prefix),
            "middle": fmt_rational(spec.middle),
            "suffix": _rationals(spec.suffix),
            "exceptions": {str(m): _rationals(v) for m, v in sorted(spec.exceptions.items())},
        }
    if isinstance(spec, Builtin):
        out = {"kind": "builtin", "name": spec.kind.value}
        if spec.k is not None:
            out["k"] = spec.k
        return out
    if isinstance(spec, Tabulated):
        return {"kind": "tabulated", "vectors": [_rationals(v) for v in spec.vectors]}
    raise FormatError(f"unknown generator {spec!r}")


def _rational_list(values, what: str) -> list:
    if not isinstance(values, list):
        raise FormatError(f"{what} must be a list of rationals")
    return [parse_rational(v) for v in values]


def generator_from_json(doc: Any) -> GeneratorSpec:
    data = _require(unwrap(doc, "generator"), ["kind"], "generator")
    kind = data["kind"]
    try:
        if kind == "pattern":
            _require(data, ["prefix", "middle"], "pattern generator")
            exceptions = data.get("exceptions", {})
            if not isinstance(exceptions, dict):
                raise FormatError("exceptions must map lengths to vectors")
            return Pattern(
                tuple(_rational_list(data["prefix"], "prefix")),
                parse_rational(data["middle"]),
                tuple(_rational_list(data.get("suffix", []), "suffix")),
                {int(m): _rational_list(v, "exception") for m, v in exceptions.items()},
            )
        if kind == "builtin":
            _require(data, ["name"], "builtin generator")
            return Builtin(BuiltinKind(data["name"]), data.get("k"))
        if kind == "tabulated":
            _require(data, ["vectors"], "tabulated generator")
            if not isinstance(data["vectors"], list):
                raise FormatError("vectors must be a list")
            return Tabulated(tuple(_rational_list(v, "vector") for v in data["vectors"]))
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown generator kind {kind!r}")


# -- 3DM ---------------------------------------------------------------------

def threedm_to_json(inst: ThreeDMInstance) -> dict:
    return {"x": list(inst.x), "y": list(inst.y), "z": list(inst.z),
            "m": [list(t) for t in inst.triples]}


def threedm_from_json(doc: Any) -> ThreeDMInstance:
    data = _require(unwrap(doc, "threedm"), ["x", "y", "z", "m"], "3DM instance")
    if not isinstance(data["m"], list) or not all(isinstance(t, list) for t in data["m"]):
        raise FormatError("m must be a list of triples")
    return ThreeDMInstance(tuple(data["x"]), tuple(data["y"]), tuple(data["z"]),
                           tuple(tuple(t) for t in data["m"]))


# -- results ------------------------------------------------------------------

def result_to_json(result: SolveResult) -> dict:
    out = {"decision": result.decision, "method": result.method}
    if result.witness is not None:
        out["witness"] = votes_to_json(result.witness)
    return out


def result_from_json(doc: Any) -> SolveResult:
    data = _require(unwrap(doc, "result"), ["decision", "method"], "result")
    witness: Optional[VoteMultiset] = None
    if "witness" in data:
        witness = votes_from_json(data["witness"])
    return SolveResult(bool(data["decision"]), witness, data["method"])


def load(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
