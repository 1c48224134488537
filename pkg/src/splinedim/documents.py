"""JSON documents describing cell complexes and raw vertex ideals.

A complex document lists affine curves in x, y through a common vertex,
each with an optional smoothness order; an ideal document lists homogeneous
generators in x, y, z directly.  Parsing is strict: unknown keys, floats
where exact numbers are expected, and malformed polynomials are rejected
with positional diagnostics.  emit_document followed by parse_document is
the identity on documents.
"""

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Tuple, Union

from gmpy2 import mpq

from .groebner import Ideal
from .poly import ParseError, VARS_XY, VARS_XYZ, parse
from .spline_complex import StarComplex, star_from_affine

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """A document failed JSON parsing or structural validation."""


@dataclass(frozen=True)
class EdgeSpec:
    curve: str
    smoothness: Optional[int] = None


@dataclass(frozen=True)
class ComplexDocument:
    version: int
    edges: Tuple[EdgeSpec, ...]
    default_smoothness: int = 0
    vertex: Tuple[mpq, mpq] = (mpq(0), mpq(0))
    name: Optional[str] = None
    description: Optional[str] = None

    def smoothness_list(self, r: Optional[int] = None) -> Tuple[int, ...]:
        """Per-edge smoothness; a given r overrides the document uniformly."""
        if r is not None:
            return (r,) * len(self.edges)
        return tuple(e.smoothness if e.smoothness is not None
                     else self.default_smoothness for e in self.edges)


@dataclass(frozen=True)
class IdealDocument:
    version: int
    ideal: Tuple[str, ...]
    name: Optional[str] = None
    description: Optional[str] = None


Document = Union[ComplexDocument, IdealDocument]


def _exact(value, where: str) -> mpq:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(
            f"{where}: expected an integer or a rational string like \"1/2\"")
    try:
        return mpq(value)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: {value!r} is not an exact rational") from None


def _smoothness(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: smoothness must be an integer")
    if value < 0:
        raise DocumentError(f"{where}: smoothness must be nonnegative")
    return value


def _optional_str(raw: dict, key: str) -> Optional[str]:
    value = raw.get(key)
    if value is not None and not isinstance(value, str):
        raise DocumentError(f"{key} must be a string")
    return value


def _check_keys(raw: dict, allowed, where: str):
    extra = sorted(set(raw) - set(allowed))
    if extra:
        raise DocumentError(f"{where}: unknown keys {', '.join(extra)}")


def _parse_complex(raw: dict) -> ComplexDocument:
    _check_keys(raw, ("version", "name", "description", "vertex",
                      "default_smoothness", "edges"), "document")
    edges_raw = raw["edges"]
    if not isinstance(edges_raw, list) or len(edges_raw) < 2:
        raise DocumentError("edges must be a list of at least two entries")
    edges = []
    for i, entry in enumerate(edges_raw, start=1):
        if not isinstance(entry, dict):
            raise DocumentError(f"edge {i}: expected an object with a curve string")
        _check_keys(entry, ("curve", "smoothness"), f"edge {i}")
        curve = entry.get("curve")
        if not isinstance(curve, str):
            raise DocumentError(f"edge {i}: curve must be a polynomial string")
        try:
            parse(curve, VARS_XY)
        except ParseError as err:
            raise DocumentError(f"edge {i}: {err}") from None
        sm = entry.get("smoothness")
        if sm is not None:
            sm = _smoothness(sm, f"edge {i}")
        edges.append(EdgeSpec(curve=curve, smoothness=sm))
    vertex = (mpq(0), mpq(0))
    if "vertex" in raw:
        vraw = raw["vertex"]
        if not isinstance(vraw, list) or len(vraw) != 2:
            raise DocumentError("vertex must be a pair [px, py]")
        vertex = (_exact(vraw[0], "vertex"), _exact(vraw[1], "vertex"))
    default_sm = 0
    if "default_smoothness" in raw:
        default_sm = _smoothness(raw["default_smoothness"], "default_smoothness")
    return ComplexDocument(
        version=raw["version"],
        edges=tuple(edges),
        default_smoothness=default_sm,
        vertex=vertex,
        name=_optional_str(raw, "name"),
        description=_optional_str(raw, "description"),
    )


def _parse_ideal(raw: dict) -> IdealDocument:
    _check_keys(raw, ("version", "name", "description", "ideal"), "document")
    gens_raw = raw["ideal"]
    if not isinstance(gens_raw, list) or not gens_raw:
        raise DocumentError("ideal must be a nonempty list of polynomial strings")
    gens = []
    for i, text in enumerate(gens_raw, start=1):
        if not isinstance(text, str):
            raise DocumentError(f"generator {i}: expected a polynomial string")
        try:
            p = parse(text, VARS_XYZ)
        except ParseError as err:
            raise DocumentError(f"generator {i}: {err}") from None
        if not p.is_homogeneous():
            raise DocumentError(f"generator {i}: must be homogeneous in x, y, z")
        gens.append(text)
    return IdealDocument(
        version=raw["version"],
        ideal=tuple(gens),
        name=_optional_str(raw, "name"),
        description=_optional_str(raw, "description"),
    )


def parse_document(text: str) -> Document:
    """Parse a JSON document, yielding a ComplexDocument or IdealDocument."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"invalid JSON: {err}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    version = raw.get("version")
    if not isinstance(version, int) or isinstance(version, bool) or version < 1:
        raise DocumentError("version must be a positive integer")
    if version > FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version}")
    has_edges = "edges" in raw
    has_ideal = "ideal" in raw
    if has_edges == has_ideal:
        raise DocumentError("document must have exactly one of: edges, ideal")
    return _parse_complex(raw) if has_edges else _parse_ideal(raw)


def load_document(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def _vertex_json(q: mpq):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def emit_document(doc: Document) -> str:
    """Serialize a document to deterministic JSON (fixed key order)."""
    out = {"version": doc.version}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.description is not None:
        out["description"] = doc.description
    if isinstance(doc, IdealDocument):
        out["ideal"] = list(doc.ideal)
    else:
        out["vertex"] = [_vertex_json(doc.vertex[0]), _vertex_json(doc.vertex[1])]
        out["default_smoothness"] = doc.default_smoothness
        edges = []
        for e in doc.edges:
            entry = {"curve": e.curve}
            if e.smoothness is not None:
                entry["smoothness"] = e.smoothness
            edges.append(entry)
        out["edges"] = edges
    return json.dumps(out, indent=2) + "\n"


def to_star_complex(doc: ComplexDocument, r: Optional[int] = None) -> StarComplex:
    """Build the validated complex, optionally forcing uniform smoothness r."""
    curves = [parse(e.curve, VARS_XY) for e in doc.edges]
    return star_from_affine(curves, list(doc.smoothness_list(r)), vertex=doc.vertex)


def to_ideal(doc: IdealDocument) -> Ideal:
    return Ideal([parse(text, VARS_XYZ) for text in doc.ideal])


def bundled_names() -> Tuple[str, ...]:
    """Names of the documents shipped with the package."""
    root = resources.files("splinedim") / "data"
    return tuple(sorted(p.name[:-5] for p in root.iterdir()
                        if p.name.endswith(".json")))


def load_bundled(name: str) -> Document:
    """Load a shipped document by its bare name (no .json suffix)."""
    root = resources.files("splinedim") / "data"
    path = root / f"{name}.json"
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DocumentError(
            f"no bundled document {name!r}; available: {', '.join(bundled_names())}"
        ) from None
    return parse_document(text)
