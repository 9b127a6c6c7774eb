"""Reading and writing JSON files.

Models, monomial systems and cones can be referred to by the name of a
built-in or by a file path. Every document is written with two space
indentation and a trailing newline, so exporting an imported file
reproduces it byte for byte once it has been normalised.

Attributes:
    DATA_DIR (pathlib.Path): Directory holding the JSON copies of the built-in models.
"""

import json
import logging
from pathlib import Path
from typing import Any, Iterable, List, Optional, Union

from .arith import RationalVector
from .cone import Cone
from .errors import DimensionMismatch, ModelFormatError, UnknownModel
from .models import Lattice, LatticeMap, VarietyModel
from .monomial import MonomialSystem, SYSTEMS
from .transform import MODEL_KEY_CASE, build_from_raw, convert_to_raw, rational_matrix_from_raw, \
    rational_vector_from_raw
from .zoo import ZOO

__all__ = ["DATA_DIR",
           "dumps", "loads",
           "model_to_json", "model_from_json", "load_model", "export_model", "find_model",
           "cone_to_json", "cone_from_json",
           "system_from_json", "find_system",
           "map_from_json"]

log = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"

PathLike = Union[str, Path]


def dumps(raw: Any) -> str:
    """Serialise raw data the way every moricone file is written."""
    return json.dumps(raw, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    """Parse a JSON document.

    Raises:
        ModelFormatError: If the text isn't valid JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"invalid JSON: {e}") from e


def model_to_json(m: VarietyModel) -> str:
    return dumps(convert_to_raw(m, key_case=MODEL_KEY_CASE))


def model_from_json(text: str) -> VarietyModel:
    """Build a model from the contents of a model file.

    Raises:
        ModelFormatError: If the document doesn't follow the model schema.
    """
    return build_from_raw(VarietyModel, loads(text), key_case=MODEL_KEY_CASE)


def load_model(path: PathLike) -> VarietyModel:
    path = Path(path)
    log.info(f"loading model from {path}")
    return model_from_json(path.read_text(encoding="utf-8"))


def export_model(m: VarietyModel, path: PathLike) -> None:
    path = Path(path)
    log.info(f"exporting model {m.name} to {path}")
    path.write_text(model_to_json(m), encoding="utf-8")


def find_model(name: str, search_dirs: Iterable[PathLike] = ()) -> VarietyModel:
    """Resolve a model name.

    Built-in models take precedence, then existing file paths, then
    ``<name>.json`` in each of the search directories.

    Raises:
        UnknownModel: If nothing matches.
    """
    try:
        constructor = ZOO[name]
    except KeyError:
        pass
    else:
        return constructor()

    path = Path(name)
    if path.is_file():
        return load_model(path)

    for directory in search_dirs:
        candidate = Path(directory) / f"{name}.json"
        if candidate.is_file():
            return load_model(candidate)

    raise UnknownModel(name)


def cone_to_json(c: Cone) -> str:
    return dumps(convert_to_raw(c, key_case=MODEL_KEY_CASE))


def cone_from_json(text: str, ambient_dim: Optional[int] = None) -> Cone:
    """Build a cone from a generators file.

    The document is an object with "generators" and optionally "lineality"
    and "ambient_dim", or just the list of generators. The ambient dimension
    defaults to the length of the first generator.

    Raises:
        ModelFormatError: If the document is malformed or the dimension can't be determined.
        DimensionMismatch: If the dimension differs from ambient_dim.
    """
    raw = loads(text)
    if isinstance(raw, list):
        raw = {"generators": raw}

    if not isinstance(raw, dict):
        raise ModelFormatError("expected a cone object or a list of generators")

    vectors: List[RationalVector] = []
    for key in ("generators", "lineality"):
        rows = raw.get(key, [])
        if not isinstance(rows, list):
            raise ModelFormatError(f"expected a list of vectors, got {rows!r}", key)
        vectors.extend(rational_vector_from_raw(v) for v in rows)

    dim = raw.get("ambient_dim")
    if dim is None:
        if not vectors:
            raise ModelFormatError("can't infer the dimension of a cone without generators")
        dim = len(vectors[0])
    elif not isinstance(dim, int) or isinstance(dim, bool):
        raise ModelFormatError(f"expected an integer, got {dim!r}", "ambient_dim")

    if ambient_dim is not None and dim != ambient_dim:
        raise DimensionMismatch(ambient_dim, dim)

    return build_from_raw(Cone, {**raw, "ambient_dim": dim}, key_case=MODEL_KEY_CASE)


def system_from_json(text: str) -> MonomialSystem:
    """Build a monomial system from a document ``{"source_dim": n, "monomials": [[...]]}``.

    Raises:
        ModelFormatError: If the document is malformed.
    """
    try:
        return build_from_raw(MonomialSystem, loads(text), key_case=MODEL_KEY_CASE)
    except (ValueError, TypeError) as e:
        if isinstance(e, ModelFormatError):
            raise
        raise ModelFormatError(str(e)) from e


def find_system(name: str) -> MonomialSystem:
    """Resolve a built-in system name or a file path.

    Raises:
        UnknownModel: If nothing matches.
    """
    try:
        return SYSTEMS[name]
    except KeyError:
        pass

    path = Path(name)
    if path.is_file():
        return system_from_json(path.read_text(encoding="utf-8"))

    raise UnknownModel(name)


def map_from_json(text: str, source: Lattice, target: Lattice) -> LatticeMap:
    """Build a lattice map from a document ``{"matrix": [[...]]}``.

    The matrix has one row per target basis vector. The optional keys
    "source_basis" and "target_basis" are checked against the lattices.

    Raises:
        ModelFormatError: If the document is malformed or doesn't fit the lattices.
    """
    raw = loads(text)
    if not isinstance(raw, dict) or "matrix" not in raw:
        raise ModelFormatError("expected an object with a matrix", "matrix")

    for key, lattice in (("source_basis", source), ("target_basis", target)):
        if key in raw and list(raw[key]) != list(lattice.basis_labels):
            raise ModelFormatError(f"basis {raw[key]} doesn't match {list(lattice.basis_labels)}", key)

    matrix = rational_matrix_from_raw(raw["matrix"])
    try:
        return LatticeMap(source, target, matrix)
    except DimensionMismatch as e:
        raise ModelFormatError(str(e), "matrix") from e
