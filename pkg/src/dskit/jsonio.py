"""JSON (de)serialization for the ds-kit/1 document schema.

Every parse error names the offending field with a dotted path so CLI users
can find it; serializers emit the canonical form the input digests are
computed over.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, NoReturn

from . import linalg
from .core import OrbitSpec, Scalar
from .errors import InputError
from .laurent import LaurentMatrix
from .unramified import UnramBlock, UnramFormalType

SCHEMA = "ds-kit/1"


def _fail(path: str, msg: str) -> NoReturn:
    raise InputError(f"{path}: {msg}")


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# Scalars.
# ---------------------------------------------------------------------------


def parse_scalar(obj: Any, path: str) -> Scalar:
    """A Gaussian rational as [re_num, re_den, im_num, im_den]."""
    if not isinstance(obj, list) or len(obj) != 4 or not all(_is_int(x) for x in obj):
        _fail(path, "scalar must be a 4-tuple of integers "
                    "[re_num, re_den, im_num, im_den]")
    if obj[1] == 0 or obj[3] == 0:
        _fail(path, "scalar denominator must be nonzero")
    return Scalar(Fraction(obj[0], obj[1]), Fraction(obj[2], obj[3]))


def scalar_json(s: Scalar) -> list[int]:
    return [s.re.numerator, s.re.denominator, s.im.numerator, s.im.denominator]


# ---------------------------------------------------------------------------
# Orbits.
# ---------------------------------------------------------------------------


def parse_orbit(obj: Any, path: str = "orbit") -> OrbitSpec:
    if not isinstance(obj, dict):
        _fail(path, "orbit must be an object")
    n = obj.get("n")
    if not _is_int(n):
        _fail(f"{path}.n", "must be an integer")
    blocks = obj.get("blocks")
    if not isinstance(blocks, list) or not blocks:
        _fail(f"{path}.blocks", "must be a nonempty array")
    pairs = []
    for k, blk in enumerate(blocks):
        bpath = f"{path}.blocks[{k}]"
        if not isinstance(blk, dict):
            _fail(bpath, "block must be an object")
        if "eig" not in blk:
            _fail(f"{bpath}.eig", "missing")
        part = blk.get("partition")
        if not isinstance(part, list) or not part or not all(_is_int(x) for x in part):
            _fail(f"{bpath}.partition", "must be a nonempty array of integers")
        pairs.append((parse_scalar(blk["eig"], f"{bpath}.eig"), part))
    try:
        return OrbitSpec(n, pairs)
    except InputError as exc:
        _fail(path, str(exc))


def orbit_json(o: OrbitSpec) -> dict[str, Any]:
    return {
        "n": o.n,
        "blocks": [
            {"eig": scalar_json(e), "partition": list(part)}
            for e, part in o.blocks
        ],
    }


# ---------------------------------------------------------------------------
# Unramified formal types.
# ---------------------------------------------------------------------------


def parse_unram_type(obj: Any, path: str = "type") -> UnramFormalType:
    if not isinstance(obj, dict):
        _fail(path, "formal type must be an object")
    blocks = obj.get("blocks")
    if not isinstance(blocks, list) or not blocks:
        _fail(f"{path}.blocks", "must be a nonempty array")
    parsed = []
    for k, blk in enumerate(blocks):
        bpath = f"{path}.blocks[{k}]"
        if not isinstance(blk, dict):
            _fail(bpath, "block must be an object")
        q = blk.get("q")
        if not isinstance(q, list):
            _fail(f"{bpath}.q", "must be an array of scalars "
                               "(coefficients of z^-1, z^-2, ...)")
        dim = blk.get("dim")
        if not _is_int(dim):
            _fail(f"{bpath}.dim", "must be an integer")
        if "residue" not in blk:
            _fail(f"{bpath}.residue", "missing")
        residue = parse_orbit(blk["residue"], f"{bpath}.residue")
        qs = [parse_scalar(c, f"{bpath}.q[{m}]") for m, c in enumerate(q)]
        try:
            parsed.append(UnramBlock(qs, dim, residue))
        except InputError as exc:
            _fail(bpath, str(exc))
    try:
        return UnramFormalType(parsed)
    except InputError as exc:
        _fail(path, str(exc))


def unram_type_json(d: UnramFormalType) -> dict[str, Any]:
    return {
        "blocks": [
            {
                "q": [scalar_json(c) for c in b.q],
                "dim": b.dim,
                "residue": orbit_json(b.residue),
            }
            for b in d.blocks
        ],
    }


# ---------------------------------------------------------------------------
# Laurent matrices.
# ---------------------------------------------------------------------------


def parse_laurent(obj: Any, path: str = "matrix") -> LaurentMatrix:
    if not isinstance(obj, dict):
        _fail(path, "matrix must be an object")
    n = obj.get("n")
    if not _is_int(n) or n < 1:
        _fail(f"{path}.n", "must be a positive integer")
    trunc = obj.get("trunc")
    if trunc is not None and not _is_int(trunc):
        _fail(f"{path}.trunc", "must be an integer or null")
    terms = obj.get("terms")
    if not isinstance(terms, list):
        _fail(f"{path}.terms", "must be an array")
    coeffs: dict[int, linalg.Matrix] = {}
    for k, term in enumerate(terms):
        tpath = f"{path}.terms[{k}]"
        if not isinstance(term, dict):
            _fail(tpath, "term must be an object")
        deg = term.get("deg")
        if not _is_int(deg):
            _fail(f"{tpath}.deg", "must be an integer")
        if deg in coeffs:
            _fail(f"{tpath}.deg", f"duplicate degree {deg}")
        entries = term.get("entries")
        if not isinstance(entries, list) or len(entries) != n:
            _fail(f"{tpath}.entries", f"must be an array of {n} rows")
        mat = linalg.zeros(n, n)
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != n:
                _fail(f"{tpath}.entries[{i}]", f"must be an array of {n} scalars")
            for j, cell in enumerate(row):
                mat[i][j] = parse_scalar(cell, f"{tpath}.entries[{i}][{j}]")
        coeffs[deg] = mat
    try:
        return LaurentMatrix(n, coeffs, trunc=trunc)
    except InputError as exc:
        _fail(path, str(exc))


def laurent_json(m: LaurentMatrix) -> dict[str, Any]:
    terms = []
    for deg in m.support():
        mat = m.coeff(deg)
        terms.append({
            "deg": deg,
            "entries": [[scalar_json(c) for c in row] for row in mat],
        })
    return {"n": m.n, "trunc": m.trunc, "terms": terms}


# ---------------------------------------------------------------------------
# Documents and digests.
# ---------------------------------------------------------------------------


def load_document(path: str) -> dict[str, Any]:
    """Read a ds-kit/1 JSON document from a file, checking the schema tag."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        _fail("$", "document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        _fail("schema", f"expected {SCHEMA!r}, got {doc.get('schema')!r}")
    return doc


def digest_of(payload: Any) -> str:
    """sha256 over the canonical serialization of the parsed inputs."""
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()
