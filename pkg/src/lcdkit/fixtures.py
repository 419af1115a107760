"""Bundled reference data with integrity checks.

Two JSON files ship inside the package: the group-order cross-check
table (closure order of the generated subgroup next to the full
orthogonal group order, for n = 4, 5 and 3 <= q <= 25) and the worked
[16,4,12] product example over GF(11).  Every read goes through a
SHA-256 manifest so a silently corrupted wheel fails loudly instead of
producing wrong reference numbers.
"""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources

from .codes import LinearCode
from .errors import FixtureIntegrityError
from .gf import parse_field
from .matfq import MatrixFq

_PACKAGE = "lcdkit.data"
ORDERS_FILE = "orthogonal_group_orders.json"
PRODUCT_FILE = "product_example_f11.json"


def _raw(name: str) -> bytes:
    return resources.files(_PACKAGE).joinpath(name).read_bytes()


@lru_cache(maxsize=1)
def _manifest() -> dict[str, str]:
    out = {}
    for line in _raw("SHA256SUMS").decode().splitlines():
        line = line.strip()
        if not line:
            continue
        digest, name = line.split(None, 1)
        out[name.strip()] = digest
    return out


def load_bytes(name: str) -> bytes:
    """Fixture file contents, verified against the manifest."""
    manifest = _manifest()
    if name not in manifest:
        raise FixtureIntegrityError(f"{name} is not in the manifest")
    blob = _raw(name)
    digest = hashlib.sha256(blob).hexdigest()
    if digest != manifest[name]:
        raise FixtureIntegrityError(
            f"{name}: checksum {digest} does not match the manifest")
    return blob


@lru_cache(maxsize=1)
def group_orders() -> dict[tuple[int, int], tuple[int, int]]:
    """(n, q) -> (closure order, full orthogonal group order)."""
    rows = json.loads(load_bytes(ORDERS_FILE))["rows"]
    return {(n, q): (t, o) for n, q, t, o in rows}


@lru_cache(maxsize=1)
def product_example() -> dict:
    """The worked GF(11) product example, with matrices parsed."""
    raw = json.loads(load_bytes(PRODUCT_FILE))
    ctx = parse_field(raw["field"])
    base = MatrixFq.from_rows(ctx, raw["base"])
    components = [
        LinearCode.from_basis(MatrixFq.from_rows(ctx, [row]))
        for row in raw["components"]
    ]
    return {
        "ctx": ctx,
        "scalars": list(raw["scalars"]),
        "base": base,
        "components": components,
        "expected": raw["expected"],
    }
