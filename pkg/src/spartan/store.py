"""Flat-file credential store.

One record per line:

    username:kdf_id:memory,iterations,parallelism:salt_b64:hash_b64:rows,cols,palette,seed

The grid geometry is stored alongside the hash so a stored credential can be
verified even if the derivation defaults change later. Usernames may not
contain ':' or newlines since both would break the line format.
"""

from __future__ import annotations

import base64
import binascii
from dataclasses import dataclass
from pathlib import Path

from . import kdf
from .codec import to_canonical
from .errors import BadCredFileError, EmptyUsernameError
from .grid import GridSpec, Placement

FIELD_COUNT = 6


@dataclass(frozen=True)
class CredentialRecord:
    username: str
    kdf_id: str
    params: kdf.KdfParams
    salt: bytes
    hash: bytes
    rows: int
    cols: int
    palette_size: int
    color_seed: int

    def grid(self, alphabet: str | None = None) -> GridSpec:
        kwargs = {} if alphabet is None else {"alphabet": alphabet}
        return GridSpec(
            rows=self.rows,
            cols=self.cols,
            palette_size=self.palette_size,
            color_seed=self.color_seed,
            **kwargs,
        )


def validate_username(username: str) -> None:
    if not username:
        raise EmptyUsernameError("username must be non-empty")
    if ":" in username or "\n" in username or "\r" in username:
        raise EmptyUsernameError("username may not contain ':' or newlines")


def format_line(record: CredentialRecord) -> str:
    p = record.params
    return ":".join(
        (
            record.username,
            record.kdf_id,
            f"{p.memory},{p.iterations},{p.parallelism}",
            base64.b64encode(record.salt).decode("ascii"),
            base64.b64encode(record.hash).decode("ascii"),
            f"{record.rows},{record.cols},{record.palette_size},{record.color_seed}",
        )
    )


def _ints(field: str, expect: int, what: str, lineno: int) -> list[int]:
    parts = field.split(",")
    if len(parts) != expect:
        raise BadCredFileError(f"line {lineno}: {what} must have {expect} fields")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise BadCredFileError(f"line {lineno}: non-integer {what}") from None


def parse_line(line: str, lineno: int = 1) -> CredentialRecord:
    fields = line.split(":")
    if len(fields) != FIELD_COUNT:
        raise BadCredFileError(
            f"line {lineno}: expected {FIELD_COUNT} colon-separated fields, got {len(fields)}"
        )
    username, kdf_id, params_f, salt_f, hash_f, grid_f = fields
    if not username:
        raise BadCredFileError(f"line {lineno}: empty username")
    memory, iterations, parallelism = _ints(params_f, 3, "kdf params", lineno)
    try:
        params = kdf.KdfParams(memory, iterations, parallelism)
    except Exception as exc:
        raise BadCredFileError(f"line {lineno}: {exc}") from None
    try:
        salt = base64.b64decode(salt_f, validate=True)
        digest = base64.b64decode(hash_f, validate=True)
    except (binascii.Error, ValueError):
        raise BadCredFileError(f"line {lineno}: invalid base64 field") from None
    rows, cols, palette, seed = _ints(grid_f, 4, "grid config", lineno)
    return CredentialRecord(
        username=username,
        kdf_id=kdf_id,
        params=params,
        salt=salt,
        hash=digest,
        rows=rows,
        cols=cols,
        palette_size=palette,
        color_seed=seed,
    )


def load(path: str | Path) -> dict[str, CredentialRecord]:
    """Load all records keyed by username. Later lines for the same username
    are rejected rather than silently shadowing earlier ones."""
    records: dict[str, CredentialRecord] = {}
    path = Path(path)
    if not path.exists():
        return records
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        record = parse_line(line, lineno)
        if record.username in records:
            raise BadCredFileError(f"line {lineno}: duplicate username {record.username!r}")
        records[record.username] = record
    return records


def append(path: str | Path, record: CredentialRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(format_line(record) + "\n")


def create_record(
    username: str,
    placement: Placement,
    profile: str = "default",
    salt: bytes | None = None,
) -> CredentialRecord:
    validate_username(username)
    params = kdf.PROFILES[profile]
    if salt is None:
        salt = kdf.new_salt()
    digest = kdf.hash_canonical(to_canonical(placement), salt, params)
    grid = placement.grid
    return CredentialRecord(
        username=username,
        kdf_id=kdf.KDF_ID,
        params=params,
        salt=salt,
        hash=digest,
        rows=grid.rows,
        cols=grid.cols,
        palette_size=grid.palette_size,
        color_seed=grid.color_seed,
    )


def verify_password(record: CredentialRecord, placement: Placement) -> bool:
    return kdf.verify_canonical(
        to_canonical(placement), record.salt, record.params, record.hash
    )
