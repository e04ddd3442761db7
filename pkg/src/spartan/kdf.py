"""Password hashing for stored credentials.

The canonical grid form (spaces included) is what gets hashed, so the stored
digest commits to character positions, not just the character sequence.
Hashing uses scrypt from the standard library; the generic parameter triple
(memory, iterations, parallelism) maps onto scrypt's (N, r, p).
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
from dataclasses import dataclass

from .errors import KdfParamError

KDF_ID = "scrypt"
SALT_LEN = 16
HASH_LEN = 32


@dataclass(frozen=True)
class KdfParams:
    memory: int
    iterations: int
    parallelism: int

    def __post_init__(self) -> None:
        if self.memory < 2 or self.memory & (self.memory - 1):
            raise KdfParamError(f"memory must be a power of two >= 2, got {self.memory}")
        if self.iterations < 1:
            raise KdfParamError(f"iterations must be >= 1, got {self.iterations}")
        if self.parallelism < 1:
            raise KdfParamError(f"parallelism must be >= 1, got {self.parallelism}")


# default is interactive-login strength (~tens of ms); test keeps unit suites fast.
PROFILES: dict[str, KdfParams] = {
    "default": KdfParams(memory=16384, iterations=8, parallelism=1),
    "test": KdfParams(memory=4, iterations=1, parallelism=1),
}


def new_salt() -> bytes:
    return secrets.token_bytes(SALT_LEN)


def hash_canonical(canonical: str, salt: bytes, params: KdfParams) -> bytes:
    if len(salt) != SALT_LEN:
        raise KdfParamError(f"salt must be {SALT_LEN} bytes, got {len(salt)}")
    return hashlib.scrypt(
        canonical.encode("utf-8"),
        salt=salt,
        n=params.memory,
        r=params.iterations,
        p=params.parallelism,
        maxmem=256 * params.iterations * params.memory + (1 << 20),
        dklen=HASH_LEN,
    )


def verify_canonical(canonical: str, salt: bytes, params: KdfParams, expected: bytes) -> bool:
    computed = hash_canonical(canonical, salt, params)
    return hmac.compare_digest(computed, expected)
