"""HTTP authentication service over the file-backed credential store.

Three endpoints, JSON in and out:

    GET  /api/grid?username=U      per-account grid configuration
    POST /api/register             {"username": U, "tagged_password": T}
    POST /api/login                {"username": U, "tagged_password": T}

The grid endpoint answers identically whether or not the username is
registered, and login returns one uniform failure body, so neither leaks
which accounts exist. Passwords travel in tagged form and are hashed
server-side; plaintext is never persisted or logged.

color_seed is serialized as a string: it is a full 64-bit value and JSON
consumers cannot be trusted with integers that size.
"""

from __future__ import annotations

import json
import logging
import threading
import time
from collections import deque
from collections.abc import Callable
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import kdf, store
from .codec import from_tagged, to_canonical
from .errors import EmptyUsernameError, ParseError
from .grid import colorize, grid_for_user

log = logging.getLogger(__name__)

MIN_PASSWORD_CHARS = 8
RATE_LIMIT = 10
RATE_WINDOW_SECONDS = 60.0

Response = tuple[int, dict]


class AuthService:
    """Request handlers plus the shared mutable state (store, counters),
    independent of the HTTP plumbing so tests can call handlers directly."""

    def __init__(
        self,
        store_path: str | Path,
        rows: int = 12,
        cols: int = 12,
        profile: str = "default",
        rate_limit: int = RATE_LIMIT,
        rate_window: float = RATE_WINDOW_SECONDS,
        clock: Callable[[], float] = time.monotonic,
    ):
        if profile not in kdf.PROFILES:
            raise KeyError(f"unknown kdf profile {profile!r}")
        self.store_path = Path(store_path)
        self.rows = rows
        self.cols = cols
        self.profile = profile
        self.rate_limit = rate_limit
        self.rate_window = rate_window
        self.clock = clock
        self._lock = threading.Lock()
        self._records = store.load(self.store_path)
        self._attempts: dict[str, int] = {}
        self._recent: dict[str, deque[float]] = {}
        self._decoy_salt = bytes(kdf.SALT_LEN)

    def _grid_for(self, username: str):
        return grid_for_user(username, self.rows, self.cols)

    def handle_grid(self, username: str) -> Response:
        if not username:
            return 400, {"error": "username query parameter required"}
        grid = self._grid_for(username)
        colors = colorize(grid)
        return 200, {
            "rows": grid.rows,
            "cols": grid.cols,
            "palette_size": grid.palette_size,
            "color_seed": str(grid.color_seed),
            "cell_colors": colors.flat(),
            "default_start": {"row": 0, "col": 0},
            "default_direction": "E",
        }

    @staticmethod
    def _credentials(body: dict) -> tuple[str, str] | None:
        username = body.get("username")
        tagged = body.get("tagged_password")
        if isinstance(username, str) and isinstance(tagged, str):
            return username, tagged
        return None

    def handle_register(self, body: dict) -> Response:
        creds = self._credentials(body)
        if creds is None:
            return 422, {"error": "username and tagged_password are required strings"}
        username, tagged = creds
        try:
            store.validate_username(username)
            placement = from_tagged(self._grid_for(username), tagged)
        except (EmptyUsernameError, ParseError) as exc:
            return 422, {"error": str(exc)}
        if len(placement) < MIN_PASSWORD_CHARS:
            return 422, {
                "error": f"password must place at least {MIN_PASSWORD_CHARS} characters"
            }
        with self._lock:
            if username in self._records:
                return 409, {"error": "username already registered"}
            record = store.create_record(username, placement, self.profile)
            store.append(self.store_path, record)
            self._records[username] = record
        return 201, {"registered": username}

    def handle_login(self, body: dict) -> Response:
        creds = self._credentials(body)
        if creds is None:
            return 422, {"error": "username and tagged_password are required strings"}
        username, tagged = creds
        now = self.clock()
        with self._lock:
            recent = self._recent.setdefault(username, deque())
            while recent and now - recent[0] > self.rate_window:
                recent.popleft()
            recent.append(now)
            if len(recent) > self.rate_limit:
                return 429, {"error": "too many attempts; retry later"}
            self._attempts[username] = self._attempts.get(username, 0) + 1
            attempts = self._attempts[username]
            record = self._records.get(username)
        try:
            placement = from_tagged(self._grid_for(username), tagged)
        except (EmptyUsernameError, ParseError) as exc:
            return 422, {"error": str(exc)}
        if record is None:
            # burn equivalent KDF work so unknown usernames time like
            # wrong passwords
            kdf.hash_canonical(
                to_canonical(placement), self._decoy_salt, kdf.PROFILES[self.profile]
            )
            return 401, {"outcome": "failure", "attempt_count": attempts}
        if store.verify_password(record, placement):
            return 200, {"outcome": "success", "attempt_count": attempts}
        return 401, {"outcome": "failure", "attempt_count": attempts}


def build_server(
    service: AuthService, host: str = "127.0.0.1", port: int = 8000
) -> ThreadingHTTPServer:
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def _cors(self) -> None:
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")

        def _send(self, status: int, body: dict) -> None:
            data = json.dumps(body).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self._cors()
            self.end_headers()
            self.wfile.write(data)

        def do_OPTIONS(self) -> None:
            self.send_response(204)
            self._cors()
            self.send_header("Content-Length", "0")
            self.end_headers()

        def do_GET(self) -> None:
            url = urlparse(self.path)
            if url.path == "/api/grid":
                username = (parse_qs(url.query).get("username") or [""])[0]
                status, body = service.handle_grid(username)
                self._send(status, body)
            else:
                self._send(404, {"error": "not found"})

        def do_POST(self) -> None:
            url = urlparse(self.path)
            routes = {
                "/api/register": service.handle_register,
                "/api/login": service.handle_login,
            }
            route = routes.get(url.path)
            if route is None:
                self._send(404, {"error": "not found"})
                return
            try:
                length = int(self.headers.get("Content-Length") or 0)
                body = json.loads(self.rfile.read(length) or b"")
                if not isinstance(body, dict):
                    raise ValueError("body must be a JSON object")
            except (ValueError, json.JSONDecodeError):
                self._send(422, {"error": "request body must be a JSON object"})
                return
            status, out = route(body)
            self._send(status, out)

        def log_message(self, fmt: str, *args) -> None:
            log.debug("%s %s", self.address_string(), fmt % args)

    httpd = ThreadingHTTPServer((host, port), Handler)
    httpd.daemon_threads = True
    return httpd
