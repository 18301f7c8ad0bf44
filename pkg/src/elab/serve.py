"""Local JSON service consumed by the explorer UI.

Stateless GET endpoints over the library; every response is UTF-8 JSON with
numbers at 17 significant digits, so a value displayed by a client equals the
library's float bit for bit after parsing.  ``dispatch`` is pure (no sockets)
and is what the parity checks call; the HTTP layer is a thin wrapper.
"""

from __future__ import annotations

import posixpath
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import limits, odesolve, powcore, series, slopes
from .serialize import to_json

_CURVE_MIN_SAMPLES = 16
_CURVE_MAX_SAMPLES = 4096


def _f(params: dict, key: str, default=None) -> float:
    if key not in params:
        if default is None:
            raise ValueError(f"missing parameter {key!r}")
        return default
    return float(params[key])


def _i(params: dict, key: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise ValueError(f"missing parameter {key!r}")
        return default
    return int(params[key])


def _ep_tangent_slope(params: dict) -> dict:
    a = _f(params, "a")
    h = _f(params, "h", 1e-6)
    return {"slope": slopes.diff_quotient(a, h)}


def _ep_stretch_estimate(params: dict) -> dict:
    a = _f(params, "a")
    h = _f(params, "h", 1e-6)
    stretch = _f(params, "stretch", 1.0)
    if stretch <= 0.0:
        raise ValueError("stretch must be positive")
    base = a if stretch == 1.0 else powcore.exp_base_midpoint(a, 1.0 / stretch)
    slope = slopes.diff_quotient(base, h)
    return {"slope": slope, "e_estimate": slopes.estimate_from_slope(base, slope)}


def _ep_curve(params: dict) -> dict:
    a = _f(params, "a")
    stretch = _f(params, "stretch", 1.0)
    xmin = _f(params, "xmin", -3.0)
    xmax = _f(params, "xmax", 3.0)
    samples = _i(params, "samples", 257)
    if not _CURVE_MIN_SAMPLES <= samples <= _CURVE_MAX_SAMPLES:
        raise ValueError(f"samples must lie in {_CURVE_MIN_SAMPLES}..{_CURVE_MAX_SAMPLES}")
    if not xmin < xmax:
        raise ValueError("xmin must be below xmax")
    if stretch <= 0.0:
        raise ValueError("stretch must be positive")
    base = a if stretch == 1.0 else powcore.exp_base_midpoint(a, 1.0 / stretch)
    step = (xmax - xmin) / (samples - 1)
    points = [[xmin + i * step, powcore.power_point(base, xmin + i * step)]
              for i in range(samples)]
    slope = slopes.diff_quotient(base, 1e-6)
    return {"points": points, "tangent_at_intercept": {"slope": slope, "intercept": 1.0}}


def _ep_compound(params: dict) -> dict:
    return {"value": limits.compound(_i(params, "n"))}


def _ep_compound_x(params: dict) -> dict:
    return {"value": limits.compound_x(_f(params, "x"), _i(params, "n"))}


def _ep_euler_path(params: dict) -> dict:
    x = _f(params, "x")
    n = _i(params, "n")
    if n > 100_000:
        raise ValueError("n too large for a path payload; cap is 100000")
    path = odesolve.euler_path(x, n)
    return {"points": [[px, py] for px, py in path.points]}


def _ep_series(params: dict) -> dict:
    x = _f(params, "x")
    tol = _f(params, "tol", 1e-15)
    st = series.taylor_exp(x, tol)
    return {"value": st.partial_sum, "terms": st.terms_used, "tail_bound": st.tail_bound}


_ENDPOINTS = {
    "/api/tangent-slope": _ep_tangent_slope,
    "/api/stretch-estimate": _ep_stretch_estimate,
    "/api/curve": _ep_curve,
    "/api/compound": _ep_compound,
    "/api/compound-x": _ep_compound_x,
    "/api/euler-path": _ep_euler_path,
    "/api/series": _ep_series,
}


def dispatch(path: str, params: dict) -> tuple[int, dict]:
    """Route one request; returns (status, payload).  Pure and reentrant."""
    handler = _ENDPOINTS.get(path)
    if handler is None:
        return 404, {"error": f"unknown endpoint {path!r}"}
    try:
        return 200, handler(params)
    except (ValueError, OverflowError) as exc:
        return 400, {"error": str(exc)}


class _Handler(BaseHTTPRequestHandler):
    server_version = "elab-serve/0.1"
    static_dir: Path | None = None

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        parsed = urlparse(self.path)
        if parsed.path.startswith("/api/"):
            params = {k: v[-1] for k, v in parse_qs(parsed.query).items()}
            status, payload = dispatch(parsed.path, params)
            body = to_json(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            # Read-only, stateless data: allow the explorer to call from any origin.
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)
            return
        self._serve_static(parsed.path)

    def _serve_static(self, path: str) -> None:
        if self.static_dir is None:
            self._not_found()
            return
        rel = posixpath.normpath(path.lstrip("/")) or "."
        if rel.startswith(".."):
            self._not_found()
            return
        target = self.static_dir / (rel if rel != "." else "index.html")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._not_found()
            return
        ctype = {
            ".html": "text/html; charset=utf-8",
            ".js": "text/javascript; charset=utf-8",
            ".css": "text/css; charset=utf-8",
            ".map": "application/json",
        }.get(target.suffix, "application/octet-stream")
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _not_found(self) -> None:
        body = to_json({"error": "not found"}).encode("utf-8")
        self.send_response(404)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        pass


def make_server(port: int, static_dir: str | None = None) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (_Handler,), {
        "static_dir": Path(static_dir).resolve() if static_dir else None,
    })
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_server(port: int, static_dir: str | None = None) -> int:
    try:
        httpd = make_server(port, static_dir)
    except OSError as exc:
        print(f"error: cannot bind port {port}: {exc}", file=sys.stderr)
        return 1
    print(f"serving on http://127.0.0.1:{port}  (Ctrl-C to stop)", file=sys.stderr)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return 0
