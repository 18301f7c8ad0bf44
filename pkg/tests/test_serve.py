"""JSON service: dispatch parity with the library, plus one live-socket run."""

from __future__ import annotations

import json
import threading
import urllib.error
import urllib.request

import pytest

from elab import limits, odesolve, series, slopes
from elab.serve import dispatch, make_server


class TestDispatchParity:
    def test_tangent_slope(self):
        status, body = dispatch("/api/tangent-slope", {"a": "3", "h": "1e-4"})
        assert status == 200
        assert body["slope"] == slopes.diff_quotient(3.0, 1e-4)

    def test_stretch_estimate(self):
        status, body = dispatch("/api/stretch-estimate", {"a": "3", "h": "1e-4"})
        assert status == 200
        assert body["slope"] == slopes.diff_quotient(3.0, 1e-4)
        assert body["e_estimate"] == slopes.estimate_e_by_stretch(3.0, 1e-4)

    def test_stretch_estimate_with_stretch_factor(self):
        status, body = dispatch("/api/stretch-estimate", {"a": "8", "h": "1e-6", "stretch": "6"})
        assert status == 200
        # 8^(1/6) = sqrt 2; its intercept slope is ln(2)/1
        assert body["slope"] == pytest.approx(0.6931471805599453 / 2.0, abs=1e-6)

    def test_compound(self):
        status, body = dispatch("/api/compound", {"n": "1"})
        assert (status, body["value"]) == (200, 2.0)
        status, body = dispatch("/api/compound", {"n": "100"})
        assert body["value"] == limits.compound(100)

    def test_compound_x(self):
        status, body = dispatch("/api/compound-x", {"x": "-1", "n": "10"})
        assert status == 200
        assert body["value"] == limits.compound_x(-1.0, 10)

    def test_euler_path_endpoint_value(self):
        status, body = dispatch("/api/euler-path", {"x": "1", "n": "4"})
        assert status == 200
        assert body["points"][-1] == [1.0, 2.44140625]
        assert body["points"] == [[x, y] for x, y in odesolve.euler_path(1.0, 4).points]

    def test_series(self):
        status, body = dispatch("/api/series", {"x": "1", "tol": "1e-15"})
        st = series.taylor_exp(1.0, 1e-15)
        assert status == 200
        assert (body["value"], body["terms"], body["tail_bound"]) == (
            st.partial_sum, st.terms_used, st.tail_bound
        )

    def test_curve_tangent(self):
        status, body = dispatch(
            "/api/curve", {"a": "8", "stretch": "6", "xmin": "-3", "xmax": "3", "samples": "65"}
        )
        assert status == 200
        assert len(body["points"]) == 65
        assert body["tangent_at_intercept"]["intercept"] == 1.0
        # slope of 8^(x/6) at 0 is ln(8)/6 = ln(2)/2
        assert body["tangent_at_intercept"]["slope"] == pytest.approx(0.34657359, abs=1e-6)

    def test_errors_are_400(self):
        for path, params in (
            ("/api/compound", {"n": "0"}),
            ("/api/compound", {}),
            ("/api/compound-x", {"x": "-10", "n": "2"}),
            ("/api/tangent-slope", {"a": "3", "h": "0"}),
            ("/api/curve", {"a": "2", "samples": "8"}),
            ("/api/curve", {"a": "2", "xmin": "3", "xmax": "-3"}),
            ("/api/euler-path", {"x": "1", "n": "200000"}),
        ):
            status, body = dispatch(path, params)
            assert status == 400 and "error" in body, (path, params, status, body)

    def test_unknown_endpoint_404(self):
        status, body = dispatch("/api/unknown", {})
        assert status == 404 and "error" in body


class TestLiveServer:
    @pytest.fixture()
    def server(self):
        httpd = make_server(0)
        thread = threading.Thread(target=httpd.serve_forever, daemon=True)
        thread.start()
        yield f"http://127.0.0.1:{httpd.server_address[1]}"
        httpd.shutdown()
        httpd.server_close()

    def test_round_trip_over_socket(self, server):
        with urllib.request.urlopen(f"{server}/api/compound?n=100", timeout=10) as resp:
            assert resp.status == 200
            assert resp.headers["Content-Type"].startswith("application/json")
            assert resp.headers["Access-Control-Allow-Origin"] == "*"
            body = json.loads(resp.read().decode("utf-8"))
        assert body["value"] == limits.compound(100)

    def test_error_status_over_socket(self, server):
        req = urllib.request.Request(f"{server}/api/compound?n=0")
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(req, timeout=10)
        assert err.value.code == 400

    def test_concurrent_requests_identical(self, server):
        results = []

        def fetch():
            with urllib.request.urlopen(f"{server}/api/series?x=2&tol=1e-15", timeout=10) as resp:
                results.append(resp.read())

        threads = [threading.Thread(target=fetch) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(set(results)) == 1
