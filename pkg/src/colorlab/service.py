"""Loopback JSON-over-HTTP service powering the picker experiment UI.

Conversion endpoints are stateless thin veneers over the library kernels;
trial records are appended to one session CSV through a single lock so rows
never interleave.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import threading
from datetime import datetime, timezone
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .analysis import SESSION_FIELDS, SessionRecord, session_row
from .core import ColorModelId, Rgb8, rgb8_from_unit
from .transforms import COMPONENTS, KERNELS, Component, coord_from_components

SESSION_DIR_ENV = "COLORLAB_SESSION_DIR"
SESSION_FILENAME = "sessions.csv"

RGB_COMPONENTS = (
    Component("R", 0.0, 255.0, 1.0),
    Component("G", 0.0, 255.0, 1.0),
    Component("B", 0.0, 255.0, 1.0),
)


class BadRequest(ValueError):
    """Malformed body -> HTTP 400."""


class OutOfRange(ValueError):
    """Component outside its valid range -> HTTP 422."""

    def __init__(self, component: Component, value: float):
        super().__init__(
            f"component {component.name}={value} outside valid range "
            f"[{component.lo}, {component.hi}]"
        )
        self.payload = {
            "error": str(self),
            "component": component.name,
            "valid_range": [component.lo, component.hi],
        }


def _components_for(model_name: str) -> tuple[Component, ...]:
    if model_name == "rgb":
        return RGB_COMPONENTS
    return COMPONENTS[ColorModelId.parse(model_name)]


class PickerService:
    """State and operations behind the HTTP endpoints."""

    def __init__(self, seed: int | None = None, session_dir: str | None = None):
        self.rng = random.Random(seed)
        directory = session_dir or os.environ.get(SESSION_DIR_ENV) or os.getcwd()
        self.session_path = os.path.join(directory, SESSION_FILENAME)
        self._lock = threading.Lock()
        self._trials: dict[str, dict] = {}
        self._trial_counter = 0

    # -- /models -----------------------------------------------------------
    def models_payload(self) -> dict:
        models = []
        for name in ("rgb",) + tuple(m.value for m in ColorModelId):
            comps = _components_for(name)
            models.append(
                {
                    "id": name,
                    "components": [
                        {"name": c.name, "min": c.lo, "max": c.hi, "step": c.step}
                        for c in comps
                    ],
                }
            )
        return {"models": models}

    # -- /convert ----------------------------------------------------------
    def convert(self, body: dict) -> dict:
        model_name, values = self._checked_components(body)
        if model_name == "rgb":
            rgb = Rgb8(int(values[0] + 0.5), int(values[1] + 0.5), int(values[2] + 0.5))
        else:
            model = ColorModelId.parse(model_name)
            coord = coord_from_components(model, values)
            rgb = rgb8_from_unit(KERNELS[model].inverse(coord))
        return {"rgb_hex": rgb.hex()}

    # -- /target -----------------------------------------------------------
    def new_target(self, body: dict) -> dict:
        with self._lock:
            self._trial_counter += 1
            trial_id = f"t{self._trial_counter:06d}"
            target = Rgb8(self.rng.randrange(256), self.rng.randrange(256), self.rng.randrange(256))
            self._trials[trial_id] = {"target": target, "model": body.get("model")}
        return {"rgb_hex": target.hex(), "trial_id": trial_id}

    # -- /trial ------------------------------------------------------------
    def record_trial(self, body: dict) -> dict:
        for field in ("trial_id", "participant_id", "model", "components", "elapsed_s"):
            if field not in body:
                raise BadRequest(f"missing field {field!r}")
        trial = self._trials.get(body["trial_id"])
        if trial is None:
            raise BadRequest(f"unknown trial_id {body['trial_id']!r}")
        model_name, values = self._checked_components(body)
        try:
            elapsed = float(body["elapsed_s"])
        except (TypeError, ValueError):
            raise BadRequest("elapsed_s must be a number") from None
        if elapsed <= 0:
            raise BadRequest("elapsed_s must be positive")
        record = SessionRecord(
            participant_id=str(body["participant_id"]),
            model=model_name,
            target=trial["target"],
            components=tuple(values),
            elapsed_seconds=elapsed,
            timestamp=datetime.now(timezone.utc).isoformat(),
        )
        self._append(record)
        return {"status": "recorded", "trial_id": body["trial_id"]}

    def _append(self, record: SessionRecord) -> None:
        with self._lock:
            new_file = not os.path.exists(self.session_path)
            with open(self.session_path, "a", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh)
                if new_file:
                    writer.writerow(SESSION_FIELDS)
                writer.writerow(session_row(record))

    # -- /export -----------------------------------------------------------
    def export_csv(self) -> str:
        with self._lock:
            if not os.path.exists(self.session_path):
                buf = io.StringIO()
                csv.writer(buf).writerow(SESSION_FIELDS)
                return buf.getvalue()
            with open(self.session_path, "r", encoding="utf-8", newline="") as fh:
                return fh.read()

    # -- shared validation ---------------------------------------------------
    def _checked_components(self, body: dict) -> tuple[str, list[float]]:
        if not isinstance(body, dict):
            raise BadRequest("body must be a JSON object")
        model_name = body.get("model")
        if not isinstance(model_name, str):
            raise BadRequest("missing or non-string field 'model'")
        model_name = model_name.strip().lower()
        try:
            comps = _components_for(model_name)
        except ValueError as exc:
            raise BadRequest(str(exc)) from None
        raw = body.get("components")
        if not isinstance(raw, (list, tuple)):
            raise BadRequest("missing or non-array field 'components'")
        if len(raw) != len(comps):
            raise BadRequest(f"{model_name} takes {len(comps)} components, got {len(raw)}")
        values = []
        for spec, v in zip(comps, raw):
            try:
                val = float(v)
            except (TypeError, ValueError):
                raise BadRequest(f"component {spec.name} is not a number") from None
            if not spec.lo <= val <= spec.hi:
                raise OutOfRange(spec, val)
            values.append(val)
        return model_name, values


class _PickerHandler(BaseHTTPRequestHandler):
    service: PickerService  # set on the server class

    def do_GET(self):
        if self.path == "/models":
            self._send_json(200, self.server.service.models_payload())
        elif self.path == "/export":
            text = self.server.service.export_csv()
            data = text.encode("utf-8")
            self.send_response(200)
            self.send_header("Content-Type", "text/csv; charset=utf-8")
            self.send_header("Content-Length", str(len(data)))
            self._cors()
            self.end_headers()
            self.wfile.write(data)
        else:
            self._send_json(404, {"error": f"unknown path {self.path}"})

    def do_POST(self):
        routes = {
            "/convert": self.server.service.convert,
            "/target": self.server.service.new_target,
            "/trial": self.server.service.record_trial,
        }
        handler = routes.get(self.path)
        if handler is None:
            self._send_json(404, {"error": f"unknown path {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            body = json.loads(raw.decode("utf-8"))
            if not isinstance(body, dict):
                raise BadRequest("body must be a JSON object")
            self._send_json(200, handler(body))
        except OutOfRange as exc:
            self._send_json(422, exc.payload)
        except (BadRequest, json.JSONDecodeError, UnicodeDecodeError) as exc:
            self._send_json(400, {"error": str(exc)})
        except Exception as exc:  # pragma: no cover - defensive
            self._send_json(500, {"error": f"internal error: {exc}"})

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def _send_json(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self._cors()
        self.end_headers()
        self.wfile.write(data)

    def _cors(self) -> None:
        # the UI may be opened from file:// or another local port
        self.send_header("Access-Control-Allow-Origin", "*")

    def log_message(self, fmt, *args):  # silence per-request stderr noise
        pass


class PickerServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, service: PickerService):
        super().__init__(address, _PickerHandler)
        self.service = service


def make_server(
    host: str = "127.0.0.1",
    port: int = 0,
    seed: int | None = None,
    session_dir: str | None = None,
) -> PickerServer:
    return PickerServer((host, port), PickerService(seed=seed, session_dir=session_dir))
