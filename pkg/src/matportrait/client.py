"""Thin client for the HTTP service.

With no server URL the client mounts the application in-process, so the
command-line tools work standalone while exercising exactly the code paths a
deployed service would. Give a base URL (or set MATPORTRAIT_SERVER) to talk to
a remote instance instead.
"""

from __future__ import annotations

import httpx


class ServiceError(Exception):
    """Non-success response from the service."""

    def __init__(self, status_code: int, detail: str):
        super().__init__(f"{status_code}: {detail}")
        self.status_code = status_code
        self.detail = detail


def _detail(response) -> str:
    try:
        body = response.json()
    except ValueError:
        return response.text.strip() or f"HTTP {response.status_code}"
    if isinstance(body, dict) and "detail" in body:
        detail = body["detail"]
        if isinstance(detail, str):
            return detail
        if isinstance(detail, list):  # request-model validation errors
            parts = []
            for item in detail:
                loc = ".".join(str(p) for p in item.get("loc", []) if p != "body")
                parts.append(f"{loc}: {item.get('msg', 'invalid')}" if loc else item.get("msg", "invalid"))
            return "; ".join(parts)
    return str(body)


class ServiceClient:
    def __init__(self, server: str | None = None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=httpx.Timeout(600.0))
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        response = self._client.post(path, json=payload)
        if response.status_code != 200:
            raise ServiceError(response.status_code, _detail(response))
        return response.json()

    def get(self, path: str) -> dict:
        response = self._client.get(path)
        if response.status_code != 200:
            raise ServiceError(response.status_code, _detail(response))
        return response.json()

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
