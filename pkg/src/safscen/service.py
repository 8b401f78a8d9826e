"""Stateless HTTP/JSON facade over the engine.

Versioned under ``/v1``; every non-2xx body is an ``ApiError`` object
``{"code", "message", "field"}``. Requests never mutate server state: each
handler reads the immutable bundle snapshot captured at startup, so any
request order (or concurrency level) yields identical responses, and the
``/v1/bundle`` ETag is stable for a given dataset.

Request bodies are validated by hand rather than by framework models so
schema problems map to 400 with the offending field named, while well-formed
but out-of-bounds levers map to 422.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import demand as demand_model
from . import scenario as scenario_model
from .datasets import COMMODITY_ORDER, Commodity, DatasetBundle, Route, load_bundle
from .errors import (
    DemandRangeError,
    GridError,
    PackageBoundsError,
    PackageSchemaError,
    SafscenError,
)

#: Lever bounds published to clients; UI controls mirror these exactly.
LEVER_BOUNDS = {
    "tax_discount": {"min": 0.0, "max": 1.0, "step": 0.05},
    "carbon_price": {"min": 0.0, "max": 500.0, "step": 10.0},
    "saf_premium": {"min": 0.0, "max": 1.0, "step": 0.05},
    "byproduct_premium": {"min": 0.0, "max": 1.0, "step": 0.05},
    "capital_grant": {"min": 0.0},
}


class _ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, field: str | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.field = field


def _error_response(status: int, code: str, message: str, field: str | None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "field": field},
    )


def bundle_summary(bundle: DatasetBundle) -> dict:
    books = {
        source: {
            "years": list(book.year_range()),
            "commodities": [c.value for c in book.commodities()],
        }
        for source, book in sorted(bundle.price_books.items())
    }
    routes = {
        route.value: {
            "byproduct_yield": spec.byproduct_yield,
            "consumption": {c.value: spec.consumption[c] for c in spec.consumed()},
            "other_variable_cost_usd_per_kg": spec.other_variable_cost,
            "other_variable_tax_usd_per_kg": spec.other_variable_tax,
        }
        for route, spec in sorted(bundle.yields.items(), key=lambda kv: kv[0].value)
    }
    return {
        "bundle_version": bundle.version,
        "fx_brl_per_usd": bundle.fx.brl_per_usd,
        "routes": routes,
        "commodities": [
            {"id": c.value, "base_unit": c.base_unit} for c in COMMODITY_ORDER
        ],
        "price_books": books,
        "carbon": {
            "fossil_jet_ci": bundle.carbon.fossil_jet,
            "hefa_ci": bundle.carbon.hefa,
            "atj_ci": bundle.carbon.atj,
            "lhv_mj_per_kg": bundle.carbon.lhv_mj_per_kg,
        },
        "finance_defaults": {
            "wacc": bundle.finance.wacc,
            "life_years": bundle.finance.life,
            "capacity_kt_per_year": bundle.finance.capacity_kt,
            "revenue_tax": bundle.finance.revenue_tax,
            "fixed_cost_usd_per_kg": bundle.finance.fixed_cost_per_kg,
        },
        "scenario_presets": {
            name: pkg.to_dict() for name, pkg in scenario_model.SCENARIOS.items()
        },
        "lever_bounds": LEVER_BOUNDS,
        "capex_references_usd": bundle.targets["capex_reference_usd"],
        "buildout_scenarios": [s.to_dict() for s in bundle.investment.buildout_scenarios],
        "demand_years": bundle.demand.milestone_years,
        "provenance": bundle.provenance,
    }


def _parse_route(value: Any) -> Route:
    if not isinstance(value, str):
        raise _ApiError(400, "invalid_route", "route must be a string", "route")
    try:
        return Route(value)
    except ValueError:
        raise _ApiError(
            400, "invalid_route", f"unknown route {value!r} (use hefa or atj)", "route"
        ) from None


def _parse_package(value: Any):
    if not isinstance(value, (str, dict)):
        raise _ApiError(
            400, "invalid_package", "package must be a scenario name or an object",
            "package",
        )
    try:
        return scenario_model.resolve_package(value)
    except PackageSchemaError as exc:
        raise _ApiError(400, "invalid_package", str(exc), exc.field) from exc
    except PackageBoundsError as exc:
        raise _ApiError(422, "package_out_of_bounds", str(exc), exc.field) from exc


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _ApiError(400, "invalid_json", "request body is not valid JSON", None)
    if not isinstance(body, dict):
        raise _ApiError(400, "invalid_json", "request body must be a JSON object", None)
    return body


def create_app(bundle: DatasetBundle | None = None) -> FastAPI:
    bundle = bundle if bundle is not None else load_bundle()
    etag = f'"{bundle.content_hash()}"'

    app = FastAPI(title="safscen", version="1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],  # desk tool, loopback by default
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_ApiError)
    async def handle_api_error(_request: Request, exc: _ApiError):
        return _error_response(exc.status, exc.code, exc.message, exc.field)

    @app.exception_handler(SafscenError)
    async def handle_engine_error(_request: Request, exc: SafscenError):
        return _error_response(400, "engine_error", str(exc), None)

    @app.get("/v1/bundle")
    async def get_bundle():
        return JSONResponse(content=bundle_summary(bundle), headers={"ETag": etag})

    @app.post("/v1/evaluate")
    async def post_evaluate(request: Request):
        body = await _json_body(request)
        route = _parse_route(body.get("route"))
        _, package = _parse_package(body.get("package", "base"))
        result = scenario_model.evaluate(bundle, route, package)
        return JSONResponse(content=result.to_dict())

    @app.post("/v1/sweep")
    async def post_sweep(request: Request):
        body = await _json_body(request)
        route = _parse_route(body.get("route"))
        raw_spec = body.get("spec")
        if not isinstance(raw_spec, dict):
            raise _ApiError(400, "invalid_spec", "spec must be an object", "spec")
        fixed = scenario_model.BASE
        if "fixed" in raw_spec:
            _, fixed = _parse_package(raw_spec["fixed"])
        for key in ("lever", "from", "to", "steps"):
            if key not in raw_spec:
                raise _ApiError(400, "invalid_spec", f"spec.{key} is required", key)
        try:
            spec = scenario_model.SweepSpec(
                lever=raw_spec["lever"],
                start=float(raw_spec["from"]),
                stop=float(raw_spec["to"]),
                steps=int(raw_spec["steps"]),
                fixed=fixed,
            )
        except (TypeError, ValueError):
            raise _ApiError(400, "invalid_spec", "from/to/steps must be numeric", "spec") from None
        except GridError as exc:
            raise _ApiError(400, "degenerate_grid", str(exc), "spec") from exc
        try:
            rows = scenario_model.sweep(bundle, route, spec)
        except PackageBoundsError as exc:
            raise _ApiError(422, "package_out_of_bounds", str(exc), exc.field) from exc
        return JSONResponse(content={
            "route": route.value,
            "lever": spec.lever,
            "rows": [row.to_dict() for row in rows],
        })

    @app.get("/v1/demand")
    async def get_demand(
        year: int | None = None,
        policy: str = "total",
        bound: str = "lower",
        interpolate: bool = False,
    ):
        if policy not in demand_model.POLICIES:
            raise _ApiError(400, "invalid_policy", f"unknown policy {policy!r}", "policy")
        if bound not in demand_model.CI_BOUNDS:
            raise _ApiError(400, "invalid_bound", f"unknown ci_bound {bound!r}", "bound")
        table = bundle.demand
        if year is None:
            records = [
                table.at(y, policy, bound).to_dict() for y in table.milestone_years
            ]
            return JSONResponse(content={"records": records})
        try:
            record = table.at(year, policy, bound, interpolate=interpolate)
        except DemandRangeError as exc:
            raise _ApiError(422, "year_out_of_range", str(exc), "year") from exc
        return JSONResponse(content=record.to_dict())

    return app


def run(bundle: DatasetBundle | None = None, host: str = "127.0.0.1",
        port: int = 8000) -> None:
    """Blocking server entry point used by the CLI ``serve`` command."""
    import uvicorn

    uvicorn.run(create_app(bundle), host=host, port=port, log_level="warning")
