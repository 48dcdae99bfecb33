"""HTTP surface for the verification engine.

The command-line client talks to this app, in process by default, so all
check execution, trace canonicalisation and multiplicity lookups live behind
the same four endpoints whether or not a network server is running.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import checks, enveloping, reps
from .schemas import (
    CheckInfo,
    LrRequest,
    LrResponse,
    Report,
    RunRequest,
    TraceRequest,
    TraceResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="ncverify")

    @app.get("/api/checks", response_model=list[CheckInfo])
    def list_checks() -> list[CheckInfo]:
        return [
            CheckInfo(name=name, description=entry.description, modes=list(entry.modes))
            for name, entry in sorted(checks.REGISTRY.items())
        ]

    @app.post("/api/checks/{name}", response_model=Report)
    def run_check(name: str, request: RunRequest) -> Report:
        entry = checks.REGISTRY.get(name)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"unknown check {name!r}")
        if request.mode is not None and request.mode not in entry.modes:
            raise HTTPException(
                status_code=400,
                detail=f"check {name!r} has no mode {request.mode!r}",
            )
        ctx = checks.CheckContext(
            seed=request.seed,
            mode=request.mode,
            budget_time=request.budget_time,
            budget_mem=request.budget_mem,
            cache_dir=request.cache_dir,
            with_timing=request.with_timing,
        )
        return Report(**checks.run_check(name, ctx))

    @app.post("/api/trace", response_model=TraceResponse)
    def trace(request: TraceRequest) -> TraceResponse:
        env = enveloping.standard_algebra()
        element = enveloping.trace_element(
            env, tuple(request.pattern), request.reversed_indices
        )
        return TraceResponse(
            pattern=request.pattern,
            reversed_indices=request.reversed_indices,
            text=element.to_text(),
        )

    @app.post("/api/lr", response_model=LrResponse)
    def lr(request: LrRequest) -> LrResponse:
        by_weight = {rep.weights: rep for rep in reps.standard_reps().values()}
        left = by_weight.get(request.left)
        right = by_weight.get(request.right)
        if left is None or right is None:
            known = sorted(by_weight)
            raise HTTPException(
                status_code=400,
                detail=f"factors must be among the standard weights {known}",
            )
        return LrResponse(
            left=request.left,
            right=request.right,
            target=request.target,
            multiplicity=reps.lr_multiplicity(left, right, request.target),
        )

    return app
