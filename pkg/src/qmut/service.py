"""Local HTTP service exposing the engine to the companion UI.

All endpoints are POST with JSON bodies and are stateless: responses depend
only on the request payload.  Domain errors come back as status 400 with
{"error": {"code", "message"}}; requests beyond the desk-scale caps get 422.
"""

from __future__ import annotations

import os
import socket

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .canonical import canonical_key
from .documents import quiver_from_document, quiver_to_document
from .dynamics import (
    alt_orbit,
    classify_growth,
    ratio_target,
)
from .errors import (
    InconclusiveError,
    LimitExceededError,
    ParseError,
    PortInUseError,
    QmutError,
)
from .explore import (
    ISOMORPHISM,
    LABELED,
    CollectPairMultiplicities,
    NoIcebound,
    PairExactlyK,
    SearchLimits,
    explore,
)
from .gadgets import X3CInstance, build_subset_sum_gadget, build_x3c_gadget

MAX_STATES_CAP = 200_000
MAX_DYNAMICS_STEPS = 500
MAX_VERTICES = 30
MAX_INSTANCE_SIZE = 24

DEFAULT_PORT = 8642


def _quiver_from(body: dict, field: str = "quiver"):
    if field not in body:
        raise ParseError(f"missing field {field!r}")
    q = quiver_from_document(body[field])
    if len(q) > MAX_VERTICES:
        raise LimitExceededError(
            f"quiver has {len(q)} vertices; the service caps requests at {MAX_VERTICES}"
        )
    return q


def _parse_predicate(raw):
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ParseError("predicate: expected an object with a 'kind' field")
    kind = raw["kind"]
    if kind == "pair-exactly":
        k = raw.get("k")
        if isinstance(k, str):
            if not k.isdigit():
                raise ParseError(f"predicate.k: bad decimal string {k!r}")
            k = int(k)
        if not isinstance(k, int) or k < 0:
            raise ParseError("predicate.k: expected a nonnegative integer")
        return PairExactlyK(k)
    if kind == "no-icebound":
        return NoIcebound()
    if kind == "collect":
        u, v = raw.get("u"), raw.get("v")
        if not isinstance(u, str) or not isinstance(v, str):
            raise ParseError("predicate: 'collect' needs string fields u and v")
        return CollectPairMultiplicities(u, v)
    raise ParseError(f"predicate.kind: unknown kind {kind!r}")


def _parse_limits(raw) -> SearchLimits:
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ParseError("limits: expected an object")

    def grab(name, default=None):
        val = raw.get(name, default)
        if isinstance(val, str):
            if not val.isdigit():
                raise ParseError(f"limits.{name}: bad decimal string {val!r}")
            val = int(val)
        if val is not None and (not isinstance(val, int) or val < 1):
            raise ParseError(f"limits.{name}: expected a positive integer or null")
        return val

    max_states = grab("max_states", 10_000)
    if max_states is None or max_states > MAX_STATES_CAP:
        raise LimitExceededError(
            f"max_states is capped at {MAX_STATES_CAP} for service requests"
        )
    return SearchLimits(
        max_states=max_states,
        max_depth=grab("max_depth"),
        max_multiplicity=grab("max_multiplicity", SearchLimits().max_multiplicity),
        time_budget_ms=grab("time_budget_ms"),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="qmut service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(QmutError)
    async def domain_error(_request: Request, err: QmutError):
        status = 422 if isinstance(err, LimitExceededError) else 400
        return JSONResponse(
            status_code=status,
            content={"error": {"code": err.code, "message": str(err)}},
        )

    @app.exception_handler(ValueError)
    async def value_error(_request: Request, err: ValueError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "InvalidArgument", "message": str(err)}},
        )

    @app.post("/api/mutate")
    async def mutate(body: dict):
        q = _quiver_from(body)
        vertex = body.get("vertex")
        if not isinstance(vertex, str):
            raise ParseError("missing string field 'vertex'")
        return {"quiver": quiver_to_document(q.mutate(vertex))}

    @app.post("/api/mutate-seq")
    async def mutate_seq(body: dict):
        q = _quiver_from(body)
        steps = body.get("steps")
        if not isinstance(steps, list) or not all(isinstance(s, str) for s in steps):
            raise ParseError("missing list-of-strings field 'steps'")
        return {"quiver": quiver_to_document(q.mutate_seq(steps))}

    @app.post("/api/canonical")
    async def canonical(body: dict):
        q = _quiver_from(body)
        return {"key_hex": canonical_key(q).hex()}

    @app.post("/api/explore")
    async def explore_endpoint(body: dict):
        q = _quiver_from(body)
        predicate = _parse_predicate(body.get("predicate", {"kind": "no-icebound"}))
        limits = _parse_limits(body.get("limits"))
        dedup = body.get("dedup", LABELED)
        if dedup not in (LABELED, ISOMORPHISM):
            raise ParseError(f"dedup: expected {LABELED!r} or {ISOMORPHISM!r}")
        report = explore(q, predicate, limits, dedup=dedup)
        return report.to_json()

    @app.post("/api/gadget/subset-sum")
    async def gadget_subset_sum(body: dict):
        values = body.get("values")
        if not isinstance(values, list):
            raise ParseError("missing list field 'values'")
        parsed = []
        for v in values:
            if isinstance(v, str):
                if not v.isdigit():
                    raise ParseError(f"values: bad decimal string {v!r}")
                v = int(v)
            if not isinstance(v, int):
                raise ParseError("values: expected integers or decimal strings")
            parsed.append(v)
        if len(parsed) > MAX_INSTANCE_SIZE:
            raise LimitExceededError(
                f"instances are capped at {MAX_INSTANCE_SIZE} values for the service"
            )
        return {"quiver": quiver_to_document(build_subset_sum_gadget(parsed))}

    @app.post("/api/gadget/x3c")
    async def gadget_x3c(body: dict):
        n = body.get("n")
        triples = body.get("triples")
        if not isinstance(n, int) or not isinstance(triples, list):
            raise ParseError("need integer 'n' and list 'triples'")
        if n > MAX_INSTANCE_SIZE or len(triples) > MAX_INSTANCE_SIZE:
            raise LimitExceededError(
                f"instances are capped at {MAX_INSTANCE_SIZE} for the service"
            )
        clean = []
        for t in triples:
            if not isinstance(t, list) or len(t) != 3 or not all(isinstance(x, int) for x in t):
                raise ParseError(f"triples: expected [i, j, k] integer lists, got {t!r}")
            clean.append(tuple(t))
        inst = X3CInstance(n=n, triples=tuple(clean))
        return {"quiver": quiver_to_document(build_x3c_gadget(inst))}

    @app.post("/api/dynamics")
    async def dynamics_endpoint(body: dict):
        q = _quiver_from(body)
        c, d = body.get("c"), body.get("d")
        steps = body.get("steps")
        if not isinstance(c, str) or not isinstance(d, str):
            raise ParseError("need string fields 'c' and 'd'")
        if not isinstance(steps, int) or steps < 1:
            raise ParseError("'steps' must be a positive integer")
        if steps > MAX_DYNAMICS_STEPS:
            raise LimitExceededError(
                f"steps is capped at {MAX_DYNAMICS_STEPS} for service requests"
            )
        trace = alt_orbit(q, c, d, steps)
        names = trace.states[0].names
        pair_names = [
            (names[i], names[j])
            for i in range(len(names))
            for j in range(i + 1, len(names))
        ]
        out_states = []
        for idx, (state, mutated) in enumerate(zip(trace.states, trace.mutated)):
            out_states.append(
                {
                    "index": idx,
                    "mutated": mutated,
                    "quiver": quiver_to_document(state),
                    "pairs": {
                        f"{u},{v}": str(state.multiplicity(u, v)) for u, v in pair_names
                    },
                    "total": str(state.total_arrows()),
                }
            )
        try:
            growth = classify_growth(trace)
            classification = {"kind": growth.kind, "period": growth.period}
        except InconclusiveError as err:
            classification = {"kind": "inconclusive", "message": str(err)}
        alpha = trace.alpha
        ratio: dict = {"alpha": alpha, "target": None, "per_vertex": {}}
        if alpha >= 2:
            ratio["target"] = ratio_target(alpha)
            n = trace.n_steps
            for name in trace.states[0].frozen_names():
                denom = trace.delta(name, d, n)
                if denom > 0:
                    # int/int true division is correctly rounded even when the
                    # operands exceed the float range
                    ratio["per_vertex"][name] = trace.delta(name, c, n) / denom
        return {
            "c": c,
            "d": d,
            "alpha": alpha,
            "states": out_states,
            "classification": classification,
            "ratio": ratio,
        }

    return app


def serve(port: int | None = None, host: str = "127.0.0.1") -> None:
    """Run the service (blocking).  Port defaults to $QMUT_PORT or 8642."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("QMUT_PORT", DEFAULT_PORT))
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError:
        raise PortInUseError(f"port {port} on {host} is already in use") from None
    finally:
        probe.close()
    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
