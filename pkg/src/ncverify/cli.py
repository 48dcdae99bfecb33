"""Command-line client for the verification service.

All verification work happens behind the HTTP interface: by default the
client mounts the app in process, with ``--server`` it talks to a running
instance instead.  Exit status is 0 when every selected check passes, 1 when
any check fails or is skipped, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Sequence

import httpx

from . import checks

E6_SUBTARGETS = ("group", "roots", "invariants", "theorem53", "invariance")
HEUN_SUBTARGETS = ("racah", "hahn")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit reports as JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument(
        "--budget-time", type=float, metavar="S", help="time budget in seconds"
    )
    common.add_argument(
        "--budget-mem", type=int, metavar="MB", help="memory budget in megabytes"
    )
    common.add_argument("--cache-dir", metavar="PATH", help="directory for group caches")
    common.add_argument(
        "--server", metavar="URL", help="talk to a running server instead of in process"
    )
    common.add_argument(
        "--timings", action="store_true", help="include timing and peak memory in reports"
    )

    parser = argparse.ArgumentParser(prog="ncverify")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", parents=[common], help="run verification checks"
    )
    verify.add_argument(
        "targets",
        nargs="*",
        metavar="target",
        help="check names; 'e6' and 'heun' take an optional subtarget; "
        "empty runs the default suite",
    )
    verify.add_argument(
        "--mode",
        choices=("oracle", "symbolic"),
        help="evaluation mode for the omega-image check",
    )

    sub.add_parser("series", parents=[common], help="check the counting series")

    trace = sub.add_parser(
        "trace", parents=[common], help="print the canonical form of a trace word"
    )
    trace.add_argument("pattern", help="comma-separated factor indices, e.g. 1,1,2")
    trace.add_argument(
        "--reversed", action="store_true", help="use reversed second-factor letters"
    )

    lr = sub.add_parser(
        "lr", parents=[common], help="tensor-product multiplicity of a weight"
    )
    lr.add_argument("left", help="weight pair, e.g. 2,1")
    lr.add_argument("right", help="weight pair, e.g. 2,1")
    lr.add_argument("target", help="weight pair, e.g. 3,1")

    serve = sub.add_parser("serve", parents=[common], help="run the HTTP server")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _expand_targets(tokens: Sequence[str]) -> list[str]:
    if not tokens:
        return list(checks.DEFAULT_SUITE)
    names: list[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        follower = tokens[i + 1] if i + 1 < len(tokens) else None
        if token == "e6":
            if follower in E6_SUBTARGETS:
                names.append(f"e6-{follower}")
                i += 2
            else:
                names.extend(f"e6-{s}" for s in E6_SUBTARGETS)
                i += 1
        elif token == "heun":
            if follower in HEUN_SUBTARGETS:
                names.append(f"heun-{follower}")
                i += 2
            else:
                names.extend(f"heun-{s}" for s in HEUN_SUBTARGETS)
                i += 1
        elif token in checks.REGISTRY:
            names.append(token)
            i += 1
        else:
            raise ValueError(f"unknown verify target {token!r}")
    return sorted(set(names))


class _InProcessTransport(httpx.BaseTransport):
    """Drive the ASGI app from the synchronous client, one request at a time."""

    def __init__(self, app) -> None:
        self._inner = httpx.ASGITransport(app=app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        async def roundtrip() -> tuple[int, httpx.Headers, bytes]:
            response = await self._inner.handle_async_request(request)
            body = await response.aread()
            return response.status_code, response.headers, body

        status_code, headers, body = asyncio.run(roundtrip())
        return httpx.Response(status_code=status_code, headers=headers, content=body)


def _open_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=None)
    from .service import create_app

    transport = _InProcessTransport(create_app())
    return httpx.Client(transport=transport, base_url="http://ncverify.local", timeout=None)


def _check_body(args: argparse.Namespace, name: str) -> dict:
    body: dict = {"seed": args.seed, "with_timing": args.timings}
    if args.budget_time is not None:
        body["budget_time"] = args.budget_time
    if args.budget_mem is not None:
        body["budget_mem"] = args.budget_mem
    if args.cache_dir is not None:
        body["cache_dir"] = args.cache_dir
    mode = getattr(args, "mode", None)
    if name == "omega-image" and mode is not None:
        body["mode"] = mode
    return body


def _run_reports(client: httpx.Client, names: Sequence[str], args: argparse.Namespace) -> list[dict]:
    reports = []
    for name in sorted(names):
        response = client.post(f"/api/checks/{name}", json=_check_body(args, name))
        response.raise_for_status()
        reports.append(response.json())
    return reports


def _emit_reports(reports: Sequence[dict], as_json: bool) -> int:
    if as_json:
        print(json.dumps({"reports": list(reports)}, indent=2, sort_keys=True))
    else:
        for report in reports:
            line = f"[{report['status'].upper():<7}] {report['checkName']}"
            if report.get("timing") is not None:
                rss = (report.get("resources") or {}).get("max_rss_mb")
                line += f"  ({report['timing']}s, rss {rss} MB)"
            print(line)
            if report["status"] != "pass":
                print(f"    witness: {json.dumps(report['witness'], sort_keys=True)}")
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def _parse_pair(text: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected a pair like 2,1 and got {text!r}")
    return [int(p) for p in parts]


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    try:
        with _open_client(args.server) as client:
            if args.command == "verify":
                try:
                    names = _expand_targets(args.targets)
                except ValueError as bad:
                    print(f"ncverify: {bad}", file=sys.stderr)
                    return 2
                return _emit_reports(_run_reports(client, names, args), args.json)

            if args.command == "series":
                return _emit_reports(_run_reports(client, ["series"], args), args.json)

            if args.command == "trace":
                try:
                    pattern = [int(p) for p in args.pattern.split(",")]
                except ValueError:
                    print(f"ncverify: bad pattern {args.pattern!r}", file=sys.stderr)
                    return 2
                response = client.post(
                    "/api/trace",
                    json={"pattern": pattern, "reversed_indices": args.reversed},
                )
                if response.status_code != 200:
                    print(f"ncverify: {response.json()['detail']}", file=sys.stderr)
                    return 2
                payload = response.json()
                if args.json:
                    print(json.dumps(payload, indent=2, sort_keys=True))
                else:
                    print(payload["text"])
                return 0

            if args.command == "lr":
                try:
                    body = {
                        "left": _parse_pair(args.left),
                        "right": _parse_pair(args.right),
                        "target": _parse_pair(args.target),
                    }
                except ValueError as bad:
                    print(f"ncverify: {bad}", file=sys.stderr)
                    return 2
                response = client.post("/api/lr", json=body)
                if response.status_code != 200:
                    print(f"ncverify: {response.json()['detail']}", file=sys.stderr)
                    return 2
                payload = response.json()
                if args.json:
                    print(json.dumps(payload, indent=2, sort_keys=True))
                else:
                    print(payload["multiplicity"])
                return 0
    except httpx.HTTPError as err:
        print(f"ncverify: request failed: {err}", file=sys.stderr)
        return 1

    raise AssertionError(f"unhandled command {args.command!r}")
