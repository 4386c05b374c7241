"""Command-line client.

Talks to the HTTP service; by default the service app is mounted in-process
over an ASGI transport, so no server needs to be running.  Point at a remote
instance with --server or the EQUISURF_SERVER environment variable.

Exit codes: 0 success, 2 parse error, 3 semantic error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import asyncio
import os
import sys

import httpx

from .cohomology import to_canonical_json

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_VERIFY = 4


async def _arequest(server: str | None, method: str, path: str, payload=None):
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=300.0) as client:
            resp = await client.request(method, path, json=payload)
    else:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://equisurf.local", timeout=300.0
        ) as client:
            resp = await client.request(method, path, json=payload)
    return resp.status_code, resp.json()


def request(server: str | None, method: str, path: str, payload=None):
    return asyncio.run(_arequest(server, method, path, payload))


def _error_exit(status: int, body) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    kind = detail.get("kind", "") if isinstance(detail, dict) else ""
    message = detail.get("message", str(detail)) if isinstance(detail, dict) else str(detail)
    print(f"error: {message}", file=sys.stderr)
    if status == 400 or kind == "parse":
        return EXIT_PARSE
    return EXIT_SEMANTIC


def cmd_classify(args) -> int:
    status, body = request(args.server, "POST", "/classify", {"expr": args.expr})
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        sys.stdout.write(to_canonical_json(body))
    else:
        print(f"class:      {body['name']}")
        print(f"family:     {body['family']}")
        print(f"surgery:    {body['surgery']}")
        inv = body["invariants"]
        print(
            "invariants: beta={beta} F={fixed_points} chi={euler} "
            "orientable={orientable} free={free}".format(**inv)
        )
        print(f"underlying: {body['underlying']}")
        print(f"quotient:   {body['quotient']}")
    return EXIT_OK


def cmd_cohomology(args) -> int:
    payload = {"expr": args.expr, "format": args.format, "window": args.window}
    status, body = request(args.server, "POST", "/cohomology", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.format == "json":
        sys.stdout.write(to_canonical_json(body["answer"]))
    else:
        sys.stdout.write(body["rendered"])
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = {"suite": args.suite, "window": args.window}
    status, body = request(args.server, "POST", "/verify", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        sys.stdout.write(to_canonical_json(body))
    else:
        _print_verify(body)
    return EXIT_OK if body["passed"] else EXIT_VERIFY


def _print_verify(report: dict, indent: str = "") -> None:
    mark = "PASS" if report["passed"] else "FAIL"
    extra = ""
    if "classes_checked" in report:
        extra = f" ({report['classes_checked']} classes)"
    elif "grid_cases" in report:
        extra = f" ({len(report.get('fixtures', {}))} fixtures, {report['grid_cases']} grid cases)"
    print(f"{indent}{mark} {report.get('suite', '?')}{extra} [{report.get('elapsed_s', 0)}s]")
    for sub in report.get("suites", {}).values():
        _print_verify(sub, indent + "  ")


def cmd_ext(args) -> int:
    status, body = request(args.server, "POST", "/ext", {"target": args.target})
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        sys.stdout.write(to_canonical_json(body))
    else:
        print(f"target:          {body['target']}")
        print(f"dim Hom(F0, N):  {body['dim_hom_f0']}")
        print(f"dim Hom(F1, N):  {body['dim_hom_f1']}")
        print(f"dim ker d2*:     {body['dim_ker_d2_star']}")
        print(f"dim im d1*:      {body['dim_im_d1_star']}")
        print(f"dim Ext^1:       {body['ext1']}")
    return EXIT_OK


def cmd_replay(args) -> int:
    if args.list:
        status, body = request(args.server, "GET", "/replay/cases")
        if status != 200:
            return _error_exit(status, body)
        for name in body["cases"]:
            print(name)
        return EXIT_OK
    payload = {"case": args.case, "window": args.window}
    status, body = request(args.server, "POST", "/replay", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        sys.stdout.write(to_canonical_json(body))
        return EXIT_OK if body["report"]["ok"] else EXIT_VERIFY
    rep = body["report"]
    case = body["case"]
    print(f"case:      {case['name']}")
    print(f"third:     {case['third']}")
    print(f"target:    {case['target']}")
    print(f"middle:    {case['middle']}")
    print(f"classes:   {rep['admissible_classes']} admissible, "
          f"{rep['matching_classes']} matching (unique={rep['unique']})")
    print(f"extension: {body['extension']}")
    print(f"result:    {'ok' if rep['ok'] else 'FAIL -- ' + rep['detail']}")
    return EXIT_OK if rep["ok"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equisurf",
        description="RO(C3)-graded Bredon cohomology of closed C3-surfaces.",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get("EQUISURF_SERVER"),
        help="URL of a running equisurf service (default: in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a surgery/shorthand expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cohomology", help="cohomology of a C3-surface")
    p.add_argument("expr")
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    p.add_argument(
        "--window",
        default=os.environ.get("EQUISURF_WINDOW"),
        help='bigraded window "P_MIN:P_MAX,Q_MIN:Q_MAX" (default -8:8,-8:8)',
    )
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("axioms", "figures", "theorems", "ext", "les", "all"),
                   default="all")
    p.add_argument("--window", default=os.environ.get("EQUISURF_WINDOW"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ext", help="Ext^1(EB, -) from the packaged free resolution")
    p.add_argument("target", help="summand token, e.g. EB, M3@2,1, HC3@1,0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("replay", help="replay a recorded cofiber-sequence fixture")
    p.add_argument("case", nargs="?", help="fixture name (see --list)")
    p.add_argument("--list", action="store_true", help="list replayable cases")
    p.add_argument("--window", default=os.environ.get("EQUISURF_WINDOW"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "replay" and not args.list and not args.case:
        parser.error("replay: a case name or --list is required")
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
