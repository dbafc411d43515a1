"""Thin command line client for the HTTP service.

Every subcommand builds one request, sends it (in process by default, or
to --server / $HYPERLAB_SERVER), and prints either the text rendering or
the JSON record.  Exit codes: 0 success, 1 semantic negative (axioms
failed, no roots, not minimal), 2 usage or transport trouble.
"""

import argparse
import asyncio
import json
import os
import sys

import httpx

USAGE_EXIT = 2
NEGATIVE_EXIT = 1


def post(server, path, payload):
    if server:
        with httpx.Client(base_url=server.rstrip("/"), timeout=120.0) as c:
            return c.post(path, json=payload)

    from .service.app import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://hyperlab") as c:
            return await c.post(path, json=payload)

    return asyncio.run(go())


def add_common(p):
    p.add_argument("--format", choices=("table", "records"), default="table")
    p.add_argument("--server", default=os.environ.get("HYPERLAB_SERVER"),
                   help="base URL of a running service"
                        " (default: in-process app)")
    p.add_argument("-v", "--verbose", action="store_true",
                   help="echo the request target to stderr")


def add_source(p):
    p.add_argument("--builtin", metavar="NAME",
                   help="krasner, signs, or weak_signs")
    p.add_argument("--field", type=int, metavar="Q",
                   help="finite field order (prime or prime power)")
    p.add_argument("--modulus", metavar="COEFFS",
                   help="comma separated, constant first, e.g. 1,0,1")
    p.add_argument("--subgroup", metavar="S",
                   help="squares, squares-of-base, trivial, full,"
                        " or generator names")
    p.add_argument("--record", metavar="PATH",
                   help="JSON exchange record ('-' reads stdin)")


def spec_of(args, parser):
    picked = [s for s in (args.builtin, args.field, args.record)
              if s is not None]
    if len(picked) != 1:
        parser.error("give exactly one of --builtin, --field, --record")
    if args.record is not None:
        text = sys.stdin.read() if args.record == "-" else \
            open(args.record).read()
        try:
            return {"record": json.loads(text)}
        except json.JSONDecodeError as e:
            parser.error(f"record is not valid JSON: {e}")
    if args.builtin is not None:
        return {"builtin": args.builtin}
    spec = {"field": args.field}
    if args.modulus:
        spec["modulus"] = args.modulus
    if args.subgroup:
        spec["subgroup"] = args.subgroup
    return spec


def call(args, path, payload):
    if args.verbose:
        print(f"POST {args.server or '<in-process>'}{path}", file=sys.stderr)
    try:
        resp = post(args.server, path, payload)
    except httpx.HTTPError as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)
    if resp.status_code != 200:
        try:
            detail = resp.json()["detail"]
        except Exception:
            detail = resp.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)
    return resp.json()


def emit_records(body):
    print(json.dumps(body["record"], indent=2))


def as_set(names):
    return "{" + ", ".join(names) + "}"


def cmd_build(args, parser):
    body = call(args, "/api/build",
                {"spec": spec_of(args, parser), "format": args.format})
    if args.format == "records":
        emit_records(body)
    else:
        print(body["text"])
    return 0


def cmd_verify(args, parser):
    body = call(args, "/api/verify", {"spec": spec_of(args, parser)})
    if args.format == "records":
        emit_records(body)
    else:
        print(body["text"])
    return 0 if body["passed"] else NEGATIVE_EXIT


def cmd_eval(args, parser):
    body = call(args, "/api/eval",
                {"spec": spec_of(args, parser), "poly": args.poly,
                 "at": args.at})
    if args.format == "records":
        print(json.dumps({"values": body["values"]}, indent=2))
    else:
        print(as_set(body["values"]))
    return 0


def cmd_roots(args, parser):
    body = call(args, "/api/roots",
                {"spec": spec_of(args, parser), "poly": args.poly})
    if args.format == "records":
        print(json.dumps({"roots": body["roots"]}, indent=2))
    else:
        print(as_set(body["roots"]))
    return 0 if body["roots"] else NEGATIVE_EXIT


def extend_payload(args):
    payload = {"field": args.field, "subgroup": args.subgroup,
               "poly": args.poly}
    if args.modulus:
        payload["modulus"] = args.modulus
    return payload


def cmd_extend(args, parser):
    body = call(args, "/api/extend", extend_payload(args))
    if args.format == "records":
        emit_records(body)
    else:
        print(body["text"])
    return 0


def cmd_minimal(args, parser):
    payload = extend_payload(args)
    payload["exhaustive"] = args.exhaustive
    body = call(args, "/api/minimal", payload)
    if args.format == "records":
        emit_records(body)
    else:
        print(body["text"])
    return 0 if body["minimal"] else NEGATIVE_EXIT


def cmd_experiment(args, parser):
    body = call(args, "/api/reproduce-paper", None)
    if args.format == "records":
        emit_records(body)
    else:
        print(body["text"])
    return 0


def cmd_serve(args, parser):
    import uvicorn

    workers = args.workers
    bound = os.environ.get("HYPERLAB_THREADS")
    if bound:
        try:
            workers = min(workers, max(1, int(bound)))
        except ValueError:
            parser.error(f"HYPERLAB_THREADS must be an integer, got {bound!r}")
    uvicorn.run("hyperlab.service.app:app", host=args.host, port=args.port,
                workers=workers, log_level="info")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperlab",
        description="finite hyperfields: build, verify, evaluate, extend")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print tables or a class listing")
    add_source(p)
    add_common(p)
    p.set_defaults(run=cmd_build)

    p = sub.add_parser("verify", help="run the axiom sweep")
    add_source(p)
    add_common(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("eval", help="evaluate a polynomial at a point")
    add_source(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--at", required=True)
    add_common(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("roots", help="list roots of a polynomial")
    add_source(p)
    p.add_argument("--poly", required=True)
    add_common(p)
    p.set_defaults(run=cmd_roots)

    p = sub.add_parser("extend", help="adjoin a root of a rootless polynomial")
    p.add_argument("--field", type=int, required=True)
    p.add_argument("--subgroup", default="squares")
    p.add_argument("--modulus")
    p.add_argument("--poly", required=True)
    add_common(p)
    p.set_defaults(run=cmd_extend)

    p = sub.add_parser("minimal", help="certify minimality of an extension")
    p.add_argument("--field", type=int, required=True)
    p.add_argument("--subgroup", default="squares")
    p.add_argument("--modulus")
    p.add_argument("--poly", required=True)
    p.add_argument("--exhaustive", action="store_true",
                   help="search unobstructed candidates for a structure")
    add_common(p)
    p.set_defaults(run=cmd_minimal)

    p = sub.add_parser("reproduce-paper",
                       help="run the full two-extensions experiment")
    add_common(p)
    p.set_defaults(run=cmd_experiment)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--workers", type=int, default=1,
                   help="capped by $HYPERLAB_THREADS when set")
    p.set_defaults(run=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args, parser)
    except SystemExit as e:
        return 0 if e.code is None else e.code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
