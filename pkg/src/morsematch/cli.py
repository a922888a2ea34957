"""Command-line client for the morsematch service.

Every subcommand is a thin wrapper around one service endpoint.  Without
--url the service app runs in-process; with --url requests go to a running
server.  Exit codes: 0 pass, 1 property failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

PASS, PROPERTY_FAILURE, INPUT_ERROR = 0, 1, 2


def _post(args, path: str, payload: dict):
    """POST against a remote service, or the app mounted in-process."""
    import httpx

    if args.url:
        with httpx.Client(base_url=args.url) as client:
            return client.post(path, json=payload)

    import asyncio

    from .service.app import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://morsematch.local") as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _fail(message: str, code: int) -> int:
    print(f"morsematch: {message}", file=sys.stderr)
    return code


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from None


def _complex_payload(path: str, off_values: str | None) -> dict:
    if path.endswith(".off"):
        if not off_values:
            raise ValueError("OFF input needs --off-values FILE (one scalar per line)")
        from .fileio import complex_to_dict, load_off

        values = [float(line) for line in Path(off_values).read_text().split()]
        return complex_to_dict(load_off(Path(path).read_text(), values))
    return _read_json(path)


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _http_error(response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    code = PROPERTY_FAILURE if response.status_code == 409 else INPUT_ERROR
    return _fail(f"HTTP {response.status_code}: {detail}", code)


def cmd_gradient(args) -> int:
    payload = {
        "complex": _complex_payload(args.input, args.off_values),
        "fast": args.fast,
        "modified": args.modified_hasse,
        "include_vpaths": args.vpaths,
        "include_dot": args.format == "dot" or args.dot is not None,
    }
    response = _post(args, "/gradient", payload)
    if response.status_code != 200:
        return _http_error(response)
    report = response.json()
    dot = report.pop("dot", None)
    if args.dot and dot:
        Path(args.dot).write_text(dot)
    if args.format == "dot":
        if args.output:
            Path(args.output).write_text(dot)
        else:
            sys.stdout.write(dot)
    else:
        _emit(report, args.output)
    return PASS


def cmd_smoothcheck(args) -> int:
    payload = {"complex": _complex_payload(args.input, args.off_values)}
    response = _post(args, "/smoothcheck", payload)
    if response.status_code != 200:
        return _http_error(response)
    report = response.json()
    _emit(report, args.output)
    return PASS if report["smooth"] else PROPERTY_FAILURE


def cmd_subdivide(args) -> int:
    payload = {"complex": _complex_payload(args.input, args.off_values)}
    response = _post(args, "/subdivide", payload)
    if response.status_code != 200:
        return _http_error(response)
    _emit(response.json(), args.output)
    return PASS


def cmd_cat0(args) -> int:
    pip = _read_json(args.input)
    payload = {"pip": pip, "include_dot": args.dot is not None}
    if args.order_seed is not None:
        elements = list(pip.get("elements", []))
        random.Random(args.order_seed).shuffle(elements)
        payload["element_order"] = elements
    response = _post(args, "/cat0", payload)
    if response.status_code != 200:
        return _http_error(response)
    report = response.json()
    dot = report.pop("dot", None)
    if args.dot and dot:
        Path(args.dot).write_text(dot)
    _emit(report, args.output)
    return PASS


def cmd_verify(args) -> int:
    payload = {
        "seed": args.seed,
        "trials": args.trials,
        "max_vertices": args.max_vertices,
        "max_dim": args.max_dim,
    }
    if args.checks:
        payload["checks"] = args.checks.split(",")
    response = _post(args, "/verify", payload)
    if response.status_code != 200:
        return _http_error(response)
    report = response.json()
    for check in report["checks"]:
        status = "pass" if check["passed"] else "FAIL"
        line = (f"{status}  {check['name']}: {check['trials']} trials, "
                f"{check['failures']} failures, {check['skipped']} skipped")
        print(line)
        if check["first_failure"]:
            print(f"      first counterexample: {check['first_failure']}")
    if args.output:
        _emit(report, args.output)
    return PASS if report["passed"] else PROPERTY_FAILURE


def cmd_export_dot(args) -> int:
    data = _read_json(args.input)
    payload: dict = {"variant": args.variant, "with_gradient": not args.no_gradient}
    if "elements" in data:
        payload["pip"] = data
    else:
        payload["complex"] = data
    response = _post(args, "/export-dot", payload)
    if response.status_code != 200:
        return _http_error(response)
    dot = response.json()["dot"]
    if args.output:
        Path(args.output).write_text(dot)
    else:
        sys.stdout.write(dot)
    return PASS


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morsematch",
                                     description="Greedy Morse matching toolkit")
    parser.add_argument("--url", default=None,
                        help="base URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, off=True):
        p.add_argument("input", help="input file (complex JSON, PIP JSON, or OFF)")
        p.add_argument("-o", "--output", default=None, help="output file; default stdout")
        if off:
            p.add_argument("--off-values", default=None,
                           help="per-vertex scalar file for OFF input")

    p = sub.add_parser("gradient", help="compute a discrete gradient field")
    add_io(p)
    p.add_argument("--fast", action="store_true",
                   help="linear matcher; requires a smooth complex")
    p.add_argument("--modified-hasse", action="store_true",
                   help="match on the modified Hasse diagram")
    p.add_argument("--vpaths", action="store_true", help="include traced V-paths")
    p.add_argument("--dot", default=None, help="also write a DOT file here")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_gradient)

    p = sub.add_parser("smoothcheck", help="test discrete smoothness; exit 0 iff smooth")
    add_io(p)
    p.set_defaults(fn=cmd_smoothcheck)

    p = sub.add_parser("subdivide", help="barycentric subdivision")
    add_io(p)
    p.set_defaults(fn=cmd_subdivide)

    p = sub.add_parser("cat0", help="collapse certificate for a PIP cube complex")
    add_io(p, off=False)
    p.add_argument("--order-seed", type=int, default=None,
                   help="permute the element order with this seed")
    p.add_argument("--dot", default=None, help="also write a DOT file here")
    p.set_defaults(fn=cmd_cat0)

    p = sub.add_parser("verify", help="run the randomized verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--checks", default=None, help="comma-separated check names")
    p.add_argument("-o", "--output", default=None, help="write the JSON report here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export-dot", help="DOT export of a Hasse diagram")
    add_io(p, off=False)
    p.add_argument("--variant", choices=("plain", "modified"), default="plain")
    p.add_argument("--no-gradient", action="store_true",
                   help="plain diagram without the matching overlay")
    p.set_defaults(fn=cmd_export_dot)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        return _fail(str(exc), INPUT_ERROR)
    except OSError as exc:
        return _fail(str(exc), INPUT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
