"""Command-line interface.

A thin client over the service layer: every subcommand builds the same
request model the HTTP API accepts, runs it in-process by default, or
POSTs it to a running instance when --server is given.  The CLI itself
only parses flags, moves bytes to stdout/files, and maps errors to exit
codes: 0 ok, 1 verification failure, 2 usage/parse/domain error.
"""

from __future__ import annotations

import argparse
import sys

from pydantic import ValidationError

from . import __version__
from .errors import SchwarzlabError
from .funcspec import DomainError, ParseError
from .reports import Report, render_json
from .service import handlers
from .service.models import (
    BoundRequest,
    BoundResponse,
    ExtremalRequest,
    ExtremalResponse,
    NormRequest,
    NormResponse,
    SweepRequest,
    SweepResponse,
    VerifyRequest,
    VerifyResponse,
)

_EXIT_OK = 0
_EXIT_VERIFY_FAILED = 1
_EXIT_USAGE = 2


def _call(args, path: str, req, handler, resp_cls):
    """Run a request in-process, or against --server when given."""
    if getattr(args, "server", None):
        import httpx

        url = args.server.rstrip("/") + path
        resp = httpx.post(url, json=req.model_dump(mode="json"), timeout=600.0)
        if resp.status_code >= 400:
            try:
                detail = resp.json().get("detail", resp.text)
            except ValueError:
                detail = resp.text
            raise DomainError(f"server rejected request ({resp.status_code}): {detail}")
        return resp_cls.model_validate(resp.json())
    return handler(req)


def _print_report(command: str, params: dict, results: dict, notes) -> None:
    sys.stdout.write(Report(command=command, params=params, results=results,
                            notes=tuple(notes)).to_json())


def cmd_bound(args) -> int:
    req = BoundRequest(alpha=args.alpha, z=args.z)
    resp: BoundResponse = _call(args, "/bound", req, handlers.run_bound, BoundResponse)
    results = {
        "regime": resp.regime,
        "delta": resp.delta,
        "S_norm_bound": resp.schwarzian_norm_bound,
        "P_norm_bound": resp.pre_schwarzian_norm_bound,
    }
    if resp.pointwise_bound is not None:
        results["pointwise_bound"] = resp.pointwise_bound
    _print_report("bound", {"alpha": resp.alpha, "z": resp.z}, results, resp.notes)
    return _EXIT_OK


def cmd_norm(args) -> int:
    req = NormRequest(spec=args.spec, kind=args.kind, radii=args.radii,
                      angles=args.angles, rmax=args.rmax,
                      refine_iters=args.refine_iters)
    resp: NormResponse = _call(args, "/norm", req, handlers.run_norm, NormResponse)
    results = {
        "value": resp.value,
        "argmax": complex(resp.argmax_re, resp.argmax_im),
        "boundary_attained": resp.boundary_attained,
        "truncation_limited": resp.truncation_limited,
        "evaluations": resp.evaluations,
        "bound": resp.bound,
        "ratio": resp.ratio,
    }
    params = {"spec": resp.spec, "kind": resp.kind, "radii": req.radii,
              "angles": req.angles, "rmax": req.rmax, "refine_iters": req.refine_iters}
    _print_report("norm", params, results, resp.notes)
    return _EXIT_OK


def cmd_extremal(args) -> int:
    req = ExtremalRequest(alpha=args.alpha, z0=args.z0)
    resp: ExtremalResponse = _call(args, "/extremal", req, handlers.run_extremal,
                                   ExtremalResponse)
    results = {
        "p": resp.p,
        "b": resp.b,
        "s0": resp.s0,
        "omega_at_z0_abs": resp.omega_at_z0_abs,
        "attained_value": resp.attained_value,
        "pointwise_bound": resp.pointwise_bound,
        "membership_min": resp.membership_min,
    }
    _print_report("extremal", {"alpha": resp.alpha, "z0": resp.z0}, results, resp.notes)
    return _EXIT_OK


def cmd_sweep(args) -> int:
    req = SweepRequest(alpha_min=args.alpha_min, alpha_max=args.alpha_max,
                       steps=args.steps)
    resp: SweepResponse = _call(args, "/sweep", req, handlers.run_sweep, SweepResponse)
    with open(args.out, "w", newline="") as fh:
        fh.write(resp.csv)
    params = {"alpha_min": req.alpha_min, "alpha_max": req.alpha_max,
              "steps": req.steps, "out": args.out}
    _print_report("sweep", params, {"rows": len(resp.rows)},
                  ["one row per alpha; delta column blank in the small regime"])
    return _EXIT_OK


def cmd_verify(args) -> int:
    req = VerifyRequest(seed=args.seed)
    resp: VerifyResponse = _call(args, "/verify", req, handlers.run_verify,
                                 VerifyResponse)
    for c in resp.criteria:
        sys.stderr.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n")
    payload = {
        "command": "verify",
        "passed": resp.passed,
        "seed": resp.seed,
        "version": resp.version,
        "grid": resp.grid,
        "criteria": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in resp.criteria
        ],
    }
    text = render_json(payload)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return _EXIT_OK if resp.passed else _EXIT_VERIFY_FAILED


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return _EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schwarzlab",
        description="Sharp pre-Schwarzian/Schwarzian norm bounds for "
                    "Robertson-class maps, with numerical verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_server(p):
        p.add_argument("--server", default=None,
                       help="base URL of a running service; default runs in-process")

    p = sub.add_parser("bound", help="closed-form norm and pointwise bounds at alpha")
    p.add_argument("--alpha", required=True, help="radians, decimal or pi/k")
    p.add_argument("--z", type=float, default=None, help="radius for the pointwise bound")
    add_server(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("norm", help="numeric hyperbolic sup-norm of a function spec")
    p.add_argument("--spec", required=True,
                   help='e.g. "f0(alpha=pi/3)" or "fz0p(alpha=0, z0=0.5)"')
    p.add_argument("--kind", required=True, choices=("pre", "schwarzian"))
    p.add_argument("--radii", type=int, default=64)
    p.add_argument("--angles", type=int, default=256)
    p.add_argument("--rmax", type=float, default=1.0 - 1e-4)
    p.add_argument("--refine-iters", type=int, default=40, dest="refine_iters")
    add_server(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("extremal", help="extremal member attaining the bound at z0")
    p.add_argument("--alpha", required=True, help="radians, decimal or pi/k")
    p.add_argument("--z0", type=float, required=True)
    add_server(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sweep", help="CSV table of bounds and numeric norms over alpha")
    p.add_argument("--alpha-min", required=True, dest="alpha_min")
    p.add_argument("--alpha-max", required=True, dest="alpha_max")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    add_server(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed; default SCHWARZIAN_LAB_SEED or 0")
    add_server(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DomainError, ValidationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return _EXIT_USAGE
    except SchwarzlabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return _EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
