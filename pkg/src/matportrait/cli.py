"""Command-line interface.

Every command is a thin client over the HTTP service (in-process by default,
remote when --server or MATPORTRAIT_SERVER is set). Machine-readable JSON goes
to --out files or stdout; one-line human summaries and diagnostics go to the
error stream.

Exit codes: 0 satisfied / 1 violated / 2 input error / 3 oracle disagreement.
"""

from __future__ import annotations

import math
import sys

import click
import httpx

from .client import ServiceClient, ServiceError
from .errors import PortraitError
from .matrixio import (
    MatrixFileError,
    dumps_canonical,
    file_digest,
    matrix_to_payload,
    read_matrix,
    text_digest,
    write_json,
)

LN2 = math.log(2.0)

CHECK_KINDS = ("subadd", "scaled", "shifted", "ssa")
GEN_KINDS = ("pure", "mixed", "hermitian", "separable", "unitary")


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _post(server: str | None, path: str, payload: dict) -> dict:
    try:
        with ServiceClient(server) as client:
            return client.post(path, payload)
    except ServiceError as exc:
        _fail(exc.detail)
    except httpx.HTTPError as exc:
        _fail(f"service request failed: {exc}")


def _load_matrix_payload(path: str) -> dict:
    try:
        return matrix_to_payload(read_matrix(path))
    except (MatrixFileError, PortraitError) as exc:
        _fail(str(exc))


def _oracle_gate(data: dict) -> None:
    check = data.get("oracle")
    if check is not None and not check["ok"]:
        click.echo(
            f"oracle disagreement: max error {check['max_error']:.3e} "
            f"exceeds {check['tolerance']:.1e}",
            err=True,
        )
        sys.exit(3)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        _fail(f"could not parse {what} {text!r}; expected comma-separated integers")
    if not values:
        _fail(f"{what} must name at least one integer")
    return values


def _emit(doc: dict, out: str | None) -> None:
    if out:
        write_json(out, doc)
    else:
        click.echo(dumps_canonical(doc), nl=False)


@click.group()
@click.option(
    "--server",
    envvar="MATPORTRAIT_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running service; by default the service runs in-process.",
)
@click.pass_context
def main(ctx, server):
    """Block portraits, entropies, and inequality reports for complex matrices."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("input", type=click.Path())
@click.option("--n", type=int, required=True, help="Row-block count of the splitting.")
@click.option("--m", type=int, required=True, help="Column count inside each block.")
@click.option("--pad-to", type=int, default=None, help="Zero-pad the matrix to this dimension first.")
@click.option("--offset", type=int, default=0, help="Top-left placement offset inside the padding.")
@click.option("--verify-oracle", is_flag=True, help="Cross-check against the reference implementation.")
@click.option("--out", required=True, metavar="PREFIX", help="Writes PREFIX.left.json and PREFIX.right.json.")
@click.pass_context
def portrait(ctx, input, n, m, pad_to, offset, verify_oracle, out):
    """Write both block images of the matrix in INPUT."""
    payload = {
        "matrix": _load_matrix_payload(input),
        "n": n,
        "m": m,
        "pad_to": pad_to,
        "offset": offset,
        "verify_oracle": verify_oracle,
    }
    data = _post(ctx.obj["server"], "/portrait", payload)
    _oracle_gate(data)
    write_json(f"{out}.left.json", data["left"])
    write_json(f"{out}.right.json", data["right"])
    click.echo(f"wrote {out}.left.json and {out}.right.json", err=True)


@main.command()
@click.argument("input", type=click.Path())
@click.option("--kind", type=click.Choice(CHECK_KINDS), required=True)
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--radices", default=None, metavar="R1,R2,R3", help="Chain splitting for kind=ssa.")
@click.option("--pad-to", type=int, default=None)
@click.option("--offset", type=int, default=0)
@click.option("--x", type=float, default=None, help="Identity shift for kind=shifted (default: |min eigenvalue|).")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Slack tolerance in nats.")
@click.option("--bits", is_flag=True, help="Print entropic quantities in bits instead of nats.")
@click.option("--verify-oracle", is_flag=True)
@click.option("--out", type=click.Path(), default=None, help="Report file (default: stdout).")
@click.pass_context
def check(ctx, input, kind, n, m, radices, pad_to, offset, x, tol, bits, verify_oracle, out):
    """Check one inequality on the matrix in INPUT and write a report."""
    digest = _digest_or_fail(input)
    payload = {
        "matrix": _load_matrix_payload(input),
        "kind": kind,
        "n": n,
        "m": m,
        "radices": _parse_int_list(radices, "--radices") if radices else None,
        "pad_to": pad_to,
        "offset": offset,
        "x": x,
        "tol": tol,
        "verify_oracle": verify_oracle,
    }
    data = _post(ctx.obj["server"], "/check", payload)
    _oracle_gate(data)
    lhs, rhs = data["lhs"], data["rhs"]
    slack, tolerance = data["slack"], data["tolerance"]
    terms = data["terms"]
    if bits:
        lhs, rhs, tolerance = lhs / LN2, rhs / LN2, tolerance / LN2
        slack = rhs - lhs
        terms = {key: value / LN2 for key, value in terms.items()}
    report = {
        "inequality": data["inequality"],
        "lhs": lhs,
        "rhs": rhs,
        "slack": slack,
        "tolerance": tolerance,
        "satisfied": data["satisfied"],
        "terms": terms,
        "input_digest": digest,
    }
    _emit(report, out)
    unit = "bits" if bits else "nats"
    verdict = "satisfied" if data["satisfied"] else "VIOLATED"
    click.echo(f"{data['inequality']}: slack = {slack:.6g} {unit}, {verdict}", err=True)
    if not data["satisfied"]:
        sys.exit(1)


def _digest_or_fail(path: str) -> str:
    try:
        return file_digest(path)
    except MatrixFileError as exc:
        _fail(str(exc))


@main.command()
@click.argument("input", type=click.Path())
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--bits", is_flag=True)
@click.option("--verify-oracle", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def mutinfo(ctx, input, n, m, tol, bits, verify_oracle, out):
    """Mutual information between the two block images of a density matrix."""
    digest = _digest_or_fail(input)
    payload = {
        "matrix": _load_matrix_payload(input),
        "n": n,
        "m": m,
        "verify_oracle": verify_oracle,
    }
    data = _post(ctx.obj["server"], "/mutinfo", payload)
    _oracle_gate(data)
    satisfied = data["value"] >= -tol
    value, via_embedding = data["value"], data["value_via_embedding"]
    terms, tolerance = data["terms"], tol
    if bits:
        value, via_embedding, tolerance = value / LN2, via_embedding / LN2, tol / LN2
        terms = {key: v / LN2 for key, v in terms.items()}
    report = {
        "quantity": "mutual-information",
        "value": value,
        "value_via_embedding": via_embedding,
        "tolerance": tolerance,
        "satisfied": satisfied,
        "terms": terms,
        "input_digest": digest,
    }
    _emit(report, out)
    unit = "bits" if bits else "nats"
    click.echo(f"mutual information = {value:.6g} {unit}", err=True)
    if not satisfied:
        sys.exit(1)


@main.command()
@click.option("--kind", type=click.Choice(GEN_KINDS), required=True)
@click.option("--dim", type=int, required=True)
@click.option("--seed", type=int, envvar="MATPORTRAIT_SEED", default=0, show_default=True)
@click.option("--stream", type=int, default=0, show_default=True)
@click.option("--scale", type=float, default=1.0, show_default=True, help="Spread for kind=hermitian.")
@click.option("--terms", type=int, default=4, show_default=True, help="Mixture size for kind=separable.")
@click.option("--n", type=int, default=None, help="Block splitting for kind=separable.")
@click.option("--m", type=int, default=None)
@click.option("--out", type=click.Path(), required=True)
@click.pass_context
def gen(ctx, kind, dim, seed, stream, scale, terms, n, m, out):
    """Draw a reproducible random matrix and write it to --out."""
    payload = {
        "kind": kind,
        "dim": dim,
        "seed": seed,
        "stream": stream,
        "scale": scale,
        "terms": terms,
        "n": n,
        "m": m,
    }
    data = _post(ctx.obj["server"], "/gen", payload)
    write_json(out, data["matrix"])
    click.echo(f"wrote {out}", err=True)


@main.command()
@click.option("--kind", type=click.Choice(CHECK_KINDS), required=True)
@click.option("--dims", required=True, metavar="D1,D2,...", help="Matrix dimensions to sweep.")
@click.option("--trials", type=int, required=True)
@click.option("--seed", type=int, envvar="MATPORTRAIT_SEED", default=0, show_default=True)
@click.option("--stream", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--radices", default=None, metavar="R1,R2,R3")
@click.option("--report", "report_path", type=click.Path(), default=None, help="Summary file (default: stdout).")
@click.pass_context
def batch(ctx, kind, dims, trials, seed, stream, tol, n, m, radices, report_path):
    """Run random trials of one inequality over a list of dimensions."""
    payload = {
        "kind": kind,
        "dims": _parse_int_list(dims, "--dims"),
        "trials": trials,
        "seed": seed,
        "stream": stream,
        "tol": tol,
        "n": n,
        "m": m,
        "radices": _parse_int_list(radices, "--radices") if radices else None,
    }
    data = _post(ctx.obj["server"], "/batch", payload)
    terms = {
        "total_trials": float(data["total_trials"]),
        "violations": float(data["violations"]),
    }
    if data["min_slack"] is not None:
        terms["min_slack"] = data["min_slack"]
        terms["mean_slack"] = data["mean_slack"]
    for entry in data["per_dim"]:
        prefix = f"dim{entry['dim']}"
        terms[f"{prefix}_min_slack"] = entry["min_slack"]
        terms[f"{prefix}_mean_slack"] = entry["mean_slack"]
        terms[f"{prefix}_violations"] = float(entry["violations"])
    report = {
        "inequality": data["inequality"],
        "lhs": data["worst_lhs"] if data["worst_lhs"] is not None else 0.0,
        "rhs": data["worst_rhs"] if data["worst_rhs"] is not None else 0.0,
        "slack": data["min_slack"] if data["min_slack"] is not None else 0.0,
        "tolerance": data["tolerance"],
        "satisfied": data["satisfied"],
        "terms": terms,
        "input_digest": text_digest(dumps_canonical(payload)),
    }
    _emit(report, report_path)
    click.echo(
        f"{data['inequality']}: {data['total_trials']} trials, "
        f"{data['violations']} violations",
        err=True,
    )
    if not data["satisfied"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
