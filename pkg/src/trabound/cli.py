"""Command-line front end.

The CLI is a thin client of the FastAPI service: each command builds a
request, posts it (in-process by default, or to a remote instance given
--server), and formats the JSON response as CSV or JSON with `#`-prefixed
metadata lines.  Every run with --out also writes a sidecar
<out-stem>.config.json holding the resolved request; replaying it through
--config reproduces the output byte for byte.

Exit codes: 0 success (and fixtures pass), 1 usage error, 2 numerical or
service failure, 3 fixture mismatch in `compare`.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

from . import __version__
from .errors import TraboundError

SERVICE_URL = "http://trabound.internal"


class ServiceError(Exception):
    """A request to the solver service failed."""


class FixtureMismatch(Exception):
    """compare ran, wrote its output, and at least one tolerance failed."""


def _post(server: str | None, path: str, payload: dict) -> dict:
    if server:
        try:
            with httpx.Client(base_url=server, timeout=600.0) as client:
                resp = client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise ServiceError(f"request to {server}{path} failed: {exc}") from exc
    else:
        from .service.app import app

        async def _run():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url=SERVICE_URL, timeout=None
            ) as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(_run())
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        raise ServiceError(f"{path} -> HTTP {resp.status_code}: {detail}")
    return resp.json()


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def _emit(meta: dict, columns: list[str], rows: list[list], out: str | None, fmt: str):
    """Write the table as CSV (with # metadata lines) or structured JSON."""
    if fmt == "csv":
        lines = [f"# {key}={_fmt(value)}" for key, value in meta.items()]
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(
            {"meta": meta, "columns": columns, "rows": rows},
            indent=2,
            sort_keys=True,
            default=float,
        ) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _write_sidecar(out: str | None, command: str, resolved: dict):
    if not out:
        return
    path = Path(out)
    sidecar = path.with_name(path.stem + ".config.json")
    payload = {"command": command, **resolved}
    sidecar.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read config file {path}: {exc}")
    if not isinstance(data, dict):
        raise click.UsageError(f"config file {path} must hold a JSON object")
    return data


def _resolve(flag_value, config: dict, key: str, default=None):
    if flag_value is not None:
        return flag_value
    if key in config and config[key] is not None:
        return config[key]
    return default


def _parse_span(text: str, name: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise click.UsageError(f"{name} must look like 'start:stop', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise click.UsageError(f"{name} must hold numbers, got {text!r}")


def _parse_grid_3(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"--grid must look like 'min:max:points', got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.UsageError(f"--grid must hold numbers, got {text!r}")


def _parse_grid_2d(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise click.UsageError(f"--grid must look like 'NBxNC', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise click.UsageError(f"--grid must hold integers, got {text!r}")


def potential_options(f):
    f = click.option("--model", type=click.Choice(["I", "II"]), default=None)(f)
    f = click.option("--a", "a", type=float, default=None, help="length scale (> 0)")(f)
    f = click.option("--A", "A", type=float, default=None, help="coupling A")(f)
    f = click.option("--B", "B", type=float, default=None, help="coupling B")(f)
    f = click.option("--C", "C", type=float, default=None, help="coupling C")(f)
    return f


def solver_options(f):
    f = click.option("--method", type=click.Choice(["hmd", "lmm", "both"]), default=None)(f)
    f = click.option("--M", "M", type=int, default=None, help="basis/mesh size")(f)
    f = click.option("--lambda", "lam", type=float, default=None, help="HMD scale")(f)
    f = click.option("--h", "h", type=float, default=None, help="LMM scale")(f)
    f = click.option("--quad-points", type=int, default=None)(f)
    return f


def io_options(f):
    f = click.option("--out", type=click.Path(dir_okay=False), default=None)(f)
    f = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)(f)
    f = click.option("--config", "config_path", type=click.Path(exists=False), default=None)(f)
    f = click.option("--server", default=None, help="remote service URL (default: in-process)")(f)
    return f


def _potential_payload(cfg: dict, model, a, A, B, C) -> dict:
    model = _resolve(model, cfg, "model")
    if model is None:
        raise click.UsageError("--model is required (I or II)")
    return {
        "model": model,
        "a": _resolve(a, cfg, "a", 1.0),
        "A": _resolve(A, cfg, "A", 1.0),
        "B": _resolve(B, cfg, "B", 1.0),
        "C": _resolve(C, cfg, "C", 1.0),
    }


def _solver_payload(cfg: dict, method, M, lam, h, quad_points, default_method="hmd") -> dict:
    return {
        "method": _resolve(method, cfg, "method", default_method),
        "M": _resolve(M, cfg, "M"),
        "lambda": _resolve(lam, cfg, "lambda"),
        "h": _resolve(h, cfg, "h"),
        "quad_points": _resolve(quad_points, cfg, "quad_points"),
    }


@click.group()
@click.version_option(version=__version__)
def cli():
    """Bound-state spectra of two four-parameter potentials."""


@cli.command()
@potential_options
@solver_options
@io_options
def spectrum(model, a, A, B, C, method, M, lam, h, quad_points, out, fmt, config_path, server):
    """Compute bound-state energies and write them as a table."""
    cfg = _load_config(config_path)
    potential = _potential_payload(cfg, model, a, A, B, C)
    solver = _solver_payload(cfg, method, M, lam, h, quad_points)
    fmt = _resolve(fmt, cfg, "format", "csv")
    data = _post(server, "/spectrum", {"potential": potential, "solver": solver})

    meta = {"command": "spectrum", "version": __version__, **potential}
    for res in data["results"]:
        meta[f"{res['method']}_basis_size"] = res["basis_size"]
        meta[f"{res['method']}_scale"] = res["scale"]
        meta[f"{res['method']}_n_positive"] = res["n_positive"]
    if data.get("capacity") is not None:
        meta["tra_capacity"] = data["capacity"]

    if len(data["results"]) == 1:
        res = data["results"][0]
        columns = ["k", "energy"]
        rows = [[k, e] for k, e in enumerate(res["energies"])]
        meta["method"] = res["method"]
    else:
        by_method = {r["method"]: r["energies"] for r in data["results"]}
        n = max(len(v) for v in by_method.values())
        columns = ["k", "energy_hmd", "energy_lmm"]
        rows = [
            [
                k,
                by_method["hmd"][k] if k < len(by_method["hmd"]) else "",
                by_method["lmm"][k] if k < len(by_method["lmm"]) else "",
            ]
            for k in range(n)
        ]
        meta["method"] = "both"
    _emit(meta, columns, rows, out, fmt)
    _write_sidecar(out, "spectrum", {**potential, **{k: v for k, v in solver.items()}, "format": fmt})


@cli.command()
@potential_options
@solver_options
@click.option("--grid", default=None, help="x grid as 'min:max:points' (default 0:20a:1000)")
@io_options
def wavefunction(model, a, A, B, C, method, M, lam, h, quad_points, grid, out, fmt, config_path, server):
    """Write sampled series wavefunctions for every bound state."""
    cfg = _load_config(config_path)
    potential = _potential_payload(cfg, model, a, A, B, C)
    solver = _solver_payload(cfg, method, M, lam, h, quad_points)
    fmt = _resolve(fmt, cfg, "format", "csv")
    grid = _resolve(grid, cfg, "grid", f"0:{20.0 * potential['a']:g}:1000")
    x_min, x_max, points = _parse_grid_3(grid)
    payload = {
        "potential": potential,
        "solver": solver,
        "grid": {"x_min": x_min, "x_max": x_max, "points": points},
    }
    data = _post(server, "/wavefunction", payload)
    meta = {"command": "wavefunction", "version": __version__, **potential,
            "method": data["method"], "grid": grid, "normalization": "f0=1"}
    for state in data["states"]:
        meta[f"energy_{state['k']}"] = state["energy"]
    columns = ["x"] + [f"psi_{s['k']}" for s in data["states"]]
    rows = [
        [x] + [s["values"][i] for s in data["states"]]
        for i, x in enumerate(data["x"])
    ]
    _emit(meta, columns, rows, out, fmt)
    _write_sidecar(out, "wavefunction", {**potential, **solver, "grid": grid, "format": fmt})


@cli.command("potential-curve")
@click.option("--model", type=click.Choice(["I", "II"]), default=None)
@click.option("--a", "a", type=float, default=None)
@click.option("--A", "A", type=float, default=None)
@click.option("--B-over-A", "b_over_a", default=None, help="comma-separated list, e.g. 4,8,16")
@click.option("--C-over-A", "c_over_a", type=float, default=None)
@click.option("--grid", default=None, help="x grid as 'min:max:points'")
@io_options
def potential_curve(model, a, A, b_over_a, c_over_a, grid, out, fmt, config_path, server):
    """Write V(x)/(A/a^2) curves for several B/A at fixed C/A."""
    cfg = _load_config(config_path)
    model = _resolve(model, cfg, "model")
    if model is None:
        raise click.UsageError("--model is required (I or II)")
    a = _resolve(a, cfg, "a", 1.0)
    A = _resolve(A, cfg, "A", 1.0)
    b_raw = _resolve(b_over_a, cfg, "B_over_A", "4,8,16")
    c_over_a = _resolve(c_over_a, cfg, "C_over_A", 2.0)
    fmt = _resolve(fmt, cfg, "format", "csv")
    grid = _resolve(grid, cfg, "grid", f"{0.05 * a:g}:{10.0 * a:g}:500")
    if isinstance(b_raw, str):
        b_values = [float(tok) for tok in b_raw.split(",") if tok.strip()]
    else:
        b_values = [float(v) for v in b_raw]
    x_min, x_max, points = _parse_grid_3(grid)
    payload = {
        "model": model,
        "a": a,
        "A": A,
        "b_over_a_values": b_values,
        "c_over_a": c_over_a,
        "grid": {"x_min": x_min, "x_max": x_max, "points": points},
    }
    data = _post(server, "/potential-curve", payload)
    meta = {"command": "potential-curve", "version": __version__, "model": model,
            "a": a, "A": A, "C_over_A": c_over_a, "grid": grid, "unit": "A/a^2"}
    columns = ["x_over_a"] + [f"V_B_over_A_{_fmt(c['b_over_a'])}" for c in data["curves"]]
    rows = [
        [x] + [c["values"][i] for c in data["curves"]]
        for i, x in enumerate(data["x_over_a"])
    ]
    _emit(meta, columns, rows, out, fmt)
    _write_sidecar(out, "potential-curve", {
        "model": model, "a": a, "A": A, "B_over_A": ",".join(_fmt(b) for b in b_values),
        "C_over_A": c_over_a, "grid": grid, "format": fmt,
    })


@cli.command("spd-scan")
@click.option("--model", type=click.Choice(["I", "II"]), default=None)
@click.option("--a", "a", type=float, default=None)
@click.option("--A", "A", type=float, default=None)
@click.option("--B-over-A", "b_span", default=None, help="range 'start:stop'")
@click.option("--C-over-A", "c_span", default=None, help="range 'start:stop'")
@click.option("--grid", default=None, help="grid 'NBxNC', e.g. 50x50")
@io_options
def spd_scan(model, a, A, b_span, c_span, grid, out, fmt, config_path, server):
    """Classify the spectral phase over a (B/A, C/A) grid."""
    cfg = _load_config(config_path)
    model = _resolve(model, cfg, "model")
    if model is None:
        raise click.UsageError("--model is required (I or II)")
    a = _resolve(a, cfg, "a", 1.0)
    A = _resolve(A, cfg, "A", 1.0)
    b_span = _resolve(b_span, cfg, "B_over_A", "0:8")
    c_span = _resolve(c_span, cfg, "C_over_A", "-2:2")
    grid = _resolve(grid, cfg, "grid", "50x50")
    fmt = _resolve(fmt, cfg, "format", "csv")
    nb, nc = _parse_grid_2d(grid)
    b_lo, b_hi = _parse_span(b_span, "--B-over-A")
    c_lo, c_hi = _parse_span(c_span, "--C-over-A")
    payload = {
        "model": model,
        "a": a,
        "A": A,
        "b_over_a": {"start": b_lo, "stop": b_hi, "num": nb},
        "c_over_a": {"start": c_lo, "stop": c_hi, "num": nc},
    }
    data = _post(server, "/spd-scan", payload)
    meta = {"command": "spd-scan", "version": __version__, "model": model, "a": a,
            "A": A, "B_over_A": b_span, "C_over_A": c_span, "grid": grid}
    columns = ["b_over_a", "c_over_a", "label", "positive_roots"]
    rows = []
    for i, c in enumerate(data["c_over_a"]):
        for j, b in enumerate(data["b_over_a"]):
            rows.append([b, c, data["labels"][i][j], data["positive_root_counts"][i][j]])
    _emit(meta, columns, rows, out, fmt)
    _write_sidecar(out, "spd-scan", {
        "model": model, "a": a, "A": A, "B_over_A": b_span, "C_over_A": c_span,
        "grid": grid, "format": fmt,
    })


@cli.command()
@potential_options
@solver_options
@io_options
def compare(model, a, A, B, C, method, M, lam, h, quad_points, out, fmt, config_path, server):
    """Run both solvers, difference them, and check embedded references.

    Exits 0 when every reference tolerance passes (or no reference matches
    this parameter point), 3 on a reference mismatch.
    """
    cfg = _load_config(config_path)
    potential = _potential_payload(cfg, model, a, A, B, C)
    solver = _solver_payload(cfg, method, M, lam, h, quad_points, default_method="both")
    fmt = _resolve(fmt, cfg, "format", "csv")
    data = _post(server, "/compare", {"potential": potential, "solver": solver})
    meta = {"command": "compare", "version": __version__, **potential,
            "has_reference": data["has_reference"], "all_passed": data["all_passed"]}
    columns = ["k", "e_hmd", "e_lmm", "abs_diff", "rel_diff",
               "ref_hmd", "ref_lmm", "rel_err_hmd", "rel_err_lmm", "passed"]
    rows = []
    for row in data["rows"]:
        rows.append([
            row["k"], row["e_hmd"], row["e_lmm"], row["abs_diff"], row["rel_diff"],
            row.get("ref_hmd", ""), row.get("ref_lmm", ""),
            row.get("rel_err_hmd", ""), row.get("rel_err_lmm", ""),
            "" if row.get("passed") is None else row["passed"],
        ])
    _emit(meta, columns, rows, out, fmt)
    _write_sidecar(out, "compare", {**potential, **solver, "format": fmt})
    if data["has_reference"] and not data["all_passed"]:
        raise FixtureMismatch("at least one reference tolerance failed")


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the solver service with uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    except FixtureMismatch as exc:
        click.echo(f"compare: {exc}", err=True)
        sys.exit(3)
    except (ServiceError, TraboundError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
