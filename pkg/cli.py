#!/usr/bin/env python3
"""CLI interface for the higher Weil–Petersson volume toolkit."""

import functools
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click
import msgspec
import pandas as pd
from dotenv import load_dotenv

from shared.configuration import RunConfig
from shared.errors import MultiIndexParseError, WpVolumeError
from shared.logger import configure_logger, get_logger

# Load environment variables
load_dotenv()

logger = get_logger(__name__)

FORMATS = click.Choice(["text", "json", "csv"])


def _handle_errors(command: Callable[..., Any]) -> Callable[..., Any]:
    """Map library errors onto the exit-code convention (2 usage, 1 failure)."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except MultiIndexParseError as e:
            raise click.BadParameter(str(e), param_hint="--m") from e
        except WpVolumeError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(1)

    return wrapper


def _config(ctx: click.Context, **overrides: Any) -> RunConfig:
    config = RunConfig.from_env(command=ctx.command.name, **overrides)
    if config.factorial_cache_bound != 512:
        from exact_core import set_factorial_cache_bound

        set_factorial_cache_bound(config.factorial_cache_bound)
    return config


def _enc_hook(obj: Any) -> Any:
    # numpy scalars coming out of DataFrame.to_dict
    if hasattr(obj, "item"):
        return obj.item()
    raise NotImplementedError(f"Cannot encode {type(obj).__name__}")


def _emit(
    config: RunConfig,
    text: Optional[str] = None,
    payload: Any = None,
    frame: Optional[pd.DataFrame] = None,
    raw: Optional[bytes] = None,
) -> None:
    """Render the result in the configured format to stdout or --out."""
    fmt = config.output_format
    if fmt == "json" and (payload is not None or raw is not None):
        body = raw if raw is not None else msgspec.json.encode(payload, enc_hook=_enc_hook)
        data = body.decode() + "\n"
    elif fmt == "csv" and frame is not None:
        data = frame.to_csv(index=False, lineterminator="\n")
    elif text is not None:
        data = text.rstrip("\n") + "\n"
    else:
        raise click.UsageError(f"--format {fmt} is not available for {config.command}")
    if config.output_path:
        Path(config.output_path).write_text(data, encoding="utf-8")
        logger.info(f"Wrote {config.command} output to {config.output_path}")
    else:
        click.echo(data, nl=False)


def _load_cache(config: RunConfig) -> None:
    if config.cache_dir:
        from volumes import VOLUME_CACHE

        Path(config.cache_dir).mkdir(parents=True, exist_ok=True)
        VOLUME_CACHE.load(config.cache_dir)


def _dump_cache(config: RunConfig) -> None:
    if config.cache_dir:
        from volumes import VOLUME_CACHE

        VOLUME_CACHE.dump(config.cache_dir)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool):
    """Exact higher Weil–Petersson volumes and the identities around them."""
    if verbose:
        configure_logger(log_level="DEBUG")


@cli.command()
@click.option("--m", "m_text", help="Multi-index text, e.g. 2,1 for 2δ1+δ2.")
@click.option("--method", type=click.Choice(["recursive", "closed", "inversion", "all"]), default="recursive", show_default=True)
@click.option("--genus", type=int, default=0, show_default=True)
@click.option("--table", is_flag=True, help="Print every V(m) with |m| <= --order instead.")
@click.option("--order", type=int, default=None)
@click.option("--format", "output_format", type=FORMATS, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def volume(ctx, m_text, method, genus, table, order, output_format, output_path):
    """Compute V_g(m) by one method or all of them."""
    from cohft_algebra import CorrelatorProvider
    from exact_core import MultiIndex
    from volumes import VolumeMethod, VolumeQuery, compute_volume, volume_table

    config = _config(ctx, order=order, output_format=output_format, output_path=output_path)
    _load_cache(config)
    if table:
        frame = volume_table(config.order)
        _emit(config, text=frame.to_string(index=False), payload=frame.to_dict(orient="records"), frame=frame)
        _dump_cache(config)
        return
    if m_text is None:
        raise click.UsageError("Either --m or --table is required")

    m = MultiIndex.parse(m_text)
    provider = None
    if genus:
        if not config.correlator_table_path:
            raise click.UsageError("Genus >= 1 needs a correlator table (WPVOL_CORRELATOR_TABLE)")
        provider = CorrelatorProvider.from_jsonl(config.correlator_table_path, genus=genus)
    report = compute_volume(VolumeQuery(m=m, genus=genus, method=VolumeMethod(method)), provider)
    _dump_cache(config)

    lines = [f"V_{genus}({report.m}) [{name}] = {value}" for name, value in report.values.items()]
    if report.integral is not None:
        lines.append(f"integral = {report.integral}")
    frame = pd.DataFrame([{"m": report.m, "method": k, "value": v} for k, v in report.values.items()])
    _emit(config, text="\n".join(lines), payload=report.model_dump(), frame=frame)
    if not report.agreed:
        click.echo(f"Methods disagree on V({report.m})", err=True)
        sys.exit(1)


@cli.command()
@click.option("--order", type=int, default=None)
@click.option("--kind", type=click.Choice(["F", "inverse"]), default="F", show_default=True,
              help="F(x; s) or the series x(y; s) whose inverse integrates F.")
@click.option("--format", "output_format", type=FORMATS, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def series(ctx, order, kind, output_format, output_path):
    """Print a generating series truncated at --order."""
    from series_engine import encode_series
    from volumes import generating_F, inverse_x_series

    config = _config(ctx, order=order, output_format=output_format, output_path=output_path)
    _load_cache(config)
    value = generating_F(config.order) if kind == "F" else inverse_x_series(config.order)
    _dump_cache(config)
    frame = pd.DataFrame(
        [{"d": d, "e": " ".join(map(str, e)), "value": str(c)} for (d, e), c in value.sorted_terms()],
        columns=["d", "e", "value"],
    )
    _emit(config, text=value.to_text(), raw=encode_series(value), frame=frame)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Number of marked points, n >= 3.")
@click.option("--method", type=click.Choice(["recursive", "closed"]), default="recursive", show_default=True)
@click.option("--format", "output_format", type=FORMATS, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def zograf(ctx, n, method, output_format, output_path):
    """Print Zograf's number v_n."""
    from exact_core import format_rational
    from volumes import zograf_closed, zograf_v

    if n < 3:
        raise click.BadParameter(f"n must be at least 3, got {n}", param_hint="--n")
    config = _config(ctx, output_format=output_format, output_path=output_path)
    value = format_rational(zograf_v(n) if method == "recursive" else zograf_closed(n))
    frame = pd.DataFrame([{"n": n, "value": value}])
    _emit(config, text=value, payload={"n": n, "value": value}, frame=frame)


def _as_potential(coords, order: Optional[int] = None):
    from cohft_tensor import PotentialCoeffs, UCoeffs, b_to_c, s_to_b
    from shared.errors import OrderMismatchError

    if isinstance(coords, UCoeffs):
        coords = b_to_c(coords)
    elif not isinstance(coords, PotentialCoeffs):
        coords = b_to_c(s_to_b(coords))
    if order is None or order == coords.order:
        return coords
    if order > coords.order:
        raise OrderMismatchError(f"Theory of order {coords.order} cannot be read at order {order}")
    return PotentialCoeffs(order, {n: coords[n] for n in range(3, order + 1)})


def _coords_frame(record) -> pd.DataFrame:
    origin = {"C": 3, "B": 0, "s": 1}[record.coords]
    return pd.DataFrame(
        [{"index": origin + i, "value": v} for i, v in enumerate(record.values)],
        columns=["index", "value"],
    )


@cli.command()
@click.option("--left", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--right", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--order", type=int, default=None, help="Defaults to the smaller order of the two inputs.")
@click.option("--format", "output_format", type=FORMATS, default="json", show_default=True)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def tensor(ctx, left, right, order, output_format, output_path):
    """Tensor two one-dimensional CohFTs given as coordinate JSON files."""
    from cohft_tensor import encode_coords, read_coords, tensor_product
    from cohft_tensor.coords import to_record

    a, b = _as_potential(read_coords(left)), _as_potential(read_coords(right))
    order = order or min(a.order, b.order)
    config = _config(ctx, order=order, output_format=output_format, output_path=output_path)
    product = tensor_product(_as_potential(a, config.order), _as_potential(b, config.order))
    record = to_record(product)
    text = "\n".join(f"C{3 + i} = {v}" for i, v in enumerate(record.values))
    _emit(config, text=text, raw=encode_coords(product), frame=_coords_frame(record))


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "target", type=click.Choice(["C", "B", "s"]), required=True)
@click.option("--format", "output_format", type=FORMATS, default="json", show_default=True)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def coords(ctx, source, target, output_format, output_path):
    """Convert a CohFT between potential (C), U-series (B) and canonical (s) coordinates."""
    from cohft_tensor import b_to_s, c_to_b, encode_coords, read_coords
    from cohft_tensor.coords import to_record

    config = _config(ctx, output_format=output_format, output_path=output_path)
    potential = _as_potential(read_coords(source))
    if target == "C":
        converted = potential
    elif target == "B":
        converted = c_to_b(potential)
    else:
        converted = b_to_s(c_to_b(potential))
    record = to_record(converted)
    origin = {"C": 3, "B": 0, "s": 1}[target]
    text = "\n".join(f"{target}{origin + i} = {v}" for i, v in enumerate(record.values))
    _emit(config, text=text, raw=encode_coords(converted), frame=_coords_frame(record))


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--poly", is_flag=True, help="Print P_n(q) instead of the table up to n.")
@click.option("--format", "output_format", type=FORMATS, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def betti(ctx, n, poly, output_format, output_path):
    """Poincaré polynomials and Euler characteristics of M̄_{0,n+1}."""
    from moduli_topology import betti_table, euler_characteristic, poincare

    if n < 1:
        raise click.BadParameter(f"n must be at least 1, got {n}", param_hint="--n")
    config = _config(ctx, output_format=output_format, output_path=output_path)
    if poly:
        P = poincare(n)
        payload = {"n": n, "coefficients": list(P.coefficients), "chi": euler_characteristic(n)}
        _emit(config, text=P.to_text(), payload=payload, frame=betti_table(n).tail(1))
        return
    frame = betti_table(n)
    _emit(config, text=frame.to_string(index=False), payload=frame.to_dict(orient="records"), frame=frame)


@cli.command()
@click.option("--kind", type=click.Choice(["wp", "euler"]), default="wp", show_default=True)
@click.option("--n", "n_max", type=int, default=30, show_default=True, help="Largest n in the table.")
@click.option("--start", type=int, default=3, show_default=True)
@click.option("--step", type=int, default=1, show_default=True)
@click.option("--format", "output_format", type=FORMATS, default="csv", show_default=True)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def asym(ctx, kind, n_max, start, step, output_format, output_path):
    """Ratios of exact sequences to their asymptotic predictions."""
    from asymptotics import ratio_rows

    config = _config(ctx, output_format=output_format, output_path=output_path)
    try:
        rows = ratio_rows(kind, range(start, n_max + 1, step))
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--n") from e
    frame = pd.DataFrame([row.model_dump() for row in rows])
    text = "\n".join(f"n={row.n}: {row.ratio:.10f}" for row in rows)
    _emit(config, text=text, payload=[row.model_dump() for row in rows], frame=frame)


@cli.command()
@click.option("--suite", type=click.Choice(["pde", "inversion", "laplace", "omega", "appendix", "asym", "all"]), default="all", show_default=True)
@click.option("--order", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--format", "output_format", type=FORMATS, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@_handle_errors
def check(ctx, suite, order, seed, output_format, output_path):
    """Run a self-check suite; exit 1 with the first counterexample on failure."""
    from checks import run_suite

    config = _config(ctx, order=order, seed=seed, output_format=output_format, output_path=output_path)
    _load_cache(config)
    report = run_suite(suite, config.order, config.seed)
    _dump_cache(config)

    lines = []
    for result in report.results:
        status = "ok" if result.passed else ("warn" if result.soft else "FAIL")
        line = f"[{status}] {result.name}: {result.identity}"
        if result.counterexample:
            line += f" -- {result.counterexample}"
        lines.append(line)
    lines.append(f"{report.suite}: {'passed' if report.passed else 'failed'}")
    frame = pd.DataFrame([r.model_dump() for r in report.results])
    _emit(config, text="\n".join(lines), payload=report.model_dump(), frame=frame)
    if not report.passed:
        first = report.failures()[0]
        click.echo(f"{first.name} failed: {first.counterexample}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    cli()
