"""Command-line front end.

Thin client over the service layer in :mod:`fuchskit.service`: every
subcommand resolves its operator, calls the same function the HTTP endpoint
uses, and prints the resulting report as text or JSON.

Exit codes: 0 success, 1 domain error (non-Fuchsian input, non-rational
exponents, unknown catalog key, ...), 2 usage or expression-syntax error.
"""

from __future__ import annotations

import json
import sys

import click

from . import service
from .catalog import catalog_keys
from .errors import DivisionByZeroFunction, ExpressionSyntaxError, FuchskitError
from .operators import LinearODE
from .parsing import parse_rational_function


def _fail(exc: FuchskitError) -> "click.ClickException":
    err = click.ClickException(f"{type(exc).__name__}: {exc}")
    err.exit_code = 2 if isinstance(exc, (ExpressionSyntaxError, DivisionByZeroFunction)) else 1
    return err


def _resolve(catalog: str | None, coefficients: tuple[str, ...], leading: str | None) -> LinearODE:
    if (catalog is None) == (not coefficients):
        raise click.UsageError("give exactly one of --catalog or coefficient arguments")
    if catalog is not None:
        from .catalog import catalog_entry

        return catalog_entry(catalog).operator
    coeffs = [parse_rational_function(s) for s in coefficients]
    lead = parse_rational_function(leading) if leading else None
    return LinearODE.from_coefficients(coeffs, leading=lead)


def _emit(model, fmt: str, text_renderer) -> None:
    if fmt == "json":
        click.echo(json.dumps(model.model_dump(by_alias=True), indent=2))
    else:
        text_renderer(model)


_operator_options = [
    click.option("--catalog", "catalog_key", metavar="KEY", help="Use a built-in catalog equation."),
    click.option("--leading", metavar="EXPR", help="Leading coefficient (default 1)."),
    click.argument("coefficients", nargs=-1, metavar="[A0 A1 ...]"),
]

_format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True
)


def _with_operator(fn):
    for opt in reversed(_operator_options):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Exact analysis of Fuchsian linear ODEs over Q(x)."""


def _render_analysis(rep) -> None:
    click.echo(f"order {rep.operator.order}, fuchsian: {rep.fuchsian}")
    for entry in rep.places:
        place = entry.place.min_poly if entry.place.type == "finite" else "infinity"
        flag = " (apparent)" if entry.apparent else ""
        click.echo(
            f"  {place}: E = {{{', '.join(entry.exponents)}}}, "
            f"delta = {entry.delta}, e = {entry.ram_index}{flag}"
        )
    click.echo(f"delta(L) = {rep.delta}")
    if rep.fuchs_relation:
        fr = rep.fuchs_relation
        click.echo(f"fuchs relation: {fr.lhs} = {fr.rhs} ({'ok' if fr.ok else 'VIOLATED'})")
    if rep.genus:
        _render_genus(rep.genus)


def _render_genus(g) -> None:
    click.echo(
        f"hurwitz sum = {g.hurwitz_sum}, M = {g.group_order}, "
        f"base genus = {g.base_genus}, genus = {g.genus}"
    )


def _render_operator(op) -> None:
    for i, c in enumerate(op.coefficients):
        click.echo(f"a{i} = {c}")


def _render_basis(b) -> None:
    click.echo(f"dimension {b.dimension}")
    for f in b.elements:
        click.echo(f"  {f}")


def _render_ruled(r) -> None:
    click.echo(
        f"{r.group}: P(L (+) L') with deg L = {r.deg_l}, deg L' = {r.deg_lprime}, "
        f"twist N = {r.twist} (symmetric power degree {r.degree})"
    )
    click.echo(f"L generators: {', '.join(r.generators_l)}")
    click.echo(f"L' generators: {', '.join(r.generators_lprime)}")


@main.command()
@_with_operator
@click.option("--group-order", type=int, help="Projective monodromy order M for a genus block.")
@click.option("--base-genus", type=int, default=0, show_default=True)
@_format_option
def analyze(catalog_key, leading, coefficients, group_order, base_genus, fmt):
    """Full report: singular places, exponents, delta, Fuchs relation."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.analyze(L, group_order, base_genus)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_analysis)


@main.command()
@_with_operator
@click.option("--group-order", type=int, required=True, help="Projective monodromy order M.")
@click.option("--base-genus", type=int, default=0, show_default=True)
@_format_option
def genus(catalog_key, leading, coefficients, group_order, base_genus, fmt):
    """Genus of the solution curve from the Hurwitz formula."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.genus(L, group_order, base_genus)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_genus)


@main.command()
@_with_operator
@click.option("--map", "map_expr", required=True, metavar="EXPR", help="Rational map f(x).")
@_format_option
def pullback(catalog_key, leading, coefficients, map_expr, fmt):
    """Pull the operator back through a rational map."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.pullback_operator(L, map_expr)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_operator)


@main.command()
@_with_operator
@_format_option
def normalize(catalog_key, leading, coefficients, fmt):
    """Projective normal form (sub-leading coefficient removed)."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.normalize_operator(L)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_operator)


@main.command()
@_with_operator
@click.option("--other", "other_coeffs", multiple=True, metavar="EXPR",
              help="Coefficient (a0 first; repeat) of the second operator.")
@click.option("--pullback-of", "other_key", metavar="KEY",
              help="Catalog key of the second operator.")
@click.option("--map", "map_expr", metavar="EXPR",
              help="Pull the second operator back through this map first.")
@_format_option
def equiv(catalog_key, leading, coefficients, other_coeffs, other_key, map_expr, fmt):
    """Decide projective equivalence (exit 0 either way; see the report)."""
    try:
        L1 = _resolve(catalog_key, coefficients, leading)
        L2 = _resolve(other_key, tuple(other_coeffs), None)
        rep = service.equivalent(L1, L2, map_expr)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, lambda r: click.echo("equivalent" if r.equivalent else "not equivalent"))


@main.command()
@_with_operator
@click.option("-d", "--degree", type=int, required=True)
@_format_option
def sympow(catalog_key, leading, coefficients, degree, fmt):
    """d-th symmetric power of an order-2 operator."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.sympow_operator(L, degree)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_operator)


@main.command()
@_with_operator
@click.option("-d", "--degree", type=int, help="Numerator degree bound (default: automatic).")
@_format_option
def ratsol(catalog_key, leading, coefficients, degree, fmt):
    """Basis of the rational solution space."""
    try:
        L = _resolve(catalog_key, coefficients, leading)
        rep = service.ratsol_basis(L, degree)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_basis)


@main.command()
@click.option("--group", required=True, metavar="G", help="A4, S4, A5 or D<2n>.")
@click.option("-d", "--degree", type=int, help="Symmetric power degree (default per group).")
@_format_option
def ruled(group, degree, fmt):
    """Classifying ruled surface P(L (+) L') of a standard equation."""
    try:
        rep = service.ruled(group, degree)
    except FuchskitError as exc:
        raise _fail(exc)
    _emit(rep, fmt, _render_ruled)


@main.command("catalog")
@click.argument("key", required=False)
@_format_option
def catalog_cmd(key, fmt):
    """List catalog keys, or show one entry."""
    if key is None:
        for k in catalog_keys():
            click.echo(k)
        return
    try:
        rep = service.catalog_model(key)
    except FuchskitError as exc:
        raise _fail(exc)

    def render(entry):
        click.echo(f"{entry.key}: {entry.description}")
        _render_operator(entry.operator)
        if entry.projective_group_order:
            click.echo(f"projective group order M = {entry.projective_group_order}")
        if entry.pullback_of:
            click.echo(f"pullback of {entry.pullback_of} via {entry.pullback_map}")

    _emit(rep, fmt, render)


if __name__ == "__main__":
    sys.exit(main())
