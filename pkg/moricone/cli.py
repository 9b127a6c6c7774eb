"""Command line interface.

Every command prints deterministic UTF-8 text. Exit codes:

- 0: success, or the check passed
- 1: the check failed
- 2: the check was only partial because data was missing
- 64: usage error, or the command was aborted
- 65: invalid input data

Attributes:
    EXIT_OK (int): Exit code for success.
    EXIT_FAIL (int): Exit code for a failed check.
    EXIT_PARTIAL (int): Exit code for a partial check.
    EXIT_USAGE (int): Exit code for usage errors.
    EXIT_DATA (int): Exit code for invalid input data.
    DEFAULT_SEED (int): Seed of the random sample points.
"""

import logging
import re
import sys
from pathlib import Path
from typing import Any, Callable, List, NamedTuple, Optional, Sequence, Tuple

import click

from . import __version__, io
from .arith import RationalVector, format_rational, vector
from .cone import Cone, MembershipStatus, contains, dual, dual_under_pairing, extremal_rays, intersect, join
from .errors import MissingData, MoriconeError
from .fan import locate, verify_fan, walls
from .lefschetz import check_birational_twins, check_divisorial_equivalence
from .models import EquivalenceReport, FanReport, Lattice, LatticeMap, TwinPair, VarietyModel, Verdict, \
    check_model, class_of, format_class, ray_label
from .monomial import DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, evaluate, generic_image_dimension, image_dimension, \
    vanishes_to_order
from .plot import DEFAULT_HEIGHT, DEFAULT_WIDTH, plot_mcd
from .transform import convert_to_raw
from .zoo import TWIN_PAIRS, ZOO

__all__ = ["EXIT_OK", "EXIT_FAIL", "EXIT_PARTIAL", "EXIT_USAGE", "EXIT_DATA", "DEFAULT_SEED",
           "MoriconeGroup", "cli", "main"]

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARTIAL = 2
EXIT_USAGE = 64
EXIT_DATA = 65

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)
_CONE_KEYS = ("eff", "nef", "mov", "ne")

_VERDICT_EXIT_CODES = {
    Verdict.BIRATIONAL_TWINS: EXIT_OK,
    Verdict.DIVISORIALLY_EQUIVALENT: EXIT_OK,
    Verdict.PARTIAL: EXIT_PARTIAL,
    Verdict.FAIL: EXIT_FAIL,
}


class MoriconeGroup(click.Group):
    """Group which maps exceptions to the exit codes of moricone.

    Click is always run in non-standalone mode, the result is turned into
    an exit code here. In standalone mode the process exits with it.
    """

    def main(self, args: Sequence[str] = None, prog_name: str = None, complete_var: str = None,
             standalone_mode: bool = True, **extra: Any) -> int:
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = EXIT_DATA
        except (MoriconeError, ValueError, OSError) as e:
            log.debug("command failed", exc_info=e)
            click.echo(f"error: {e}", err=True)
            code = EXIT_DATA
        else:
            code = rv if isinstance(rv, int) else EXIT_OK

        if standalone_mode:
            sys.exit(code)

        return code


class RationalVectorType(click.ParamType):
    """Comma or whitespace separated rationals, e.g. "1, -1/2, 0"."""
    name = "rationals"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> RationalVector:
        if isinstance(value, tuple):
            return value

        parts = [part for part in re.split(r"[\s,]+", value.strip()) if part]
        if not parts:
            self.fail("expected at least one rational", param, ctx)

        try:
            return vector(parts)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a list of rationals", param, ctx)


RATIONALS = RationalVectorType()


def _format_coords(values: Sequence[Any]) -> str:
    return "(" + ", ".join(format_rational(x) for x in values) + ")"


def _format_point(values: Sequence[Any]) -> str:
    return "[" + ":".join(format_rational(x) for x in values) + "]"


def _ray_name(m: Optional[VarietyModel], ray: Sequence[int], lattice: Optional[Lattice]) -> str:
    """Label of a ray, its expression in the basis or its coordinates."""
    if m is not None and lattice is not None:
        return ray_label(m, ray, lattice) or format_class(vector(ray), lattice.basis_labels)

    return _format_coords(ray)


def _cone_summary(m: Optional[VarietyModel], c: Cone, lattice: Optional[Lattice]) -> str:
    parts = [_ray_name(m, ray, lattice) for ray in c.generators]
    parts.extend(f"±{_ray_name(m, line, lattice)}" for line in c.lineality)
    return "⟨" + ", ".join(parts) + "⟩"


def _echo_cone(m: Optional[VarietyModel], c: Cone, lattice: Optional[Lattice]) -> None:
    click.echo(f"dimension: {c.dimension}")
    click.echo("rays:")
    for ray in c.generators:
        click.echo(f"  {_format_coords(ray)}  {_ray_name(m, ray, lattice)}")

    if c.lineality:
        click.echo("lineality:")
        for line in c.lineality:
            click.echo(f"  {_format_coords(line)}")

    click.echo("facets:")
    for facet in c.facets:
        click.echo(f"  {_format_coords(facet)}")

    if c.equations:
        click.echo("equations:")
        for equation in c.equations:
            click.echo(f"  {_format_coords(equation)}")


def _table(rows: List[List[str]]) -> List[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) if i == 0 else cell.rjust(width) for i, (cell, width) in enumerate(zip(row, widths))]
        lines.append("  ".join(cells).rstrip())

    return lines


def _write_output(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")
        log.info(f"wrote {output}")


def _search_dirs(ctx: click.Context) -> Tuple[str, ...]:
    models_dir = ctx.obj.get("models_dir")
    return (models_dir,) if models_dir else ()


def _model(ctx: click.Context, name: str) -> VarietyModel:
    return io.find_model(name, _search_dirs(ctx))


@click.group(cls=MoriconeGroup)
@click.option("-v", "--verbose", count=True, help="Log more, repeat for debug output.")
@click.option("--models-dir", envvar="MORICONE_MODELS_DIR", type=click.Path(file_okay=False),
              help="Directory searched for <name>.json after the built-in models.")
@click.version_option(__version__, prog_name="moricone")
@click.pass_context
def cli(ctx: click.Context, verbose: int, models_dir: Optional[str]) -> None:
    """Exact cones, chamber decompositions and twin checks."""
    logging.basicConfig(level=_LOG_LEVELS[min(verbose, len(_LOG_LEVELS) - 1)], stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["models_dir"] = models_dir


def main(argv: Sequence[str] = None) -> int:
    """Run the command line interface and return the exit code."""
    return cli.main(argv, prog_name="moricone", standalone_mode=False)


# model

@cli.group("model")
def model_group() -> None:
    """Inspect, import and export models."""


@model_group.command("list")
def model_list() -> int:
    """List the built-in models."""
    for name in ZOO:
        click.echo(name)

    return EXIT_OK


@model_group.command("show")
@click.argument("name")
@click.pass_context
def model_show(ctx: click.Context, name: str) -> int:
    """Print the lattices, pairing, classes and cones of a model."""
    m = _model(ctx, name)

    click.echo(f"model {m.name}")
    click.echo(f"divisor basis: {', '.join(m.divisor_lattice.basis_labels)}")
    if m.curve_lattice is not None:
        click.echo(f"curve basis: {', '.join(m.curve_lattice.basis_labels)}")

    if m.pairing is not None:
        click.echo("pairing:")
        rows = [[""] + list(m.curve_lattice.basis_labels)]
        for i, label in enumerate(m.divisor_lattice.basis_labels):
            rows.append([label] + [format_rational(x) for x in m.pairing.matrix.row(i)])

        for line in _table(rows):
            click.echo(f"  {line}")

    if m.named_classes:
        click.echo("classes:")
        for label, x in m.named_classes.items():
            click.echo(f"  {label} = {x}")

    click.echo("cones:")
    for key in _CONE_KEYS:
        c = getattr(m, key)
        if c is not None:
            lattice = m.curve_lattice if key == "ne" else m.divisor_lattice
            click.echo(f"  {key}: {_cone_summary(m, c, lattice)}")

    if m.mcd is not None:
        click.echo(f"mcd: {len(m.mcd)} chambers")
        for chamber in m.mcd.chambers:
            line = f"  {chamber.label}: {_cone_summary(m, chamber.cone, m.divisor_lattice)}"
            if chamber.description:
                line += f"  ({chamber.description})"
            click.echo(line)

    problems = check_model(m)
    if problems:
        click.echo("consistency: " + "; ".join(problems))
        return EXIT_FAIL

    click.echo("consistency: ok")
    return EXIT_OK


@model_group.command("export")
@click.argument("name")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="File to write, defaults to stdout.")
@click.pass_context
def model_export(ctx: click.Context, name: str, output: Optional[str]) -> int:
    """Write a model as JSON."""
    _write_output(io.model_to_json(_model(ctx, name)), output)
    return EXIT_OK


@model_group.command("import")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False),
              help="Where to write the normalised model, defaults to <models-dir>/<name>.json.")
@click.pass_context
def model_import(ctx: click.Context, file: str, output: Optional[str]) -> int:
    """Validate a model file and store its normalised form.

    Without --output and --models-dir the file is only validated.
    """
    m = io.load_model(file)

    if output is None and ctx.obj.get("models_dir"):
        output = str(Path(ctx.obj["models_dir"]) / f"{m.name}.json")

    if output is not None:
        io.export_model(m, output)
        click.echo(f"imported {m.name} to {output}")
    else:
        click.echo(f"validated {m.name}")

    problems = check_model(m)
    for problem in problems:
        click.echo(f"warning: {problem}", err=True)

    return EXIT_FAIL if problems else EXIT_OK


# cone

class _Operand(NamedTuple):
    cone: Cone
    lattice: Optional[Lattice]


def _cone_options(func: Callable) -> Callable:
    func = click.option("--generators", "generator_files", multiple=True, type=click.Path(dir_okay=False),
                        help="JSON file with generators, may be repeated.")(func)
    func = click.option("--cone", "cone_keys", multiple=True, type=click.Choice(_CONE_KEYS),
                        help="Cone of the model, may be repeated.")(func)
    func = click.option("--model", "model_name", help="Model providing cones and labels.")(func)
    return func


def _operands(ctx: click.Context, model_name: Optional[str], cone_keys: Sequence[str],
              generator_files: Sequence[str], count: int) -> Tuple[Optional[VarietyModel], List[_Operand]]:
    if cone_keys and model_name is None:
        raise click.UsageError("--cone needs --model")

    m = _model(ctx, model_name) if model_name is not None else None

    operands = []
    for key in cone_keys:
        lattice = m.curve_lattice if key == "ne" else m.divisor_lattice
        operands.append(_Operand(m.cone(key), lattice))

    for file in generator_files:
        lattice = m.divisor_lattice if m is not None else None
        ambient_dim = lattice.rank if lattice is not None else None
        operands.append(_Operand(io.cone_from_json(Path(file).read_text(encoding="utf-8"), ambient_dim), lattice))

    if len(operands) != count:
        raise click.UsageError(f"expected {count} cone(s) from --cone and --generators, got {len(operands)}")

    return m, operands


@cli.group("cone")
def cone_group() -> None:
    """Queries on single cones."""


@cone_group.command("dual")
@_cone_options
@click.option("--pairing", is_flag=True, help="Dualise across the intersection pairing of the model.")
@click.pass_context
def cone_dual(ctx: click.Context, model_name: Optional[str], cone_keys: Sequence[str],
              generator_files: Sequence[str], pairing: bool) -> int:
    """Print the dual cone.

    With --pairing a cone of curves is dualised to a cone of divisors and
    vice versa.
    """
    m, [(c, lattice)] = _operands(ctx, model_name, cone_keys, generator_files, 1)

    if not pairing:
        # the dual lives in the dual space, the labels of the lattice don't apply
        _echo_cone(m, dual(c), None)
        return EXIT_OK

    if m is None or m.pairing is None:
        raise click.UsageError("--pairing needs a model with an intersection pairing")

    if lattice == m.curve_lattice:
        _echo_cone(m, dual_under_pairing(c, m.pairing.matrix), m.divisor_lattice)
    else:
        _echo_cone(m, dual_under_pairing(c, m.pairing.matrix.transpose()), m.curve_lattice)

    return EXIT_OK


@cone_group.command("rays")
@_cone_options
@click.pass_context
def cone_rays(ctx: click.Context, model_name: Optional[str], cone_keys: Sequence[str],
              generator_files: Sequence[str]) -> int:
    """Print the extremal rays of a pointed cone."""
    m, [(c, lattice)] = _operands(ctx, model_name, cone_keys, generator_files, 1)
    for ray in extremal_rays(c):
        click.echo(f"{_format_coords(ray)}  {_ray_name(m, ray, lattice)}")

    return EXIT_OK


@cone_group.command("contains")
@_cone_options
@click.option("--class", "expression", help="Class expression, e.g. \"3H-2E_p\".")
@click.option("--point", type=RATIONALS, help="Coordinates, e.g. \"3, -2, 0\".")
@click.pass_context
def cone_contains(ctx: click.Context, model_name: Optional[str], cone_keys: Sequence[str],
                  generator_files: Sequence[str], expression: Optional[str], point: Optional[RationalVector]) -> int:
    """Locate a class relative to a cone."""
    m, [(c, lattice)] = _operands(ctx, model_name, cone_keys, generator_files, 1)

    if (expression is None) == (point is None):
        raise click.UsageError("pass exactly one of --class and --point")

    if expression is not None:
        if m is None:
            raise click.UsageError("--class needs --model")
        point = class_of(m, expression, lattice).coords

    membership = contains(c, point)
    if membership.status == MembershipStatus.BOUNDARY:
        tight = ", ".join(_format_coords(c.facets[i]) for i in membership.tight_facets)
        click.echo(f"boundary, on the facets {tight}")
    else:
        click.echo(membership.status.value)

    return EXIT_OK


def _binary_command(name: str, operation: Callable[[Cone, Cone], Cone], doc: str) -> None:
    @cone_group.command(name, help=doc)
    @_cone_options
    @click.pass_context
    def command(ctx: click.Context, model_name: Optional[str], cone_keys: Sequence[str],
                generator_files: Sequence[str]) -> int:
        m, [(a, lattice), (b, other_lattice)] = _operands(ctx, model_name, cone_keys, generator_files, 2)
        _echo_cone(m, operation(a, b), lattice if lattice == other_lattice else None)
        return EXIT_OK


_binary_command("intersect", intersect, "Print the intersection of two cones.")
_binary_command("join", join, "Print the cone generated by two cones.")


# mcd

@cli.group("mcd")
def mcd_group() -> None:
    """Mori chamber decompositions."""


def _mcd_model(ctx: click.Context, name: str) -> VarietyModel:
    m = _model(ctx, name)
    if m.mcd is None:
        raise MissingData(m.name, "mcd")
    return m


def _echo_fan_report(report: FanReport) -> None:
    for key in ("containment", "disjointness", "walls", "coverage"):
        click.echo(f"{key}: {getattr(report, key)}")

    for detail in report.details:
        click.echo(f"  {detail}")

    click.echo(f"verdict: {'pass' if report.passed else 'fail'}")


@mcd_group.command("verify")
@click.argument("name")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.pass_context
def mcd_verify(ctx: click.Context, name: str, as_json: bool) -> int:
    """Check that the chambers decompose the effective cone."""
    m = _mcd_model(ctx, name)
    report = verify_fan(m.mcd)

    if as_json:
        click.echo(io.dumps(convert_to_raw(report)), nl=False)
    else:
        _echo_fan_report(report)

    return EXIT_OK if report.passed else EXIT_FAIL


@mcd_group.command("locate")
@click.argument("name")
@click.option("--class", "expression", required=True, help="Divisor class expression.")
@click.pass_context
def mcd_locate(ctx: click.Context, name: str, expression: str) -> int:
    """Find the chambers containing a divisor class."""
    m = _mcd_model(ctx, name)
    locations = locate(m.mcd, class_of(m, expression, m.divisor_lattice))

    if not locations:
        click.echo("outside the effective cone")
        return EXIT_OK

    for location in locations:
        click.echo(f"{location.membership} of chamber {location.label}")

    if len(locations) == 2 and all(location.membership.status == MembershipStatus.BOUNDARY
                                   for location in locations):
        a, b = (m.mcd.get(location.label).cone for location in locations)
        wall = intersect(a, b)
        if wall.dimension == m.mcd.support.dimension - 1:
            click.echo(f"on the wall {_cone_summary(m, wall, m.divisor_lattice)} "
                       f"between {locations[0].label} and {locations[1].label}")

    return EXIT_OK


@mcd_group.command("walls")
@click.argument("name")
@click.pass_context
def mcd_walls(ctx: click.Context, name: str) -> int:
    """List the walls between chambers."""
    m = _mcd_model(ctx, name)
    for wall in walls(m.mcd):
        click.echo(f"{_cone_summary(m, wall.cone, m.divisor_lattice)}: {wall.labels[0]} | {wall.labels[1]}")

    return EXIT_OK


# twin

@cli.group("twin")
def twin_group() -> None:
    """Compare an embedded pair of models."""


def _echo_equivalence_report(report: EquivalenceReport) -> None:
    click.echo(f"ambient: {report.ambient}")
    click.echo(f"sub: {report.sub}")

    if report.map_is_isomorphism:
        kind = "unimodular isomorphism" if report.map_is_unimodular else "isomorphism over the rationals"
    else:
        kind = "not an isomorphism"
    click.echo(f"pullback: {kind}")

    click.echo(f"eff: {report.eff_match}")
    click.echo(f"mov: {report.mov_match}")
    click.echo(f"nef: {report.nef_match}")
    click.echo(f"mcd: {report.mcd_match}")

    if report.chamber_matches:
        click.echo("chambers:")
        for match in report.chamber_matches:
            click.echo(f"  {match}")

    click.echo(f"verdict: {report.verdict}")


@twin_group.command("check")
@click.argument("ambient_name")
@click.argument("sub_name")
@click.option("--map", "map_file", type=click.Path(dir_okay=False),
              help="JSON file with the pullback matrix, defaults to the identity on shared labels.")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.pass_context
def twin_check(ctx: click.Context, ambient_name: str, sub_name: str, map_file: Optional[str], as_json: bool) -> int:
    """Check whether SUB ⊂ AMBIENT are birational twins.

    Without chamber decompositions only Lefschetz divisorial equivalence is
    checked and the verdict is at best partial.
    """
    registered = TWIN_PAIRS.get((ambient_name, sub_name))
    if map_file is None and registered is not None:
        pair = registered()
    else:
        ambient = _model(ctx, ambient_name)
        sub = _model(ctx, sub_name)
        if map_file is None:
            pullback = LatticeMap.identity_on_labels(ambient.divisor_lattice, sub.divisor_lattice)
        else:
            pullback = io.map_from_json(Path(map_file).read_text(encoding="utf-8"),
                                        ambient.divisor_lattice, sub.divisor_lattice)
        pair = TwinPair(ambient, sub, pullback)

    if pair.ambient.mcd is not None and pair.sub.mcd is not None:
        report = check_birational_twins(pair)
    else:
        log.info(f"{pair}: no chamber decomposition, checking divisorial equivalence only")
        report = check_divisorial_equivalence(pair)
        if report.verdict != Verdict.FAIL:
            report.verdict = Verdict.PARTIAL

    if as_json:
        click.echo(io.dumps(convert_to_raw(report)), nl=False)
    else:
        _echo_equivalence_report(report)

    return _VERDICT_EXIT_CODES[report.verdict]


# mono

@cli.group("mono")
def mono_group() -> None:
    """Monomial linear systems on projective space."""


def _system_option(func: Callable) -> Callable:
    return click.option("--system", "system_name", required=True,
                        help="Built-in system such as box3.alpha, or a JSON file.")(func)


@mono_group.command("eval")
@_system_option
@click.option("--point", required=True, type=RATIONALS, help="Homogeneous coordinates.")
def mono_eval(system_name: str, point: RationalVector) -> int:
    """Print the image of a point."""
    image = evaluate(io.find_system(system_name), point)
    click.echo("base point" if image is None else _format_point(image))
    return EXIT_OK


@mono_group.command("dim")
@_system_option
@click.option("--point", type=RATIONALS, help="Point to compute the local image dimension at.")
@click.option("--samples", default=DEFAULT_SAMPLE_COUNT, show_default=True, type=click.IntRange(min=1),
              help="Number of random points for the generic dimension.")
@click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int, help="Seed of the random points.")
def mono_dim(system_name: str, point: Optional[RationalVector], samples: int, seed: int) -> int:
    """Print the dimension of the image.

    Without --point the dimension of the closure of the image is printed,
    computed at seeded random points.
    """
    s = io.find_system(system_name)
    if point is None:
        click.echo(generic_image_dimension(s, samples, seed))
    else:
        click.echo(image_dimension(s, point))

    return EXIT_OK


@mono_group.command("vanish")
@_system_option
@click.option("--point", required=True, type=RATIONALS, help="Homogeneous coordinates.")
@click.option("--order", required=True, type=click.IntRange(min=0), help="Vanishing order.")
def mono_vanish(system_name: str, point: RationalVector, order: int) -> int:
    """Print whether every member of the system vanishes to the given order at a point."""
    click.echo("true" if vanishes_to_order(io.find_system(system_name), point, order) else "false")
    return EXIT_OK


# plot

@cli.group("plot")
def plot_group() -> None:
    """SVG cross-sections."""


@plot_group.command("mcd")
@click.argument("name")
@click.option("--slice", "slice_functional", type=RATIONALS,
              help="Functional ℓ of the slice ⟨ℓ, x⟩ = 1, defaults to 1 on every effective ray.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="SVG file to write, defaults to stdout.")
@click.option("--width", default=DEFAULT_WIDTH, show_default=True, type=click.IntRange(min=1))
@click.option("--height", default=DEFAULT_HEIGHT, show_default=True, type=click.IntRange(min=1))
@click.pass_context
def plot_mcd_command(ctx: click.Context, name: str, slice_functional: Optional[RationalVector],
                     output: Optional[str], width: int, height: int) -> int:
    """Draw the chamber decomposition of a Picard rank three model."""
    m = _model(ctx, name)
    _write_output(plot_mcd(m, slice_functional, width, height), output)
    return EXIT_OK
