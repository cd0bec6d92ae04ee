"""Command-line interface for dw-motion."""

import contextlib
import functools
import sys
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import click

from dw_motion import __version__
from dw_motion.characters import (
    character_norm_check,
    coverage_check,
    format_csv,
    verify_character_identity,
)
from dw_motion.config import MAX_WORKERS
from dw_motion.data.shipped import fixture_path
from dw_motion.dw import (
    assemble_dimension_reduction,
    count_labels,
    cycle_string,
    dimred_image_orders,
    dw_space,
    mcg_image_report,
    mcg_rep,
    representative_independence,
    verify_axioms,
    verify_intertwiner,
    verify_matrix_identities,
)
from dw_motion.errors import DWMotionError, VerificationError
from dw_motion.groups import (
    FiniteGroup,
    centralizer,
    conjugacy_classes,
    make_group,
    split_top_level,
)
from dw_motion.homs import FluxLabel, Hom, classes, enumerate_homs
from dw_motion.motion import (
    NecklaceLabels,
    TorusLink,
    format_link_spec,
    motion_rep,
    necklace_T_check,
    parse_link_spec,
    pi1,
    psi_bijection,
    thm2_decomposition,
    verify_motion_relations,
)
from dw_motion.presentation import (
    Presentation,
    format_presentation,
    mapping_class_generators,
    parse_endomorphism,
    parse_presentation,
    surface_presentation,
)
from dw_motion.report import make_report, render_report
from dw_motion.simplicial import (
    count_colorings,
    load_boundary_coloring,
    load_cylinder,
    load_triangulation,
    partition_function,
    verify_idempotent_blocks,
    verify_lemma1,
    verify_lemma2_annulus,
)

EXIT_FALSE = 1


class InputError(click.ClickException):
    """Usage or input problem (exit code 2)."""

    exit_code = 2


def handle_errors(func: Callable[..., None]) -> Callable[..., None]:
    """Turn library errors into CLI exit codes."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            func(*args, **kwargs)
        except VerificationError as exc:
            click.echo(f"Verification failed: {exc}", err=True)
            sys.exit(EXIT_FALSE)
        except (DWMotionError, ValueError, FileNotFoundError) as exc:
            raise InputError(str(exc)) from exc

    return wrapper


@contextlib.contextmanager
def progress() -> Iterator[None]:
    """Send verbose library output to stderr; stdout carries the report."""
    if is_verbose():
        with contextlib.redirect_stdout(sys.stderr):
            yield
    else:
        yield


def is_verbose() -> bool:
    obj = click.get_current_context().find_root().obj
    return bool(obj and obj.get("verbose"))


def command_echo() -> list[str]:
    """Subcommand path plus its given parameters in declaration order."""
    ctx = click.get_current_context()
    words = ctx.command_path.split()[1:]
    for param in ctx.command.params:
        value = ctx.params.get(param.name or "")
        if value is None or value is False:
            continue
        if isinstance(param, click.Argument):
            words.append(str(value))
            continue
        flag = max(param.opts, key=len)
        words.append(flag if value is True else f"{flag}={value}")
    return words


def emit(
    result: dict[str, Any], files: list[Path] | None = None, holds: bool = True
) -> None:
    """Print the JSON report and exit 1 when a verification came out false."""
    report = make_report(command_echo(), result, files or [])
    click.echo(render_report(report), nl=False)
    if not holds:
        sys.exit(EXIT_FALSE)


def load_group(spec: str) -> FiniteGroup:
    with progress():
        return make_group(spec, use_cache=True, verbose=is_verbose())


def resolve_input(name: str) -> Path:
    """A path on disk, falling back to a shipped fixture of the same name."""
    path = Path(name)
    if path.exists():
        return path
    return fixture_path(name)


def element(group: FiniteGroup, label: str) -> int:
    return group.element_index(label)


def parse_elements(group: FiniteGroup, text: str, count: int) -> list[int]:
    """Comma-separated element labels (commas inside parentheses are kept)."""
    parts = split_top_level(text)
    if len(parts) != count:
        raise InputError(f"Expected {count} comma-separated elements, got {text!r}")
    return [element(group, part) for part in parts]


def parse_flux(group: FiniteGroup, text: str) -> FluxLabel:
    g, h = parse_elements(group, text, 2)
    return FluxLabel(g, h)


def hom_labels(group: FiniteGroup, hom: Hom) -> list[str]:
    return [group.label(g) for g in hom]


def permutation_strings(perms: dict[str, tuple[int, ...]]) -> dict[str, str]:
    return {name: cycle_string(perm) for name, perm in perms.items()}


@click.group()
@click.option("--verbose", is_flag=True, help="Print progress to stderr")
@click.version_option(__version__, prog_name="dw-motion")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Dijkgraaf-Witten TQFTs over finite groups: spaces, motion groups and checks."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


@cli.command()
@click.argument("spec")
@click.argument(
    "query", required=False, type=click.Choice(["classes", "centralizer"])
)
@click.argument("label", required=False)
@handle_errors
def group(spec: str, query: str | None, label: str | None) -> None:
    """Describe a group, its conjugacy classes or a centralizer."""
    g = load_group(spec)
    result: dict[str, Any] = {"name": g.name, "order": g.order}
    if query is None:
        result["elements"] = [g.label(k) for k in range(g.order)]
    elif query == "classes":
        table = conjugacy_classes(g)
        result["classes"] = [
            {
                "representative": g.label(rep),
                "size": len(members),
                "order": g.element_order(rep),
                "members": [g.label(k) for k in members],
            }
            for rep, members in zip(table.rep, table.classes)
        ]
    else:
        if label is None:
            raise InputError("centralizer needs an element label")
        members = centralizer(g, [element(g, label)])
        result["centralizer"] = {
            "element": label,
            "order": len(members),
            "members": [g.label(k) for k in members],
        }
    emit(result)


@cli.command()
@click.option("--group", "group_spec", required=True, help="Group spec, e.g. S:3")
@click.option("--pres", required=True, help="Presentation file or shipped name")
@click.option("--classes", "with_classes", is_flag=True, help="Also count classes")
@handle_errors
def homs(group_spec: str, pres: str, with_classes: bool) -> None:
    """Count homomorphisms from a presented group into G."""
    g = load_group(group_spec)
    path = resolve_input(pres)
    presentation = parse_presentation(path.read_text())
    with progress():
        found = enumerate_homs(
            presentation, g, max_workers=MAX_WORKERS, verbose=is_verbose()
        )
    result: dict[str, Any] = {"homs": len(found)}
    if with_classes:
        hom_classes = classes(found, g)
        result["classes"] = len(hom_classes)
        result["class_list"] = [
            {"canonical": hom_labels(g, c.canonical), "orbit_size": c.orbit_size}
            for c in hom_classes
        ]
    emit(result, [path])


# DW spaces


@cli.group()
def dw() -> None:
    """DW vector spaces, labels and dimension reduction."""


def _surface_or_file(
    pres: str | None, surface: str | None
) -> tuple[Presentation, list[Path]]:
    if (pres is None) == (surface is None):
        raise InputError("Give exactly one of --pres and --surface")
    if surface is not None:
        return surface_presentation(surface), []
    path = resolve_input(pres or "")
    return parse_presentation(path.read_text()), [path]


@dw.command()
@click.option("--group", "group_spec", required=True)
@click.option("--pres", default=None, help="Presentation file or shipped name")
@click.option("--surface", default=None, help="circle, sphere, torus, t2 or t3")
@handle_errors
def space(group_spec: str, pres: str | None, surface: str | None) -> None:
    """Basis of V_G(Y) and the mapping-class permutations of a standard surface."""
    g = load_group(group_spec)
    presentation, files = _surface_or_file(pres, surface)
    with progress():
        basis_space = dw_space(
            presentation, g, max_workers=MAX_WORKERS, verbose=is_verbose()
        )
    result: dict[str, Any] = {
        "dimension": basis_space.dimension,
        "basis": [hom_labels(g, c.canonical) for c in basis_space.basis],
    }
    if surface is not None:
        generators = mapping_class_generators(surface)
        if generators:
            rep = mcg_rep(basis_space, generators)
            result["mcg"] = permutation_strings(rep.generators)
    emit(result, files)


@dw.command()
@click.option("--group", "group_spec", required=True)
@click.option("--surface", required=True)
@handle_errors
def labels(group_spec: str, surface: str) -> None:
    """Count the label types ([ρ], irrep of the centralizer) of a surface."""
    g = load_group(group_spec)
    with progress():
        count = count_labels(
            surface_presentation(surface),
            g,
            max_workers=MAX_WORKERS,
            verbose=is_verbose(),
        )
    emit(
        {
            "count": count.count,
            "breakdown": [
                {
                    "rho": hom_labels(g, row.rho),
                    "centralizer_order": row.centralizer_order,
                    "irreps": row.irreps,
                }
                for row in count.breakdown
            ],
        }
    )


@dw.command()
@click.option("--group", "group_spec", required=True)
@click.option("--surface", required=True)
@click.option(
    "--check-intertwiner",
    "endo_file",
    default=None,
    type=click.Path(exists=True, path_type=Path),
    help="Endomorphism file to check in addition to the standard generators",
)
@handle_errors
def dimred(group_spec: str, surface: str, endo_file: Path | None) -> None:
    """Verify V_G(Y×S¹) = ⊕_[g] V_{C_G(g)}(Y) and the intertwiner identity."""
    g = load_group(group_spec)
    presentation = surface_presentation(surface)
    with progress():
        assembly = assemble_dimension_reduction(
            presentation, g, max_workers=MAX_WORKERS, verbose=is_verbose()
        )
    generators = mapping_class_generators(surface)
    files = []
    if endo_file is not None:
        generators["file"] = parse_endomorphism(endo_file.read_text(), presentation)
        files.append(endo_file)

    intertwiners = {
        name: verify_intertwiner(presentation, g, f, assembly)
        for name, f in generators.items()
    }
    ambient = {name: f.extended(1) for name, f in generators.items()}
    orders = dimred_image_orders(presentation, g, generators, ambient, assembly)
    independent = representative_independence(presentation, g)
    holds = independent and all(r.holds for r in intertwiners.values())
    emit(
        {
            "holds": holds,
            "target_dimension": assembly.target.dimension,
            "block_sum": sum(len(b.source) for b in assembly.blocks),
            "bijection": True,
            "representative_independent": independent,
            "blocks": [
                {
                    "element": g.label(b.element),
                    "centralizer_order": b.centralizer.group.order,
                    "dimension": len(b.source),
                }
                for b in assembly.blocks
            ],
            "intertwiner": {
                name: {"holds": r.holds, "checked": r.checked}
                for name, r in intertwiners.items()
            },
            "image_orders": orders,
        },
        files,
        holds,
    )


@dw.command()
@click.option("--group", "group_spec", required=True)
@click.option("--tri", required=True, help="Triangulation JSON file or shipped name")
@click.option(
    "--boundary",
    default=None,
    type=click.Path(exists=True, path_type=Path),
    help='Boundary coloring JSON: {"edges": [[a, b, label], ...]}',
)
@click.option(
    "--verify-lemma1", "check_lemma1", is_flag=True, help="Compare #Col with #Hom"
)
@click.option(
    "--verify-idempotent", is_flag=True, help="Check Z(Id_Y) on a cylinder file"
)
@handle_errors
def colorings(
    group_spec: str,
    tri: str,
    boundary: Path | None,
    check_lemma1: bool,
    verify_idempotent: bool,
) -> None:
    """Count flat colorings and evaluate the state sum."""
    g = load_group(group_spec)
    path = resolve_input(tri)
    files = [path]
    triangulation = load_triangulation(path)
    tau = None
    if boundary is not None:
        tau = load_boundary_coloring(boundary, g)
        files.append(boundary)
    with progress():
        count = count_colorings(triangulation, g, tau, verbose=is_verbose())
    value = partition_function(triangulation, g, tau)
    result: dict[str, Any] = {
        "colorings": count,
        "partition_function": {
            "count": value.count,
            "half_exponent": value.half_exponent,
            "group_order": value.group_order,
            "value": float(value),
        },
    }
    holds = True
    if check_lemma1:
        lemma1 = verify_lemma1(triangulation, g)
        result["lemma1"] = lemma1
        holds = holds and lemma1.holds
    if verify_idempotent:
        cylinder = load_cylinder(path)
        with progress():
            blocks = verify_idempotent_blocks(cylinder, g, verbose=is_verbose())
        annulus = verify_lemma2_annulus(cylinder, g)
        result["idempotent"] = blocks
        result["cylinder_counts"] = {
            "holds": annulus.holds,
            "pairs_checked": annulus.pairs_checked,
            "mismatches": len(annulus.mismatches),
        }
        holds = holds and blocks.holds and annulus.holds
    result["holds"] = holds
    emit(result, files, holds)


@dw.command()
@click.option("--group", "group_spec", required=True)
@handle_errors
def axioms(group_spec: str) -> None:
    """Disk and cylinder dimension checks over every label."""
    g = load_group(group_spec)
    with progress():
        report = verify_axioms(g, verbose=is_verbose())
    emit({"axioms": report}, holds=report.holds)


@dw.command()
@click.option("--group", "group_spec", required=True)
@click.option("--surface", required=True, type=click.Choice(["t2", "torus", "t3"]))
@handle_errors
def images(group_spec: str, surface: str) -> None:
    """Order of the mapping-class image on V_G(T^d) against |SL(d, Z_n)|."""
    g = load_group(group_spec)
    report = mcg_image_report(g, surface)
    identities = verify_matrix_identities()
    holds = identities.holds and report.matches is not False
    emit({"image": report, "matrix_identities": identities}, holds=holds)


# Motion groups


@cli.group()
def motion() -> None:
    """Link complements and pure-flux motion-group representations."""


@motion.command()
@click.option(
    "--link", "link_spec", required=True, help="torus:p,q,n, necklace:n or hopf:n"
)
@click.option("--group", "group_spec", required=True)
@click.option("--flux", required=True, help="Label g,h of every link component")
@click.option("--axis-flux", default=None, help="Label of the axis (necklace, hopf)")
@click.option("--emit-permutations", is_flag=True)
@click.option("--verify-relations", is_flag=True)
@handle_errors
def rep(
    link_spec: str,
    group_spec: str,
    flux: str,
    axis_flux: str | None,
    emit_permutations: bool,
    verify_relations: bool,
) -> None:
    """Permutation action of the motion group on a labeled space."""
    link = parse_link_spec(link_spec)
    g = load_group(group_spec)
    label = parse_flux(g, flux)
    axis_label = parse_flux(g, axis_flux) if axis_flux else None
    with progress():
        built = motion_rep(
            link,
            g,
            label,
            axis_label,
            max_workers=MAX_WORKERS,
            verbose=is_verbose(),
        )
    result: dict[str, Any] = {
        "link": format_link_spec(link),
        "family": built.presentation.family,
        "dimension": built.space.dimension,
        "classes": len(built.space.all_classes),
        "generators": list(built.presentation.generator_names),
    }
    if emit_permutations:
        result["permutations"] = permutation_strings(built.rep.generators)
    holds = True
    if verify_relations:
        relations = verify_motion_relations(built.rep, built.presentation)
        result["relations"] = relations
        holds = relations.holds
    emit(result, holds=holds)


def _torus_link(link_spec: str) -> TorusLink:
    link = parse_link_spec(link_spec)
    if not isinstance(link, TorusLink):
        raise InputError(f"{link_spec!r} is not a torus link")
    return link


@motion.command()
@click.option("--link", "link_spec", required=True, help="torus:p,q,n")
@click.option("--group", "group_spec", required=True)
@click.option("--flux", required=True)
@click.option("--block", default=None, help="Elements x,y naming the block classes")
@handle_errors
def psi(link_spec: str, group_spec: str, flux: str, block: str | None) -> None:
    """Check the block bijections onto punctured-cylinder spaces."""
    link = _torus_link(link_spec)
    g = load_group(group_spec)
    label = parse_flux(g, flux)
    key = None
    if block is not None:
        class_of = conjugacy_classes(g).class_of
        x, y = parse_elements(g, block, 2)
        key = (class_of[x], class_of[y])
    reports = psi_bijection(link, g, label, key)
    reps = conjugacy_classes(g).rep
    rows = [
        {
            "block": [g.label(reps[r.block[0]]), g.label(reps[r.block[1]])],
            "holds": r.holds,
            "size": r.size,
            "target_size": r.target_size,
            "injective": r.injective,
            "surjective": r.surjective,
            "natural": r.natural,
            "base_independent": r.base_independent,
        }
        for r in reports
    ]
    holds = all(r.holds and r.base_independent for r in reports)
    emit({"holds": holds, "blocks": rows}, holds=holds)


@motion.command()
@click.option("--link", "link_spec", required=True, help="torus:p,q,n")
@click.option("--group", "group_spec", required=True)
@click.option("--flux", required=True)
@handle_errors
def thm2(link_spec: str, group_spec: str, flux: str) -> None:
    """Compare the link-complement dimension with the sum over blocks."""
    link = _torus_link(link_spec)
    g = load_group(group_spec)
    label = parse_flux(g, flux)
    with progress():
        report = thm2_decomposition(
            link, g, label, max_workers=MAX_WORKERS, verbose=is_verbose()
        )
    emit({"decomposition": report}, holds=report.holds)


@motion.command()
@click.option("--n", "rings", required=True, type=click.IntRange(min=1))
@click.option("--group", "group_spec", required=True)
@click.option("--labels", "label_text", required=True, help="Elements g,g_c,h_c")
@handle_errors
def necklace(rings: int, group_spec: str, label_text: str) -> None:
    """Relate the braid action on a punctured disk to the necklace action."""
    g = load_group(group_spec)
    ring, axis, axis_h = parse_elements(g, label_text, 3)
    with progress():
        report = necklace_T_check(
            g, rings, NecklaceLabels(ring, axis, axis_h), verbose=is_verbose()
        )
    emit({"necklace": report}, holds=report.holds)


@motion.command(name="pi1")
@click.option("--link", "link_spec", required=True)
@handle_errors
def pi1_command(link_spec: str) -> None:
    """Print the link-complement presentation in the .pres format."""
    link_group = pi1(parse_link_spec(link_spec))
    click.echo(format_presentation(link_group.presentation), nl=False)


# Characters


@cli.group()
def chars() -> None:
    """Permutation characters of SL(2,p) and SL(3,p)."""


@chars.command()
@click.option("--d", "d", required=True, type=click.Choice(["2", "3"]))
@click.option("--p", "p", required=True, type=int)
@click.option("--csv", "as_csv", is_flag=True, help="Emit the per-class table as CSV")
@click.option("--coverage", is_flag=True, help="Check the classes cover the group")
@click.option("--norm", is_flag=True, help="Burnside norm cross-check")
@handle_errors
def verify(d: str, p: int, as_csv: bool, coverage: bool, norm: bool) -> None:
    """Compare the permutation character with its irreducible decomposition."""
    size = int(d)
    with progress():
        report = verify_character_identity(size, p, verbose=is_verbose())
    holds = report.holds
    extra: dict[str, Any] = {}
    if coverage:
        covered = coverage_check(size, p)
        extra["coverage"] = covered
        holds = holds and covered.holds
    if norm:
        normed = character_norm_check(size, p)
        extra["norm"] = normed
        holds = holds and normed.holds

    if as_csv:
        click.echo(format_csv(report), nl=False)
        if not holds:
            sys.exit(EXIT_FALSE)
        return
    emit({"characters": report, **extra}, holds=holds)
