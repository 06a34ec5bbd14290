"""Command line interface: every operation as a subcommand with JSON I/O.

Exit codes: 0 on success, 1 when a requested verification fails, 2 on
usage errors (unknown subcommand, malformed JSON, exceeded cap).
"""

import json

import click

from . import algebra, config, verify
from .characters import r_coefficient, reduced_kronecker, theorem_formula_check
from .diagrams import ColoredDiagram, compose, count_bell
from .groupoid import psi_hom_check
from .modules_rep import (
    cartan_matrix,
    gram_det,
    gram_matrix,
    semisimplicity_certificate,
)
from .ribbon import rt_rows, sw_diagram
from .rs import rs_forward


def emit(obj):
    click.echo(json.dumps(obj, default=_default, sort_keys=True))


def _default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    raise TypeError("not JSON serializable: %r" % (obj,))


def parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError("malformed JSON for %s: %s" % (what, exc))


def parse_diagram(text):
    data = parse_json(text, "diagram")
    try:
        return ColoredDiagram.from_json(data)
    except Exception as exc:
        raise click.UsageError("bad diagram: %s" % exc)


def parse_multipartition(text, what="multipartition"):
    data = parse_json(text, what)
    try:
        return tuple(tuple(int(p) for p in lam) for lam in data)
    except TypeError as exc:
        raise click.UsageError("bad %s: %s" % (what, exc))


def parse_partition(text, what="partition"):
    data = parse_json(text, what)
    try:
        return tuple(int(p) for p in data)
    except TypeError as exc:
        raise click.UsageError("bad %s: %s" % (what, exc))


@click.group()
def main():
    """Exact computations for colored partition diagram categories."""


@main.command("compose")
@click.option("--d1", required=True, help="first diagram as JSON")
@click.option("--d2", required=True, help="second diagram as JSON")
def cmd_compose(d1, d2):
    """Compose two colored diagrams; reports the diagram and the scalar
    exponents of the removed middle components."""
    a, b = parse_diagram(d1), parse_diagram(d2)
    try:
        prod, exps = compose(a, b)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    emit({"diagram": prod.to_json(), "exponents": list(exps)})


@main.command("count")
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
def cmd_count(k, r):
    """Colored Bell number: colored set partitions of k points."""
    if k < 0 or r < 1:
        raise click.UsageError("need k >= 0 and r >= 1")
    emit({"B": str(count_bell(k, r))})


@main.command("present-check")
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.pass_context
def cmd_present_check(ctx, k, r):
    """Check every instance of the defining monoid relations."""
    rep = algebra.check_presentation(k, r)
    emit(rep)
    if not rep["ok"]:
        ctx.exit(1)


@main.command("green")
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--relation", type=click.Choice(["L", "R", "J"]), required=True)
@click.option("--members", is_flag=True, help="include class members")
def cmd_green(k, r, relation, members):
    """Equivalence classes of a Green relation, via principal ideals."""
    cfg = config.from_env()
    try:
        classes = algebra.green_classes(k, r, relation, cap=cfg.monoid_cap)
    except algebra.CapExceeded as exc:
        raise click.UsageError("cap exceeded: %s" % exc)
    classes = sorted(classes, key=lambda c: (-len(c), repr(c)))
    out = {"k": k, "r": r, "relation": relation,
           "classes": len(classes), "sizes": [len(c) for c in classes]}
    if members:
        out["members"] = [[d.to_json() for d in c] for c in classes]
    emit(out)


@main.command("rs")
@click.option("--diagram", required=True, help="diagram as JSON")
def cmd_rs(diagram):
    """Row-insertion image ((P,S),(Q,T)) of a colored diagram."""
    d = parse_diagram(diagram)
    (P, S), (Q, T) = rs_forward(d)
    emit({"P": P, "Q": Q, "S": S, "T": T})


@main.command("sw")
@click.option("--diagram", required=True, help="diagram as JSON")
def cmd_sw(diagram):
    """Ribbon-insertion image of a colored diagram, as row grids."""
    d = parse_diagram(diagram)
    (P, S), (Q, T) = sw_diagram(d)
    emit({"P": rt_rows(P), "Q": rt_rows(Q), "S": rt_rows(S), "T": rt_rows(T)})


@main.command("psi-check")
@click.option("--samples", type=int, default=None)
@click.option("--k-max", type=int, default=None)
@click.option("--r-max", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.pass_context
def cmd_psi_check(ctx, samples, k_max, r_max, seed):
    """Multiplicativity of the groupoid expansion on random pairs."""
    cfg = config.from_env(psi_samples=samples, psi_k_max=k_max,
                          psi_r_max=r_max, seed=seed)
    rep = psi_hom_check(cfg.psi_samples, cfg.psi_k_max, cfg.psi_r_max,
                        seed=cfg.seed)
    emit(rep)
    if not rep["ok"]:
        ctx.exit(1)


@main.command("gram")
@click.option("--r", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--shape", required=True,
              help="multipartition as JSON, e.g. [[1],[]]")
def cmd_gram(r, k, shape):
    """Symbolic Gram matrix and determinant of a cell module."""
    lam_bar = parse_multipartition(shape)
    try:
        M = gram_matrix(r, k, lam_bar)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    emit({
        "shape": lam_bar,
        "dim": len(M),
        "matrix": [[repr(e) for e in row] for row in M],
        "det": repr(gram_det(r, k, lam_bar)),
    })


@main.command("semisimple")
@click.option("--r", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--x", required=True,
              help="parameter point, comma separated, e.g. 2,1")
def cmd_semisimple(r, k, x):
    """Evaluate all cell Gram determinants at a parameter point."""
    try:
        point = tuple(int(v) for v in x.split(","))
    except ValueError as exc:
        raise click.UsageError("bad parameter point: %s" % exc)
    try:
        cert = semisimplicity_certificate(r, k, point)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    emit({
        "r": r, "k": k, "x": list(point),
        "semisimple": cert["semisimple"],
        "dimension_identity": cert["dimension_identity"],
        "sum_dim_sq": cert["sum_dim_sq"],
        "bell": cert["bell"],
        "dets": {json.dumps(lam): {"det": repr(det), "value": str(val)}
                 for lam, (det, val) in cert["dets"].items()},
    })


@main.command("cartan")
@click.option("--r", required=True, type=int)
@click.option("--maxweight", required=True, type=int)
def cmd_cartan(r, maxweight):
    """Cartan matrix entries for multipartitions up to a weight."""
    labels, B = cartan_matrix(r, maxweight)
    emit({
        "labels": labels,
        "matrix": [[B[(lam, mu)] for mu in labels] for lam in labels],
    })


@main.command("reduced-kronecker")
@click.option("--lam", required=True, help="partition as JSON, e.g. [2,1]")
@click.option("--mu", required=True)
@click.option("--nu", required=True)
def cmd_reduced_kronecker(lam, mu, nu):
    """Stable Kronecker coefficient of three partitions."""
    value = reduced_kronecker(parse_partition(lam), parse_partition(mu),
                              parse_partition(nu))
    emit({"value": value})


@main.command("r-coeff")
@click.option("--r", required=True, type=int)
@click.option("--lam-bar", required=True, help="multipartition as JSON")
@click.option("--mu-bar", required=True)
@click.option("--nu-bar", required=True)
def cmd_r_coeff(r, lam_bar, mu_bar, nu_bar):
    """Structure constant in the simple-module basis, via the LR/K sum."""
    value = r_coefficient(r, parse_multipartition(lam_bar),
                          parse_multipartition(mu_bar),
                          parse_multipartition(nu_bar))
    emit({"value": value})


@main.command("thm-check")
@click.option("--r", required=True, type=int)
@click.option("--example", type=click.Choice(["paper"]), default=None,
              help="use the bundled r=3 worked example")
@click.option("--lam-bar", default=None)
@click.option("--mu-bar", default=None)
@click.option("--nu-bar", default=None)
@click.pass_context
def cmd_thm_check(ctx, r, example, lam_bar, mu_bar, nu_bar):
    """Check the product of reduced Kronecker coefficients against the
    LR/K structure constant."""
    if example:
        if r != 3:
            raise click.UsageError("the bundled example needs --r 3")
        triple = verify.FORMULA_EXAMPLE_R3
    else:
        if not (lam_bar and mu_bar and nu_bar):
            raise click.UsageError(
                "need --lam-bar/--mu-bar/--nu-bar or --example")
        triple = (parse_multipartition(lam_bar),
                  parse_multipartition(mu_bar),
                  parse_multipartition(nu_bar))
    rep = theorem_formula_check(r, *triple)
    emit({"lhs": rep["lhs"], "rhs": rep["rhs"], "equal": rep["ok"]})
    if not rep["ok"]:
        ctx.exit(1)


@main.command("verify")
@click.option("--suite", default="all",
              help="'all' or comma separated criterion names")
@click.option("--cap", default="default",
              help="'default' or comma separated name=value overrides")
@click.option("--seed", type=int, default=None)
@click.pass_context
def cmd_verify(ctx, suite, cap, seed):
    """Run the acceptance suite; reports per-criterion pass/fail."""
    overrides = {}
    if cap != "default":
        for item in cap.split(","):
            try:
                name, value = item.split("=")
                overrides[name.strip()] = int(value)
            except ValueError:
                raise click.UsageError("bad cap override %r" % item)
    if seed is not None:
        overrides["seed"] = seed
    try:
        cfg = config.from_env(**overrides)
    except (TypeError, ValueError) as exc:
        raise click.UsageError("bad configuration: %s" % exc)
    only = None if suite == "all" else {s.strip() for s in suite.split(",")}
    try:
        report = verify.run_all(cfg, only=only)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    except algebra.CapExceeded as exc:
        raise click.UsageError("cap exceeded: %s" % exc)
    emit(report)
    if not report["ok"]:
        ctx.exit(1)


if __name__ == "__main__":
    main()
