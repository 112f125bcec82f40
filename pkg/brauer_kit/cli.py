"""
# Kommandozeile `brauer-kit`

Alle Unterbefehle schreiben JSON auf stdout (mit `--pretty` eine lesbare
Textform); Protokollmeldungen gehen über loguru nach stderr.

Exit-Codes:
- 0: Erfolg
- 1: mindestens eine geprüfte Identität ist verletzt
- 2: Bedienfehler (ungültige Eingabe, Valenzen, Budget überschritten)

Diagramme werden als Pfad zu einer JSON-Datei oder direkt als JSON-Text
übergeben, Wörter als Pfad zu einer Textdatei im Format von `parse_word`.
"""

import json
import sys
from math import factorial
from pathlib import Path

import click
import loguru
import pandas as pd

from brauer_kit.category.coeff import DiagramSum, compose_sums, specialize
from brauer_kit.category.diagram import (
    BrauerDiagram,
    compose,
    enumerate_diagrams,
    render,
    rotate,
    sharp,
    star,
    tensor,
)
from brauer_kit.category.oriented import (
    OrientedDiagram,
    compose_oriented,
    enumerate_oriented,
    transport_iso,
    walled_brauer_basis,
)
from brauer_kit.category.rewriting import rewrite_trace
from brauer_kit.category.words import (
    GeneratorWord,
    equivalent,
    evaluate,
    from_diagram,
    mirror_word,
    parse_word,
    random_word,
    star_word,
)
from brauer_kit.columns import (
    NAME_CLAIM,
    NAME_DIMENSION,
    NAME_DIRECTION,
    NAME_ORACLE,
    NAME_PASS,
    NAME_POSITION,
    NAME_RANK,
    NAME_RELATION,
)
from brauer_kit.functor.functor import adjoint, form_group, functor_brauer, functor_diagram, functor_oriented
from brauer_kit.functor.oracle import hom_dimension
from brauer_kit.functor.space import GroupSpec, parse_group
from brauer_kit.invariants.enhanced import build_delta, check_relations, cycle_relation_readings, forced_parameters
from brauer_kit.invariants.fundamental import kernel_basis, verify_fft, verify_sft, verify_tensor_sft
from brauer_kit.invariants.ideals import algebra_ideal_span, tensor_ideal_span
from brauer_kit.invariants.kernels import E_p, E_p_formula, Phi
from brauer_kit.invariants.young import young_idempotent
from brauer_kit.suites import run_suite, suite_names
from brauer_kit.utils import configure

logger = loguru.logger

EXIT_FAILED = 1


class BrauerGroup(click.Group):
    """Wandelt fachliche Fehler in Bedienfehler (Exit-Code 2) um."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (ValueError, KeyError, TypeError) as error:
            logger.debug(f"Abbruch wegen {type(error).__name__}: {error}")
            raise click.UsageError(str(error), ctx=ctx) from error


def _load_json(value: str):
    text = value.strip()
    if not text.startswith(("{", "[")):
        path = Path(value)
        if not path.is_file():
            raise ValueError(f"Datei {value!r} existiert nicht und ist kein JSON-Text")
        text = path.read_text(encoding="utf-8")
    return json.loads(text)


def _load_diagram(value: str) -> BrauerDiagram:
    return BrauerDiagram.from_json(_load_json(value))


def _load_sum(value: str) -> DiagramSum:
    """Diagrammsumme (mit `terms`) oder einzelnes Diagramm (mit `pairs`)."""
    data = _load_json(value)
    if "terms" in data:
        return DiagramSum.from_json(data)
    return DiagramSum.of(BrauerDiagram.from_json(data))


def _load_word(path: str) -> GeneratorWord:
    return parse_word(Path(path).read_text(encoding="utf-8"))


def _emit(ctx: click.Context, data, text: str | None = None) -> None:
    if ctx.obj.get("pretty") and text is not None:
        click.echo(text)
    elif ctx.obj.get("pretty"):
        click.echo(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        click.echo(json.dumps(data, ensure_ascii=False))


def _finish(ctx: click.Context, passed: bool) -> None:
    if not passed:
        logger.warning("Mindestens eine Prüfung ist fehlgeschlagen")
        ctx.exit(EXIT_FAILED)


def _words(group: GroupSpec, k: int, ell: int, source: str | None, target: str | None) -> tuple[str, str]:
    if source is not None and target is not None:
        if not group.oriented:
            raise ValueError(f"Vorzeichenfolgen sind nur für GL erlaubt. Aktuell: {group}")
        return source, target
    return "+" * k, "+" * ell


diagram_option = click.option("--in", "source", required=True, help="Diagramm als JSON-Datei oder JSON-Text.")
group_option = click.option("--group", "group_text", required=True, help="Gruppe, z.B. o3, so2, sp2, osp1|2, gl2|1.")


@click.group(cls=BrauerGroup)
@click.option("--max-entries", type=int, default=None, help="Budget für Matrixeinträge (Standard 20000).")
@click.option("--threads", type=int, default=None, help="Anzahl Threads für unabhängige Auswertungen.")
@click.option("--pretty", is_flag=True, help="Lesbare Ausgabe statt kompaktem JSON.")
@click.option("--verbose", is_flag=True, help="Debug-Meldungen auf stderr.")
@click.pass_context
def main(ctx: click.Context, max_entries: int | None, threads: int | None, pretty: bool, verbose: bool):
    """Brauer-, orientierte und erweiterte Brauer-Kategorien mit exakter Arithmetik."""
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")
    configure(max_entries=max_entries, threads=threads)
    ctx.ensure_object(dict)
    ctx.obj["pretty"] = pretty


# Diagramme


@main.command("compose")
@click.option("--a", "first", required=True, help="Oberes Diagramm.")
@click.option("--b", "second", required=True, help="Unteres Diagramm.")
@click.pass_context
def compose_command(ctx, first: str, second: str):
    """a ∘ b mit Anzahl der entfernten Schleifen."""
    scaled = compose(_load_diagram(first), _load_diagram(second))
    _emit(ctx, scaled.to_json(), f"{render(scaled.diagram)}\nδ^{scaled.loops}")


@main.command("tensor")
@click.option("--a", "first", required=True)
@click.option("--b", "second", required=True)
@click.pass_context
def tensor_command(ctx, first: str, second: str):
    d = tensor(_load_diagram(first), _load_diagram(second))
    _emit(ctx, d.to_json(), render(d))


def _unary(name: str, func, doc: str):
    @main.command(name, help=doc)
    @diagram_option
    @click.pass_context
    def command(ctx, source: str):
        d = func(_load_diagram(source))
        _emit(ctx, d.to_json(), render(d))

    return command


_unary("star", star, "Spiegelung oben/unten.")
_unary("sharp", sharp, "Spiegelung links/rechts.")
_unary("rotate", rotate, "Drehung um 180 Grad (Antiinvolution *).")


@main.command("render")
@diagram_option
def render_command(source: str):
    """ASCII-Bild eines Diagramms."""
    click.echo(render(_load_diagram(source)))


@main.command("enumerate")
@click.option("--k", type=int, required=True)
@click.option("--l", "ell", type=int, required=True)
@click.option("--count", is_flag=True, help="Nur die Anzahl ausgeben.")
@click.pass_context
def enumerate_command(ctx, k: int, ell: int, count: bool):
    """Alle Brauer-Diagramme der Valenz (k, l), sortiert."""
    diagrams = enumerate_diagrams(k, ell)
    if count:
        _emit(ctx, {"k": k, "ell": ell, "count": len(diagrams)})
        return
    _emit(ctx, [d.to_json() for d in diagrams], "\n\n".join(render(d) for d in diagrams))


# Wörter


@main.command("eval-word")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def eval_word_command(ctx, source: str):
    """Wertet ein Wort zu einem skalierten Diagramm aus."""
    scaled = evaluate(_load_word(source))
    _emit(ctx, scaled.to_json(), f"{render(scaled.diagram)}\nδ^{scaled.loops}")


WORD_STYLES = {"scan": from_diagram, "mirror": mirror_word, "star": star_word}


@main.command("from-diagram")
@diagram_option
@click.option("--style", type=click.Choice(list(WORD_STYLES) + ["random"]), default="scan", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def from_diagram_command(ctx, source: str, style: str, seed: int):
    """Zerlegt ein Diagramm in ein Wort."""
    d = _load_diagram(source)
    word = random_word(d, seed=seed) if style == "random" else WORD_STYLES[style](d)
    _emit(ctx, word.to_json(), word.to_text().rstrip("\n"))


@main.command("equiv")
@click.option("--a", "first", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--b", "second", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def equiv_command(ctx, first: str, second: str):
    """Bezeichnen zwei Wörter dasselbe skalierte Diagramm?"""
    _emit(ctx, {"equivalent": equivalent(_load_word(first), _load_word(second))})


@main.command("trace")
@click.option("--a", "first", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--b", "second", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def trace_command(ctx, first: str, second: str):
    """Explizite Umschreibefolge von a nach b."""
    steps = rewrite_trace(_load_word(first), _load_word(second))
    table = pd.DataFrame(
        [(s.position, s.relation, s.direction) for s in steps], columns=[NAME_POSITION, NAME_RELATION, NAME_DIRECTION]
    )
    text = table.to_string(index=False) if len(table) else "(keine Schritte)"
    _emit(ctx, {"steps": [s.to_json() for s in steps], "length": len(steps)}, text)


# Orientierte Diagramme


@main.command("oriented-compose")
@click.option("--a", "first", required=True)
@click.option("--b", "second", required=True)
@click.pass_context
def oriented_compose_command(ctx, first: str, second: str):
    result, loops = compose_oriented(
        OrientedDiagram.from_json(_load_json(first)), OrientedDiagram.from_json(_load_json(second))
    )
    _emit(ctx, {"diagram": result.to_json(), "loops": loops}, f"{result}\nδ^{loops}")


@main.command("oriented-enumerate")
@click.option("--source", "eta", default="", help="Vorzeichenfolge unten, z.B. '+-'.")
@click.option("--target", "zeta", default="", help="Vorzeichenfolge oben.")
@click.pass_context
def oriented_enumerate_command(ctx, eta: str, zeta: str):
    diagrams = enumerate_oriented(eta, zeta)
    _emit(ctx, [d.to_json() for d in diagrams], "\n".join(str(d) for d in diagrams))


@main.command("walled")
@click.option("--r", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.pass_context
def walled_command(ctx, r: int, s: int):
    """Dimension der Walled-Brauer-Algebra B_{r,s}."""
    basis = walled_brauer_basis(r, s)
    _emit(ctx, {"r": r, "s": s, NAME_DIMENSION: len(basis)})


@main.command("transport")
@click.option("--eta", required=True)
@click.pass_context
def transport_command(ctx, eta: str):
    """Prüft den Transport OB_η^η -> OB_{η̄}^{η̄}."""
    iso = transport_iso(eta)
    ok = iso.check()
    _emit(ctx, {"eta": eta, "target": iso.target, NAME_PASS: ok})
    _finish(ctx, ok)


# Funktor


@main.command("functor")
@group_option
@click.option("--in", "source_json", required=True, help="Diagramm oder Diagrammsumme als JSON.")
@click.option("--source", default=None, help="Vorzeichenfolge unten (nur GL).")
@click.option("--target", default=None, help="Vorzeichenfolge oben (nur GL).")
@click.pass_context
def functor_command(ctx, group_text: str, source_json: str, source: str | None, target: str | None):
    """Matrix F(x) für eine Gruppe."""
    group = parse_group(group_text)
    x = _load_sum(source_json)
    if group.oriented:
        source, target = _words(group, x.valency.k, x.valency.ell, source, target)
        op = functor_oriented(x, group, source, target)
    else:
        op = functor_brauer(x, group)
    _emit(ctx, op.to_json())


@main.command("adjoint")
@group_option
@diagram_option
@click.pass_context
def adjoint_command(ctx, group_text: str, source: str):
    """Form-adjungierte Matrix F(d)*; stimmt mit F(d*) überein."""
    group = parse_group(group_text)
    d = _load_diagram(source)
    form = form_group(group.space)
    op = adjoint(functor_diagram(d, form))
    _emit(ctx, {"adjoint": op.to_json(), "equals_star": op == functor_diagram(star(d), form)})


@main.command("supertrace")
@group_option
@click.option("--in", "source_json", required=True)
@click.pass_context
def supertrace_command(ctx, group_text: str, source_json: str):
    group = parse_group(group_text)
    op = functor_brauer(_load_sum(source_json), group)
    _emit(ctx, {"supertrace": str(op.supertrace())})


@main.command("oracle")
@group_option
@click.option("--k", type=int, default=0)
@click.option("--l", "ell", type=int, default=0)
@click.option("--source", default=None)
@click.option("--target", default=None)
@click.pass_context
def oracle_command(ctx, group_text: str, k: int, ell: int, source: str | None, target: str | None):
    """dim Hom_G aus dem unabhängigen Gleichungslöser."""
    group = parse_group(group_text)
    source, target = _words(group, k, ell, source, target)
    dimension = hom_dimension(group, source, target)
    _emit(ctx, {"group": group.label, "source": source, "target": target, NAME_DIMENSION: dimension})


# Erweiterte Kategorie


@main.command("enhanced")
@click.option("--m", type=int, required=True)
@click.pass_context
def enhanced_command(ctx, m: int):
    """Relationen von Δ_m unter F für SO(m)."""
    results = check_relations(m)
    delta = build_delta(m)
    rows = [{NAME_CLAIM: name, NAME_PASS: ok} for name, ok in results.items()]
    text = pd.DataFrame(rows).to_string(index=False)
    _emit(ctx, {"delta": delta.to_json(), "relations": rows}, text)
    _finish(ctx, all(results.values()))


@main.command("cycle-readings")
@click.option("--m", type=int, required=True)
@click.pass_context
def cycle_readings_command(ctx, m: int):
    """Welche Lesarten von Δ⊗I⊗Δ = c∘(Δ⊗Δ⊗I) gelten?"""
    readings = {name: lhs == rhs for name, (lhs, rhs) in cycle_relation_readings(m).items()}
    _emit(ctx, {"m": m, "readings": readings})


@main.command("forced")
@click.option("--m", type=int, required=True)
@click.pass_context
def forced_command(ctx, m: int):
    """Gemeinsame rationale Nullstellen der Bedingungen an δ."""
    result = forced_parameters(m)
    _emit(ctx, result.to_json())
    _finish(ctx, result.unique)


# Hauptsätze


@main.command("fft")
@group_option
@click.option("--k", type=int, default=0)
@click.option("--l", "ell", type=int, default=0)
@click.option("--source", default=None)
@click.option("--target", default=None)
@click.pass_context
def fft_command(ctx, group_text: str, k: int, ell: int, source: str | None, target: str | None):
    """Rang von F gegen das Orakel."""
    group = parse_group(group_text)
    source, target = _words(group, k, ell, source, target)
    result = verify_fft(group, len(source), len(target), source, target)
    text = f"{group}: {NAME_RANK} {result.rank}, {NAME_ORACLE} {result.oracle}"
    _emit(ctx, result.to_json(), text)
    _finish(ctx, result.passed)


@main.command("sft")
@group_option
@click.option("--r", type=int, default=None, help="Algebraideal in B_r^r.")
@click.option("--k", type=int, default=None, help="Tensorideal in B_k^l (mit --l).")
@click.option("--l", "ell", type=int, default=None)
@click.pass_context
def sft_command(ctx, group_text: str, r: int | None, k: int | None, ell: int | None):
    """Kern von F gegen das Ideal des Erzeugers."""
    group = parse_group(group_text)
    if r is not None:
        result = verify_sft(group, r)
    elif k is not None and ell is not None:
        result = verify_tensor_sft(group, k, ell)
    else:
        raise ValueError("Entweder --r oder --k und --l angeben")
    _emit(ctx, result.to_json())
    _finish(ctx, result.passed)


@main.command("kernel")
@group_option
@click.option("--k", type=int, required=True)
@click.option("--l", "ell", type=int, required=True)
@click.option("--source", default=None)
@click.option("--target", default=None)
@click.pass_context
def kernel_command(ctx, group_text: str, k: int, ell: int, source: str | None, target: str | None):
    """Basis von Ker F als Diagrammsummen."""
    group = parse_group(group_text)
    source, target = _words(group, k, ell, source, target)
    basis = kernel_basis(group, len(source), len(target), source, target)
    _emit(ctx, {NAME_DIMENSION: len(basis), "basis": [x.to_json() for x in basis]})


# Kernelemente


@main.command("phi")
@click.option("--n", type=int, required=True)
@click.pass_context
def phi_command(ctx, n: int):
    """Φ(n) und Φ² = (n+1)!Φ bei δ = -2n."""
    phi = Phi(n)
    square = compose_sums(phi, phi, -2 * n)
    ok = square == specialize(phi.scale(factorial(n + 1)), -2 * n)
    _emit(ctx, {"n": n, "terms": len(phi), "phi": phi.to_json(), "square_ok": ok})
    _finish(ctx, ok)


@main.command("ep")
@click.option("--m", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.pass_context
def ep_command(ctx, m: int, p: int):
    """E_p(m) diagrammatisch und nach der geschlossenen Formel."""
    direct = E_p(m, p)
    ok = direct == E_p_formula(m, p)
    _emit(ctx, {"m": m, "p": p, "element": direct.to_json(), "formula_ok": ok})
    _finish(ctx, ok)


@main.command("young")
@click.option("--m", type=int, required=True)
@click.option("--l", "ell", type=int, required=True)
@click.pass_context
def young_command(ctx, m: int, ell: int):
    """e(m, l), κ, Hakenlängenprodukt und |R|!|C|!."""
    _emit(ctx, young_idempotent(m, ell).to_json())


@main.command("ideal")
@click.option("--in", "source_json", required=True, help="Erzeuger als Diagrammsumme.")
@click.option("--delta", type=str, required=True, help="Spezialisierter Parameter δ₀, z.B. -2 oder 1/2.")
@click.option("--r", type=int, default=None, help="Algebraideal in B_r^r.")
@click.option("--k", type=int, default=None, help="Tensorideal in B_k^l (mit --l).")
@click.option("--l", "ell", type=int, default=None)
@click.option("--permutations-only", is_flag=True, help="Nur in QSym_r abschließen.")
@click.pass_context
def ideal_command(ctx, source_json: str, delta: str, r: int | None, k: int | None, ell: int | None, permutations_only):
    """Dimension und Basis eines Idealstücks."""
    generator = _load_sum(source_json)
    if r is not None:
        span = algebra_ideal_span([generator], r, delta, permutations_only)
    elif k is not None and ell is not None:
        span = tensor_ideal_span(generator, k, ell, delta)
    else:
        raise ValueError("Entweder --r oder --k und --l angeben")
    _emit(ctx, span.to_json())


# Suiten


@main.command("suite")
@click.option("--name", required=True, type=click.Choice(suite_names()))
@click.pass_context
def suite_command(ctx, name: str):
    """Führt eine Prüfsuite aus."""
    suite = run_suite(name)
    _emit(ctx, {"suite": name, NAME_PASS: suite.passed, "records": suite.records()}, suite.diagram())
    _finish(ctx, suite.passed)


@main.command("list-suites")
@click.pass_context
def list_suites_command(ctx):
    _emit(ctx, suite_names(), "\n".join(suite_names()))


if __name__ == "__main__":
    main()
