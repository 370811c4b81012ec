from __future__ import annotations

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click

from services.braid_core import BraidWord, exponent_sum, identity, permutation_of
from services.combing import comb, equal_via_combing
from services.coset_split import FixedBraid, is_in_coset, split, split_via_combing
from services.grammar import format_letters, format_word, parse_lines, parse_word
from services.mixed_braid import (
    MixedContext,
    MixedWord,
    expand_mixed,
    is_member,
    is_pure_member,
    moving_permutation,
    rewrite_irredundant,
)
from services.presentations import count_summary, verify_all
from services.reports import format_report_text, render_report_pdf
from services.word_problem import burau_matrix, equal, left_normal_form, normal_form_to_word

# ---- App config (pulled from braid_config.py) --------------------------
try:
    import braid_config as config
except Exception as e:
    raise RuntimeError("braid_config.py missing or invalid") from e

logger = logging.getLogger("mixedbraid.cli")

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(level)


def _options() -> Dict[str, Any]:
    return click.get_current_context().find_root().obj or {}


def _dump(record: Any) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(record: Dict[str, Any], text: str) -> None:
    click.echo(_dump(record) if _options().get("json") else text)


def _fail(message: str, code: int = EXIT_USAGE) -> None:
    if _options().get("json"):
        click.echo(_dump({"ok": False, "msg": message}))
    else:
        click.echo(f"error: {message}", err=True)
    click.get_current_context().exit(code)


def _guarded(func: Callable[..., Any]) -> Callable[..., Any]:
    """Turn domain errors into exit code 2 with a message."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except click.exceptions.Exit:
            raise
        except (ValueError, KeyError, RuntimeError) as exc:
            logger.debug("command failed", exc_info=True)
            _fail(str(exc))

    return wrapper


def _context(m: Optional[int], n: Optional[int]) -> MixedContext:
    if m is None or n is None:
        raise click.UsageError("both --m and --n are required")
    return MixedContext(m, n)


def _word(text: str, strands: Optional[int], m: Optional[int], n: Optional[int]) -> BraidWord:
    """Artin word with --strands, or a mixed word with --m/--n expanded to Artin."""
    if strands is not None and (m is not None or n is not None):
        raise click.UsageError("give either --strands or --m/--n, not both")
    if strands is not None:
        return parse_word(text, strands=strands)
    word = parse_word(text, ctx=_context(m, n))
    assert isinstance(word, MixedWord)
    return expand_mixed(word)


def _context_word(text: str, ctx: MixedContext, mixed: bool) -> BraidWord:
    if mixed:
        word = parse_word(text, ctx=ctx)
        assert isinstance(word, MixedWord)
        return expand_mixed(word)
    return parse_word(text, strands=ctx.strands)


def _words_from_file(path: Path, strands: int) -> List[BraidWord]:
    return list(parse_lines(path.read_text(encoding="utf-8"), strands=strands))


def _fmt(word: Any) -> str:
    text = format_word(word, unicode=_options().get("unicode", False))
    return text or "e"


strands_option = click.option("--strands", type=click.IntRange(min=1), help="Artin word on this many strands.")
m_option = click.option("--m", "m", type=click.IntRange(min=1), help="Number of fixed strands.")
n_option = click.option("--n", "n", type=click.IntRange(min=1), help="Number of moving strands.")
mixed_option = click.option("--mixed", is_flag=True, help="Read words in the mixed alphabet (a<i>, a[i,j], s<k>).")


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
@click.group()
@click.option("--json/--text", "as_json", default=None, help="Structured JSON output.")
@click.option("--unicode/--ascii", "unicode", default=None, help="Print sigma glyphs and superscript inverses.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(ctx: click.Context, as_json: Optional[bool], unicode: Optional[bool], verbose: bool) -> None:
    """Mixed braid groups B_{m,n}: normal forms, combing, presentations and cosets."""
    _configure_logging(verbose)
    ctx.obj = {
        "json": config.JSON_OUTPUT if as_json is None else as_json,
        "unicode": config.UNICODE_OUTPUT if unicode is None else unicode,
    }


@cli.command("nf")
@click.argument("word")
@strands_option
@m_option
@n_option
@click.option("--burau", is_flag=True, help="Also print the Burau matrix at t = -1.")
@_guarded
def nf_command(word: str, strands: Optional[int], m: Optional[int], n: Optional[int], burau: bool) -> None:
    """Garside left normal form of WORD."""
    braid = _word(word, strands, m, n)
    nf = left_normal_form(braid)
    record = nf.to_record()
    lines = [
        f"delta_power: {nf.delta_power}",
        "factors: " + (" ".join(str(f.one_line()) for f in nf.factors) or "none"),
        f"word: {_fmt(normal_form_to_word(nf))}",
    ]
    if burau:
        matrix = [[int(x) for x in row] for row in burau_matrix(braid)]
        record["burau"] = matrix
        lines.append("burau:")
        lines.extend("  " + " ".join(f"{x:>4}" for x in row) for row in matrix)
    _emit(record, "\n".join(lines))


@cli.command("eq")
@click.argument("first")
@click.argument("second")
@strands_option
@m_option
@n_option
@click.option("--via-combing", is_flag=True, help="Compare pure mixed braids through their combed forms.")
@_guarded
def eq_command(
    first: str,
    second: str,
    strands: Optional[int],
    m: Optional[int],
    n: Optional[int],
    via_combing: bool,
) -> None:
    """Decide whether FIRST and SECOND are the same braid."""
    w1 = _word(first, strands, m, n)
    w2 = _word(second, strands, m, n)
    if via_combing:
        result = equal_via_combing(w1, w2, _context(m, n))
    else:
        result = equal(w1, w2)
    _emit({"equal": result}, "equal" if result else "not equal")
    click.get_current_context().exit(EXIT_OK if result else EXIT_FALSE)


@cli.command("perm")
@click.argument("word")
@strands_option
@m_option
@n_option
@_guarded
def perm_command(word: str, strands: Optional[int], m: Optional[int], n: Optional[int]) -> None:
    """Underlying permutation and exponent sum of WORD."""
    braid = _word(word, strands, m, n)
    perm = permutation_of(braid)
    record = {
        "one_line": perm.one_line(),
        "cycles": [list(c) for c in perm.cycles()],
        "exponent_sum": exponent_sum(braid),
    }
    text = "\n".join(
        [
            f"one-line: {' '.join(str(x) for x in perm.one_line())}",
            f"cycles: {perm.cycle_notation()}",
            f"exponent sum: {record['exponent_sum']}",
        ]
    )
    _emit(record, text)


@cli.command("member")
@click.argument("word")
@m_option
@n_option
@mixed_option
@click.option("--pure", is_flag=True, help="Test membership in P_{m,n} instead.")
@_guarded
def member_command(word: str, m: Optional[int], n: Optional[int], mixed: bool, pure: bool) -> None:
    """Is WORD (on m+n strands) in B_{m,n}?"""
    ctx = _context(m, n)
    braid = _context_word(word, ctx, mixed)
    result = is_pure_member(braid, ctx) if pure else is_member(braid, ctx)
    record: Dict[str, Any] = {"member": result, "group": ("P" if pure else "B") + f"_{{{ctx.m},{ctx.n}}}"}
    text = f"{'member of' if result else 'not in'} {record['group']}"
    if result:
        moving = moving_permutation(braid, ctx)
        record["moving_permutation"] = moving.one_line()
        text += f"\nmoving strands permuted as {moving.cycle_notation()}"
    _emit(record, text)
    click.get_current_context().exit(EXIT_OK if result else EXIT_FALSE)


@cli.command("comb")
@click.argument("word")
@m_option
@n_option
@mixed_option
@_guarded
def comb_command(word: str, m: Optional[int], n: Optional[int], mixed: bool) -> None:
    """Combed form V_{m+1} ... V_{m+n} of a pure mixed braid."""
    ctx = _context(m, n)
    form = comb(_context_word(word, ctx, mixed), ctx)
    unicode = _options().get("unicode", False)
    lines = [f"V_{f.strand} = {format_letters(f.letters, unicode) or 'e'}" for f in form.factors]
    _emit(form.to_record(), "\n".join(lines))


@cli.command("expand")
@click.argument("word")
@m_option
@n_option
@click.option("--irredundant", is_flag=True, help="Also rewrite into loops and crossings only.")
@_guarded
def expand_command(word: str, m: Optional[int], n: Optional[int], irredundant: bool) -> None:
    """Expand a mixed word into an Artin word on m+n strands."""
    ctx = _context(m, n)
    mixed = parse_word(word, ctx=ctx)
    assert isinstance(mixed, MixedWord)
    braid = expand_mixed(mixed)
    record: Dict[str, Any] = {"strands": braid.strands, "word": braid.to_ints()}
    lines = [_fmt(braid)]
    if irredundant:
        rewritten = rewrite_irredundant(mixed)
        record["irredundant"] = format_word(rewritten)
        lines.append(f"irredundant: {_fmt(rewritten)}")
    _emit(record, "\n".join(lines))


@cli.command("split")
@click.argument("braid_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("fixed_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@m_option
@n_option
@click.option("--via-combing", is_flag=True, help="Split through the combing construction.")
@_guarded
def split_command(
    braid_file: Path,
    fixed_file: Path,
    m: Optional[int],
    n: Optional[int],
    via_combing: bool,
) -> None:
    """Write each braid A of BRAID_FILE as alpha . B for the fixed braid B of FIXED_FILE."""
    ctx = _context(m, n)
    braids = _words_from_file(braid_file, ctx.strands)
    fixed_words = _words_from_file(fixed_file, ctx.m)
    if not braids:
        raise ValueError(f"{braid_file} holds no braid words")
    if len(fixed_words) > 1 and len(fixed_words) != len(braids):
        raise ValueError("give one fixed braid, or one per braid word")
    if not fixed_words:
        fixed_words = [identity(ctx.m)]

    rows: List[Dict[str, Any]] = []
    lines: List[str] = []
    all_in = True
    for index, braid in enumerate(braids):
        fixed = FixedBraid(fixed_words[index if len(fixed_words) > 1 else 0])
        if not is_in_coset(braid, fixed, ctx):
            all_in = False
            rows.append({"in_coset": False})
            lines.append(f"{index + 1}: not in the coset of {_fmt(fixed.braid)}")
            continue
        alpha = split_via_combing(braid, fixed, ctx).alpha if via_combing else split(braid, fixed, ctx)
        rows.append({"in_coset": True, "alpha": alpha.to_ints()})
        lines.append(f"{index + 1}: alpha = {_fmt(alpha)}")
    _emit({"m": ctx.m, "n": ctx.n, "splits": rows}, "\n".join(lines))
    click.get_current_context().exit(EXIT_OK if all_in else EXIT_FALSE)


@cli.command("verify")
@m_option
@n_option
@click.option("--families", default="all", show_default=True, help="Comma-separated family ids or groups.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Parallel instance checks.")
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False, path_type=Path), help="Also write a PDF report.")
@_guarded
def verify_command(
    m: Optional[int],
    n: Optional[int],
    families: str,
    workers: Optional[int],
    pdf_path: Optional[Path],
) -> None:
    """Check every relation of the catalogued presentations in B_{m,n}."""
    ctx = _context(m, n)
    report = verify_all(
        ctx,
        families=[f for f in families.split(",") if f.strip()],
        workers=workers or config.VERIFY_WORKERS,
    )
    if pdf_path is not None:
        render_report_pdf(report, pdf_path)
        logger.info("PDF report written to %s", pdf_path)
    _emit(report.to_record(), format_report_text(report))
    click.get_current_context().exit(EXIT_OK if report.passed else EXIT_FALSE)


@cli.command("count")
@m_option
@n_option
@_guarded
def count_command(m: Optional[int], n: Optional[int]) -> None:
    """Generator and relation counts of P_{m,n}."""
    ctx = _context(m, n)
    summary = count_summary(ctx.m, ctx.n)
    text = "\n".join(
        [
            f"P_{{{ctx.m},{ctx.n}}}: {summary['generators']} generators, {summary['relations']} relations",
            f"enumerated: {summary['generators_enumerated']} generators, "
            f"{summary['relations_enumerated']} relation tuples",
            f"P_{ctx.strands}: {summary['ambient_generators']} generators, "
            f"{summary['ambient_relations']} relations",
        ]
    )
    _emit(summary, text)


@cli.group("config")
def config_group() -> None:
    """Show or change persisted settings."""


@config_group.command("show")
def config_show() -> None:
    current = config.current_settings()
    _emit(current, "\n".join(f"{k}: {v}" for k, v in sorted(current.items())))


@config_group.command("set")
@click.argument("key", type=click.Choice(config.SETTABLE_KEYS))
@click.argument("value")
@_guarded
def config_set(key: str, value: str) -> None:
    stored = config.save_setting(key, value)
    _emit({"ok": True, key: stored}, f"{key} = {stored}")


main = cli


if __name__ == "__main__":
    cli()
