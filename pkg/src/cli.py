#!/usr/bin/env python3
"""
flagorbit CLI
Command-line interface for orbit classification on complex flag spaces.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
from rich.console import Console
from rich.logging import RichHandler

# Handle both relative and absolute imports
try:
    from config import CliConfig, OutputFormat
    from core.bruhat import BruhatInterval
    from core.coxeter import enumerate_elements, from_word, parse_word
    from core.errors import ArityMismatch, ConfigurationError, FlagOrbitError, GroupTooLarge, NonFiniteType, NotTypeA, ParseError
    from core.orbits import (
        RealizationDescriptor,
        classify,
        classify_all,
        induction_prediction,
        maximal_parabolic_setup,
        serre_dual,
        summarize,
    )
    from core.paper_check import run_paper_check
    from core.rootdata import RootSystem, build_root_system, parse_cartan_datum, parse_weight
    from integrations.hasse_export import write_dot
    from utils.formatting import dumps_json, render_records, truncate_poincare
    from utils.interval_cache import IntervalCache
except ImportError:
    from .config import CliConfig, OutputFormat
    from .core.bruhat import BruhatInterval
    from .core.coxeter import enumerate_elements, from_word, parse_word
    from .core.errors import ArityMismatch, ConfigurationError, FlagOrbitError, GroupTooLarge, NonFiniteType, NotTypeA, ParseError
    from .core.orbits import (
        RealizationDescriptor,
        classify,
        classify_all,
        induction_prediction,
        maximal_parabolic_setup,
        serre_dual,
        summarize,
    )
    from .core.paper_check import run_paper_check
    from .core.rootdata import RootSystem, build_root_system, parse_cartan_datum, parse_weight
    from .integrations.hasse_export import write_dot
    from .utils.formatting import dumps_json, render_records, truncate_poincare
    from .utils.interval_cache import IntervalCache

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

NOT_ANTIDOMINANT_NOTE = "λ not antidominant (theorem hypothesis unmet); verdict suppressed"
SINGULAR_CAVEAT = (
    "λ is antidominant but singular: the standard module is a classifying module, "
    "and the verdict applies to its unique irreducible submodule"
)


def _bool(value: bool) -> str:
    return "true" if value else "false"


class FlagOrbitCLI:
    """Command implementations; each returns a process exit code."""

    def __init__(self, config: CliConfig):
        self.config = config
        self.cache = IntervalCache(config.cache_dir)

    # Plumbing

    def _run(self, command: Callable[[], int]) -> int:
        try:
            return command()
        except (GroupTooLarge, NonFiniteType) as e:
            click.echo(f"❌ {e}", err=True)
            return EXIT_RESOURCE
        except FlagOrbitError as e:
            click.echo(f"❌ {e}", err=True)
            return EXIT_USAGE
        except OSError as e:
            click.echo(f"❌ Cannot write output: {e}", err=True)
            return EXIT_USAGE

    def _emit(self, text: str, out_path: Optional[Path] = None):
        if out_path is None:
            click.echo(text, nl=False)
            return
        Path(out_path).write_text(text, encoding="utf-8")
        click.echo(f"✅ Wrote {out_path}", err=True)

    def _system(self, system_spec: str) -> RootSystem:
        return build_root_system(parse_cartan_datum(system_spec), max_roots=self.config.max_roots)

    def _element(self, system: RootSystem, word_text: str):
        return from_word(system, parse_word(word_text))

    def _require_record_format(self, command_name: str):
        if self.config.format is OutputFormat.CSV:
            raise ConfigurationError(f"{command_name} supports table and json output only")

    @property
    def _json(self) -> bool:
        return self.config.format is OutputFormat.JSON

    # Commands

    def cmd_classify(self, system_spec: str, out_path: Optional[Path] = None) -> int:
        """Classify every orbit of the system, length-sorted."""
        def command() -> int:
            system = self._system(system_spec)
            elements = enumerate_elements(system, self.config.max_group_order)
            records = classify_all(
                system,
                elements,
                workers=self.config.workers,
                interval_provider=self.cache.lower_interval,
            )
            summary = summarize(records)
            logger.debug(f"Cache hits {self.cache.hits}, misses {self.cache.misses}")

            text = render_records(
                records,
                self.config.format,
                summary=summary,
                system_label=system.label,
                truncate=self.config.poincare_truncate,
            )
            self._emit(text, out_path)
            if self.config.format is OutputFormat.CSV:
                click.echo(summary.line, err=True)
            return EXIT_OK

        return self._run(command)

    def cmd_interval(self, system_spec: str, word_text: str, dot_path: Optional[Path] = None,
                     out_path: Optional[Path] = None) -> int:
        """Size and Poincaré coefficients of [e, w]; optional Hasse diagram."""
        def command() -> int:
            self._require_record_format("interval")
            system = self._system(system_spec)
            w = self._element(system, word_text)
            interval = self.cache.lower_interval(w)

            if dot_path is not None:
                write_dot(interval, dot_path, self.cache.lower_interval)
                click.echo(f"✅ Hasse diagram written to {dot_path}", err=True)

            self._emit(self._format_interval(system, interval), out_path)
            return EXIT_OK

        return self._run(command)

    def _format_interval(self, system: RootSystem, interval: BruhatInterval) -> str:
        """Output depends only on the element, not on the word it was given by."""
        w = interval.top
        if self._json:
            return dumps_json({
                "system": system.label,
                "word": w.word_string,
                "length": w.length,
                "size": interval.size,
                "poincare": list(interval.poincare),
                "members": [u.word_string for u in interval.sorted_members()],
            })

        lines = [
            f"system: {system.label}",
            f"word: {w.word_string}",
            f"length: {w.length}",
            f"size: {interval.size}",
            f"poincare: {truncate_poincare(interval.poincare, self.config.poincare_truncate)}",
        ]
        return "\n".join(lines) + "\n"

    def cmd_orbit(self, system_spec: str, word_text: str, lambda_text: Optional[str] = None,
                  out_path: Optional[Path] = None) -> int:
        """One record plus the U_w labels and the Serre-paired realization degrees."""
        def command() -> int:
            self._require_record_format("orbit")
            system = self._system(system_spec)
            w = self._element(system, word_text)
            interval = self.cache.lower_interval(w)
            record = classify(w, system, interval)

            weight = parse_weight(lambda_text) if lambda_text else -system.rho()
            if weight.rank != system.rank:
                raise ArityMismatch(f"λ has {weight.rank} coordinates, system rank is {system.rank}")
            realization = RealizationDescriptor(
                degree=record.descriptor.vanishing_number, weight=weight
            )
            dual = serre_dual(realization, system)
            u_w = [u.word_string for u in interval.sorted_members()]

            if self._json:
                text = dumps_json({
                    "system": system.label,
                    "record": record.to_dict(),
                    "u_w": u_w,
                    "realization": self._realization_dict(realization),
                    "serre_dual": self._realization_dict(dual),
                })
            else:
                text = render_records(
                    [record], OutputFormat.TABLE, truncate=self.config.poincare_truncate
                )
                text += f"U_w: {', '.join(u_w)}\n"
                text += f"realization: degree {realization.degree}, λ = {realization.weight}\n"
                text += f"serre dual: degree {dual.degree}, λ = {dual.weight}\n"
            self._emit(text, out_path)
            return EXIT_OK

        return self._run(command)

    @staticmethod
    def _realization_dict(realization: RealizationDescriptor) -> Dict[str, Any]:
        return {
            "degree": realization.degree,
            "weight": realization.weight.to_json(),
            "region": realization.region.value,
        }

    def cmd_verdict(self, system_spec: str, word_text: str, lambda_text: str,
                    out_path: Optional[Path] = None) -> int:
        """Weight predicates and the realization verdict for (w, λ)."""
        def command() -> int:
            self._require_record_format("verdict")
            system = self._system(system_spec)
            w = self._element(system, word_text)
            weight = parse_weight(lambda_text)

            integral = system.is_integral(weight)
            regular = system.is_regular(weight)
            antidominant = system.is_antidominant(weight)

            verdict: Optional[str] = None
            notes: List[str] = []
            if not antidominant:
                notes.append(NOT_ANTIDOMINANT_NOTE)
            else:
                verdict = classify(w, system, self.cache.lower_interval(w)).verdict.value
                if not regular:
                    notes.append(SINGULAR_CAVEAT)

            if self._json:
                text = dumps_json({
                    "system": system.label,
                    "word": w.word_string,
                    "lambda": weight.to_json(),
                    "integral": integral,
                    "regular": regular,
                    "antidominant": antidominant,
                    "verdict": verdict,
                    "notes": notes,
                })
            else:
                lines = [
                    f"system: {system.label}",
                    f"word: {w.word_string}",
                    f"λ: {weight}",
                    f"integral: {_bool(integral)}",
                    f"regular: {_bool(regular)}",
                    f"antidominant: {_bool(antidominant)}",
                    f"verdict: {verdict or 'suppressed'}",
                ]
                lines.extend(f"note: {note}" for note in notes)
                text = "\n".join(lines) + "\n"
            self._emit(text, out_path)
            return EXIT_OK

        return self._run(command)

    def cmd_induction(self, n1: int, n2: int, system_spec: Optional[str] = None,
                      out_path: Optional[Path] = None) -> int:
        """Composition-factor prediction; with a system, the maximal-parabolic setup for k = n1."""
        def command() -> int:
            self._require_record_format("induction")
            prediction = induction_prediction(n1, n2)
            payload: Dict[str, Any] = {
                "n1": prediction.n1,
                "n2": prediction.n2,
                "factor_count": prediction.factor_count,
                "irreducible": prediction.irreducible,
            }

            if system_spec is not None:
                system = self._system(system_spec)
                if system.series != "A":
                    raise NotTypeA(f"{system.label} is not of series A")
                if n1 + n2 != system.rank + 1:
                    raise ParseError(
                        f"Partition ({n1}, {n2}) does not sum to {system.rank + 1} for {system.label}"
                    )
                setup = maximal_parabolic_setup(system, n1, self.config.max_group_order)
                payload["setup"] = {
                    "system": system.label,
                    "removed_generator": setup.removed_generator,
                    "levi_generators": list(setup.levi_generators),
                    "fiber_size": len(setup.fiber_labels),
                    "fiber_vanishing_one": [u.word_string for u in setup.fiber_vanishing_one],
                    "open_orbit": setup.open_orbit_label.word_string,
                    "open_set_size": len(setup.open_set_labels),
                    "smooth": setup.smooth.to_json(),
                    "matches_prediction": setup.smooth.to_json() == prediction.irreducible,
                }

            if self._json:
                text = dumps_json(payload)
            else:
                lines = [
                    f"partition: ({n1}, {n2})",
                    f"factor_count: {prediction.factor_count}",
                    f"irreducible: {_bool(prediction.irreducible)}",
                ]
                for key, value in payload.get("setup", {}).items():
                    if isinstance(value, bool):
                        value = _bool(value)
                    elif isinstance(value, list):
                        value = ", ".join(str(v) for v in value) or "-"
                    lines.append(f"{key}: {value}")
                text = "\n".join(lines) + "\n"
            self._emit(text, out_path)
            return EXIT_OK

        return self._run(command)

    def cmd_paper_check(self) -> int:
        """Run every reference assertion; exit 1 if any fails."""
        def command() -> int:
            results = run_paper_check(self.config.max_group_order)
            for result in results:
                click.echo(result.line)
            failed = sum(1 for result in results if not result.passed)
            if failed:
                click.echo(f"❌ {failed} of {len(results)} checks failed", err=True)
                return EXIT_ASSERTION
            return EXIT_OK

        return self._run(command)


def configure_logging(verbose: bool):
    """Log to stderr through rich; stdout carries data only."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )


def _make_cli(ctx: click.Context, **overrides: Any) -> Optional[FlagOrbitCLI]:
    try:
        config = CliConfig.from_env(cache_dir=ctx.obj.get("cache_dir"), **overrides)
    except FlagOrbitError as e:
        click.echo(f"❌ Invalid configuration: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    return FlagOrbitCLI(config)


ALL_FORMATS = tuple(f.value for f in OutputFormat)
TEXT_FORMATS = (OutputFormat.TABLE.value, OutputFormat.JSON.value)


def output_options(formats=ALL_FORMATS):
    def decorate(command):
        command = click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path),
                               help="Write output to a file instead of stdout")(command)
        command = click.option("--format", "fmt", type=click.Choice(formats), default=None,
                               help="Output format (default: table)")(command)
        command = click.option("--max-group-order", type=int, default=None,
                               help="Refuse to enumerate groups larger than this")(command)
        return command
    return decorate


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Interval cache directory (overrides FLAGORBIT_CACHE_DIR)")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, cache_dir: Optional[Path]):
    """flagorbit - orbit classification on complex flag spaces.

    \b
    Examples:
      flagorbit classify A3 --format json
      flagorbit interval A2 1,2 --dot a2.dot
      flagorbit verdict A2 1,2 --lambda=-1,-1
      flagorbit induction 2 2 --system A3
      flagorbit paper-check
    """
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir
    configure_logging(verbose)


@cli.command("classify")
@click.argument("system_spec")
@output_options()
@click.option("--workers", type=int, default=None, help="Parallel classification workers")
@click.pass_context
def classify_orbits(ctx, system_spec, fmt, out_path, max_group_order, workers):
    """Classify every orbit of SYSTEM_SPEC (e.g. A3, B2, or a Cartan-matrix JSON)."""
    app = _make_cli(ctx, format=fmt, max_group_order=max_group_order, workers=workers)
    ctx.exit(app.cmd_classify(system_spec, out_path))


@cli.command()
@click.argument("system_spec")
@click.argument("word")
@output_options(TEXT_FORMATS)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the Hasse diagram as DOT text")
@click.pass_context
def interval(ctx, system_spec, word, fmt, out_path, max_group_order, dot_path):
    """Lower Bruhat interval of WORD (comma-separated generators, or e)."""
    app = _make_cli(ctx, format=fmt, max_group_order=max_group_order)
    ctx.exit(app.cmd_interval(system_spec, word, dot_path, out_path))


@cli.command()
@click.argument("system_spec")
@click.argument("word")
@output_options(TEXT_FORMATS)
@click.option("--lambda", "lambda_text", default=None, help="Twist parameter c1,c2,... (default -rho)")
@click.pass_context
def orbit(ctx, system_spec, word, fmt, out_path, max_group_order, lambda_text):
    """Classification record, U_w labels and realization degrees for one orbit."""
    app = _make_cli(ctx, format=fmt, max_group_order=max_group_order)
    ctx.exit(app.cmd_orbit(system_spec, word, lambda_text, out_path))


@cli.command()
@click.argument("system_spec")
@click.argument("word")
@output_options(TEXT_FORMATS)
@click.option("--lambda", "lambda_text", required=True, help="Twist parameter c1,c2,...")
@click.pass_context
def verdict(ctx, system_spec, word, fmt, out_path, max_group_order, lambda_text):
    """Weight predicates and the realization verdict for an orbit and λ."""
    app = _make_cli(ctx, format=fmt, max_group_order=max_group_order)
    ctx.exit(app.cmd_verdict(system_spec, word, lambda_text, out_path))


@cli.command()
@click.argument("n1", type=int)
@click.argument("n2", type=int)
@output_options(TEXT_FORMATS)
@click.option("--system", "system_spec", default=None, help="Series A system for the maximal-parabolic setup")
@click.pass_context
def induction(ctx, n1, n2, fmt, out_path, max_group_order, system_spec):
    """Composition-factor prediction for the Levi GL(N1) x GL(N2)."""
    app = _make_cli(ctx, format=fmt, max_group_order=max_group_order)
    ctx.exit(app.cmd_induction(n1, n2, system_spec, out_path))


@cli.command("paper-check")
@click.option("--max-group-order", type=int, default=None)
@click.pass_context
def paper_check(ctx, max_group_order):
    """Re-derive the reference orbit counts and maximal-parabolic claims."""
    app = _make_cli(ctx, max_group_order=max_group_order)
    ctx.exit(app.cmd_paper_check())



def main():
    """Main entry point."""
    return cli(obj={}, prog_name="flagorbit")


if __name__ == "__main__":
    sys.exit(main())
