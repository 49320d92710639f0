"""
Main application entry point for the vacuous reduct lab.

This module binds the solver, the principle checker and the claim verifier
to a command line. Machine output goes to stdout, tables and diagnostics to
stderr.
"""

import argparse
import logging
import os
import sys
from functools import partial
from typing import List, Optional, Sequence

from claims.registry import registry, select
from claims.verifier import verify_all
from config.config_manager import ConfigManager
from core.errors import ArgumentationError, ParseError
from core.framework import ArgumentationFramework
from enumeration.corpus import Corpus, CorpusSpec, FixedCorpus, parse_corpus
from formats.apx import parse_apx, parse_apx_corpus, write_apx_corpus
from formats.output import STYLES, dumps, write_extensions
from formats.tgf import parse_tgf
from principles.checker import PrincipleId, expected_principles, parse_principle, search
from semantics import vacuous
from semantics.classical import DEFAULT_CACHE_SIZE
from semantics.registry import describe_tokens, display_name, parse_semantics
from semantics.spec import SemanticsSpec
from ui.terminal.terminal_ui import TerminalUI
from utils.logging_setup import LOG_LEVELS, configure_logging
from utils.report_manager import ReportManager
from utils.worker_pool import WorkerPool

logger = logging.getLogger("vacuous_reduct")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


class UsageError(Exception):
    """Bad command-line input detected after argument parsing."""


def build_parser() -> argparse.ArgumentParser:
    tokens = describe_tokens()
    parser = argparse.ArgumentParser(
        prog="vacuous-reduct",
        description="Vacuous reduct semantics for abstract argumentation: solver, principle checker and claim verifier.",
    )
    parser.add_argument("--config", type=str, default=None, help="Path to an INI config file")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes for corpus sweeps")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="Logging level on stderr")
    parser.add_argument("--save", action="store_true", help="Also save JSON reports to the report folder")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Enumerate extensions", description=f"Semantics tokens: {tokens}")
    solve.add_argument("--semantics", required=True, help=f"Semantics token ({tokens})")
    solve.add_argument("--format", choices=("apx", "tgf"), default=None, help="Input format (default: by extension)")
    solve.add_argument("--output", choices=STYLES, default="iccma", help="Output style")
    solve.add_argument("file", help="Input file, '-' for stdin")

    principles = sub.add_parser("principles", help="Check principles", description=f"Semantics tokens: {tokens}")
    principles.add_argument("--semantics", required=True, help=f"Semantics token ({tokens})")
    which = principles.add_mutually_exclusive_group()
    which.add_argument("--principle", choices=[p.value for p in PrincipleId], help="One principle")
    which.add_argument("--all", action="store_true", help="All principles (default)")
    principles.add_argument("--corpus", action="append", default=None,
                            help="Corpus spec: exhaustive:<n>[:iso] or random:n=<n>,p=<q>,loops=<q>,count=<k>,seed=<s>")
    principles.add_argument("--format", choices=("apx", "tgf"), default=None, help="Input format for FILE")
    principles.add_argument("--strict", action="store_true", help="Exit 1 when a principle is violated")
    principles.add_argument("file", nargs="?", help="Frameworks to check instead of a generated corpus")

    verify = sub.add_parser("verify", help="Verify registered claims")
    claim = verify.add_mutually_exclusive_group()
    claim.add_argument("--claim", action="append", default=None,
                       help="Claim id, or an id prefix ending in ':' such as T1:adm:")
    claim.add_argument("--all", action="store_true", help="Every registered claim (default)")
    verify.add_argument("--corpus", action="append", default=None, help="Corpus spec (repeatable)")
    verify.add_argument("--random", action="store_true", help="Add the configured random corpora")
    verify.add_argument("--timings", action="store_true", help="Include wall times in the JSON report")
    verify.add_argument("--list", action="store_true", help="List claim ids and statements, then exit")

    gen = sub.add_parser("gen", help="Emit a corpus as APX blocks separated by %%--- lines")
    mode = gen.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", type=int, metavar="N", help="Every framework on N arguments")
    mode.add_argument("--random", metavar="SPEC", help="n=<n>,p=<q>,loops=<q>,count=<k>,seed=<s>")
    gen.add_argument("--iso-reduce", action="store_true", help="Keep one framework per isomorphism class")

    explain = sub.add_parser("explain", help="Explain membership of one set", description=f"Semantics tokens: {tokens}")
    explain.add_argument("--semantics", required=True, help=f"Semantics token ({tokens})")
    explain.add_argument("--set", required=True, dest="members", help="Comma-separated argument names (may be empty)")
    explain.add_argument("--format", choices=("apx", "tgf"), default=None, help="Input format")
    explain.add_argument("file", help="Input file, '-' for stdin")
    return parser


# -- input helpers ----------------------------------------------------------------

def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _input_format(path: str, requested: Optional[str]) -> str:
    if requested:
        return requested
    return "tgf" if path.lower().endswith(".tgf") else "apx"


def _read_frameworks(path: str, requested: Optional[str]) -> List[ArgumentationFramework]:
    data = _read_input(path)
    if _input_format(path, requested) == "tgf":
        return [parse_tgf(data)]
    return parse_apx_corpus(data)


def _read_single(path: str, requested: Optional[str]) -> ArgumentationFramework:
    data = _read_input(path)
    if _input_format(path, requested) == "tgf":
        return parse_tgf(data)
    return parse_apx(data)


def _corpora(texts: Sequence[str]) -> List[CorpusSpec]:
    return [parse_corpus(text) for text in texts]


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()


class Application:
    """Holds the configured services for one command invocation."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config_manager = ConfigManager(args.config)
        configure_logging(args.log_level or self.config_manager.get("app", "log_level", "WARNING"))
        self.ui = TerminalUI(self.config_manager)

        workers = args.workers if args.workers is not None else self.config_manager.get_int("runtime", "workers", 1)
        chunk_size = self.config_manager.get_int("runtime", "chunk_size", 4096)
        try:
            self.pool = WorkerPool(workers, chunk_size)
        except ValueError as e:
            raise UsageError(str(e)) from None

        cache_size = self.config_manager.get_int("runtime", "cache_size", DEFAULT_CACHE_SIZE)
        if cache_size != DEFAULT_CACHE_SIZE:
            vacuous.configure_cache(cache_size)

        self.save_reports = args.save or self.config_manager.get_bool("app", "save_reports", False)
        self.report_manager = ReportManager(self.config_manager.get("app", "report_folder", "reports"))
        logger.debug("command %s with %d worker(s)", args.command, workers)

    def _persist(self, text: str, kind: str) -> None:
        if self.save_reports:
            path = self.report_manager.save_report(text, kind)
            self.ui.display_success(f"Report saved to {path}")

    # -- subcommands ------------------------------------------------------------

    def solve(self) -> int:
        spec = parse_semantics(self.args.semantics)
        corpus = FixedCorpus.of(_read_frameworks(self.args.file, self.args.format), self.args.file)
        for index, found in self.pool.map(corpus, partial(vacuous.vac_extensions, spec=spec)):
            _emit(write_extensions(found, corpus.af_at(index), self.args.output, spec.token))
        return EXIT_OK

    def principles(self) -> int:
        spec = parse_semantics(self.args.semantics)
        chosen = [parse_principle(self.args.principle)] if self.args.principle else list(PrincipleId)
        if self.args.file:
            if self.args.corpus:
                raise UsageError("give either --corpus or a FILE, not both")
            corpora: List[Corpus] = [FixedCorpus.of(_read_frameworks(self.args.file, self.args.format),
                                                    os.path.basename(self.args.file))]
        else:
            texts = self.args.corpus or self.config_manager.get_list("corpus", "principle_corpora")
            corpora = list(_corpora(texts))

        reports = []
        for principle in chosen:
            for corpus in corpora:
                with self.ui.progress(f"{principle} on {corpus.label}", corpus.size) as advance:
                    reports.append(search(corpus, spec, principle, self.pool, advance))

        expected = expected_principles(spec)
        self.ui.display_search_reports(reports, expected)
        for principle, reason in expected.items():
            self.ui.display_message(f"expected to hold: {principle} ({reason})")
        text = dumps({"semantics": spec.token, "reports": [r.to_dict() for r in reports]})
        _emit(text)
        self._persist(text, "principles")

        violated = any(r.counterexample is not None for r in reports)
        return EXIT_FAILED if violated and self.args.strict else EXIT_OK

    def verify(self) -> int:
        if self.args.list:
            for claim in registry():
                _emit(f"{claim.id}\t{claim.kind.value}\t{claim.statement}")
            return EXIT_OK

        if self.args.claim:
            claims = []
            for pattern in self.args.claim:
                try:
                    claims.extend(select(pattern))
                except KeyError as e:
                    raise UsageError(e.args[0]) from None
        else:
            claims = registry()

        texts = self.args.corpus or self.config_manager.get_list("corpus", "verify_corpora")
        corpora: List[Corpus] = list(_corpora(texts))
        if self.args.random:
            for n in self.config_manager.get_list("corpus", "random_sizes"):
                corpora.append(CorpusSpec.random(
                    n=int(n),
                    edge_prob=self.config_manager.get_fraction("corpus", "edge_prob", "1/4"),
                    self_loop_prob=self.config_manager.get_fraction("corpus", "self_loop_prob", "1/8"),
                    count=self.config_manager.get_int("corpus", "random_count", 1000),
                    seed=self.config_manager.get_int("corpus", "seed", 0),
                ))

        summary = verify_all(corpora, claims, self.pool)
        self.ui.display_claim_reports(summary.reports)
        if summary.refuted:
            self.ui.display_error(f"{summary.refuted} of {len(summary.reports)} claim checks refuted")
        else:
            self.ui.display_success(f"all {summary.confirmed} claim checks confirmed")

        text = dumps(summary.to_dict(self.args.timings))
        _emit(text)
        self._persist(text, "verify")
        return EXIT_FAILED if summary.refuted else EXIT_OK

    def gen(self) -> int:
        if self.args.exhaustive is not None:
            corpus = CorpusSpec.exhaustive(self.args.exhaustive, iso_reduce=self.args.iso_reduce)
        else:
            if self.args.iso_reduce:
                raise UsageError("--iso-reduce applies to exhaustive corpora only")
            corpus = parse_corpus(f"random:{self.args.random}")
        sys.stdout.write(write_apx_corpus(af for _, af in corpus.indexed()))
        sys.stdout.flush()
        return EXIT_OK

    def explain(self) -> int:
        spec = parse_semantics(self.args.semantics)
        af = _read_single(self.args.file, self.args.format)
        names = [name.strip() for name in self.args.members.split(",") if name.strip()]
        subset = af.mask_of(names)
        _emit("\n".join(explain_lines(af, subset, spec)))
        return EXIT_OK


def _braces(af: ArgumentationFramework, mask: int) -> str:
    return "{" + ",".join(af.names_of(mask)) + "}"


def explain_lines(af: ArgumentationFramework, subset: int, spec: SemanticsSpec) -> List[str]:
    """Human-readable account of why ``subset`` is or is not an extension."""
    reduct, _ = af.reduct(subset)
    lines = [
        f"framework: {af}",
        f"set E = {_braces(af, subset)}",
        f"conflict-free: {'yes' if af.is_conflict_free(subset) else 'no'}",
        f"E+ = {_braces(af, af.attacked_by(subset))}",
        f"Gamma(E) = {_braces(af, af.defended_set(subset))}",
        f"reduct F^E = {reduct}",
    ]
    for level, (node, holds, witness) in enumerate(vacuous.reduct_chain(af, subset, spec)):
        lines.append(f"level {level}: {display_name(node)}")
        if holds:
            lines.append(f"  {display_name(node.vacuity)} vacuity holds")
        else:
            lines.append(f"  {display_name(node.vacuity)} vacuity fails: nonempty extension {_braces(af, witness)}")
    base = vacuous.base_of(spec)
    in_base = subset in vacuous.vac_extensions(af, base)
    lines.append(f"base {base.token}: {'member' if in_base else 'not a member'}")
    accepted = subset in vacuous.vac_extensions(af, spec)
    lines.append(f"verdict: E {'is' if accepted else 'is not'} a {spec.token} extension")
    return lines


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    ui: Optional[TerminalUI] = None
    try:
        app = Application(args)
        ui = app.ui
        return getattr(app, args.command)()
    except ParseError as e:
        _report(ui, f"parse error: {e}")
        return EXIT_PARSE
    except (UsageError, ArgumentationError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        _report(ui, str(message))
        return EXIT_USAGE
    except OSError as e:
        _report(ui, str(e))
        return EXIT_USAGE


def _report(ui: Optional[TerminalUI], message: str) -> None:
    if ui is not None:
        ui.display_error(message)
    else:
        print(f"Error: {message}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the application."""
    return run(argv)


if __name__ == '__main__':
    sys.exit(main())
