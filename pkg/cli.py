"""
Command-line interface for baselab.

Exit codes: 0 positive judgment, 1 negative judgment, 2 error.
"""
import argparse
import logging
import os
import sys
from dataclasses import replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from atomic import (
    EMPTY_BASE, Base, basis_size, check_atom_name, counted_rules, parse_base,
    render_base,
)
from config import BasisClass, RunConfig, Strategy, is_enumerable, max_enum_from_env
from derivability import Judgment, derivation_trace
from errors import BaselabError
from events import Event, EventBus
from oracles import (
    ORACLES, compare, curated_corpus, load_corpus, map_extrinsic,
)
from reports import ReportWriter
from support import SupportContext
from syntax import Formula, atoms_of, parse_formula, render_formula
from translate import base_to_formula, formula_to_base
from visualization import ReportVisualizer

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _event_logger(event: Event):
    logger.debug("%s %s", event.event_type.value, event.data)


def _shown(f: Formula) -> str:
    return render_formula(f, unicode=True)


class CommandRunner:
    """Runs one parsed command and emits its report."""

    def __init__(self, args: argparse.Namespace, out=None):
        self.args = args
        self.out = out or sys.stdout
        self.writer = ReportWriter()
        self.visualizer = ReportVisualizer()
        self.events = EventBus(keep_history=False)
        self.events.subscribe_all(_event_logger)
        self.config = self._config()

    def _config(self) -> RunConfig:
        a = self.args
        vocab = None
        if getattr(a, "vocab", None):
            vocab = tuple(name.strip() for name in a.vocab.split(",") if name.strip())
        return RunConfig(
            basis=BasisClass(a.basis),
            vocab=vocab,
            fresh=a.fresh,
            max_premises=a.max_premises,
            max_discharge=a.max_discharge,
            max_rules=a.max_rules,
            fact_closed=a.fact_closed,
            strategy=Strategy(a.strategy),
            output="json" if a.json else "text",
            paranoid=a.paranoid,
            max_enum=max_enum_from_env(),
        )

    def emit(self, command: str, verdict, text: str, query: dict,
             config: Optional[dict] = None, stats=None, witness=None) -> None:
        report = self.writer.build_report(command, query, config or {}, verdict, stats, witness)
        if self.args.report:
            if not self.writer.save_report(report, self.args.report):
                raise OSError(f"could not write report to {self.args.report}")
        if self.config.output == "json":
            print(self.writer.to_json(report), file=self.out)
        else:
            print(text, file=self.out)

    def context(self, formulas: Iterable[Formula], base: Base = EMPTY_BASE,
                cap_fallback: bool = False) -> SupportContext:
        """Support context over the query's atoms.

        With cap_fallback, a basis too large to enumerate without --max-rules
        is capped one rule above the base, so the base can still be extended.
        """
        atoms = set(base.atoms())
        for f in formulas:
            atoms |= atoms_of(f)
        vocab = self.config.resolve_vocab(atoms)
        spec = self.config.to_spec(vocab)
        if cap_fallback and not spec.is_capped and not is_enumerable(spec, self.config.max_enum):
            capped = replace(spec, max_rules=counted_rules(spec, base) + 1)
            if is_enumerable(capped, self.config.max_enum):
                logger.warning("no --max-rules and %d bases over {%s}; capping bases at %d rules",
                               basis_size(spec), ", ".join(vocab), capped.max_rules)
                spec = capped
        return SupportContext(
            spec,
            strategy=self.config.strategy,
            max_enum=self.config.max_enum,
            paranoid=self.config.paranoid,
            event_bus=self.events,
        )

    def config_dict(self, ctx: Optional[SupportContext] = None) -> dict:
        vocab = list(ctx.spec.vocab) if ctx is not None else None
        data = self.writer.serialize_config(self.config, vocab)
        if ctx is not None:
            data["strategy"] = ctx.strategy.value
            data["max_rules"] = ctx.spec.max_rules
            data["max_rules_fallback"] = ctx.spec.max_rules != self.config.max_rules
        return data

    def details(self, ctx: SupportContext) -> List[str]:
        spec = ctx.spec
        cap = "none" if spec.max_rules is None else str(spec.max_rules)
        return [
            f"basis {self.config.basis.value}: vocab {{{', '.join(spec.vocab)}}}",
            f"max premises {spec.max_premises}, max discharge {spec.max_discharge}, "
            f"max rules {cap}",
            f"strategy {ctx.strategy.value}, bases enumerated {ctx.stats.bases_enumerated}",
        ]

    def load_base(self) -> Base:
        path = getattr(self.args, "base", None)
        if not path:
            return EMPTY_BASE
        with open(path, "r", encoding="utf-8") as f:
            return parse_base(f.read())

    def cmd_derive(self) -> int:
        with open(self.args.base_file, "r", encoding="utf-8") as f:
            base = parse_base(f.read())
        goal = check_atom_name(self.args.goal)
        assumptions = tuple(sorted(
            check_atom_name(a.strip()) for a in (self.args.assume or "").split(",") if a.strip()
        ))
        judgment = Judgment(base, frozenset(assumptions), goal)
        verdict = judgment.holds()
        trace = derivation_trace(base, assumptions, goal) if self.args.trace and verdict else None

        text = self.visualizer.render_base(base, self.args.base_file) + "\n"
        text += self.visualizer.render_verdict("derive", verdict, [str(judgment)])
        if trace is not None:
            text += "\n" + self.visualizer.render_trace(trace)
        self.emit(
            "derive", verdict, text,
            query={"base": self.writer.serialize_base(base),
                   "assumptions": list(assumptions), "goal": goal},
            witness={"trace": self.writer.serialize_trace(trace)} if trace else None,
        )
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE

    def _hypotheses(self) -> Tuple[Formula, ...]:
        raw = getattr(self.args, "hyp", None) or ""
        return tuple(parse_formula(part) for part in raw.split(";") if part.strip())

    def cmd_support(self) -> int:
        hyps = self._hypotheses()
        if hyps:
            return self.cmd_entails()
        f = parse_formula(self.args.formula)
        base = self.load_base()
        ctx = self.context([f], base, cap_fallback=True)
        verdict = ctx.supports(base, f)
        self.emit(
            "support", verdict,
            self.visualizer.render_verdict("support", verdict,
                                           [f"⊩ {_shown(f)}"] + self.details(ctx)),
            query={"formula": self.writer.serialize_formula(f),
                   "base": self.writer.serialize_base(base)},
            config=self.config_dict(ctx), stats=ctx.stats,
        )
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE

    def cmd_entails(self) -> int:
        f = parse_formula(self.args.formula)
        hyps = self._hypotheses()
        base = self.load_base()
        ctx = self.context((f,) + hyps, base, cap_fallback=True)
        verdict = ctx.entails(base, hyps, f)
        premises = ", ".join(_shown(h) for h in hyps)
        self.emit(
            "entails", verdict,
            self.visualizer.render_verdict("entails", verdict,
                                           [f"{premises} ⊩ {_shown(f)}"] + self.details(ctx)),
            query={"formula": self.writer.serialize_formula(f),
                   "hypotheses": [self.writer.serialize_formula(h) for h in hyps],
                   "base": self.writer.serialize_base(base)},
            config=self.config_dict(ctx), stats=ctx.stats,
        )
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE

    def cmd_valid(self) -> int:
        f = parse_formula(self.args.formula)
        ctx = self.context([f])
        verdict = ctx.valid(f)
        audit = ctx.audit(f)
        lines = [_shown(f)] + self.details(ctx)
        if audit.truncated:
            lines.append(f"monotonicity audited on the first {audit.bases_checked} bases only")
        self.emit(
            "valid", verdict,
            self.visualizer.render_verdict("valid", verdict, lines),
            query={"formula": self.writer.serialize_formula(f),
                   "audit": {"bases_checked": audit.bases_checked,
                             "violations": audit.violation_count,
                             "truncated": audit.truncated}},
            config=self.config_dict(ctx), stats=ctx.stats,
        )
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE

    def cmd_countermodel(self) -> int:
        f = parse_formula(self.args.formula)
        ctx = self.context([f])
        witness = ctx.countermodel(f)
        text = self.visualizer.render_verdict("countermodel", witness is None,
                                              [_shown(f)] + self.details(ctx))
        if witness is not None:
            text += "\n" + (render_base(witness).rstrip("\n") or "# empty base")
        self.emit(
            "countermodel", witness is None, text,
            query={"formula": self.writer.serialize_formula(f)},
            config=self.config_dict(ctx), stats=ctx.stats,
            witness={"base": self.writer.serialize_base(witness)} if witness is not None else None,
        )
        return EXIT_POSITIVE if witness is None else EXIT_NEGATIVE

    def cmd_translate(self) -> int:
        source = self.args.input
        if os.path.isfile(source):
            with open(source, "r", encoding="utf-8") as f:
                source = f.read()
        if self.args.direction == "to-formula":
            result = render_formula(base_to_formula(parse_base(source)))
        else:
            result = render_base(formula_to_base(parse_formula(source))).rstrip("\n")
        self.emit("translate", True, result,
                  query={"direction": self.args.direction, "input": self.args.input},
                  witness={"result": result})
        return EXIT_POSITIVE

    def cmd_oracle(self) -> int:
        f = parse_formula(self.args.formula)
        mapped = map_extrinsic(f)
        names = list(ORACLES) if self.args.logic == "both" else [self.args.logic]
        verdicts = {name: ORACLES[name](mapped) for name in names}
        lines = [f"mapped: {mapped}"] + [
            f"{name}: {'valid' if ok else 'not valid'}" for name, ok in verdicts.items()
        ]
        verdict = all(verdicts.values())
        self.emit("oracle", verdicts, self.visualizer.render_box(_shown(f), lines),
                  query={"formula": self.writer.serialize_formula(f), "mapped": str(mapped)})
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE

    def cmd_compare(self) -> int:
        if self.args.formulas:
            entries = [(str(i + 1), parse_formula(text))
                       for i, text in enumerate(self.args.formulas)]
        elif self.args.corpus:
            with open(self.args.corpus, "r", encoding="utf-8") as f:
                entries = load_corpus(f.read())
        else:
            entries = curated_corpus()

        records = []
        rows = []
        for name, f in entries:
            map_extrinsic(f)
            ctx = self.context([f])
            record = compare(ctx, f)
            records.append(record)
            rows.append({
                "name": name,
                "formula": self.writer.serialize_formula(f),
                "vocab": list(record.vocab),
                "attempts": record.attempts,
                "bes_valid": record.bes_valid,
                "oracle": record.oracle,
                "oracle_valid": record.oracle_valid,
                "agree": record.agree,
            })
        verdict = all(r.agree for r in records)
        self.emit(
            "compare", verdict,
            self.visualizer.render_comparison(records, [name for name, _ in entries]),
            query={"rows": rows}, config=self.config_dict(),
        )
        return EXIT_POSITIVE if verdict else EXIT_NEGATIVE


COMMANDS: Dict[str, Callable[[CommandRunner], int]] = {
    "derive": CommandRunner.cmd_derive,
    "support": CommandRunner.cmd_support,
    "entails": CommandRunner.cmd_entails,
    "valid": CommandRunner.cmd_valid,
    "countermodel": CommandRunner.cmd_countermodel,
    "translate": CommandRunner.cmd_translate,
    "oracle": CommandRunner.cmd_oracle,
    "compare": CommandRunner.cmd_compare,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--basis", choices=[b.value for b in BasisClass], default="b1",
                        help="bases of level ≤ 1 (b1) or ≤ 2 (b2)")
    common.add_argument("--vocab", help="explicit comma-separated vocabulary")
    common.add_argument("--fresh", type=int, default=None,
                        help="fresh atoms added to the vocabulary (default: 1 when enumerable)")
    common.add_argument("--max-premises", type=int, default=None)
    common.add_argument("--max-discharge", type=int, default=None)
    common.add_argument("--max-rules", type=int, default=None,
                        help="cap on rules per base (default: no cap)")
    common.add_argument("--fact-closed", action="store_true",
                        help="facts do not count toward --max-rules")
    common.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    common.add_argument("--paranoid", action="store_true",
                        help="decide validity by checking every base")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--report", metavar="FILE", help="also save the JSON report to FILE")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="baselab",
        description="Base-extension semantics: derivability, support, validity and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="decide Γ ⊢_B goal")
    p.add_argument("base_file")
    p.add_argument("goal")
    p.add_argument("--assume", help="comma-separated assumption atoms")
    p.add_argument("--trace", action="store_true", help="print a witness derivation")

    for name, text in (("support", "decide ⊩_B φ (or Δ ⊩_B φ with --hyp)"),
                       ("entails", "decide Δ ⊩_B φ")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("formula")
        p.add_argument("--base", help=".base file (default: empty base)")
        p.add_argument("--hyp", required=name == "entails", help='hypotheses "φ;ψ"')

    for name, text in (("valid", "decide validity over the basis"),
                       ("countermodel", "find a base where φ fails")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("formula")

    p = sub.add_parser("translate", parents=[common], help="bases ↔ clausal formulas")
    p.add_argument("direction", choices=["to-formula", "to-base"])
    p.add_argument("input", help="base text / formula, or a file containing it")

    p = sub.add_parser("oracle", parents=[common], help="classical / intuitionistic validity")
    p.add_argument("formula")
    p.add_argument("--logic", choices=["classical", "intuitionistic", "both"], default="both")

    p = sub.add_parser("compare", parents=[common], help="base-extension validity vs oracle")
    p.add_argument("formulas", nargs="*")
    p.add_argument("--corpus", help="corpus file, one formula per line")
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s",
                        stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        runner = CommandRunner(args, out)
        status = COMMANDS[args.command](runner)
        logger.info("events: %s", runner.events.counts())
        return status
    except (BaselabError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
