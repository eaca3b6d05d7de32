"""
Text rendering for baselab.
Verdict boxes, comparison tables, monotonicity summaries and derivation trees.

Example output:
    ┌──────┬─────────┬─────────┬───────────┬───────┐
    │ name │ formula │ B-eS    │ classical │ agree │
    ├──────┼─────────┼─────────┼───────────┼───────┤
    │ 1    │ p ⊸ p   │ valid   │ valid     │ ✓     │
    │ 2    │ p ⊸ q   │ invalid │ invalid   │ ✓     │
    └──────┴─────────┴─────────┴───────────┴───────┘
    2/2 agree
"""
from typing import List, Optional, Sequence

from atomic import Base, render_base
from derivability import DerivationNode
from oracles import ComparisonRecord
from support import MonotonicityReport
from syntax import render_formula


def _verdict(flag: bool) -> str:
    return "valid" if flag else "invalid"


class ReportVisualizer:
    """
    Renders judgments for the terminal.

    Provides methods to display:
    - Boxed verdicts with their configuration
    - Oracle comparison tables
    - Derivation trees
    - Monotonicity audit summaries
    """

    def render_box(self, title: str, lines: Sequence[str]) -> str:
        inner = max([len(title)] + [len(line) for line in lines]) + 2
        out = [f"┌{'─' * inner}┐", f"│ {title.ljust(inner - 1)}│", f"├{'─' * inner}┤"]
        out.extend(f"│ {line.ljust(inner - 1)}│" for line in lines)
        out.append(f"└{'─' * inner}┘")
        return "\n".join(out)

    def render_verdict(self, command: str, verdict: bool, details: Sequence[str] = ()) -> str:
        word = {
            "derive": ("derivable", "not derivable"),
            "support": ("supported", "not supported"),
            "entails": ("entailed", "not entailed"),
            "valid": ("valid", "not valid"),
            "countermodel": ("no countermodel (valid)", "countermodel found"),
        }.get(command, ("yes", "no"))[0 if verdict else 1]
        return self.render_box(f"{command}: {word}", list(details))

    def render_base(self, b: Base, title: str = "base") -> str:
        text = render_base(b).rstrip("\n")
        lines = text.split("\n") if text else ["# empty base"]
        return self.render_box(title, lines)

    def render_comparison(self, records: List[ComparisonRecord],
                          names: Optional[Sequence[str]] = None) -> str:
        """
        Creates a table with one row per compared formula.

        Args:
            records: Comparison records in corpus order
            names: Optional row labels, same length as records

        Returns:
            Box-drawn table followed by an agreement summary
        """
        oracle = records[0].oracle if records else "oracle"
        header = ["name", "formula", "B-eS", oracle, "agree"]
        rows = []
        for i, record in enumerate(records):
            rows.append([
                names[i] if names else str(i + 1),
                render_formula(record.formula, unicode=True),
                _verdict(record.bes_valid),
                _verdict(record.oracle_valid),
                "✓" if record.agree else "✗",
            ])
        widths = [max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
                  for c in range(len(header))]

        def line(left, mid, right):
            return left + mid.join("─" * (w + 2) for w in widths) + right

        def row(cells):
            return "│" + "│".join(f" {cell.ljust(w)} " for cell, w in zip(cells, widths)) + "│"

        out = [line("┌", "┬", "┐"), row(header), line("├", "┼", "┤")]
        out.extend(row(r) for r in rows)
        out.append(line("└", "┴", "┘"))
        agreed = sum(1 for r in records if r.agree)
        out.append(f"{agreed}/{len(records)} agree")
        return "\n".join(out)

    def render_trace(self, node: DerivationNode) -> str:
        """Indented derivation tree, conclusions first."""
        lines: List[str] = []

        def walk(n: DerivationNode, prefix: str, last: bool, root: bool):
            ctx = ", ".join(n.context)
            label = f"{ctx} ⊢ {n.atom}" if ctx else f"⊢ {n.atom}"
            label += "   [assumption]" if n.is_assumption else f"   by {n.rule}"
            if root:
                lines.append(label)
                child_prefix = ""
            else:
                lines.append(prefix + ("└── " if last else "├── ") + label)
                child_prefix = prefix + ("    " if last else "│   ")
            for i, child in enumerate(n.children):
                walk(child, child_prefix, i == len(n.children) - 1, False)

        walk(node, "", True, True)
        return "\n".join(lines)

    def render_monotonicity(self, report: MonotonicityReport) -> str:
        lines = [
            f"formulas checked: {report.formulas_checked}",
            f"bases checked:    {report.bases_checked}",
            f"violations:       {report.violation_count}",
        ]
        for v in report.violations:
            lines.append(f"  {render_formula(v.formula, unicode=True)}: {v.smaller} ⊆ {v.larger}")
        return self.render_box("monotonicity audit", lines)
