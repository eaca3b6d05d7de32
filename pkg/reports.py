"""
Report System for baselab.
Handles serialization of queries, verdicts and witnesses to JSON.
"""
import json
import logging
import os
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional

from atomic import Base, canonicalize_rule, render_base
from config import RunConfig
from derivability import DerivationNode
from support import EvaluationStats
from syntax import Formula, render_formula

logger = logging.getLogger(__name__)

REPORT_VERSION = "1.0"
SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "report_schema.json")


@dataclass
class ReportData:
    """Data structure for report serialization."""
    version: str = REPORT_VERSION
    command: str = ""
    query: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    verdict: Any = None
    witness: Optional[Dict[str, Any]] = None
    stats: Dict[str, Any] = field(default_factory=dict)


class ReportWriter:
    """Builds, saves and loads JSON reports."""

    def serialize_formula(self, f: Formula) -> str:
        return render_formula(f)

    def serialize_base(self, b: Base) -> dict:
        """Convert a base to a dictionary: rule list plus .base text."""
        return {
            "rules": [
                {
                    "premises": [
                        {"discharge": list(p.discharge), "head": p.head}
                        for p in rule.premises
                    ],
                    "conclusion": rule.conclusion,
                }
                for rule in b
            ],
            "text": render_base(b),
        }

    def deserialize_base(self, data: dict) -> Base:
        """Restore a base from dictionary."""
        return Base(tuple(
            canonicalize_rule(
                [(p["discharge"], p["head"]) for p in rule["premises"]],
                rule["conclusion"],
            )
            for rule in data["rules"]
        ))

    def serialize_trace(self, node: DerivationNode) -> dict:
        return {
            "context": list(node.context),
            "atom": node.atom,
            "rule": str(node.rule) if node.rule is not None else None,
            "children": [self.serialize_trace(child) for child in node.children],
        }

    def serialize_config(self, config: RunConfig, vocab: Optional[List[str]] = None) -> dict:
        data = {
            "basis": config.basis.value,
            "level": config.level,
            "max_premises": config.max_premises,
            "max_discharge": config.max_discharge,
            "max_rules": config.max_rules,
            "fact_closed": config.fact_closed,
            "strategy": config.strategy.value,
            "paranoid": config.paranoid,
        }
        if vocab is not None:
            data["vocab"] = list(vocab)
        return data

    def serialize_stats(self, stats: Optional[EvaluationStats]) -> dict:
        if stats is None:
            return EvaluationStats().as_dict()
        return stats.as_dict()

    def build_report(self, command: str, query: Dict[str, Any], config: Dict[str, Any],
                     verdict: Any, stats: Optional[EvaluationStats] = None,
                     witness: Optional[Dict[str, Any]] = None) -> dict:
        report = ReportData(
            command=command,
            query=query,
            config=config,
            verdict=verdict,
            witness=witness,
            stats=self.serialize_stats(stats),
        )
        data = asdict(report)
        if data["witness"] is None:
            del data["witness"]
        return data

    def to_json(self, report: dict) -> str:
        """Deterministic JSON: sorted keys, fixed indentation."""
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)

    def save_report(self, report: dict, filepath: str) -> bool:
        """
        Save a report to a JSON file.

        Args:
            report: Report dictionary from build_report
            filepath: Path to save file

        Returns:
            True if save successful, False otherwise
        """
        try:
            directory = os.path.dirname(filepath)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(filepath, "w", encoding="utf-8") as f:
                f.write(self.to_json(report) + "\n")
            return True
        except (IOError, OSError) as e:
            logger.error("Error saving report: %s", e)
            return False

    def load_report(self, filepath: str) -> Optional[dict]:
        """
        Load a report from a JSON file.

        Args:
            filepath: Path to report file

        Returns:
            The report dictionary if successful, None otherwise
        """
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (IOError, OSError, json.JSONDecodeError) as e:
            logger.error("Error loading report: %s", e)
            return None
        if data.get("version") != REPORT_VERSION:
            logger.warning("Report version mismatch: %s", data.get("version"))
        return data


def load_schema() -> dict:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def schema_problems(report: dict, schema: Optional[dict] = None) -> List[str]:
    """Required keys and types the report is missing, per the shipped schema."""
    schema = schema or load_schema()
    problems = []
    python_types = {
        "string": str, "object": dict, "integer": int, "number": (int, float),
        "boolean": bool, "array": list,
    }

    def check(value, node, path):
        expected = node.get("type")
        if expected is not None:
            allowed = expected if isinstance(expected, list) else [expected]
            if "null" in allowed and value is None:
                return
            if not any(isinstance(value, python_types[t]) for t in allowed if t != "null"):
                problems.append(f"{path}: expected {expected}")
                return
        for key in node.get("required", ()):
            if not isinstance(value, dict) or key not in value:
                problems.append(f"{path}.{key}: missing")
        for key, child in node.get("properties", {}).items():
            if isinstance(value, dict) and key in value:
                check(value[key], child, f"{path}.{key}")

    check(report, schema, "$")
    return problems
