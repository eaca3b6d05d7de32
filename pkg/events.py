"""
Evaluation events for baselab.
Support contexts publish what they do; the CLI and tests listen.
"""
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Deque, Dict, List, Optional

Listener = Callable[["Event"], None]

# Events kept in a bus history before the oldest are dropped.
DEFAULT_HISTORY_LIMIT = 10_000


class EventType(Enum):
    """What a support context can report"""
    # Context setup
    STRATEGY_SELECTED = "strategy_selected"
    DERIVABILITY_TABLE_BUILT = "derivability_table_built"
    FORMULA_TABLE_BUILT = "formula_table_built"
    FALLBACK_EVALUATION = "fallback_evaluation"

    # Query outcomes
    QUERY_FINISHED = "query_finished"
    COUNTERMODEL_FOUND = "countermodel_found"
    MONOTONICITY_VIOLATION = "monotonicity_violation"
    AUDIT_TRUNCATED = "audit_truncated"


@dataclass(frozen=True)
class Event:
    event_type: EventType
    data: Dict[str, Any]

    def __repr__(self):
        return f"Event({self.event_type.value}, {self.data})"


class EventBus:
    """Routes evaluation events to listeners and keeps a bounded history.

    With keep_history=False only the per-type counts are kept.
    """

    def __init__(self, keep_history: bool = True, history_limit: int = DEFAULT_HISTORY_LIMIT):
        self._listeners: Dict[EventType, List[Listener]] = {t: [] for t in EventType}
        self._history: Deque[Event] = deque(maxlen=history_limit)
        self._keep_history = keep_history
        self._counts: Counter = Counter()

    def subscribe(self, event_type: EventType, callback: Listener):
        self._listeners[event_type].append(callback)

    def subscribe_all(self, callback: Listener):
        for event_type in EventType:
            self.subscribe(event_type, callback)

    def unsubscribe(self, event_type: EventType, callback: Listener):
        listeners = self._listeners[event_type]
        if callback in listeners:
            listeners.remove(callback)

    def publish(self, event: Event):
        self._counts[event.event_type] += 1
        if self._keep_history:
            self._history.append(event)
        for callback in list(self._listeners[event.event_type]):
            callback(event)

    def emit(self, event_type: EventType, **data):
        """Publish an event built from keyword data."""
        self.publish(Event(event_type, data))

    def get_history(self, event_type: Optional[EventType] = None) -> List[Event]:
        if event_type is None:
            return list(self._history)
        return [e for e in self._history if e.event_type is event_type]

    def counts(self) -> Dict[str, int]:
        """Events published so far, by type value."""
        return {t.value: n for t, n in self._counts.items()}

    def clear_history(self):
        self._history.clear()
        self._counts.clear()
