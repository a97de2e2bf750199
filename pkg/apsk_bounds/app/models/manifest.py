from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass
class RunManifest:
    """
    Everything needed to reproduce one CSV output.

    ``parameters`` is the complete, resolved parameter set of the command (defaults and
    environment overrides included), so a replay does not depend on the environment.
    """

    tool_version: str
    command: str
    parameters: Dict[str, Any]
    seed: int
    timestamp: str
    sample_counts: Dict[str, int] = field(default_factory=dict)
    notes: Dict[str, Any] = field(default_factory=dict)
